from abc import ABCMeta


class ABCSubcommand(ABCMeta, type):
    """
    ABCSubcommand is a metaclass that enforces the presence and validity of the
    mandatory class attributes of every concrete CLI subcommand.

    Attributes:
      COMMAND_NAME: the name the subcommand is invoked by.
      COMMAND_HELP: the one-line help shown by the argument parser.
      _MANDATORY_ATTRIBUTE_MISSING: Internal constant representing a missing attribute.
      _MANDATORY_ATTRIBUTE_UNDEFINED: Internal constant representing an undefined attribute.
      _ABSTRACT_PREFIX: classes whose name starts with this prefix are bases and skip validation.

    Methods:
      __new__(mcs, name, bases, dct):
        Validates that all mandatory attributes are defined with non-empty string values.
        Raises TypeError otherwise.

      _get_mandatory_class_attrs(mcs):
        Uppercase, non-underscore attributes declared on the metaclass.

      _validate_class_attributes(mcs, mandatory_attrs, namespace):
        Returns the set of (attribute, reason) pairs that failed validation.
    """
    COMMAND_NAME = None
    COMMAND_HELP = None

    _MANDATORY_ATTRIBUTE_MISSING = 'missing'
    _MANDATORY_ATTRIBUTE_UNDEFINED = 'undefined'
    _ABSTRACT_PREFIX = 'Base'

    def __new__(mcs, name, bases, dct):
        """
        :param mcs: The metaclass instance.
        :param name: The name of the class being created.
        :type name: str
        :param bases: A tuple of the base classes for the class being created.
        :type bases: tuple
        :param dct: A dictionary containing the attributes of the class being created.
        :type dct: dict
        """
        cls = super().__new__(mcs, name, bases, dct)
        if name.startswith(mcs._ABSTRACT_PREFIX):
            return cls

        failed_validation = mcs._validate_class_attributes(mcs._get_mandatory_class_attrs(), cls)
        if failed_validation:
            raise TypeError(
                f"{name} is missing the definition for these attributes: {sorted(failed_validation)}"
            )
        return cls

    @classmethod
    def _valid_value(mcs, value):
        """
        :param value: The attribute value to check.
        :return: True when the value is a non-empty string.
        :rtype: bool
        """
        return isinstance(value, str) and len(value) > 0

    @classmethod
    def _get_mandatory_class_attrs(mcs):
        """
        Mandatory attributes are the uppercase, non-underscore attributes declared on the metaclass.

        :return: A list of mandatory class attribute names.
        :rtype: list
        """
        return [attr for attr in ABCSubcommand.__dict__ if not attr.startswith('_') and attr.isupper()]

    @classmethod
    def _validate_class_attributes(mcs, mandatory_attrs, cls):
        """
        :param mandatory_attrs: The attribute names that every subcommand must define.
        :type mandatory_attrs: iterable
        :param cls: The freshly created class.
        :type cls: type
        :return: A set of tuples (attribute name, failure reason).
        :rtype: set
        """
        failed_validation = set()
        for attr in mandatory_attrs:
            if not hasattr(cls, attr):
                failed_validation.add((attr, mcs._MANDATORY_ATTRIBUTE_MISSING))
            elif not mcs._valid_value(getattr(cls, attr)):
                failed_validation.add((attr, mcs._MANDATORY_ATTRIBUTE_UNDEFINED))
        return failed_validation
