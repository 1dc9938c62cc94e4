from typing import Any

from HibiLevelAJM import _SharedLogger
from HibiLevelAJM._version import __version__
from HibiLevelAJM.backend.errors import ResourceCapExceeded


class BaseComputation(_SharedLogger):
    """
    BaseComputation is the common base of the classes that run the actual
    computations (Hibi ring invariants, Schubert cycle pipeline, sagbi checks).
    It owns the logger and the resource caps.

    Resource caps are declared by subclasses as ``_DEFAULT_<NAME>`` class
    attributes and overridden per instance through keyword arguments of the
    same lowercase name, e.g. ``_DEFAULT_IDEAL_CAP`` / ``ideal_cap=``.

    Methods:

    __init__(**kwargs)
        Sets up the logger and reads the resource caps.

    log_and_raise_error(err: Exception)
        Logs an error and raises the same exception.

    check_cap(cap_name: str, value: int)
        Raises ResourceCapExceeded when value is above the configured cap.

    caps
        Property returning the resolved caps as a dict.
    """
    _CAP_NAMES = ()

    def __init__(self, **kwargs):
        self._initialization_string = f"initialized {self.__str__()}"
        self._logger = self._setup_logger(basic_config_level=kwargs.get('basic_config_level'),
                                          logger=kwargs.get('logger'),
                                          skip_basic_config=kwargs.get('skip_basic_config', False))
        self._caps = {name: self._resolve_cap(name, **kwargs) for name in self.__class__._CAP_NAMES}
        self._logger.debug(self._initialization_string)

    def __str__(self):
        return f"{self.__class__.__name__} v{self.__version__}"

    @property
    def __version__(self):
        return __version__

    def _resolve_cap(self, cap_name: str, **kwargs) -> int:
        """
        :param cap_name: lowercase cap name, e.g. 'ideal_cap'.
        :type cap_name: str
        :return: The keyword override if given, otherwise the class default.
        :rtype: int
        """
        value = kwargs.get(cap_name)
        if value is None:
            value = getattr(self.__class__, f"_DEFAULT_{cap_name.upper()}")
        return value

    @property
    def caps(self) -> dict:
        """
        :return: The resource caps in force for this instance.
        :rtype: dict
        """
        return dict(self._caps)

    @property
    def cap_kwargs(self) -> dict:
        """
        :return: caps plus the logger, for handing down to nested computations.
        :rtype: dict
        """
        return {**self._caps, 'logger': self._logger, 'skip_basic_config': True}

    def log_and_raise_error(self, err: Exception):
        """
        Logs an error message and raises the given exception.

        :param err: The exception to be logged and raised.
        :type err: Exception
        :return: None
        :rtype: None
        """
        self._logger.error(err, exc_info=True)
        raise err from None

    def check_cap(self, cap_name: str, value: Any):
        """
        :param cap_name: The cap to compare against.
        :type cap_name: str
        :param value: The observed size.
        :raises ResourceCapExceeded: when value exceeds the cap.
        """
        cap = self._caps[cap_name]
        if value > cap:
            self.log_and_raise_error(ResourceCapExceeded(cap_name=cap_name, cap=cap))
