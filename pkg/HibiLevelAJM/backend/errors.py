class _UseDefaultMessageBase(Exception):
    """
    Base exception class with a default message.

    Subclasses set DEFAULT_MESSAGE; it is used whenever no specific message is
    given at instantiation. Messages may contain ``{name}`` fields that are
    filled from keyword arguments.

    Attributes:
        DEFAULT_MESSAGE (str): The default error message for the exception.
    """
    DEFAULT_MESSAGE = ""

    def __init__(self, msg: str = None, **kwargs):
        self.details = kwargs
        if not msg:
            msg = self.__class__.DEFAULT_MESSAGE.format(**kwargs) if kwargs else self.__class__.DEFAULT_MESSAGE
        super().__init__(msg)


class InvalidInputError(_UseDefaultMessageBase):
    """
    Root of every error caused by bad user input (CLI exit code 1).
    """
    DEFAULT_MESSAGE = "Invalid input"


class InvalidPosetError(InvalidInputError):
    """
    Raised when a poset cannot be constructed from the given data,
    for example an index outside [0, n).
    """
    DEFAULT_MESSAGE = "Invalid poset definition"


class CycleDetectedError(InvalidPosetError):
    """
    Raised when the cover relation handed to Poset.from_covers contains a cycle,
    which would break antisymmetry.

    Attributes:
        DEFAULT_MESSAGE: formatted with ``cycle``, the offending sequence of indices.
    """
    DEFAULT_MESSAGE = "Cover relation contains a cycle: {cycle}"

    def __init__(self, msg: str = None, **kwargs):
        super().__init__(msg, **kwargs)
        self.cycle = kwargs.get('cycle')


class EmptyPosetError(InvalidPosetError):
    """
    Raised when an operation that is undefined on the empty poset (rank, purity) is asked for.
    """
    DEFAULT_MESSAGE = "Operation is undefined on an empty poset or subset"


class PosetFormatError(InvalidInputError):
    """
    Raised when a poset file is neither the JSON nor the text format.
    """
    DEFAULT_MESSAGE = "Could not parse poset data"


class NotALatticeError(InvalidInputError):
    """
    Raised by DistLattice.from_elements when some pair has no unique join or meet.

    Attributes:
        DEFAULT_MESSAGE: formatted with ``operation`` and the witness ``pair``.
    """
    DEFAULT_MESSAGE = "Not a lattice: no unique {operation} for the pair {pair}"

    def __init__(self, msg: str = None, **kwargs):
        super().__init__(msg, **kwargs)
        self.pair = kwargs.get('pair')


class NotDistributiveError(InvalidInputError):
    """
    Raised by DistLattice.from_elements when a triple violates the distributive law.

    Attributes:
        DEFAULT_MESSAGE: formatted with the witness ``triple``.
    """
    DEFAULT_MESSAGE = "Lattice is not distributive; witness triple {triple}"

    def __init__(self, msg: str = None, **kwargs):
        super().__init__(msg, **kwargs)
        self.triple = kwargs.get('triple')


class InvalidSchubertSpecError(InvalidInputError):
    """
    Raised for an invalid (m, n, gamma) or a-vector.
    """
    DEFAULT_MESSAGE = "Invalid Schubert cycle index"


class PreconditionError(InvalidInputError):
    """
    Raised when an operation is called outside the range where its result is guaranteed,
    e.g. nu0 on a poset without pure filters.
    """
    DEFAULT_MESSAGE = "Operation precondition violated"


class ResourceCapExceeded(_UseDefaultMessageBase):
    """
    Raised when an enumeration would exceed one of the configured resource caps (CLI exit code 2).

    Attributes:
        DEFAULT_MESSAGE: formatted with ``cap_name`` and ``cap``.
    """
    DEFAULT_MESSAGE = "Resource cap '{cap_name}' exceeded (limit {cap})"

    def __init__(self, msg: str = None, **kwargs):
        super().__init__(msg, **kwargs)
        self.cap_name = kwargs.get('cap_name')
        self.cap = kwargs.get('cap')


class MathematicalAssertionError(_UseDefaultMessageBase):
    """
    Root of the errors that mean a proven statement failed to hold on a computed
    instance (CLI exit code 3). These are never expected.
    """
    DEFAULT_MESSAGE = "A mathematical assertion failed"


class TheoremViolation(MathematicalAssertionError):
    """
    Raised when a computed instance contradicts the levelness theorem, the
    construction lemma or the Schubert-cycle statements.
    """
    DEFAULT_MESSAGE = "Computed instance contradicts a proven statement"


class InternalConsistencyError(MathematicalAssertionError):
    """
    Raised when two independent computations disagree (h-vector tail, oracle mismatch);
    this signals a bug, not bad input.
    """
    DEFAULT_MESSAGE = "Internal consistency check failed"
