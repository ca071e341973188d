"""Exception hierarchy shared by every module of the package."""


class MSpottyError(Exception):
    """Base class for all errors raised by this package."""


class SpecSyntaxError(MSpottyError, ValueError):
    """A ring spec or generator-matrix file could not be parsed."""


class NonPrimeParameter(MSpottyError, ValueError):
    pass


class ReducibleModulus(MSpottyError, ValueError):
    pass


class EmptyProduct(MSpottyError, ValueError):
    pass


class InvalidParameter(MSpottyError, ValueError):
    """A structural parameter is out of its admissible range."""


class ModulusMismatch(MSpottyError, ValueError):
    pass


class DimensionMismatch(MSpottyError, ValueError):
    pass


class LayoutMismatch(MSpottyError, ValueError):
    pass


class OutOfRange(MSpottyError, ValueError):
    pass


class SizeLimitExceeded(MSpottyError):
    """A brute-force sweep would exceed the configured bound."""

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: {size} exceeds the sweep limit {limit} (raise --max-sweep)")


class NotAnInteger(MSpottyError, ArithmeticError):
    """A character sum that must be a rational integer was not."""


class InexactDivision(MSpottyError, ArithmeticError):
    """The MacWilliams transform left a remainder after dividing by |C|."""
