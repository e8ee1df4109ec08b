"""Exception types shared across the package."""


class ZpError(ValueError):
    """Base class for domain errors (bad input, undecidable at precision)."""


class NotPrimeError(ZpError):
    pass


class PrimeMismatchError(ZpError):
    pass


class PrecisionError(ZpError):
    """The working precision is too small to decide the question asked."""


class NotInvertibleError(ZpError):
    pass


class DomainMismatchError(ZpError):
    pass


class ParseError(ZpError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SizeError(ZpError):
    """A brute-force enumeration would exceed its safety cap."""


class HypothesisError(ZpError):
    """Hensel's hypothesis fails for the given seed."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class UnsupportedIdealError(ZpError):
    pass
