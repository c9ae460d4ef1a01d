"""Exception hierarchy; the CLI maps InputError to exit 2 and DomainError to exit 1."""


class HodgeForgeError(Exception):
    pass


class InputError(HodgeForgeError):
    """Malformed user input: bad facets, unreadable files, bad flag values."""


class MalformedFacetError(InputError):
    pass


class FileFormatError(InputError):
    pass


class DomainError(HodgeForgeError):
    """The computation is well-posed but the object refuses it (wrong topology, bad map...)."""


class QuotientInvalidError(DomainError):
    pass


class NotPseudomanifoldError(DomainError):
    pass


class NotOrientableError(DomainError):
    pass


class MapInvalidError(DomainError):
    pass


class ThresholdFailureError(DomainError):
    pass


class UndefinedDeterminantError(DomainError):
    pass


class ConvergenceError(DomainError):
    pass


class SpectrumSizeError(DomainError):
    """Full dense spectrum requested above the dense cutoff."""
