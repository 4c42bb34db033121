"""Exception hierarchy shared by all modules."""


class L1BraidError(Exception):
    """Base class for every error raised by the package."""


class ShapeError(L1BraidError, ValueError):
    pass


class SingularityError(L1BraidError, ZeroDivisionError):
    """A spectral family was evaluated at (or next to) one of its poles."""


class DecompositionError(L1BraidError, ValueError):
    pass


class NoBraidSolutionError(L1BraidError, ValueError):
    """cos(phi) = cos(theta)/(1 - cos(theta)) has no real solution."""


class UnsupportedError(L1BraidError, ValueError):
    pass


class ValidationError(L1BraidError, ValueError):
    pass
