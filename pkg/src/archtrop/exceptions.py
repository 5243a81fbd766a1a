"""Exception hierarchy shared by every module of the package."""


class ArchTropError(Exception):
    """Base class for all errors raised by :mod:`archtrop`."""


class PolynomialSyntaxError(ArchTropError, ValueError):
    """The polynomial text does not match the grammar."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class EmptyPolynomial(ArchTropError, ValueError):
    """Every term cancelled while merging duplicate exponents."""


class DimensionMismatch(ArchTropError, ValueError):
    """A variable index or vector length disagrees with the declared dimension."""


class ModelMismatch(ArchTropError, ValueError):
    """Rational-complex and log-polar data were mixed."""


class ZeroScale(ArchTropError, ValueError):
    """A rescaling factor was zero."""


class NotUnivariate(ArchTropError, ValueError):
    """The operation needs a polynomial in one variable."""


class NotPlanar(ArchTropError, ValueError):
    """The operation needs a polynomial in two variables."""


class SinglePoint(ArchTropError, ValueError):
    """A one-term polynomial has empty tropical variety and no roots."""


#: Alias used by the tropical module.
SinglePointNoTrop = SinglePoint


class NonpositiveQuery(ArchTropError, ValueError):
    """A membership query coordinate is not strictly positive."""


class EmptyTropicalSet(ArchTropError, ValueError):
    """Distance to an empty tropical set was requested."""


class EmptySet(ArchTropError, ValueError):
    """A Hausdorff computation received an empty point set."""


class ZeroLeading(ArchTropError, ValueError):
    """The Montel bound needs a nonzero coefficient at the reference power."""


class InvalidArity(ArchTropError, ValueError):
    """Term count and Newton polytope dimension violate ``t >= k + 1``."""


class PrecisionExhausted(ArchTropError, ArithmeticError):
    """A sign could not be certified before reaching the precision cap."""


class ConvergenceFailure(ArchTropError, ArithmeticError):
    """Root iteration failed; ``roots`` holds the partial result."""

    def __init__(self, message, roots=None):
        super().__init__(message)
        self.roots = roots


class DegenerateFiber(ArchTropError, ValueError):
    """A fiber specialisation has no positive degree in the solved variable."""


class NonIsolatedComponent(ArchTropError):
    """Tropical hypersurfaces meet in a positive-dimensional set.

    ``points`` carries the isolated candidates found anyway and ``components``
    the face tuples that produced positive-dimensional overlaps.
    """

    def __init__(self, message, points=(), components=()):
        super().__init__(message)
        self.points = list(points)
        self.components = list(components)
