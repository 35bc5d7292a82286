"""Exception taxonomy shared by all modules."""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class InvalidDimension(AlgebraError):
    pass


class DimensionMismatch(AlgebraError):
    pass


class ConjugationMismatch(AlgebraError):
    """Two elements were combined that live over different conjugations."""


class NotUnitary(AlgebraError):
    pass


class NotSymmetric(AlgebraError):
    """Matrix fails a required (conjugation-)symmetry within tolerance."""


class NotSelfadjoint(AlgebraError):
    pass


class NotNormal(AlgebraError):
    pass


class NotUnit(AlgebraError):
    """Vector argument must have unit norm."""


class NotInvertible(AlgebraError):
    pass


class ZeroVector(AlgebraError):
    pass


class ZeroInput(AlgebraError):
    pass


class InvalidP(AlgebraError):
    """Norm selector outside the accepted range."""


class InvalidEpsilon(AlgebraError):
    """Approximation radius must be strictly positive."""


class InvalidParameter(AlgebraError):
    pass


class SingularJordanMultiplier(AlgebraError):
    """The multiplier equation TX + XT = Y is singular: some eigenvalue pair
    of T sums to (numerically) zero.  Carries the offending pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NonDiagonalizable(AlgebraError):
    """Raised only when the dense fallback linear system is numerically
    singular; a defective but solvable T is handled by the fallback."""


class BadConfig(AlgebraError):
    pass


class ParseError(AlgebraError):
    """Malformed matrix/report document.  Carries the offending field name."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class IoFailure(AlgebraError):
    pass
