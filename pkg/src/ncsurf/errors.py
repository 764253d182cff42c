"""Exception hierarchy shared by all ncsurf modules."""


class NcsurfError(Exception):
    """Base class for all errors raised by this package."""


class BadPrime(NcsurfError):
    """Prime divides a coefficient denominator (or is too small)."""


class NotZeroDimensional(NcsurfError):
    """Polynomial system has infinitely many projective solutions."""


class DegenerateRelations(NcsurfError):
    """Tensor contractions span too small a relation space."""


class NotPotential(NcsurfError):
    """Presentation does not come from a (unique) superpotential."""


class WrongHilbert(NcsurfError):
    """Quotient algebra component dimensions deviate from the regular shape."""


class MismatchWithComplex(NcsurfError):
    """Derivation-based HH^1 disagrees with the cochain complex."""


class InternalInconsistency(NcsurfError):
    """A theorem-guaranteed identity failed; upstream bug or invalid input."""


class UnclassifiedCubic(NcsurfError):
    """Plane-cubic diagnostics are mutually inconsistent."""


class DegeneratePencil(NcsurfError):
    """Second quadric is a rational multiple of the Segre quadric."""


class SingularPencil(NcsurfError):
    """det(lambda*M + N) vanishes identically (or M is singular)."""


class UnknownSymbol(NcsurfError):
    """Segre symbol falls outside the classification table."""
