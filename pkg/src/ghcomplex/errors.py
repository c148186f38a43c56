"""Exception and warning types shared across the package."""


class GHCError(Exception):
    """Base class for all errors raised by ghcomplex."""


class ZeroInverse(GHCError):
    """Multiplicative inverse of zero requested."""


class DimensionMismatch(GHCError):
    """Matrix shapes or moduli are incompatible for the operation."""


class Singular(GHCError):
    """A square matrix has no inverse."""


class RankMismatch(GHCError):
    """A matrix does not have the rank required by the operation."""


class InfeasibleSize(GHCError):
    """The requested computation exceeds the configured size budget."""


class NotAssociative(GHCError):
    """A multiplication table fails associativity; args carry a witness triple."""


class NoIdempotents(GHCError):
    """A multiplication table contains no idempotent element."""


class RootNotInComponent(GHCError):
    """Spanning-tree root lies outside the requested component."""


class BasepointNotInComponent(GHCError):
    """Presentation basepoint lies outside the requested component."""


class NonInvertiblePairing(GHCError):
    """Canonical row/column representatives paired to a singular matrix (internal bug)."""


class CellLiftObstruction(GHCError):
    """A 2-cell boundary has non-identity voltage product and cannot lift."""


class NotABand(GHCError):
    """Singularizer construction requires a rectangular-band square."""


class InternalCheckFailed(GHCError):
    """A self-verification step failed; indicates an implementation bug."""


class RegularityWarning(UserWarning):
    """The ingested semigroup is not regular; downstream theorems assume regularity."""


class HypothesisViolation(UserWarning):
    """Parameters fall outside the hypotheses of the verified statement."""
