"""Exception and warning types shared across the library."""


class HolError(Exception):
    """Base class for all library errors."""


class DegenerateIdentity(HolError):
    """The supplied map is the identity and cannot be classified."""


class EllipticInput(HolError):
    """A non-elliptic automorphism was required."""


class FixedPointSingularity(HolError):
    """Evaluation requested at (or too close to) a fixed point."""


class TargetsInfeasible(HolError):
    """The thin-sequence search could not meet its targets."""


class CandidatesExhausted(HolError):
    """The candidate list is too short to meet the separation budget."""


class SeedOutsideFundamentalDomain(HolError):
    """A seed zero does not lie in the fundamental domain."""


class ReferencePointNearZero(HolError):
    """No admissible reference point away from the zero set."""


class FitFailed(HolError):
    """A model fit exceeded its residual threshold."""


class IllConditionedBasis(HolError):
    """Kernel-span Gram matrix is numerically singular."""


class InadmissibleLambda(HolError):
    """The requested eigenvalue modulus is outside the admissible range."""


class QuadratureTailTooLarge(HolError):
    """Certified truncation tail exceeds the requested tolerance."""


class NumericalUnderflow(HolError):
    """An intermediate quantity underflowed to an unusable value."""


class HyperbolicFixedAtomNotEigen(HolError):
    """Hyperbolic automorphisms admit no fixed-point singular atom."""


class AtomOutsideJ(HolError):
    """A measure atom lies outside the base boundary interval."""


class AllFactorsAbsent(HolError):
    """An eigenfunction factorization needs at least one factor."""


class ConfigInvalid(HolError):
    """Experiment configuration failed validation."""


class UnknownReportKind(HolError):
    """Requested plot-data kind is not recognized."""


class NotPhiInvariant(UserWarning):
    """Supplied zero set is not closed under the automorphism (window check)."""
