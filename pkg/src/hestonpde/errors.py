"""Exception taxonomy shared across the package.

Every domain error derives from :class:`HestonPdeError` so callers (and the
CLI) can map failures to a stable machine-readable code: the class name.
"""


class HestonPdeError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# -- model / operator assembly -------------------------------------------

class SpecialModelParamMismatch(HestonPdeError):
    """Special-model operator requested with rho != 1 or lambda != 0."""


# -- fichera ---------------------------------------------------------------

class NonUnitDirection(HestonPdeError):
    """Direction vector passed to a quadratic form is not unit length."""


class EmptyFace(HestonPdeError):
    """Boundary face carries no sample points."""


class NonPositiveVariance(HestonPdeError):
    """Coefficient-bound samples must have v > 0."""


# -- witness ----------------------------------------------------------------

class DomainError(HestonPdeError):
    """Witness evaluated outside its open spatial domain (v <= 0 or y <= 0)."""


class EpochError(HestonPdeError):
    """Witness evaluated beyond its terminal/initial epoch."""


# -- transform ---------------------------------------------------------------

class AlphaOne(HestonPdeError):
    """Power-degeneracy-to-Feller map is singular at alpha = 1."""


class UnsupportedPair(HestonPdeError):
    """No supported coordinate map between the requested frames."""


class NonzeroShortRate(HestonPdeError):
    """The variance-time -> Feller reduction is only defined for r = 0."""


class FrameMismatch(HestonPdeError):
    """Grid function frame does not match the expected coordinate frame."""


class NonMonotoneMap(HestonPdeError):
    """Coordinate map is not strictly monotone on the sampled range."""


# -- grids / 1-D and 2-D solvers ---------------------------------------------

class BadSpec(HestonPdeError):
    """Malformed grid specification."""


class UnstableStep(HestonPdeError):
    """Time march produced a non-finite value."""


class InvalidConfig(HestonPdeError):
    """Solver configuration violates its invariants."""


class TooFewSlices(HestonPdeError):
    """Finite-difference residual needs at least 3 stored time slices."""


class MissingTimeSlices(HestonPdeError):
    """Operation requires a grid function with stored time slices."""


class NoOracle(HestonPdeError):
    """Convergence study requires an exact-solution oracle."""


class GridTooCoarse(HestonPdeError):
    """2-D solver grid has fewer than 32 nodes on an axis."""


# -- analytic pricer -----------------------------------------------------------

class QuadratureTailTooFat(HestonPdeError):
    """Characteristic-function integrand tail above tolerance after 4 doublings."""


# -- growth --------------------------------------------------------------------

class InsufficientSpan(HestonPdeError):
    """Samples do not span the required range (or are too few)."""


class NonPositiveSample(HestonPdeError):
    """Log-log fit requires positive coordinates and nonzero values."""


class NonPositiveH(HestonPdeError):
    """Admissibility check requires h > 0 on [1, inf)."""


class FellerViolated(HestonPdeError):
    """Uniqueness verdict refused: the mean-reversion/vol-of-vol inequality fails."""
