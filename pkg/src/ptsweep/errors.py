"""Exception types raised across the package."""


class PtsweepError(Exception):
    """Base class for all package-specific errors."""


class ExceptionalPointError(PtsweepError):
    """Spectral data requested at (or too close to) an exceptional point."""


class UndefinedPhaseError(PtsweepError):
    """Relative phase requested while one amplitude vanishes."""


class WrongDriveDegreeError(PtsweepError):
    """Operation requires a drive of a specific polynomial degree."""


class DegenerateAlphaError(PtsweepError):
    """Bi-confluent reduction undefined for vanishing linear coefficient."""


class ZeroPolynomialError(PtsweepError):
    """Root isolation called on the zero polynomial."""


class NoTransitionPointError(PtsweepError):
    """No transition point exists before the first exceptional point."""


class BrokenRegionError(PtsweepError):
    """Eigenstate preparation requested inside the broken-symmetry region."""


class IntegrationError(PtsweepError):
    """Adaptive integrator failed (step-size underflow or solver error)."""


class OutsideIntervalError(PtsweepError):
    """Closed-form region propagator evaluated outside its interval."""


class WrongEpCountError(PtsweepError):
    """Final-population formula requires exactly two exceptional points."""


class UnsupportedTopologyError(PtsweepError):
    """Region gluing cannot handle tangential (even-order) exceptional points."""


class NonConvergentError(PtsweepError):
    """Oscillatory tail quadrature failed its acceleration criterion."""


class SeriesDivergenceError(PtsweepError):
    """Series evaluation tripped its divergence guard."""


class WrongRegimeError(PtsweepError):
    """Closed-form result only valid in the two-exceptional-point regime."""


class ZeroForceError(PtsweepError):
    """Lattice reduction requires a nonzero static force."""


class ZeroInitialMomentumError(PtsweepError):
    """Zone-center reduction degenerates at zero initial crystal momentum."""
