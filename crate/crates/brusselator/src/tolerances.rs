//! Central tolerance and truncation constants.
//!
//! Every nontrivial threshold used by the library lives here with its
//! justification, so the acceptance and property suites test against the
//! same numbers the implementation enforces.

/// Relative residual allowed on eigen-identities (characteristic polynomial,
/// null vectors, adjoint pairs). The formulas are closed-form; only rounding
/// enters, so 1e-10 leaves two orders of headroom over f64 accumulation.
pub const EIGEN_RESIDUAL_REL: f64 = 1e-10;

/// Two independent eigenvalue routes must agree this tightly on random
/// matrices. Both are O(1)-flop closed forms; disagreement beyond this means
/// a formula error, not roundoff.
pub const EIGENSOLVER_CROSS_REL: f64 = 1e-10;

/// |lambda0 - lambda1| below this (relative to the larger) is classified
/// Degenerate: both expansion theorems assume a strict ordering, and the
/// coefficient formulas divide by quantities that vanish at equality.
pub const DEGENERACY_REL: f64 = 1e-9;

/// Relative width of the sign-call noise band for cubic coefficients. The
/// transition type flips on this sign; values inside the band are reported
/// inconclusive rather than guessed.
pub const B1_SIGN_BAND_REL: f64 = 1e-8;

/// Agreement required between the two algebraic routes to the steady cubic
/// coefficient (block-solve route vs closed-form reduction).
pub const STEADY_DUAL_ROUTE_REL: f64 = 1e-8;

/// Residual allowed on the solved correction field psi, relative to the
/// right-hand side scale.
pub const PSI_RESIDUAL_REL: f64 = 1e-9;

/// Default mode cutoff for the truncated psi solve. The right-hand side
/// couplings decay like j^-3 and the block inverses add j^-2, so the dropped
/// tail is far below PSI_RESIDUAL_REL at this cutoff.
pub const PSI_DEFAULT_MODES: usize = 512;

/// Default number of retained terms in the oscillatory coefficient series.
/// Terms decay like k^-8; 512 is overkill-safe and cheap.
pub const SERIES_DEFAULT_K: usize = 512;

/// Relative tolerance when deciding whether a cube integral vanishes.
/// Closed forms make true zeros exact; this only absorbs quadrature noise
/// in cross-checks.
pub const CUBE_ZERO_REL: f64 = 1e-12;

/// Default integrator step. The linear part is advanced exactly per mode,
/// so this only controls nonlinear splitting error.
pub const SIM_DT_DEFAULT: f64 = 1e-3;

/// Fitted linear growth rates must reproduce the dispersion relation to
/// this relative accuracy (the linear propagator is exact, so the fit is
/// limited by windowing, not truncation error).
pub const GROWTH_FIT_REL: f64 = 1e-4;

/// Steady-state detector: trajectory tail is steady when the max modal
/// velocity falls below this times the state scale.
pub const STEADY_VELOCITY_REL: f64 = 1e-8;

/// Cycle detector: the last five periods must agree to this relative spread
/// before a period is reported as converged.
pub const PERIOD_STABILITY_REL: f64 = 1e-3;

/// Leakage allowed out of the spatially homogeneous invariant subspace,
/// per unit time, in the Neumann integrator. Spectral collocation keeps
/// constants exactly constant up to roundoff.
pub const HOMOGENEOUS_LEAK_PER_TIME: f64 = 1e-12;

/// Mode-scan ceiling for box-domain critical-value searches.
pub const BOX_SCAN_DEFAULT: usize = 4096;

/// Matched relative agreement between a report's series value and the
/// independently assembled per-mode route in the oracle tests.
pub const SERIES_VS_ASSEMBLY_REL: f64 = 1e-8;
