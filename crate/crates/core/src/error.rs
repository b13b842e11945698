use core::fmt;

/// Errors reported by the eigenvalue kernel.
///
/// Every variant names the violated precondition and carries the
/// offending values, so CLI error messages can be produced verbatim.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Shell radii must satisfy `0 < R1 < R2` and the dimension `n >= 2`.
    InvalidShell { n: u32, r1: f64, r2: f64 },
    /// The shell eigenfunction is only defined for `r >= R1`.
    RadiusBelowInner { r: f64, r1: f64 },
    /// Volume argument of a bound must be positive.
    NonPositiveVolume { volume: f64 },
    /// The convexity profile function requires `t > 0`.
    NonPositiveProfileArgument { t: f64 },
    /// Ellipse semi-axes must be positive.
    NonPositiveAxis { a: f64, b: f64 },
    /// Quadrature size must be a power of two and at least 64.
    BadQuadratureSize { m: usize },
    /// The radial function must be strictly positive (origin interior).
    NonPositiveRadialFunction { min_rho: f64 },
    /// A convex hull needs at least three points not all collinear.
    DegenerateHull,
    /// The hull must contain the origin strictly in its interior.
    OriginNotInterior,
    /// The inner ball `B_{R1}` must be compactly contained in the outer body.
    InnerBallNotContained { min_rho: f64, r1: f64 },
    /// Trial functions are singular at the origin.
    OriginEvaluation,
    /// Basis index out of range for the trial space.
    BasisIndexOutOfRange { index: usize, len: usize },
    /// Quadrature size too small for the requested angular order.
    QuadratureTooCoarse { m: usize, required: usize },
    /// Boundary mass matrix condition exceeds 1e12; lower the angular
    /// order N or enlarge the gap between the hole and the outer boundary.
    IllConditionedBoundaryMass { condition: f64 },
    /// The random body generator exhausted its rejection budget; the
    /// requested `R1`/`Rmax` sandwich is too tight to satisfy.
    BodyGenerationFailed { seed: u64, attempts: u32 },
    /// Theorem checks require a convex outer body.
    NonConvexOuterBody,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::InvalidShell { n, r1, r2 } => write!(
                f,
                "invalid shell: need n >= 2 and 0 < R1 < R2, got n={n}, R1={r1}, R2={r2}"
            ),
            Error::RadiusBelowInner { r, r1 } => {
                write!(f, "radius r={r} below the inner radius R1={r1}")
            }
            Error::NonPositiveVolume { volume } => {
                write!(f, "volume must be positive, got {volume}")
            }
            Error::NonPositiveProfileArgument { t } => {
                write!(f, "profile function requires t > 0, got t={t}")
            }
            Error::NonPositiveAxis { a, b } => {
                write!(f, "ellipse semi-axes must be positive, got a={a}, b={b}")
            }
            Error::BadQuadratureSize { m } => write!(
                f,
                "quadrature size must be a power of two >= 64, got M={m}"
            ),
            Error::NonPositiveRadialFunction { min_rho } => write!(
                f,
                "radial function must be strictly positive, min rho = {min_rho}"
            ),
            Error::DegenerateHull => {
                write!(f, "hull needs at least three non-collinear points")
            }
            Error::OriginNotInterior => {
                write!(f, "the origin must lie strictly inside the hull")
            }
            Error::InnerBallNotContained { min_rho, r1 } => write!(
                f,
                "inner ball not contained: min rho = {min_rho} <= R1 = {r1}"
            ),
            Error::OriginEvaluation => {
                write!(f, "trial functions cannot be evaluated at the origin")
            }
            Error::BasisIndexOutOfRange { index, len } => {
                write!(f, "basis index {index} out of range for size {len}")
            }
            Error::QuadratureTooCoarse { m, required } => write!(
                f,
                "quadrature size M={m} too coarse; need at least {required}"
            ),
            Error::IllConditionedBoundaryMass { condition } => write!(
                f,
                "boundary mass matrix ill-conditioned (condition {condition:.3e} > 1e12); lower the angular order N"
            ),
            Error::BodyGenerationFailed { seed, attempts } => write!(
                f,
                "random body generation failed after {attempts} attempts (seed {seed}); R1/Rmax too tight"
            ),
            Error::NonConvexOuterBody => {
                write!(f, "outer body is not convex; theorem checks require convexity")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
