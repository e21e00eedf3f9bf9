//! Crate-wide error type.

use thiserror::Error;

/// Which clause of the seagull class definition a candidate violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassCondition {
    /// `(x/√3)^14 ≤ |P(x)| ≤ 1` on `|x| ≤ √3`.
    InnerBound,
    /// `1 ≤ P(x) ≤ (x/√3)^14` on `|x| ≥ √3`.
    OuterBound,
    /// `|P'(x)| ≤ (14/√3)|x/√3|^13` on `|x| ≥ √3`.
    DerivativeBound,
    /// `P(√3) = 1`.
    Normalization,
}

impl std::fmt::Display for ClassCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassCondition::InnerBound => "inner bound (i)",
            ClassCondition::OuterBound => "outer bound (ii)",
            ClassCondition::DerivativeBound => "derivative bound (iii)",
            ClassCondition::Normalization => "normalization P(√3) = 1",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument scaling requires a nonzero factor")]
    ZeroScale,

    #[error("polynomial is constant; operation needs a nonconstant polynomial")]
    ConstantPolynomial,

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("empty interval: lo = {lo}, hi = {hi}")]
    EmptyInterval { lo: f64, hi: f64 },

    #[error("seagull class violation: {condition} fails at x = {x} (lhs = {lhs}, rhs = {rhs})")]
    ClassViolation {
        condition: ClassCondition,
        x: f64,
        lhs: f64,
        rhs: f64,
    },

    #[error("seagull builder requires deg P ≤ 14, got {degree}")]
    ClassDegree { degree: usize },

    #[error("root refinement did not converge within {iterations} iterations near x = {near}")]
    RootRefinement { near: f64, iterations: usize },

    #[error("Hill component unbounded within the search window of radius {window}")]
    UnboundedHillComponent { window: f64 },

    #[error("no crossing of the target level inside the search window (0, {window}]")]
    NoCrossing { window: f64 },

    #[error("quadrature tolerance {tol} not met: error estimate {err} after {panels} panels")]
    QuadTolerance { tol: f64, err: f64, panels: usize },

    #[error("integral diverges (direction {direction:+})")]
    DivergentIntegral { direction: f64 },

    #[error("Hill interval is not periodic ({class}); periods are undefined")]
    NotPeriodic { class: &'static str },

    #[error("no Hill interval of G contains x = 0 in its interior")]
    NoCentralInterval,

    #[error("delta = {delta} outside the admissible range {lo}..{hi}")]
    DeltaRange { delta: f64, lo: f64, hi: f64 },

    #[error("u = {u} below the outer Hill endpoint beta = {beta}")]
    BelowBeta { u: f64, beta: f64 },

    #[error("F(1) = {value}; the construction needs F(1) = 1 with F'(1) = 0")]
    MissingDoubleRoot { value: f64 },

    #[error("polynomial must be even within tolerance for this operation")]
    NotEven,

    #[error("launch point x0 = {x0} lies outside the region G(x)^2 <= 1")]
    LaunchOutsideHill { x0: f64 },

    #[error("trace grids do not match: {0}")]
    GridMismatch(String),

    #[error("degree of F ({deg_f}) exceeds jet order k = {k}")]
    DegreeExceedsOrder { deg_f: usize, k: usize },

    #[error("invalid diamond coordinates: {0}")]
    InvalidDiamondCoords(String),

    #[error("x = {x} lies outside the region G(x)^2 <= 1")]
    OutsideSlab { x: f64 },

    #[error("p(x) = {y} has no real solution beyond the critical points of p")]
    NoRealSolution { y: f64 },

    #[error("leading coefficient must be positive, got {0}")]
    NonPositiveLeading(f64),

    #[error("approach sequence leaves the diamond at ({a}, {b})")]
    LeavesDiamond { a: f64, b: f64 },

    #[error("malformed polynomial text: {0}")]
    PolyParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
