//! Asymptotic inversion of `p(x) = y` for large `y`.
//!
//! For `p` with positive leading coefficient and `y` beyond all
//! critical values, the real solution along the positive branch
//! expands as
//!
//! ```text
//! x = (y / c_n)^{1/n} - b_1/n + O(y^{-1/n}),   b_1 = c_{n-1}/c_n.
//! ```
//!
//! The second term carries a minus sign; a worked quadratic makes this
//! unambiguous: for `x² + 2x = 10⁴` the exact root is
//! `-1 + √10001 ≈ 99.005`, matching `100 - 2/2 = 99` and not `101`.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::roots::real_roots;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InversionResult {
    /// Two-term asymptotic estimate.
    pub estimate: f64,
    /// Root of `p(x) = y` beyond all critical points of `p`, from
    /// safeguarded iteration.
    pub exact: f64,
    pub gap: f64,
}

/// Solves `p(x) = y` on the ray beyond the last critical point of `p`
/// and compares with the two-term asymptotic estimate.
pub fn invert_at_infinity(p: &Polynomial, y: f64) -> Result<InversionResult> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let lead = p.leading();
    if lead <= 0.0 {
        return Err(Error::NonPositiveLeading(lead));
    }
    let b1 = p.coeff(n - 1) / lead;
    let estimate = (y / lead).powf(1.0 / n as f64) - b1 / n as f64;

    let target = p - &Polynomial::constant(y);
    let bound = 1.0 + target.root_bound();

    // Search only beyond the critical points of p, where p is strictly
    // increasing toward +∞.
    let dp = p.derivative();
    let last_critical = if dp.is_constant() {
        -bound
    } else {
        real_roots(&dp, -bound, bound, 1e-13)?
            .last()
            .map(|r| r.value)
            .unwrap_or(-bound)
    };
    if p.eval(last_critical) >= y {
        return Err(Error::NoRealSolution { y });
    }
    let roots = real_roots(&target, last_critical, bound, 1e-13)?;
    let exact = roots
        .last()
        .map(|r| r.value)
        .ok_or(Error::NoRealSolution { y })?;
    Ok(InversionResult {
        estimate,
        exact,
        gap: (exact - estimate).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_power() {
        let p = Polynomial::monomial(1.0, 2);
        let r = invert_at_infinity(&p, 1e4).unwrap();
        assert!((r.exact - 100.0).abs() < 1e-9);
        assert!((r.estimate - 100.0).abs() < 1e-12);
        assert!(r.gap < 1e-9);
    }

    #[test]
    fn quadratic_oracle_fixes_the_sign() {
        // x² + 2x = 10⁴: exact root -1 + √10001 = 99.00499987…
        let p = Polynomial::new(vec![0.0, 2.0, 1.0]);
        let r = invert_at_infinity(&p, 1e4).unwrap();
        let oracle = -1.0 + 10001.0_f64.sqrt();
        assert!((r.exact - oracle).abs() < 1e-9, "{}", r.exact);
        assert!((r.estimate - 99.0).abs() < 1e-12, "{}", r.estimate);
        assert!((r.gap - (oracle - 99.0).abs()).abs() < 1e-9);
    }

    #[test]
    fn scaled_gap_bounded_over_decades() {
        // gap · y^{1/n} stays bounded as y sweeps 10³…10⁹.
        let p = Polynomial::new(vec![-0.3, 2.0, -1.5, 1.0]);
        let n = 3.0;
        let mut scaled = Vec::new();
        let mut y = 1e3;
        while y <= 1e9 {
            let r = invert_at_infinity(&p, y).unwrap();
            scaled.push(r.gap * y.powf(1.0 / n));
            y *= 10.0;
        }
        let max = scaled.iter().cloned().fold(0.0, f64::max);
        assert!(max < 10.0, "scaled gaps {scaled:?}");
    }

    #[test]
    fn gap_decreases_with_y() {
        let p = Polynomial::new(vec![1.0, -2.0, 0.5, 1.0]);
        let mut prev = f64::INFINITY;
        let mut y = 1e3;
        while y <= 1e9 {
            let r = invert_at_infinity(&p, y).unwrap();
            assert!(r.gap < prev, "gap not decreasing at y={y}");
            prev = r.gap;
            y *= 10.0;
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let down = Polynomial::new(vec![0.0, 0.0, -1.0]);
        assert!(matches!(
            invert_at_infinity(&down, 100.0),
            Err(Error::NonPositiveLeading(_))
        ));
        assert!(invert_at_infinity(&Polynomial::constant(2.0), 5.0).is_err());
    }
}
