//! Real univariate polynomials with coefficient-level arithmetic.
//!
//! Coefficients are stored in ascending power order `c_0, c_1, …, c_n`.
//! Everything downstream (root isolation, Hill intervals, period
//! integrands) manipulates these coefficient vectors symbolically, so
//! derived polynomials like `1 - G^2` or `G·F` keep an exact algebraic
//! structure instead of being sampled.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A real polynomial `p(x) = c_0 + c_1 x + … + c_n x^n`.
///
/// Trailing coefficients that are exactly `0.0` are trimmed on
/// construction, so `degree` is the index of the last stored
/// coefficient. The zero polynomial stores no coefficients and has
/// degree `None`.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial({:?})", self.coeffs)
    }
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming exact
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c x^n`.
    pub fn monomial(c: f64, n: usize) -> Self {
        let mut coeffs = vec![0.0; n + 1];
        coeffs[n] = c;
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    /// Index of the last coefficient with `|c_i| > 0`; `None` for the
    /// zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .rposition(|c| c.abs() > 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }

    /// Leading coefficient, `0.0` for the zero polynomial.
    pub fn leading(&self) -> f64 {
        self.degree().map(|d| self.coeffs[d]).unwrap_or(0.0)
    }

    /// Evaluation by the Horner recurrence over the stored coefficients.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Derivative polynomial, the companion entry point to `eval`.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Polynomial::new(coeffs)
    }

    /// Largest coefficient magnitude, `0.0` for the zero polynomial.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Whether all odd-power coefficients vanish relative to the
    /// largest coefficient: `|c_odd| < tol · max|c_i|`.
    pub fn is_even_within(&self, tol: f64) -> bool {
        let scale = self.max_abs_coeff();
        if scale == 0.0 {
            return true;
        }
        self.coeffs
            .iter()
            .skip(1)
            .step_by(2)
            .all(|c| c.abs() < tol * scale)
    }

    /// The polynomial `x ↦ p(h x)`, i.e. `c_i ↦ c_i h^i`.
    ///
    /// This is the argument scaling that carries a geodesic's
    /// polynomial to the polynomial of the Carnot-dilated geodesic.
    pub fn scale_argument(&self, h: f64) -> Result<Polynomial> {
        if h == 0.0 {
            return Err(Error::ZeroScale);
        }
        let mut pow = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let v = c * pow;
                pow *= h;
                v
            })
            .collect();
        Ok(Polynomial::new(coeffs))
    }

    /// Synthetic division by `(x - r)`, discarding the remainder.
    ///
    /// Used to peel known roots off integrand denominators so the
    /// substituted integrands stay smooth instead of evaluating 0/0.
    pub fn deflate(&self, r: f64) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let n = self.coeffs.len();
        let mut q = vec![0.0; n - 1];
        let mut acc = self.coeffs[n - 1];
        for i in (0..n - 1).rev() {
            q[i] = acc;
            acc = self.coeffs[i] + r * acc;
        }
        Polynomial::new(q)
    }

    /// Cauchy bound: every real root lies in `[-B, B]` with
    /// `B = 1 + max_i |c_i / c_n|`.
    pub fn cauchy_root_bound(&self) -> f64 {
        match self.degree() {
            None | Some(0) => 0.0,
            Some(d) => {
                let lead = self.coeffs[d].abs();
                let m = self.coeffs[..d]
                    .iter()
                    .fold(0.0_f64, |m, c| m.max(c.abs()));
                1.0 + m / lead
            }
        }
    }

    /// Fujiwara-style root bound `2·max_i |c_{n-i}/c_n|^{1/i}`.
    ///
    /// Unlike the Cauchy bound this stays moderate when the leading
    /// coefficient is small relative to the rest, which keeps search
    /// windows inside the range where the polynomial can be evaluated
    /// without overflow.
    pub fn root_bound(&self) -> f64 {
        match self.degree() {
            None | Some(0) => 0.0,
            Some(d) => {
                let lead = self.coeffs[d].abs();
                let mut m: f64 = 0.0;
                for i in 1..=d {
                    let c = self.coeff(d - i).abs();
                    if c > 0.0 {
                        m = m.max((c / lead).powf(1.0 / i as f64));
                    }
                }
                2.0 * m
            }
        }
    }

    /// One-line text form: ascending coefficients, space separated,
    /// rendered with 17 significant digits so parsing round-trips
    /// bit-exactly.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| format!("{:.16e}", c))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text form produced by [`Polynomial::to_text`]; any
    /// sequence of whitespace-separated decimal literals is accepted.
    /// The Unicode minus sign is accepted as a convenience for input
    /// pasted from typeset sources.
    pub fn from_text(s: &str) -> Result<Polynomial> {
        let cleaned = s.replace('\u{2212}', "-");
        let mut coeffs = Vec::new();
        for tok in cleaned.split_whitespace() {
            let v: f64 = tok
                .parse()
                .map_err(|_| Error::PolyParse(format!("bad literal {tok:?}")))?;
            if !v.is_finite() {
                return Err(Error::PolyParse(format!("non-finite literal {tok:?}")));
            }
            coeffs.push(v);
        }
        if coeffs.is_empty() {
            return Err(Error::PolyParse("no coefficients".to_string()));
        }
        Ok(Polynomial::new(coeffs))
    }
}

impl std::ops::Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl std::ops::Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl std::ops::Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl std::ops::Mul<f64> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// A point `(a, b)` of the pencil plane; selects `G = a + b F` from
/// the two-parameter family generated by `F`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PencilPoint {
    pub a: f64,
    pub b: f64,
}

impl PencilPoint {
    pub fn new(a: f64, b: f64) -> Self {
        PencilPoint { a, b }
    }
}

/// The pencil member `G = a + b F`, computed coefficientwise.
pub fn pencil_member(f: &Polynomial, pt: PencilPoint) -> Polynomial {
    let mut coeffs: Vec<f64> = f.coeffs().iter().map(|c| pt.b * c).collect();
    if coeffs.is_empty() {
        coeffs.push(pt.a);
    } else {
        coeffs[0] += pt.a;
    }
    Polynomial::new(coeffs)
}

/// `1 - p^2` at coefficient level.
pub fn one_minus_square(p: &Polynomial) -> Polynomial {
    &Polynomial::constant(1.0) - &(p * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_simple() {
        // 1 + 2x^2 at x = 1
        let p = Polynomial::new(vec![1.0, 0.0, 2.0]);
        assert_eq!(p.eval(1.0), 3.0);
        assert_eq!(Polynomial::zero().eval(3.7), 0.0);
    }

    #[test]
    fn eval_f1_at_sqrt3() {
        // F1 = 1 - ((x^2-1)^2/6)(2 + (x/√3)^14); hand evaluation gives
        // (3-1)^2/6 · (2+1) = 2, so F1(√3) = -1.
        let f1 = crate::registry::f1();
        let v = f1.eval(3.0_f64.sqrt());
        assert!((v + 1.0).abs() < 1e-12, "F1(sqrt3) = {v}");
    }

    #[test]
    fn degree_and_trim() {
        let p = Polynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::constant(4.0).degree(), Some(0));
    }

    #[test]
    fn pencil_identity_and_line() {
        let f = Polynomial::new(vec![0.0, 0.0, 1.0]); // x^2
        let id = pencil_member(&f, PencilPoint::new(0.0, 1.0));
        assert_eq!(id, f);
        let line = pencil_member(&f, PencilPoint::new(0.7, 0.0));
        assert_eq!(line, Polynomial::constant(0.7));
        let g = pencil_member(&f, PencilPoint::new(1.0, -2.0));
        assert_eq!(g.coeffs(), &[1.0, 0.0, -2.0]);
    }

    #[test]
    fn scale_argument_basic() {
        let p = Polynomial::new(vec![0.0, 1.0]); // x
        assert_eq!(p.scale_argument(2.0).unwrap().coeffs(), &[0.0, 2.0]);
        let even = Polynomial::new(vec![1.0, 0.0, 1.0]);
        assert_eq!(even.scale_argument(-1.0).unwrap(), even);
        let cubic = Polynomial::monomial(1.0, 3);
        assert_eq!(cubic.scale_argument(3.0).unwrap().coeffs(), &[0.0, 0.0, 0.0, 27.0]);
        assert!(matches!(p.scale_argument(0.0), Err(Error::ZeroScale)));
    }

    #[test]
    fn deflation_divides_out_roots() {
        // (x-2)(x+3) = x^2 + x - 6
        let p = Polynomial::new(vec![-6.0, 1.0, 1.0]);
        let q = p.deflate(2.0);
        assert_eq!(q.coeffs(), &[3.0, 1.0]);
    }

    #[test]
    fn text_round_trip() {
        let p = Polynomial::new(vec![1.0 / 3.0, -2.5e-7, 6561.0]);
        let q = Polynomial::from_text(&p.to_text()).unwrap();
        assert_eq!(p, q);
        let r = Polynomial::from_text("\u{2212}1 0 2").unwrap();
        assert_eq!(r.coeffs(), &[-1.0, 0.0, 2.0]);
        assert!(Polynomial::from_text("1 banana").is_err());
    }
}
