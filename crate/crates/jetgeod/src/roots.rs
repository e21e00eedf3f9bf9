//! Real-root isolation for low-degree polynomials on an interval.
//!
//! The isolation strategy subdivides the window at the critical points
//! of `p` (found by recursing on `p'`), so `p` is strictly monotone on
//! every segment and sign-change bisection plus a Newton polish finds
//! each transversal root. Roots where the graph touches zero without
//! crossing — the double roots that mark critical Hill endpoints — do
//! not produce sign changes, so they are detected separately: a
//! critical point `c` with `|p(c)|` below a rounding-level threshold is
//! a root of multiplicity ≥ 2.
//!
//! Degrees here stay below ~40 (`1 - G^2` for the degree-18 seagull
//! class), where this scheme is fast and, unlike floating-point Sturm
//! remainder sequences, does not degrade precisely at the double roots
//! the rest of the crate cares about.

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// An isolated real root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootInfo {
    /// Refined root location.
    pub value: f64,
    /// Estimated multiplicity; 1 or 2 in normal use, capped at 4.
    pub multiplicity: u8,
    /// Isolating bracket containing exactly this root.
    pub bracket: (f64, f64),
}

/// Running magnitude of the Horner evaluation, `Σ |c_i| |x|^i`.
///
/// The absolute rounding error of `p.eval(x)` is bounded by a small
/// multiple of `ε` times this quantity, which makes it the right scale
/// for deciding whether a computed value "is zero".
pub(crate) fn horner_scale(p: &Polynomial, x: f64) -> f64 {
    let ax = x.abs();
    let mut acc = 0.0;
    for &c in p.coeffs().iter().rev() {
        acc = acc * ax + c.abs();
    }
    acc
}

/// Threshold under which `p.eval(x)` counts as an exact zero.
fn touch_threshold(p: &Polynomial, x: f64) -> f64 {
    let n = p.coeffs().len().max(2) as f64;
    64.0 * n * f64::EPSILON * horner_scale(p, x).max(f64::MIN_POSITIVE)
}

const MAX_BISECTIONS: usize = 200;
const NEWTON_ITERS: usize = 8;

/// Bisection to the requested width, then a short derivative-safeguarded
/// Newton polish. `p(lo)` and `p(hi)` must have opposite signs; each
/// iteration halves the bracket, so convergence is unconditional.
fn refine_bracketed(
    p: &Polynomial,
    dp: &Polynomial,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Result<f64> {
    let mut flo = p.eval(lo);
    debug_assert!(flo * p.eval(hi) <= 0.0);
    let mut iterations = 0usize;
    while hi - lo > tol * lo.abs().max(1.0) {
        if iterations >= MAX_BISECTIONS {
            return Err(Error::RootRefinement {
                near: 0.5 * (lo + hi),
                iterations,
            });
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // adjacent floats
        }
        let fm = p.eval(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    // Newton polish inside the converged bracket.
    let mut x = 0.5 * (lo + hi);
    for _ in 0..NEWTON_ITERS {
        let d = dp.eval(x);
        if d == 0.0 {
            break;
        }
        let next = x - p.eval(x) / d;
        if !(next >= lo && next <= hi) || next == x {
            break;
        }
        x = next;
    }
    Ok(x)
}

/// All real roots of `p` in `[lo, hi]`, sorted ascending, each with an
/// isolating bracket and a multiplicity estimate.
pub fn real_roots(p: &Polynomial, lo: f64, hi: f64, tol: f64) -> Result<Vec<RootInfo>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !(lo < hi) {
        return Err(Error::EmptyInterval { lo, hi });
    }
    let values = root_values(p, lo, hi, tol)?;
    let dp = p.derivative();
    let ddp = dp.derivative();

    let mut out = Vec::with_capacity(values.len());
    for (i, &r) in values.iter().enumerate() {
        // Multiplicity: the root is at least double when p' also
        // vanishes at rounding level, at least triple when p'' does.
        let mut mult = 1u8;
        if !dp.is_zero() && dp.eval(r).abs() <= touch_threshold(&dp, r) {
            mult = 2;
            if !ddp.is_zero() && ddp.eval(r).abs() <= touch_threshold(&ddp, r) {
                mult = 3;
                let dddp = ddp.derivative();
                if !dddp.is_zero() && dddp.eval(r).abs() <= touch_threshold(&dddp, r) {
                    mult = 4;
                }
            }
        }
        // Isolating bracket: half-way to the neighbouring roots,
        // clipped to the window.
        let left = if i == 0 { lo } else { 0.5 * (values[i - 1] + r) };
        let right = if i + 1 == values.len() {
            hi
        } else {
            0.5 * (r + values[i + 1])
        };
        out.push(RootInfo {
            value: r,
            multiplicity: mult,
            bracket: (left, right),
        });
    }
    Ok(out)
}

/// Root locations only (recursive worker).
fn root_values(p: &Polynomial, lo: f64, hi: f64, tol: f64) -> Result<Vec<f64>> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    if deg == 1 {
        let r = -p.coeff(0) / p.coeff(1);
        return Ok(if r >= lo && r <= hi { vec![r] } else { Vec::new() });
    }

    let dp = p.derivative();
    let mut breaks = vec![lo];
    breaks.extend(root_values(&dp, lo, hi, tol)?);
    breaks.push(hi);
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.dedup_by(|a, b| (*a - *b).abs() <= tol * a.abs().max(1.0));

    let mut roots: Vec<f64> = Vec::new();
    let push = |r: f64, roots: &mut Vec<f64>| {
        let sep = tol * r.abs().max(1.0) * 4.0;
        if roots.iter().all(|&q| (q - r).abs() > sep) {
            roots.push(r);
        }
    };

    // Exact-zero endpoints first: critical points where the graph
    // touches zero, plus roots sitting on the window edge.
    let is_zero_at: Vec<bool> = breaks
        .iter()
        .map(|&b| {
            let v = p.eval(b);
            let thr = touch_threshold(p, b);
            v.is_finite() && thr.is_finite() && v.abs() <= thr
        })
        .collect();
    for (&b, &z) in breaks.iter().zip(&is_zero_at) {
        if z {
            push(b, &mut roots);
        }
    }

    // Monotone segments: one transversal root per sign change.
    for w in 0..breaks.len() - 1 {
        if is_zero_at[w] || is_zero_at[w + 1] {
            // p is monotone here and already vanishes at an endpoint,
            // so there is no further root strictly inside.
            continue;
        }
        let (s, e) = (breaks[w], breaks[w + 1]);
        if p.eval(s) * p.eval(e) < 0.0 {
            let r = refine_bracketed(p, &dp, s, e, tol)?;
            push(r, &mut roots);
        }
    }

    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> Polynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn quartic_simple_roots() {
        // 1 - x^4 = (1-x^2)(1+x^2): roots ±1, both simple.
        let p = poly(&[1.0, 0.0, 0.0, 0.0, -1.0]);
        let r = real_roots(&p, -2.0, 2.0, 1e-13).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].value + 1.0).abs() < 1e-12);
        assert!((r[1].value - 1.0).abs() < 1e-12);
        assert_eq!(r[0].multiplicity, 1);
        assert_eq!(r[1].multiplicity, 1);
        assert!(r[0].bracket.0 <= r[0].value && r[0].value <= r[0].bracket.1);
    }

    #[test]
    fn double_root_at_origin() {
        // 4x^2(1-x^2) = 1 - (2x^2-1)^2: roots -1, 0 (double), 1.
        let p = poly(&[0.0, 0.0, 4.0, 0.0, -4.0]);
        let r = real_roots(&p, -2.0, 2.0, 1e-13).unwrap();
        let vals: Vec<f64> = r.iter().map(|ri| ri.value).collect();
        assert_eq!(r.len(), 3, "{vals:?}");
        assert!((vals[0] + 1.0).abs() < 1e-12);
        assert!(vals[1].abs() < 1e-12);
        assert!((vals[2] - 1.0).abs() < 1e-12);
        assert_eq!(r[1].multiplicity, 2);
    }

    #[test]
    fn no_real_roots() {
        let p = poly(&[1.0, 0.0, 1.0]); // x^2 + 1
        let r = real_roots(&p, -10.0, 10.0, 1e-13).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn triple_root_with_sign_change() {
        // 4x^3 - 4x^6 = 1 - (1-2x^3)^2: roots 0 (triple) and 1 (simple).
        let p = poly(&[0.0, 0.0, 0.0, 4.0, 0.0, 0.0, -4.0]);
        let r = real_roots(&p, -2.0, 2.0, 1e-13).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].value.abs() < 1e-12);
        assert!(r[0].multiplicity >= 2);
        assert!((r[1].value - 1.0).abs() < 1e-12);
        assert_eq!(r[1].multiplicity, 1);
    }

    #[test]
    fn cubic_pencil_double_roots() {
        // 1 - (x^3-3x)^2/4 has double roots at ±1 and simple roots at ±2.
        let g = poly(&[0.0, -1.5, 0.0, 0.5]);
        let q = crate::poly::one_minus_square(&g);
        let r = real_roots(&q, -3.0, 3.0, 1e-13).unwrap();
        let vals: Vec<f64> = r.iter().map(|ri| ri.value).collect();
        assert_eq!(r.len(), 4, "{vals:?}");
        for (i, (v, m)) in [(-2.0, 1), (-1.0, 2), (1.0, 2), (2.0, 1)].iter().enumerate() {
            assert!((vals[i] - v).abs() < 1e-11, "root {i}: {}", vals[i]);
            assert_eq!(r[i].multiplicity, *m as u8, "mult {i}");
        }
    }

    #[test]
    fn rejects_zero_polynomial_and_bad_window() {
        assert!(real_roots(&Polynomial::zero(), 0.0, 1.0, 1e-12).is_err());
        assert!(real_roots(&poly(&[1.0, 1.0]), 1.0, -1.0, 1e-12).is_err());
    }
}
