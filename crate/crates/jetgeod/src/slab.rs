//! Slab domains and the eikonal validity checks behind the calibration
//! argument.
//!
//! A smooth unit-horizontal-gradient function with ansatz
//! `S = a y + b z + f(x)`, `f'(x) = ±√(1 - G(x)²)`, calibrates
//! geodesics inside the region it is defined on. `f'` stays C¹ across
//! a Hill endpoint exactly when the endpoint is a double root of
//! `1 - G²`, so neighbouring Hill intervals can be adjoined across
//! such endpoints; the maximal region obtained this way is a slab
//! `α < x < β`.

use crate::error::{Error, Result};
use crate::hill::{hill_intervals, HillInterval, Sign};
use crate::poly::{one_minus_square, pencil_member, PencilPoint, Polynomial};
use crate::roots::horner_scale;
use serde::{Deserialize, Serialize};

/// A maximal calibration domain `{ α < x < β }` assembled from Hill
/// intervals adjoined across critical endpoints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlabDomain {
    pub alpha: f64,
    pub beta: f64,
    pub constituents: Vec<HillInterval>,
}

/// Extends `interval` across every shared endpoint that is a double
/// root of `1 - F²` (a local maximum of `F²` with value 1), stopping at
/// simple-root endpoints.
pub fn slab_domain(f: &Polynomial, interval: &HillInterval) -> Result<SlabDomain> {
    let intervals = hill_intervals(f)?;
    let tol = 1e-9 * interval.width().max(1.0);
    let idx = intervals
        .iter()
        .position(|iv| (iv.lo - interval.lo).abs() <= tol && (iv.hi - interval.hi).abs() <= tol)
        .ok_or_else(|| {
            Error::GridMismatch("interval is not a Hill interval of this polynomial".to_string())
        })?;

    // Split points are exactly the places where two intervals share an
    // endpoint; sharing implies the endpoint was an interior double
    // root, which is the adjoining condition.
    let mut lo_idx = idx;
    while lo_idx > 0
        && intervals[lo_idx].lo_critical
        && (intervals[lo_idx - 1].hi - intervals[lo_idx].lo).abs() <= tol
    {
        lo_idx -= 1;
    }
    let mut hi_idx = idx;
    while hi_idx + 1 < intervals.len()
        && intervals[hi_idx].hi_critical
        && (intervals[hi_idx + 1].lo - intervals[hi_idx].hi).abs() <= tol
    {
        hi_idx += 1;
    }
    let constituents: Vec<HillInterval> = intervals[lo_idx..=hi_idx].to_vec();
    Ok(SlabDomain {
        alpha: constituents.first().unwrap().lo,
        beta: constituents.last().unwrap().hi,
        constituents,
    })
}

/// Result of evaluating the eikonal identity at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EikonalCheck {
    /// `f'(x)² + G(x)² - 1` with `f' = sign·√(1 - G²)`; zero up to
    /// rounding by construction.
    pub residual: f64,
    /// When `x` sits at a Hill endpoint of `G`: whether `∂S/∂x` is C¹
    /// there (true exactly at double roots of `1 - G²`).
    pub c1_at_endpoint: Option<bool>,
}

/// Evaluates the eikonal residual of the slab ansatz at `x` and, at
/// Hill endpoints, whether the calibration extends smoothly across.
pub fn eikonal_residual(
    f: &Polynomial,
    pt: PencilPoint,
    sign: Sign,
    x: f64,
) -> Result<EikonalCheck> {
    let g = pencil_member(f, pt);
    let shell = one_minus_square(&g);
    let q = shell.eval(x);
    let noise = 64.0 * f64::EPSILON * horner_scale(&shell, x).max(f64::MIN_POSITIVE);
    if q < -noise {
        return Err(Error::OutsideSlab { x });
    }
    let fp = sign.value() * q.max(0.0).sqrt();
    let gv = g.eval(x);
    let residual = fp * fp + gv * gv - 1.0;

    let mut c1_at_endpoint = None;
    if let Ok(intervals) = hill_intervals(&g) {
        for iv in &intervals {
            let tol = 1e-9 * iv.width().max(1.0);
            if (x - iv.lo).abs() <= tol {
                c1_at_endpoint = Some(iv.lo_critical);
            } else if (x - iv.hi).abs() <= tol {
                c1_at_endpoint = Some(iv.hi_critical);
            }
        }
    }
    Ok(EikonalCheck {
        residual,
        c1_at_endpoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    fn central(f: &Polynomial) -> HillInterval {
        hill_intervals(f)
            .unwrap()
            .into_iter()
            .find(|iv| iv.interior_contains(0.0))
            .unwrap()
    }

    #[test]
    fn seagull_slab_spans_three_intervals() {
        let f = registry::f0();
        let iv = central(&f);
        let slab = slab_domain(&f, &iv).unwrap();
        let s3 = 3.0_f64.sqrt();
        assert_eq!(slab.constituents.len(), 3);
        assert!((slab.alpha + s3).abs() < 1e-10);
        assert!((slab.beta - s3).abs() < 1e-10);
    }

    #[test]
    fn slab_independent_of_seed() {
        let f = registry::f0();
        let intervals = hill_intervals(&f).unwrap();
        let slabs: Vec<SlabDomain> = intervals
            .iter()
            .map(|iv| slab_domain(&f, iv).unwrap())
            .collect();
        for s in &slabs[1..] {
            assert!((s.alpha - slabs[0].alpha).abs() < 1e-12);
            assert!((s.beta - slabs[0].beta).abs() < 1e-12);
            assert_eq!(s.constituents.len(), slabs[0].constituents.len());
        }
    }

    #[test]
    fn square_slab_does_not_extend() {
        let f = registry::square();
        let iv = central(&f);
        let slab = slab_domain(&f, &iv).unwrap();
        assert_eq!(slab.constituents.len(), 1);
        assert!((slab.alpha + 1.0).abs() < 1e-10);
        assert!((slab.beta - 1.0).abs() < 1e-10);
    }

    #[test]
    fn kink_adjoins_across_origin() {
        let f = registry::kink();
        let right = hill_intervals(&f).unwrap()[1];
        let slab = slab_domain(&f, &right).unwrap();
        assert_eq!(slab.constituents.len(), 2);
        assert!((slab.alpha + 1.0).abs() < 1e-10 && (slab.beta - 1.0).abs() < 1e-10);
    }

    #[test]
    fn inflection_endpoint_does_not_adjoin() {
        // 1 - 2x³: the endpoint 0 is critical but an inflection of F²,
        // and there is no neighbouring interval to adjoin anyway.
        let f = registry::homoclinic_inflection();
        let iv = hill_intervals(&f).unwrap()[0];
        let slab = slab_domain(&f, &iv).unwrap();
        assert_eq!(slab.constituents.len(), 1);
    }

    #[test]
    fn residual_is_rounding_level() {
        let f = registry::f0();
        let pt = PencilPoint::new(0.0, 1.0);
        for x in [-1.5, -0.7, 0.0, 0.3, 1.0, 1.4] {
            let chk = eikonal_residual(&f, pt, Sign::Plus, x).unwrap();
            assert!(chk.residual.abs() <= 1e-14, "x={x}: {}", chk.residual);
        }
        assert!(eikonal_residual(&f, pt, Sign::Plus, 5.0).is_err());
    }

    #[test]
    fn c1_flag_tracks_root_multiplicity() {
        let pt = PencilPoint::new(0.0, 1.0);
        // double root endpoint: smooth continuation
        let f0 = registry::f0();
        let chk = eikonal_residual(&f0, pt, Sign::Plus, 1.0).unwrap();
        assert_eq!(chk.c1_at_endpoint, Some(true));
        // simple root endpoint: kink in f'
        let sq = registry::square();
        let chk = eikonal_residual(&sq, pt, Sign::Plus, 1.0).unwrap();
        assert_eq!(chk.c1_at_endpoint, Some(false));
        // interior point: no endpoint flag
        let chk = eikonal_residual(&sq, pt, Sign::Plus, 0.5).unwrap();
        assert_eq!(chk.c1_at_endpoint, None);
    }
}
