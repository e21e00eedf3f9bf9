//! Hill intervals of a pencil member and the geodesic trichotomy.
//!
//! The x-coordinate of a geodesic driven by `G` moves in the region
//! `G(x)^2 ≤ 1`. Connected components of that region are split at every
//! interior point where `G^2` touches 1 (such points are local maxima
//! of `G^2`, hence critical points of `G`), leaving the Hill intervals.
//! Whether an endpoint is a critical point of `G` decides the dynamics:
//! oscillation, a one-sided asymptotic approach, or a full crossing.

use crate::error::{Error, Result};
use crate::poly::{one_minus_square, pencil_member, PencilPoint, Polynomial};
use crate::roots::{horner_scale, real_roots};
use serde::{Deserialize, Serialize};

/// A sign choice for level crossings and gradient branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Tolerances for Hill-region construction.
#[derive(Debug, Clone, Copy)]
pub struct HillConfig {
    /// Relative tolerance for root refinement.
    pub root_tol: f64,
    /// A Hill endpoint `r` counts as critical when
    /// `|G'(r)| < crit_tol · scale(G')`. This is the delicate knob that
    /// separates double roots of `1 - G^2` from close pairs of simple
    /// roots.
    pub crit_tol: f64,
}

impl Default for HillConfig {
    fn default() -> Self {
        HillConfig {
            root_tol: 1e-13,
            crit_tol: 1e-7,
        }
    }
}

/// A maximal-after-splitting interval on which `G(x)^2 ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HillInterval {
    pub lo: f64,
    pub hi: f64,
    /// `G'(lo) = 0` within tolerance.
    pub lo_critical: bool,
    pub hi_critical: bool,
    /// Value of `G` at the endpoints, rounded to ±1.
    pub g_lo: f64,
    pub g_hi: f64,
}

impl HillInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub fn interior_contains(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }
}

/// Dynamics type of the x-curve on a Hill interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeodesicClass {
    /// Constant `G`: straight line in the plane, handled upstream.
    Line,
    /// Neither endpoint critical: the x-curve oscillates with a finite
    /// period.
    Periodic,
    /// Exactly one critical endpoint: the x-curve bounces once off the
    /// simple endpoint and limits to the critical one in both time
    /// directions.
    Homoclinic,
    /// Both endpoints critical with equal endpoint values of `G`.
    HeteroclinicDirect,
    /// Both endpoints critical with opposite endpoint values of `G`.
    HeteroclinicTurnback,
}

impl GeodesicClass {
    pub fn tag(self) -> &'static str {
        match self {
            GeodesicClass::Line => "line",
            GeodesicClass::Periodic => "periodic",
            GeodesicClass::Homoclinic => "homoclinic",
            GeodesicClass::HeteroclinicDirect => "heteroclinic-direct",
            GeodesicClass::HeteroclinicTurnback => "heteroclinic-turnback",
        }
    }
}

fn endpoint_flags(g: &Polynomial, dg: &Polynomial, r: f64, span: f64, cfg: &HillConfig) -> (bool, f64) {
    let scale = horner_scale(dg, r.abs().max(span)).max(f64::MIN_POSITIVE);
    let critical = dg.eval(r).abs() < cfg.crit_tol * scale;
    let value = if g.eval(r) >= 0.0 { 1.0 } else { -1.0 };
    (critical, value)
}

/// Hill intervals of `G`, sorted left to right.
///
/// Returns an empty list when `G^2 > 1` everywhere; reports an error if
/// a component of `G^2 ≤ 1` reaches the edge of the search window,
/// which cannot happen for a nonconstant polynomial unless root
/// isolation failed.
pub fn hill_intervals(g: &Polynomial) -> Result<Vec<HillInterval>> {
    hill_intervals_with(g, &HillConfig::default())
}

pub fn hill_intervals_with(g: &Polynomial, cfg: &HillConfig) -> Result<Vec<HillInterval>> {
    if g.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let q = one_minus_square(g);
    let window = 2.0 + q.root_bound().max(1.0);
    if q.eval(-window) > 0.0 || q.eval(window) > 0.0 {
        return Err(Error::UnboundedHillComponent { window });
    }
    let roots = real_roots(&q, -window, window, cfg.root_tol)?;
    if roots.is_empty() {
        return Ok(Vec::new());
    }

    // Sign of q between consecutive roots decides where the Hill region
    // lives; roots interior to a positive run are the split points.
    let vals: Vec<f64> = roots.iter().map(|r| r.value).collect();
    let mut gap_positive = Vec::with_capacity(vals.len() + 1);
    gap_positive.push(false); // left of the first root: beyond the region
    for w in 0..vals.len() - 1 {
        let mid = 0.5 * (vals[w] + vals[w + 1]);
        gap_positive.push(q.eval(mid) > 0.0);
    }
    gap_positive.push(false);

    let dg = g.derivative();
    let mut out = Vec::new();
    let mut run_start: Option<usize> = None;
    for i in 0..vals.len() {
        let before = gap_positive[i];
        let after = gap_positive[i + 1];
        if !before && after {
            run_start = Some(i);
        }
        if before && after {
            // interior split point of the current run
            if let Some(s) = run_start {
                out.push((vals[s], vals[i]));
                run_start = Some(i);
            }
        }
        if before && !after {
            if let Some(s) = run_start.take() {
                out.push((vals[s], vals[i]));
            }
        }
    }

    let intervals = out
        .into_iter()
        .filter(|(lo, hi)| hi > lo)
        .map(|(lo, hi)| {
            let span = lo.abs().max(hi.abs());
            let (lo_critical, g_lo) = endpoint_flags(g, &dg, lo, span, cfg);
            let (hi_critical, g_hi) = endpoint_flags(g, &dg, hi, span, cfg);
            HillInterval {
                lo,
                hi,
                lo_critical,
                hi_critical,
                g_lo,
                g_hi,
            }
        })
        .collect();
    Ok(intervals)
}

/// Geodesic class of the x-curve on `interval`.
pub fn classify(g: &Polynomial, interval: &HillInterval) -> GeodesicClass {
    if g.is_constant() {
        return GeodesicClass::Line;
    }
    match (interval.lo_critical, interval.hi_critical) {
        (false, false) => GeodesicClass::Periodic,
        (true, true) => {
            if interval.g_lo == interval.g_hi {
                GeodesicClass::HeteroclinicDirect
            } else {
                GeodesicClass::HeteroclinicTurnback
            }
        }
        _ => GeodesicClass::Homoclinic,
    }
}

/// First `u > 0` with `G(u) = sign.value()` for `G = a + bF`.
///
/// Callers working in the lower pencil half (`b < 0`) pass `Plus`,
/// those in the upper half pass `Minus`; in both cases `u` is the outer
/// endpoint of the symmetric Hill interval through 0 when that interval
/// is periodic.
pub fn hill_endpoint_u(f: &Polynomial, pt: PencilPoint, sign: Sign) -> Result<f64> {
    hill_endpoint_u_with(f, pt, sign, &HillConfig::default())
}

pub fn hill_endpoint_u_with(
    f: &Polynomial,
    pt: PencilPoint,
    sign: Sign,
    cfg: &HillConfig,
) -> Result<f64> {
    let g = pencil_member(f, pt);
    let g0 = g.eval(0.0);
    if g0 * g0 >= 1.0 {
        return Err(Error::LaunchOutsideHill { x0: 0.0 });
    }
    let target = &g - &Polynomial::constant(sign.value());
    if target.is_constant() {
        let window = 0.0;
        return Err(Error::NoCrossing { window });
    }
    let window = 2.0 + target.root_bound().max(1.0);
    let roots = real_roots(&target, 0.0, window, cfg.root_tol)?;
    roots
        .iter()
        .map(|r| r.value)
        .find(|&r| r > cfg.root_tol)
        .ok_or(Error::NoCrossing { window })
}

/// CSV header matching [`interval_csv_row`].
pub fn interval_csv_header() -> &'static str {
    "lo,hi,lo_critical,hi_critical,class"
}

/// One CSV row per Hill interval with its class tag.
pub fn interval_csv_row(iv: &HillInterval, class: GeodesicClass) -> String {
    format!(
        "{:.16e},{:.16e},{},{},{}",
        iv.lo,
        iv.hi,
        iv.lo_critical,
        iv.hi_critical,
        class.tag()
    )
}
