//! Period and cost integrals with inverse-square-root endpoint
//! singularities.
//!
//! Everything here reduces to integrals of the form
//!
//! ```text
//! ∫ N(x) / sqrt(D(x)) dx
//! ```
//!
//! with polynomial numerator and denominator, `D ≥ 0` on the interval.
//! Simple roots of `D` at an endpoint are removed analytically: the
//! known root is divided out of `D` by synthetic division and the
//! substitution `x = endpoint ∓ s^2` turns the integrand into a smooth
//! function of `s`. A double root of `D` makes the integral diverge
//! unless `N` vanishes there, in which case the matching factors are
//! cancelled instead. Interior roots of `D` (always of even order on a
//! valid domain) split the integration range and are handled by the
//! same cancellation.

use crate::error::{Error, Result};
use crate::hill::{classify, hill_intervals, GeodesicClass, HillInterval};
use crate::poly::{one_minus_square, pencil_member, PencilPoint, Polynomial};
use crate::quad::{integrate_adaptive, Integral, QuadConfig};
use crate::roots::{horner_scale, real_roots};
use serde::{Deserialize, Serialize};

/// Travel time and the translations of `y` and `z` accumulated by an
/// x-periodic geodesic. [`periods`] fills this with full-period values;
/// [`half_periods`] with half-period values (even convention).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Periods {
    pub dt: f64,
    pub dy: f64,
    pub dz: f64,
}

impl Periods {
    pub fn halved(self) -> Periods {
        Periods {
            dt: 0.5 * self.dt,
            dy: 0.5 * self.dy,
            dz: 0.5 * self.dz,
        }
    }
}

/// Reference quantities of the heteroclinic geodesic truncated at
/// `|x| ≤ delta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeteroclinicCosts {
    /// Crossing time `T = 2∫_0^δ dx/√(1-F²)`.
    pub t: f64,
    /// `2∫_0^δ F/√(1-F²) dx`.
    pub dy0: f64,
    /// `2∫_0^δ F²/√(1-F²) dx`.
    pub dz0: f64,
    /// `T - dy0 = 2∫_0^δ (1-F)/√(1-F²) dx`.
    pub cost_y: f64,
    /// `T - dz0 = 2∫_0^δ √(1-F²) dx`.
    pub cost_z: f64,
    pub delta: f64,
}

/// Integration plan for one denominator on one interval: the piece
/// boundaries and the root multiplicity of `D` at each boundary.
struct SqrtDenPlan {
    den: Polynomial,
    bounds: Vec<f64>,
    mults: Vec<u8>,
}

const ROOT_TOL: f64 = 1e-13;

fn vanish_threshold(p: &Polynomial, x: f64) -> f64 {
    let n = p.coeffs().len().max(2) as f64;
    1024.0 * n * f64::EPSILON * horner_scale(p, x).max(f64::MIN_POSITIVE)
}

fn plan_sqrt_den(den: &Polynomial, lo: f64, hi: f64) -> Result<SqrtDenPlan> {
    if !(lo < hi) {
        return Err(Error::EmptyInterval { lo, hi });
    }
    let span = (hi - lo).max(lo.abs()).max(hi.abs()).max(1.0);
    let snap = 1e-9 * span;
    // Search slightly beyond the interval so endpoint roots perturbed
    // by rounding are still seen, then snap them onto the endpoints.
    let roots = real_roots(den, lo - snap, hi + snap, ROOT_TOL)?;

    let mut bounds = vec![lo];
    let mut mults = vec![0u8];
    for r in &roots {
        if (r.value - lo).abs() <= snap {
            // Integrate exactly to the root: the singular endpoint is
            // defined by the denominator, not by the caller's rounded
            // copy of it.
            bounds[0] = r.value;
            mults[0] = r.multiplicity;
        } else if (r.value - hi).abs() <= snap {
            continue; // handled after the loop
        } else if r.value > lo && r.value < hi {
            bounds.push(r.value);
            mults.push(r.multiplicity);
        }
    }
    let hi_root = roots.iter().find(|r| (r.value - hi).abs() <= snap);
    match hi_root {
        Some(r) => {
            bounds.push(r.value);
            mults.push(r.multiplicity);
        }
        None => {
            bounds.push(hi);
            mults.push(0);
        }
    }
    Ok(SqrtDenPlan {
        den: den.clone(),
        bounds,
        mults,
    })
}

/// Integrates `num / sqrt(den)` over one piece whose endpoints carry
/// the given root multiplicities of `den`.
fn integrate_piece(
    num: &Polynomial,
    den: &Polynomial,
    lo: f64,
    hi: f64,
    lo_mult: u8,
    hi_mult: u8,
    cfg: &QuadConfig,
) -> Result<Integral> {
    // Cancel matching factors at endpoints with roots of order ≥ 2:
    // num/√den = (x-e)·n1 / (|x-e|·√d2), and on the integration side of
    // a right endpoint x-e < 0, so the deflated numerator flips sign.
    for (e, m) in [(lo, lo_mult), (hi, hi_mult)] {
        if m >= 2 {
            if num.eval(e).abs() > vanish_threshold(num, e) {
                let direction = num.eval(e).signum();
                return Ok(Integral::Divergent { direction });
            }
            let n1 = if e == hi {
                -&num.deflate(e)
            } else {
                num.deflate(e)
            };
            let d2 = den.deflate(e).deflate(e);
            let new_lo = if e == lo { lo_mult.saturating_sub(2) } else { lo_mult };
            let new_hi = if e == hi { hi_mult.saturating_sub(2) } else { hi_mult };
            return integrate_piece(&n1, &d2, lo, hi, new_lo, new_hi, cfg);
        }
    }

    match (lo_mult, hi_mult) {
        (0, 0) => {
            let v = integrate_adaptive(|x| num.eval(x) / den.eval(x).sqrt(), lo, hi, cfg)?;
            Ok(Integral::Value(v))
        }
        (1, 0) | (0, 1) | (1, 1) => {
            let mid = 0.5 * (lo + hi);
            let mut total = 0.0;
            let sub_cfg = QuadConfig {
                abs_tol: 0.5 * cfg.abs_tol,
                ..*cfg
            };
            if lo_mult == 1 {
                // den = (x - lo)·d1 with d1 > 0 on (lo, mid];
                // x = lo + s² turns N/sqrt(den)·dx into 2N/sqrt(d1)·ds.
                let d1 = den.deflate(lo);
                let smax = (mid - lo).sqrt();
                let v = integrate_adaptive(
                    |s| {
                        let x = lo + s * s;
                        2.0 * num.eval(x) / d1.eval(x).sqrt()
                    },
                    0.0,
                    smax,
                    &sub_cfg,
                )?;
                total += v;
            } else {
                total += integrate_adaptive(|x| num.eval(x) / den.eval(x).sqrt(), lo, mid, &sub_cfg)?;
            }
            if hi_mult == 1 {
                // den = (hi - x)·d2 with d2 = -den/(x - hi) > 0.
                let d2 = -&den.deflate(hi);
                let smax = (hi - mid).sqrt();
                let v = integrate_adaptive(
                    |s| {
                        let x = hi - s * s;
                        2.0 * num.eval(x) / d2.eval(x).sqrt()
                    },
                    0.0,
                    smax,
                    &sub_cfg,
                )?;
                total += v;
            } else {
                total += integrate_adaptive(|x| num.eval(x) / den.eval(x).sqrt(), mid, hi, &sub_cfg)?;
            }
            Ok(Integral::Value(total))
        }
        _ => unreachable!("multiplicities ≥ 2 handled above"),
    }
}

fn integrate_with_plan(num: &Polynomial, plan: &SqrtDenPlan, cfg: &QuadConfig) -> Result<Integral> {
    let pieces = plan.bounds.len() - 1;
    let piece_cfg = QuadConfig {
        abs_tol: cfg.abs_tol / pieces.max(1) as f64,
        ..*cfg
    };
    let mut total = 0.0;
    for i in 0..pieces {
        let v = integrate_piece(
            num,
            &plan.den,
            plan.bounds[i],
            plan.bounds[i + 1],
            plan.mults[i],
            plan.mults[i + 1],
            &piece_cfg,
        )?;
        match v {
            Integral::Value(x) => total += x,
            d @ Integral::Divergent { .. } => return Ok(d),
        }
    }
    Ok(Integral::Value(total))
}

/// `∫_I N(x)/√(1-G(x)²) dx` over a Hill interval of `G`.
///
/// Simple-root endpoints are regularized by the `x = endpoint ∓ s²`
/// substitution; a critical (double-root) endpoint makes the integral
/// divergent unless `N` vanishes there, and the divergent outcome is
/// returned as a value, not an error.
pub fn singular_integral(
    num: &Polynomial,
    g: &Polynomial,
    interval: &HillInterval,
    cfg: &QuadConfig,
) -> Result<Integral> {
    let den = one_minus_square(g);
    let plan = plan_sqrt_den(&den, interval.lo, interval.hi)?;
    integrate_with_plan(num, &plan, cfg)
}

/// Full-period translations for an x-periodic geodesic:
/// `L = 2∫ dx/√(1-G²)`, `Δy = 2∫ G dx/√(1-G²)`, `Δz = 2∫ GF dx/√(1-G²)`
/// over the Hill interval.
pub fn periods(
    f: &Polynomial,
    pt: PencilPoint,
    interval: &HillInterval,
    cfg: &QuadConfig,
) -> Result<Periods> {
    let g = pencil_member(f, pt);
    let class = classify(&g, interval);
    if class != GeodesicClass::Periodic {
        return Err(Error::NotPeriodic { class: class.tag() });
    }
    let den = one_minus_square(&g);
    let plan = plan_sqrt_den(&den, interval.lo, interval.hi)?;
    let one = Polynomial::constant(1.0);
    let gf = &g * f;
    let dt = 2.0 * integrate_with_plan(&one, &plan, cfg)?.value()?;
    let dy = 2.0 * integrate_with_plan(&g, &plan, cfg)?.value()?;
    let dz = 2.0 * integrate_with_plan(&gf, &plan, cfg)?.value()?;
    Ok(Periods { dt, dy, dz })
}

/// The Hill interval of `G = a + bF` whose interior contains 0.
pub fn central_interval(f: &Polynomial, pt: PencilPoint) -> Result<HillInterval> {
    let g = pencil_member(f, pt);
    let ivs = hill_intervals(&g)?;
    ivs.into_iter()
        .find(|iv| iv.interior_contains(0.0))
        .ok_or(Error::NoCentralInterval)
}

/// Half-period translations in the even convention: `F` even, Hill
/// interval `(-u, u)`, values exactly half the full-period ones.
pub fn half_periods(f: &Polynomial, pt: PencilPoint, cfg: &QuadConfig) -> Result<Periods> {
    if !f.is_even_within(1e-12) {
        return Err(Error::NotEven);
    }
    let iv = central_interval(f, pt)?;
    Ok(periods(f, pt, &iv, cfg)?.halved())
}

/// Half-period renormalized costs `(Cost_y, Cost_z) = (Δt - Δy, Δt - Δz)`.
///
/// `Cost_y` is computed from the combined integrand
/// `2∫_0^u (1-G)/√(1-G²) dx` (and `Cost_z` from `(1-GF)` in place of
/// `(1-G)`), which stays finite where the separate periods cancel
/// divergences against each other.
pub fn cost_functions(f: &Polynomial, pt: PencilPoint, cfg: &QuadConfig) -> Result<(f64, f64)> {
    if !f.is_even_within(1e-12) {
        return Err(Error::NotEven);
    }
    if pt.b == 0.0 {
        // Constant G: the Hill endpoint escapes to infinity and both
        // costs blow up.
        return Err(Error::DivergentIntegral { direction: 1.0 });
    }
    let iv = central_interval(f, pt)?;
    let class = classify(&pencil_member(f, pt), &iv);
    if class != GeodesicClass::Periodic {
        return Err(Error::NotPeriodic { class: class.tag() });
    }
    let u = iv.hi;
    let g = pencil_member(f, pt);
    let den = one_minus_square(&g);
    let plan = plan_sqrt_den(&den, 0.0, u)?;
    let one = Polynomial::constant(1.0);
    let num_y = &one - &g;
    let num_z = &one - &(&g * f);
    let cost_y = 2.0 * integrate_with_plan(&num_y, &plan, cfg)?.value()?;
    let cost_z = 2.0 * integrate_with_plan(&num_z, &plan, cfg)?.value()?;
    Ok((cost_y, cost_z))
}

/// Half-period data for one pencil point: the outer endpoint `u` of
/// the symmetric Hill interval through 0, the half-period translations
/// and the renormalized costs, all from a single root-isolation plan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPeriodData {
    pub u: f64,
    pub periods: Periods,
    pub cost_y: f64,
    pub cost_z: f64,
}

/// Computes [`HalfPeriodData`] for an even `F`. Fails with a divergence
/// or non-periodicity error on the boundary strokes of the diamond.
pub fn half_period_data(f: &Polynomial, pt: PencilPoint, cfg: &QuadConfig) -> Result<HalfPeriodData> {
    if !f.is_even_within(1e-12) {
        return Err(Error::NotEven);
    }
    if pt.b == 0.0 {
        return Err(Error::DivergentIntegral { direction: 1.0 });
    }
    let iv = central_interval(f, pt)?;
    let g = pencil_member(f, pt);
    let class = classify(&g, &iv);
    if class != GeodesicClass::Periodic {
        return Err(Error::NotPeriodic { class: class.tag() });
    }
    let u = iv.hi;
    let den = one_minus_square(&g);
    let plan = plan_sqrt_den(&den, 0.0, u)?;
    let one = Polynomial::constant(1.0);
    let gf = &g * f;
    let dt = 2.0 * integrate_with_plan(&one, &plan, cfg)?.value()?;
    let dy = 2.0 * integrate_with_plan(&g, &plan, cfg)?.value()?;
    let dz = 2.0 * integrate_with_plan(&gf, &plan, cfg)?.value()?;
    let num_y = &one - &g;
    let num_z = &one - &gf;
    let cost_y = 2.0 * integrate_with_plan(&num_y, &plan, cfg)?.value()?;
    let cost_z = 2.0 * integrate_with_plan(&num_z, &plan, cfg)?.value()?;
    Ok(HalfPeriodData {
        u,
        periods: Periods { dt, dy, dz },
        cost_y,
        cost_z,
    })
}

/// `Cost_y` and `Cost_z` integrated over `[0, u]` for a caller-supplied
/// outer endpoint `u` (the line parameterizations of the diamond know
/// `u` in closed form). Unlike [`cost_functions`] this also evaluates
/// the continuous extension on the upper boundary edge, where `1 - G²`
/// acquires an interior double root against which the cost numerators
/// cancel.
pub fn cost_pair_to(
    f: &Polynomial,
    pt: PencilPoint,
    u: f64,
    cfg: &QuadConfig,
) -> Result<(Integral, Integral)> {
    let g = pencil_member(f, pt);
    let den = one_minus_square(&g);
    let plan = plan_sqrt_den(&den, 0.0, u)?;
    let one = Polynomial::constant(1.0);
    let num_y = &one - &g;
    let num_z = &one - &(&g * f);
    let cy = integrate_with_plan(&num_y, &plan, cfg)?;
    let cz = integrate_with_plan(&num_z, &plan, cfg)?;
    let scale = |v: Integral| match v {
        Integral::Value(x) => Integral::Value(2.0 * x),
        d => d,
    };
    Ok((scale(cy), scale(cz)))
}

/// Truncated heteroclinic reference quantities at `0 ≤ delta < 1` for a
/// seagull normalized to Hill interval `[-1, 1]`.
pub fn heteroclinic_costs(f: &Polynomial, delta: f64, cfg: &QuadConfig) -> Result<HeteroclinicCosts> {
    if !(0.0..=1.0 - 1e-8).contains(&delta) {
        return Err(Error::DeltaRange {
            delta,
            lo: 0.0,
            hi: 1.0 - 1e-8,
        });
    }
    if delta == 0.0 {
        return Ok(HeteroclinicCosts {
            t: 0.0,
            dy0: 0.0,
            dz0: 0.0,
            cost_y: 0.0,
            cost_z: 0.0,
            delta,
        });
    }
    let den = one_minus_square(f);
    let plan = plan_sqrt_den(&den, 0.0, delta)?;
    let one = Polynomial::constant(1.0);
    let ff = f * f;
    let t = 2.0 * integrate_with_plan(&one, &plan, cfg)?.value()?;
    let dy0 = 2.0 * integrate_with_plan(f, &plan, cfg)?.value()?;
    let dz0 = 2.0 * integrate_with_plan(&ff, &plan, cfg)?.value()?;
    let num_y = &one - f;
    let num_z = &one - &ff;
    let cost_y = 2.0 * integrate_with_plan(&num_y, &plan, cfg)?.value()?;
    let cost_z = 2.0 * integrate_with_plan(&num_z, &plan, cfg)?.value()?;
    Ok(HeteroclinicCosts {
        t,
        dy0,
        dz0,
        cost_y,
        cost_z,
        delta,
    })
}

fn require_double_root_at_one(f: &Polynomial) -> Result<()> {
    let v = f.eval(1.0);
    if (v - 1.0).abs() > 1e-9 {
        return Err(Error::MissingDoubleRoot { value: v });
    }
    let df = f.derivative();
    let scale = horner_scale(&df, 1.0).max(f64::MIN_POSITIVE);
    if df.eval(1.0).abs() > 1e-9 * scale {
        return Err(Error::MissingDoubleRoot { value: v });
    }
    Ok(())
}

/// Limits `Cost_y(∞), Cost_z(∞)`: the `delta = 1` values, finite
/// because `1 - F` has a double root at the critical Hill endpoint 1 so
/// the cost integrands extend continuously.
pub fn cost0_limit(f: &Polynomial, cfg: &QuadConfig) -> Result<(f64, f64)> {
    require_double_root_at_one(f)?;
    let den = one_minus_square(f);
    let plan = plan_sqrt_den(&den, 0.0, 1.0)?;
    let one = Polynomial::constant(1.0);
    let num_y = &one - f;
    let num_z = &one - &(f * f);
    let cost_y = 2.0 * integrate_with_plan(&num_y, &plan, cfg)?.value()?;
    let cost_z = 2.0 * integrate_with_plan(&num_z, &plan, cfg)?.value()?;
    Ok((cost_y, cost_z))
}

/// Outer Hill endpoint `β > 1` with `F(β) = -1`, located by root
/// isolation rather than assuming the class-normalized value `√3`.
pub fn hill_beta(f: &Polynomial) -> Result<f64> {
    let shifted = f + &Polynomial::constant(1.0);
    if shifted.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let window = 1.0 + shifted.root_bound().max(1.0);
    let roots = real_roots(&shifted, 1.0, window, ROOT_TOL)?;
    roots
        .first()
        .map(|r| r.value)
        .ok_or(Error::NoCrossing { window })
}

/// Boundary cost `2 ∫_0^u sqrt((1-F(x)) / (F(x)-F(u))) dx` for
/// `u ≥ β`: the continuous extension of `Cost_y` to the upper boundary
/// edge of the pencil diamond, parameterized by the outer Hill
/// endpoint `u`.
pub fn boundary_cost(f: &Polynomial, u: f64, cfg: &QuadConfig) -> Result<f64> {
    let beta = hill_beta(f)?;
    if u < beta - 1e-9 {
        return Err(Error::BelowBeta { u, beta });
    }
    let num = &Polynomial::constant(1.0) - f;
    let den = &num * &(f - &Polynomial::constant(f.eval(u)));
    let plan = plan_sqrt_den(&den, 0.0, u)?;
    Ok(2.0 * integrate_with_plan(&num, &plan, cfg)?.value()?)
}

/// Two-piece certified lower bound for [`boundary_cost`] over the whole
/// class, built from the extreme members `F0` and `F1`:
///
/// ```text
/// 2∫_0^√3  sqrt((1-F0)/(F0(x)-F0(u))) dx
///   + 2∫_√3^u sqrt((1-F1)/(F0(x)-F0(u))) dx
/// ```
pub fn lowbound(u: f64, cfg: &QuadConfig) -> Result<f64> {
    let f0 = crate::registry::f0();
    let f1 = crate::registry::f1();
    let beta = hill_beta(&f0)?;
    if u < beta - 1e-9 {
        return Err(Error::BelowBeta { u, beta });
    }
    let shift = Polynomial::constant(f0.eval(u));
    let one = Polynomial::constant(1.0);

    // piece 1 on [0, β]: numerator 1 - F0
    let num0 = &one - &f0;
    let den0 = &num0 * &(&f0 - &shift);
    let plan0 = plan_sqrt_den(&den0, 0.0, beta)?;
    let v0 = integrate_with_plan(&num0, &plan0, cfg)?.value()?;

    // piece 2 on [β, u]: numerator 1 - F1, denominator still from F0
    let mut total = 2.0 * v0;
    if u > beta + 1e-12 {
        let num1 = &one - &f1;
        let den1 = &num1 * &(&f0 - &shift);
        let plan1 = plan_sqrt_den(&den1, beta, u)?;
        total += 2.0 * integrate_with_plan(&num1, &plan1, cfg)?.value()?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hill::hill_intervals;
    use crate::registry;
    use std::f64::consts::PI;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    fn unit_interval_of(g: &Polynomial) -> HillInterval {
        hill_intervals(g).unwrap().into_iter().find(|iv| iv.interior_contains(0.0)).unwrap()
    }

    #[test]
    fn arcsine_closed_forms() {
        // G = x on (-1, 1): ∫ dx/√(1-x²) = π, ∫ x/... = 0, ∫ x²/... = π/2
        let g = registry::identity();
        let iv = unit_interval_of(&g);
        let one = Polynomial::constant(1.0);
        let v = singular_integral(&one, &g, &iv, &cfg()).unwrap().value().unwrap();
        assert!((v - PI).abs() < 1e-10, "{v}");
        let vx = singular_integral(&g, &g, &iv, &cfg()).unwrap().value().unwrap();
        assert!(vx.abs() < 1e-10);
        let x2 = Polynomial::monomial(1.0, 2);
        let v2 = singular_integral(&x2, &g, &iv, &cfg()).unwrap().value().unwrap();
        assert!((v2 - PI / 2.0).abs() < 1e-10);
    }

    #[test]
    fn harmonic_periods() {
        // F = x, (a,b) = (0,1): L = 2π, Δy = 0, Δz = π.
        let f = registry::identity();
        let pt = PencilPoint::new(0.0, 1.0);
        let iv = unit_interval_of(&f);
        let p = periods(&f, pt, &iv, &cfg()).unwrap();
        assert!((p.dt - 2.0 * PI).abs() < 1e-9, "{p:?}");
        assert!(p.dy.abs() < 1e-9);
        assert!((p.dz - PI).abs() < 1e-9);
    }

    #[test]
    fn divergence_at_critical_endpoint() {
        // Kink interval (0, 1) has a critical endpoint at 0; the time
        // integrand does not vanish there, so Δt diverges.
        let g = registry::kink();
        let ivs = hill_intervals(&g).unwrap();
        let right = ivs[1];
        let one = Polynomial::constant(1.0);
        let out = singular_integral(&one, &g, &right, &cfg()).unwrap();
        assert!(out.is_divergent(), "{out:?}");
        assert!(matches!(
            periods(&g, PencilPoint::new(0.0, 1.0), &right, &cfg()),
            Err(Error::NotPeriodic { .. })
        ));
    }

    #[test]
    fn half_periods_are_half() {
        let f = registry::f0();
        let pt = PencilPoint::new(0.1, 0.5);
        let iv = central_interval(&f, pt).unwrap();
        let full = periods(&f, pt, &iv, &cfg()).unwrap();
        let half = half_periods(&f, pt, &cfg()).unwrap();
        assert!((full.dt - 2.0 * half.dt).abs() < 1e-9);
        assert!((full.dy - 2.0 * half.dy).abs() < 1e-9);
        assert!((full.dz - 2.0 * half.dz).abs() < 1e-9);
        assert!(half.dy.abs() < half.dt);
    }

    #[test]
    fn costs_match_period_differences() {
        let f = registry::f0();
        for pt in [PencilPoint::new(0.0, 0.5), PencilPoint::new(0.2, 0.5), PencilPoint::new(0.3, -0.4)] {
            let (cy, cz) = cost_functions(&f, pt, &cfg()).unwrap();
            let hp = half_periods(&f, pt, &cfg()).unwrap();
            assert!((cy - (hp.dt - hp.dy)).abs() < 1e-8, "{pt:?}");
            assert!((cz - (hp.dt - hp.dz)).abs() < 1e-8, "{pt:?}");
            assert!(cy > 0.0);
        }
    }

    #[test]
    fn heteroclinic_cost_monotone_in_delta() {
        let f = registry::f1();
        let zero = heteroclinic_costs(&f, 0.0, &cfg()).unwrap();
        assert_eq!(zero.t, 0.0);
        let half = heteroclinic_costs(&f, 0.5, &cfg()).unwrap();
        let near = heteroclinic_costs(&f, 0.999, &cfg()).unwrap();
        let (limit_y, limit_z) = cost0_limit(&f, &cfg()).unwrap();
        assert!(0.0 < half.cost_y && half.cost_y < near.cost_y && near.cost_y < limit_y);
        assert!(0.0 < half.cost_z && half.cost_z < near.cost_z && near.cost_z < limit_z);
        assert!(heteroclinic_costs(&f, 1.5, &cfg()).is_err());
    }

    #[test]
    fn cost0_limit_reference_values() {
        // Independently computed with 30-digit arithmetic:
        //   F1: Cost_y(∞) = 0.579010931480764,  Cost_z(∞) = 1.024193670455727
        //   F0: Cost_y(∞) = 0.396490374190087,  Cost_z(∞) = 0.747425954108246
        let (y1, z1) = cost0_limit(&registry::f1(), &cfg()).unwrap();
        assert!((y1 - 0.579010931480764).abs() < 1e-10, "{y1}");
        assert!((z1 - 1.024193670455727).abs() < 1e-9, "{z1}");
        let (y0, z0) = cost0_limit(&registry::f0(), &cfg()).unwrap();
        assert!((y0 - 0.396490374190087).abs() < 1e-10, "{y0}");
        assert!((z0 - 0.747425954108246).abs() < 1e-9, "{z0}");
        assert!(y0 < y1);
    }

    #[test]
    fn cost0_limit_needs_double_root() {
        let sq = registry::square();
        assert!(matches!(
            cost0_limit(&sq, &cfg()),
            Err(Error::MissingDoubleRoot { .. })
        ));
    }

    #[test]
    fn beta_is_sqrt3_for_class_members() {
        let b0 = hill_beta(&registry::f0()).unwrap();
        let b1 = hill_beta(&registry::f1()).unwrap();
        let s3 = 3.0_f64.sqrt();
        assert!((b0 - s3).abs() < 1e-11, "{b0}");
        assert!((b1 - s3).abs() < 1e-11, "{b1}");
    }

    #[test]
    fn lowbound_reference_values() {
        // Independently computed with 30-digit arithmetic.
        let cases = [
            (2.0, 0.7002344737051224_f64),
            (2.36, 0.580184201953584),
            (5.0, 1.136622425450663),
            (10.0, 2.290486975053968),
        ];
        for (u, want) in cases {
            let v = lowbound(u, &cfg()).unwrap();
            assert!((v - want).abs() < 1e-7, "lowbound({u}) = {v}, want {want}");
        }
        assert!(lowbound(1.0, &cfg()).is_err());
    }

    #[test]
    fn boundary_cost_exceeds_lowbound() {
        let f = registry::f_quadratic_shape();
        for u in [1.7372, 2.0, 3.0, 6.0] {
            let cb = boundary_cost(&f, u, &cfg()).unwrap();
            let lb = lowbound(u, &cfg()).unwrap();
            assert!(cb > lb, "u={u}: cost_bdry {cb} vs lowbound {lb}");
        }
        assert!(boundary_cost(&f, 1.0, &cfg()).is_err());
    }

    #[test]
    fn boundary_cost_grows(){
        let f0 = registry::f0();
        let v5 = boundary_cost(&f0, 5.0, &cfg()).unwrap();
        let v10 = boundary_cost(&f0, 10.0, &cfg()).unwrap();
        assert!(v10 > v5 && v5 > 0.58);
    }
}
