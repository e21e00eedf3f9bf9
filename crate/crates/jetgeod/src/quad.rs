//! Globally adaptive Gauss–Kronrod quadrature.
//!
//! A 10-point Gauss / 21-point Kronrod pair is applied per panel; the
//! worst panel (largest rescaled error estimate) is bisected until the
//! summed error estimate meets the absolute tolerance or the panel
//! budget runs out. Integrands with endpoint singularities are expected
//! to be transformed (substitution `x = endpoint ∓ s^2` with the
//! singular factor divided out) before they reach this engine; see the
//! period integrals for how that is done.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Nodes of the 21-point Kronrod rule on `[-1, 1]` (nonnegative half;
/// the rule is symmetric). Even indices are the embedded 10-point Gauss
/// nodes' companions.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// Weights of the embedded 10-point Gauss rule (for `XGK[1], XGK[3], …`).
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Weights of the 21-point Kronrod rule.
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Quadrature settings. The default absolute tolerance matches the
/// 1e-10 working tolerance of the certification pipeline.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QuadConfig {
    pub abs_tol: f64,
    /// Hard subdivision budget; exceeding it is an explicit failure.
    pub max_panels: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            abs_tol: 1e-10,
            max_panels: 4000,
        }
    }
}

/// Outcome of an improper integral: divergent integrals are first-class
/// values, not errors, because parts of the pipeline deliberately probe
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Integral {
    Value(f64),
    /// Diverges to `direction · ∞` with `direction = ±1`.
    Divergent { direction: f64 },
}

impl Integral {
    pub fn value(self) -> Result<f64> {
        match self {
            Integral::Value(v) => Ok(v),
            Integral::Divergent { direction } => Err(Error::DivergentIntegral { direction }),
        }
    }

    pub fn is_divergent(self) -> bool {
        matches!(self, Integral::Divergent { .. })
    }
}

struct PanelResult {
    integral: f64,
    error: f64,
}

/// One Gauss–Kronrod panel with the QUADPACK-style error rescaling.
fn gk_panel(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64) -> PanelResult {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = 0.0;
    let mut resabs = kronrod.abs();
    let mut values = [(0.0_f64, 0.0_f64); 10];

    for (j, item) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        *item = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    // resasc: integral of |f - mean|, used to rescale the raw error.
    let mean = 0.5 * kronrod;
    let mut resasc = WGK[10] * (fc - mean).abs();
    for (j, (f1, f2)) in values.iter().enumerate() {
        resasc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    resasc *= half.abs();
    resabs *= half.abs();

    let integral = kronrod * half;
    let raw = ((kronrod - gauss) * half).abs();
    let mut error = raw;
    if resasc != 0.0 && raw != 0.0 {
        error = resasc * 1.0_f64.min((200.0 * raw / resasc).powf(1.5));
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) && floor > error {
        error = floor;
    }

    PanelResult { integral, error }
}

#[derive(PartialEq)]
struct Panel {
    error: f64,
    a: f64,
    b: f64,
    integral: f64,
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // NaN errors sort highest so they get subdivided (and then
        // reported) instead of silently accepted.
        match (self.error.is_nan(), other.error.is_nan()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => self.error.total_cmp(&other.error),
        }
    }
}

/// Adaptive integral of a bounded integrand over `[a, b]` to the
/// configured absolute tolerance.
pub fn integrate_adaptive<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let span = (b - a).abs();
    let first = gk_panel(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    let mut total_err = first.error;
    heap.push(Panel {
        error: first.error,
        a,
        b,
        integral: first.integral,
    });
    let mut panels = 1usize;

    while total_err > cfg.abs_tol {
        if panels >= cfg.max_panels {
            return Err(Error::QuadTolerance {
                tol: cfg.abs_tol,
                err: total_err,
                panels,
            });
        }
        let worst = heap.pop().expect("heap nonempty while error positive");
        if !worst.integral.is_finite() || worst.error.is_nan() {
            return Err(Error::QuadTolerance {
                tol: cfg.abs_tol,
                err: f64::NAN,
                panels,
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a).abs() <= 1e-15 * span || mid == worst.a || mid == worst.b {
            // Panel can no longer be split: an unresolvable feature.
            return Err(Error::QuadTolerance {
                tol: cfg.abs_tol,
                err: total_err,
                panels,
            });
        }
        let left = gk_panel(&mut f, worst.a, mid);
        let right = gk_panel(&mut f, mid, worst.b);
        total_err += left.error + right.error - worst.error;
        heap.push(Panel {
            error: left.error,
            a: worst.a,
            b: mid,
            integral: left.integral,
        });
        heap.push(Panel {
            error: right.error,
            a: mid,
            b: worst.b,
            integral: right.integral,
        });
        panels += 1;
    }

    // Re-sum from the heap for a scheduling-independent result.
    let sum: f64 = heap.iter().map(|p| p.integral).sum();
    if !sum.is_finite() {
        return Err(Error::QuadTolerance {
            tol: cfg.abs_tol,
            err: f64::NAN,
            panels,
        });
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_exact() {
        let cfg = QuadConfig::default();
        let v = integrate_adaptive(|x| 3.0 * x * x, 0.0, 2.0, &cfg).unwrap();
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn smooth_transcendental() {
        let cfg = QuadConfig::default();
        let v = integrate_adaptive(|x: f64| x.sin(), 0.0, PI, &cfg).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn peaked_integrand() {
        // 1/(1e-6 + x^2) over [-1, 1]: arctan closed form.
        let cfg = QuadConfig::default();
        let eps: f64 = 1e-6;
        let v = integrate_adaptive(|x| 1.0 / (eps + x * x), -1.0, 1.0, &cfg).unwrap();
        let exact = 2.0 * (1.0 / eps.sqrt()) * (1.0 / eps.sqrt()).atan();
        assert!((v - exact).abs() < 1e-7 * exact, "{v} vs {exact}");
    }

    #[test]
    fn budget_failure_is_reported() {
        let cfg = QuadConfig {
            abs_tol: 1e-10,
            max_panels: 4,
        };
        let r = integrate_adaptive(|x: f64| (200.0 * x).sin().abs(), 0.0, 10.0, &cfg);
        assert!(matches!(r, Err(Error::QuadTolerance { .. })));
    }

    #[test]
    fn tolerance_scaling() {
        // Halving the tolerance changes the result by less than 10x the
        // coarser tolerance.
        let f = |x: f64| (1.0 - x * x).sqrt();
        let coarse = integrate_adaptive(
            f,
            -1.0,
            1.0,
            &QuadConfig {
                abs_tol: 1e-8,
                max_panels: 4000,
            },
        )
        .unwrap();
        let fine = integrate_adaptive(
            f,
            -1.0,
            1.0,
            &QuadConfig {
                abs_tol: 5e-9,
                max_panels: 4000,
            },
        )
        .unwrap();
        assert!((coarse - fine).abs() < 1e-7);
        assert!((fine - PI / 2.0).abs() < 1e-8);
    }
}
