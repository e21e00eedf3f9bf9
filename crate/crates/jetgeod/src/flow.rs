//! Time-domain integration of geodesics: the x-curve ODE, the
//! three-dimensional magnetic trace, the full jet-space lift, and the
//! exact coordinate operations (theta coordinates, projection, Carnot
//! dilation, reflection, half-period Maxwell pairs).
//!
//! The stepper is classical fixed-step fourth-order Runge-Kutta. The
//! energy shell `ẋ² + G(x)² = 1` is known exactly, so after every step
//! the velocity magnitude is re-projected onto it (keeping the sign),
//! which removes secular drift without disturbing the uniform time
//! grid. Near the saddle of a separatrix the shell value `1 - G²`
//! drops below rounding noise; there the projection is skipped and the
//! raw Runge-Kutta velocity is kept, since rescaling against noise
//! would kick the state across the equilibrium.

use crate::error::{Error, Result};
use crate::poly::{pencil_member, PencilPoint, Polynomial};
use crate::roots::horner_scale;
use serde::{Deserialize, Serialize};

/// Fixed-step integrator settings.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OdeConfig {
    /// Requested time step; the actual step is `duration/n` with `n`
    /// chosen so the grid lands exactly on the duration.
    pub step: f64,
    /// Re-project the velocity onto the energy shell after each step.
    pub renormalize: bool,
}

impl Default for OdeConfig {
    fn default() -> Self {
        OdeConfig {
            step: 1e-3,
            renormalize: true,
        }
    }
}

/// Below this shell value the energy projection is skipped (rounding
/// noise dominates `1 - G²` there).
const SHELL_FLOOR: f64 = 1e-12;

/// Sampled x-curve.
#[derive(Debug, Clone)]
pub struct XTrace {
    pub times: Vec<f64>,
    pub positions: Vec<f64>,
    pub velocities: Vec<f64>,
    /// Launch was from a critical endpoint: the constant equilibrium
    /// solution is returned and flagged.
    pub equilibrium: bool,
}

/// A point of the three-dimensional magnetic quotient space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct R3Point {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl R3Point {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        R3Point { x, y, z }
    }

    pub fn distance(&self, other: &R3Point) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2) + (self.z - other.z).powi(2))
            .sqrt()
    }
}

/// Sampled geodesic in the magnetic space of `F`.
#[derive(Debug, Clone)]
pub struct MagneticTrace {
    pub times: Vec<f64>,
    pub points: Vec<R3Point>,
    pub velocities: Vec<f64>,
    pub pencil: PencilPoint,
    pub f: Polynomial,
    pub equilibrium: bool,
}

/// A single jet-space configuration `(x, u_k, u_{k-1}, …, u_0)`;
/// `u[0] = u_k` down to `u[k] = u_0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JetState {
    pub x: f64,
    pub u: Vec<f64>,
}

impl JetState {
    pub fn new(x: f64, u: Vec<f64>) -> Self {
        JetState { x, u }
    }

    /// Jet order `k` (the `u` vector has length `k + 1`).
    pub fn order(&self) -> usize {
        self.u.len() - 1
    }

    /// Top fiber coordinate `u_k`.
    pub fn uk(&self) -> f64 {
        self.u[0]
    }
}

/// Sampled geodesic in jet space.
#[derive(Debug, Clone)]
pub struct JetTrace {
    pub times: Vec<f64>,
    pub states: Vec<JetState>,
    /// x-velocities when produced by the integrator; lifts of sampled
    /// plane curves do not carry them.
    pub velocities: Option<Vec<f64>>,
    pub poly: Polynomial,
    pub k: usize,
}

/// A plane curve `(x, u_k)(t)` sampled on a uniform grid.
#[derive(Debug, Clone)]
pub struct PlaneCurve {
    pub times: Vec<f64>,
    pub x: Vec<f64>,
    pub uk: Vec<f64>,
}

impl MagneticTrace {
    /// The underlying plane curve `(x, y)`.
    pub fn plane_curve(&self) -> PlaneCurve {
        PlaneCurve {
            times: self.times.clone(),
            x: self.points.iter().map(|p| p.x).collect(),
            uk: self.points.iter().map(|p| p.y).collect(),
        }
    }

    pub fn end(&self) -> R3Point {
        *self.points.last().expect("non-empty trace")
    }
}

impl JetTrace {
    pub fn plane_curve(&self) -> PlaneCurve {
        PlaneCurve {
            times: self.times.clone(),
            x: self.states.iter().map(|s| s.x).collect(),
            uk: self.states.iter().map(|s| s.uk()).collect(),
        }
    }
}

fn grid(duration: f64, step: f64) -> (usize, f64) {
    let n = ((duration / step).round().max(1.0)) as usize;
    (n, duration / n as f64)
}

/// RK4 step for `state' = deriv(state)` into `out`.
fn rk4_step(
    deriv: &dyn Fn(&[f64], &mut [f64]),
    state: &[f64],
    h: f64,
    scratch: &mut [Vec<f64>; 5],
    out: &mut Vec<f64>,
) {
    let n = state.len();
    let [k1, k2, k3, k4, tmp] = scratch;
    deriv(state, k1);
    for i in 0..n {
        tmp[i] = state[i] + 0.5 * h * k1[i];
    }
    deriv(tmp, k2);
    for i in 0..n {
        tmp[i] = state[i] + 0.5 * h * k2[i];
    }
    deriv(tmp, k3);
    for i in 0..n {
        tmp[i] = state[i] + h * k3[i];
    }
    deriv(tmp, k4);
    out.clear();
    for i in 0..n {
        out.push(state[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
    }
}

/// Shared x-dynamics context for the three integrators.
struct XDynamics {
    g: Polynomial,
    dg: Polynomial,
    force: Polynomial, // -G·G'
    shell: Polynomial, // 1 - G²
}

impl XDynamics {
    fn new(g: &Polynomial) -> Self {
        let dg = g.derivative();
        let force = -&(g * &dg);
        let shell = crate::poly::one_minus_square(g);
        XDynamics {
            g: g.clone(),
            dg,
            force,
            shell,
        }
    }

    fn is_critical_at(&self, x: f64) -> bool {
        let scale = horner_scale(&self.dg, x).max(f64::MIN_POSITIVE);
        self.dg.eval(x).abs() < 1e-7 * scale
    }

    /// Launch velocity, validating `G(x0)² ≤ 1`.
    fn launch_velocity(&self, x0: f64, v_sign: Sign) -> Result<f64> {
        let q = self.shell.eval(x0);
        let noise = 64.0 * f64::EPSILON * horner_scale(&self.shell, x0);
        if q < -noise {
            return Err(Error::LaunchOutsideHill { x0 });
        }
        Ok(v_sign.value() * q.max(0.0).sqrt())
    }

    /// Post-step correction: project the velocity back onto the energy
    /// shell, and pull genuine overshoots past a simple turning point
    /// back onto the Hill boundary (the step is replaced by the
    /// turning-point state, flipping the branch on the next step).
    /// Shell values inside the evaluation noise band are left alone —
    /// near the saddle of a separatrix `1 - G²` is smaller than its own
    /// rounding error and any correction there is destructive.
    fn correct(&self, x: &mut f64, v: &mut f64, dir: &mut f64) {
        if *v != 0.0 {
            *dir = v.signum();
        }
        let q = self.shell.eval(*x);
        let noise = 64.0 * f64::EPSILON * horner_scale(&self.shell, *x);
        if q < -noise {
            let dshell = self.shell.derivative();
            let mut r = *x;
            for _ in 0..4 {
                let d = dshell.eval(r);
                if d == 0.0 {
                    break;
                }
                r -= self.shell.eval(r) / d;
            }
            *x = r;
            *v = 0.0;
        } else if q >= SHELL_FLOOR {
            *v = *dir * q.sqrt();
        }
    }
}

pub use crate::hill::Sign;

/// Integrates the x-curve ODE `ẍ = -G(x)G'(x)` on the energy shell
/// `ẋ² + G(x)² = 1` from `x0` with the chosen initial velocity sign.
///
/// A launch from a critical point of `G` on the shell is an unstable
/// equilibrium; the constant solution is returned with the
/// `equilibrium` flag set.
pub fn integrate_x(
    g: &Polynomial,
    x0: f64,
    v_sign: Sign,
    duration: f64,
    cfg: &OdeConfig,
) -> Result<XTrace> {
    let dyn_ = XDynamics::new(g);
    let v0 = dyn_.launch_velocity(x0, v_sign)?;
    let (n, h) = grid(duration, cfg.step);

    if v0 == 0.0 && dyn_.is_critical_at(x0) {
        let times: Vec<f64> = (0..=n).map(|j| j as f64 * h).collect();
        return Ok(XTrace {
            positions: vec![x0; times.len()],
            velocities: vec![0.0; times.len()],
            times,
            equilibrium: true,
        });
    }

    let deriv = |s: &[f64], out: &mut [f64]| {
        out[0] = s[1];
        out[1] = dyn_.force.eval(s[0]);
    };
    let mut scratch: [Vec<f64>; 5] = std::array::from_fn(|_| vec![0.0; 2]);
    let mut out = Vec::with_capacity(2);
    let mut state = vec![x0, v0];
    let mut dir = if v0 != 0.0 {
        v0.signum()
    } else {
        dyn_.force.eval(x0).signum()
    };

    let mut times = Vec::with_capacity(n + 1);
    let mut positions = Vec::with_capacity(n + 1);
    let mut velocities = Vec::with_capacity(n + 1);
    times.push(0.0);
    positions.push(state[0]);
    velocities.push(state[1]);
    for j in 1..=n {
        rk4_step(&deriv, &state, h, &mut scratch, &mut out);
        std::mem::swap(&mut state, &mut out);
        if cfg.renormalize {
            let (mut x, mut v) = (state[0], state[1]);
            dyn_.correct(&mut x, &mut v, &mut dir);
            state[0] = x;
            state[1] = v;
        }
        times.push(j as f64 * h);
        positions.push(state[0]);
        velocities.push(state[1]);
    }
    Ok(XTrace {
        times,
        positions,
        velocities,
        equilibrium: false,
    })
}

/// Integrates the magnetic-space geodesic: the x-curve together with
/// `ẏ = G(x)`, `ż = G(x)F(x)`.
pub fn magnetic_trace(
    f: &Polynomial,
    pt: PencilPoint,
    init: R3Point,
    v_sign: Sign,
    duration: f64,
    cfg: &OdeConfig,
) -> Result<MagneticTrace> {
    let g = pencil_member(f, pt);
    let dyn_ = XDynamics::new(&g);
    let gf = &g * f;
    let v0 = dyn_.launch_velocity(init.x, v_sign)?;
    let (n, h) = grid(duration, cfg.step);

    let equilibrium = v0 == 0.0 && dyn_.is_critical_at(init.x);
    let deriv = |s: &[f64], out: &mut [f64]| {
        out[0] = s[1];
        out[1] = dyn_.force.eval(s[0]);
        out[2] = dyn_.g.eval(s[0]);
        out[3] = gf.eval(s[0]);
    };
    let mut scratch: [Vec<f64>; 5] = std::array::from_fn(|_| vec![0.0; 4]);
    let mut out = Vec::with_capacity(4);
    let mut state = vec![init.x, if equilibrium { 0.0 } else { v0 }, init.y, init.z];
    let mut dir = if v0 != 0.0 {
        v0.signum()
    } else {
        dyn_.force.eval(init.x).signum()
    };

    let mut times = Vec::with_capacity(n + 1);
    let mut points = Vec::with_capacity(n + 1);
    let mut velocities = Vec::with_capacity(n + 1);
    times.push(0.0);
    points.push(init);
    velocities.push(state[1]);
    for j in 1..=n {
        rk4_step(&deriv, &state, h, &mut scratch, &mut out);
        std::mem::swap(&mut state, &mut out);
        if cfg.renormalize && !equilibrium {
            let (mut x, mut v) = (state[0], state[1]);
            dyn_.correct(&mut x, &mut v, &mut dir);
            state[0] = x;
            state[1] = v;
        }
        if equilibrium {
            // The x-equation sits at the unstable equilibrium; y and z
            // still advance linearly.
            state[0] = init.x;
            state[1] = 0.0;
        }
        times.push(j as f64 * h);
        points.push(R3Point::new(state[0], state[2], state[3]));
        velocities.push(state[1]);
    }
    Ok(MagneticTrace {
        times,
        points,
        velocities,
        pencil: pt,
        f: f.clone(),
        equilibrium,
    })
}

/// Integrates the full jet-space geodesic for a polynomial `G` of
/// degree ≤ k: the x-curve, `u̇_k = G(x)` and the lift chain
/// `u̇_{i-1} = u_i ẋ`.
pub fn integrate_jet(
    g: &Polynomial,
    init: &JetState,
    v_sign: Sign,
    duration: f64,
    cfg: &OdeConfig,
) -> Result<JetTrace> {
    let k = init.order();
    if let Some(d) = g.degree() {
        if d > k {
            return Err(Error::DegreeExceedsOrder { deg_f: d, k });
        }
    }
    let dyn_ = XDynamics::new(g);
    let v0 = dyn_.launch_velocity(init.x, v_sign)?;
    let (n, h) = grid(duration, cfg.step);
    let dim = k + 3; // x, v, u_k … u_0

    let deriv = |s: &[f64], out: &mut [f64]| {
        out[0] = s[1];
        out[1] = dyn_.force.eval(s[0]);
        out[2] = dyn_.g.eval(s[0]);
        for m in 1..=k {
            out[2 + m] = s[1 + m] * s[1];
        }
    };
    let mut scratch: [Vec<f64>; 5] = std::array::from_fn(|_| vec![0.0; dim]);
    let mut out = Vec::with_capacity(dim);
    let mut state = Vec::with_capacity(dim);
    state.push(init.x);
    state.push(v0);
    state.extend_from_slice(&init.u);
    let mut dir = if v0 != 0.0 {
        v0.signum()
    } else {
        dyn_.force.eval(init.x).signum()
    };

    let mut times = Vec::with_capacity(n + 1);
    let mut states = Vec::with_capacity(n + 1);
    let mut velocities = Vec::with_capacity(n + 1);
    times.push(0.0);
    states.push(init.clone());
    velocities.push(v0);
    for j in 1..=n {
        rk4_step(&deriv, &state, h, &mut scratch, &mut out);
        std::mem::swap(&mut state, &mut out);
        if cfg.renormalize {
            let (mut x, mut v) = (state[0], state[1]);
            dyn_.correct(&mut x, &mut v, &mut dir);
            state[0] = x;
            state[1] = v;
        }
        times.push(j as f64 * h);
        states.push(JetState::new(state[0], state[2..].to_vec()));
        velocities.push(state[1]);
    }
    Ok(JetTrace {
        times,
        states,
        velocities: Some(velocities),
        poly: g.clone(),
        k,
    })
}

// Cumulative integration of a Stieltjes sum ∫ f dg on a uniform grid:
// over each interval both samples are modelled by the cubic through the
// four surrounding points and the product integral is evaluated
// exactly, giving fourth-order accuracy from samples alone. The 4x4
// weight matrices (common denominator 720) are
// W[p][q] = ∫ l_p(s) l_q'(s) ds over the marked subinterval of the
// stencil.
const STIELTJES_INTERIOR: [[f64; 4]; 4] = [
    [0.0, 31.0, -32.0, 1.0],
    [-31.0, -360.0, 423.0, -32.0],
    [32.0, -423.0, 360.0, 31.0],
    [-1.0, 32.0, -31.0, 0.0],
];
const STIELTJES_FIRST: [[f64; 4]; 4] = [
    [-360.0, 481.0, -152.0, 31.0],
    [-481.0, 360.0, 153.0, -32.0],
    [152.0, -153.0, 0.0, 1.0],
    [-31.0, 32.0, -1.0, 0.0],
];
const STIELTJES_LAST: [[f64; 4]; 4] = [
    [0.0, 1.0, -32.0, 31.0],
    [-1.0, 0.0, 153.0, -152.0],
    [32.0, -153.0, -360.0, 481.0],
    [-31.0, 152.0, -481.0, 360.0],
];

fn stieltjes_increment(f: &[f64], g: &[f64], w: &[[f64; 4]; 4]) -> f64 {
    let mut acc = 0.0;
    for p in 0..4 {
        let mut row = 0.0;
        for q in 0..4 {
            row += w[p][q] * g[q];
        }
        acc += f[p] * row;
    }
    acc / 720.0
}

/// Cumulative `∫ f dg` at every grid point (starting at 0).
pub(crate) fn cumulative_stieltjes(f: &[f64], g: &[f64]) -> Vec<f64> {
    let n = f.len();
    debug_assert!(n >= 4 && g.len() == n);
    let mut out = Vec::with_capacity(n);
    out.push(0.0);
    let mut acc = 0.0;
    for j in 0..n - 1 {
        let inc = if j == 0 {
            stieltjes_increment(&f[0..4], &g[0..4], &STIELTJES_FIRST)
        } else if j == n - 2 {
            stieltjes_increment(&f[n - 4..n], &g[n - 4..n], &STIELTJES_LAST)
        } else {
            stieltjes_increment(&f[j - 1..j + 3], &g[j - 1..j + 3], &STIELTJES_INTERIOR)
        };
        acc += inc;
        out.push(acc);
    }
    out
}

/// Horizontal lift of a sampled plane curve `(x, u_k)(t)` down the
/// chain `du_{i-1} = u_i dx`, seeded by `init` at the first sample.
pub fn horizontal_lift(plane: &PlaneCurve, k: usize, init: &JetState) -> Result<JetTrace> {
    let n = plane.times.len();
    if n < 4 || plane.x.len() != n || plane.uk.len() != n {
        return Err(Error::GridMismatch(format!(
            "need ≥ 4 matching samples, got times={} x={} uk={}",
            n,
            plane.x.len(),
            plane.uk.len()
        )));
    }
    let h = plane.times[1] - plane.times[0];
    for j in 1..n {
        if ((plane.times[j] - plane.times[j - 1]) - h).abs() > 1e-12 * h.abs().max(1.0) {
            return Err(Error::GridMismatch("time grid is not uniform".to_string()));
        }
    }
    if init.order() != k {
        return Err(Error::GridMismatch(format!(
            "init has order {}, expected {}",
            init.order(),
            k
        )));
    }
    if (init.x - plane.x[0]).abs() > 1e-9 * plane.x[0].abs().max(1.0)
        || (init.u[0] - plane.uk[0]).abs() > 1e-9 * plane.uk[0].abs().max(1.0)
    {
        return Err(Error::GridMismatch(
            "init state does not match the first plane sample".to_string(),
        ));
    }

    let mut levels: Vec<Vec<f64>> = Vec::with_capacity(k + 1);
    levels.push(plane.uk.clone());
    for m in 1..=k {
        let upper = &levels[m - 1];
        let cumulative = cumulative_stieltjes(upper, &plane.x);
        let base = init.u[m];
        levels.push(cumulative.into_iter().map(|v| base + v).collect());
    }

    let states = (0..n)
        .map(|j| JetState::new(plane.x[j], (0..=k).map(|m| levels[m][j]).collect()))
        .collect();
    Ok(JetTrace {
        times: plane.times.clone(),
        states,
        velocities: None,
        poly: Polynomial::zero(),
        k,
    })
}

/// Largest per-step discrete residual `|Δu_{i-1} - ū_i Δx|` over all
/// steps and chain levels (`ū_i` = endpoint average).
pub fn pfaffian_residual(tr: &JetTrace) -> f64 {
    let n = tr.times.len();
    let mut worst = 0.0_f64;
    for j in 0..n - 1 {
        let a = &tr.states[j];
        let b = &tr.states[j + 1];
        let dx = b.x - a.x;
        for m in 1..=tr.k {
            let du = b.u[m] - a.u[m];
            let avg = 0.5 * (a.u[m - 1] + b.u[m - 1]);
            worst = worst.max((du - avg * dx).abs());
        }
    }
    worst
}

/// Largest energy-shell residual `|v² + G(x)² - 1|` along a trace.
pub fn max_energy_residual(g: &Polynomial, positions: &[f64], velocities: &[f64]) -> f64 {
    positions
        .iter()
        .zip(velocities)
        .map(|(&x, &v)| {
            let gv = g.eval(x);
            (v * v + gv * gv - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

/// Theta coordinates `θ_j = Σ_{i=0}^{j} (-1)^{j-i} x^i/i! · u_{k-(j-i)}`.
///
/// `θ_0 = u_k`; at `x = 0` only the constant term survives, giving
/// `θ_j = (-1)^j u_{k-j}`.
pub fn theta_coordinates(s: &JetState) -> Vec<f64> {
    let k = s.order();
    let x = s.x;
    // x^i / i!
    let mut xpow = Vec::with_capacity(k + 1);
    let mut w = 1.0;
    for i in 0..=k {
        if i > 0 {
            w *= x / i as f64;
        }
        xpow.push(w);
    }
    (0..=k)
        .map(|j| {
            let mut acc = 0.0;
            for i in 0..=j {
                let sign = if (j - i) % 2 == 0 { 1.0 } else { -1.0 };
                acc += sign * xpow[i] * s.u[j - i];
            }
            acc
        })
        .collect()
}

/// Projection to the magnetic space of `F`: linear in the theta
/// coordinates, `(X, Y, Z) = (x, θ_0, Σ_j j!·c_j·θ_j)` where `c_j` are
/// the coefficients of `F`.
pub fn project_pi_f(s: &JetState, f: &Polynomial) -> Result<R3Point> {
    let k = s.order();
    if let Some(d) = f.degree() {
        if d > k {
            return Err(Error::DegreeExceedsOrder { deg_f: d, k });
        }
    }
    let theta = theta_coordinates(s);
    let mut z = 0.0;
    let mut factorial = 1.0;
    for j in 0..=k {
        if j > 0 {
            factorial *= j as f64;
        }
        z += factorial * f.coeff(j) * theta[j];
    }
    Ok(R3Point::new(s.x, theta[0], z))
}

/// Carnot dilation `δ_h`: `(x, u_k, u_{k-1}, …, u_0) ↦
/// (h x, h u_k, h² u_{k-1}, …, h^{k+1} u_0)`.
pub fn dilate(s: &JetState, h: f64) -> Result<JetState> {
    if h == 0.0 {
        return Err(Error::ZeroScale);
    }
    let mut w = h;
    let u = s
        .u
        .iter()
        .map(|&ui| {
            let v = w * ui;
            w *= h;
            v
        })
        .collect();
    Ok(JetState::new(h * s.x, u))
}

/// Reflection `(x, y, z) ↦ (-x, y, z)`, an isometry of the magnetic
/// space exactly when `F` is even.
pub fn reflect(tr: &MagneticTrace) -> Result<MagneticTrace> {
    if !tr.f.is_even_within(1e-12) {
        return Err(Error::NotEven);
    }
    Ok(MagneticTrace {
        times: tr.times.clone(),
        points: tr
            .points
            .iter()
            .map(|p| R3Point::new(-p.x, p.y, p.z))
            .collect(),
        velocities: tr.velocities.iter().map(|v| -v).collect(),
        pencil: tr.pencil,
        f: tr.f.clone(),
        equilibrium: tr.equilibrium,
    })
}

/// The two geodesics through an interior start point, integrated for a
/// half-period each. For even `F` they meet again at
/// `(-x_i, y_i + Δy, z_i + Δz)`; `meet_error` is the distance between
/// the two computed endpoints.
#[derive(Debug, Clone)]
pub struct MaxwellPair {
    pub plus: MagneticTrace,
    pub minus: MagneticTrace,
    pub meet_error: f64,
    /// Predicted common endpoint from the half-period translations.
    pub predicted: R3Point,
    /// Largest distance of either endpoint from the prediction.
    pub prediction_error: f64,
    /// Start was a Hill endpoint: only one geodesic exists there and
    /// the two traces coincide.
    pub endpoint_launch: bool,
}

pub fn maxwell_pair(
    f: &Polynomial,
    pt: PencilPoint,
    start: R3Point,
    cfg: &OdeConfig,
    quad_cfg: &crate::quad::QuadConfig,
) -> Result<MaxwellPair> {
    let half = crate::periods::half_periods(f, pt, quad_cfg)?;
    let interval = crate::periods::central_interval(f, pt)?;
    if !interval.contains(start.x) {
        return Err(Error::LaunchOutsideHill { x0: start.x });
    }
    let endpoint_launch = !interval.interior_contains(start.x);

    let plus = magnetic_trace(f, pt, start, Sign::Plus, half.dt, cfg)?;
    let minus = magnetic_trace(f, pt, start, Sign::Minus, half.dt, cfg)?;
    let predicted = R3Point::new(-start.x, start.y + half.dy, start.z + half.dz);
    let e1 = plus.end();
    let e2 = minus.end();
    Ok(MaxwellPair {
        meet_error: e1.distance(&e2),
        prediction_error: e1.distance(&predicted).max(e2.distance(&predicted)),
        plus,
        minus,
        predicted,
        endpoint_launch,
    })
}

/// Time for the x-curve to return to `x0` with the same velocity sign,
/// measured from the integrated flow. The crossing is refined with a
/// cubic Hermite model of `x(t)` on the bracketing step.
pub fn measure_return_time(
    g: &Polynomial,
    x0: f64,
    v_sign: Sign,
    max_duration: f64,
    cfg: &OdeConfig,
) -> Result<f64> {
    let tr = integrate_x(g, x0, v_sign, max_duration, cfg)?;
    let n = tr.times.len();
    let want = v_sign.value();
    let h = tr.times[1] - tr.times[0];
    for j in 1..n - 1 {
        let (xa, xb) = (tr.positions[j] - x0, tr.positions[j + 1] - x0);
        let (va, vb) = (tr.velocities[j], tr.velocities[j + 1]);
        if va * want <= 0.0 || vb * want <= 0.0 {
            continue;
        }
        if xa == 0.0 {
            return Ok(tr.times[j]);
        }
        if xa * xb < 0.0 {
            // Hermite cubic on [0, h] in local time s.
            let (p0, p1) = (tr.positions[j], tr.positions[j + 1]);
            let eval = |s: f64| {
                let t = s / h;
                let h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
                let h10 = t * (1.0 - t) * (1.0 - t);
                let h01 = t * t * (3.0 - 2.0 * t);
                let h11 = t * t * (t - 1.0);
                h00 * p0 + h10 * h * va + h01 * p1 + h11 * h * vb - x0
            };
            let (mut lo, mut hi) = (0.0, h);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if eval(lo) * eval(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Ok(tr.times[j] + 0.5 * (lo + hi));
        }
    }
    Err(Error::NoCrossing {
        window: max_duration,
    })
}
