//! The pencil-parameter diamond and its line parameterizations.
//!
//! Competing periodic geodesics against a normalized heteroclinic are
//! indexed by pencil points in
//!
//! ```text
//! DIAM = { (a, b) : |a + b| < 1, |a - b| ≤ 1, b ≠ 0 }
//! ```
//!
//! whose boundary strokes Leg 1 (`a + b = -1`), Leg 2 (`b = 0`) and
//! Leg 3 (`a + b = +1`) carry period blow-up. Each half of the diamond
//! is swept by line segments of constant outer Hill endpoint `u`.

use crate::error::{Error, Result};
use crate::poly::{PencilPoint, Polynomial};
use serde::{Deserialize, Serialize};

/// Classification of a pencil point against the diamond, with boundary
/// tolerance 1e-12.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiamondRegion {
    InteriorPlus,
    InteriorMinus,
    /// `a + b = -1`.
    Leg1,
    /// `b = 0` inside the diamond.
    Leg2,
    /// `a + b = +1`.
    Leg3,
    Outside,
}

const BOUNDARY_TOL: f64 = 1e-12;

pub fn diamond_membership(pt: PencilPoint) -> DiamondRegion {
    let s = pt.a + pt.b;
    let d = pt.a - pt.b;
    if s.abs() > 1.0 + BOUNDARY_TOL || d.abs() > 1.0 + BOUNDARY_TOL {
        return DiamondRegion::Outside;
    }
    if (s + 1.0).abs() <= BOUNDARY_TOL {
        return DiamondRegion::Leg1;
    }
    if (s - 1.0).abs() <= BOUNDARY_TOL {
        return DiamondRegion::Leg3;
    }
    if pt.b.abs() <= BOUNDARY_TOL {
        return DiamondRegion::Leg2;
    }
    if pt.b > 0.0 {
        DiamondRegion::InteriorPlus
    } else {
        DiamondRegion::InteriorMinus
    }
}

/// Which half of the diamond a `(τ, u)` line parameterization covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `b > 0`: lines through `(-1, 0)`, `a = τ`, `b = (τ+1)/|F(u)|`.
    Plus,
    /// `b < 0`: lines through `(1, 0)`, `a = 1-τ`, `b = τ/F(u)`.
    Minus,
}

/// Line coordinates on one half of the diamond: `u` fixes the line
/// (the outer Hill endpoint of every pencil member on it), `τ` moves
/// along it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiamondCoords {
    pub tau: f64,
    pub u: f64,
    pub branch: Branch,
}

/// Largest admissible `τ` on the plus-branch line of endpoint value
/// `fu = F(u)`; the line meets Leg 3 there.
pub fn tau_max_plus(fu: f64) -> f64 {
    (fu.abs() - 1.0) / (fu.abs() + 1.0)
}

/// The pencil point of the given line coordinates.
///
/// On the plus branch the resulting `G = a + bF` satisfies
/// `G(u) = -1`; on the minus branch `G(u) = +1`. Recovering `u` from
/// the returned point via the first level crossing inverts this map.
pub fn tau_lines(coords: &DiamondCoords, f: &Polynomial) -> Result<PencilPoint> {
    let fu = f.eval(coords.u);
    match coords.branch {
        Branch::Plus => {
            if fu >= -1.0 {
                return Err(Error::InvalidDiamondCoords(format!(
                    "u = {} is not beyond the outer Hill endpoint (F(u) = {fu} ≥ -1)",
                    coords.u
                )));
            }
            let max = tau_max_plus(fu);
            if !(coords.tau > -1.0 && coords.tau <= max + BOUNDARY_TOL) {
                return Err(Error::InvalidDiamondCoords(format!(
                    "tau = {} outside (-1, {max}]",
                    coords.tau
                )));
            }
            Ok(PencilPoint::new(coords.tau, (coords.tau + 1.0) / fu.abs()))
        }
        Branch::Minus => {
            if fu > -1.0 + BOUNDARY_TOL {
                return Err(Error::InvalidDiamondCoords(format!(
                    "u = {} is not at or beyond the outer Hill endpoint (F(u) = {fu} > -1)",
                    coords.u
                )));
            }
            if coords.tau <= 0.0 {
                return Err(Error::InvalidDiamondCoords(format!(
                    "tau = {} must be positive on the minus branch",
                    coords.tau
                )));
            }
            let pt = PencilPoint::new(1.0 - coords.tau, coords.tau / fu);
            if diamond_membership(pt) == DiamondRegion::Outside {
                return Err(Error::LeavesDiamond { a: pt.a, b: pt.b });
            }
            Ok(pt)
        }
    }
}
