//! Bundled example polynomials and parameter registries used by the
//! classification tests, the period cross-checks and the CLI demos.

use crate::hill::GeodesicClass;
use crate::poly::{PencilPoint, Polynomial};
use crate::seagull::{build_specific_seagull, tail_monomial};

/// Extreme class member for `P = (x/√3)^14`:
/// `F0 = 1 - ((x^2-1)^2/6)(1 + 2(x/√3)^14)`.
pub fn f0() -> Polynomial {
    build_specific_seagull(&tail_monomial()).expect("F0 is a class member")
}

/// Extreme class member for `P = 1`:
/// `F1 = 1 - ((x^2-1)^2/6)(2 + (x/√3)^14)`.
pub fn f1() -> Polynomial {
    build_specific_seagull(&Polynomial::constant(1.0)).expect("F1 is a class member")
}

/// Interior class member for `P = (x/√3)^2`.
pub fn f_quadratic_shape() -> Polynomial {
    build_specific_seagull(&Polynomial::monomial(1.0 / 3.0, 2)).expect("valid class member")
}

/// `x` — the harmonic oscillator pencil; periods have closed forms.
pub fn identity() -> Polynomial {
    Polynomial::new(vec![0.0, 1.0])
}

/// `x^2` — single periodic Hill interval `(-1, 1)`.
pub fn square() -> Polynomial {
    Polynomial::monomial(1.0, 2)
}

/// `2x^2 - 1` — the kink: two homoclinic intervals split at 0.
pub fn kink() -> Polynomial {
    Polynomial::new(vec![-1.0, 0.0, 2.0])
}

/// `(x^3 - 3x)/2` — heteroclinic of turnback type on `(-1, 1)`.
pub fn cubic_turnback() -> Polynomial {
    Polynomial::new(vec![0.0, -1.5, 0.0, 0.5])
}

/// `1 - 2x^3` — homoclinic with an inflection point, Hill interval
/// `[0, 1]`. Known not to minimize in the three-dimensional quotient
/// (forthcoming work); the jet-space question is open.
pub fn homoclinic_inflection() -> Polynomial {
    Polynomial::new(vec![1.0, 0.0, 0.0, -2.0])
}

/// `1 - (199/100)(x^2-1)^4` — heteroclinic of direct type on `(-1, 1)`
/// but close to a pair of turnback geodesics. Known not to minimize in
/// the three-dimensional quotient (forthcoming work); the jet-space
/// question is open.
pub fn near_turnback() -> Polynomial {
    let bump2 = Polynomial::new(vec![1.0, 0.0, -2.0, 0.0, 1.0]); // (x^2-1)^2
    let bump4 = &bump2 * &bump2;
    &Polynomial::constant(1.0) - &(&bump4 * 1.99)
}

/// A classification fixture: polynomial plus the expected class of each
/// Hill interval, left to right.
pub struct ClassificationCase {
    pub name: &'static str,
    pub poly: Polynomial,
    pub expected: Vec<GeodesicClass>,
    pub note: &'static str,
}

pub fn classification_cases() -> Vec<ClassificationCase> {
    use GeodesicClass::*;
    vec![
        ClassificationCase {
            name: "square",
            poly: square(),
            expected: vec![Periodic],
            note: "oscillating x-curve on (-1, 1)",
        },
        ClassificationCase {
            name: "kink",
            poly: kink(),
            expected: vec![Homoclinic, Homoclinic],
            note: "split at the critical point 0",
        },
        ClassificationCase {
            name: "cubic-turnback",
            poly: cubic_turnback(),
            expected: vec![Homoclinic, HeteroclinicTurnback, Homoclinic],
            note: "endpoint values of opposite sign on the middle interval",
        },
        ClassificationCase {
            name: "seagull-f0",
            poly: f0(),
            expected: vec![Homoclinic, HeteroclinicDirect, Homoclinic],
            note: "equal endpoint values +1 on the middle interval",
        },
        ClassificationCase {
            name: "seagull-f1",
            poly: f1(),
            expected: vec![Homoclinic, HeteroclinicDirect, Homoclinic],
            note: "equal endpoint values +1 on the middle interval",
        },
        ClassificationCase {
            name: "homoclinic-inflection",
            poly: homoclinic_inflection(),
            expected: vec![Homoclinic],
            note: "non-minimizing in the 3d quotient per forthcoming work; open in jet space",
        },
        ClassificationCase {
            name: "near-turnback",
            poly: near_turnback(),
            expected: vec![Homoclinic, HeteroclinicDirect, Homoclinic],
            note: "non-minimizing in the 3d quotient per forthcoming work; open in jet space",
        },
    ]
}

/// A periodic configuration for the quadrature-vs-flow period checks.
pub struct PeriodCase {
    pub name: &'static str,
    pub poly: Polynomial,
    pub pt: PencilPoint,
}

/// Twenty `(F, (a,b))` pairs whose central Hill interval is safely
/// periodic.
pub fn period_cases() -> Vec<PeriodCase> {
    let pt = PencilPoint::new;
    vec![
        PeriodCase { name: "identity-harmonic", poly: identity(), pt: pt(0.0, 1.0) },
        PeriodCase { name: "identity-a", poly: identity(), pt: pt(0.2, 0.7) },
        PeriodCase { name: "identity-b", poly: identity(), pt: pt(-0.3, 0.5) },
        PeriodCase { name: "identity-c", poly: identity(), pt: pt(0.1, -0.6) },
        PeriodCase { name: "square-unit", poly: square(), pt: pt(0.0, 1.0) },
        PeriodCase { name: "square-a", poly: square(), pt: pt(0.5, 0.4) },
        PeriodCase { name: "square-b", poly: square(), pt: pt(-0.2, 0.6) },
        PeriodCase { name: "square-c", poly: square(), pt: pt(0.3, -0.8) },
        PeriodCase { name: "kink-a", poly: kink(), pt: pt(0.0, 0.9) },
        PeriodCase { name: "kink-b", poly: kink(), pt: pt(0.3, 0.5) },
        PeriodCase { name: "kink-c", poly: kink(), pt: pt(-0.1, -0.7) },
        PeriodCase { name: "cubic-a", poly: cubic_turnback(), pt: pt(0.0, 0.8) },
        PeriodCase { name: "cubic-b", poly: cubic_turnback(), pt: pt(0.2, 0.6) },
        PeriodCase { name: "cubic-c", poly: cubic_turnback(), pt: pt(-0.2, 0.5) },
        PeriodCase { name: "f0-a", poly: f0(), pt: pt(0.0, 0.5) },
        PeriodCase { name: "f0-b", poly: f0(), pt: pt(0.2, 0.5) },
        PeriodCase { name: "f0-c", poly: f0(), pt: pt(-0.2, 0.4) },
        PeriodCase { name: "f0-d", poly: f0(), pt: pt(0.3, -0.4) },
        PeriodCase { name: "f1-a", poly: f1(), pt: pt(0.0, 0.6) },
        PeriodCase { name: "f1-b", poly: f1(), pt: pt(-0.1, -0.5) },
    ]
}

/// Even polynomials with a periodic central interval, for the
/// half-period meeting checks.
pub fn maxwell_cases() -> Vec<PeriodCase> {
    let pt = PencilPoint::new;
    vec![
        PeriodCase { name: "square-unit", poly: square(), pt: pt(0.0, 1.0) },
        PeriodCase { name: "square-a", poly: square(), pt: pt(0.5, 0.4) },
        PeriodCase { name: "kink-a", poly: kink(), pt: pt(0.0, 0.9) },
        PeriodCase { name: "f0-a", poly: f0(), pt: pt(0.0, 0.5) },
        PeriodCase { name: "f0-b", poly: f0(), pt: pt(0.2, 0.5) },
        PeriodCase { name: "f1-a", poly: f1(), pt: pt(0.0, 0.6) },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hill::{classify, hill_intervals};

    #[test]
    fn classification_registry_matches() {
        for case in classification_cases() {
            let ivs = hill_intervals(&case.poly).unwrap();
            assert_eq!(
                ivs.len(),
                case.expected.len(),
                "{}: got {:?}",
                case.name,
                ivs
            );
            for (iv, want) in ivs.iter().zip(&case.expected) {
                assert_eq!(classify(&case.poly, iv), *want, "{}", case.name);
            }
        }
    }

    #[test]
    fn near_turnback_hill_region() {
        // Outer endpoints at x^2 = 1 + (200/199)^(1/4).
        let f = near_turnback();
        let ivs = hill_intervals(&f).unwrap();
        let outer = (1.0 + (200.0_f64 / 199.0).powf(0.25)).sqrt();
        assert!((ivs[0].lo + outer).abs() < 1e-10);
        assert!((ivs[2].hi - outer).abs() < 1e-10);
        assert!((ivs[1].lo + 1.0).abs() < 1e-10 && (ivs[1].hi - 1.0).abs() < 1e-10);
    }

    #[test]
    fn period_registry_is_periodic() {
        for case in period_cases() {
            let g = crate::poly::pencil_member(&case.poly, case.pt);
            let ivs = hill_intervals(&g).unwrap();
            let central = ivs
                .iter()
                .find(|iv| iv.interior_contains(0.0))
                .unwrap_or_else(|| panic!("{}: no central interval", case.name));
            assert_eq!(
                classify(&g, central),
                GeodesicClass::Periodic,
                "{}",
                case.name
            );
        }
    }
}
