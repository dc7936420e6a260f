use std::f64::consts::E;

use approx::assert_abs_diff_eq;
use bloch_radius::bonk::{self, STARLIKE_RADIUS};
use bloch_radius::certify::value_only_radius;
use bloch_radius::solver::{self, branch_function, closed_form_polynomial, solve};
use bloch_radius::{Error, Method, RegionId};

// mpmath, 30 digits
const REFERENCE: [(RegionId, f64); 9] = [
    (RegionId::HalfPlane, 0.577_350_269_189_625_8),
    (RegionId::Exp, 0.517_387_062_943_349_2),
    (RegionId::Cardioid, 0.524_422_787_845_883_2),
    (RegionId::Lune, 0.507_305_936_177_288_2),
    (RegionId::Rational, 0.349_864_655_644_132_9),
    (RegionId::Lemniscate, 0.253_652_968_088_644_1),
    (RegionId::Sine, 0.395_735_395_997_656_7),
    (RegionId::Nephroid, 0.346_410_161_513_775_5),
    (RegionId::Sigmoid, 0.273_716_231_099_973_3),
];

#[test]
fn closed_forms_match_reference() {
    for (id, want) in REFERENCE {
        match solve(id, Method::ClosedForm, None) {
            Ok(res) => {
                assert_abs_diff_eq!(res.value, want, epsilon = 1e-14);
                assert!(res.residual < 1e-10, "{id}: {}", res.residual);
            }
            Err(Error::Unsupported { .. }) => assert!(closed_form_polynomial(id).is_none()),
            Err(e) => panic!("{id}: {e}"),
        }
    }
}

#[test]
fn branch_matches_reference() {
    for (id, want) in REFERENCE {
        let res = solve(id, Method::Branch, None).unwrap();
        assert_abs_diff_eq!(res.value, want, epsilon = 1e-11);
        assert!(res.value > 0.0 && res.value <= STARLIKE_RADIUS);
    }
}

#[test]
fn value_only_formulas_match_branch() {
    for id in [
        RegionId::Lemniscate,
        RegionId::Sine,
        RegionId::Nephroid,
        RegionId::Sigmoid,
    ] {
        let formula = value_only_radius(id).unwrap();
        let branch = solve(id, Method::Branch, None).unwrap().value;
        assert!(
            (formula - branch).abs() < 1e-9,
            "{id}: {formula} vs {branch}"
        );
    }
}

#[test]
fn oracle_agrees_with_other_methods() {
    for (id, want) in REFERENCE {
        let res = solve(id, Method::Oracle, None).unwrap();
        assert!((res.value - want).abs() < 5e-4, "{id}: {}", res.value);
        assert!((res.value - want).abs() < 1e-5, "{id}: {}", res.value);
    }
}

#[test]
fn oracle_reports_non_convergence_at_tiny_tolerance() {
    let err = solver::solve_oracle(RegionId::Exp, 1e-15).unwrap_err();
    assert!(matches!(err, Error::NoConvergence { .. }), "{err}");
}

#[test]
fn oracle_rejects_too_few_rays() {
    assert!(solver::solve_oracle_with(RegionId::Exp, 1e-6, 16).is_err());
}

#[test]
fn branch_function_changes_sign_once() {
    for (id, want) in REFERENCE {
        let g0 = branch_function(id, 0.0).unwrap();
        assert!(g0 < 0.0, "{id}");
        if want < STARLIKE_RADIUS - 1e-6 {
            assert!(branch_function(id, want - 1e-4).unwrap() < 0.0, "{id}");
            assert!(branch_function(id, want + 1e-4).unwrap() > 0.0, "{id}");
        }
    }
}

#[test]
fn exp_radius_surd() {
    let r = (3.0_f64.sqrt() / 4.0) * (3.0 - 3.0 * E + (1.0 - 10.0 * E + 9.0 * E * E).sqrt());
    let solved = solve(RegionId::Exp, Method::ClosedForm, None)
        .unwrap()
        .value;
    assert_abs_diff_eq!(r, solved, epsilon = 1e-14);
    assert_abs_diff_eq!(bonk::gap(r).unwrap(), 1.0 / E, epsilon = 1e-14);

    let em1 = E - 1.0;
    assert_abs_diff_eq!(
        9.0 * E * E - 10.0 * E + 1.0,
        9.0 * em1 * em1 + 8.0 * em1,
        epsilon = 1e-12
    );
}

#[test]
fn quadratics_vanish_at_their_radius() {
    for (id, want) in REFERENCE {
        if let Some(q) = closed_form_polynomial(id) {
            assert!(q.eval(want).abs() < 1e-12, "{id}: {}", q.eval(want));
        }
    }
}

#[test]
fn radii_are_ordered() {
    let r = |id| solve(id, Method::Branch, None).unwrap().value;
    assert!(r(RegionId::Lemniscate) < r(RegionId::Sigmoid));
    assert!(r(RegionId::Sigmoid) < r(RegionId::Nephroid));
    assert!(r(RegionId::Nephroid) < r(RegionId::Rational));
    assert!(r(RegionId::Rational) < r(RegionId::Sine));
    assert!(r(RegionId::Sine) < r(RegionId::Lune));
    assert!(r(RegionId::Lune) < r(RegionId::Exp));
    assert!(r(RegionId::Exp) < r(RegionId::Cardioid));
    assert!(r(RegionId::Cardioid) < r(RegionId::HalfPlane));
}

#[test]
fn lemniscate_distance_example() {
    let d = solver::distance_to_complement(RegionId::Lemniscate, 1.171573, 2048).unwrap();
    assert_abs_diff_eq!(d, 0.242_640_562, epsilon = 1e-6);
}

#[test]
fn non_interior_center_is_reported() {
    let err = solver::distance_to_complement(RegionId::Exp, 0.2, 512).unwrap_err();
    assert!(matches!(err, Error::NotInterior { .. }), "{err}");
}
