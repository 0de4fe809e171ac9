use std::sync::Arc;

use proptest::prelude::*;
use sasaki_core::profiles::{
    affine_fit, check_conditions, check_extremal, constant_fit, csc_candidates, csc_profile,
    csc_quadratic, csc_roots, energy, exact_scalar_curvature, extremal_orbifold_f,
    ke_obstruction_check, scalar_curvature_oracle, theta_canonical, theta_smooth_extremal,
    ConeLabels, Profile, ORACLE_TOLERANCE,
};
use sasaki_core::scalar::rat;
use sasaki_core::{Algebraic, ExactField, Poly, Rational, Scalar};

fn labels(p: u64, q: u64) -> ConeLabels {
    ConeLabels::new(p, q).unwrap()
}

fn grid(n: i64) -> Vec<Rational> {
    (0..n)
        .map(|i| rat(-7, 8) + rat(7, 4) * rat(i, n - 1))
        .collect()
}

/// Largest gap between the finite-difference oracle and `-F''/(1 + r z)`
/// evaluated in floating point.
fn oracle_error<T: ExactField>(prof: &Profile<T>, z: &[Rational]) -> f64 {
    let f2 = prof.f().derivative().derivative();
    let r = prof.r().value().to_f64();
    scalar_curvature_oracle(prof, z)
        .unwrap()
        .iter()
        .map(|s| {
            let zf = s.z.to_f64();
            let zt = T::from_rational(&s.z);
            let exact = -f2.eval(&zt).unwrap().to_f64() / (1.0 + r * zf);
            (s.s - exact).abs()
        })
        .fold(0.0, f64::max)
}

#[test]
fn sweep_certifies_every_small_profile() {
    for p in 1..=12 {
        for q in 1..=12 {
            let Ok(l) = ConeLabels::new(p, q) else {
                continue;
            };
            for k in 1..=7 {
                let prof = extremal_orbifold_f(l, rat(k, 8)).unwrap();
                assert!(check_conditions(&prof).all(), "({p},{q},{k}/8)");
                assert!(check_extremal(&prof).is_extremal(), "({p},{q},{k}/8)");
                let s = exact_scalar_curvature(&prof);
                assert!(s.as_poly().is_some_and(|s| s.degree() <= Some(1)));
            }
            let canonical = Profile::from_theta(
                l,
                sasaki_core::profiles::FiberParam::new(rat(1, 2)).unwrap(),
                &theta_canonical(l),
            );
            assert!(check_conditions(&canonical).all());
            assert!(!check_extremal(&canonical).is_extremal());
        }
    }
}

#[test]
fn double_root_occurs_off_the_diagonal() {
    let ke =
        |p, q, r| ke_obstruction_check(&extremal_orbifold_f(labels(p, q), r).unwrap()).unwrap();
    assert!(!ke(1, 1, rat(1, 2)));
    // 17 p = 27 q solves p (r^3 + r^2 + r - 3) + q (r^3 - r^2 + r + 3) = 0 at r = 1/2
    assert!(ke(27, 17, rat(1, 2)));
    assert!(!ke(27, 17, rat(1, 3)));
    for k in 1..=20 {
        assert!(!ke(1, 1, rat(k, 21)));
    }
}

#[test]
fn csc_quadratic_is_reflected_by_swapping_labels() {
    let pairs = [
        (1, 2),
        (1, 3),
        (2, 3),
        (2, 5),
        (3, 4),
        (3, 5),
        (4, 7),
        (5, 6),
        (5, 9),
        (7, 8),
        (1, 10),
        (3, 10),
        (7, 10),
        (9, 10),
        (11, 13),
        (12, 25),
        (16, 21),
        (17, 27),
        (20, 49),
        (31, 32),
    ];
    for (p, q) in pairs {
        let forward = csc_quadratic(labels(p, q));
        let reflected = csc_quadratic(labels(q, p)).reflect().primitive();
        assert_eq!(forward, reflected, "({p},{q})");
        assert_eq!(csc_roots(labels(p, q)).len(), 1, "({p},{q})");
        assert!(csc_roots(labels(q, p)).is_empty(), "({q},{p})");
    }
    assert!(csc_roots(labels(1, 1)).is_empty());
}

#[test]
fn one_two_root_matches_quadratic_formula() {
    let roots = csc_roots(labels(1, 2));
    let exact = 2.0 * 3f64.sqrt() - 3.0;
    assert_eq!(roots.len(), 1);
    assert!((roots[0].to_f64() - exact).abs() < 1e-15);
    let iv = roots[0].isolating();
    assert!(iv.lo().to_f64() < exact && exact < iv.hi().to_f64());
}

#[test]
fn some_csc_parameters_are_rational() {
    let roots = csc_roots(labels(16, 21));
    assert_eq!(roots.len(), 1);
    assert_eq!(roots[0].rational_value(), Some(rat(1, 5)));
    let prof = extremal_orbifold_f(labels(16, 21), rat(1, 5)).unwrap();
    assert!(prof.is_csc());
}

#[test]
fn csc_profiles_have_constant_curvature() {
    let z = grid(17);
    for q in 2..=9 {
        for p in 1..q {
            let Ok(l) = ConeLabels::new(p, q) else {
                continue;
            };
            for cand in csc_candidates(l)
                .unwrap()
                .into_iter()
                .filter(|c| c.in_unit_interval)
            {
                let prof = csc_profile(l, &cand.root).unwrap();
                assert!(check_conditions(&prof).all());
                assert!(prof.is_csc());
                let s = exact_scalar_curvature(&prof);
                assert_eq!(s.as_poly().and_then(|s| s.degree()), Some(0));
                let fit = constant_fit(&scalar_curvature_oracle(&prof, &z).unwrap());
                assert!(
                    fit.max_residual < 1e-5,
                    "({p},{q}) spread {}",
                    fit.max_residual
                );
                // constant s integrates against (1 + r z) to 2 s^2
                let e = energy(&prof, 24).unwrap();
                assert!((e - 2.0 * fit.intercept.powi(2)).abs() < 1e-6);
            }
        }
    }
}

#[test]
fn oracle_agrees_with_exact_curvature() {
    let z = grid(15);
    for (p, q, r) in [
        (1, 1, rat(1, 2)),
        (2, 5, rat(3, 7)),
        (1, 50, rat(7, 8)),
        (50, 1, rat(1, 8)),
        (49, 50, rat(7, 8)),
    ] {
        let prof = extremal_orbifold_f(labels(p, q), r).unwrap();
        assert!(oracle_error(&prof, &z) < ORACLE_TOLERANCE, "({p},{q})");
        assert!(affine_fit(&scalar_curvature_oracle(&prof, &z).unwrap()).max_residual < 1e-5);
    }
    let root = Arc::new(csc_roots(labels(2, 7)).remove(0));
    let prof = extremal_orbifold_f(labels(2, 7), Algebraic::generator(root)).unwrap();
    assert!(oracle_error(&prof, &z) < ORACLE_TOLERANCE);
}

#[test]
fn energy_of_non_csc_profile_exceeds_mean_square_bound() {
    // Cauchy-Schwarz against the weight 1 + r z, which integrates to 2
    let prof = extremal_orbifold_f(labels(2, 5), rat(3, 7)).unwrap();
    let e = energy(&prof, 32).unwrap();
    let s = exact_scalar_curvature(&prof)
        .as_poly()
        .unwrap()
        .map(|c| c.to_f64());
    let r = 3.0 / 7.0;
    let mean = sasaki_core::profiles::gauss_legendre(32)
        .iter()
        .map(|(z, w)| w * s.eval(z) * (1.0 + r * z))
        .sum::<f64>();
    assert!(e > mean * mean / 2.0);
}

proptest! {
    #[test]
    fn smooth_labels_reproduce_smooth_profile(n in 1i64..200, extra in 1i64..200) {
        let r = rat(n, n + extra);
        let prof = extremal_orbifold_f(ConeLabels::smooth(), r.clone()).unwrap();
        let one_plus_rz = Poly::linear(rat(1, 1), r.clone());
        let expected = theta_smooth_extremal(r).unwrap().mul_poly(&one_plus_rz);
        prop_assert_eq!(expected.as_poly(), prof.f_poly());
    }

    #[test]
    fn extremal_profiles_certify(p in 1u64..=60, q in 1u64..=60, n in 1i64..100, extra in 1i64..100) {
        prop_assume!(ConeLabels::new(p, q).is_ok());
        let prof = extremal_orbifold_f(labels(p, q), rat(n, n + extra)).unwrap();
        prop_assert!(check_conditions(&prof).all());
        prop_assert!(check_extremal(&prof).is_extremal());
        let h = prof.h().unwrap();
        prop_assert_eq!(prof.is_csc(), h.coeff(2) == rat(0, 1));
    }
}
