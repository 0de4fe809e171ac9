use proptest::prelude::*;
use sasaki_core::exactalg::sturm::refine_isolating;
use sasaki_core::scalar::rat;
use sasaki_core::{
    isolate_roots, sturm_root_count, Interval, Poly, QPoly, QRatFn, RatFn, Rational, Scalar,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn integer_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-10i64..=10, 1..=7)
        .prop_map(|c| Poly::from_i64s(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Sign changes of `p` on `n` equally spaced interior points of `(-1, 1)`,
/// evaluated in floating point.
fn grid_sign_changes(p: &QPoly, n: usize) -> usize {
    let pf = p.map(|c| c.to_f64());
    let values: Vec<f64> = (1..n)
        .map(|i| -1.0 + 2.0 * i as f64 / n as f64)
        .map(|x| pf.eval(&x))
        .filter(|v| *v != 0.0)
        .collect();
    values
        .windows(2)
        .filter(|w| (w[0] < 0.0) != (w[1] < 0.0))
        .count()
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn addition_commutes_and_cancels(a in poly(5), b in poly(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a - &a).degree(), None);
    }

    #[test]
    fn derivative_obeys_leibniz(a in poly(5), b in poly(5)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(5), b in poly(5), x in rational()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn division_with_remainder(a in poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn sturm_count_bounds_grid_oracle(p in integer_poly()) {
        let count = sturm_root_count(&p, &Interval::unit_open()).unwrap();
        prop_assert!(grid_sign_changes(&p, 10_000) <= count);
        prop_assert!(count <= p.degree().unwrap());
        // odd-multiplicity roots force a parity match with the endpoint signs
        let sf = p.square_free_part();
        if sf.eval(&rat(-1, 1)) != rat(0, 1) && sf.eval(&rat(1, 1)) != rat(0, 1) {
            let flips = (p.eval(&rat(-1, 1)) * p.eval(&rat(1, 1))) < rat(0, 1);
            let odd = sturm_root_count(&p.exact_div(&Poly::gcd(&p, &p.derivative())).unwrap(), &Interval::unit_open()).unwrap();
            prop_assert!(odd >= count);
            prop_assert!(!flips || count > 0);
        }
    }

    #[test]
    fn sturm_matches_planted_roots(
        picks in prop::collection::btree_set(-9i64..=9, 0..=5),
        shift in 1i64..=4,
        square in prop::bool::ANY,
    ) {
        // roots k/10 plus a root-free quadratic factor
        let mut p: QPoly = Poly::constant(rat(1, 1)) ;
        for k in &picks {
            p = &p * &Poly::linear(rat(-*k, 10), rat(1, 1));
        }
        p = &p * &Poly::new(vec![rat(shift, 3), rat(0, 1), rat(1, 1)]);
        if square {
            p = &p * &p;
        }
        prop_assert_eq!(sturm_root_count(&p, &Interval::unit_open()).unwrap(), picks.len());
        if !square {
            prop_assert_eq!(grid_sign_changes(&p, 10_000), picks.len());
        }
        let isolated = isolate_roots(&p, &Interval::unit_open()).unwrap();
        prop_assert_eq!(isolated.len(), picks.len());
        for (iv, k) in isolated.iter().zip(&picks) {
            prop_assert!(iv.contains(&rat(*k, 10)));
            let narrow = refine_isolating(&p, iv, &rat(1, 1000)).unwrap();
            prop_assert!(narrow.contains(&rat(*k, 10)));
        }
    }

    #[test]
    fn ratfn_canonical_form_is_unique(
        num in poly(4),
        den in nonzero_poly(3),
        common in nonzero_poly(3),
        scale in rational().prop_filter("nonzero", |c| *c != rat(0, 1)),
    ) {
        let base = QRatFn::new(num.clone(), den.clone()).unwrap();
        let blown = RatFn::new((&num * &common).scale(&scale), (&den * &common).scale(&scale)).unwrap();
        prop_assert_eq!(&base, &blown);
        if let Some(lead) = base.den().leading() {
            prop_assert_eq!(lead, &rat(1, 1));
        }
    }
}

#[test]
fn zero_polynomial_has_no_degree() {
    assert_eq!(QPoly::zero().degree(), None);
    assert_eq!(QPoly::constant(rat(3, 1)).degree(), Some(0));
}
