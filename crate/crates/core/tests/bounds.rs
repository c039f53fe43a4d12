use proptest::prelude::*;

use clawfree_zeros::bounds::{
    c_of_a, k_func, kappa_grid, minimize_c, solve_x, table1, z_of_a, BoundQuery, A_TOLERANCE,
};

#[test]
fn endpoint_constants() {
    for i in 0..=1 {
        let m = minimize_c(i, 0.0).unwrap();
        assert!((m.c_star - 3.0).abs() < 1e-6, "class {i}: {}", m.c_star);
    }
    let worst = minimize_c(0, 1.0).unwrap();
    assert!(worst.c_star <= 3.81);
    assert!((worst.c_star - 3.802747).abs() < 5e-6);
    assert!((worst.a_star - 0.376232).abs() < 5e-6);
}

#[test]
fn minimizer_is_a_fixed_point() {
    for (i, kappa) in [(0, 1.0), (0, 0.4), (1, 0.7), (1, 1.0)] {
        let m = minimize_c(i, kappa).unwrap();
        let x = solve_x(i, kappa, m.a_star).unwrap();
        let k = k_func(i, kappa, m.a_star, x).unwrap();
        assert!(
            (k - m.a_star).abs() < 1e-9,
            "K(a*, x*) = {k}, a* = {}",
            m.a_star
        );
        assert!((c_of_a(i, kappa, m.a_star).unwrap() - m.c_star).abs() < 1e-12);
    }
}

#[test]
fn zero_free_radius_scales_with_degree() {
    let a = 0.3;
    let c = c_of_a(1, 0.5, a).unwrap();
    for delta in 3..10 {
        let z = z_of_a(1, 0.5, a, delta).unwrap();
        assert!((z * c * delta as f64 - 1.0).abs() < 1e-12);
    }
    assert!(z_of_a(1, 0.5, a, 2).is_err());
}

#[test]
fn invalid_queries_are_rejected() {
    assert!(BoundQuery::new(2, 0.5).is_err());
    assert!(BoundQuery::new(0, -0.1).is_err());
    assert!(BoundQuery::new(0, 1.5).is_err());
    assert!(BoundQuery::new(0, f64::NAN).is_err());
    let q = BoundQuery::new(0, 0.5).unwrap();
    assert!(q.with_a(0.0).is_err());
    assert!(q.with_a(1.0).is_err());
    assert!(q.c_of_a().is_err(), "a must be set first");
}

#[test]
fn evaluate_reports_the_radius() {
    let r = BoundQuery::new(0, 0.0)
        .unwrap()
        .with_a(1.0 / 3.0)
        .unwrap()
        .evaluate(Some(3))
        .unwrap();
    assert!((r.c_of_a - 3.0).abs() < 1e-9);
    assert!((r.radius.unwrap() - 9.0).abs() < 1e-8);
    assert!((r.z_of_a.unwrap() - 1.0 / 9.0).abs() < 1e-9);
}

#[test]
fn table_shapes() {
    let rows = table1(0.05).unwrap();
    assert_eq!(rows.len(), 21);
    for w in rows.windows(2) {
        assert!(w[0].c0 <= w[1].c0 + 1e-9);
        assert!(w[0].c1 <= w[1].c1 + 1e-9);
    }
    assert_eq!(table1(1.0).unwrap().len(), 2);
    assert_eq!(kappa_grid(0.25).unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    assert!(kappa_grid(0.0).is_err());
    assert!(kappa_grid(-1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constant_grows_with_kappa(k1 in 0.0f64..=1.0, k2 in 0.0f64..=1.0) {
        let (lo, hi) = if k1 <= k2 { (k1, k2) } else { (k2, k1) };
        for i in 0..=1 {
            let a = minimize_c(i, lo).unwrap().c_star;
            let b = minimize_c(i, hi).unwrap().c_star;
            prop_assert!(a <= b + 1e-7, "class {} kappa {} -> {}, {} -> {}", i, lo, a, hi, b);
        }
    }

    #[test]
    fn smaller_class_has_smaller_constant(kappa in 0.0f64..=1.0) {
        let c0 = minimize_c(0, kappa).unwrap().c_star;
        let c1 = minimize_c(1, kappa).unwrap().c_star;
        prop_assert!(c1 <= c0 + 1e-7);
        prop_assert!((3.0 - 1e-6..=3.81).contains(&c0));
    }

    #[test]
    fn solved_x_is_the_fixed_point(i in 0u8..=1, kappa in 0.0f64..=1.0, a in 0.01f64..0.99) {
        let x = solve_x(i, kappa, a).unwrap();
        prop_assert!((0.0..=0.5).contains(&x));
        if x < 0.5 {
            let k = k_func(i, kappa, a, x).unwrap();
            prop_assert!((k - a).abs() < A_TOLERANCE, "K = {}, a = {}", k, a);
        }
    }
}
