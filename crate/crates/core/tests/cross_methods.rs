use num_bigint::BigInt;

use normord::algebra::Partition;
use normord::enumerators::Caps;
use normord::special::{gen_stirling, IntegerTriangle, TriangleKind};
use normord::strategy::{coefficient_methods, expected_total, universal_backends};
use normord::universal::{u_poly_d, CoeffTable};
use normord::verify::{reference_table_3_3, run_suites};

#[test]
fn methods_agree_beyond_the_reference_sizes() {
    let caps = Caps::default();
    let methods = coefficient_methods();
    for (n, d) in [(6, 1), (7, 1), (4, 2), (3, 4), (5, 2)] {
        let base = CoeffTable::from_polynomial(&u_poly_d(n, d).unwrap(), n, d).unwrap();
        assert_eq!(base.total(), BigInt::from(expected_total(n, d)));
        for m in methods.iter().filter(|m| m.supports(d)) {
            match m.table(n, d, &caps) {
                Ok(t) => assert_eq!(t, base, "{} at n={n} d={d}", m.name()),
                Err(normord::Error::CapExceeded { .. }) => {}
                Err(e) => panic!("{}: {e}", m.name()),
            }
        }
    }
}

#[test]
fn backends_agree_at_n_6() {
    let caps = Caps::default();
    let base = u_poly_d(6, 1).unwrap();
    for b in universal_backends().iter().filter(|b| b.supports(1)) {
        assert_eq!(b.compute(6, 1, &caps).unwrap(), base, "{}", b.name());
    }
}

#[test]
fn single_coefficients() {
    let caps = Caps::default();
    let lambda = Partition::new(vec![2, 1]).unwrap();
    for m in coefficient_methods().iter().filter(|m| m.supports(3)) {
        assert_eq!(
            m.coefficient(3, 3, &lambda, &caps).unwrap(),
            BigInt::from(42),
            "{}",
            m.name()
        );
    }
    assert_eq!(reference_table_3_3().get(&lambda), BigInt::from(42));
}

#[test]
fn triangle_rows_from_tables() {
    let g = IntegerTriangle::build(TriangleKind::GenStirling { q: 3, d: 2 }, 3).unwrap();
    for (n, k, v) in g.entries() {
        assert_eq!(*v, gen_stirling(n, k, 3, 2).unwrap());
    }
    assert_eq!(g.row_sum(1), BigInt::from(1));
}

#[test]
fn all_suites_at_default_size() {
    for r in run_suites("all", 6, &Caps::default()).unwrap() {
        assert!(r.passed(), "{r}");
    }
}
