use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use normord::algebra::{
    IntPoly, NCPolynomial, NCWord, NormalMonomial, NormalPolynomial, Partition,
};
use normord::oracle::{apply, skew_mul, SkewPolynomial};
use normord::strategy::{coefficient_methods, universal_backends};
use normord::universal::{u_poly, CoeffTable};

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-5i64..=5, 0..=4).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monomial(with_t: bool) -> impl Strategy<Value = NormalMonomial> {
    let t_max = if with_t { 3u32 } else { 0 };
    (prop::collection::vec((0u32..4, 1u32..3), 0..3), 0..=t_max)
        .prop_map(|(exps, t)| NormalMonomial::from_parts(exps, t))
}

fn normal_poly(with_t: bool) -> impl Strategy<Value = NormalPolynomial> {
    prop::collection::vec((monomial(with_t), -4i64..=4), 0..4).prop_map(|terms| {
        NormalPolynomial::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    })
}

fn nc_poly() -> impl Strategy<Value = NCPolynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, 0..4), 0u32..3, -3i64..=3),
        0..4,
    )
    .prop_map(|terms| {
        NCPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(letters, t, c)| (NCWord::new(letters, t), BigInt::from(c))),
        )
    })
}

fn x_skew() -> impl Strategy<Value = SkewPolynomial<IntPoly>> {
    prop::collection::vec(int_poly(), 0..=4).prop_map(SkewPolynomial::from_coeffs)
}

fn y_skew() -> impl Strategy<Value = SkewPolynomial<NormalPolynomial>> {
    prop::collection::vec(normal_poly(false), 0..=4).prop_map(SkewPolynomial::from_coeffs)
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("nonzero", |(a, _)| *a != 0)
        .prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

proptest! {
    #[test]
    fn delta_is_a_derivation(p in normal_poly(true), q in normal_poly(true)) {
        let lhs = (&p * &q).delta();
        let rhs = &(&p.delta() * &q) + &(&p * &q.delta());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_dx_is_a_derivation(p in int_poly(), q in int_poly()) {
        prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
    }

    #[test]
    fn abelianization_commutes(v in nc_poly(), i in 0u32..4) {
        prop_assert_eq!(v.delta().abelianize(), v.abelianize().delta());
        prop_assert_eq!(v.left_mul_y(i).abelianize(), v.abelianize().mul_y(i));
        prop_assert_eq!(v.mul_t().abelianize(), v.abelianize().mul_t());
    }

    #[test]
    fn skew_mul_associative_over_x(a in x_skew(), b in x_skew(), c in x_skew()) {
        prop_assert_eq!(skew_mul(&skew_mul(&a, &b), &c), skew_mul(&a, &skew_mul(&b, &c)));
    }

    #[test]
    fn skew_mul_associative_over_y(a in y_skew(), b in y_skew(), c in y_skew()) {
        prop_assert_eq!(skew_mul(&skew_mul(&a, &b), &c), skew_mul(&a, &skew_mul(&b, &c)));
    }

    #[test]
    fn skew_degree_is_additive(a in x_skew(), b in x_skew()) {
        let prod = skew_mul(&a, &b);
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn action_is_a_module_action(a in x_skew(), b in x_skew(), f in int_poly()) {
        prop_assert_eq!(apply(&skew_mul(&a, &b), &f), apply(&a, &apply(&b, &f)));
    }

    #[test]
    fn homogeneity(n in 0u32..7, q in rational(), t in rational()) {
        let u = u_poly(n);
        let eval = |y: &dyn Fn(u32) -> BigRational, t: &BigRational| -> BigRational {
            u.terms()
                .map(|(m, c)| {
                    let ys: BigRational = m.exponents().map(|(i, e)| num_traits::pow(y(i), e as usize)).product();
                    BigRational::from(c.clone()) * ys * num_traits::pow(t.clone(), m.t_power() as usize)
                })
                .sum()
        };
        let lhs = eval(&|i| num_traits::pow(q.clone(), i as usize), &t);
        let rhs = num_traits::pow(q.clone(), n as usize) * eval(&|_| BigRational::one(), &(&t / &q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partitions_normalize(parts in prop::collection::vec(0u32..6, 0..6), f in 1u32..4) {
        let p = Partition::from_unsorted(parts.iter().copied());
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.size(), parts.iter().sum::<u32>());
        prop_assert_eq!(p.scaled(f).divided(f), Some(p.clone()));
        prop_assert_eq!(Partition::new(p.parts().to_vec()), Ok(p));
    }

    #[test]
    fn int_poly_text_round_trip(p in int_poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<IntPoly>().unwrap(), p);
    }

    #[test]
    fn table_json_round_trip(n in 1u32..6, d in 1u32..3) {
        let table = coefficient_methods().get("binomial").unwrap().table(n, d, &Default::default()).unwrap();
        let text = table.to_json().to_string();
        prop_assert_eq!(CoeffTable::from_json(&text).unwrap(), table);
    }
}

#[test]
fn strategies_are_thread_safe() {
    fn assert_send_sync<T: Send + Sync + ?Sized>(_: &T) {}
    let backends = universal_backends();
    let methods = coefficient_methods();
    for b in backends.iter() {
        assert_send_sync(b);
    }
    for m in methods.iter() {
        assert_send_sync(m);
    }
    let tables: Vec<_> = std::thread::scope(|s| {
        (1..=4)
            .map(|n| {
                let methods = &methods;
                s.spawn(move || {
                    methods
                        .get("comtet")
                        .unwrap()
                        .table(n, 2, &Default::default())
                        .unwrap()
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .map(|h| h.join().unwrap())
            .collect()
    });
    assert_eq!(tables[3].total(), BigInt::from(576));
}
