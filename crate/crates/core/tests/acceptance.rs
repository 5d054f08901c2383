//! Acceptance criteria. One PASS/FAIL line per criterion; exits nonzero if
//! any criterion fails or runs over its time limit.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use normord::algebra::{IntPoly, NCWord, Partition};
use normord::enumerators::{
    count_partial_bijections, pd_type_counts, u_d_from_tree_tuples, u_from_shapes,
    u_from_subdiagonal, u_from_trees, Caps,
};
use normord::oracle::{
    ah_transitions, eval_u, gen_stirling_from_operator, mat_mul, power_h_zd, table_from_y_oracle,
};
use normord::special::{
    eval_faa_di_bruno, faa_di_bruno, gen_stirling, gen_stirling_arrays, gen_stirling_partition_sum,
    ode_coefficients, specialize, stirling_second, stirling_second_positional, verify_modp,
    verify_modp_d,
};
use normord::strategy::coefficient_methods;
use normord::universal::{u_poly, u_poly_d, v_poly, CoeffTable, Recurrence};

/// Every entry of the published coefficient table for n = 1..5.
const TABLE: &[(u32, &[u32], i64)] = &[
    (1, &[], 1),
    (2, &[], 1),
    (2, &[1], 1),
    (3, &[], 1),
    (3, &[1], 3),
    (3, &[2], 1),
    (3, &[1, 1], 1),
    (4, &[], 1),
    (4, &[1], 6),
    (4, &[2], 4),
    (4, &[1, 1], 7),
    (4, &[3], 1),
    (4, &[2, 1], 4),
    (4, &[1, 1, 1], 1),
    (5, &[], 1),
    (5, &[1], 10),
    (5, &[2], 10),
    (5, &[1, 1], 25),
    (5, &[3], 5),
    (5, &[2, 1], 30),
    (5, &[1, 1, 1], 15),
    (5, &[1, 1, 1, 1], 1),
    (5, &[2, 1, 1], 11),
    (5, &[2, 2], 4),
    (5, &[3, 1], 7),
    (5, &[4], 1),
];

/// The published c^{3,3} table.
const TABLE_33: &[(&[u32], i64)] = &[
    (&[], 1),
    (&[1], 9),
    (&[1, 1], 15),
    (&[2], 18),
    (&[2, 1], 42),
    (&[3], 21),
    (&[3, 1], 33),
    (&[2, 2], 18),
    (&[4], 15),
    (&[4, 1], 15),
    (&[3, 2], 15),
    (&[5], 6),
    (&[6], 1),
    (&[5, 1], 3),
    (&[4, 2], 3),
    (&[3, 3], 1),
];

const V3: &str = "y0 y1^2 t + y0^2 y2 t + 2·y0^2 y1 t^2 + y0 y1 y0 t^2 + y0^3 t^3";

#[derive(Default)]
struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        label: impl std::fmt::Display,
        got: T,
        want: T,
    ) {
        self.check(got == want, || {
            format!("{label}: got {got:?}, expected {want:?}")
        });
    }

    fn ok<T>(&mut self, label: &str, r: normord::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{label}: {e}"));
                None
            }
        }
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("weakly decreasing")
}

fn table_to_map(t: &CoeffTable) -> BTreeMap<Partition, BigInt> {
    t.entries()
        .map(|(l, _, c)| (l.clone(), c.clone()))
        .collect()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Textbook S{n,k} by the triangular recurrence.
fn textbook_s2(max: u32) -> Vec<Vec<BigInt>> {
    let size = max as usize + 2;
    let mut s = vec![vec![BigInt::zero(); size]; size];
    s[0][0] = BigInt::one();
    for n in 1..size {
        for k in 1..=n {
            s[n][k] = &s[n - 1][k - 1] + BigInt::from(k) * &s[n - 1][k];
        }
    }
    s
}

/// Normal form of (x^q ∂^d)^n as {(x power, ∂ power): coefficient}, by
/// pushing ∂ past x^a one derivative at a time.
fn operator_power(q: u32, d: u32, n: u32) -> BTreeMap<(u32, u32), BigInt> {
    let mut op = BTreeMap::from([((0u32, 0u32), BigInt::one())]);
    for _ in 0..n {
        // ∂^d · x^a ∂^b = Σ_j C(d, j) (a)_j x^{a-j} ∂^{b+d-j}
        let mut next = BTreeMap::new();
        for ((a, b), c) in &op {
            for j in 0..=d.min(*a) {
                let falling: BigInt = (0..j).map(|i| BigInt::from(a - i)).product();
                let term = c * binom(d, j) * falling;
                *next
                    .entry((a - j + q, b + d - j))
                    .or_insert_with(BigInt::zero) += term;
            }
        }
        op = next;
    }
    op.retain(|_, c| !c.is_zero());
    op
}

fn xpoly(s: &str) -> IntPoly {
    s.parse().expect("valid polynomial")
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::default();
    let caps = Caps::default();
    let methods = coefficient_methods();
    for n in 1..=5u32 {
        let want: BTreeMap<Partition, BigInt> = TABLE
            .iter()
            .filter(|(m, _, _)| *m == n)
            .map(|(_, p, c)| (part(p), big(*c)))
            .collect();
        for name in ["recurrence", "extract", "binomial", "enumeration"] {
            let method = methods.get(name).expect("registered");
            if let Some(t) = o.ok(name, method.table(n, 1, &caps)) {
                o.eq(format!("{name} n={n}"), table_to_map(&t), want.clone());
            }
        }
    }
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::default();
    let caps = Caps::default();
    let want: BTreeMap<Partition, BigInt> =
        TABLE_33.iter().map(|(p, c)| (part(p), big(*c))).collect();
    o.eq("published sum", want.values().sum::<BigInt>(), big(216));
    o.eq("entry count", want.len(), 16);
    let methods = coefficient_methods();
    for name in ["binomial", "arrays"] {
        if let Some(t) = o.ok(
            name,
            methods.get(name).expect("registered").table(3, 3, &caps),
        ) {
            o.eq(name, table_to_map(&t), want.clone());
            o.eq(format!("{name} sum"), t.total(), big(216));
        }
    }
    if let Some(u) = o.ok("tree tuples", u_d_from_tree_tuples(3, 3, &caps)) {
        if let Some(t) = o.ok("tree-tuple table", CoeffTable::from_polynomial(&u, 3, 3)) {
            o.eq("tree tuples", table_to_map(&t), want.clone());
        }
    }
    if let Some(counts) = o.ok("PD_{3,3}", pd_type_counts(3, 3, &caps)) {
        let got: BTreeMap<Partition, BigInt> = counts
            .into_iter()
            .map(|(l, c)| (l, BigInt::from(c)))
            .collect();
        o.eq("PD_{3,3} sum", got.values().sum::<BigInt>(), big(216));
        o.eq("PD_{3,3} types", got, want);
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::default();
    let caps = Caps::default();
    for n in 0..=7u32 {
        let u = u_poly(n);
        if let Some(p) = o.ok("subdiagonal", u_from_subdiagonal(n, &caps)) {
            o.check(p == u, || format!("subdiagonal maps differ at n={n}"));
        }
        if let Some(p) = o.ok("trees", u_from_trees(n, &caps)) {
            o.check(p == u, || format!("increasing trees differ at n={n}"));
        }
        if let Some(p) = o.ok("shapes", u_from_shapes(n, &caps)) {
            o.check(p == u, || format!("shapes differ at n={n}"));
        }
    }
    for n in 0..=4u32 {
        for d in 1..=3u32 {
            let Some(u) = o.ok("u_poly_d", u_poly_d(n, d)) else {
                continue;
            };
            if let Some(p) = o.ok("tree tuples", u_d_from_tree_tuples(n, d, &caps)) {
                o.check(p == u, || format!("tree tuples differ at n={n}, d={d}"));
            }
        }
    }
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::default();
    let s2 = textbook_s2(12);
    let mut rec = Recurrence::new();

    // Rising factorial.
    for n in 0..=10u32 {
        let rising = (0..n).fold(IntPoly::one(), |acc, i| {
            &acc * &IntPoly::from_i64s(&[i as i64, 1])
        });
        o.eq(
            format!("U_{n}(1, 1, ...; t)"),
            specialize(&u_poly(n), |_| BigInt::one()),
            rising,
        );
    }

    // One-column coefficients and Bell sums, via the recurrence.
    let mut bell_row = vec![BigInt::one()];
    for n in 1..=10u32 {
        let mut next = vec![bell_row.last().cloned().expect("nonempty")];
        for v in &bell_row {
            let last = next.last().cloned().expect("nonempty");
            next.push(last + v);
        }
        bell_row = next;
        let bell_n = bell_row[0].clone();
        let mut sum = BigInt::zero();
        for k in 1..=n {
            let c = rec.coeff(n, &Partition::ones(n - k));
            o.eq(
                format!("c^{n}_(1^{})", n - k),
                c.clone(),
                s2[n as usize][k as usize].clone(),
            );
            sum += c;
        }
        o.eq(format!("Bell {n}"), sum, bell_n);
    }

    // Eulerian numbers by length, against the alternating-sum formula.
    for n in 1..=8u32 {
        let table = CoeffTable::from_polynomial(&u_poly(n), n, 1).expect("canonical support");
        let mut by_len = vec![BigInt::zero(); n as usize + 1];
        for (l, _, c) in table.entries() {
            by_len[l.len() as usize + 1] += c;
        }
        for k in 1..=n {
            let formula: BigInt = (0..=k)
                .map(|j| {
                    let sign = if j % 2 == 0 { big(1) } else { big(-1) };
                    sign * binom(n + 1, j) * num_traits::pow(BigInt::from(k - j), n as usize)
                })
                .sum();
            o.eq(format!("A({n},{k})"), by_len[k as usize].clone(), formula);
            o.eq(
                format!("A({n},{k}) palindrome"),
                by_len[k as usize].clone(),
                by_len[(n + 1 - k) as usize].clone(),
            );
        }
    }

    // Falling-factorial specialization.
    for q in 1..=5u32 {
        for n in 1..=6u32 {
            let table = CoeffTable::from_polynomial(&u_poly(n), n, 1).expect("canonical support");
            let op = operator_power(q, 1, n);
            for k in 1..=n {
                let sum: BigInt = table
                    .entries()
                    .filter(|(l, _, _)| l.size() == n - k)
                    .map(|(l, _, c)| {
                        let w: BigInt = l
                            .parts()
                            .iter()
                            .map(|&p| {
                                (0..p)
                                    .map(|i| BigInt::from(q as i64 - i as i64))
                                    .product::<BigInt>()
                            })
                            .product();
                        c * w
                    })
                    .sum();
                let direct = op.get(&((q - 1) * n + k, k)).cloned().unwrap_or_default();
                o.eq(
                    format!("S({n},{k})_({q},1) vs operator"),
                    sum.clone(),
                    direct,
                );
                if let Some(g) = o.ok("gen_stirling", gen_stirling(n, k, q, 1)) {
                    o.eq(format!("S({n},{k})_({q},1) vs library"), sum, g);
                }
            }
        }
    }

    // Positional formula.
    for n in 1..=8u32 {
        for k in 1..=n {
            o.eq(
                format!("positional S{{{n},{k}}}"),
                stirling_second_positional(n, k),
                s2[n as usize][k as usize].clone(),
            );
        }
    }

    // Binomial identity and the transition matrices for h = x.
    for n in 0..=10u32 {
        for k in 0..=n {
            let rhs: BigInt = (0..=n).map(|j| binom(n, j) * stirling_second(j, k)).sum();
            o.eq(
                format!("S{{{},{}}} identity", n + 1, k + 1),
                stirling_second(n + 1, k + 1),
                rhs,
            );
        }
    }
    if let Some(t) = o.ok("transitions", ah_transitions(10, &IntPoly::x())) {
        o.check(mat_mul(&t.hy_to_normal, &t.to_hy) == t.to_normal, || {
            "B A != C at n = 10".into()
        });
        for i in 0..=10usize {
            for j in 0..=10usize {
                o.eq(
                    format!("A[{i}][{j}]"),
                    t.to_hy[i][j].clone(),
                    IntPoly::constant(binom(j as u32, i as u32)),
                );
                o.eq(
                    format!("B[{i}][{j}]"),
                    t.hy_to_normal[i][j].clone(),
                    IntPoly::constant(s2[j][i].clone()),
                );
                o.eq(
                    format!("C[{i}][{j}]"),
                    t.to_normal[i][j].clone(),
                    IntPoly::constant(s2[j + 1][i + 1].clone()),
                );
            }
        }
    }
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::default();
    for (p, m) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
        if let Some(r) = o.ok("verify_modp", verify_modp(p, m)) {
            o.check(r.is_clean(), || r.to_string());
        }
        // Independent check on the extracted table.
        let n = (p as u32).pow(m);
        let table = CoeffTable::from_polynomial(&u_poly(n), n, 1).expect("canonical support");
        for (l, _, c) in table.entries() {
            let s = l.size() as u64;
            if s != n as u64 - 1 && !s.is_multiple_of(p) {
                o.check((c % BigInt::from(p)).is_zero(), || {
                    format!("c^{n}_{l} = {c} not ≡ 0 mod {p}")
                });
            }
        }
    }
    for (p, e, top) in [(2u64, 1u32, 4u32), (3, 1, 3), (2, 2, 3)] {
        for n in 1..=top {
            if let Some(r) = o.ok("verify_modp_d", verify_modp_d(p, e, n)) {
                o.check(r.is_clean(), || r.to_string());
            }
        }
    }
    // c^{3,3}_{3λ} ≡ c^3_λ on the published values, and ≡ 0 elsewhere.
    let c3: BTreeMap<Partition, BigInt> = TABLE
        .iter()
        .filter(|(m, _, _)| *m == 3)
        .map(|(_, p, c)| (part(p), big(*c)))
        .collect();
    for (p, c) in TABLE_33 {
        let lam = part(p);
        let want = lam
            .divided(3)
            .and_then(|mu| c3.get(&mu).cloned())
            .unwrap_or_default();
        o.check(((big(*c) - &want) % big(3)).is_zero(), || {
            format!("c^(3,3)_{lam} = {c} not ≡ {want} mod 3")
        });
    }
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::default();
    for h in ["x", "x^2", "x^3", "1 + x", "2x^2 + x"].map(xpoly) {
        for n in 0..=4u32 {
            for d in 1..=3u32 {
                let Some(u) = o.ok("u_poly_d", u_poly_d(n, d)) else {
                    continue;
                };
                let direct = power_h_zd(&h, d, n);
                o.check(direct == eval_u(&u, &h), || {
                    format!("(h z^{d})^{n} differs for h = {h}")
                });
            }
        }
    }
    for n in 1..=4u32 {
        for d in 1..=2u32 {
            let Some(u) = o.ok("u_poly_d", u_poly_d(n, d)) else {
                continue;
            };
            let want = CoeffTable::from_polynomial(&u, n, d).expect("canonical support");
            if let Some(t) = o.ok("y oracle", table_from_y_oracle(n, d)) {
                o.eq(
                    format!("y oracle n={n} d={d}"),
                    table_to_map(&t),
                    table_to_map(&want),
                );
            }
        }
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::default();
    let caps = Caps::default();
    for n in 1..=3u32 {
        for q in 1..=3u32 {
            for d in 1..=q {
                let op = operator_power(q, d, n);
                for k in 0..=n * d + 1 {
                    let label = format!("S({n},{k})_({q},{d})");
                    let Some(sum) = o.ok("partition sum", gen_stirling_partition_sum(n, k, q, d))
                    else {
                        continue;
                    };
                    if let Some(a) = o.ok("arrays", gen_stirling_arrays(n, k, q, d)) {
                        o.eq(format!("{label} arrays"), a, sum.clone());
                    }
                    if let Some(b) = o.ok("bijections", count_partial_bijections(n, k, q, d, &caps))
                    {
                        o.eq(format!("{label} bijections"), BigInt::from(b), sum.clone());
                    }
                    if let Some(x) = o.ok("operator", gen_stirling_from_operator(n, k, q, d)) {
                        o.eq(format!("{label} operator"), x, sum.clone());
                    }
                    let direct = op.get(&((q - d) * n + k, k)).cloned().unwrap_or_default();
                    o.eq(format!("{label} direct expansion"), direct, sum);
                }
            }
        }
    }
    for n in 1..=4u32 {
        for q in 1..=4u32 {
            for d in 1..=4u32 {
                for k in 0..=n * q.max(d) + 1 {
                    let a = o.ok("arrays", gen_stirling_arrays(n, k, q, d));
                    let b = o.ok("arrays", gen_stirling_arrays(n, k, d, q));
                    o.eq(format!("S({n},{k}) symmetry q={q} d={d}"), a, b);
                }
            }
        }
    }
    o
}

/// Exact truncated composition `outer(inner(u))` of ordinary power series.
fn compose(outer: &[BigRational], inner: &[BigRational], order: usize) -> Vec<BigRational> {
    let mul = |a: &[BigRational], b: &[BigRational]| {
        let mut out = vec![BigRational::zero(); order];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate().take(order.saturating_sub(i)) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut out = vec![BigRational::zero(); order];
    let mut power = vec![BigRational::zero(); order];
    power[0] = BigRational::one();
    for c in outer.iter().take(order) {
        for (o, p) in out.iter_mut().zip(&power) {
            *o += c * p;
        }
        power = mul(&power, inner);
    }
    out
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::default();
    if let Some(x) = o.ok("ode", ode_coefficients(&vec![BigInt::one(); 8], 8)) {
        for (i, v) in x.iter().enumerate() {
            o.eq(format!("x_{}", i + 1), v.clone(), factorial(i as u32));
        }
    }
    // x'(u) = y(x(u)) to order u^5 for random small-integer y.
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let order = 6usize;
    for _ in 0..20 {
        let y: Vec<BigInt> = (0..order)
            .map(|_| BigInt::from(rng.gen_range(-3i64..=3)))
            .collect();
        let Some(x) = o.ok("ode", ode_coefficients(&y, order as u32)) else {
            continue;
        };
        let exp = |c: &BigInt, n: usize| BigRational::new(c.clone(), factorial(n as u32));
        let mut xs = vec![BigRational::zero(); order + 1];
        for (j, c) in x.iter().enumerate() {
            xs[j + 1] = exp(c, j + 1);
        }
        let derivative: Vec<BigRational> = (0..order)
            .map(|j| &xs[j + 1] * BigRational::from(BigInt::from(j + 1)))
            .collect();
        let ys: Vec<BigRational> = y.iter().enumerate().map(|(i, c)| exp(c, i)).collect();
        let rhs = compose(&ys, &xs[..order], order);
        o.check(derivative == rhs, || {
            format!("x' != y(x) to order u^5 for y = {y:?}")
        });
    }
    // F_n against direct differentiation of composite polynomials.
    let mut pairs = vec![(xpoly("x^3"), xpoly("x + x^2"))];
    for _ in 0..10 {
        let coeffs =
            |rng: &mut StdRng| (0..4).map(|_| rng.gen_range(-3i64..=3)).collect::<Vec<_>>();
        pairs.push((
            IntPoly::from_i64s(&coeffs(&mut rng)),
            IntPoly::from_i64s(&coeffs(&mut rng)),
        ));
    }
    for (outer, inner) in &pairs {
        for n in 0..=5u32 {
            let direct = (0..n).fold(outer.compose(inner), |p, _| p.derivative());
            o.eq(
                format!("F_{n} for {outer} ∘ {inner}"),
                eval_faa_di_bruno(&faa_di_bruno(n), outer, inner),
                direct,
            );
        }
    }
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::default();
    for n in 0..=7u32 {
        o.check(v_poly(n).abelianize() == u_poly(n), || {
            format!("V_{n} does not abelianize to U_{n}")
        });
    }
    let v3 = v_poly(3);
    o.eq("V_3 display", v3.to_string(), V3.to_string());
    o.eq("V_3 term count", v3.len(), 5);
    for (letters, t, c) in [
        (vec![0, 1, 1], 1, 1),
        (vec![0, 0, 2], 1, 1),
        (vec![0, 0, 1], 2, 2),
        (vec![0, 1, 0], 2, 1),
        (vec![0, 0, 0], 3, 1),
    ] {
        let label = format!("V_3 word {letters:?} t^{t}");
        o.eq(label, v3.coeff(&NCWord::new(letters, t)), big(c));
    }
    o
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        (
            1,
            "small coefficient tables by four methods",
            1,
            criterion_1,
        ),
        (2, "the (3,3) table by four methods", 5, criterion_2),
        (
            3,
            "polynomial equality across enumerations",
            60,
            criterion_3,
        ),
        (4, "specialization identities", 60, criterion_4),
        (5, "mod-p congruences", 30, criterion_5),
        (6, "operator oracle", 30, criterion_6),
        (7, "generalized Stirling numbers", 30, criterion_7),
        (8, "ODE and Faà di Bruno", 60, criterion_8),
        (9, "noncommutative V_n", 60, criterion_9),
    ];
    let mut failed = 0;
    for (id, title, limit_s, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit_s);
        let ok = outcome.failures.is_empty() && elapsed <= limit;
        println!(
            "{} {id}: {title} ({} checks, {:.3} s, limit {limit_s} s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.checks,
            elapsed.as_secs_f64()
        );
        if elapsed > limit {
            println!("    over the time limit");
        }
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
        if !ok {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
