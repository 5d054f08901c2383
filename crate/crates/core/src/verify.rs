//! Named verification suites that cross-check every computation path against
//! the others and against the classical sequences.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::numbers::{binomial, factorial, falling_factorial, is_prime};
use crate::algebra::{partitions_of, IntPoly, NormalPolynomial, Partition};
use crate::enumerators::{
    count_partial_bijections, count_rook_placements, gen_stirling_by_bijections, pd_type_counts,
    staircase_board, v_from_trees, Caps,
};
use crate::error::{Error, Result};
use crate::oracle::{
    ah_transitions, apply, eval_u, gen_stirling_from_operator, mat_mul, power_h_zd,
    table_from_y_oracle,
};
use crate::special::{
    bell, eulerian, faa_di_bruno, gen_stirling, gen_stirling_arrays, gen_stirling_k_range,
    gen_stirling_partition_sum, ode_coefficients, ode_residual, rising_factorial, specialize,
    stirling_first, stirling_second, stirling_second_positional, verify_faa_di_bruno, verify_modp,
    verify_modp_d,
};
use crate::strategy::{coefficient_methods, universal_backends, Named, Registry};
use crate::universal::{u_poly, u_poly_d, v_poly, CoeffTable};

/// Known coefficients `c^n_λ` for `n <= 5`, `d = 1`.
pub const SMALL_TABLE: &[(u32, &[u32], u64)] = &[
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

/// Known coefficients `c^{3,3}_λ`.
pub const TABLE_3_3: &[(&[u32], u64)] = &[
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

/// The word display of `V_3`.
pub const V3_DISPLAY: &str = "y0 y1^2 t + y0^2 y2 t + 2·y0^2 y1 t^2 + y0 y1 y0 t^2 + y0^3 t^3";

pub fn reference_table(n: u32) -> CoeffTable {
    let mut table = CoeffTable::new(n, 1);
    for &(m, parts, c) in SMALL_TABLE {
        if m == n {
            table.insert(
                Partition::from_unsorted(parts.iter().copied()),
                BigInt::from(c),
            );
        }
    }
    table
}

pub fn reference_table_3_3() -> CoeffTable {
    let mut table = CoeffTable::new(3, 3);
    for &(parts, c) in TABLE_3_3 {
        table.insert(
            Partition::from_unsorted(parts.iter().copied()),
            BigInt::from(c),
        );
    }
    table
}

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks", self.name, self.checks)?;
        if self.skipped > 0 {
            write!(f, ", {} skipped over caps", self.skipped)?;
        }
        if !self.passed() {
            write!(f, ", {} failed", self.failures.len())?;
        }
        f.write_str(")")?;
        for failure in &self.failures {
            write!(f, "\n  - {failure}")?;
        }
        Ok(())
    }
}

/// Collects check outcomes for a report.
#[derive(Debug, Default)]
pub struct Checker {
    checks: usize,
    skipped: usize,
    failures: Vec<String>,
}

impl Checker {
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn eq<T: PartialEq + fmt::Display>(&mut self, label: impl fmt::Display, got: &T, want: &T) {
        self.check(got == want, || {
            format!("{label}: got {got}, expected {want}")
        });
    }

    /// Runs `f`, counting a cap overrun as skipped rather than failed.
    pub fn within_caps<T>(&mut self, f: impl FnOnce() -> Result<T>) -> Result<Option<T>> {
        match f() {
            Ok(v) => Ok(Some(v)),
            Err(Error::CapExceeded { .. }) => {
                self.skipped += 1;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(self, name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            checks: self.checks,
            skipped: self.skipped,
            failures: self.failures,
        }
    }
}

pub trait Suite: Named + Send + Sync {
    /// `max_n` scales the suite; each suite clamps it to what it can afford.
    fn run(&self, max_n: u32, caps: &Caps) -> Result<SuiteReport>;
}

type SuiteFn = fn(u32, &Caps, &mut Checker) -> Result<()>;

struct FnSuite {
    name: &'static str,
    summary: &'static str,
    body: SuiteFn,
}

impl Named for FnSuite {
    fn name(&self) -> &'static str {
        self.name
    }

    fn summary(&self) -> &'static str {
        self.summary
    }
}

impl Suite for FnSuite {
    fn run(&self, max_n: u32, caps: &Caps) -> Result<SuiteReport> {
        let mut checker = Checker::default();
        (self.body)(max_n, caps, &mut checker)?;
        Ok(checker.finish(self.name))
    }
}

pub fn suites() -> Registry<dyn Suite> {
    let mut r: Registry<dyn Suite> = Registry::new("suite");
    let all: [(&'static str, &'static str, SuiteFn); 16] = [
        (
            "reference",
            "known tables for n <= 5 and (n, d) = (3, 3), every method",
            reference,
        ),
        (
            "methods",
            "all coefficient methods agree and sum to (n!)^d",
            methods,
        ),
        ("backends", "all polynomial backends agree", backends),
        (
            "stirling",
            "Stirling, Bell, rising factorial and positional specializations",
            stirling,
        ),
        (
            "eulerian",
            "Eulerian numbers, palindromicity and the two q-specializations",
            eulerian_suite,
        ),
        (
            "genstirling",
            "generalized Stirling paths, operator extraction and symmetry",
            genstirling,
        ),
        (
            "bijections",
            "partial bijections against rook placements and formulas",
            bijections,
        ),
        ("modp", "vanishing mod p of c^{p^m}_λ", modp),
        ("modp-d", "congruences for d = p^e", modp_d),
        (
            "oracle",
            "operator powers against substituted U_{n,d}",
            oracle,
        ),
        (
            "knuth",
            "binomial Stirling identity and basis transitions",
            knuth,
        ),
        ("ode", "series solution of x' = y(x)", ode),
        (
            "faa",
            "Faà di Bruno polynomials against direct differentiation",
            faa,
        ),
        (
            "noncommutative",
            "V_n words and their abelianization",
            noncommutative,
        ),
        (
            "pd-sums",
            "type counts of partial maps sum to (n!)^d and ((n-1)!)^d",
            pd_sums,
        ),
        (
            "homogeneity",
            "U_n(1, q, q^2, ...; t) = q^n U_n(1, 1, ...; t/q)",
            homogeneity,
        ),
    ];
    for (name, summary, body) in all {
        r.register(Box::new(FnSuite {
            name,
            summary,
            body,
        }));
    }
    r
}

/// Runs the named suite, or every suite for `"all"`.
pub fn run_suites(name: &str, max_n: u32, caps: &Caps) -> Result<Vec<SuiteReport>> {
    let registry = suites();
    if name == "all" {
        registry.iter().map(|s| s.run(max_n, caps)).collect()
    } else {
        Ok(vec![registry.get(name)?.run(max_n, caps)?])
    }
}

fn compare_tables(c: &mut Checker, label: &str, got: &CoeffTable, want: &CoeffTable) {
    let n = want.n();
    let d = want.d();
    c.check(got.len() == want.len(), || {
        format!(
            "{label} (n={n}, d={d}): {} entries, expected {}",
            got.len(),
            want.len()
        )
    });
    for (lam, _, v) in want.entries() {
        let g = got.get(lam);
        c.check(&g == v, || {
            format!(
                "{label} (n={n}, d={d}) at {}: got {g}, expected {v}",
                lam.to_tuple_string()
            )
        });
    }
}

fn reference(_: u32, caps: &Caps, c: &mut Checker) -> Result<()> {
    let methods = coefficient_methods();
    for n in 1..=5 {
        let want = reference_table(n);
        for m in methods.iter() {
            if let Some(t) = c.within_caps(|| m.table(n, 1, caps))? {
                compare_tables(c, m.name(), &t, &want);
            }
        }
    }
    let want = reference_table_3_3();
    c.eq("sum of c^{3,3}", &want.total(), &BigInt::from(216));
    for m in methods.iter().filter(|m| m.supports(3)) {
        if let Some(t) = c.within_caps(|| m.table(3, 3, caps))? {
            compare_tables(c, m.name(), &t, &want);
        }
    }
    Ok(())
}

fn methods(max_n: u32, caps: &Caps, c: &mut Checker) -> Result<()> {
    let registry = coefficient_methods();
    for d in 1..=3u32 {
        let top = if d == 1 { max_n } else { max_n.min(4) };
        for n in 1..=top {
            let base = registry.get("extract")?.table(n, d, caps)?;
            c.check(base.check_invariants().is_ok(), || {
                format!(
                    "extract (n={n}, d={d}): {}",
                    base.check_invariants().unwrap_err()
                )
            });
            c.eq(
                format!("total (n={n}, d={d})"),
                &base.total(),
                &num_traits::pow(factorial(n), d as usize),
            );
            for m in registry
                .iter()
                .filter(|m| m.supports(d) && m.name() != "extract")
            {
                if let Some(t) = c.within_caps(|| m.table(n, d, caps))? {
                    compare_tables(c, m.name(), &t, &base);
                }
            }
        }
    }
    Ok(())
}

fn backends(max_n: u32, caps: &Caps, c: &mut Checker) -> Result<()> {
    let registry = universal_backends();
    for d in 1..=3u32 {
        let top = if d == 1 { max_n.min(7) } else { max_n.min(4) };
        for n in 0..=top {
            let base = u_poly_d(n, d)?;
            for b in registry.iter().filter(|b| b.supports(d)) {
                if let Some(p) = c.within_caps(|| b.compute(n, d, caps))? {
                    c.check(p == base, || {
                        format!("backend {} differs at n={n}, d={d}", b.name())
                    });
                }
            }
        }
    }
    Ok(())
}

/// Textbook recurrences, used only as oracles.
fn textbook_stirling(max_n: u32) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let size = max_n as usize + 2;
    let mut first = vec![vec![BigInt::zero(); size]; size];
    let mut second = vec![vec![BigInt::zero(); size]; size];
    first[0][0] = BigInt::one();
    second[0][0] = BigInt::one();
    for n in 1..size {
        for k in 1..=n {
            first[n][k] = &first[n - 1][k - 1] + &first[n - 1][k] * BigInt::from(n - 1);
            second[n][k] = &second[n - 1][k - 1] + &second[n - 1][k] * BigInt::from(k);
        }
    }
    (first, second)
}

fn stirling(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    let top = max_n.max(10);
    let (first, second) = textbook_stirling(top);
    for n in 1..=top {
        let u = u_poly(n);
        c.check(
            specialize(&u, |_| BigInt::one()) == rising_factorial(n),
            || format!("U_{n} at y = 1 is not the rising factorial"),
        );
        let touchard = specialize(&u, |i| {
            if i <= 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let mut bell_sum = BigInt::zero();
        for k in 1..=n {
            let (nu, ku) = (n as usize, k as usize);
            let s2 = stirling_second(n, k);
            c.eq(format!("S{{{n},{k}}}"), &s2, &second[nu][ku]);
            c.eq(format!("Touchard t^{k} of U_{n}"), &touchard.coeff(ku), &s2);
            c.eq(
                format!("c(n={n},k={k})"),
                &stirling_first(n, k),
                &first[nu][ku],
            );
            if n <= 8 {
                c.eq(
                    format!("positional S{{{n},{k}}}"),
                    &stirling_second_positional(n, k),
                    &s2,
                );
            }
            if n >= 2 {
                let rec =
                    stirling_second(n - 1, k - 1) + BigInt::from(k) * stirling_second(n - 1, k);
                c.eq(format!("S{{{n},{k}}} recurrence"), &s2, &rec);
            }
            bell_sum += s2;
        }
        c.eq(format!("B_{n}"), &bell(n), &bell_sum);
    }
    // Falling-factorial specialization gives S(n,k)_{q,1}.
    for q in 1..=5u32 {
        for n in 1..=max_n.min(6) {
            let table = u_table(n);
            for k in gen_stirling_k_range(n, q, 1) {
                let Some(size) = n.checked_sub(k) else {
                    continue;
                };
                let sum: BigInt = partitions_of(size)
                    .iter()
                    .map(|lam| {
                        let w: BigInt = lam
                            .parts()
                            .iter()
                            .map(|&p| falling_factorial(q as i64, p))
                            .product();
                        table.get(lam) * w
                    })
                    .sum();
                c.eq(
                    format!("S({n},{k})_{{{q},1}} by falling factorials"),
                    &sum,
                    &gen_stirling(n, k, q, 1)?,
                );
            }
        }
    }
    Ok(())
}

fn u_table(n: u32) -> CoeffTable {
    CoeffTable::from_polynomial(&u_poly(n), n, 1).expect("U_n has the canonical support")
}

/// `Σ_λ c_λ q^{f(λ)}` as a polynomial in `q`.
fn q_polynomial(table: &CoeffTable, exponent: impl Fn(&Partition) -> usize) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); table.n() as usize * table.d() as usize + 2];
    for (lam, _, v) in table.entries() {
        coeffs[exponent(lam)] += v;
    }
    IntPoly::from_coeffs(coeffs)
}

fn eulerian_suite(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    let top = max_n.max(8);
    // A(n, k) = k A(n-1, k) + (n-k+1) A(n-1, k-1), k = 1..n.
    let mut prev = vec![BigInt::zero(), BigInt::one()];
    for n in 1..=top {
        if n > 1 {
            let mut row = vec![BigInt::zero(); n as usize + 1];
            for k in 1..=n as usize {
                let stay = prev.get(k).cloned().unwrap_or_default() * BigInt::from(k);
                let rise = &prev[k - 1] * BigInt::from(n as usize - k + 1);
                row[k] = stay + rise;
            }
            prev = row;
        }
        let table = u_table(n);
        let mut a_n = vec![BigInt::zero(); n as usize + 1];
        for k in 1..=n {
            let e = eulerian(n, k);
            c.eq(format!("A({n},{k})"), &e, &prev[k as usize]);
            c.eq(
                format!("A({n},{k}) palindromic"),
                &e,
                &eulerian(n, n + 1 - k),
            );
            a_n[k as usize] = e;
        }
        let a_n = IntPoly::from_coeffs(a_n);
        let by_y0 = q_polynomial(&table, |lam| (n - lam.len()) as usize);
        let by_rest = q_polynomial(&table, |lam| lam.len() as usize + 1);
        c.check(by_y0 == a_n, || {
            format!("U_{n}(q, 1, 1, ...; 1) = {by_y0}, expected {a_n}")
        });
        c.check(by_rest == a_n, || {
            format!("q U_{n}(1, q, q, ...; 1) = {by_rest}, expected {a_n}")
        });
    }
    Ok(())
}

fn genstirling(max_n: u32, caps: &Caps, c: &mut Checker) -> Result<()> {
    for n in 1..=max_n.min(3) {
        for q in 1..=3u32 {
            for d in 1..=q {
                for k in 0..=n * d + 1 {
                    let label = format!("S({n},{k})_{{{q},{d}}}");
                    let sum = gen_stirling_partition_sum(n, k, q, d)?;
                    c.eq(
                        format!("{label} arrays"),
                        &gen_stirling_arrays(n, k, q, d)?,
                        &sum,
                    );
                    c.eq(
                        format!("{label} operator"),
                        &gen_stirling_from_operator(n, k, q, d)?,
                        &sum,
                    );
                    if let Some(b) =
                        c.within_caps(|| gen_stirling_by_bijections(n, k, q, d, caps))?
                    {
                        c.eq(format!("{label} bijections"), &BigInt::from(b), &sum);
                    }
                }
            }
        }
    }
    for n in 1..=max_n.min(4) {
        for q in 1..=4u32 {
            for d in 1..=4u32 {
                for k in 0..=n * q.max(d) + 1 {
                    let label = format!("S({n},{k})_{{{q},{d}}}");
                    let a = gen_stirling_arrays(n, k, q, d)?;
                    c.eq(
                        format!("{label} symmetry"),
                        &a,
                        &gen_stirling_arrays(n, k, d, q)?,
                    );
                    c.eq(
                        format!("{label} operator"),
                        &gen_stirling_from_operator(n, k, q, d)?,
                        &a,
                    );
                }
            }
        }
    }
    Ok(())
}

fn bijections(max_n: u32, caps: &Caps, c: &mut Checker) -> Result<()> {
    for n in 1..=max_n.min(4) {
        for d in 1..=2u32 {
            for q in 1..=3u32 {
                let board = staircase_board(n, q, d);
                for k in 0..=n * d {
                    let rooks = count_rook_placements(&board, n * d - k);
                    let label = format!("n={n} k={k} q={q} d={d}");
                    if let Some(b) = c.within_caps(|| count_partial_bijections(n, k, q, d, caps))? {
                        c.eq(format!("rooks vs bijections {label}"), &rooks, &b);
                    }
                    if q >= d {
                        let s = BigInt::from(rooks);
                        c.eq(
                            format!("rooks vs S {label}"),
                            &s,
                            &gen_stirling(n, k, q, d)?,
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn prime_powers(limit: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in (2..=limit as u64).filter(|&p| is_prime(p)) {
        let mut m = 1;
        while p.pow(m) <= limit as u64 {
            out.push((p, m));
            m += 1;
        }
    }
    out
}

fn modp(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    for (p, m) in prime_powers(max_n.max(9)) {
        let report = verify_modp(p, m)?;
        c.check(report.is_clean(), || report.to_string());
    }
    Ok(())
}

fn modp_d(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    for (p, e, top) in [(2u64, 1u32, 4u32), (3, 1, 3), (2, 2, 3)] {
        for n in 1..=top.min(max_n) {
            let report = verify_modp_d(p, e, n)?;
            c.check(report.is_clean(), || report.to_string());
        }
    }
    // The (3, 3) table against c^3 directly.
    let t33 = reference_table_3_3();
    let t3 = u_table(3);
    for (lam, _, v) in t33.entries() {
        let want = lam.divided(3).map_or_else(BigInt::zero, |mu| t3.get(&mu));
        c.check(((v - &want) % BigInt::from(3)).is_zero(), || {
            format!(
                "c^{{3,3}}_{} = {v} not ≡ {want} mod 3",
                lam.to_tuple_string()
            )
        });
    }
    Ok(())
}

pub fn sample_h() -> Vec<IntPoly> {
    ["x", "x^2", "x^3", "1 + x", "2x^2 + x"]
        .iter()
        .map(|s| s.parse().expect("valid polynomial"))
        .collect()
}

fn oracle(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    let top = max_n.min(4);
    for h in sample_h() {
        for d in 1..=3 {
            for n in 0..=top {
                let direct = power_h_zd(&h, d, n);
                let via_u = eval_u(&u_poly_d(n, d)?, &h);
                c.check(direct == via_u, || {
                    format!("(h z^{d})^{n} for h = {h}: {direct} vs {via_u}")
                });
            }
        }
        let f: IntPoly = "x^3 - 2x + 5".parse().expect("valid polynomial");
        for n in 0..=top {
            let lhs = apply(&eval_u(&u_poly(n), &h), &f);
            let rhs = apply(&power_h_zd(&h, 1, n), &f);
            c.eq(format!("action of (h z)^{n}, h = {h}"), &lhs, &rhs);
        }
    }
    for d in 1..=2 {
        for n in 1..=top {
            let t = table_from_y_oracle(n, d)?;
            let want = CoeffTable::from_polynomial(&u_poly_d(n, d)?, n, d)?;
            compare_tables(c, "y-oracle", &t, &want);
        }
    }
    for m in 0..=5u32 {
        let xm = IntPoly::monomial(BigInt::one(), m as usize);
        let got = apply(&power_h_zd(&IntPoly::x(), 1, 3), &xm);
        c.eq(
            format!("(x z)^3 x^{m}"),
            &got,
            &xm.scale(&BigInt::from(m.pow(3))),
        );
    }
    Ok(())
}

fn knuth(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    let top = max_n.max(10);
    for n in 0..=top {
        for k in 0..=n {
            let rhs: BigInt = (0..=n)
                .map(|j| binomial(n as i64, j as i64) * stirling_second(j, k))
                .sum();
            c.eq(
                format!("S{{{},{}}}", n + 1, k + 1),
                &stirling_second(n + 1, k + 1),
                &rhs,
            );
        }
    }
    for n in [top.min(5), top] {
        let t = ah_transitions(n, &IntPoly::x())?;
        c.check(mat_mul(&t.hy_to_normal, &t.to_hy) == t.to_normal, || {
            format!("transition matrices for h = x, n = {n} do not compose")
        });
        for i in 0..=n {
            for j in 0..=n {
                let (iu, ju) = (i as usize, j as usize);
                let want = [
                    binomial(j as i64, i as i64),
                    stirling_second(j, i),
                    stirling_second(j + 1, i + 1),
                ];
                let got = [
                    &t.to_hy[iu][ju],
                    &t.hy_to_normal[iu][ju],
                    &t.to_normal[iu][ju],
                ];
                for (g, w) in got.into_iter().zip(want) {
                    c.eq(
                        format!("transition entry ({i},{j}), n = {n}"),
                        g,
                        &IntPoly::constant(w),
                    );
                }
            }
        }
    }
    for h in sample_h() {
        let t = ah_transitions(4, &h)?;
        c.check(t.is_consistent(), || {
            format!("transition matrices for h = {h} do not compose")
        });
    }
    Ok(())
}

pub fn sample_y() -> Vec<Vec<BigInt>> {
    [
        [1i64, 1, 1, 1, 1, 1, 1, 1],
        [2, -1, 3, 0, 1, -2, 1, 0],
        [1, 2, 0, -3, 1, 1, -1, 2],
        [-1, 0, 2, 1, -2, 3, 0, 1],
    ]
    .iter()
    .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
    .collect()
}

fn ode(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    let top = max_n.max(8);
    let ones = vec![BigInt::one(); top as usize];
    let x = ode_coefficients(&ones, top)?;
    for (i, v) in x.iter().enumerate() {
        c.eq(format!("x_{} for y = e^u", i + 1), v, &factorial(i as u32));
    }
    for y in sample_y() {
        let x = ode_coefficients(&y, 6)?;
        let res = ode_residual(&y, &x, 6);
        c.check(res.iter().all(Zero::is_zero), || {
            format!("x' - y(x) != 0 to order u^5 for y = {y:?}: {res:?}")
        });
    }
    Ok(())
}

fn faa(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    c.eq(
        "F_2",
        &faa_di_bruno(2).to_string(),
        &"y2 t + y1^2 t^2".to_string(),
    );
    let pairs = [
        ("x^3", "x + x^2"),
        ("x^4 + 2x", "3x - x^3"),
        ("1 + x + x^5", "2 + x^2"),
    ];
    for (outer, inner) in pairs {
        let (o, i): (IntPoly, IntPoly) = (outer.parse()?, inner.parse()?);
        for n in 0..=max_n.max(5) {
            c.check(verify_faa_di_bruno(n, &o, &i), || {
                format!("F_{n} fails for outer {outer}, inner {inner}")
            });
        }
    }
    Ok(())
}

fn noncommutative(max_n: u32, caps: &Caps, c: &mut Checker) -> Result<()> {
    c.eq("V_3", &v_poly(3).to_string(), &V3_DISPLAY.to_string());
    for n in 0..=max_n.min(7) {
        let v = v_poly(n);
        c.check(v.abelianize() == u_poly(n), || {
            format!("V_{n} does not abelianize to U_{n}")
        });
        if let Some(t) = c.within_caps(|| v_from_trees(n, caps))? {
            c.check(t == v, || format!("V_{n} from trees differs"));
        }
    }
    Ok(())
}

fn pd_sums(max_n: u32, caps: &Caps, c: &mut Checker) -> Result<()> {
    for d in 1..=3u32 {
        for n in 1..=max_n.min(if d == 1 { max_n } else { 4 }) {
            let table = CoeffTable::from_polynomial(&u_poly_d(n, d)?, n, d)?;
            let top: BigInt = table
                .entries()
                .filter(|(lam, _, _)| lam.size() == (n - 1) * d)
                .map(|(_, _, v)| v.clone())
                .sum();
            let fd = |m: u32| num_traits::pow(factorial(m), d as usize);
            c.eq(format!("top-size sum (n={n}, d={d})"), &top, &fd(n - 1));
            c.eq(format!("total (n={n}, d={d})"), &table.total(), &fd(n));
            if let Some(counts) = c.within_caps(|| pd_type_counts(n, d, caps))? {
                let total: BigUint = counts.values().sum();
                c.eq(
                    format!("partial maps (n={n}, d={d})"),
                    &BigInt::from(total),
                    &fd(n),
                );
                for (lam, cnt) in &counts {
                    c.eq(
                        format!("type {} (n={n}, d={d})", lam.to_tuple_string()),
                        &BigInt::from(cnt.clone()),
                        &table.get(lam),
                    );
                }
            }
        }
    }
    Ok(())
}

fn homogeneity(max_n: u32, _: &Caps, c: &mut Checker) -> Result<()> {
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let qs = [r(2, 1), r(3, 1), r(1, 2), r(-5, 3)];
    let ts = [r(1, 1), r(7, 2), r(-2, 1)];
    for n in 0..=max_n {
        let u = u_poly(n);
        for q in &qs {
            for t in &ts {
                let scaled = eval_rational(&u, |i| num_traits::pow(q.clone(), i as usize), t);
                let plain = eval_rational(&u, |_| BigRational::one(), &(t / q));
                let rhs = num_traits::pow(q.clone(), n as usize) * plain;
                c.check(scaled == rhs, || {
                    format!("homogeneity fails at n={n}, q={q}, t={t}")
                });
            }
        }
    }
    Ok(())
}

fn eval_rational(
    u: &NormalPolynomial,
    y: impl Fn(u32) -> BigRational,
    t: &BigRational,
) -> BigRational {
    u.terms()
        .map(|(m, coef)| {
            let ys: BigRational = m
                .exponents()
                .map(|(i, e)| num_traits::pow(y(i), e as usize))
                .product();
            BigRational::from(coef.clone()) * ys * num_traits::pow(t.clone(), m.t_power() as usize)
        })
        .sum()
}
