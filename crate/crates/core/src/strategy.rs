//! Named, interchangeable ways of computing `U_{n,d}` and its coefficients,
//! selected at runtime.

use num_bigint::{BigInt, BigUint};

use crate::algebra::{NormalPolynomial, Partition};
use crate::enumerators::{
    count_pd_by_type, pd_type_counts, u_d_from_tree_tuples, u_from_partial_maps, u_from_shapes,
    u_from_subdiagonal, u_from_trees, Caps,
};
use crate::error::{Error, Result};
use crate::oracle::table_from_y_oracle;
use crate::universal::{
    coeff_arrays, coeff_binomial, coeff_comtet, u_poly_d, u_umbral, CoeffTable, Recurrence,
};

/// Strategies of one kind, in registration order.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<Box<T>>,
}

/// Anything a registry can hold.
pub trait Named {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: Vec::new(),
        }
    }

    /// Adds a strategy, replacing any previous one of the same name.
    pub fn register(&mut self, strategy: Box<T>) {
        self.entries.retain(|s| s.name() != strategy.name());
        self.entries.push(strategy);
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|s| s.as_ref())
    }
}

/// A way of producing the whole polynomial `U_{n,d}`.
pub trait UniversalBackend: Named + Send + Sync {
    fn supports(&self, d: u32) -> bool;
    fn compute(&self, n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial>;
}

/// A way of producing individual coefficients `c^{n,d}_λ` or whole tables.
pub trait CoefficientMethod: Named + Send + Sync {
    fn supports(&self, d: u32) -> bool {
        d >= 1
    }

    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, caps: &Caps) -> Result<BigInt>;

    fn table(&self, n: u32, d: u32, caps: &Caps) -> Result<CoeffTable> {
        self.check(d)?;
        let mut table = CoeffTable::new(n, d);
        for lambda in CoeffTable::expected_support(n, d) {
            let c = self.coefficient(n, d, &lambda, caps)?;
            table.insert(lambda, c);
        }
        Ok(table)
    }

    fn check(&self, d: u32) -> Result<()> {
        if self.supports(d) {
            Ok(())
        } else {
            Err(Error::UnsupportedMethod {
                method: self.name().to_string(),
                d,
            })
        }
    }
}

macro_rules! named {
    ($ty:ident, $name:literal, $summary:literal) => {
        pub struct $ty;

        impl Named for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn summary(&self) -> &'static str {
                $summary
            }
        }
    };
}

fn require(name: &str, ok: bool, d: u32) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedMethod {
            method: name.to_string(),
            d,
        })
    }
}

named!(Recursive, "recursive", "iterate y0 (Δ + ρ_t)^d from 1");
named!(
    Umbral,
    "umbral",
    "expand Π (x_0 + ... + x_i) and lower exponents to indices (d = 1)"
);
named!(
    Subdiagonal,
    "subdiagonal",
    "sum over subdiagonal maps f(i) < i (d = 1)"
);
named!(
    PartialMaps,
    "partial-maps",
    "sum over subdiagonal partial maps on [n] × [d]"
);
named!(
    Trees,
    "trees",
    "sum over increasing trees by outdegree (d = 1)"
);
named!(
    TreeTuples,
    "tree-tuples",
    "sum over d-tuples of increasing trees"
);
named!(
    Shapes,
    "shapes",
    "sum over unlabeled shapes weighted by labeling counts (d = 1)"
);
named!(YOracle, "oracle", "normal-order (y0 z^d)^n in ℤ[y][z; Δ]");

impl UniversalBackend for Recursive {
    fn supports(&self, d: u32) -> bool {
        d >= 1
    }

    fn compute(&self, n: u32, d: u32, _caps: &Caps) -> Result<NormalPolynomial> {
        u_poly_d(n, d)
    }
}

impl UniversalBackend for Umbral {
    fn supports(&self, d: u32) -> bool {
        d == 1
    }

    fn compute(&self, n: u32, d: u32, _caps: &Caps) -> Result<NormalPolynomial> {
        require(self.name(), self.supports(d), d)?;
        Ok(u_umbral(n))
    }
}

impl UniversalBackend for Subdiagonal {
    fn supports(&self, d: u32) -> bool {
        d == 1
    }

    fn compute(&self, n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial> {
        require(self.name(), self.supports(d), d)?;
        u_from_subdiagonal(n, caps)
    }
}

impl UniversalBackend for PartialMaps {
    fn supports(&self, d: u32) -> bool {
        d >= 1
    }

    fn compute(&self, n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial> {
        require(self.name(), self.supports(d), d)?;
        u_from_partial_maps(n, d, caps)
    }
}

impl UniversalBackend for Trees {
    fn supports(&self, d: u32) -> bool {
        d == 1
    }

    fn compute(&self, n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial> {
        require(self.name(), self.supports(d), d)?;
        u_from_trees(n, caps)
    }
}

impl UniversalBackend for TreeTuples {
    fn supports(&self, d: u32) -> bool {
        d >= 1
    }

    fn compute(&self, n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial> {
        require(self.name(), self.supports(d), d)?;
        u_d_from_tree_tuples(n, d, caps)
    }
}

impl UniversalBackend for Shapes {
    fn supports(&self, d: u32) -> bool {
        d == 1
    }

    fn compute(&self, n: u32, d: u32, caps: &Caps) -> Result<NormalPolynomial> {
        require(self.name(), self.supports(d), d)?;
        u_from_shapes(n, caps)
    }
}

impl UniversalBackend for YOracle {
    fn supports(&self, d: u32) -> bool {
        d >= 1
    }

    fn compute(&self, n: u32, d: u32, _caps: &Caps) -> Result<NormalPolynomial> {
        require(self.name(), self.supports(d), d)?;
        if n == 0 {
            return Ok(NormalPolynomial::one());
        }
        Ok(table_from_y_oracle(n, d)?.to_polynomial())
    }
}

/// Every polynomial backend, in a fixed order.
pub fn universal_backends() -> Registry<dyn UniversalBackend> {
    let mut r: Registry<dyn UniversalBackend> = Registry::new("backend");
    r.register(Box::new(Recursive));
    r.register(Box::new(Umbral));
    r.register(Box::new(Subdiagonal));
    r.register(Box::new(PartialMaps));
    r.register(Box::new(Trees));
    r.register(Box::new(TreeTuples));
    r.register(Box::new(Shapes));
    r.register(Box::new(YOracle));
    r
}

named!(
    Extract,
    "extract",
    "read coefficients off the recursively built U_{n,d}"
);
named!(
    RecurrenceMethod,
    "recurrence",
    "memoized coefficient recurrence (d = 1)"
);
named!(
    Binomial,
    "binomial",
    "sum of binomial products over arrangements of λ"
);
named!(
    Comtet,
    "comtet",
    "falling-factorial sum with prefix conditions, exact rationals"
);
named!(
    Arrays,
    "arrays",
    "sum over lower-triangular arrays, exact rationals"
);
named!(
    Enumeration,
    "enumeration",
    "count subdiagonal partial maps of type λ"
);
named!(TreeCount, "trees", "expand over tuples of increasing trees");
named!(
    OracleMethod,
    "oracle",
    "normal-order (y0 z^d)^n in ℤ[y][z; Δ]"
);

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::OutOfRange(
            "coefficients are indexed by n >= 1".into(),
        ))
    } else {
        Ok(())
    }
}

fn from_table(table: CoeffTable, lambda: &Partition) -> BigInt {
    table.get(lambda)
}

impl CoefficientMethod for Extract {
    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, caps: &Caps) -> Result<BigInt> {
        Ok(from_table(self.table(n, d, caps)?, lambda))
    }

    fn table(&self, n: u32, d: u32, _caps: &Caps) -> Result<CoeffTable> {
        check_n(n)?;
        CoeffTable::from_polynomial(&u_poly_d(n, d)?, n, d)
    }
}

impl CoefficientMethod for RecurrenceMethod {
    fn supports(&self, d: u32) -> bool {
        d == 1
    }

    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, _caps: &Caps) -> Result<BigInt> {
        self.check(d)?;
        check_n(n)?;
        Ok(Recurrence::new().coeff(n, lambda))
    }

    fn table(&self, n: u32, d: u32, _caps: &Caps) -> Result<CoeffTable> {
        self.check(d)?;
        check_n(n)?;
        Ok(Recurrence::new().table(n))
    }
}

impl CoefficientMethod for Binomial {
    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, _caps: &Caps) -> Result<BigInt> {
        self.check(d)?;
        check_n(n)?;
        Ok(coeff_binomial(n, d, lambda))
    }
}

impl CoefficientMethod for Comtet {
    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, _caps: &Caps) -> Result<BigInt> {
        self.check(d)?;
        check_n(n)?;
        coeff_comtet(n, d, lambda)
    }
}

impl CoefficientMethod for Arrays {
    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, _caps: &Caps) -> Result<BigInt> {
        self.check(d)?;
        check_n(n)?;
        coeff_arrays(n, d, lambda)
    }
}

impl CoefficientMethod for Enumeration {
    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, caps: &Caps) -> Result<BigInt> {
        self.check(d)?;
        check_n(n)?;
        Ok(BigInt::from(count_pd_by_type(n, d, lambda, caps)?))
    }

    fn table(&self, n: u32, d: u32, caps: &Caps) -> Result<CoeffTable> {
        self.check(d)?;
        check_n(n)?;
        let mut table = CoeffTable::new(n, d);
        for (lambda, count) in pd_type_counts(n, d, caps)? {
            table.insert(lambda, BigInt::from(count));
        }
        Ok(table)
    }
}

impl CoefficientMethod for TreeCount {
    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, caps: &Caps) -> Result<BigInt> {
        Ok(from_table(self.table(n, d, caps)?, lambda))
    }

    fn table(&self, n: u32, d: u32, caps: &Caps) -> Result<CoeffTable> {
        self.check(d)?;
        check_n(n)?;
        CoeffTable::from_polynomial(&u_d_from_tree_tuples(n, d, caps)?, n, d)
    }
}

impl CoefficientMethod for OracleMethod {
    fn coefficient(&self, n: u32, d: u32, lambda: &Partition, caps: &Caps) -> Result<BigInt> {
        Ok(from_table(self.table(n, d, caps)?, lambda))
    }

    fn table(&self, n: u32, d: u32, _caps: &Caps) -> Result<CoeffTable> {
        self.check(d)?;
        check_n(n)?;
        table_from_y_oracle(n, d)
    }
}

/// Every coefficient method, in a fixed order.
pub fn coefficient_methods() -> Registry<dyn CoefficientMethod> {
    let mut r: Registry<dyn CoefficientMethod> = Registry::new("coefficient method");
    r.register(Box::new(Extract));
    r.register(Box::new(RecurrenceMethod));
    r.register(Box::new(Binomial));
    r.register(Box::new(Comtet));
    r.register(Box::new(Arrays));
    r.register(Box::new(Enumeration));
    r.register(Box::new(TreeCount));
    r.register(Box::new(OracleMethod));
    r
}

/// `(n!)^d`, the total of every coefficient table.
pub fn expected_total(n: u32, d: u32) -> BigUint {
    let f: BigUint = (1..=n).map(BigUint::from).product();
    num_traits::pow(f, d as usize)
}
