use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "normord",
    version,
    about = "Normal ordering of (h ∂^d)^n, its coefficient tables and the number triangles inside them"
)]
pub struct Cli {
    /// Cap on brute-force enumeration size (maps, trees, tuples); overrides NORMORD_CAP_ITEMS.
    #[arg(long, global = true, value_name = "COUNT")]
    pub cap_trees: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print U_{n,d} (or V_n with --noncommutative).
    Poly(PolyArgs),
    /// Print the coefficient table of U_{n,d}, or one coefficient.
    Coeffs(CoeffsArgs),
    /// Print a number triangle computed from the coefficient tables.
    Triangle(TriangleArgs),
    /// Stirling numbers of either kind.
    Stirling(StirlingArgs),
    /// Eulerian numbers A(n, k).
    Eulerian(RowArgs),
    /// Bell numbers.
    Bell(BellArgs),
    /// Generalized Stirling numbers S(n, k)_{q,d}.
    Genstirling(GenStirlingArgs),
    /// Check the mod-p vanishing and scaling congruences.
    Modp(ModpArgs),
    /// Normal-order (h z^d)^n directly in the operator ring.
    Oracle(OracleArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Series solution of x'(u) = y(x(u)), x(0) = 0.
    Ode(OdeArgs),
    /// Faà di Bruno polynomials.
    Faa(FaaArgs),
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    /// Backend computing the polynomial; `list` prints the choices.
    #[arg(long, default_value = "recursive")]
    pub backend: String,
    /// Print the noncommutative V_n instead (d = 1 only).
    #[arg(long)]
    pub noncommutative: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    /// Single n; exclusive with --max-n.
    #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
    pub n: Option<u32>,
    /// Tables for n = 1..=max-n.
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    /// Coefficient method; `list` prints the choices.
    #[arg(long, default_value = "extract")]
    pub method: String,
    /// Only this coefficient, e.g. `2,1`; empty string for the empty partition.
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleName {
    Stirling1,
    Stirling2,
    Eulerian,
    GenStirling,
}

#[derive(Args, Debug)]
pub struct TriangleArgs {
    #[arg(long, value_enum)]
    pub kind: TriangleName,
    #[arg(long, default_value_t = 6)]
    pub max_n: u32,
    /// For gen-stirling.
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    /// For gen-stirling.
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StirlingKind {
    First,
    Second,
}

#[derive(Args, Debug)]
pub struct StirlingArgs {
    #[arg(long, value_enum, default_value_t = StirlingKind::Second)]
    pub kind: StirlingKind,
    #[command(flatten)]
    pub row: RowArgs,
}

#[derive(Args, Debug)]
pub struct RowArgs {
    #[arg(long)]
    pub n: u32,
    /// Only this entry of the row.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BellArgs {
    #[arg(long)]
    pub n: u32,
    /// Print B_0, ..., B_n.
    #[arg(long)]
    pub cumulative: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenStirlingMethod {
    /// Partition sum when q >= d, array sum otherwise.
    Auto,
    PartitionSum,
    Arrays,
    Operator,
    Bijections,
}

#[derive(Args, Debug)]
pub struct GenStirlingArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_enum, default_value_t = GenStirlingMethod::Auto)]
    pub method: GenStirlingMethod,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ModpArgs {
    #[arg(long)]
    pub p: u64,
    /// Check n = p^m at d = 1.
    #[arg(long, conflicts_with_all = ["d", "n"], required_unless_present = "d")]
    pub m: Option<u32>,
    /// A power of p; checks the scaling congruence for U_{n,d}.
    #[arg(long, requires = "n")]
    pub d: Option<u64>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingName {
    /// ℤ[x] with d/dx.
    X,
    /// ℤ[y0, y1, ...] with y_i ↦ y_{i+1}, h = y0.
    Y,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    /// Coefficient h as a polynomial in x, e.g. `2x^2 + x`.
    #[arg(long, default_value = "x")]
    pub h: String,
    #[arg(long, value_enum, default_value_t = RingName::X)]
    pub ring: RingName,
    /// Also apply the operator to this polynomial in x.
    #[arg(long)]
    pub apply: Option<String>,
    /// Print the basis transition matrices up to size n instead.
    #[arg(long)]
    pub transitions: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub max_n: u32,
    /// List the suites and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct OdeArgs {
    /// Coefficients y_0, y_1, ... of y(u) = Σ y_i u^i / i!.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    pub y: Vec<String>,
    /// Number of coefficients x_1, ..., x_order; defaults to the length of --y.
    #[arg(long)]
    pub order: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct FaaArgs {
    #[arg(long)]
    pub n: u32,
    /// Check F_n against d^n/dx^n of outer(inner(x)); needs --inner too.
    #[arg(long, requires = "inner")]
    pub outer: Option<String>,
    #[arg(long, requires = "outer")]
    pub inner: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
