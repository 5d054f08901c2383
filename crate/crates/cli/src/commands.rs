use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use normord::algebra::numbers::exact_log;
use normord::algebra::{IntPoly, NCPolynomial, NormalPolynomial, Partition};
use normord::enumerators::{gen_stirling_by_bijections, Caps};
use normord::oracle::{
    ah_transitions, apply, eval_u, gen_stirling_from_operator, power_h_zd, table_from_y_oracle,
    AhTransitions, SkewPolynomial,
};
use normord::special::{
    bell, eulerian, faa_di_bruno, gen_stirling, gen_stirling_arrays, gen_stirling_k_range,
    gen_stirling_partition_sum, ode_coefficients, ode_residual, stirling_first, stirling_second,
    verify_faa_di_bruno, verify_modp, verify_modp_d, IntegerTriangle, ModpReport, TriangleKind,
};
use normord::strategy::{coefficient_methods, universal_backends, Named, Registry};
use normord::universal::{u_poly_d, v_poly, CoeffTable};
use normord::verify::{run_suites, suites};
use normord::Error;

use crate::args::*;

/// Why a command did not succeed; each maps to its own exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
    /// A check ran and failed; the report still goes to stdout.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

pub fn run(cli: Cli) -> Outcome {
    let mut caps = Caps::from_env()?;
    if let Some(cap) = cli.cap_trees {
        caps.max_items = cap;
    }
    match cli.command {
        Command::Poly(a) => poly(a, &caps),
        Command::Coeffs(a) => coeffs(a, &caps),
        Command::Triangle(a) => triangle(a),
        Command::Stirling(a) => stirling(a),
        Command::Eulerian(a) => row_command("eulerian", &a, 1, |n, k| Ok(eulerian(n, k))),
        Command::Bell(a) => bell_command(a),
        Command::Genstirling(a) => genstirling(a, &caps),
        Command::Modp(a) => modp(a),
        Command::Oracle(a) => oracle(a),
        Command::Verify(a) => verify(a, &caps),
        Command::Ode(a) => ode(a),
        Command::Faa(a) => faa(a),
    }
}

fn unsupported(command: &str, format: Format) -> Failure {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Latex => "latex",
    };
    Failure::Usage(format!("--format {name} is not available for {command}"))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON renders");
    s.push('\n');
    s
}

fn listing<T: ?Sized + Named>(registry: &Registry<T>) -> String {
    let width = registry.names().iter().map(|n| n.len()).max().unwrap_or(0);
    registry
        .iter()
        .map(|s| format!("{:<width$}  {}\n", s.name(), s.summary()))
        .collect()
}

fn parse_poly(text: &str, flag: &str) -> Result<IntPoly, Failure> {
    text.parse()
        .map_err(|e| Failure::Domain(Error::InvalidArgument(format!("--{flag}: {e}"))))
}

fn poly(a: PolyArgs, caps: &Caps) -> Outcome {
    if a.noncommutative {
        if a.d != 1 {
            return Err(
                Error::InvalidArgument("the noncommutative polynomial needs d = 1".into()).into(),
            );
        }
        let v = v_poly(a.n);
        return match a.format {
            Format::Text => Ok(format!("{v}\n")),
            Format::Json => Ok(pretty(&nc_json(&v))),
            f => Err(unsupported("poly --noncommutative", f)),
        };
    }
    let registry = universal_backends();
    if a.backend == "list" {
        return Ok(listing(&registry));
    }
    let backend = registry.get(&a.backend)?;
    if !backend.supports(a.d) {
        return Err(Error::UnsupportedMethod {
            method: a.backend.clone(),
            d: a.d,
        }
        .into());
    }
    let u = backend.compute(a.n, a.d, caps)?;
    match a.format {
        Format::Text => Ok(format!("{u}\n")),
        Format::Json => Ok(pretty(&u.to_json())),
        Format::Latex => Ok(format!("{}\n", u.to_latex())),
        f => Err(unsupported("poly", f)),
    }
}

fn nc_json(v: &NCPolynomial) -> Value {
    let terms: Vec<Value> = v
        .display_terms()
        .into_iter()
        .map(|(w, c)| json!({ "word": w.letters(), "t": w.t_power(), "coeff": c.to_string() }))
        .collect();
    json!({ "terms": terms })
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = trimmed
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            Failure::Usage(format!(
                "--partition '{text}' is not a comma-separated list of parts"
            ))
        })?;
    Ok(Partition::new(parts)?)
}

fn coeffs(a: CoeffsArgs, caps: &Caps) -> Outcome {
    let registry = coefficient_methods();
    if a.method == "list" {
        return Ok(listing(&registry));
    }
    let method = registry.get(&a.method)?;
    if let Some(text) = &a.partition {
        let Some(n) = a.n else {
            return Err(Failure::Usage("--partition needs --n".into()));
        };
        let lambda = parse_partition(text)?;
        let c = method.coefficient(n, a.d, &lambda, caps)?;
        let k = (n * a.d).checked_sub(lambda.size());
        return match a.format {
            Format::Text => Ok(format!("{c}\n")),
            Format::Json => Ok(pretty(&json!({
                "n": n,
                "d": a.d,
                "partition": lambda.parts(),
                "k": k,
                "coeff": c.to_string(),
                "method": method.name(),
            }))),
            Format::Csv => Ok(format!(
                "partition,k,coeff\n\"{}\",{},{c}\n",
                join(lambda.parts()),
                k.map(|k| k.to_string()).unwrap_or_default()
            )),
            f => Err(unsupported("coeffs --partition", f)),
        };
    }
    let ns: Vec<u32> = match (a.n, a.max_n) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (1..=m).collect(),
        (None, None) => return Err(Failure::Usage("coeffs needs --n or --max-n".into())),
    };
    let tables = ns
        .iter()
        .map(|&n| method.table(n, a.d, caps))
        .collect::<Result<Vec<_>, _>>()?;
    match a.format {
        Format::Text => Ok(tables
            .iter()
            .map(CoeffTable::to_text)
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Json if tables.len() == 1 => Ok(pretty(&tables[0].to_json())),
        Format::Json => Ok(pretty(&Value::Array(
            tables.iter().map(CoeffTable::to_json).collect(),
        ))),
        Format::Csv if tables.len() == 1 => Ok(tables[0].to_csv()),
        Format::Csv => {
            let mut out = String::from("n,partition,k,coeff\n");
            for t in &tables {
                for line in t.to_csv().lines().skip(1) {
                    let _ = writeln!(out, "{},{line}", t.n());
                }
            }
            Ok(out)
        }
        Format::Latex => Ok(CoeffTable::to_latex(&tables)),
    }
}

fn join(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn triangle(a: TriangleArgs) -> Outcome {
    let kind = match a.kind {
        TriangleName::Stirling1 => TriangleKind::StirlingFirst,
        TriangleName::Stirling2 => TriangleKind::StirlingSecond,
        TriangleName::Eulerian => TriangleKind::Eulerian,
        TriangleName::GenStirling => TriangleKind::GenStirling { q: a.q, d: a.d },
    };
    let t = IntegerTriangle::build(kind, a.max_n)?;
    Ok(match a.format {
        Format::Text => t.to_text(),
        Format::Json => pretty(&t.to_json()),
        Format::Csv => t.to_csv(),
        Format::Latex => t.to_latex(),
    })
}

fn stirling(a: StirlingArgs) -> Outcome {
    match a.kind {
        StirlingKind::First => row_command("stirling1", &a.row, 0, |n, k| Ok(stirling_first(n, k))),
        StirlingKind::Second => {
            row_command("stirling2", &a.row, 0, |n, k| Ok(stirling_second(n, k)))
        }
    }
}

/// Prints `T(n, k)` for one `k` or for `k = first..=n` (from 0 when `n = 0`).
fn row_command(
    name: &str,
    a: &RowArgs,
    first: u32,
    value: impl Fn(u32, u32) -> Result<BigInt, Error>,
) -> Outcome {
    let ks: Vec<u32> = match a.k {
        Some(k) => vec![k],
        None if a.n == 0 => vec![0],
        None => (first.max(1)..=a.n).collect(),
    };
    let rows = ks
        .into_iter()
        .map(|k| value(a.n, k).map(|v| (k, v)))
        .collect::<Result<Vec<_>, _>>()?;
    render_row(name, a.n, &rows, a.format, json!({}))
}

fn render_row(name: &str, n: u32, rows: &[(u32, BigInt)], format: Format, extra: Value) -> Outcome {
    match format {
        Format::Text => {
            let cells: Vec<String> = rows.iter().map(|(_, v)| v.to_string()).collect();
            Ok(format!("{}\n", cells.join(" ")))
        }
        Format::Json => {
            let mut doc = json!({
                "name": name,
                "n": n,
                "values": rows
                    .iter()
                    .map(|(k, v)| json!({ "k": k, "value": v.to_string() }))
                    .collect::<Vec<_>>(),
            });
            if let (Some(obj), Some(more)) = (doc.as_object_mut(), extra.as_object()) {
                obj.extend(more.clone());
            }
            Ok(pretty(&doc))
        }
        Format::Csv => {
            let mut out = String::from("n,k,value\n");
            for (k, v) in rows {
                let _ = writeln!(out, "{n},{k},{v}");
            }
            Ok(out)
        }
        f => Err(unsupported(name, f)),
    }
}

fn bell_command(a: BellArgs) -> Outcome {
    let ns: Vec<u32> = if a.cumulative {
        (0..=a.n).collect()
    } else {
        vec![a.n]
    };
    let values: Vec<(u32, BigInt)> = ns.into_iter().map(|n| (n, bell(n))).collect();
    match a.format {
        Format::Text => {
            let cells: Vec<String> = values.iter().map(|(_, v)| v.to_string()).collect();
            Ok(format!("{}\n", cells.join(" ")))
        }
        Format::Json => Ok(pretty(&json!({
            "name": "bell",
            "values": values
                .iter()
                .map(|(n, v)| json!({ "n": n, "value": v.to_string() }))
                .collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in &values {
                let _ = writeln!(out, "{n},{v}");
            }
            Ok(out)
        }
        f => Err(unsupported("bell", f)),
    }
}

fn genstirling(a: GenStirlingArgs, caps: &Caps) -> Outcome {
    let (q, d) = (a.q, a.d);
    let value = |n: u32, k: u32| -> Result<BigInt, Error> {
        match a.method {
            GenStirlingMethod::Auto => gen_stirling(n, k, q, d),
            GenStirlingMethod::PartitionSum => gen_stirling_partition_sum(n, k, q, d),
            GenStirlingMethod::Arrays => gen_stirling_arrays(n, k, q, d),
            GenStirlingMethod::Operator => {
                if d == 0 {
                    return Err(Error::OutOfRange(
                        "generalized Stirling numbers need d >= 1".into(),
                    ));
                }
                gen_stirling_from_operator(n, k, q, d)
            }
            GenStirlingMethod::Bijections => {
                gen_stirling_by_bijections(n, k, q, d, caps).map(BigInt::from)
            }
        }
    };
    let ks: Vec<u32> = match a.k {
        Some(k) => vec![k],
        None => gen_stirling_k_range(a.n, q, d).collect(),
    };
    let rows = ks
        .into_iter()
        .map(|k| value(a.n, k).map(|v| (k, v)))
        .collect::<Result<Vec<_>, _>>()?;
    render_row(
        "gen_stirling",
        a.n,
        &rows,
        a.format,
        json!({ "q": q, "d": d }),
    )
}

fn modp(a: ModpArgs) -> Outcome {
    let report: ModpReport = match (a.m, a.d, a.n) {
        (Some(m), _, _) => verify_modp(a.p, m)?,
        (None, Some(d), Some(n)) => {
            let e = exact_log(d, a.p).filter(|&e| e >= 1).ok_or_else(|| {
                Error::InvalidArgument(format!("--d {d} is not a positive power of p = {}", a.p))
            })?;
            verify_modp_d(a.p, e, n)?
        }
        _ => return Err(Failure::Usage("modp needs --m, or --d with --n".into())),
    };
    let out = match a.format {
        Format::Text => format!("{}\n", report.to_string().trim_end()),
        Format::Json => pretty(&serde_json::to_value(&report).expect("report serializes")),
        f => return Err(unsupported("modp", f)),
    };
    if report.is_clean() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn skew_json<R: normord::oracle::DifferentialRing>(p: &SkewPolynomial<R>) -> Vec<String> {
    p.coeffs().iter().map(|c| c.render()).collect()
}

fn oracle(a: OracleArgs) -> Outcome {
    if a.transitions {
        if a.ring == RingName::Y {
            return Err(Failure::Usage(
                "--transitions works over the x ring only".into(),
            ));
        }
        let t = ah_transitions(a.n, &parse_poly(&a.h, "h")?)?;
        return match a.format {
            Format::Text => Ok(transitions_text(&t)),
            Format::Json => Ok(pretty(&t.to_json())),
            f => Err(unsupported("oracle --transitions", f)),
        };
    }
    let u = u_poly_d(a.n, a.d)?;
    let (rendered, coefficients, agrees, applied, ring) = match a.ring {
        RingName::X => {
            let h = parse_poly(&a.h, "h")?;
            let direct = power_h_zd(&h, a.d, a.n);
            let agrees = direct == eval_u(&u, &h);
            let applied = match &a.apply {
                Some(f) => Some(apply(&direct, &parse_poly(f, "apply")?)),
                None => None,
            };
            (direct.to_string(), skew_json(&direct), agrees, applied, "x")
        }
        RingName::Y => {
            if a.apply.is_some() {
                return Err(Failure::Usage("--apply works over the x ring only".into()));
            }
            let y0 = NormalPolynomial::y(0);
            let direct = power_h_zd(&y0, a.d, a.n);
            let agrees =
                table_from_y_oracle(a.n, a.d)? == CoeffTable::from_polynomial(&u, a.n, a.d)?;
            (direct.to_string(), skew_json(&direct), agrees, None, "y")
        }
    };
    let h_label = if a.ring == RingName::Y {
        "y0".to_string()
    } else {
        a.h.clone()
    };
    let out = match a.format {
        Format::Text => {
            let zd = if a.d == 1 {
                "z".to_string()
            } else {
                format!("z^{}", a.d)
            };
            let mut out = format!("({h_label} {zd})^{} = {rendered}\n", a.n);
            let verdict = if agrees { "agrees" } else { "DISAGREES" };
            let _ = writeln!(out, "substituted U_{{{},{}}}: {verdict}", a.n, a.d);
            if let (Some(f), Some(v)) = (&a.apply, &applied) {
                let _ = writeln!(out, "applied to {f}: {v}");
            }
            out
        }
        Format::Json => {
            let mut doc = json!({
                "ring": ring,
                "h": h_label,
                "n": a.n,
                "d": a.d,
                "normal_form": rendered,
                "coefficients": coefficients,
                "agrees_with_universal": agrees,
            });
            if let Some(v) = &applied {
                doc["applied"] = json!(v.to_string());
            }
            pretty(&doc)
        }
        f => return Err(unsupported("oracle", f)),
    };
    if agrees {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn transitions_text(t: &AhTransitions) -> String {
    let mut out = String::new();
    for (label, m) in [
        ("to_hy", &t.to_hy),
        ("hy_to_normal", &t.hy_to_normal),
        ("to_normal", &t.to_normal),
    ] {
        let _ = writeln!(out, "{label}:");
        for row in m {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  [{}]", cells.join(", "));
        }
    }
    out
}

fn verify(a: VerifyArgs, caps: &Caps) -> Outcome {
    if a.list {
        return Ok(listing(&suites()));
    }
    let reports = run_suites(&a.suite, a.max_n, caps)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let out = match a.format {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
            let _ = writeln!(out, "{} suites, {failed} failed", reports.len());
            out
        }
        Format::Json => pretty(&Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "passed": r.passed(),
                        "checks": r.checks,
                        "skipped": r.skipped,
                        "failures": r.failures,
                    })
                })
                .collect(),
        )),
        f => return Err(unsupported("verify", f)),
    };
    if failed == 0 {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn ode(a: OdeArgs) -> Outcome {
    let y =
        a.y.iter()
            .map(|s| s.trim().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Failure::Usage("--y must be a comma-separated list of integers".into()))?;
    let order = a.order.unwrap_or(y.len() as u32);
    let x = ode_coefficients(&y, order)?;
    let residual_ok = ode_residual(&y, &x, order).iter().all(Zero::is_zero);
    let out = match a.format {
        Format::Text => {
            let mut out = String::new();
            for (i, v) in x.iter().enumerate() {
                let _ = writeln!(out, "x_{} = {v}", i + 1);
            }
            out
        }
        Format::Json => pretty(&json!({
            "y": y.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "x": x.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "residual_zero": residual_ok,
        })),
        Format::Csv => {
            let mut out = String::from("n,x\n");
            for (i, v) in x.iter().enumerate() {
                let _ = writeln!(out, "{},{v}", i + 1);
            }
            out
        }
        f => return Err(unsupported("ode", f)),
    };
    if residual_ok {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn faa(a: FaaArgs) -> Outcome {
    let f = faa_di_bruno(a.n);
    let check = match (&a.outer, &a.inner) {
        (Some(o), Some(i)) => Some(verify_faa_di_bruno(
            a.n,
            &parse_poly(o, "outer")?,
            &parse_poly(i, "inner")?,
        )),
        _ => None,
    };
    let out = match a.format {
        Format::Text => {
            let mut out = format!("{f}\n");
            if let Some(ok) = check {
                let _ = writeln!(out, "check: {}", if ok { "ok" } else { "FAILED" });
            }
            out
        }
        Format::Json => {
            let mut doc =
                json!({ "n": a.n, "polynomial": f.to_string(), "terms": f.to_json()["terms"] });
            if let Some(ok) = check {
                doc["check"] = json!(ok);
            }
            pretty(&doc)
        }
        Format::Latex => format!("{}\n", f.to_latex()),
        fmt => return Err(unsupported("faa", fmt)),
    };
    match check {
        Some(false) => Err(Failure::Verification(out)),
        _ => Ok(out),
    }
}
