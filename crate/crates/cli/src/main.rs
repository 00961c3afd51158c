//! `cuemom`: Taylor data of τ_k, hook recursions, structural matrices,
//! brute-force determinants and moment coefficients, all in exact rationals.

use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use cuemom::besselrec::{f_expr_fixed, f_expr_symbolic, f_expr_truncated, Route};
use cuemom::exactalg::{PolyK, QSeries, Rational, Ring, TauExpr};
use cuemom::moments::{f1, f2, f3, r_reconstruct, MomentResult};
use cuemom::oracle::{f_l_bruteforce, tau_series};
use cuemom::shiftrec::{build_matrix, MatrixKind};
use cuemom::suite::{report, run_suite, Check, SuiteKind, SuiteOptions};
use cuemom::taylor::{eta_coeffs, tau_taylor};
use cuemom::young::YoungDiagram;

const SCHEMA: &str = "1";

#[derive(Parser)]
#[command(name = "cuemom", version, about = "Exact τ_k expansions and CUE joint-moment coefficients")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Taylor coefficients a_0..a_N of x^{-k²/2}τ_k, normalized to a_0 = 1.
    TauSeries {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients c_0..c_N of the σ-form solution η(s).
    Eta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// f_l as a differential polynomial in τ_k (symbolic in k unless --k is given).
    FExpr {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "two-one")]
        route: RouteArg,
        #[arg(long)]
        json: bool,
    },
    /// Structural matrix B, A, C1..C4 or a truncated C1~..C3~ of size l.
    Matrix {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Leading moment coefficient F_1, F_2 or F_3 at (M, k).
    Moment {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        deriv: u32,
        /// M; F_1 also accepts half-integers such as 3/2.
        #[arg(long = "M")]
        m: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rational function R_M(k) interpolated from exact samples at k_from..=k_to.
    RReconstruct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        order: u32,
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        k_from: usize,
        #[arg(long)]
        k_to: usize,
        /// Fixed numerator,denominator degrees, e.g. 4,8.
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force series: f_l with --l, otherwise τ_{k,Y} for --diagram (default empty).
    Oracle {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: Option<u32>,
        /// Parts of Y, comma separated, e.g. 2,1.
        #[arg(long)]
        diagram: Option<String>,
        /// Coefficients of u^e are reported for e < trunc.
        #[arg(long, default_value_t = 24)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Runs a verification suite; exit code 0 iff every check passes.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        suite: SuiteArg,
        /// First seed of the random sequences.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random sequences.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, hide = true)]
        inject_failure: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    TwoOne,
    Expansion,
    Truncated,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<cuemom::Error> for Failure {
    fn from(e: cuemom::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Out = Result<(String, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn with_schema(mut v: Value) -> String {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), Value::String(SCHEMA.into()));
    }
    v.to_string()
}

fn list_text(name: &str, v: &[Rational]) -> String {
    let w = format!("{}", v.len().saturating_sub(1)).len();
    v.iter()
        .enumerate()
        .map(|(i, r)| format!("{name}_{i:<w$}  {r}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn need_k(k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(usage("k must be at least 1"));
    }
    Ok(())
}

fn tau_series_cmd(k: usize, terms: usize, json: bool) -> Out {
    need_k(k)?;
    let a = tau_taylor(k, terms + 1);
    Ok(if json {
        (with_schema(json!({ "k": k, "a": strings(&a) })), true)
    } else {
        (list_text("a", &a), true)
    })
}

fn eta_cmd(k: usize, terms: usize, json: bool) -> Out {
    need_k(k)?;
    let n = terms + 1;
    let a = tau_taylor(k, n.max(2 * k + 2));
    let c = eta_coeffs(k, n, &a)?;
    Ok(if json {
        (with_schema(json!({ "k": k, "c": strings(&c) })), true)
    } else {
        (list_text("c", &c), true)
    })
}

fn expr_json<C: Ring>(e: &TauExpr<C>, show: impl Fn(&C) -> String) -> Value {
    e.to_json(|c| Value::String(show(c)))
}

fn f_expr_cmd(l: usize, k: Option<usize>, route: RouteArg, json: bool) -> Out {
    if l == 0 {
        return Err(usage("l must be at least 1"));
    }
    let (value, text, kval) = match (k, route) {
        (Some(k), r) => {
            need_k(k)?;
            let e = match r {
                RouteArg::TwoOne => f_expr_fixed(k, l, Route::TwoOne)?,
                RouteArg::Expansion => f_expr_fixed(k, l, Route::Expansion)?,
                RouteArg::Truncated => f_expr_truncated(k, l)?,
            };
            (expr_json(&e, |c| c.to_string()), e.to_string(), json!(k))
        }
        (None, RouteArg::Truncated) => return Err(usage("the truncated route needs --k")),
        (None, r) => {
            let route = if matches!(r, RouteArg::Expansion) { Route::Expansion } else { Route::TwoOne };
            let e = f_expr_symbolic(l, route)?;
            (expr_json(&e, |c: &PolyK| c.to_string()), e.to_string(), json!("symbolic"))
        }
    };
    let route = match route {
        RouteArg::TwoOne => "two-one",
        RouteArg::Expansion => "expansion",
        RouteArg::Truncated => "truncated",
    };
    Ok(if json {
        (with_schema(json!({ "l": l, "k": kval, "route": route, "terms": value })), true)
    } else {
        (format!("f_{l} = {text}"), true)
    })
}

fn grid_text(rows: &[Vec<String>]) -> String {
    let w = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| r.iter().map(|s| format!("{s:>w$}")).collect::<Vec<_>>().join("  "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn matrix_cmd(kind: &str, l: usize, k: Option<usize>, json: bool) -> Out {
    let mk = MatrixKind::parse(kind).ok_or_else(|| usage(format!("unknown matrix kind {kind:?}")))?;
    let rows: Vec<Vec<String>> = match k {
        Some(k) => {
            need_k(k)?;
            let kq = Rational::from(k as i64);
            let m = build_matrix(mk, l, Some(&kq), Some(k)).map_err(|e| usage(e.to_string()))?;
            m.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
        }
        None => {
            let m = build_matrix(mk, l, Some(&PolyK::k()), None).map_err(|e| usage(e.to_string()))?;
            m.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
        }
    };
    Ok(if json {
        (with_schema(json!({ "kind": mk.name(), "l": l, "k": k, "entries": rows })), true)
    } else {
        (grid_text(&rows), true)
    })
}

fn parse_m(s: &str) -> Result<Rational, Failure> {
    let s = s.trim();
    let r = match s.split_once('.') {
        Some((i, "5")) => {
            let i: i64 = i.parse().map_err(|_| usage(format!("bad M {s:?}")))?;
            &Rational::from(i) + &Rational::frac(1, 2)
        }
        Some((i, f)) if f.chars().all(|c| c == '0') => {
            Rational::from(i.parse::<i64>().map_err(|_| usage(format!("bad M {s:?}")))?)
        }
        Some(_) => return Err(usage(format!("M must be an integer or half-integer, got {s:?}"))),
        None => Rational::from_str(s).map_err(|e| usage(e.to_string()))?,
    };
    if r.signum() < 0 {
        return Err(usage("M must be non-negative"));
    }
    Ok(r)
}

fn result_json(r: &MomentResult) -> Value {
    json!({
        "order": r.order,
        "M": r.m.to_string(),
        "k": r.k,
        "value": r.value.to_string(),
        "barnes_ratio": r.barnes_ratio.to_string(),
        "R": r.r.to_string(),
    })
}

fn moment_cmd(deriv: u32, m: &str, k: usize, json: bool) -> Out {
    need_k(k)?;
    let mq = parse_m(m)?;
    let two_m = (&mq * &Rational::from(2)).to_i64().filter(|_| (&mq * &Rational::from(2)).is_integer());
    let two_m = two_m.ok_or_else(|| usage(format!("2M must be an integer, got M={mq}")))? as usize;
    if two_m > 2 * k {
        return Err(usage(format!("need M <= k, got M={mq}, k={k}")));
    }
    let r = match deriv {
        1 => f1(two_m, k, &tau_taylor(k, two_m + 1))?,
        _ if !two_m.is_multiple_of(2) => return Err(usage(format!("M must be an integer for --deriv {deriv}"))),
        2 => f2(two_m / 2, k)?,
        _ => f3(two_m / 2, k)?,
    };
    Ok(if json {
        (with_schema(result_json(&r)), true)
    } else {
        let t = format!(
            "order         {}\nM             {}\nk             {}\nvalue         {}\nbarnes_ratio  {}\nR             {}",
            r.order, r.m, r.k, r.value, r.barnes_ratio, r.r
        );
        (t, true)
    })
}

fn parse_degrees(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("degrees must look like n,d; got {s:?}"));
    let (n, d) = s.split_once(',').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?))
}

fn r_cmd(order: u32, m: usize, from: usize, to: usize, degrees: Option<&str>, json: bool) -> Out {
    if from == 0 || from > to {
        return Err(usage("need 1 <= k_from <= k_to"));
    }
    if from < m {
        return Err(usage(format!("need k_from >= M, got k_from={from}, M={m}")));
    }
    let degrees = degrees.map(parse_degrees).transpose()?;
    let ks: Vec<usize> = (from..=to).collect();
    let r = r_reconstruct(order, m, &ks, degrees)?;
    Ok(if json {
        let v = json!({
            "order": order,
            "M": m,
            "samples": ks,
            "numerator": strings(r.num().coeffs()),
            "denominator": strings(r.den().coeffs()),
            "R": r.to_string(),
        });
        (with_schema(v), true)
    } else {
        (format!("R_{m}(k) = {r}"), true)
    })
}

fn parse_diagram(s: &str) -> Result<YoungDiagram, Failure> {
    let mut parts = Vec::new();
    for p in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        parts.push(p.parse::<u32>().map_err(|_| usage(format!("bad diagram part {p:?}")))?);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(usage("diagram parts must be non-increasing"));
    }
    Ok(YoungDiagram::new(&parts))
}

fn series_json(s: &QSeries) -> Value {
    let mut m = Map::new();
    for (e, c) in s.terms() {
        m.insert(e.to_string(), Value::String(c.to_string()));
    }
    json!({ "min_exp": s.min_exp(), "trunc": s.trunc(), "coeffs": Value::Object(m) })
}

fn oracle_cmd(k: usize, l: Option<u32>, diagram: Option<&str>, trunc: i64, json: bool) -> Out {
    need_k(k)?;
    let (what, s) = match (l, diagram) {
        (Some(_), Some(_)) => return Err(usage("give either --l or --diagram")),
        (Some(l), None) => (format!("f_{l}"), f_l_bruteforce(k, l, trunc)?),
        (None, d) => {
            let y = d.map(parse_diagram).transpose()?.unwrap_or_default();
            (format!("tau_{{{k},{y}}}"), tau_series(k, &y, trunc)?)
        }
    };
    let s = s.truncated(trunc);
    Ok(if json {
        (with_schema(json!({ "k": k, "quantity": what, "series": series_json(&s) })), true)
    } else {
        let mut lines: Vec<String> = s.terms().map(|(e, c)| format!("u^{e:<4} {c}")).collect();
        lines.insert(0, format!("{what}, coefficients below u^{}", s.trunc()));
        (lines.join("\n"), true)
    })
}

fn verify_cmd(suite: SuiteArg, seed: u64, seeds: u64, inject: bool, json: bool) -> Out {
    let kind = match suite {
        SuiteArg::Fast => SuiteKind::Fast,
        SuiteArg::Full => SuiteKind::Full,
    };
    let mut checks = run_suite(&SuiteOptions { kind, seed, seeds });
    if inject {
        checks.push(Check {
            name: "injected".into(),
            pass: false,
            expected: "1".into(),
            actual: "0".into(),
            detail: "deliberate failure".into(),
        });
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let ok = checks.iter().all(|c| c.pass);
    Ok(if json {
        let passed = checks.iter().filter(|c| c.pass).count();
        let v = json!({
            "suite": if kind == SuiteKind::Fast { "fast" } else { "full" },
            "passed": passed,
            "total": checks.len(),
            "checks": checks,
        });
        (with_schema(v), ok)
    } else {
        (report(&checks).trim_end().to_string(), ok)
    })
}

fn run(cmd: Command) -> Out {
    match cmd {
        Command::TauSeries { k, terms, json } => tau_series_cmd(k, terms, json),
        Command::Eta { k, terms, json } => eta_cmd(k, terms, json),
        Command::FExpr { l, k, route, json } => f_expr_cmd(l, k, route, json),
        Command::Matrix { kind, l, k, json } => matrix_cmd(&kind, l, k, json),
        Command::Moment { deriv, m, k, json } => moment_cmd(deriv, &m, k, json),
        Command::RReconstruct { order, m, k_from, k_to, degrees, json } => {
            r_cmd(order, m, k_from, k_to, degrees.as_deref(), json)
        }
        Command::Oracle { k, l, diagram, trunc, json } => oracle_cmd(k, l, diagram.as_deref(), trunc, json),
        Command::Verify { suite, seed, seeds, inject_failure, json } => verify_cmd(suite, seed, seeds, inject_failure, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((out, ok)) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
