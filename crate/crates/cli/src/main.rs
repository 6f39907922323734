//! `qpoly`: evaluate q-polynomials, expand connection formulae and run the
//! verification suites from the command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpoly::connection::BasisPolynomial;
use qpoly::families::ZPolynomial;
use qpoly::io::json::{connection_document, polynomial_document, to_json};
use qpoly::io::render::{
    laguerre_latex, render_basis, render_connection_latex, render_connection_text,
    render_polynomial, render_series,
};
use qpoly::io::{connect, evaluate, run_suite, sample_deviation, EvalFamily, Evaluation, Suite};
use qpoly::qkernel::{exp_q_quesne, exp_q_sum, q_exp_product_form, q_exp_sum, QBase, QExpKind};
use qpoly::{RatFunc, TruncatedSeries};

const SAMPLE_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "qpoly",
    version,
    about = "Exact q-Hermite, q-Laguerre and q-Gegenbauer polynomials"
)]
struct Cli {
    /// Truncation order of the generating-function series.
    #[arg(long, global = true, env = "QPOLY_ORDER", default_value_t = 12)]
    order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial.
    Eval(EvalArgs),
    /// Expand a q-polynomial into products of classical polynomials.
    Connect(ConnectArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Print a q-exponential series.
    Qexp(QexpArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CosBasis {
    /// cos(mθ)
    Cos,
    /// powers of z = cos θ
    Monomial,
}

fn parse_family(s: &str) -> Result<EvalFamily, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = EvalFamily::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_parser = parse_family)]
    family: EvalFamily,
    #[arg(long)]
    n: u32,
    /// Laguerre degree; the parameter is α = n − k.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Compare against a floating-point run at this q (e.g. 7/10).
    #[arg(long)]
    q_sample: Option<String>,
    /// λ used with --q-sample for the Gegenbauer family.
    #[arg(long, default_value = "3/2")]
    lambda_sample: String,
    /// Output basis for Gegenbauer polynomials.
    #[arg(long, value_enum, default_value_t = CosBasis::Cos)]
    basis: CosBasis,
}

#[derive(Args)]
struct ConnectArgs {
    #[arg(value_parser = parse_family)]
    family: EvalFamily,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: Option<u32>,
    /// Laguerre auxiliary integers n_1,…,n_k.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    aux: Vec<i64>,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = |s: &str| s.parse::<Suite>().map_err(|e| e.to_string()))]
    suite: Suite,
    #[arg(long, default_value_t = 5)]
    max_n: u32,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum QexpKindArg {
    /// e_b(z) = Σ zⁿ/(b;b)_n
    Little,
    /// E_b(z) = Σ b^{n(n−1)/2} zⁿ/(b;b)_n
    Big,
    /// exp_b(z) = Σ zⁿ/[n]_b!
    Exp,
}

#[derive(Args)]
struct QexpArgs {
    #[arg(long, value_enum, default_value_t = QexpKindArg::Little)]
    kind: QexpKindArg,
    /// The base is q^e.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    base_power: i64,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
}

enum Failure {
    Check,
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_real(s: &str) -> Result<f64, Failure> {
    let bad = || Failure::Usage(format!("not a rational number: {s:?}"));
    let v = match s.split_once('/') {
        Some((a, b)) => {
            a.trim().parse::<f64>().map_err(|_| bad())?
                / b.trim().parse::<f64>().map_err(|_| bad())?
        }
        None => s.trim().parse::<f64>().map_err(|_| bad())?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

fn check_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn eval_label(e: &Evaluation) -> String {
    let n = e.n;
    let alpha = n as i64 - e.k.unwrap_or(0) as i64;
    let k = e.k.unwrap_or(0);
    match e.family {
        EvalFamily::Hermite => format!("H_{n}(z;q)"),
        EvalFamily::Laguerre => format!("L_{k}^({alpha})(z;q)"),
        EvalFamily::Gegenbauer => format!("C_{n}^(λ)(z;q)"),
        EvalFamily::ClassicalHermite => format!("H_{n}(z)"),
        EvalFamily::ClassicalLaguerre => format!("L_{k}^({alpha})(z)"),
        EvalFamily::ClassicalGegenbauer => format!("C_{n}(z)"),
    }
}

fn eval_body(e: &Evaluation, latex: bool, basis: CosBasis) -> Result<String, Failure> {
    if latex && e.family == EvalFamily::Laguerre {
        return Ok(laguerre_latex(e.n, e.k.unwrap_or(0))?);
    }
    Ok(match (&e.value, basis) {
        (BasisPolynomial::Cos(c), CosBasis::Monomial) => {
            render_polynomial(&c.to_monomials(), "z", latex)
        }
        (v, _) => render_basis(v, latex),
    })
}

fn run_eval(a: &EvalArgs, order: usize) -> Result<(), Failure> {
    let e = evaluate(a.family, a.n, a.k, order)?;
    let mut ok = e.check;
    let sample = match &a.q_sample {
        Some(q) => {
            let (q, lambda) = (parse_real(q)?, parse_real(&a.lambda_sample)?);
            sample_deviation(&e, q, lambda)?.map(|gap| (q, lambda, gap))
        }
        None => None,
    };
    if let Some((_, _, gap)) = sample {
        ok &= gap <= SAMPLE_TOLERANCE;
    }
    match a.format {
        OutFormat::Text => {
            println!("{} = {}", eval_label(&e), eval_body(&e, false, a.basis)?);
            println!("check: {}", check_word(e.check));
        }
        OutFormat::Latex => println!("{}", eval_body(&e, true, a.basis)?),
        OutFormat::Json => {
            let value = match (&e.value, a.basis) {
                (BasisPolynomial::Cos(c), CosBasis::Monomial) => {
                    BasisPolynomial::Z(c.to_monomials())
                }
                (v, _) => v.clone(),
            };
            println!(
                "{}",
                to_json(&polynomial_document(
                    e.family.name(),
                    e.n,
                    e.k,
                    &value,
                    e.check
                ))
            );
        }
    }
    if let Some((q, lambda, gap)) = sample {
        let line = format!(
            "sample q = {q}, λ = {lambda}: max relative deviation {gap:.3e} ({})",
            check_word(gap <= SAMPLE_TOLERANCE)
        );
        if matches!(a.format, OutFormat::Text) {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run_connect(a: &ConnectArgs) -> Result<(), Failure> {
    let (c, ok) = connect(a.family, a.n, a.k, &a.aux)?;
    match a.format {
        OutFormat::Text => print!("{}", render_connection_text(&c, ok)),
        OutFormat::Latex => println!("{}", render_connection_latex(&c)),
        OutFormat::Json => println!("{}", to_json(&connection_document(&c, ok))),
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run_verify(a: &VerifyArgs) -> Result<(), Failure> {
    let report = run_suite(a.suite, a.max_n);
    let json = to_json(&report);
    if a.json {
        println!("{json}");
    } else {
        println!("{report}");
    }
    if let Some(path) = &a.report {
        std::fs::write(path, format!("{json}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run_qexp(a: &QexpArgs, order: usize) -> Result<(), Failure> {
    let base = QBase::q_pow(a.base_power);
    let z = TruncatedSeries::<RatFunc>::variable(order);
    let (series, alternative, name) = match a.kind {
        QexpKindArg::Little => (
            q_exp_sum(QExpKind::Little, &z, &base)?,
            q_exp_product_form(QExpKind::Little, &z, &base)?,
            "e",
        ),
        QexpKindArg::Big => (
            q_exp_sum(QExpKind::Big, &z, &base)?,
            q_exp_product_form(QExpKind::Big, &z, &base)?,
            "E",
        ),
        QexpKindArg::Exp => (exp_q_sum(&z, &base)?, exp_q_quesne(&z, &base)?, "exp"),
    };
    let ok = series == alternative;
    let poly = ZPolynomial::from_terms(
        series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (i as u32, c.clone())),
    );
    let base_label = match a.base_power {
        1 => "q".to_string(),
        e => format!("q^{{{e}}}"),
    };
    match a.format {
        OutFormat::Text => {
            println!(
                "{name}_{base_label}(z) = {} + O(z^{})",
                render_series(&poly, "z", false),
                order + 1
            );
            println!("check: {}", check_word(ok));
        }
        OutFormat::Latex => println!(
            "{} + O(z^{{{}}})",
            render_series(&poly, "z", true),
            order + 1
        ),
        OutFormat::Json => {
            let family = format!("{name}_{base_label}");
            println!(
                "{}",
                to_json(&polynomial_document(
                    &family,
                    order as u32,
                    None,
                    &BasisPolynomial::Z(poly),
                    ok
                ))
            );
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => run_eval(a, cli.order),
        Command::Connect(a) => run_connect(a),
        Command::Verify(a) => run_verify(a),
        Command::Qexp(a) => run_qexp(a, cli.order),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
