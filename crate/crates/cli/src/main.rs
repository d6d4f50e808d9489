//! `bifib`: emit bi-periodic Fibonacci sequences and verify their identities.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use bifib_core::fib_octonion::oct_o;
use bifib_core::series::genfun_check;
use bifib_core::verify::{self, Suite, VerifyConfig};
use bifib_core::{Rational, SeqCache, SeqParams};
use clap::{Parser, Subcommand, ValueEnum};

use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "bifib",
    version,
    about = "Exact bi-periodic Fibonacci octonions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print q_n, l_n or O_n for n in [from, to]
    Seq {
        #[arg(long, value_parser = nonzero_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = nonzero_rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_enum, default_value = "q")]
        kind: Kind,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Run identity suites; without --a/--b the default grid is used
    Verify {
        #[arg(long, value_parser = nonzero_rational, allow_hyphen_values = true, requires = "b")]
        a: Option<Rational>,
        #[arg(long, value_parser = nonzero_rational, allow_hyphen_values = true, requires = "a")]
        b: Option<Rational>,
        #[arg(long, value_parser = suite_selection, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(2..))]
        order: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the generating function and the auxiliary series to a given order
    GenfunCheck {
        #[arg(long, value_parser = nonzero_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = nonzero_rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(2..))]
        order: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Q,
    L,
    #[value(name = "O")]
    O,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Q => "q",
            Kind::L => "l",
            Kind::O => "O",
        }
    }
}

#[derive(Clone, Debug)]
struct SuiteArg(Vec<Suite>);

fn nonzero_rational(s: &str) -> Result<Rational, String> {
    let v: Rational = s.parse().map_err(|e: bifib_core::Error| e.to_string())?;
    if v.is_zero() {
        return Err("must be nonzero".into());
    }
    Ok(v)
}

fn suite_selection(s: &str) -> Result<SuiteArg, String> {
    Suite::parse_selection(s)
        .map(SuiteArg)
        .map_err(|_| "expected one of binet, prop1, catalan, sums, genfun, algebra, all".into())
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(text: &str) -> ExitCode {
    let mut out = io::stdout().lock();
    if out
        .write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn verdict(text: &str, pass: bool) -> ExitCode {
    let code = emit(text);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Seq {
            a,
            b,
            kind,
            from,
            to,
            format,
        } => {
            if from > to {
                return usage_error("--from must not exceed --to");
            }
            let params = SeqParams::new(a, b).expect("validated by the argument parser");
            let mut cache = SeqCache::new(params);
            let rows: Vec<render::SeqRow> = (from..=to)
                .map(|n| match kind {
                    Kind::Q => render::SeqRow::Scalar(n, cache.fib_q(n)),
                    Kind::L => render::SeqRow::Scalar(n, cache.lucas_l(n)),
                    Kind::O => render::SeqRow::Octonion(n, Box::new(oct_o(&mut cache, n))),
                })
                .collect();
            emit(&render::seq(cache.params(), kind.name(), &rows, format))
        }
        Command::Verify {
            a,
            b,
            suite,
            n_max,
            r_max,
            order,
            format,
        } => {
            let grid = match (a, b) {
                (Some(a), Some(b)) => vec![(a, b)],
                _ => verify::default_grid(),
            };
            let config = VerifyConfig {
                n_max,
                r_max,
                order,
                suites: suite.0,
                ..VerifyConfig::default()
            };
            match verify::run(&grid, &config) {
                Ok(report) => verdict(&render::verify(&report, format), report.pass()),
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::GenfunCheck {
            a,
            b,
            order,
            format,
        } => {
            let params =
                SeqParams::new(a.clone(), b.clone()).expect("validated by the argument parser");
            let mut cache = SeqCache::new(params);
            let series_report = match genfun_check(&mut cache, order) {
                Ok(r) => r,
                Err(e) => return usage_error(&format!("--order: {e}")),
            };
            let config = VerifyConfig {
                order,
                suites: vec![Suite::Genfun],
                ..VerifyConfig::default()
            };
            let report = match verify::run(&[(a, b)], &config) {
                Ok(r) => r,
                Err(e) => return usage_error(&e.to_string()),
            };
            let pass = report.pass() && series_report.pass();
            let text = render::genfun(cache.params(), order, &series_report, &report, pass, format);
            verdict(&text, pass)
        }
    }
}
