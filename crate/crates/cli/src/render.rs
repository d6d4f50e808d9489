//! Text, CSV and JSON output. Every number is printed as an exact rational.

use bifib_core::series::GenfunReport;
use bifib_core::verify::{Check, Report, Status};
use bifib_core::{RatOctonion, Rational, SeqParams};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

pub enum SeqRow {
    Scalar(i64, Rational),
    Octonion(i64, Box<RatOctonion>),
}

#[derive(Serialize)]
#[serde(untagged)]
enum SeqEntry {
    Scalar { n: i64, value: String },
    Octonion { n: i64, coords: Vec<String> },
}

#[derive(Serialize)]
struct SeqDoc<'a> {
    a: String,
    b: String,
    kind: &'a str,
    entries: Vec<SeqEntry>,
}

fn coords(o: &RatOctonion) -> Vec<String> {
    o.coords().iter().map(ToString::to_string).collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn seq(params: &SeqParams, kind: &str, rows: &[SeqRow], format: Format) -> String {
    match format {
        Format::Json => {
            let entries = rows
                .iter()
                .map(|row| match row {
                    SeqRow::Scalar(n, v) => SeqEntry::Scalar {
                        n: *n,
                        value: v.to_string(),
                    },
                    SeqRow::Octonion(n, o) => SeqEntry::Octonion {
                        n: *n,
                        coords: coords(o),
                    },
                })
                .collect();
            to_json(&SeqDoc {
                a: params.a().to_string(),
                b: params.b().to_string(),
                kind,
                entries,
            })
        }
        Format::Csv | Format::Plain => {
            let sep = if format == Format::Csv { "," } else { " " };
            let mut out = String::new();
            for row in rows {
                let line = match row {
                    SeqRow::Scalar(n, v) => format!("{n}{sep}{v}"),
                    SeqRow::Octonion(n, o) => format!("{n}{sep}{}", coords(o).join(sep)),
                };
                out.push_str(&line);
                out.push('\n');
            }
            out
        }
    }
}

#[derive(Serialize)]
struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<u32>,
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    id: &'a str,
    suite: &'a str,
    params: Params,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<&'a str>,
}

#[derive(Serialize)]
struct GridPoint {
    a: String,
    b: String,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    grid: Vec<GridPoint>,
    checks: Vec<CheckDoc<'a>>,
    pass: bool,
}

fn check_doc(c: &Check) -> CheckDoc<'_> {
    CheckDoc {
        id: c.id,
        suite: c.suite.name(),
        params: Params {
            a: c.a.as_ref().map(ToString::to_string),
            b: c.b.as_ref().map(ToString::to_string),
            n: c.n,
            r: c.r,
            order: c.order,
        },
        pass: c.passed(),
        detail: c.detail.as_deref(),
    }
}

fn status_word(c: &Check) -> &'static str {
    match c.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skip",
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn checks_text(checks: &[Check], format: Format, out: &mut String) {
    if format == Format::Csv {
        out.push_str("id,suite,a,b,n,r,order,status,detail\n");
    }
    for c in checks {
        let line = if format == Format::Csv {
            [
                c.id.to_string(),
                c.suite.name().to_string(),
                opt(&c.a),
                opt(&c.b),
                opt(&c.n),
                opt(&c.r),
                opt(&c.order),
                status_word(c).to_lowercase(),
                csv_field(c.detail.as_deref().unwrap_or("")),
            ]
            .join(",")
        } else {
            let mut parts = vec![status_word(c).to_string(), c.id.to_string()];
            for (k, v) in [
                ("a", opt(&c.a)),
                ("b", opt(&c.b)),
                ("n", opt(&c.n)),
                ("r", opt(&c.r)),
                ("order", opt(&c.order)),
            ] {
                if !v.is_empty() {
                    parts.push(format!("{k}={v}"));
                }
            }
            if let Some(d) = &c.detail {
                parts.push(format!("({d})"));
            }
            parts.join(" ")
        };
        out.push_str(&line);
        out.push('\n');
    }
}

fn summary(checks: &[Check], pass: bool) -> String {
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    let skipped = checks
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .count();
    format!(
        "{}: {} checks, {failed} failed, {skipped} skipped\n",
        if pass { "PASS" } else { "FAIL" },
        checks.len()
    )
}

pub fn verify(report: &Report, format: Format) -> String {
    match format {
        Format::Json => to_json(&VerifyDoc {
            grid: report
                .grid
                .iter()
                .map(|(a, b)| GridPoint {
                    a: a.to_string(),
                    b: b.to_string(),
                })
                .collect(),
            checks: report.checks.iter().map(check_doc).collect(),
            pass: report.pass(),
        }),
        Format::Csv => {
            let mut out = String::new();
            checks_text(&report.checks, format, &mut out);
            out
        }
        Format::Plain => {
            let mut out = String::new();
            checks_text(&report.checks, format, &mut out);
            out.push_str(&summary(&report.checks, report.pass()));
            out
        }
    }
}

#[derive(Serialize)]
struct GenfunDoc<'a> {
    context: GridPoint,
    order: u32,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch_degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch_coordinate: Option<usize>,
    checks: Vec<CheckDoc<'a>>,
}

pub fn genfun(
    params: &SeqParams,
    order: u32,
    series: &GenfunReport,
    report: &Report,
    pass: bool,
    format: Format,
) -> String {
    match format {
        Format::Json => to_json(&GenfunDoc {
            context: GridPoint {
                a: params.a().to_string(),
                b: params.b().to_string(),
            },
            order,
            pass,
            first_mismatch_degree: series.first_mismatch.map(|(d, _)| d),
            first_mismatch_coordinate: series.first_mismatch.map(|(_, s)| s),
            checks: report.checks.iter().map(check_doc).collect(),
        }),
        Format::Csv => {
            let mut out = String::new();
            checks_text(&report.checks, format, &mut out);
            out
        }
        Format::Plain => {
            let mut out = String::new();
            checks_text(&report.checks, format, &mut out);
            out.push_str(&summary(&report.checks, pass));
            out
        }
    }
}
