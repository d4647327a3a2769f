//! Command-line surface.
//!
//! One document goes to standard output per invocation; diagnostics go to
//! standard error. Exit codes: 0 on success (and all checks passing),
//! 1 when a check fails or a table row disagrees, 2 on usage errors.
//! Output is byte-deterministic for fixed arguments: rationals print as
//! "p/q" in lowest terms ("n" when q = 1).

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::k3::{FamilyId, K3System};
use crate::qseries::{eta24_inverse, SeriesCatalog};
use crate::reducer::{
    eval_summand, eval_trr_rhs, reduce, trr_summands, CohBasis, CohClass, Correlator, FamilyClass,
    Insertion, ReducedValue, SfChoice,
};
use crate::series::{mul, rat_string, PowerSeries};
use crate::verify::{run_all, CheckReport, CheckStatus};

#[derive(Parser, Debug)]
#[command(
    name = "k3count",
    version,
    about = "Exact q-series engine for elliptic-curve counts in K3 surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Naive,
    Fast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// (S, F) = (2s, f)
    A,
    /// (S, F) = (s - 3f, 2f)
    B,
}

impl FamilyArg {
    fn choice(self) -> SfChoice {
        match self {
            FamilyArg::A => SfChoice::TwoSF,
            FamilyArg::B => SfChoice::SMinus3F2F,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the count table comparing index-1 and index-2 elliptic counts
    Table {
        /// Truncation order for the underlying series
        #[arg(long, default_value_t = 128)]
        order: usize,
        /// Rows run over e = 1..=max_e with d = 4e - 3
        #[arg(long = "max-e", default_value_t = 32)]
        max_e: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the named identity checks and report the certified orders
    Verify {
        #[arg(long, default_value_t = 128)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Only report the check with this id (e.g. C3)
        #[arg(long)]
        check: Option<String>,
    },
    /// Print the coefficients of a named series
    Series {
        /// g2, eta24-inverse, theta-g2, f-combo, n0, n1, p0, p1, d0, m0,
        /// m1-theorem, m1-ode, gyz1
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 128)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Reduce a bracket target to the GW1(pt)/GW0 atoms
    Reduce {
        /// trr, pf-trr3, or gw1-f-f-pt
        #[arg(long, default_value = "trr")]
        target: String,
        #[arg(long, value_enum, default_value_t = FamilyArg::A)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Time a series self-product and spot-check it against direct sums
    Bench {
        #[arg(long, default_value_t = 128)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Algo::Fast)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Parse and execute; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match cli.command {
        Command::Table {
            order,
            max_e,
            format,
        } => cmd_table(order, max_e, format),
        Command::Verify {
            order,
            format,
            check,
        } => cmd_verify(order, format, check.as_deref()),
        Command::Series {
            name,
            order,
            format,
        } => cmd_series(&name, order, format),
        Command::Reduce {
            target,
            family,
            format,
        } => cmd_reduce(&target, family.choice(), format),
        Command::Bench {
            order,
            algo,
            format,
        } => cmd_bench(order, algo, format),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    2
}

// ---------------------------------------------------------------- table --

#[derive(Serialize)]
struct TableDoc {
    order: usize,
    max_e: usize,
    rows: Vec<RowDoc>,
}

#[derive(Serialize)]
struct RowDoc {
    d: usize,
    e: usize,
    n1_index1: String,
    n1_index2: String,
    agree: bool,
}

fn cmd_table(order: usize, max_e: usize, format: Format) -> i32 {
    if max_e >= 1 {
        let needed = (2 * max_e).max(4 * max_e - 3);
        if order < needed {
            return usage_error(&format!(
                "table with max-e {max_e} needs order >= {needed} (got {order})"
            ));
        }
    }
    if order < 2 {
        return usage_error("table needs order >= 2");
    }
    let sys = K3System::build(order);
    let rows: Vec<RowDoc> = sys
        .table(max_e)
        .into_iter()
        .map(|r| RowDoc {
            d: r.d,
            e: r.e,
            n1_index1: rat_string(&r.n1_index1),
            n1_index2: rat_string(&r.n1_index2),
            agree: r.agree,
        })
        .collect();
    let all_agree = rows.iter().all(|r| r.agree);
    match format {
        Format::Json => print_json(&TableDoc {
            order,
            max_e,
            rows,
        }),
        Format::Csv => {
            let mut out = String::from("d,e,N1_index1,N1_index2,agree\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.d, r.e, r.n1_index1, r.n1_index2, r.agree
                ));
            }
            print!("{out}");
        }
    }
    if all_agree {
        0
    } else {
        1
    }
}

// --------------------------------------------------------------- verify --

#[derive(Serialize)]
struct VerifyDoc {
    order: usize,
    checks: Vec<CheckDoc>,
}

#[derive(Serialize)]
struct CheckDoc {
    id: String,
    description: String,
    paper_equation: String,
    status: String,
    order_certified: usize,
    first_failing_exponent: Option<usize>,
}

impl CheckDoc {
    fn from_report(r: &CheckReport) -> CheckDoc {
        CheckDoc {
            id: r.id.to_string(),
            description: r.description.to_string(),
            paper_equation: r.paper_equation.to_string(),
            status: r.status.as_str().to_string(),
            order_certified: r.order_certified,
            first_failing_exponent: r.first_failing_exponent,
        }
    }
}

/// 0 when every report passes, 1 otherwise.
pub fn verify_exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(|r| r.status == CheckStatus::Pass) {
        0
    } else {
        1
    }
}

fn cmd_verify(order: usize, format: Format, check: Option<&str>) -> i32 {
    if order < 8 {
        return usage_error("verify needs order >= 8");
    }
    let mut reports = run_all(order);
    if let Some(id) = check {
        let wanted = id.to_ascii_uppercase();
        if !reports.iter().any(|r| r.id == wanted) {
            return usage_error(&format!("unknown check id {id}"));
        }
        reports.retain(|r| r.id == wanted);
    }
    for r in &reports {
        if !r.detail.is_empty() {
            eprintln!("{}: {}", r.id, r.detail);
        }
    }
    match format {
        Format::Json => print_json(&VerifyDoc {
            order,
            checks: reports.iter().map(CheckDoc::from_report).collect(),
        }),
        Format::Csv => {
            let mut out = String::from(
                "id,description,paper_equation,status,order_certified,first_failing_exponent\n",
            );
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.id,
                    r.description,
                    r.paper_equation,
                    r.status.as_str(),
                    r.order_certified,
                    r.first_failing_exponent
                        .map_or(String::new(), |n| n.to_string())
                ));
            }
            print!("{out}");
        }
    }
    verify_exit_code(&reports)
}

// --------------------------------------------------------------- series --

#[derive(Serialize)]
struct SeriesDoc {
    name: String,
    order: usize,
    provenance: String,
    coeffs: Vec<String>,
}

fn cmd_series(name: &str, order: usize, format: Format) -> i32 {
    let (series, provenance): (PowerSeries, String) = if let Some(id) = FamilyId::parse(name) {
        if order < 2 {
            return usage_error("family series need order >= 2");
        }
        let sys = K3System::build(order);
        let fam = sys.series(id);
        (fam.series.clone(), fam.provenance.to_string())
    } else {
        let mut catalog = SeriesCatalog::new();
        match catalog.series(name, order) {
            Some(s) => (s, SeriesCatalog::provenance(name).unwrap().to_string()),
            None => {
                return usage_error(&format!(
                    "unknown series {name}; known: g2 eta24-inverse theta-g2 f-combo \
                     n0 n1 p0 p1 d0 m0 m1-theorem m1-ode gyz1"
                ))
            }
        }
    };
    let coeffs: Vec<String> = series.coeffs().iter().map(rat_string).collect();
    match format {
        Format::Json => print_json(&SeriesDoc {
            name: name.to_string(),
            order,
            provenance,
            coeffs,
        }),
        Format::Csv => {
            let mut out = String::from("n,coeff\n");
            for (n, c) in coeffs.iter().enumerate() {
                out.push_str(&format!("{n},{c}\n"));
            }
            print!("{out}");
        }
    }
    0
}

// --------------------------------------------------------------- reduce --

#[derive(Serialize)]
struct ReduceDoc {
    gw1pt: String,
    gw0: String,
    irreducible: Vec<String>,
}

fn cmd_reduce(target: &str, choice: SfChoice, format: Format) -> i32 {
    let basis = CohBasis::build();
    let value: ReducedValue = match target {
        "trr" => eval_trr_rhs(&basis, choice),
        "pf-trr3" => {
            let family = FamilyClass::new(&basis, choice);
            let summands = trr_summands();
            eval_summand(summands.last().unwrap(), &family, &basis)
        }
        "gw1-f-f-pt" => {
            let family = FamilyClass::new(&basis, choice);
            let c = Correlator::family(
                1,
                vec![
                    Insertion::primary(family.f_part.clone()),
                    Insertion::primary(family.f_part.clone()),
                    Insertion::primary(CohClass::point()),
                ],
            );
            reduce(&c, &family, &basis)
        }
        other => {
            return usage_error(&format!(
                "unknown reduce target {other}; known: trr pf-trr3 gw1-f-f-pt"
            ))
        }
    };
    assert!(
        value.scalar.is_zero(),
        "reduce targets are family brackets with no scalar part"
    );
    let doc = ReduceDoc {
        gw1pt: value.gw1pt.to_string(),
        gw0: value.gw0.to_string(),
        irreducible: value.irreducible.iter().map(|c| c.to_string()).collect(),
    };
    match format {
        Format::Json => print_json(&doc),
        Format::Csv => {
            let mut out = String::from("field,value\n");
            out.push_str(&format!("gw1pt,{}\n", doc.gw1pt));
            out.push_str(&format!("gw0,{}\n", doc.gw0));
            out.push_str(&format!("irreducible,{}\n", doc.irreducible.join(" | ")));
            print!("{out}");
        }
    }
    if value.irreducible.is_empty() {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------- bench --

#[derive(Serialize)]
struct BenchDoc {
    order: usize,
    algo: String,
    spots: Vec<SpotDoc>,
    all_match: bool,
}

#[derive(Serialize)]
struct SpotDoc {
    n: usize,
    coeff: String,
    matches_naive: bool,
}

fn cmd_bench(order: usize, algo: Algo, format: Format) -> i32 {
    if order < 1 {
        return usage_error("bench needs order >= 1");
    }
    let build_start = Instant::now();
    let eta = eta24_inverse(order);
    eprintln!(
        "eta24-inverse to order {order}: {:.3}s",
        build_start.elapsed().as_secs_f64()
    );
    let mul_start = Instant::now();
    let product = match algo {
        Algo::Fast => eta.mul_fast(&eta),
        Algo::Naive => mul(&eta, &eta),
    };
    eprintln!(
        "self-product ({}): {:.3}s",
        match algo {
            Algo::Fast => "fast",
            Algo::Naive => "naive",
        },
        mul_start.elapsed().as_secs_f64()
    );

    let mut spot_exponents = vec![0, 1000.min(order), order];
    spot_exponents.dedup();
    let spots: Vec<SpotDoc> = spot_exponents
        .into_iter()
        .map(|n| {
            // direct Cauchy sum, independent of either product path
            let direct: crate::series::Rat =
                (0..=n).map(|k| &eta[k] * &eta[n - k]).sum();
            SpotDoc {
                n,
                coeff: rat_string(&product[n]),
                matches_naive: product[n] == direct,
            }
        })
        .collect();
    let all_match = spots.iter().all(|s| s.matches_naive);
    let doc = BenchDoc {
        order,
        algo: match algo {
            Algo::Fast => "fast".to_string(),
            Algo::Naive => "naive".to_string(),
        },
        spots,
        all_match,
    };
    match format {
        Format::Json => print_json(&doc),
        Format::Csv => {
            let mut out = String::from("n,coeff,matches_naive\n");
            for s in &doc.spots {
                out.push_str(&format!("{},{},{}\n", s.n, s.coeff, s.matches_naive));
            }
            print!("{out}");
        }
    }
    if all_match {
        0
    } else {
        1
    }
}

fn print_json<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("documents serialize")
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::run_all;

    #[test]
    fn exit_code_reflects_check_failures() {
        let mut reports = run_all(8);
        assert_eq!(verify_exit_code(&reports), 0);
        reports[0].status = CheckStatus::Fail;
        assert_eq!(verify_exit_code(&reports), 1);
    }
}
