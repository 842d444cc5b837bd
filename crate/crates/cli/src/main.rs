//! `coarseflag`: coarse flag polynomials, tope censuses and bound checks
//! from the command line.
//!
//! Exit codes: 0 success, 1 a check or identity failed, 2 usage or parse
//! error, 3 validation error.

mod input;
mod scan;
mod verify;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coarseflag::criteria::{report, Subject};
use coarseflag::exactpoly::{poly_json, rational_json, BiPoly, UniPoly};
use coarseflag::series::coarse_numerator;
use coarseflag::Error;

use input::InputArgs;

#[derive(Parser)]
#[command(name = "coarseflag", version, about = "Coarse flag polynomials of matroids and oriented matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(clap::Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Depth {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Print N_M(Y,T), or N_M(1,T) with --y1, divided by pi_M(1) with --normalized.
    ///
    /// TSV output has columns `t`, `y`, `coefficient` (`y` is `-` for
    /// forms at Y = 1). Coefficients are exact fractions.
    Series {
        #[command(flatten)]
        input: InputArgs,
        /// Substitute Y = 1.
        #[arg(long)]
        y1: bool,
        /// Divide by pi_M(1).
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tope census of an arrangement or covector set: h-polynomials with
    /// multiplicities and their sum, compared with N_M(1,T).
    ///
    /// TSV output has columns `count`, `h`, `simplicial`.
    Topes {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every applicable bound and orientability check.
    ///
    /// Exits 1 if a theorem-level check fails. TSV output has columns
    /// `check`, `verdict`, `outcome`, `theorem`.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare closed forms with direct enumeration and check the Eulerian
    /// identity; prints one PASS/FAIL line per item.
    Verify {
        #[arg(value_enum, default_value_t = Depth::Small)]
        depth: Depth,
        /// Seed for the random rank-3 matroids.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Summarize every .flats, .arr and .cov file of a directory as TSV.
    ///
    /// Columns: file, rank, pi1, n_y1 (coefficients of N(1,T) separated by
    /// commas), lower_bound, conjecture_bounds, linear_bound, real_rooted,
    /// nonorientable, error. Verdict cells hold `holds`, `fails`,
    /// `not-applicable` or `inconclusive`; unreadable files get `-` cells
    /// and a message in `error`. Rows are sorted by file name.
    Scan {
        dir: PathBuf,
        /// Number of files processed in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// A finished command: its text and exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Parse { .. } | Error::Io(_)) | Failure::Usage(_) => 2,
            Failure::Lib(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Usage(m) => f.write_str(m),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match cli.command {
        Command::Series {
            input,
            y1,
            normalized,
            output,
        } => (series(&input, y1, normalized, output.format), output.out),
        Command::Topes { input, output } => (topes(&input, output.format), output.out),
        Command::Check { input, output } => (check(&input, output.format), output.out),
        Command::Verify { depth, seed, out } => (Ok(verify::run(depth == Depth::Full, seed)), out),
        Command::Scan { dir, jobs, out } => (scan::run(&dir, jobs), out),
    };
    match result {
        Ok(outcome) => {
            let written = match out {
                Some(path) => fs::write(&path, &outcome.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(outcome.code),
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn poly_tsv(p: &UniPoly) -> String {
    let mut out = String::from("t\ty\tcoefficient\n");
    for (k, c) in p.coeffs().iter().enumerate() {
        out.push_str(&format!("{k}\t-\t{c}\n"));
    }
    out
}

fn bipoly_tsv(p: &BiPoly) -> String {
    let mut out = String::from("t\ty\tcoefficient\n");
    for (y, t, c) in p.terms() {
        out.push_str(&format!("{t}\t{y}\t{c}\n"));
    }
    out
}

fn series(input: &InputArgs, y1: bool, normalized: bool, format: Format) -> Result<Outcome, Failure> {
    let m = input.load()?.matroid()?;
    let res = coarse_numerator(&m)?;
    let pi1 = res.poincare_at_one();
    let text = match (y1, normalized) {
        (true, true) => {
            let p = &res.normalized_y1;
            match format {
                Format::Text => format!("{p}\n"),
                Format::Json => json_line(json!({"form": "normalized_y1", "value": poly_json(p), "text": p.to_string()})),
                Format::Tsv => poly_tsv(p),
            }
        }
        (true, false) => {
            let p = res.at_y1();
            match format {
                Format::Text => format!("{p}\n"),
                Format::Json => json_line(json!({"form": "y1", "value": poly_json(&p), "text": p.to_string()})),
                Format::Tsv => poly_tsv(&p),
            }
        }
        (false, normalized) => {
            let p = if normalized {
                res.numerator.scale(&pi1.recip())
            } else {
                res.numerator.clone()
            };
            match format {
                Format::Text => format!("{p}\n"),
                Format::Json => {
                    let mut v = res.to_json();
                    v["form"] = json!(if normalized { "normalized" } else { "full" });
                    v["pi1"] = rational_json(&pi1);
                    v["text"] = json!(p.to_string());
                    json_line(v)
                }
                Format::Tsv => bipoly_tsv(&p),
            }
        }
    };
    Ok(Outcome::ok(text))
}

fn json_line(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json values serialize"))
}

struct Group {
    count: u64,
    simplicial: bool,
    h: UniPoly,
}

fn topes(input: &InputArgs, format: Format) -> Result<Outcome, Failure> {
    let c = input.load()?.covectors()?;
    let faces = c.face_lattice()?;
    let mut groups: BTreeMap<Vec<coarseflag::exactpoly::Rational>, Group> = BTreeMap::new();
    let mut total = UniPoly::zero();
    let all = faces.topes();
    for t in &all {
        let tc = faces.tope_complex(t)?;
        let simplicial = faces.is_simplicial_tope(t)?;
        total = total + &tc.h;
        let g = groups.entry(tc.h.coeffs().to_vec()).or_insert(Group {
            count: 0,
            simplicial,
            h: tc.h.clone(),
        });
        g.count += 1;
        g.simplicial &= simplicial;
    }
    let series = coarse_numerator(&c.underlying_matroid()?)?.at_y1();
    let matches = series == total;
    let text = match format {
        Format::Text => {
            let mut out = format!("topes {}\n", all.len());
            for g in groups.values() {
                let tag = if g.simplicial { " simplicial" } else { "" };
                out.push_str(&format!("{} x ({}){tag}\n", g.count, g.h));
            }
            out.push_str(&format!("total {total}\n"));
            out.push_str(&format!("matches series: {}\n", if matches { "yes" } else { "no" }));
            out
        }
        Format::Json => json_line(json!({
            "topes": all.len(),
            "groups": groups.values().map(|g| json!({
                "count": g.count,
                "h": poly_json(&g.h),
                "text": g.h.to_string(),
                "simplicial": g.simplicial,
            })).collect::<Vec<_>>(),
            "total": poly_json(&total),
            "total_text": total.to_string(),
            "matches_series": matches,
        })),
        Format::Tsv => {
            let mut out = String::from("count\th\tsimplicial\n");
            for g in groups.values() {
                out.push_str(&format!("{}\t{}\t{}\n", g.count, g.h, g.simplicial));
            }
            out
        }
    };
    Ok(Outcome {
        text,
        code: if matches { 0 } else { 1 },
    })
}

fn check(input: &InputArgs, format: Format) -> Result<Outcome, Failure> {
    let loaded = input.load()?;
    let subject = match loaded.covectors_if_oriented()? {
        Some(c) => Subject::from_covectors(&input.label(), &c)?,
        None => Subject::from_matroid(&input.label(), &loaded.matroid()?)?,
    };
    let rep = report(&subject)?;
    let text = match format {
        Format::Text => rep.render_text(),
        Format::Json => json_line(rep.to_json()),
        Format::Tsv => {
            let mut out = String::from("check\tverdict\toutcome\ttheorem\n");
            for c in &rep.checks {
                out.push_str(&format!("{}\t{}\t{}\t{}\n", c.name, c.verdict.as_str(), c.outcome, c.theorem));
            }
            out
        }
    };
    Ok(Outcome {
        text,
        code: if rep.has_theorem_failure() { 1 } else { 0 },
    })
}
