//! Directory scans: one TSV row per input file.

use std::fs;
use std::path::Path;

use rayon::prelude::*;

use coarseflag::criteria::{report, Subject};

use crate::input::load_path;
use crate::{Failure, Outcome};

pub const HEADER: &str = "file\trank\tpi1\tn_y1\tlower_bound\tconjecture_bounds\tlinear_bound\treal_rooted\tnonorientable\terror";

const CHECKS: [&str; 5] = [
    "lower-bound",
    "conjecture-bounds",
    "linear-upper-bound",
    "real-rootedness",
    "rank3-nonorientability",
];

fn row(path: &Path) -> String {
    let name = path.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned());
    match summarize(path, &name) {
        Ok(cells) => format!("{name}\t{cells}\t-"),
        Err(e) => {
            let msg = e.to_string().replace(['\t', '\n'], " ");
            format!("{name}{}\t{msg}", "\t-".repeat(3 + CHECKS.len()))
        }
    }
}

fn summarize(path: &Path, name: &str) -> coarseflag::Result<String> {
    let loaded = load_path(path)?;
    let subject = match loaded.covectors_if_oriented()? {
        Some(c) => Subject::from_covectors(name, &c)?,
        None => Subject::from_matroid(name, &loaded.matroid()?)?,
    };
    let rep = report(&subject)?;
    let coeffs: Vec<String> = subject.coarse.at_y1().coeffs().iter().map(ToString::to_string).collect();
    let mut cells = vec![
        subject.coarse.rank.to_string(),
        subject.coarse.poincare_at_one().to_string(),
        coeffs.join(","),
    ];
    for c in CHECKS {
        cells.push(rep.check(c).map_or("-", |c| c.verdict.as_str()).to_string());
    }
    Ok(cells.join("\t"))
}

pub fn run(dir: &Path, jobs: usize) -> Result<Outcome, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", dir.display())))?;
    let mut files: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && matches!(p.extension().and_then(|e| e.to_str()), Some("flats" | "arr" | "cov"))
        })
        .collect();
    files.sort_by_key(|p| p.file_name().map(|f| f.to_os_string()));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    // par_iter keeps input order when collecting
    let rows: Vec<String> = pool.install(|| files.par_iter().map(|p| row(p)).collect());
    let mut text = String::from(HEADER);
    text.push('\n');
    for r in rows {
        text.push_str(&r);
        text.push('\n');
    }
    Ok(Outcome::ok(text))
}
