//! The input selector shared by the subcommands.

use std::path::{Path, PathBuf};

use coarseflag::matroid::{fano, from_arrangement, pg, read_arrangement_file, read_matroid_file, uniform, Matroid};
use coarseflag::oriented::{covectors_from_arrangement, CovectorSet};
use coarseflag::exactpoly::Rational;
use coarseflag::Error;

use crate::Failure;

fn pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two integers `a,b`, found `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    Ok((parse(a)?, parse(b)?))
}

#[derive(clap::Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Matroid given by its flats (`.flats` format).
    #[arg(long, value_name = "FILE")]
    flats: Option<PathBuf>,
    /// Central real arrangement, one normal vector per line (`.arr`).
    #[arg(long, value_name = "FILE")]
    arr: Option<PathBuf>,
    /// Oriented matroid given by its covectors (`.cov`).
    #[arg(long, value_name = "FILE")]
    cov: Option<PathBuf>,
    /// Uniform matroid U_{r,n}.
    #[arg(long, value_name = "R,N", value_parser = pair)]
    uniform: Option<(usize, usize)>,
    /// Projective geometry of rank r over F_q.
    #[arg(long, value_name = "R,Q", value_parser = pair)]
    pg: Option<(usize, usize)>,
    /// The Fano plane.
    #[arg(long)]
    fano: bool,
}

pub enum Loaded {
    Matroid(Matroid),
    Arrangement(Vec<Vec<Rational>>),
    Covectors(CovectorSet),
}

impl Loaded {
    pub fn matroid(&self) -> Result<Matroid, Error> {
        match self {
            Loaded::Matroid(m) => Ok(m.clone()),
            Loaded::Arrangement(rows) => from_arrangement(rows),
            Loaded::Covectors(c) => c.underlying_matroid(),
        }
    }

    /// Covectors of an oriented input, `None` for a bare matroid.
    pub fn covectors_if_oriented(&self) -> Result<Option<CovectorSet>, Error> {
        match self {
            Loaded::Matroid(_) => Ok(None),
            Loaded::Arrangement(rows) => covectors_from_arrangement(rows).map(Some),
            Loaded::Covectors(c) => Ok(Some(c.clone())),
        }
    }

    pub fn covectors(&self) -> Result<CovectorSet, Failure> {
        self.covectors_if_oriented()?
            .ok_or_else(|| Failure::Usage("this command needs --arr or --cov input".to_string()))
    }
}

/// Reads one file, choosing the format from its extension.
pub fn load_path(path: &Path) -> Result<Loaded, Error> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("arr") => Ok(Loaded::Arrangement(read_arrangement_file(path)?)),
        Some("cov") => Ok(Loaded::Covectors(CovectorSet::read_file(path)?)),
        _ => Ok(Loaded::Matroid(read_matroid_file(path)?)),
    }
}

impl InputArgs {
    pub fn load(&self) -> Result<Loaded, Error> {
        if let Some(p) = &self.flats {
            return Ok(Loaded::Matroid(read_matroid_file(p)?));
        }
        if let Some(p) = &self.arr {
            return Ok(Loaded::Arrangement(read_arrangement_file(p)?));
        }
        if let Some(p) = &self.cov {
            return Ok(Loaded::Covectors(CovectorSet::read_file(p)?));
        }
        if let Some((r, n)) = self.uniform {
            return Ok(Loaded::Matroid(uniform(r, n)?));
        }
        if let Some((r, q)) = self.pg {
            let q = u32::try_from(q).map_err(|_| Error::UnsupportedPrimePower(u32::MAX))?;
            return Ok(Loaded::Matroid(pg(r, q)?));
        }
        Ok(Loaded::Matroid(fano()))
    }

    pub fn label(&self) -> String {
        let file = [&self.flats, &self.arr, &self.cov]
            .into_iter()
            .flatten()
            .next()
            .map(|p| p.display().to_string());
        if let Some(f) = file {
            f
        } else if let Some((r, n)) = self.uniform {
            format!("U({r},{n})")
        } else if let Some((r, q)) = self.pg {
            format!("PG({},{q})", r.saturating_sub(1))
        } else {
            "fano".to_string()
        }
    }
}
