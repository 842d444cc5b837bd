//! Text formats: `.flats` for matroids and `.arr` for arrangements.
//!
//! ```text
//! matroid
//! n 3
//! rank 2
//! flat 0
//! flat 1 0
//! flat 2 0 1 2
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use super::{Flat, Matroid};
use crate::error::{Error, Result};
use crate::exactpoly::Rational;

/// Non-blank lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{tok}`")))
}

/// Parses a `.flats` document. Syntax errors carry line numbers; the
/// matroid axioms are then checked and reported as a validation error.
pub fn parse_flats(text: &str) -> Result<Matroid> {
    let m = parse_flats_unchecked(text)?;
    let violations = m.validate();
    if violations.is_empty() {
        Ok(m)
    } else {
        Err(Error::InvalidMatroid(violations))
    }
}

fn parse_flats_unchecked(text: &str) -> Result<Matroid> {
    let mut lines = content_lines(text);

    let (line, magic) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    if magic != "matroid" {
        return Err(Error::parse(line, "expected `matroid` header"));
    }
    let n = header(&mut lines, "n", line)?;
    let rank = header(&mut lines, "rank", line + 1)?;

    let mut flats: Vec<(usize, Flat)> = Vec::new();
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        if toks.next() != Some("flat") {
            return Err(Error::parse(line, "expected `flat <rank> <elements...>`"));
        }
        let r = toks
            .next()
            .ok_or_else(|| Error::parse(line, "missing flat rank"))?;
        let r = parse_usize(line, r, "a flat rank")?;
        let mut flat = Vec::new();
        for tok in toks {
            let e = parse_usize(line, tok, "an element index")?;
            if e >= n {
                return Err(Error::parse(line, format!("element {e} out of range 0..{n}")));
            }
            flat.push(e);
        }
        flats.push((r, flat));
    }
    Ok(Matroid::from_flats(n, rank, flats))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    last: usize,
) -> Result<usize> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| Error::parse(last + 1, format!("missing `{key}` line")))?;
    let mut toks = text.split_whitespace();
    if toks.next() != Some(key) {
        return Err(Error::parse(line, format!("expected `{key} <int>`")));
    }
    let value = toks
        .next()
        .ok_or_else(|| Error::parse(line, format!("missing value after `{key}`")))?;
    let v = parse_usize(line, value, "a non-negative integer")?;
    if toks.next().is_some() {
        return Err(Error::parse(line, "trailing tokens"));
    }
    Ok(v)
}

/// Canonical `.flats` rendering.
pub fn render_flats(m: &Matroid) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "matroid");
    let _ = writeln!(out, "n {}", m.ground_set_size());
    let _ = writeln!(out, "rank {}", m.rank());
    for (r, f) in m.flats() {
        let _ = write!(out, "flat {r}");
        for e in f {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    out
}

pub fn read_matroid_file(path: impl AsRef<Path>) -> Result<Matroid> {
    parse_flats(&fs::read_to_string(path)?)
}

pub fn write_matroid_file(m: &Matroid, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, render_flats(m))?;
    Ok(())
}

/// Parses an `.arr` document: one normal vector per line, entries integers
/// or fractions `a/b`.
pub fn parse_arrangement(text: &str) -> Result<Vec<Vec<Rational>>> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (line, body) in content_lines(text) {
        let row = body
            .split_whitespace()
            .map(|tok| {
                Rational::from_str(tok)
                    .map_err(|_| Error::parse(line, format!("`{tok}` is not a rational number")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::parse(
                    line,
                    format!("expected {} entries, found {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    Ok(rows)
}

pub fn read_arrangement_file(path: impl AsRef<Path>) -> Result<Vec<Vec<Rational>>> {
    parse_arrangement(&fs::read_to_string(path)?)
}
