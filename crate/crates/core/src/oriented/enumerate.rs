//! Covectors of a real central arrangement by branch and prune.
//!
//! Signs are assigned hyperplane by hyperplane. A partial assignment
//! survives if some `x` realizes it, which is decided exactly: equalities
//! are solved by passing to a null-space basis, and the remaining strict
//! homogeneous inequalities go through Fourier–Motzkin elimination.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{CovectorSet, SignVector};
use crate::error::{Error, Result};
use crate::exactpoly::Rational;
use crate::linalg::null_space;
use crate::matroid::check_arrangement;

/// Scales a rational vector to a primitive integer vector with the same
/// direction.
fn integral(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    primitive(v.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect())
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g == BigInt::from(1) {
        v
    } else {
        v.into_iter().map(|c| c / &g).collect()
    }
}

/// Decides whether some `z` satisfies `row . z > 0` for every row.
pub fn strictly_feasible(rows: &[Vec<BigInt>]) -> bool {
    let mut rows: BTreeSet<Vec<BigInt>> = rows.iter().cloned().map(primitive).collect();
    loop {
        if rows.is_empty() {
            return true;
        }
        if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return false;
        }
        let width = rows.iter().next().map_or(0, Vec::len);
        // eliminate the column producing the fewest new rows
        let (col, _) = (0..width)
            .map(|k| {
                let pos = rows.iter().filter(|r| r[k].is_positive()).count();
                let neg = rows.iter().filter(|r| r[k].is_negative()).count();
                let cost = if pos == 0 || neg == 0 { 0 } else { pos * neg };
                (k, (pos + neg > 0, cost))
            })
            .filter(|(_, (used, _))| *used)
            .min_by_key(|(_, (_, cost))| *cost)
            .expect("a nonzero row has a nonzero column");
        let (pos, rest): (Vec<_>, Vec<_>) = rows.into_iter().partition(|r| r[col].is_positive());
        let (neg, zero): (Vec<_>, Vec<_>) = rest.into_iter().partition(|r| r[col].is_negative());
        let drop_col = |mut r: Vec<BigInt>| {
            r.remove(col);
            r
        };
        let mut next: BTreeSet<Vec<BigInt>> = zero.into_iter().map(drop_col).collect();
        // a one-signed column can absorb its rows by taking z_col large
        if !pos.is_empty() && !neg.is_empty() {
            for p in &pos {
                for q in &neg {
                    let a = -&q[col];
                    let b = &p[col];
                    let combo: Vec<BigInt> = p.iter().zip(q).map(|(x, y)| &a * x + b * y).collect();
                    next.insert(primitive(drop_col(combo)));
                }
            }
        }
        rows = next;
    }
}

/// Whether the partial sign assignment `signs` (for the first rows) is
/// realized by some point.
fn realizable(rows: &[Vec<BigInt>], rational_rows: &[Vec<Rational>], signs: &[i8], d: usize) -> bool {
    let eq: Vec<Vec<Rational>> = signs
        .iter()
        .zip(rational_rows)
        .filter(|(s, _)| **s == 0)
        .map(|(_, r)| r.clone())
        .collect();
    let basis: Vec<Vec<BigInt>> = null_space(&eq, d).iter().map(|b| integral(b)).collect();
    let strict: Vec<Vec<BigInt>> = signs
        .iter()
        .zip(rows)
        .filter(|(s, _)| **s != 0)
        .map(|(s, r)| {
            basis
                .iter()
                .map(|b| {
                    let dot: BigInt = r.iter().zip(b).map(|(x, y)| x * y).sum();
                    if *s > 0 {
                        dot
                    } else {
                        -dot
                    }
                })
                .collect()
        })
        .collect();
    strictly_feasible(&strict)
}

/// All sign vectors `sign(A x)` of the arrangement with normals `rows`,
/// validated against the covector axioms.
pub fn covectors_from_arrangement(rows: &[Vec<Rational>]) -> Result<CovectorSet> {
    let d = check_arrangement(rows)?;
    let n = rows.len();
    if n > 64 {
        return Err(Error::GroundSetTooLarge(n));
    }
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| integral(r)).collect();
    let mut out: Vec<SignVector> = Vec::new();
    let mut signs: Vec<i8> = Vec::with_capacity(n);
    fn walk(
        int_rows: &[Vec<BigInt>],
        rows: &[Vec<Rational>],
        d: usize,
        signs: &mut Vec<i8>,
        out: &mut Vec<SignVector>,
    ) {
        let n = rows.len();
        if signs.len() == n {
            let plus = signs.iter().enumerate().filter(|(_, s)| **s > 0).fold(0u64, |m, (e, _)| m | 1 << e);
            let minus = signs.iter().enumerate().filter(|(_, s)| **s < 0).fold(0u64, |m, (e, _)| m | 1 << e);
            out.push(SignVector::from_masks(plus, minus, n));
            return;
        }
        for s in [0i8, 1, -1] {
            signs.push(s);
            if realizable(int_rows, rows, signs, d) {
                walk(int_rows, rows, d, signs, out);
            }
            signs.pop();
        }
    }
    walk(&int_rows, rows, d, &mut signs, &mut out);
    CovectorSet::new(n, out)
}
