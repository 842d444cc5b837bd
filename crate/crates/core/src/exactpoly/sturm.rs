//! Real-root counting by Sturm chains over the rationals.

use num_traits::{Signed, Zero};

use super::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RootCount {
    pub distinct: usize,
    pub with_multiplicity: usize,
    pub degree: usize,
}

impl RootCount {
    /// All roots real, counted with multiplicity. Constants are vacuously
    /// real-rooted.
    pub fn is_real_rooted(&self) -> bool {
        self.with_multiplicity == self.degree
    }
}

/// Yun's square-free decomposition: `p = c * prod f_i^i` with each `f_i`
/// monic, square-free and pairwise coprime. Returns `(f_i, i)` for the
/// non-constant factors.
pub fn squarefree_decomposition(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let next_b = b.div_exact(&a).expect("gcd divides b");
        let next_c = d.div_exact(&a).expect("gcd divides d");
        d = &next_c - &next_b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = next_b;
        i += 1;
    }
    out
}

fn sturm_chain(f: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![f.primitive(), f.derivative().primitive()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-r).primitive());
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of(x: &super::Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of a square-free polynomial.
fn distinct_real_roots(f: &UniPoly) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(f);
    let at_pos_inf = chain.iter().map(|p| sign_of(p.leading().unwrap()));
    let at_neg_inf = chain.iter().map(|p| {
        let s = sign_of(p.leading().unwrap());
        if p.degree().unwrap() % 2 == 1 {
            -s
        } else {
            s
        }
    });
    sign_changes(at_neg_inf) - sign_changes(at_pos_inf)
}

/// Counts the real roots of `p`, both distinct and with multiplicity.
pub fn count_real_roots(p: &UniPoly) -> Result<RootCount> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(RootCount {
            distinct: 0,
            with_multiplicity: 0,
            degree,
        });
    }
    let squarefree = p.div_exact(&p.gcd(&p.derivative())).expect("gcd divides p");
    let distinct = distinct_real_roots(&squarefree);
    let with_multiplicity = squarefree_decomposition(p)
        .iter()
        .map(|(f, m)| m * distinct_real_roots(f))
        .sum();
    Ok(RootCount {
        distinct,
        with_multiplicity,
        degree,
    })
}
