//! Exact linear algebra over the rationals and small finite fields.
//!
//! Only what the matroid constructors and the covector enumerator need: row
//! echelon forms, span membership and null spaces.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::Rational;

pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

/// Prime powers accepted by [`GaloisField::new`].
pub const SUPPORTED_PRIME_POWERS: [u32; 18] =
    [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32];

/// The finite field with `q <= 32` elements, represented by lookup tables.
///
/// Elements are the integers `0..q`, read as base-`p` digit vectors of a
/// polynomial over `F_p` reduced modulo a fixed irreducible polynomial.
#[derive(Clone, Debug)]
pub struct GaloisField {
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if !SUPPORTED_PRIME_POWERS.contains(&q) {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two polynomials over F_p reduced modulo the monic `modulus`
/// (given without its leading coefficient, low degree first).
fn mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len();
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c != 0 {
            prod[deg] = 0;
            // x^k = -modulus(x)
            for (j, &m) in modulus.iter().enumerate() {
                prod[deg - k + j] = (prod[deg - k + j] + (p - c) * m % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    // a monic polynomial of degree <= 5 is irreducible iff the field
    // generated by it has no zero divisors
    let k = modulus.len() as u32;
    let q = p.pow(k);
    for a in 1..q {
        for b in 1..q {
            let prod = mulmod(&digits(a, p, k), &digits(b, p, k), modulus, p);
            if prod.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::UnsupportedPrimePower(q))?;
        let q_us = q as usize;
        let modulus: Vec<u32> = if k == 1 {
            vec![0]
        } else {
            (0..p.pow(k))
                .map(|m| digits(m, p, k))
                .find(|m| is_irreducible(m, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let mut add = vec![0u8; q_us * q_us];
        let mut mul = vec![0u8; q_us * q_us];
        for a in 0..q {
            for b in 0..q {
                let da = digits(a, p, k);
                let db = digits(b, p, k);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                let idx = (a * q + b) as usize;
                add[idx] = undigits(&sum, p) as u8;
                mul[idx] = if k == 1 {
                    (a * b % p) as u8
                } else {
                    undigits(&mulmod(&da, &db, &modulus, p), p) as u8
                };
            }
        }
        let mut neg = vec![0u8; q_us];
        let mut inv = vec![0u8; q_us];
        for a in 0..q_us {
            neg[a] = (0..q_us).find(|&b| add[a * q_us + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q_us).find(|&b| mul[a * q_us + b] == 1).unwrap() as u8;
            }
        }
        Ok(GaloisField {
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }
}

impl Field for GaloisField {
    type Elem = u8;

    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn add(&self, a: &u8, b: &u8) -> u8 {
        self.add[*a as usize * self.q as usize + *b as usize]
    }
    fn neg(&self, a: &u8) -> u8 {
        self.neg[*a as usize]
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        self.mul[*a as usize * self.q as usize + *b as usize]
    }
    fn inv(&self, a: &u8) -> u8 {
        assert!(*a != 0, "inverse of zero");
        self.inv[*a as usize]
    }
}

/// A reduced row echelon basis of a subspace, supporting membership tests.
#[derive(Debug)]
pub struct EchelonBasis<F: Field> {
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new() -> Self {
        EchelonBasis {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: &F, vectors: &[Vec<F::Elem>]) -> Self {
        let mut basis = Self::new();
        for v in vectors {
            basis.insert(field, v.clone());
        }
        basis
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, field: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !field.is_zero(&v[p]) {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = field.sub(x, &field.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, field: &F, v: &[F::Elem]) -> bool {
        self.reduce(field, v.to_vec())
            .iter()
            .all(|x| field.is_zero(x))
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, field: &F, v: Vec<F::Elem>) -> bool {
        let mut v = self.reduce(field, v);
        let Some(p) = v.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&v[p]);
        for x in v.iter_mut() {
            *x = field.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !field.is_zero(&row[p]) {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = field.sub(x, &field.mul(&c, y));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

impl<F: Field> Clone for EchelonBasis<F> {
    fn clone(&self) -> Self {
        EchelonBasis {
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        }
    }
}

impl<F: Field> Default for EchelonBasis<F> {
    fn default() -> Self {
        Self::new()
    }
}

pub fn rank<F: Field>(field: &F, vectors: &[Vec<F::Elem>]) -> usize {
    EchelonBasis::span(field, vectors).dim()
}

/// Basis of `{x : row . x = 0 for all rows}` in `dim` coordinates.
pub fn null_space(rows: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let field = Rationals;
    let basis = EchelonBasis::span(&field, rows);
    let free: Vec<usize> = (0..dim).filter(|c| !basis.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); dim];
            x[f] = Rational::one();
            for (row, &p) in basis.rows.iter().zip(&basis.pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn rv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rational_rank_and_span() {
        let field = Rationals;
        let vs = vec![rv(&[1, 2, 3]), rv(&[2, 4, 6]), rv(&[0, 1, 1])];
        assert_eq!(rank(&field, &vs), 2);
        let basis = EchelonBasis::span(&field, &vs);
        assert!(basis.contains(&field, &rv(&[1, 3, 4])));
        assert!(!basis.contains(&field, &rv(&[0, 0, 1])));
    }

    #[test]
    fn null_space_is_orthogonal() {
        let rows = vec![rv(&[1, 1, 1, 1]), rv(&[1, 2, 3, 4])];
        let ns = null_space(&rows, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                assert_eq!(dot(r, x), rat(0));
            }
        }
        assert_eq!(rank(&Rationals, &ns), 2);
    }

    #[test]
    fn galois_fields_are_fields() {
        for &q in &SUPPORTED_PRIME_POWERS {
            let f = GaloisField::new(q).unwrap();
            for a in 0..q as u8 {
                assert_eq!(f.add(&a, &f.neg(&a)), 0);
                assert_eq!(f.mul(&a, &1), a);
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a)), 1);
                }
                // distributivity on a sample
                let b = (a as u32 * 7 % q) as u8;
                let c = (a as u32 * 3 % q + 1) as u8 % q as u8;
                assert_eq!(
                    f.mul(&a, &f.add(&b, &c)),
                    f.add(&f.mul(&a, &b), &f.mul(&a, &c))
                );
            }
        }
    }

    #[test]
    fn unsupported_orders_rejected() {
        for q in [0, 1, 6, 10, 12, 33, 64] {
            assert!(matches!(
                GaloisField::new(q),
                Err(Error::UnsupportedPrimePower(_))
            ));
        }
    }
}
