//! Exact rational arithmetic and polynomials in one (`T`) and two (`Y`, `T`)
//! variables.
//!
//! Everything here is exact: coefficients are arbitrary-precision fractions
//! kept in lowest terms, and no operation rounds.

mod bipoly;
mod sturm;
mod unipoly;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use bipoly::BiPoly;
pub use sturm::{count_real_roots, squarefree_decomposition, RootCount};
pub use unipoly::UniPoly;

/// Exact fraction with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficient-wise comparison of two polynomials, padding the shorter one
/// with zeros.
///
/// `Some(Less)` means every coefficient of `a` is at most the matching one of
/// `b` and at least one is strictly smaller; `None` means incomparable.
pub fn coeffwise_cmp(a: &UniPoly, b: &UniPoly) -> Option<Ordering> {
    let len = a.len().max(b.len());
    let mut less = false;
    let mut greater = false;
    for k in 0..len {
        match a.coeff(k).cmp(&b.coeff(k)) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => {}
        }
    }
    match (less, greater) {
        (false, false) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (true, true) => None,
    }
}

/// `a <= b` coefficient-wise.
pub fn coeffwise_le(a: &UniPoly, b: &UniPoly) -> bool {
    matches!(
        coeffwise_cmp(a, b),
        Some(Ordering::Less) | Some(Ordering::Equal)
    )
}

/// True iff `T^d * p(1/T) == p`, i.e. `c_i == c_{d-i}` for all `i`.
///
/// A degree hint below the actual degree can never be palindromic.
pub fn is_palindromic(p: &UniPoly, d: usize) -> bool {
    if p.is_zero() {
        return true;
    }
    if p.len() > d + 1 {
        return false;
    }
    (0..=d).all(|i| p.coeff(i) == p.coeff(d - i))
}

/// Squared Euclidean distance between coefficient vectors.
pub fn squared_distance(a: &UniPoly, b: &UniPoly) -> Rational {
    let len = a.len().max(b.len());
    (0..len)
        .map(|k| {
            let d = a.coeff(k) - b.coeff(k);
            &d * &d
        })
        .fold(rat(0), |acc, x| acc + x)
}

/// Binomial coefficient as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `[num, den]`, with each part a JSON integer when it fits in 64 bits and a
/// decimal string otherwise.
pub fn rational_json(c: &Rational) -> serde_json::Value {
    fn int(x: &BigInt) -> serde_json::Value {
        match i64::try_from(x) {
            Ok(v) => v.into(),
            Err(_) => x.to_string().into(),
        }
    }
    serde_json::Value::Array(vec![int(c.numer()), int(c.denom())])
}

/// Coefficient list of `p` as `[[num, den], ...]` in ascending powers.
pub fn poly_json(p: &UniPoly) -> serde_json::Value {
    serde_json::Value::Array(p.coeffs().iter().map(rational_json).collect())
}
