use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat, Rational};

/// Dense polynomial in one variable with rational coefficients.
///
/// `coeffs[k]` is the coefficient of `T^k`. There is never a trailing zero;
/// the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * T^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![rat(0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(rat(1), 1)
    }

    /// `(1 + c*T)` style binomial `a + b*T`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored coefficients (`degree + 1`, or 0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient of an exact division; `None` if there is a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Positive rescaling to an integer polynomial with coprime coefficients.
    ///
    /// The sign of every coefficient is preserved, which is what Sturm chains
    /// need.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num_integer::gcd(g, c.abs());
        }
        Self::from_bigints(ints.into_iter().map(|c| c / &g))
    }

    /// `p(1/T) * T^d`; requires `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Sum of all coefficients, `p(1)`.
    pub fn at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Canonical text form with the given variable name,
    /// e.g. `1 + 18/5*T + T^2`.
    pub fn render(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                (c.clone(), mono)
            });
        render_terms(terms)
    }
}

/// Joins `(coefficient, monomial)` pairs into `c0 + c1*m1 - c2*m2 ...`.
pub(crate) fn render_terms(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::frac;
    use proptest::prelude::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn binomial_square() {
        let p = up(&[1, 1]);
        assert_eq!(&p * &p, up(&[1, 2, 1]));
    }

    #[test]
    fn add_zero_is_identity() {
        let p = up(&[3, 0, -2]);
        assert_eq!(&p + &UniPoly::zero(), p);
        assert_eq!(&p - &p, UniPoly::zero());
    }

    #[test]
    fn trailing_zeros_dropped() {
        assert_eq!(up(&[1, 2, 0, 0]).len(), 2);
        assert_eq!(up(&[0, 0]), UniPoly::zero());
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn division() {
        // (T^3 - 1) / (T - 1) = T^2 + T + 1
        let (q, r) = up(&[-1, 0, 0, 1]).div_rem(&up(&[-1, 1]));
        assert_eq!(q, up(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = up(&[1, 0, 1]).div_rem(&up(&[0, 2]));
        assert_eq!(q, UniPoly::new(vec![rat(0), frac(1, 2)]));
        assert_eq!(r, up(&[1]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &up(&[1, 1]) * &up(&[2, 3]);
        let b = &up(&[1, 1]) * &up(&[-5, 1]);
        assert_eq!(a.gcd(&b), up(&[1, 1]));
    }

    #[test]
    fn primitive_keeps_signs() {
        let p = UniPoly::new(vec![frac(-1, 2), frac(3, 4)]);
        assert_eq!(p.primitive(), up(&[-2, 3]));
    }

    #[test]
    fn rendering() {
        assert_eq!(up(&[14, 68, 14]).to_string(), "14 + 68*T + 14*T^2");
        let p = UniPoly::new(vec![rat(1), frac(18, 5), rat(1)]);
        assert_eq!(p.to_string(), "1 + 18/5*T + T^2");
        assert_eq!(up(&[1, -2, 0, -1]).to_string(), "1 - 2*T - T^3");
        assert_eq!(up(&[0, -3]).to_string(), "-3*T");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(up(&[1, 1]).render("Y"), "1 + Y");
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| UniPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn degree_of_product_adds(a in small_poly(), b in small_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn div_rem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.len() < b.len());
        }

        #[test]
        fn palindromic_iff_symmetric(c in prop::collection::vec(-3i64..3, 1..6)) {
            let p = UniPoly::from_ints(&c);
            let d = c.len() - 1;
            let symmetric = (0..=d).all(|i| c[i] == c[d - i]);
            prop_assert_eq!(crate::exactpoly::is_palindromic(&p, d), symmetric);
        }
    }
}
