use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::unipoly::render_terms;
use super::{rat, Rational, UniPoly};

/// Sparse polynomial in `Y` and `T` with rational coefficients.
///
/// Terms are keyed by `(T-power, Y-power)` so iteration follows the
/// canonical rendering order. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0, 0)
    }

    /// `c * Y^y * T^t`
    pub fn monomial(c: Rational, y: usize, t: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(y, t, c);
        p
    }

    pub fn y() -> Self {
        Self::monomial(rat(1), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(rat(1), 0, 1)
    }

    /// Embeds a univariate polynomial as a polynomial in `Y`.
    pub fn from_y_poly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(k, 0, c.clone());
        }
        out
    }

    /// Embeds a univariate polynomial as a polynomial in `T`.
    pub fn from_t_poly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, k, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, y: usize, t: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (t, y);
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, y: usize, t: usize) -> Rational {
        self.terms
            .get(&(t, y))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates `(y_power, t_power, coefficient)` in `(T, Y)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.terms.iter().map(|(&(t, y), c)| (y, t, c))
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, y)| y).max()
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(t, _)| t).max()
    }

    /// Coefficient of `T^k` as a polynomial in `Y`.
    pub fn t_coeff(&self, k: usize) -> UniPoly {
        let deg = self.y_degree().unwrap_or(0);
        UniPoly::new((0..=deg).map(|y| self.coeff(y, k)).collect())
    }

    /// Partial evaluation `Y := value`, leaving a polynomial in `T`.
    pub fn substitute_y(&self, value: &Rational) -> UniPoly {
        let deg = self.t_degree().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(t, y), c) in &self.terms {
            coeffs[t] += c * pow(value, y);
        }
        UniPoly::new(coeffs)
    }

    /// Partial evaluation `T := value`, leaving a polynomial in `Y`.
    pub fn substitute_t(&self, value: &Rational) -> UniPoly {
        let deg = self.y_degree().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(t, y), c) in &self.terms {
            coeffs[y] += c * pow(value, t);
        }
        UniPoly::new(coeffs)
    }

    /// The specialisation at `Y = 1`.
    pub fn at_y1(&self) -> UniPoly {
        self.substitute_y(&rat(1))
    }

    pub fn eval(&self, y: &Rational, t: &Rational) -> Rational {
        self.substitute_y(y).eval(t)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(t, y), a) in &self.terms {
            out.add_term(y, t, a * c);
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True iff `c[i][j] == c[dy - i][dt - j]` for every coefficient, i.e.
    /// `Y^dy T^dt p(1/Y, 1/T) == p`.
    pub fn is_bipalindromic(&self, dy: usize, dt: usize) -> bool {
        self.terms.iter().all(|(&(t, y), c)| {
            y <= dy && t <= dt && self.coeff(dy - y, dt - t) == *c
        })
    }

    pub fn render(&self) -> String {
        let terms = self.terms.iter().map(|(&(t, y), c)| {
            let mut parts = Vec::new();
            match y {
                0 => {}
                1 => parts.push("Y".to_string()),
                _ => parts.push(format!("Y^{y}")),
            }
            match t {
                0 => {}
                1 => parts.push("T".to_string()),
                _ => parts.push(format!("T^{t}")),
            }
            (c.clone(), parts.join("*"))
        });
        render_terms(terms)
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = rat(1);
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(t, y), c) in &rhs.terms {
            out.add_term(y, t, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(t, y), c) in &rhs.terms {
            out.add_term(y, t, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ta, ya), a) in &self.terms {
            for (&(tb, yb), b) in &rhs.terms {
                out.add_term(ya + yb, ta + tb, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        self.scale(&rat(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}
