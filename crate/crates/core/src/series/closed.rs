//! Closed forms: rank 3, Eulerian polynomials, uniform matroids and
//! projective geometries.

use num_bigint::BigInt;
use serde::Serialize;

use super::flag_weight;
use crate::error::{Error, Result};
use crate::exactpoly::{binomial, rat, squared_distance, BiPoly, Rational, UniPoly};
use crate::linalg::SUPPORTED_PRIME_POWERS;
use crate::matroid::Matroid;

/// Flat census of a simple rank-3 matroid: `n` points, `c` lines, and `s`
/// the sum of line sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rank3Profile {
    pub n: u64,
    pub c: u64,
    pub s: u64,
}

impl Rank3Profile {
    pub fn new(n: u64, c: u64, s: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidProfile(format!("n = {n} < 3")));
        }
        if s < 2 * c {
            return Err(Error::InvalidProfile(format!("s = {s} < 2c = {}", 2 * c)));
        }
        if c < n {
            return Err(Error::InvalidProfile(format!("c = {c} < n = {n}")));
        }
        Ok(Rank3Profile { n, c, s })
    }

    /// Census of `sim(M)`; `M` must have rank 3.
    pub fn of(m: &Matroid) -> Result<Self> {
        if m.rank() != 3 {
            return Err(Error::InvalidProfile(format!("rank {} is not 3", m.rank())));
        }
        let sim = m.simplify();
        let n = sim.ground_set_size() as u64;
        let c = sim.flats_of_rank(2).count() as u64;
        let s = sim.flats_of_rank(2).map(|l| l.len() as u64).sum();
        Self::new(n, c, s)
    }

    /// `3(c - 1) < s`.
    pub fn excess(&self) -> i64 {
        self.s as i64 - 3 * (self.c as i64 - 1)
    }

    pub fn poincare(&self) -> UniPoly {
        let (n, c, s) = (self.n as i64, self.c as i64, self.s as i64);
        UniPoly::from_ints(&[1, n, s - c, 1 + s - n - c])
    }

    pub fn phi(&self) -> UniPoly {
        let (n, c, s) = (self.n as i64, self.c as i64, self.s as i64);
        let outer = n + c - 2;
        let inner = 2 * s - n + c;
        UniPoly::from_ints(&[outer, inner, inner, outer])
    }
}

/// `pi(Y) + phi(Y) T + Y^3 pi(1/Y) T^2`.
pub fn rank3_closed_form(p: &Rank3Profile) -> BiPoly {
    let pi = p.poincare();
    let t = BiPoly::t();
    BiPoly::from_y_poly(&pi)
        + &BiPoly::from_y_poly(&p.phi()) * &t
        + &BiPoly::from_y_poly(&pi.reversed(3)) * &t.pow(2)
}

/// `1 + (2 + 4(c - 1)/(s - (c - 1))) T + T^2`.
pub fn rank3_normalized(p: &Rank3Profile) -> UniPoly {
    let c1 = p.c as i64 - 1;
    let middle = rat(2) + Rational::new(BigInt::from(4 * c1), BigInt::from(p.s as i64 - c1));
    UniPoly::new(vec![rat(1), middle, rat(1)])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EulerianType {
    A,
    B,
}

/// `E_r^A` or `E_r^B` from `E_1 = 1` by the derivative recurrences
/// `E_{r+1}^A = (1 + rT) E_r^A + T(1-T) E_r^A'` and
/// `E_{r+1}^B = (1 + (2r-1)T) E_r^B + 2T(1-T) E_r^B'`.
pub fn eulerian(kind: EulerianType, r: usize) -> Result<UniPoly> {
    if r == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    let t_one_minus_t = UniPoly::from_ints(&[0, 1, -1]);
    let mut e = UniPoly::one();
    for k in 1..r as i64 {
        let (lin, scale) = match kind {
            EulerianType::A => (k, 1),
            EulerianType::B => (2 * k - 1, 2),
        };
        e = UniPoly::from_ints(&[1, lin]) * &e + t_one_minus_t.scale(&rat(scale)) * e.derivative();
    }
    Ok(e)
}

/// `(1-T)^{r-1} + sum_{k=1}^{r-1} 2^k C(r-1, k) T (1-T)^{r-k-1} E_k^A`.
pub fn eulerian_ab_rhs(r: usize) -> Result<UniPoly> {
    if r == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    let one_minus_t = UniPoly::from_ints(&[1, -1]);
    let mut acc = one_minus_t.pow(r - 1);
    for k in 1..r {
        let c = Rational::from_integer(binomial(r as u64 - 1, k as u64) << k);
        let term = UniPoly::monomial(c, 1) * one_minus_t.pow(r - k - 1) * eulerian(EulerianType::A, k)?;
        acc = acc + term;
    }
    Ok(acc)
}

/// True iff `E_r^B` equals [`eulerian_ab_rhs`].
pub fn eulerian_ab_identity(r: usize) -> bool {
    match (eulerian(EulerianType::B, r), eulerian_ab_rhs(r)) {
        (Ok(b), Ok(rhs)) => b == rhs,
        _ => false,
    }
}

fn big(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Closed form of `N_{U_{r,m}}(1, T) / pi_{U_{r,m}}(1)`.
pub fn uniform_normalized_closed_form(r: usize, m: usize) -> Result<UniPoly> {
    if r == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    if r > m {
        return Err(Error::RankExceedsGroundSet { rank: r, n: m });
    }
    let (r64, m64) = (r as u64, m as u64);
    let one_minus_t = UniPoly::from_ints(&[1, -1]);
    let mut sum = UniPoly::zero();
    for l in 1..r64 {
        let inner: BigInt = (0..r64 - l).map(|k| binomial(m64 - l - 1, k)).sum();
        let c = Rational::from_integer((binomial(m64, l) * inner) << l);
        let term = UniPoly::monomial(c, 1)
            * one_minus_t.pow((r64 - l - 1) as usize)
            * eulerian(EulerianType::A, l as usize)?;
        sum = sum + term;
    }
    let denom: BigInt = (0..r64).map(|k| binomial(m64 - 1, k)).sum();
    Ok(one_minus_t.pow(r - 1) + sum.scale(&Rational::from_integer(denom).recip()))
}

/// `[r choose k]_X` as a polynomial in `X`.
pub fn gaussian_binom(r: usize, k: usize) -> Result<UniPoly> {
    if k > r {
        return Err(Error::BinomialOutOfRange { r, k });
    }
    let one_minus = |e: usize| UniPoly::one() - UniPoly::monomial(rat(1), e);
    let num = (0..k).fold(UniPoly::one(), |acc, i| acc * one_minus(r - i));
    let den = (1..=k).fold(UniPoly::one(), |acc, i| acc * one_minus(i));
    Ok(num.div_exact(&den).expect("Gaussian binomials are polynomials"))
}

fn check_index_set(set: &[usize], r: usize) -> Result<()> {
    let increasing = set.windows(2).all(|w| w[0] < w[1]);
    let in_range = set.iter().all(|&i| i >= 1 && i < r);
    if increasing && in_range {
        Ok(())
    } else {
        Err(Error::SubsetOutOfRange {
            set: set.to_vec(),
            max: r.saturating_sub(1),
        })
    }
}

/// `[r choose I]_X = prod_{m=1}^{|I|} [i_{m+1} choose i_m]_X` with
/// `i_{|I|+1} = r`.
pub fn gaussian_multinomial(r: usize, set: &[usize]) -> Result<UniPoly> {
    check_index_set(set, r)?;
    let mut acc = UniPoly::one();
    for (m, &i) in set.iter().enumerate() {
        let next = set.get(m + 1).copied().unwrap_or(r);
        acc = acc * gaussian_binom(next, i)?;
    }
    Ok(acc)
}

/// `gamma_I(q, Y) = prod_l prod_{m=0}^{i_{l+1} - i_l - 1} (1 + q^m Y)` with
/// `i_0 = 0` and `i_{|I|+1} = r`, as a polynomial in `Y`.
pub fn gamma_i(set: &[usize], q: &Rational, r: usize) -> Result<UniPoly> {
    check_index_set(set, r)?;
    let mut cuts = vec![0];
    cuts.extend_from_slice(set);
    cuts.push(r);
    let mut acc = UniPoly::one();
    for w in cuts.windows(2) {
        let mut qm = rat(1);
        for _ in 0..w[1] - w[0] {
            acc = acc * UniPoly::linear(rat(1), qm.clone());
            qm *= q;
        }
    }
    Ok(acc)
}

/// `N_{PG(r-1,q)}(Y, T) = sum_I [r choose I]_q gamma_I(q, Y) T^|I| (1-T)^{r-1-|I|}`.
pub fn pg_closed_form(r: usize, q: u32) -> Result<BiPoly> {
    if r == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    if !SUPPORTED_PRIME_POWERS.contains(&q) {
        return Err(Error::UnsupportedPrimePower(q));
    }
    let qr = big(q as u64);
    let mut acc = BiPoly::zero();
    for mask in 0u32..1 << (r - 1) {
        let set: Vec<usize> = (1..r).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let count = gaussian_multinomial(r, &set)?.eval(&qr);
        let gamma = gamma_i(&set, &qr, r)?.scale(&count);
        let weight = flag_weight(set.len(), r - 1);
        acc = &acc + &(&BiPoly::from_y_poly(&gamma) * &BiPoly::from_t_poly(&weight));
    }
    Ok(acc)
}

/// Families whose normalized polynomials approach a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LimitFamily {
    /// `U_{r,m}` for growing `m`; target `E_r^B`.
    Uniform { r: usize },
    /// `PG(r-1, q)` for growing `q`; target `(1+T)^{r-1}`.
    Pg { r: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitRow {
    pub param: u64,
    pub normalized: UniPoly,
    pub squared_distance: Rational,
}

/// Squared Euclidean distance from each family member's normalized
/// polynomial to the limiting polynomial.
pub fn limit_distance_table(family: LimitFamily, params: &[u64]) -> Result<Vec<LimitRow>> {
    let (target, r) = match family {
        LimitFamily::Uniform { r } => (eulerian(EulerianType::B, r)?, r),
        LimitFamily::Pg { r } => (UniPoly::from_ints(&[1, 1]).pow(r.saturating_sub(1)), r),
    };
    params
        .iter()
        .map(|&param| {
            let normalized = match family {
                LimitFamily::Uniform { .. } => uniform_normalized_closed_form(r, param as usize)?,
                LimitFamily::Pg { .. } => {
                    let q = u32::try_from(param).map_err(|_| Error::UnsupportedPrimePower(u32::MAX))?;
                    let n = pg_closed_form(r, q)?.at_y1();
                    // only the empty flag survives at T = 0, so N(1, 0) = pi(1)
                    let pi1 = n.coeff(0);
                    n.scale(&pi1.recip())
                }
            };
            let squared_distance = squared_distance(&normalized, &target);
            Ok(LimitRow {
                param,
                normalized,
                squared_distance,
            })
        })
        .collect()
}

pub fn is_strictly_decreasing(rows: &[LimitRow]) -> bool {
    rows.windows(2)
        .all(|w| w[1].squared_distance < w[0].squared_distance)
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
    fn rank3_profiles() {
        let u34 = Rank3Profile::new(4, 6, 12).unwrap();
        assert_eq!(
            rank3_normalized(&u34),
            UniPoly::new(vec![rat(1), frac(34, 7), rat(1)])
        );
        let fano = Rank3Profile::new(7, 7, 21).unwrap();
        assert_eq!(
            rank3_normalized(&fano),
            UniPoly::new(vec![rat(1), frac(18, 5), rat(1)])
        );
        let nine = Rank3Profile::new(9, 15, 39).unwrap();
        assert_eq!(nine.phi(), up(&[22, 84, 84, 22]));
        assert!(Rank3Profile::new(4, 6, 11).is_err());
        assert!(Rank3Profile::new(5, 4, 12).is_err());
    }

    #[test]
    fn rank3_closed_form_for_u34() {
        let p = Rank3Profile::new(4, 6, 12).unwrap();
        let n = rank3_closed_form(&p);
        assert_eq!(n.t_coeff(0), up(&[1, 4, 6, 3]));
        assert_eq!(n.t_coeff(1), up(&[8, 26, 26, 8]));
        assert_eq!(n.t_coeff(2), up(&[3, 6, 4, 1]));
    }

    #[test]
    fn eulerian_small_values() {
        use EulerianType::*;
        assert_eq!(eulerian(A, 1).unwrap(), up(&[1]));
        assert_eq!(eulerian(A, 2).unwrap(), up(&[1, 1]));
        assert_eq!(eulerian(B, 2).unwrap(), up(&[1, 1]));
        assert_eq!(eulerian(A, 3).unwrap(), up(&[1, 4, 1]));
        assert_eq!(eulerian(B, 3).unwrap(), up(&[1, 6, 1]));
        assert_eq!(eulerian(A, 4).unwrap(), up(&[1, 11, 11, 1]));
        assert_eq!(eulerian(B, 4).unwrap(), up(&[1, 23, 23, 1]));
        assert!(eulerian(A, 0).is_err());
    }

    #[test]
    fn eulerian_values_at_one() {
        // E_r^A(1) = r!, and the type B values from the recurrence
        let mut fact = 1i64;
        for r in 1..=8usize {
            fact *= r as i64;
            assert_eq!(eulerian(EulerianType::A, r).unwrap().at_one(), rat(fact));
        }
        assert_eq!(eulerian(EulerianType::B, 3).unwrap().at_one(), rat(8));
        assert_eq!(eulerian(EulerianType::B, 4).unwrap().at_one(), rat(48));
    }

    #[test]
    fn ab_identity_small_ranks() {
        assert_eq!(eulerian_ab_rhs(3).unwrap(), up(&[1, 6, 1]));
        for r in 1..=8 {
            assert!(eulerian_ab_identity(r), "r = {r}");
        }
        assert!(!eulerian_ab_identity(0));
    }

    #[test]
    fn uniform_closed_form_values() {
        assert_eq!(
            uniform_normalized_closed_form(3, 4).unwrap(),
            UniPoly::new(vec![rat(1), frac(34, 7), rat(1)])
        );
        assert_eq!(uniform_normalized_closed_form(4, 7).unwrap(), up(&[1, 19, 19, 1]));
        for r in 1..=6 {
            assert_eq!(
                uniform_normalized_closed_form(r, r).unwrap(),
                eulerian(EulerianType::A, r).unwrap()
            );
        }
        assert!(uniform_normalized_closed_form(5, 4).is_err());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binom(2, 1).unwrap(), up(&[1, 1]));
        assert_eq!(gaussian_binom(5, 0).unwrap(), up(&[1]));
        assert_eq!(gaussian_binom(4, 2).unwrap().eval(&rat(2)), rat(35));
        assert!(gaussian_binom(2, 3).is_err());
        // q-Pascal at X = 1 recovers ordinary binomials
        for r in 0..8u64 {
            for k in 0..=r {
                let v = gaussian_binom(r as usize, k as usize).unwrap().at_one();
                assert_eq!(v, Rational::from_integer(binomial(r, k)));
            }
        }
    }

    #[test]
    fn gaussian_binom_counts_subspaces_of_f2_4() {
        // brute force: 2-dimensional subspaces of F_2^4 as sets of vectors
        let mut planes = std::collections::BTreeSet::new();
        for a in 1u8..16 {
            for b in 1u8..16 {
                if a != b {
                    planes.insert([0, a, b, a ^ b].into_iter().collect::<std::collections::BTreeSet<_>>());
                }
            }
        }
        let expected = gaussian_binom(4, 2).unwrap().eval(&rat(2));
        assert_eq!(Rational::from_integer(BigInt::from(planes.len())), expected);
    }

    #[test]
    fn gamma_examples() {
        let q = rat(2);
        assert_eq!(gamma_i(&[], &q, 3).unwrap(), up(&[1, 1]) * up(&[1, 2]) * up(&[1, 4]));
        assert_eq!(gamma_i(&[1, 2], &q, 3).unwrap(), up(&[1, 1]).pow(3));
        assert_eq!(gamma_i(&[1], &q, 3).unwrap(), up(&[1, 1]) * up(&[1, 1]) * up(&[1, 2]));
        assert!(gamma_i(&[2, 1], &q, 3).is_err());
        assert!(gamma_i(&[3], &q, 3).is_err());
        assert!(gaussian_multinomial(3, &[0]).is_err());
    }

    #[test]
    fn pg_closed_form_on_projective_lines() {
        for q in [2u32, 3, 4, 5, 7] {
            let n = pg_closed_form(2, q).unwrap();
            let m = q as i64 + 1;
            assert_eq!(n.t_coeff(0), up(&[1, 1]) * up(&[1, m - 1]));
            assert_eq!(n.t_coeff(1), up(&[1, 1]) * up(&[m - 1, 1]));
        }
        assert!(pg_closed_form(3, 6).is_err());
    }

    #[test]
    fn limit_tables_decrease() {
        let params: Vec<u64> = (4..=12).collect();
        let t = limit_distance_table(LimitFamily::Uniform { r: 3 }, &params).unwrap();
        assert!(is_strictly_decreasing(&t));
        let t = limit_distance_table(LimitFamily::Pg { r: 3 }, &[2, 3, 4, 5, 7]).unwrap();
        assert!(is_strictly_decreasing(&t));
        let single = limit_distance_table(LimitFamily::Uniform { r: 3 }, &[5]).unwrap();
        assert_eq!(single.len(), 1);
        assert!(is_strictly_decreasing(&single));
    }

    proptest! {
        #[test]
        fn gaussian_symmetry(r in 0usize..9, k in 0usize..9) {
            prop_assume!(k <= r);
            prop_assert_eq!(gaussian_binom(r, k).unwrap(), gaussian_binom(r, r - k).unwrap());
        }

        #[test]
        fn normalized_uniform_is_palindromic(r in 1usize..6, extra in 0usize..5) {
            let p = uniform_normalized_closed_form(r, r + extra).unwrap();
            prop_assert!(crate::exactpoly::is_palindromic(&p, r - 1));
            prop_assert_eq!(p.coeff(0), rat(1));
        }
    }
}
