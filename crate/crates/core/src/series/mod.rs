//! Coarse flag polynomials of matroids and their closed forms.
//!
//! For a matroid `M` of rank `r` the coarse flag polynomial is
//!
//! ```text
//! N_M(Y, T) = sum over flags F of pi_F(Y) * T^|F| * (1 - T)^(r - 1 - |F|)
//! ```
//!
//! where `F` runs over chains of proper nontrivial flats and `pi_F` is the
//! product of the Poincaré polynomials of the intervals cut out by `F`.

mod closed;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactpoly::{poly_json, rat, BiPoly, Rational, UniPoly};
use crate::matroid::{Flag, Matroid};

pub use closed::{
    eulerian, eulerian_ab_identity, eulerian_ab_rhs, gamma_i, gaussian_binom,
    gaussian_multinomial, is_strictly_decreasing, limit_distance_table, pg_closed_form,
    rank3_closed_form, rank3_normalized, uniform_normalized_closed_form, EulerianType,
    LimitFamily, LimitRow, Rank3Profile,
};

/// `pi_M(Y) = sum_X mu(X) (-Y)^{r(X)}`, as a polynomial in `Y`.
pub fn poincare(m: &Matroid) -> UniPoly {
    let lat = m.lattice();
    lat.interval_poincare(lat.bottom(), lat.top())
}

/// `pi_F(Y)`: the product of `pi` over the minors `M/X_k | X_{k+1}` along
/// `0̂ < X_1 < ... < X_l < 1̂`. The empty flag gives `pi_M`.
pub fn flag_poincare(m: &Matroid, flag: &Flag) -> Result<UniPoly> {
    let lat = m.lattice();
    lat.resolve_flag(flag)?;
    let mut chain: Vec<&[usize]> = vec![m.loops()];
    chain.extend(flag.chain.iter().map(Vec::as_slice));
    let ground: Vec<usize> = (0..m.ground_set_size()).collect();
    chain.push(&ground);
    let mut acc = UniPoly::one();
    for pair in chain.windows(2) {
        let minor = m.interval_minor(pair[0], pair[1])?;
        acc = acc * poincare(&minor);
    }
    Ok(acc)
}

/// `T^k (1 - T)^{d - k}`
pub(crate) fn flag_weight(k: usize, d: usize) -> UniPoly {
    UniPoly::monomial(rat(1), k) * UniPoly::from_ints(&[1, -1]).pow(d - k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoarseResult {
    pub rank: usize,
    /// `N_M(Y, T)`.
    pub numerator: BiPoly,
    /// `pi_M(Y)`.
    pub poincare: UniPoly,
    /// `N_M(1, T) / pi_M(1)`.
    pub normalized_y1: UniPoly,
}

impl CoarseResult {
    fn from_parts(rank: usize, numerator: BiPoly, poincare: UniPoly) -> Self {
        let total = poincare.at_one();
        assert!(total > rat(0), "pi_M(1) must be positive");
        let normalized_y1 = numerator.at_y1().scale(&total.recip());
        CoarseResult {
            rank,
            numerator,
            poincare,
            normalized_y1,
        }
    }

    /// `N_M(1, T)`.
    pub fn at_y1(&self) -> UniPoly {
        self.numerator.at_y1()
    }

    /// `pi_M(1)`, the number of chambers for a real arrangement.
    pub fn poincare_at_one(&self) -> Rational {
        self.poincare.at_one()
    }

    pub fn to_json(&self) -> Value {
        let mut num = Map::new();
        for k in 0..self.rank.max(1) {
            num.insert(format!("t{k}"), poly_json(&self.numerator.t_coeff(k)));
        }
        json!({
            "rank": self.rank,
            "poincare": poly_json(&self.poincare),
            "numerator": Value::Object(num),
            "normalized_y1": poly_json(&self.normalized_y1),
        })
    }
}

fn require_rank(m: &Matroid) -> Result<()> {
    if m.rank() == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    Ok(())
}

/// Computes `N_M(Y, T)` by dynamic programming over chains of the lattice of
/// flats: the sum of `pi_F` over flags of length `k` ending at `X` is built
/// from the same sums ending below `X`.
pub fn coarse_numerator(m: &Matroid) -> Result<CoarseResult> {
    require_rank(m)?;
    let lat = m.lattice();
    let r = m.rank();
    let d = r - 1;
    let top = lat.top();
    let mu: Vec<Vec<i64>> = (0..lat.len()).map(|x| lat.mobius_from(x)).collect();

    // ending[x][k]: sum of pi over chains 0̂ < X_1 < ... < X_k = x
    let mut ending: Vec<Vec<UniPoly>> = vec![vec![UniPoly::zero(); r]; lat.len()];
    ending[lat.bottom()][0] = UniPoly::one();
    let mut by_length: Vec<UniPoly> = vec![UniPoly::zero(); r];
    for x in 0..top {
        for k in 0..r {
            if ending[x][k].is_zero() {
                continue;
            }
            let here = ending[x][k].clone();
            for &z in &lat.upset(x)[1..] {
                let p = lat.interval_poincare_with(x, z, &mu[x]);
                if z == top {
                    by_length[k] = &by_length[k] + &(&here * &p);
                } else if k < d {
                    ending[z][k + 1] = &ending[z][k + 1] + &(&here * &p);
                }
            }
        }
    }
    let numerator: BiPoly = by_length
        .iter()
        .enumerate()
        .map(|(k, g)| &BiPoly::from_y_poly(g) * &BiPoly::from_t_poly(&flag_weight(k, d)))
        .sum();
    let pi = lat.interval_poincare_with(lat.bottom(), top, &mu[lat.bottom()]);
    Ok(CoarseResult::from_parts(r, numerator, pi))
}

/// The same polynomial by listing every flag and multiplying Poincaré
/// polynomials of explicitly constructed minors. Slow; used as an oracle.
pub fn coarse_numerator_enumerated(m: &Matroid) -> Result<CoarseResult> {
    require_rank(m)?;
    let r = m.rank();
    let lat = m.lattice();
    let mut numerator = BiPoly::zero();
    for (k, group) in lat.enumerate_flags().iter().enumerate() {
        let weight = BiPoly::from_t_poly(&flag_weight(k, r - 1));
        for flag in group {
            let pf = flag_poincare(m, flag)?;
            numerator = &numerator + &(&BiPoly::from_y_poly(&pf) * &weight);
        }
    }
    Ok(CoarseResult::from_parts(r, numerator, poincare(m)))
}

/// `sum_{|F| = k} pi_F(1)` for `k = 0..r-1`.
pub fn flag_poincare_sums_at_one(m: &Matroid) -> Result<Vec<Rational>> {
    require_rank(m)?;
    let lat = m.lattice();
    let mut sums = Vec::new();
    for group in lat.enumerate_flags() {
        let mut acc = rat(0);
        for flag in &group {
            acc += flag_poincare(m, flag)?.at_one();
        }
        sums.push(acc);
    }
    Ok(sums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::frac;
    use crate::matroid::{fano, pg, uniform};

    fn yp(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn poincare_of_uniform_rank_two() {
        for m in 2..8i64 {
            let expected = yp(&[1, 1]) * yp(&[1, m - 1]);
            assert_eq!(poincare(&uniform(2, m as usize).unwrap()), expected);
        }
        assert_eq!(poincare(&uniform(3, 4).unwrap()), yp(&[1, 4, 6, 3]));
    }

    #[test]
    fn poincare_of_projective_geometry() {
        for (r, q) in [(2usize, 3i64), (3, 2), (3, 3), (4, 2)] {
            let mut expected = UniPoly::one();
            for m in 0..r as u32 {
                expected = expected * yp(&[1, q.pow(m)]);
            }
            assert_eq!(poincare(&pg(r, q as u32).unwrap()), expected);
        }
    }

    #[test]
    fn flag_poincare_examples() {
        let m = uniform(3, 4).unwrap();
        assert_eq!(flag_poincare(&m, &Flag::empty()).unwrap(), yp(&[1, 4, 6, 3]));
        let cube = yp(&[1, 1]).pow(3);
        let maximal = Flag { chain: vec![vec![0], vec![0, 1]] };
        assert_eq!(flag_poincare(&m, &maximal).unwrap(), cube);
        let line = Flag { chain: vec![vec![0, 1]] };
        assert_eq!(flag_poincare(&m, &line).unwrap(), cube);
        let bad = Flag { chain: vec![vec![0, 1], vec![1]] };
        assert!(matches!(flag_poincare(&m, &bad), Err(Error::ChainNotIncreasing(1))));
    }

    #[test]
    fn maximal_flags_of_rank_three_give_cube() {
        let f = fano();
        let cube = yp(&[1, 1]).pow(3);
        for flag in &f.lattice().enumerate_flags()[2] {
            assert_eq!(flag_poincare(&f, flag).unwrap(), cube);
        }
    }

    #[test]
    fn uniform_rank_two_numerator() {
        for n in 2..7i64 {
            let res = coarse_numerator(&uniform(2, n as usize).unwrap()).unwrap();
            let t0 = yp(&[1, 1]) * yp(&[1, n - 1]);
            let t1 = yp(&[1, 1]) * yp(&[n - 1, 1]);
            assert_eq!(res.numerator.t_coeff(0), t0);
            assert_eq!(res.numerator.t_coeff(1), t1);
            assert_eq!(res.numerator.t_degree(), Some(1));
        }
    }

    #[test]
    fn u34_numerator() {
        let res = coarse_numerator(&uniform(3, 4).unwrap()).unwrap();
        assert_eq!(res.numerator.t_coeff(0), yp(&[1, 4, 6, 3]));
        assert_eq!(res.numerator.t_coeff(1), yp(&[8, 26, 26, 8]));
        assert_eq!(res.numerator.t_coeff(2), yp(&[3, 6, 4, 1]));
        assert_eq!(res.at_y1(), yp(&[14, 68, 14]));
        assert_eq!(res.poincare_at_one(), rat(14));
        assert_eq!(
            res.normalized_y1,
            UniPoly::new(vec![rat(1), frac(34, 7), rat(1)])
        );
    }

    #[test]
    fn rank_one_has_no_t_terms() {
        let res = coarse_numerator(&uniform(1, 1).unwrap()).unwrap();
        assert_eq!(res.numerator, BiPoly::from_y_poly(&yp(&[1, 1])));
        assert_eq!(res.numerator.to_string(), "1 + Y");
    }

    #[test]
    fn dynamic_programme_matches_enumeration() {
        for m in [
            uniform(3, 4).unwrap(),
            uniform(4, 6).unwrap(),
            fano(),
            pg(4, 2).unwrap(),
            uniform(2, 2).unwrap(),
        ] {
            assert_eq!(
                coarse_numerator(&m).unwrap(),
                coarse_numerator_enumerated(&m).unwrap()
            );
        }
    }

    #[test]
    fn rank_zero_rejected() {
        let m = Matroid::new(0, 0, [(0, vec![])]).unwrap();
        assert!(matches!(coarse_numerator(&m), Err(Error::RankTooSmall { .. })));
    }

    #[test]
    fn json_layout() {
        let res = coarse_numerator(&uniform(2, 3).unwrap()).unwrap();
        let v = res.to_json();
        assert_eq!(v["rank"], 2);
        assert_eq!(v["poincare"], serde_json::json!([[1, 1], [3, 1], [2, 1]]));
        assert_eq!(v["numerator"]["t1"], serde_json::json!([[2, 1], [3, 1], [1, 1]]));
        assert_eq!(v["normalized_y1"], serde_json::json!([[1, 1], [1, 1]]));
    }
}
