//! Face lattices, tope intervals and their flag statistics.

use std::collections::HashMap;

use super::{CovectorSet, SignVector};
use crate::error::{Error, Result};
use crate::exactpoly::{rat, UniPoly};
use crate::series::flag_weight;

/// Covectors ordered by conformance, graded by `r - r_M(z(X))`.
///
/// The formal top `1̂` is implicit: it sits above every tope.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    n: usize,
    r: usize,
    covectors: Vec<SignVector>,
    rank: Vec<usize>,
    index: HashMap<SignVector, usize>,
}

/// The order complex of the open interval `(0̂, τ)` of a tope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopeComplex {
    pub tope: SignVector,
    /// `f_k`: chains of `k` faces strictly between `0̂` and the tope, for
    /// `k = 0..=r-1`; `f_0 = 1` counts the empty chain.
    pub f_vector: Vec<u64>,
    /// `sum_k f_k T^k (1-T)^{r-1-k}`.
    pub h: UniPoly,
}

impl FaceLattice {
    pub fn new(c: &CovectorSet) -> Result<Self> {
        let m = c.underlying_matroid()?;
        let r = m.rank();
        let flat_rank: HashMap<u64, usize> = m
            .flats()
            .iter()
            .map(|(k, f)| (f.iter().fold(0u64, |acc, &e| acc | 1 << e), *k))
            .collect();
        let covectors = c.covectors().to_vec();
        let rank = covectors
            .iter()
            .map(|x| r - flat_rank[&x.zero_mask()])
            .collect();
        let index = covectors.iter().enumerate().map(|(i, x)| (*x, i)).collect();
        Ok(FaceLattice {
            n: c.ground_set_size(),
            r,
            covectors,
            rank,
            index,
        })
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    /// Rank of the oriented matroid; the lattice itself has rank `r + 1`.
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn face_rank(&self, x: &SignVector) -> Option<usize> {
        self.index.get(x).map(|&i| self.rank[i])
    }

    pub fn leq(&self, x: &SignVector, y: &SignVector) -> bool {
        x.conforms_to(y)
    }

    pub fn topes(&self) -> Vec<SignVector> {
        self.covectors
            .iter()
            .zip(&self.rank)
            .filter(|(_, &k)| k == self.r)
            .map(|(x, _)| *x)
            .collect()
    }

    fn require_tope(&self, tope: &SignVector) -> Result<()> {
        if self.face_rank(tope) == Some(self.r) {
            Ok(())
        } else {
            Err(Error::NotATope(tope.to_string()))
        }
    }

    /// Indices of the faces `X <= tope`, grouped by rank `0..=r`.
    fn lower_interval(&self, tope: &SignVector) -> Vec<Vec<usize>> {
        let mut by_rank = vec![Vec::new(); self.r + 1];
        for (i, x) in self.covectors.iter().enumerate() {
            if x.conforms_to(tope) {
                by_rank[self.rank[i]].push(i);
            }
        }
        by_rank
    }

    /// Number of chains with exactly one face of each rank in `ranks`
    /// (increasing), inside `[0̂, tope]`.
    fn rank_selected_chains(&self, by_rank: &[Vec<usize>], ranks: &[usize]) -> u64 {
        let Some((&first, rest)) = ranks.split_first() else {
            return 1;
        };
        let mut ways: Vec<(usize, u64)> = by_rank[first].iter().map(|&i| (i, 1)).collect();
        for &k in rest {
            ways = by_rank[k]
                .iter()
                .map(|&x| {
                    let total = ways
                        .iter()
                        .filter(|(w, _)| self.covectors[*w].conforms_to(&self.covectors[x]))
                        .map(|(_, c)| c)
                        .sum();
                    (x, total)
                })
                .collect();
        }
        ways.iter().map(|(_, c)| c).sum()
    }

    pub fn tope_complex(&self, tope: &SignVector) -> Result<TopeComplex> {
        self.require_tope(tope)?;
        let by_rank = self.lower_interval(tope);
        let d = self.r.saturating_sub(1);
        // chains[x][k]: chains of k faces in (0̂, tope) with top element x
        let mut f_vector = vec![0u64; d + 1];
        f_vector[0] = 1;
        let inner: Vec<usize> = (1..self.r).flat_map(|k| by_rank[k].iter().copied()).collect();
        let mut chains: HashMap<usize, Vec<u64>> = HashMap::new();
        for &x in &inner {
            let mut counts = vec![0u64; d + 1];
            counts[1] = 1;
            for (w, wc) in &chains {
                if self.rank[*w] < self.rank[x] && self.covectors[*w].conforms_to(&self.covectors[x]) {
                    for k in 1..d {
                        counts[k + 1] += wc[k];
                    }
                }
            }
            for k in 1..=d {
                f_vector[k] += counts[k];
            }
            chains.insert(x, counts);
        }
        let h = f_vector
            .iter()
            .enumerate()
            .map(|(k, &f)| flag_weight(k, d).scale(&rat(f as i64)))
            .sum();
        Ok(TopeComplex {
            tope: *tope,
            f_vector,
            h,
        })
    }

    /// `alpha(S)` (maximal chains of the rank-selected interval) and
    /// `beta(S) = sum_{T ⊆ S} (-1)^{|S \ T|} alpha(T)` on `[0̂, tope]`.
    pub fn alpha_beta(&self, tope: &SignVector, set: &[usize]) -> Result<(u64, i64)> {
        self.require_tope(tope)?;
        let valid = set.windows(2).all(|w| w[0] < w[1]) && set.iter().all(|&i| i >= 1 && i < self.r);
        if !valid {
            return Err(Error::SubsetOutOfRange {
                set: set.to_vec(),
                max: self.r.saturating_sub(1),
            });
        }
        let by_rank = self.lower_interval(tope);
        let alpha = self.rank_selected_chains(&by_rank, set);
        let mut beta = 0i64;
        for mask in 0u32..1 << set.len() {
            let sub: Vec<usize> = (0..set.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| set[i])
                .collect();
            let a = self.rank_selected_chains(&by_rank, &sub) as i64;
            if (set.len() - sub.len()) % 2 == 0 {
                beta += a;
            } else {
                beta -= a;
            }
        }
        Ok((alpha, beta))
    }

    /// `[0̂, tope]` is Boolean, i.e. has `2^r` elements.
    pub fn is_simplicial_tope(&self, tope: &SignVector) -> Result<bool> {
        self.require_tope(tope)?;
        let size: usize = self.lower_interval(tope).iter().map(Vec::len).sum();
        Ok(size == 1 << self.r)
    }

    pub fn is_simplicial(&self) -> bool {
        self.topes()
            .iter()
            .all(|t| self.is_simplicial_tope(t).unwrap_or(false))
    }

    /// `f_k` for `k = 0..r-1`: chains of `k + 1` nonzero covectors ending at
    /// a tope. Computed over the whole face poset, independently of the
    /// per-tope complexes.
    pub fn flag_counts(&self) -> Vec<u64> {
        let r = self.r;
        let mut order: Vec<usize> = (0..self.len()).filter(|&i| self.rank[i] > 0).collect();
        order.sort_by_key(|&i| self.rank[i]);
        // ending[i][j]: chains of j + 1 nonzero faces with top element i
        let mut ending: Vec<Vec<u64>> = vec![vec![0; r.max(1)]; self.len()];
        for (pos, &x) in order.iter().enumerate() {
            ending[x][0] = 1;
            for &w in &order[..pos] {
                if self.rank[w] < self.rank[x] && self.covectors[w].conforms_to(&self.covectors[x]) {
                    for j in 0..r.saturating_sub(1) {
                        ending[x][j + 1] += ending[w][j];
                    }
                }
            }
        }
        let mut counts = vec![0u64; r.max(1)];
        for (i, e) in ending.iter().enumerate() {
            if self.rank[i] == r {
                for (c, v) in counts.iter_mut().zip(e) {
                    *c += v;
                }
            }
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Rational;
    use crate::oriented::covectors_from_arrangement;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    fn lattice(v: &[&[i64]]) -> FaceLattice {
        covectors_from_arrangement(&rows(v)).unwrap().face_lattice().unwrap()
    }

    fn u34() -> FaceLattice {
        lattice(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
    }

    #[test]
    fn u34_tope_census() {
        let f = u34();
        let topes = f.topes();
        assert_eq!(topes.len(), 14);
        let mut triangles = 0;
        let mut squares = 0;
        for t in &topes {
            let tc = f.tope_complex(t).unwrap();
            if f.is_simplicial_tope(t).unwrap() {
                triangles += 1;
                assert_eq!(tc.h, UniPoly::from_ints(&[1, 4, 1]));
            } else {
                squares += 1;
                assert_eq!(tc.h, UniPoly::from_ints(&[1, 6, 1]));
            }
        }
        assert_eq!((triangles, squares), (8, 6));
        assert!(!f.is_simplicial());
    }

    #[test]
    fn u34_flag_counts() {
        let f = u34();
        let counts = f.flag_counts();
        assert_eq!(counts[0], 14);
        assert_eq!(counts[1], 8 * 6 + 6 * 8);
    }

    #[test]
    fn coordinate_arrangement_counts() {
        let f = lattice(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(f.topes().len(), 8);
        assert!(f.is_simplicial());
        assert_eq!(f.flag_counts()[2], 8 * 6);
        for t in f.topes() {
            assert_eq!(f.tope_complex(&t).unwrap().h, UniPoly::from_ints(&[1, 4, 1]));
        }
    }

    #[test]
    fn alpha_beta_on_u34() {
        let f = u34();
        for t in f.topes() {
            assert_eq!(f.alpha_beta(&t, &[]).unwrap(), (1, 1));
            let (a1, b1) = f.alpha_beta(&t, &[1]).unwrap();
            if f.is_simplicial_tope(&t).unwrap() {
                assert_eq!((a1, b1), (3, 2));
            } else {
                assert_eq!((a1, b1), (4, 3));
            }
            // h_k is the sum of beta over k-subsets
            let h = f.tope_complex(&t).unwrap().h;
            let b2 = f.alpha_beta(&t, &[2]).unwrap().1;
            let b12 = f.alpha_beta(&t, &[1, 2]).unwrap().1;
            assert_eq!(h.coeff(1), rat(b1 + b2));
            assert_eq!(h.coeff(2), rat(b12));
        }
        let t = f.topes()[0];
        assert!(f.alpha_beta(&t, &[3]).is_err());
        assert!(f.alpha_beta(&t, &[2, 1]).is_err());
    }

    #[test]
    fn non_topes_rejected() {
        let f = u34();
        let zero = SignVector::zero(4).unwrap();
        assert!(matches!(f.tope_complex(&zero), Err(Error::NotATope(_))));
        assert!(f.is_simplicial_tope(&zero).is_err());
    }
}
