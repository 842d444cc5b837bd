use super::{Flat, Matroid};
use crate::error::{Error, Result};
use crate::exactpoly::{rat, UniPoly};

/// Bit set over the ground set, used for fast containment tests.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn of(set: &[usize], n: usize) -> Self {
        let mut words = vec![0u64; n.div_ceil(64).max(1)];
        for &e in set {
            words[e / 64] |= 1 << (e % 64);
        }
        Bits(words)
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// The lattice of flats of a valid matroid, with cover relations, principal
/// up-sets and Möbius data.
///
/// Flats are indexed in canonical order (rank, then lexicographic), so index
/// 0 is the bottom `0̂` and the last index is the top `1̂ = E`.
#[derive(Clone, Debug)]
pub struct LatticeOfFlats {
    flats: Vec<Flat>,
    rank: Vec<usize>,
    covers: Vec<Vec<usize>>,
    /// Indices of all flats `>=` the given one, in canonical order.
    upset: Vec<Vec<usize>>,
    bits: Vec<Bits>,
    r: usize,
}

/// A chain `X1 < ... < Xl` of proper nontrivial flats; possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub chain: Vec<Flat>,
}

impl Flag {
    pub fn empty() -> Self {
        Flag { chain: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }
}

impl LatticeOfFlats {
    /// Builds the lattice; `m` must be valid.
    pub fn new(m: &Matroid) -> Self {
        let n = m.ground_set_size();
        let flats: Vec<Flat> = m.flats().iter().map(|(_, f)| f.clone()).collect();
        let rank: Vec<usize> = m.flats().iter().map(|(r, _)| *r).collect();
        let bits: Vec<Bits> = flats.iter().map(|f| Bits::of(f, n)).collect();
        let count = flats.len();
        let mut upset = vec![Vec::new(); count];
        let mut covers = vec![Vec::new(); count];
        for x in 0..count {
            for y in x..count {
                if rank[y] >= rank[x] && bits[x].is_subset(&bits[y]) {
                    upset[x].push(y);
                    if rank[y] == rank[x] + 1 {
                        covers[x].push(y);
                    }
                }
            }
        }
        LatticeOfFlats {
            flats,
            rank,
            covers,
            upset,
            bits,
            r: m.rank(),
        }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn flat(&self, i: usize) -> &Flat {
        &self.flats[i]
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn upset(&self, i: usize) -> &[usize] {
        &self.upset[i]
    }

    pub fn index_of(&self, flat: &[usize]) -> Option<usize> {
        self.flats.iter().position(|f| f.as_slice() == flat)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.bits[a].is_subset(&self.bits[b])
    }

    /// Möbius values `mu(x, z)` for every `z >= x`, aligned with
    /// [`LatticeOfFlats::upset`].
    pub fn mobius_from(&self, x: usize) -> Vec<i64> {
        let up = &self.upset[x];
        let mut mu = vec![0i64; up.len()];
        // up-sets are sorted by rank, so predecessors come first
        for (j, &z) in up.iter().enumerate() {
            if j == 0 {
                mu[j] = 1;
                continue;
            }
            let mut acc = 0i64;
            for (i, &w) in up[..j].iter().enumerate() {
                if self.rank[w] < self.rank[z] && self.leq(w, z) {
                    acc = acc.checked_add(mu[i]).expect("Möbius value overflow");
                }
            }
            mu[j] = -acc;
        }
        mu
    }

    /// `mu(0̂, X)` for every flat, indexed like the flats.
    pub fn mobius(&self) -> Vec<i64> {
        let mut out = vec![0; self.len()];
        for (&z, m) in self.upset[0].iter().zip(self.mobius_from(0)) {
            out[z] = m;
        }
        out
    }

    /// Poincaré polynomial of the interval `[x, z]` as a polynomial in `Y`:
    /// `sum_{x <= w <= z} mu(x, w) (-Y)^{r(w) - r(x)}`.
    pub fn interval_poincare(&self, x: usize, z: usize) -> UniPoly {
        let mu = self.mobius_from(x);
        self.interval_poincare_with(x, z, &mu)
    }

    pub(crate) fn interval_poincare_with(&self, x: usize, z: usize, mu: &[i64]) -> UniPoly {
        let depth = self.rank[z] - self.rank[x];
        let mut coeffs = vec![0i64; depth + 1];
        for (&w, &m) in self.upset[x].iter().zip(mu) {
            if self.rank[w] <= self.rank[z] && self.leq(w, z) {
                let k = self.rank[w] - self.rank[x];
                let signed = if k % 2 == 0 { m } else { -m };
                coeffs[k] += signed;
            }
        }
        UniPoly::new(coeffs.into_iter().map(rat).collect())
    }

    /// All flags of proper nontrivial flats, grouped by length `0..r-1`.
    /// Within a length, flags appear in lexicographic order of flat indices.
    pub fn flag_indices(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.top();
        let mut groups: Vec<Vec<Vec<usize>>> = vec![Vec::new(); self.r.max(1)];
        groups[0].push(Vec::new());
        let mut stack: Vec<usize> = Vec::new();
        fn walk(
            lat: &LatticeOfFlats,
            top: usize,
            stack: &mut Vec<usize>,
            groups: &mut Vec<Vec<Vec<usize>>>,
        ) {
            let start = *stack.last().unwrap();
            for &y in &lat.upset[start][1..] {
                if y == top {
                    continue;
                }
                stack.push(y);
                groups[stack.len()].push(stack.clone());
                walk(lat, top, stack, groups);
                stack.pop();
            }
        }
        for x in 1..top {
            stack.push(x);
            groups[1].push(stack.clone());
            walk(self, top, &mut stack, &mut groups);
            stack.pop();
        }
        for g in groups.iter_mut() {
            g.sort();
        }
        groups
    }

    /// All flags as chains of flats, grouped by length.
    pub fn enumerate_flags(&self) -> Vec<Vec<Flag>> {
        self.flag_indices()
            .into_iter()
            .map(|group| {
                group
                    .into_iter()
                    .map(|idx| Flag {
                        chain: idx.iter().map(|&i| self.flats[i].clone()).collect(),
                    })
                    .collect()
            })
            .collect()
    }

    /// Resolves a flag to lattice indices, checking that it is a strictly
    /// increasing chain of proper nontrivial flats.
    pub fn resolve_flag(&self, flag: &Flag) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(flag.len());
        for (pos, f) in flag.chain.iter().enumerate() {
            let mut s = f.clone();
            s.sort_unstable();
            let i = self.index_of(&s).ok_or_else(|| Error::NotAFlat(s.clone()))?;
            if i == self.bottom() || i == self.top() {
                return Err(Error::ChainNotIncreasing(pos));
            }
            if let Some(&prev) = out.last() {
                if prev == i || !self.leq(prev, i) {
                    return Err(Error::ChainNotIncreasing(pos));
                }
            }
            out.push(i);
        }
        Ok(out)
    }

    /// Number of rank-2 flats containing each rank-1 flat, sorted; a simple
    /// lattice invariant.
    pub fn atom_degrees(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (0..self.len())
            .filter(|&i| self.rank[i] == 1)
            .map(|i| self.covers[i].iter().filter(|&&c| self.rank[c] == 2).count())
            .collect();
        deg.sort_unstable();
        deg
    }
}
