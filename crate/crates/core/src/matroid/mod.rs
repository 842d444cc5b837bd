//! Matroids presented by their flats.
//!
//! A [`Matroid`] is the raw flat family as read or constructed; it may be
//! invalid until [`Matroid::validate`] says otherwise. The order-theoretic
//! machinery (covers, Möbius function, flags) lives on [`LatticeOfFlats`],
//! which is built from a valid matroid.

mod construct;
mod io;
mod lattice;
pub mod random;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

pub use construct::{fano, from_arrangement, from_vectors, pg, projective_points, uniform};
pub(crate) use construct::check_arrangement;
pub use io::{parse_arrangement, parse_flats, read_arrangement_file, read_matroid_file,
             render_flats, write_matroid_file};
pub use lattice::{Flag, LatticeOfFlats};

use crate::error::{Error, Result};

/// A flat as a sorted list of 0-based ground-set elements.
pub type Flat = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    rank: usize,
    /// `(rank, flat)` pairs in canonical order: by rank, then lexicographic.
    flats: Vec<(usize, Flat)>,
}

/// A single failed matroid axiom, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ElementOutOfRange { flat: Flat, element: usize },
    ConflictingRanks { flat: Flat },
    RankAboveTop { flat: Flat, rank: usize },
    MissingGroundSet,
    GroundSetRank { expected: usize, found: usize },
    NotIntersectionClosed { a: Flat, b: Flat },
    CoverPartition { flat: Flat, element: usize, covers: usize },
    BottomRank { flat: Flat, rank: usize },
    RankJump { lower: Flat, upper: Flat },
    EmptyRankLevel(usize),
}

fn fmt_set(f: &mut fmt::Formatter<'_>, s: &[usize]) -> fmt::Result {
    f.write_str("{")?;
    for (i, e) in s.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str("}")
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ElementOutOfRange { flat, element } => {
                write!(f, "element {element} out of range in flat ")?;
                fmt_set(f, flat)
            }
            Violation::ConflictingRanks { flat } => {
                f.write_str("flat listed with conflicting ranks: ")?;
                fmt_set(f, flat)
            }
            Violation::RankAboveTop { flat, rank } => {
                write!(f, "rank {rank} exceeds matroid rank for flat ")?;
                fmt_set(f, flat)
            }
            Violation::MissingGroundSet => f.write_str("ground set is not a flat"),
            Violation::GroundSetRank { expected, found } => {
                write!(f, "ground set has rank {found}, expected {expected}")
            }
            Violation::NotIntersectionClosed { a, b } => {
                f.write_str("intersection of ")?;
                fmt_set(f, a)?;
                f.write_str(" and ")?;
                fmt_set(f, b)?;
                f.write_str(" is not a flat")
            }
            Violation::CoverPartition {
                flat,
                element,
                covers,
            } => {
                write!(f, "element {element} lies in {covers} covers of ")?;
                fmt_set(f, flat)?;
                f.write_str(" (expected exactly one)")
            }
            Violation::BottomRank { flat, rank } => {
                f.write_str("bottom flat ")?;
                fmt_set(f, flat)?;
                write!(f, " has rank {rank}, expected 0")
            }
            Violation::RankJump { lower, upper } => {
                f.write_str("cover ")?;
                fmt_set(f, lower)?;
                f.write_str(" < ")?;
                fmt_set(f, upper)?;
                f.write_str(" does not increase rank by one")
            }
            Violation::EmptyRankLevel(k) => write!(f, "no flats of rank {k}"),
        }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn intersect(a: &[usize], b: &[usize]) -> Flat {
    let bs: HashSet<usize> = b.iter().copied().collect();
    a.iter().copied().filter(|x| bs.contains(x)).collect()
}

impl Matroid {
    /// Builds a matroid from `(rank, flat)` pairs without validating it.
    ///
    /// Flats are sorted and deduplicated into canonical order; call
    /// [`Matroid::validate`] or use [`Matroid::new`] to check the axioms.
    pub fn from_flats(n: usize, rank: usize, flats: impl IntoIterator<Item = (usize, Flat)>) -> Self {
        let set: BTreeSet<(usize, Flat)> = flats
            .into_iter()
            .map(|(r, mut f)| {
                f.sort_unstable();
                f.dedup();
                (r, f)
            })
            .collect();
        Matroid {
            n,
            rank,
            flats: set.into_iter().collect(),
        }
    }

    /// Builds and validates a matroid.
    pub fn new(n: usize, rank: usize, flats: impl IntoIterator<Item = (usize, Flat)>) -> Result<Self> {
        let m = Self::from_flats(n, rank, flats);
        let violations = m.validate();
        if violations.is_empty() {
            Ok(m)
        } else {
            Err(Error::InvalidMatroid(violations))
        }
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All `(rank, flat)` pairs in canonical order.
    pub fn flats(&self) -> &[(usize, Flat)] {
        &self.flats
    }

    pub fn flats_of_rank(&self, k: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |(r, _)| *r == k).map(|(_, f)| f)
    }

    pub fn num_flats(&self) -> usize {
        self.flats.len()
    }

    /// Flat counts per rank `0..=r`.
    pub fn flat_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank + 1];
        for (r, _) in &self.flats {
            if *r <= self.rank {
                counts[*r] += 1;
            }
        }
        counts
    }

    pub fn rank_of(&self, flat: &[usize]) -> Option<usize> {
        self.flats
            .iter()
            .find(|(_, f)| f.as_slice() == flat)
            .map(|(r, _)| *r)
    }

    pub fn is_flat(&self, set: &[usize]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.rank_of(&s).is_some()
    }

    /// Checks the flat axioms (ground set is a flat, intersection closure,
    /// cover partition) together with grading consistency of the given ranks.
    /// An empty list means the matroid is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let ground: Flat = (0..self.n).collect();

        let mut rank_of: HashMap<&Flat, usize> = HashMap::new();
        for (r, f) in &self.flats {
            if let Some(&e) = f.iter().find(|&&e| e >= self.n) {
                out.push(Violation::ElementOutOfRange {
                    flat: f.clone(),
                    element: e,
                });
            }
            if *r > self.rank {
                out.push(Violation::RankAboveTop {
                    flat: f.clone(),
                    rank: *r,
                });
            }
            if let Some(prev) = rank_of.insert(f, *r) {
                if prev != *r {
                    out.push(Violation::ConflictingRanks { flat: f.clone() });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }

        match rank_of.get(&ground) {
            None => out.push(Violation::MissingGroundSet),
            Some(&r) if r != self.rank => out.push(Violation::GroundSetRank {
                expected: self.rank,
                found: r,
            }),
            _ => {}
        }

        let flats: Vec<&Flat> = rank_of.keys().copied().collect::<BTreeSet<_>>().into_iter().collect();
        for (i, a) in flats.iter().enumerate() {
            for b in &flats[i + 1..] {
                let meet = intersect(a, b);
                if !rank_of.contains_key(&meet) {
                    out.push(Violation::NotIntersectionClosed {
                        a: (*a).clone(),
                        b: (*b).clone(),
                    });
                }
            }
        }

        if let Some(bottom) = flats.iter().min_by_key(|f| f.len()) {
            let r = rank_of[*bottom];
            if r != 0 || flats.iter().any(|f| !is_subset(bottom, f)) {
                out.push(Violation::BottomRank {
                    flat: (*bottom).clone(),
                    rank: r,
                });
            }
        }

        // true covers by inclusion-minimality, independent of the given ranks
        let mut by_size: Vec<&Flat> = flats.clone();
        by_size.sort_by_key(|f| f.len());
        for x in &flats {
            let above: Vec<&Flat> = by_size
                .iter()
                .copied()
                .filter(|y| y.len() > x.len() && is_subset(x, y))
                .collect();
            let covers: Vec<&Flat> = above
                .iter()
                .copied()
                .filter(|y| !above.iter().any(|z| z.len() < y.len() && is_subset(z, y)))
                .collect();
            let mut hits = vec![0usize; self.n];
            for y in &covers {
                for &e in y.iter() {
                    hits[e] += 1;
                }
                if rank_of[*y] != rank_of[*x] + 1 {
                    out.push(Violation::RankJump {
                        lower: (*x).clone(),
                        upper: (*y).clone(),
                    });
                }
            }
            for e in (0..self.n).filter(|e| x.binary_search(e).is_err()) {
                if hits[e] != 1 {
                    out.push(Violation::CoverPartition {
                        flat: (*x).clone(),
                        element: e,
                        covers: hits[e],
                    });
                }
            }
        }

        let counts = self.flat_counts();
        for (k, c) in counts.iter().enumerate() {
            if *c == 0 {
                out.push(Violation::EmptyRankLevel(k));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn require_flat(&self, x: &[usize]) -> Result<usize> {
        let mut s = x.to_vec();
        s.sort_unstable();
        self.rank_of(&s).ok_or(Error::NotAFlat(s))
    }

    /// `M|X`: ground set `X` (re-indexed in increasing order), flats the
    /// flats of `M` contained in `X`.
    pub fn restriction(&self, x: &[usize]) -> Result<Matroid> {
        let rx = self.require_flat(x)?;
        let mut x = x.to_vec();
        x.sort_unstable();
        let index: HashMap<usize, usize> = x.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let flats = self
            .flats
            .iter()
            .filter(|(_, f)| is_subset(f, &x))
            .map(|(r, f)| (*r, f.iter().map(|e| index[e]).collect()));
        Ok(Matroid::from_flats(x.len(), rx, flats))
    }

    /// `M/X`: ground set `E \ X` (re-indexed), flats `X' \ X` for flats
    /// `X' ⊇ X`, with rank lowered by `r(X)`.
    pub fn contraction(&self, x: &[usize]) -> Result<Matroid> {
        let rx = self.require_flat(x)?;
        let mut x = x.to_vec();
        x.sort_unstable();
        let rest: Vec<usize> = (0..self.n).filter(|e| x.binary_search(e).is_err()).collect();
        let index: HashMap<usize, usize> = rest.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let flats = self
            .flats
            .iter()
            .filter(|(_, f)| is_subset(&x, f))
            .map(|(r, f)| {
                (
                    r - rx,
                    f.iter().filter_map(|e| index.get(e).copied()).collect(),
                )
            });
        Ok(Matroid::from_flats(rest.len(), self.rank - rx, flats))
    }

    /// The minor `M/lower | upper` whose lattice is the interval
    /// `[lower, upper]`.
    pub fn interval_minor(&self, lower: &[usize], upper: &[usize]) -> Result<Matroid> {
        let restricted = self.restriction(upper)?;
        let mut up = upper.to_vec();
        up.sort_unstable();
        let index: HashMap<usize, usize> = up.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut low = Vec::with_capacity(lower.len());
        for e in lower {
            match index.get(e) {
                Some(&i) => low.push(i),
                None => return Err(Error::NotAFlat(lower.to_vec())),
            }
        }
        restricted.contraction(&low)
    }

    pub fn loops(&self) -> &Flat {
        &self.flats[0].1
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.flats_of_rank(1).all(|f| f.len() == 1)
    }

    /// The simple matroid with the same lattice of flats: loops dropped and
    /// each parallel class replaced by its smallest element.
    pub fn simplify(&self) -> Matroid {
        if self.is_simple() {
            return self.clone();
        }
        let loops = self.loops().clone();
        let reps: Vec<usize> = self
            .flats_of_rank(1)
            .filter_map(|f| f.iter().copied().find(|e| !loops.contains(e)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let flats = self.flats.iter().map(|(r, f)| {
            (
                *r,
                f.iter().filter_map(|e| index.get(e).copied()).collect(),
            )
        });
        Matroid::from_flats(reps.len(), self.rank, flats)
    }

    pub fn lattice(&self) -> LatticeOfFlats {
        LatticeOfFlats::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u23_flats() -> Vec<(usize, Flat)> {
        vec![
            (0, vec![]),
            (1, vec![0]),
            (1, vec![1]),
            (1, vec![2]),
            (2, vec![0, 1, 2]),
        ]
    }

    #[test]
    fn uniform_2_3_is_valid() {
        let m = Matroid::from_flats(3, 2, u23_flats());
        assert_eq!(m.validate(), vec![]);
        assert_eq!(m, uniform(2, 3).unwrap());
    }

    #[test]
    fn missing_atom_breaks_cover_partition() {
        let flats = u23_flats().into_iter().filter(|(_, f)| f != &vec![1]);
        let v = Matroid::from_flats(3, 2, flats).validate();
        assert!(v.contains(&Violation::CoverPartition {
            flat: vec![],
            element: 1,
            covers: 0,
        }));
    }

    #[test]
    fn missing_top_flat_reported() {
        let flats = u23_flats().into_iter().filter(|(r, _)| *r < 2);
        let v = Matroid::from_flats(3, 2, flats).validate();
        assert!(v.contains(&Violation::MissingGroundSet));
        assert!(v.contains(&Violation::EmptyRankLevel(2)));
    }

    #[test]
    fn intersection_closure_checked() {
        // two lines meeting outside the family
        let flats = vec![
            (0, vec![]),
            (1, vec![0]),
            (1, vec![1]),
            (1, vec![2]),
            (1, vec![3]),
            (2, vec![0, 1, 2]),
            (2, vec![1, 2, 3]),
            (2, vec![0, 3]),
            (3, vec![0, 1, 2, 3]),
        ];
        let v = Matroid::from_flats(4, 3, flats).validate();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::NotIntersectionClosed { .. })));
    }

    #[test]
    fn wrong_ranks_reported() {
        let mut flats = u23_flats();
        flats[4].0 = 3;
        let v = Matroid::from_flats(3, 3, flats).validate();
        assert!(v.iter().any(|x| matches!(x, Violation::RankJump { .. })));
        assert!(v.contains(&Violation::EmptyRankLevel(2)));
    }

    #[test]
    fn restriction_to_two_point_flat() {
        let m = uniform(3, 4).unwrap();
        let r = m.restriction(&[0, 1]).unwrap();
        assert_eq!(r, uniform(2, 2).unwrap());
    }

    #[test]
    fn contraction_by_point() {
        let m = uniform(3, 4).unwrap();
        let c = m.contraction(&[0]).unwrap();
        assert!(c.is_valid());
        assert_eq!(c, uniform(2, 3).unwrap());
        assert_eq!(m.contraction(&[]).unwrap(), m);
    }

    #[test]
    fn minors_need_flats() {
        let m = uniform(3, 4).unwrap();
        assert!(matches!(m.restriction(&[0, 1, 2]), Err(Error::NotAFlat(_))));
        assert!(matches!(m.contraction(&[5]), Err(Error::NotAFlat(_))));
    }

    #[test]
    fn simplify_drops_loops_and_parallels() {
        // element 0 is a loop, 1 and 2 are parallel, 3 is independent
        let flats = vec![(0, vec![0]), (1, vec![0, 1, 2]), (1, vec![0, 3]), (2, vec![0, 1, 2, 3])];
        let m = Matroid::new(4, 2, flats).unwrap();
        assert!(!m.is_simple());
        let s = m.simplify();
        assert!(s.is_simple());
        assert_eq!(s, uniform(2, 2).unwrap());
        assert_eq!(s.flat_counts(), m.flat_counts());

        let u = uniform(3, 5).unwrap();
        assert_eq!(u.simplify(), u);
    }
}
