//! Constructors: uniform matroids, projective geometries and matroids of
//! vector configurations (hyperplane arrangements).

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use super::{Flat, Matroid};
use crate::error::{Error, Result};
use crate::exactpoly::Rational;
use crate::linalg::{EchelonBasis, Field, GaloisField, Rationals};

/// `U_{r,n}`: every set of fewer than `r` elements is a flat, plus `[n]`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r == 0 {
        return Err(Error::RankTooSmall { rank: r, min: 1 });
    }
    if r > n {
        return Err(Error::RankExceedsGroundSet { rank: r, n });
    }
    let mut flats: Vec<(usize, Flat)> = (0..r)
        .flat_map(|k| (0..n).combinations(k).map(move |c| (k, c)))
        .collect();
    flats.push((r, (0..n).collect()));
    Ok(Matroid::from_flats(n, r, flats))
}

/// The matroid of a vector configuration: flats are the span-closed subsets,
/// ranks are dimensions of spans.
///
/// Flats are generated level by level: each cover of a flat `X` is the
/// closure of `X + e` for an element `e` not yet inside a known cover.
pub fn from_vectors<F: Field>(field: &F, vectors: &[Vec<F::Elem>]) -> Matroid {
    let n = vectors.len();
    let loops: Flat = (0..n)
        .filter(|&e| vectors[e].iter().all(|x| field.is_zero(x)))
        .collect();
    let mut all: Vec<(usize, Flat)> = vec![(0, loops.clone())];
    let mut level: BTreeMap<Flat, EchelonBasis<F>> = BTreeMap::new();
    level.insert(loops, EchelonBasis::new());
    let mut rank = 0;
    while !level.is_empty() {
        let mut next: BTreeMap<Flat, EchelonBasis<F>> = BTreeMap::new();
        for (flat, basis) in &level {
            let mut covered = vec![false; n];
            for &e in flat {
                covered[e] = true;
            }
            for e in 0..n {
                if covered[e] {
                    continue;
                }
                let mut extended = basis.clone();
                extended.insert(field, vectors[e].clone());
                let closure: Flat = (0..n)
                    .filter(|&f| extended.contains(field, &vectors[f]))
                    .collect();
                for &f in &closure {
                    covered[f] = true;
                }
                next.entry(closure).or_insert(extended);
            }
        }
        if next.is_empty() {
            break;
        }
        rank += 1;
        all.extend(next.keys().map(|f| (rank, f.clone())));
        level = next;
    }
    Matroid::from_flats(n, rank, all)
}

/// Matroid of a central real arrangement given by its normal vectors.
pub fn from_arrangement(rows: &[Vec<Rational>]) -> Result<Matroid> {
    check_arrangement(rows)?;
    Ok(from_vectors(&Rationals, rows))
}

pub(crate) fn check_arrangement(rows: &[Vec<Rational>]) -> Result<usize> {
    let d = rows.first().ok_or(Error::EmptyArrangement)?.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != d {
            return Err(Error::RaggedMatrix {
                row: i,
                expected: d,
                found: row.len(),
            });
        }
        if row.iter().all(Zero::is_zero) {
            return Err(Error::ZeroRow(i));
        }
    }
    Ok(d)
}

/// Normalized representatives (first nonzero coordinate 1) of the points of
/// `PG(r-1, q)`, in lexicographic order of coordinates.
pub fn projective_points(field: &GaloisField, r: usize) -> Vec<Vec<u8>> {
    let q = field.order() as usize;
    let total = q.pow(r as u32);
    (0..total)
        .map(|mut code| {
            let mut v = vec![0u8; r];
            for slot in v.iter_mut().rev() {
                *slot = (code % q) as u8;
                code /= q;
            }
            v
        })
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// `PG(r-1, q)`: points are the 1-dimensional subspaces of `F_q^r`, flats
/// the subspaces.
pub fn pg(r: usize, q: u32) -> Result<Matroid> {
    if r == 0 {
        return Err(Error::RankTooSmall { rank: r, min: 1 });
    }
    let field = GaloisField::new(q)?;
    let points = projective_points(&field, r);
    Ok(from_vectors(&field, &points))
}

/// The Fano plane `PG(2, 2)`.
pub fn fano() -> Matroid {
    pg(3, 2).expect("2 is a prime power")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use std::collections::BTreeSet;

    fn line_sizes(m: &Matroid) -> BTreeSet<usize> {
        m.flats_of_rank(2).map(Vec::len).collect()
    }

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn uniform_counts() {
        assert_eq!(uniform(3, 4).unwrap().flat_counts(), vec![1, 4, 6, 1]);
        assert_eq!(uniform(4, 7).unwrap().flat_counts(), vec![1, 7, 21, 35, 1]);
        let u11 = uniform(1, 1).unwrap();
        assert_eq!(u11.flats(), &[(0, vec![]), (1, vec![0])]);
        assert!(matches!(uniform(5, 3), Err(Error::RankExceedsGroundSet { .. })));
        assert!(uniform(4, 7).unwrap().is_valid());
    }

    #[test]
    fn fano_plane() {
        let f = fano();
        assert!(f.is_valid());
        assert_eq!(f.flat_counts(), vec![1, 7, 7, 1]);
        assert_eq!(line_sizes(&f), BTreeSet::from([3]));
    }

    #[test]
    fn projective_plane_of_order_three() {
        let m = pg(3, 3).unwrap();
        assert!(m.is_valid());
        assert_eq!(m.flat_counts(), vec![1, 13, 13, 1]);
        assert_eq!(line_sizes(&m), BTreeSet::from([4]));
    }

    #[test]
    fn projective_lines_are_uniform() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let m = pg(2, q).unwrap();
            assert_eq!(m, uniform(2, q as usize + 1).unwrap());
        }
    }

    #[test]
    fn pg_rejects_non_prime_powers() {
        assert!(matches!(pg(3, 6), Err(Error::UnsupportedPrimePower(6))));
        assert!(matches!(pg(3, 64), Err(Error::UnsupportedPrimePower(64))));
    }

    #[test]
    fn pg_4_2_census() {
        let m = pg(4, 2).unwrap();
        assert!(m.is_valid());
        // 15 points, 35 lines, 15 planes
        assert_eq!(m.flat_counts(), vec![1, 15, 35, 15, 1]);
    }

    #[test]
    fn coordinate_arrangement_is_boolean() {
        let m = from_arrangement(&rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(m.flat_counts(), vec![1, 3, 3, 1]);
        assert_eq!(m, uniform(3, 3).unwrap());
    }

    #[test]
    fn generic_rank4_arrangement_is_u47() {
        let m = from_arrangement(&rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 1, 1],
            &[1, 2, 3, 4],
            &[1, 3, 2, 5],
        ]))
        .unwrap();
        assert_eq!(m, uniform(4, 7).unwrap());
    }

    #[test]
    fn parallel_normals_give_nonsimple_matroid() {
        let m = from_arrangement(&rows(&[&[1, 0], &[2, 0], &[0, 1]])).unwrap();
        assert!(m.is_valid());
        assert!(!m.is_simple());
        assert_eq!(m.simplify(), uniform(2, 2).unwrap());
    }

    #[test]
    fn arrangement_errors() {
        assert!(matches!(
            from_arrangement(&rows(&[&[1, 0], &[0, 0]])),
            Err(Error::ZeroRow(1))
        ));
        assert!(matches!(
            from_arrangement(&rows(&[&[1, 0], &[0, 1, 1]])),
            Err(Error::RaggedMatrix { row: 1, .. })
        ));
        assert!(matches!(from_arrangement(&[]), Err(Error::EmptyArrangement)));
    }
}
