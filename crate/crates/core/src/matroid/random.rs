//! Seeded random simple rank-3 matroids.
//!
//! A simple rank-3 matroid is a linear space: a family of lines (subsets of
//! at least two points) such that two points lie on exactly one line and no
//! line holds every point. Long lines are drawn at random subject to the
//! pairwise-intersection rule; uncovered pairs become two-point lines.

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::{Flat, Matroid};

/// A random simple rank-3 matroid on `4..=max_points` points.
pub fn random_rank3(rng: &mut impl Rng, max_points: usize) -> Matroid {
    let max_points = max_points.max(4);
    loop {
        let n = rng.gen_range(4..=max_points);
        let mut lines: Vec<Flat> = Vec::new();
        let attempts = rng.gen_range(0..=2 * n);
        let points: Vec<usize> = (0..n).collect();
        for _ in 0..attempts {
            let size = rng.gen_range(3..=(n - 1).min(5));
            let mut cand: Flat = points.choose_multiple(rng, size).copied().collect();
            cand.sort_unstable();
            let compatible = lines
                .iter()
                .all(|l| l.iter().filter(|e| cand.binary_search(e).is_ok()).count() <= 1);
            if compatible {
                lines.push(cand);
            }
        }
        for (a, b) in (0..n).tuple_combinations() {
            if !lines.iter().any(|l| l.contains(&a) && l.contains(&b)) {
                lines.push(vec![a, b]);
            }
        }
        if lines.len() < 2 {
            continue;
        }
        let flats = std::iter::once((0, Vec::new()))
            .chain((0..n).map(|e| (1, vec![e])))
            .chain(lines.into_iter().map(|l| (2, l)))
            .chain(std::iter::once((3, points.clone())));
        let m = Matroid::from_flats(n, 3, flats);
        debug_assert!(m.is_valid());
        return m;
    }
}

/// `count` random simple rank-3 matroids from a fixed seed.
pub fn random_rank3_family(seed: u64, count: usize, max_points: usize) -> Vec<Matroid> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_rank3(&mut rng, max_points)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_matroids_are_valid_and_simple() {
        for m in random_rank3_family(7, 50, 9) {
            assert!(m.validate().is_empty(), "{m:?}");
            assert!(m.is_simple());
            assert_eq!(m.rank(), 3);
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        assert_eq!(random_rank3_family(11, 5, 8), random_rank3_family(11, 5, 8));
    }

    #[test]
    fn family_is_not_all_uniform() {
        let fam = random_rank3_family(3, 30, 9);
        assert!(fam.iter().any(|m| m.flats_of_rank(2).any(|l| l.len() >= 3)));
    }
}
