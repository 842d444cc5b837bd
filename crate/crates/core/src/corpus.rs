//! Named rational arrangements used by the test suites and the CLI.
//!
//! Every entry is a list of integer normal vectors of central hyperplanes.

use crate::exactpoly::{rat, Rational};

#[derive(Clone, Debug)]
pub struct NamedArrangement {
    pub name: &'static str,
    pub rank: usize,
    pub normals: Vec<Vec<i64>>,
}

impl NamedArrangement {
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.normals
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    /// `.arr` text for this arrangement.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.normals {
            let line: Vec<String> = r.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn entry(name: &'static str, rank: usize, normals: &[&[i64]]) -> NamedArrangement {
    NamedArrangement {
        name,
        rank,
        normals: normals.iter().map(|r| r.to_vec()).collect(),
    }
}

/// The full corpus, ranks 3 and 4.
pub fn arrangements() -> Vec<NamedArrangement> {
    vec![
        entry("coordinate3", 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        // x_i - x_j for 0 <= i < j <= 3 with x_0 = 0
        entry(
            "braid3",
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, -1]],
        ),
        entry("u34", 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
        entry(
            "u35",
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]],
        ),
        // four planes through a common line plus one more
        entry(
            "near_pencil",
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 2, 0], &[0, 0, 1]],
        ),
        // x, 2x, y, z, x + y + z: a parallel pair over U_{3,4}
        entry(
            "u34_parallel",
            3,
            &[&[1, 0, 0], &[2, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        ),
        // xyz(x+y)(x-y)(x+2y)(x+z)(y+z)(x+y+z)
        entry(
            "nine_a",
            3,
            &[
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, -1, 0],
                &[1, 2, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ],
        ),
        // xyz(x+y)(x+2y)(x-2y)(x+z)(2y+z)(2x+2y+z)
        entry(
            "nine_b",
            3,
            &[
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, 2, 0],
                &[1, -2, 0],
                &[1, 0, 1],
                &[0, 2, 1],
                &[2, 2, 1],
            ],
        ),
        // Coxeter arrangement of type B_3
        entry(
            "b3",
            3,
            &[
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, -1, 0],
                &[1, 0, 1],
                &[1, 0, -1],
                &[0, 1, 1],
                &[0, 1, -1],
            ],
        ),
        entry(
            "coordinate4",
            4,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        ),
        entry(
            "u45",
            4,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]],
        ),
        entry(
            "u46",
            4,
            &[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[1, 1, 1, 1],
                &[1, 2, 3, 4],
            ],
        ),
        entry(
            "u47",
            4,
            &[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[1, 1, 1, 1],
                &[1, 2, 3, 4],
                &[1, 3, 2, 5],
            ],
        ),
        // x_i - x_j for 0 <= i < j <= 4 with x_0 = 0
        entry(
            "braid4",
            4,
            &[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[1, -1, 0, 0],
                &[1, 0, -1, 0],
                &[1, 0, 0, -1],
                &[0, 1, -1, 0],
                &[0, 1, 0, -1],
                &[0, 0, 1, -1],
            ],
        ),
    ]
}

pub fn arrangement(name: &str) -> Option<NamedArrangement> {
    arrangements().into_iter().find(|a| a.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{from_arrangement, uniform};

    #[test]
    fn names_are_unique_and_ranks_match() {
        let all = arrangements();
        let mut names: Vec<&str> = all.iter().map(|a| a.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len());
        for a in &all {
            assert_eq!(from_arrangement(&a.rows()).unwrap().rank(), a.rank, "{}", a.name);
        }
    }

    #[test]
    fn generic_members_are_uniform() {
        for (name, r, n) in [("u34", 3, 4), ("u35", 3, 5), ("u45", 4, 5), ("u46", 4, 6), ("u47", 4, 7)] {
            let m = from_arrangement(&arrangement(name).unwrap().rows()).unwrap();
            assert_eq!(m, uniform(r, n).unwrap(), "{name}");
        }
    }
}
