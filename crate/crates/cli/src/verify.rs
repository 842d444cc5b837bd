//! Closed forms against direct enumeration, as a PASS/FAIL matrix.

use coarseflag::matroid::{pg, random::random_rank3_family, uniform};
use coarseflag::series::{
    coarse_numerator, eulerian_ab_identity, is_strictly_decreasing, limit_distance_table,
    pg_closed_form, rank3_closed_form, uniform_normalized_closed_form, LimitFamily, Rank3Profile,
};

use crate::Outcome;

struct Matrix {
    lines: Vec<String>,
    failed: usize,
}

impl Matrix {
    fn record(&mut self, name: String, ok: bool) {
        if !ok {
            self.failed += 1;
        }
        self.lines.push(format!("{} {name}", if ok { "PASS" } else { "FAIL" }));
    }
}

pub fn run(full: bool, seed: u64) -> Outcome {
    let mut mx = Matrix {
        lines: Vec::new(),
        failed: 0,
    };

    let max_r = if full { 8 } else { 6 };
    for r in 1..=max_r {
        mx.record(format!("eulerian-ab-identity r={r}"), eulerian_ab_identity(r));
    }

    let pgs: &[(usize, u32)] = if full {
        &[(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (4, 2)]
    } else {
        &[(3, 2), (3, 3), (2, 5)]
    };
    for &(r, q) in pgs {
        let ok = match (pg_closed_form(r, q), pg(r, q).and_then(|m| coarse_numerator(&m))) {
            (Ok(closed), Ok(direct)) => closed == direct.numerator,
            _ => false,
        };
        mx.record(format!("pg-closed-form r={r} q={q}"), ok);
    }

    let (count, max_points) = if full { (100, 12) } else { (20, 9) };
    let family = random_rank3_family(seed, count, max_points);
    let agreeing = family
        .iter()
        .filter(|m| match (Rank3Profile::of(m), coarse_numerator(m)) {
            (Ok(p), Ok(direct)) => rank3_closed_form(&p) == direct.numerator,
            _ => false,
        })
        .count();
    mx.record(
        format!("rank3-closed-form {agreeing}/{count} random matroids (seed {seed})"),
        agreeing == count,
    );

    let (max_rank, max_m) = if full { (4, 9) } else { (3, 7) };
    for r in 1..=max_rank {
        for m in r..=max_m {
            let ok = match (uniform_normalized_closed_form(r, m), uniform(r, m).and_then(|u| coarse_numerator(&u))) {
                (Ok(closed), Ok(direct)) => closed.scale(&direct.poincare_at_one()) == direct.at_y1(),
                _ => false,
            };
            mx.record(format!("uniform-closed-form r={r} m={m}"), ok);
        }
    }

    if full {
        let params: Vec<u64> = (4..=12).collect();
        let ok = limit_distance_table(LimitFamily::Uniform { r: 3 }, &params)
            .is_ok_and(|rows| is_strictly_decreasing(&rows));
        mx.record("limit uniform r=3 m=4..12".to_string(), ok);
        let ok = limit_distance_table(LimitFamily::Pg { r: 3 }, &[2, 3, 4, 5, 7])
            .is_ok_and(|rows| is_strictly_decreasing(&rows));
        mx.record("limit pg r=3 q=2,3,4,5,7".to_string(), ok);
    }

    let total = mx.lines.len();
    let mut text = mx.lines.join("\n");
    text.push_str(&format!("\n{} of {total} passed\n", total - mx.failed));
    Outcome {
        text,
        code: if mx.failed == 0 { 0 } else { 1 },
    }
}
