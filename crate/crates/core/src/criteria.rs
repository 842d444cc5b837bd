//! Bound, orientability and real-rootedness checks, collected into reports.
//!
//! Each [`Check`] records whether it is backed by a theorem. Only a failed
//! theorem-level check signals a genuine contradiction; the remaining
//! checks are evidence.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::exactpoly::{
    coeffwise_cmp, count_real_roots, is_palindromic, poly_json, rat, Rational, UniPoly,
};
use crate::matroid::Matroid;
use crate::oriented::{CovectorSet, FaceLattice};
use crate::series::{coarse_numerator, eulerian, CoarseResult, EulerianType, Rank3Profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    /// Short machine-friendly result, e.g. `equality` or `non-orientable`.
    pub outcome: String,
    /// Whether a failure contradicts a proved statement.
    pub theorem: bool,
    /// Which computation produced the polynomials in the witness.
    pub provenance: String,
    pub witness: Map<String, Value>,
}

impl Check {
    fn new(name: &str, verdict: Verdict, outcome: &str, theorem: bool, provenance: &str) -> Self {
        Check {
            name: name.to_string(),
            verdict,
            outcome: outcome.to_string(),
            theorem,
            provenance: provenance.to_string(),
            witness: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.witness.insert(key.to_string(), value.into());
        self
    }

    fn not_applicable(name: &str, reason: &str) -> Self {
        Check::new(name, Verdict::NotApplicable, "not-applicable", false, "none").with("reason", reason)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// True if a theorem-level check failed.
    pub fn has_theorem_failure(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.theorem && c.verdict == Verdict::Fails)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("subject: {}\n", self.subject);
        for c in &self.checks {
            let kind = if c.theorem { "theorem" } else { "evidence" };
            let _ = writeln!(
                out,
                "  [{}] {} ({kind}): {}",
                c.verdict.as_str(),
                c.name,
                c.outcome
            );
            for (k, v) in &c.witness {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "      {k} = {shown}");
            }
        }
        out
    }
}

fn poly_text(p: &UniPoly) -> Value {
    Value::String(p.to_string())
}

/// Precomputed data shared by the checks on one subject.
pub struct Subject {
    pub name: String,
    pub matroid: Matroid,
    pub coarse: CoarseResult,
    pub faces: Option<FaceLattice>,
}

impl Subject {
    pub fn from_matroid(name: &str, m: &Matroid) -> Result<Self> {
        Ok(Subject {
            name: name.to_string(),
            matroid: m.clone(),
            coarse: coarse_numerator(m)?,
            faces: None,
        })
    }

    pub fn from_covectors(name: &str, c: &CovectorSet) -> Result<Self> {
        let m = c.underlying_matroid()?;
        Ok(Subject {
            name: name.to_string(),
            coarse: coarse_numerator(&m)?,
            matroid: m,
            faces: Some(c.face_lattice()?),
        })
    }

    fn rank(&self) -> usize {
        self.matroid.rank()
    }

    fn orientable(&self) -> bool {
        self.faces.is_some()
    }
}

const FLAGS: &str = "flag enumeration";
const FACES: &str = "face lattice";

/// `E_r^A <= N(1,T)/pi(1)` with equality exactly for simplicial oriented
/// matroids, and palindromicity of `N(1,T)`.
pub fn lower_bound(s: &Subject) -> Result<Check> {
    let Some(faces) = &s.faces else {
        return Ok(Check::not_applicable("lower-bound", "orientation unknown"));
    };
    let r = s.rank();
    let ea = eulerian(EulerianType::A, r)?;
    let cmp = coeffwise_cmp(&ea, &s.coarse.normalized_y1);
    let below = matches!(cmp, Some(Ordering::Less) | Some(Ordering::Equal));
    let equality = cmp == Some(Ordering::Equal);
    let simplicial = faces.is_simplicial();
    let n1 = s.coarse.at_y1();
    let palindromic = n1.degree() == Some(r - 1) && is_palindromic(&n1, r - 1);
    let ok = below && equality == simplicial && palindromic;
    let outcome = if equality { "equality" } else { "strict" };
    Ok(Check::new(
        "lower-bound",
        if ok { Verdict::Holds } else { Verdict::Fails },
        outcome,
        true,
        FLAGS,
    )
    .with("eulerian_a", poly_text(&ea))
    .with("normalized", poly_text(&s.coarse.normalized_y1))
    .with("simplicial", simplicial)
    .with("palindromic", palindromic))
}

pub fn check_lower_bound(c: &CovectorSet) -> Result<Check> {
    lower_bound(&Subject::from_covectors("covectors", c)?)
}

/// `N(1,T)` equals the sum of the tope h-polynomials.
pub fn h_decomposition(s: &Subject) -> Result<Check> {
    let Some(faces) = &s.faces else {
        return Ok(Check::not_applicable("h-decomposition", "orientation unknown"));
    };
    let mut total = UniPoly::zero();
    for t in faces.topes() {
        total = total + faces.tope_complex(&t)?.h;
    }
    let n1 = s.coarse.at_y1();
    let ok = total == n1;
    Ok(Check::new(
        "h-decomposition",
        if ok { Verdict::Holds } else { Verdict::Fails },
        if ok { "equal" } else { "different" },
        true,
        FACES,
    )
    .with("tope_sum", poly_text(&total))
    .with("numerator_y1", poly_text(&n1)))
}

/// `T^{r-1} N(1, 1/T) = N(1, T)`: a theorem for rank at most 3 and for
/// orientable matroids, evidence otherwise.
pub fn palindromicity(s: &Subject) -> Check {
    let r = s.rank();
    let n1 = s.coarse.at_y1();
    let ok = n1.degree() == Some(r - 1) && is_palindromic(&n1, r - 1);
    let theorem = r <= 3 || s.orientable();
    Check::new(
        "palindromicity",
        if ok { Verdict::Holds } else { Verdict::Fails },
        if ok { "palindromic" } else { "not-palindromic" },
        theorem,
        FLAGS,
    )
    .with("numerator_y1", poly_text(&n1))
    .with("degree", r - 1)
}

/// `(1+T)^{r-1} < N(1,T)/pi(1) < E_r^B` for `r >= 3`.
pub fn conjecture_bounds(s: &Subject) -> Result<Check> {
    let r = s.rank();
    if r < 3 {
        return Ok(Check::not_applicable("conjecture-bounds", "rank below 3"));
    }
    let lower = UniPoly::from_ints(&[1, 1]).pow(r - 1);
    let upper = eulerian(EulerianType::B, r)?;
    let norm = &s.coarse.normalized_y1;
    let lower_ok = coeffwise_cmp(&lower, norm) == Some(Ordering::Less);
    let upper_ok = coeffwise_cmp(norm, &upper) == Some(Ordering::Less);
    let theorem = r == 3 || (r == 4 && s.orientable());
    let outcome = match (lower_ok, upper_ok) {
        (true, true) => "strictly-between",
        (false, true) => "lower-bound-violated",
        (true, false) => "upper-bound-violated",
        (false, false) => "both-violated",
    };
    Ok(Check::new(
        "conjecture-bounds",
        if lower_ok && upper_ok { Verdict::Holds } else { Verdict::Fails },
        outcome,
        theorem,
        FLAGS,
    )
    .with("lower", poly_text(&lower))
    .with("normalized", poly_text(norm))
    .with("upper", poly_text(&upper)))
}

pub fn check_conjecture_bounds(m: &Matroid) -> Result<Check> {
    conjecture_bounds(&Subject::from_matroid("matroid", m)?)
}

fn profile_witness(check: Check, p: &Rank3Profile) -> Check {
    check
        .with("n", p.n)
        .with("c", p.c)
        .with("s", p.s)
        .with("three_c_minus_one", 3 * (p.c as i64 - 1))
}

/// `3(c-1) < s` on `sim(M)` proves `M` non-orientable. For a subject known
/// to be orientable, the criterion firing would contradict the theorem.
pub fn nonorientability(s: &Subject) -> Check {
    if s.rank() != 3 {
        return Check::not_applicable("rank3-nonorientability", "rank is not 3");
    }
    let Ok(p) = Rank3Profile::of(&s.matroid) else {
        return Check::not_applicable("rank3-nonorientability", "degenerate rank-3 census");
    };
    let fires = p.excess() > 0;
    let check = if fires && s.orientable() {
        Check::new("rank3-nonorientability", Verdict::Fails, "non-orientable", true, "flat census")
    } else if fires {
        Check::new("rank3-nonorientability", Verdict::Holds, "non-orientable", true, "flat census")
    } else {
        Check::new("rank3-nonorientability", Verdict::Inconclusive, "inconclusive", false, "flat census")
    };
    profile_witness(check, &p)
}

pub fn rank3_nonorientability(m: &Matroid) -> Check {
    let p = match m.rank() {
        3 => Rank3Profile::of(m).ok(),
        _ => None,
    };
    let Some(p) = p else {
        return Check::not_applicable("rank3-nonorientability", "rank is not 3");
    };
    let check = if p.excess() > 0 {
        Check::new("rank3-nonorientability", Verdict::Holds, "non-orientable", true, "flat census")
    } else {
        Check::new("rank3-nonorientability", Verdict::Inconclusive, "inconclusive", false, "flat census")
    };
    profile_witness(check, &p)
}

/// A rank-3 arrangement is simplicial iff `3(c-1) = s`. With a face
/// lattice at hand the prediction is compared with the actual topes.
pub fn simpliciality_criterion(s: &Subject) -> Check {
    let name = "rank3-simpliciality";
    if s.rank() != 3 {
        return Check::not_applicable(name, "rank is not 3");
    }
    let Ok(p) = Rank3Profile::of(&s.matroid) else {
        return Check::not_applicable(name, "degenerate rank-3 census");
    };
    let predicted = p.excess() == 0;
    let outcome = if predicted { "simplicial-if-realized" } else { "no" };
    let check = match &s.faces {
        Some(faces) => {
            let actual = faces.is_simplicial();
            let verdict = if actual == predicted { Verdict::Holds } else { Verdict::Fails };
            Check::new(name, verdict, outcome, true, FACES).with("simplicial", actual)
        }
        None => Check::new(name, Verdict::Holds, outcome, false, "flat census"),
    };
    profile_witness(check, &p)
}

pub fn rank3_simpliciality_criterion(m: &Matroid) -> Result<Check> {
    Ok(simpliciality_criterion(&Subject::from_matroid("matroid", m)?))
}

/// `N(1,T)[T] < pi(1) (3^{r-1} - r)` for oriented matroids of rank at
/// least 3, the flag bound `f_1 < (3^{r-1} - 1) |topes|` behind it, and for
/// rank 4 the full bound `N(1,T) < pi(1) E_4^B`.
pub fn linear_bound(s: &Subject) -> Result<Check> {
    let name = "linear-upper-bound";
    let Some(faces) = &s.faces else {
        return Ok(Check::not_applicable(name, "orientation unknown"));
    };
    let r = s.rank();
    if r < 3 {
        return Ok(Check::not_applicable(name, "rank below 3"));
    }
    let pi1 = s.coarse.poincare_at_one();
    let n1 = s.coarse.at_y1();
    let three = BigInt::from(3).pow(r as u32 - 1);
    let eb_linear = Rational::from_integer(&three - BigInt::from(r));
    let bound = &pi1 * &eb_linear;
    let linear_ok = n1.coeff(1) < bound;

    let counts = faces.flag_counts();
    let topes = faces.topes().len() as u64;
    let flag_bound = Rational::from_integer((&three - 1) * BigInt::from(topes));
    let flag_ok = Rational::from_integer(BigInt::from(counts[1])) < flag_bound;

    let mut check_ok = linear_ok && flag_ok;
    let mut check = Check::new(name, Verdict::Holds, "strict", true, FACES)
        .with("linear_coefficient", n1.coeff(1).to_string())
        .with("bound", bound.to_string())
        .with("f1", counts[1])
        .with("f1_bound", flag_bound.to_string());
    if r == 4 {
        let full = eulerian(EulerianType::B, 4)?.scale(&pi1);
        let full_ok = coeffwise_cmp(&n1, &full) == Some(Ordering::Less);
        check_ok &= full_ok;
        check = check.with("full_bound", poly_text(&full)).with("full_bound_holds", full_ok);
    }
    if !check_ok {
        check.verdict = Verdict::Fails;
        check.outcome = "violated".to_string();
    }
    Ok(check)
}

pub fn check_rank4_linear_bound(c: &CovectorSet) -> Result<Check> {
    linear_bound(&Subject::from_covectors("covectors", c)?)
}

/// Sturm count of `N(1,T)`; real-rooted means all roots real with
/// multiplicity. Recorded as evidence only.
pub fn realrootedness(s: &Subject) -> Result<Check> {
    let n1 = s.coarse.at_y1();
    let count = count_real_roots(&n1)?;
    let ok = count.is_real_rooted();
    Ok(Check::new(
        "real-rootedness",
        if ok { Verdict::Holds } else { Verdict::Fails },
        if ok { "real-rooted" } else { "not-real-rooted" },
        false,
        "sturm chain",
    )
    .with("polynomial", poly_text(&n1))
    .with("distinct", count.distinct)
    .with("with_multiplicity", count.with_multiplicity)
    .with("degree", count.degree)
    .with("convention", "roots counted with multiplicity"))
}

pub fn realrootedness_report(m: &Matroid) -> Result<Check> {
    realrootedness(&Subject::from_matroid("matroid", m)?)
}

/// Every applicable check for the subject, in a fixed order.
pub fn report(s: &Subject) -> Result<Report> {
    let checks = vec![
        lower_bound(s)?,
        h_decomposition(s)?,
        palindromicity(s),
        conjecture_bounds(s)?,
        linear_bound(s)?,
        nonorientability(s),
        simpliciality_criterion(s),
        realrootedness(s)?,
    ];
    Ok(Report {
        subject: s.name.clone(),
        checks,
    })
}

/// Summary used by scans: `pi(1)`, `N(1,T)` and the normalized form.
pub fn series_summary(s: &Subject) -> Value {
    json!({
        "rank": s.rank(),
        "pi1": s.coarse.poincare_at_one().to_string(),
        "numerator_y1": poly_json(&s.coarse.at_y1()),
        "positive": s.coarse.poincare_at_one() > rat(0),
    })
}
