//! Oriented matroids presented by covectors.
//!
//! Sign vectors are stored as a pair of bit masks, so ground sets are limited
//! to 64 elements. A [`CovectorSet`] is kept in canonical order (more zeros
//! first, then lexicographic on the `+`/`-`/`0` string).

mod enumerate;
mod faces;

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

pub use enumerate::{covectors_from_arrangement, strictly_feasible};
pub use faces::{FaceLattice, TopeComplex};

use crate::error::{Error, Result};
use crate::matroid::{Flat, Matroid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }
}

/// An element of `{+, -, 0}^E` with `|E| <= 64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    plus: u64,
    minus: u64,
    len: u8,
}

fn full_mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl SignVector {
    pub fn zero(len: usize) -> Result<Self> {
        if len > 64 {
            return Err(Error::GroundSetTooLarge(len));
        }
        Ok(SignVector {
            plus: 0,
            minus: 0,
            len: len as u8,
        })
    }

    pub fn from_signs(signs: &[Sign]) -> Result<Self> {
        let mut v = Self::zero(signs.len())?;
        for (e, s) in signs.iter().enumerate() {
            match s {
                Sign::Plus => v.plus |= 1 << e,
                Sign::Minus => v.minus |= 1 << e,
                Sign::Zero => {}
            }
        }
        Ok(v)
    }

    pub(crate) fn from_masks(plus: u64, minus: u64, len: usize) -> Self {
        debug_assert_eq!(plus & minus, 0);
        SignVector {
            plus,
            minus,
            len: len as u8,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn plus_mask(&self) -> u64 {
        self.plus
    }

    pub fn minus_mask(&self) -> u64 {
        self.minus
    }

    pub fn support_mask(&self) -> u64 {
        self.plus | self.minus
    }

    pub fn zero_mask(&self) -> u64 {
        full_mask(self.len()) & !self.support_mask()
    }

    pub fn get(&self, e: usize) -> Sign {
        if self.plus >> e & 1 == 1 {
            Sign::Plus
        } else if self.minus >> e & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support_mask() == 0
    }

    pub fn num_zeros(&self) -> usize {
        self.zero_mask().count_ones() as usize
    }

    /// The zero set `z(X)` as a sorted element list.
    pub fn zero_set(&self) -> Flat {
        let z = self.zero_mask();
        (0..self.len()).filter(|e| z >> e & 1 == 1).collect()
    }

    pub fn negate(&self) -> Self {
        SignVector {
            plus: self.minus,
            minus: self.plus,
            len: self.len,
        }
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let free = !self.support_mask();
        SignVector {
            plus: self.plus | (other.plus & free),
            minus: self.minus | (other.minus & free),
            len: self.len,
        }
    }

    /// `(X ∘ Y)_e = X_e` if `X_e != 0`, else `Y_e`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn separation_mask(&self, other: &Self) -> u64 {
        (self.plus & other.minus) | (self.minus & other.plus)
    }

    /// `S(X, Y) = {e : X_e = -Y_e != 0}`.
    pub fn separation(&self, other: &Self) -> Result<Vec<usize>> {
        self.check_len(other)?;
        let s = self.separation_mask(other);
        Ok((0..self.len()).filter(|e| s >> e & 1 == 1).collect())
    }

    /// Face order: `X <= Y` iff every `X_e` is `0` or `Y_e`.
    pub fn conforms_to(&self, other: &Self) -> bool {
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    /// Restriction to the elements of `keep` (sorted), re-indexed.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut plus = 0;
        let mut minus = 0;
        for (i, &e) in keep.iter().enumerate() {
            plus |= (self.plus >> e & 1) << i;
            minus |= (self.minus >> e & 1) << i;
        }
        SignVector::from_masks(plus, minus, keep.len())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in 0..self.len() {
            write!(f, "{}", self.get(e).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                '0' => Ok(Sign::Zero),
                other => Err(format!("invalid sign character `{other}`")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SignVector::from_signs(&signs).map_err(|e| e.to_string())
    }
}

/// Sort key of the canonical order.
fn canonical_key(v: &SignVector) -> (Reverse<usize>, String) {
    (Reverse(v.num_zeros()), v.to_string())
}

/// A failed covector axiom, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CovectorViolation {
    WrongLength { vector: String, expected: usize },
    MissingZero,
    Negation { x: String },
    Composition { x: String, y: String },
    Elimination { x: String, y: String, e: usize },
}

impl fmt::Display for CovectorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CovectorViolation::WrongLength { vector, expected } => {
                write!(f, "{vector} does not have length {expected}")
            }
            CovectorViolation::MissingZero => f.write_str("zero vector missing"),
            CovectorViolation::Negation { x } => write!(f, "negation of {x} missing"),
            CovectorViolation::Composition { x, y } => {
                write!(f, "composition {x} o {y} missing")
            }
            CovectorViolation::Elimination { x, y, e } => {
                write!(f, "no elimination of {x} and {y} at element {e}")
            }
        }
    }
}

impl CovectorViolation {
    /// Number of the violated axiom (1 zero, 2 negation, 3 composition,
    /// 4 elimination); 0 for malformed input.
    pub fn axiom(&self) -> u8 {
        match self {
            CovectorViolation::WrongLength { .. } => 0,
            CovectorViolation::MissingZero => 1,
            CovectorViolation::Negation { .. } => 2,
            CovectorViolation::Composition { .. } => 3,
            CovectorViolation::Elimination { .. } => 4,
        }
    }
}

/// Checks the four covector axioms on `vectors` of length `n`.
///
/// Elimination is only examined when the first three axioms hold, since its
/// witnesses are meaningless for a family that is not closed under
/// negation and composition.
pub fn validate_covector_axioms(n: usize, vectors: &[SignVector]) -> Vec<CovectorViolation> {
    check_axioms(n, vectors, false)
}

/// Like [`validate_covector_axioms`] but stops at the first violation.
pub fn satisfies_covector_axioms(n: usize, vectors: &[SignVector]) -> bool {
    check_axioms(n, vectors, true).is_empty()
}

fn check_axioms(n: usize, vectors: &[SignVector], first_only: bool) -> Vec<CovectorViolation> {
    let mut out: Vec<CovectorViolation> = Vec::new();
    macro_rules! report {
        ($v:expr) => {{
            out.push($v);
            if first_only {
                return out;
            }
        }};
    }
    for v in vectors.iter().filter(|v| v.len() != n) {
        report!(CovectorViolation::WrongLength {
            vector: v.to_string(),
            expected: n,
        });
    }
    if !out.is_empty() {
        return out;
    }
    let set: HashSet<SignVector> = vectors.iter().copied().collect();
    let mut list: Vec<SignVector> = set.iter().copied().collect();
    list.sort_by_key(canonical_key);

    if !list.iter().any(SignVector::is_zero) {
        report!(CovectorViolation::MissingZero);
    }
    for x in &list {
        if !set.contains(&x.negate()) {
            report!(CovectorViolation::Negation { x: x.to_string() });
        }
    }
    for x in &list {
        for y in &list {
            if !set.contains(&x.compose_unchecked(y)) {
                report!(CovectorViolation::Composition {
                    x: x.to_string(),
                    y: y.to_string(),
                });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    // candidates for Z, bucketed by the element where they vanish
    let zero_at: Vec<Vec<SignVector>> = (0..n)
        .map(|e| list.iter().copied().filter(|z| z.zero_mask() >> e & 1 == 1).collect())
        .collect();
    let full = full_mask(n);
    for x in &list {
        for y in &list {
            let sep = x.separation_mask(y);
            if sep == 0 {
                continue;
            }
            let xy = x.compose_unchecked(y);
            let keep = full & !sep;
            for e in (0..n).filter(|e| sep >> e & 1 == 1) {
                let found = zero_at[e].iter().any(|z| {
                    z.plus & keep == xy.plus & keep && z.minus & keep == xy.minus & keep
                });
                if !found {
                    report!(CovectorViolation::Elimination {
                        x: x.to_string(),
                        y: y.to_string(),
                        e,
                    });
                }
            }
        }
    }
    out
}

/// The covectors of an oriented matroid on `{0, ..., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovectorSet {
    n: usize,
    covectors: Vec<SignVector>,
}

impl CovectorSet {
    /// Builds and validates a covector set.
    pub fn new(n: usize, vectors: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        let c = Self::new_unchecked(n, vectors)?;
        let violations = validate_covector_axioms(n, &c.covectors);
        if violations.is_empty() {
            Ok(c)
        } else {
            Err(Error::InvalidCovectors(violations))
        }
    }

    /// Sorts and deduplicates without checking the axioms.
    pub fn new_unchecked(n: usize, vectors: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n));
        }
        let set: HashSet<SignVector> = vectors.into_iter().collect();
        if let Some(bad) = set.iter().find(|v| v.len() != n) {
            return Err(Error::LengthMismatch(n, bad.len()));
        }
        let mut covectors: Vec<SignVector> = set.into_iter().collect();
        covectors.sort_by_key(canonical_key);
        Ok(CovectorSet { n, covectors })
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
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

    pub fn contains(&self, v: &SignVector) -> bool {
        self.covectors.contains(v)
    }

    pub fn validate(&self) -> Vec<CovectorViolation> {
        validate_covector_axioms(self.n, &self.covectors)
    }

    /// Maximal covectors.
    pub fn topes(&self) -> Vec<SignVector> {
        let min_zeros = self.covectors.iter().map(SignVector::num_zeros).min();
        self.covectors
            .iter()
            .copied()
            .filter(|v| Some(v.num_zeros()) == min_zeros)
            .collect()
    }

    /// The zero sets, each with its rank in the underlying matroid.
    fn ranked_zero_sets(&self) -> BTreeMap<Flat, usize> {
        let mut sets: Vec<u64> = self.covectors.iter().map(SignVector::zero_mask).collect();
        sets.sort_unstable();
        sets.dedup();
        sets.sort_by_key(|m| m.count_ones());
        let mut ranks: HashMap<u64, usize> = HashMap::new();
        for &s in &sets {
            let r = sets
                .iter()
                .filter(|&&t| t != s && t & !s == 0)
                .map(|t| ranks[t] + 1)
                .max()
                .unwrap_or(0);
            ranks.insert(s, r);
        }
        ranks
            .into_iter()
            .map(|(mask, r)| ((0..self.n).filter(|e| mask >> e & 1 == 1).collect(), r))
            .collect()
    }

    /// The matroid whose flats are the zero sets of covectors.
    pub fn underlying_matroid(&self) -> Result<Matroid> {
        // a zero set's rank is the length of the longest chain of zero sets
        // below it, with the tope zero set (the loops) at rank 0
        let ranked = self.ranked_zero_sets();
        let rank = ranked.values().copied().max().unwrap_or(0);
        Matroid::new(self.n, rank, ranked.into_iter().map(|(f, k)| (k, f)))
    }

    /// `C / X` (covectors vanishing on `X`, restricted to `E \ X`) or `C | X`
    /// (all covectors restricted to `X`).
    pub fn minor(&self, x: &[usize], kind: MinorKind) -> Result<CovectorSet> {
        let mut x = x.to_vec();
        x.sort_unstable();
        x.dedup();
        let mask = x.iter().fold(0u64, |m, &e| if e < 64 { m | 1 << e } else { m });
        let is_flat = x.iter().all(|&e| e < self.n)
            && self.covectors.iter().any(|c| c.zero_mask() == mask);
        if !is_flat {
            return Err(Error::NotAFlat(x));
        }
        let (keep, vectors): (Vec<usize>, Vec<&SignVector>) = match kind {
            MinorKind::Contraction => (
                (0..self.n).filter(|e| x.binary_search(e).is_err()).collect(),
                self.covectors
                    .iter()
                    .filter(|c| c.zero_mask() & mask == mask)
                    .collect(),
            ),
            MinorKind::Restriction => (x.clone(), self.covectors.iter().collect()),
        };
        CovectorSet::new_unchecked(keep.len(), vectors.into_iter().map(|c| c.restrict(&keep)))
    }

    pub fn face_lattice(&self) -> Result<FaceLattice> {
        FaceLattice::new(self)
    }

    /// `.cov` rendering in canonical order.
    pub fn render(&self) -> String {
        let mut out = format!("covectors\nn {}\n", self.n);
        for c in &self.covectors {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses a `.cov` document and validates the axioms.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("").trim();
            (!l.is_empty()).then_some((i + 1, l))
        });
        let (line, magic) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
        if magic != "covectors" {
            return Err(Error::parse(line, "expected `covectors` header"));
        }
        let (line, nline) = lines
            .next()
            .ok_or_else(|| Error::parse(line + 1, "missing `n` line"))?;
        let n: usize = nline
            .strip_prefix("n ")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::parse(line, "expected `n <int>`"))?;
        if n > 64 {
            return Err(Error::parse(line, format!("n = {n} exceeds 64")));
        }
        let mut vectors = Vec::new();
        for (line, body) in lines {
            if body.chars().count() != n {
                return Err(Error::parse(line, format!("expected {n} signs, found `{body}`")));
            }
            let v: SignVector = body.parse().map_err(|m: String| Error::parse(line, m))?;
            vectors.push(v);
        }
        CovectorSet::new(n, vectors)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.render())?;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorKind {
    Contraction,
    Restriction,
}
