//! The symbolic RO(C₂)-graded layer: graded sets, the norm of a graded set,
//! and free-module descriptors with their box products and closed-form
//! homology predictions.
//!
//! A descriptor is a multiset of shifted free summands over the norm of F₂.
//! FIXED summands are suspensions by a genuine representation `p + q sigma`;
//! INDUCED summands are suspensions of the induced module and are stored
//! with the sign part untwisted away (`q = 0`), since smashing a free orbit
//! with the sign sphere is equivariantly a plain suspension.

use crate::mackey::{direct_sum, norm_f2_induced, zero, MackeyFunctor};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrfreeError {
    #[error("duplicate label {0:?} in graded set")]
    DuplicateLabel(String),
    #[error("negative degree {1} for label {0:?}")]
    NegativeDegree(String, i64),
    #[error("invalid stage {0}")]
    InvalidStage(i64),
    #[error("letter {0:?} has degree 0; the underlying basis must be reduced")]
    DegreeZeroLetter(String),
    #[error("sphere table has no entry for S^({p}+{q}s) in degree {degree}")]
    TableMiss { p: i64, q: i64, degree: i64 },
}

/// A finite set with a degree function, the basis of a graded module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSet {
    elements: Vec<(String, i64)>,
}

impl GradedSet {
    pub fn new(elements: Vec<(String, i64)>) -> Result<Self, GrfreeError> {
        let mut seen = std::collections::BTreeSet::new();
        for (label, degree) in &elements {
            if *degree < 0 {
                return Err(GrfreeError::NegativeDegree(label.clone(), *degree));
            }
            if !seen.insert(label.clone()) {
                return Err(GrfreeError::DuplicateLabel(label.clone()));
            }
        }
        Ok(GradedSet { elements })
    }

    pub fn empty() -> Self {
        GradedSet { elements: vec![] }
    }

    pub fn elements(&self) -> &[(String, i64)] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.elements.iter().map(|(_, d)| *d).min()
    }
}

/// A virtual representation `p + q sigma` of the group of order two.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct RORep {
    pub p: i64,
    pub q: i64,
}

impl RORep {
    pub fn new(p: i64, q: i64) -> Self {
        RORep { p, q }
    }

    pub fn trivial(p: i64) -> Self {
        RORep { p, q: 0 }
    }

    pub fn sigma() -> Self {
        RORep { p: 0, q: 1 }
    }

    /// The regular representation `1 + sigma`.
    pub fn rho2() -> Self {
        RORep { p: 1, q: 1 }
    }

    pub fn add(self, other: RORep) -> RORep {
        RORep {
            p: self.p + other.p,
            q: self.q + other.q,
        }
    }

    /// Total dimension `p + q`.
    pub fn dim(self) -> i64 {
        self.p + self.q
    }
}

impl fmt::Display for RORep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (p, 0) => write!(f, "{p}"),
            (0, 1) => write!(f, "s"),
            (0, q) => write!(f, "{q}s"),
            (p, 1) => write!(f, "{p}+s"),
            (p, q) => write!(f, "{p}+{q}s"),
        }
    }
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum SummandKind {
    /// A suspension of the norm of F₂ itself.
    #[serde(rename = "B")]
    Fixed,
    /// A suspension of the induced module, shift normalized to an integer.
    #[serde(rename = "BC2")]
    Induced,
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct FreeSummand {
    pub kind: SummandKind,
    #[serde(flatten)]
    pub shift: RORep,
}

impl FreeSummand {
    pub fn fixed(shift: RORep) -> Self {
        FreeSummand {
            kind: SummandKind::Fixed,
            shift,
        }
    }

    /// Induced summands untwist: the stored shift is the total dimension.
    pub fn induced(shift: RORep) -> Self {
        FreeSummand {
            kind: SummandKind::Induced,
            shift: RORep::trivial(shift.dim()),
        }
    }
}

impl fmt::Display for FreeSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SummandKind::Fixed => write!(f, "B({})", self.shift),
            SummandKind::Induced => write!(f, "BC2({})", self.shift.p),
        }
    }
}

/// A finite multiset of free summands, kept sorted so that equality is
/// multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeDescriptor {
    summands: Vec<FreeSummand>,
}

impl FreeDescriptor {
    pub fn new(mut summands: Vec<FreeSummand>) -> Self {
        for s in summands.iter_mut() {
            if s.kind == SummandKind::Induced {
                *s = FreeSummand::induced(s.shift);
            }
        }
        summands.sort();
        FreeDescriptor { summands }
    }

    pub fn empty() -> Self {
        FreeDescriptor { summands: vec![] }
    }

    pub fn summands(&self) -> &[FreeSummand] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Direct sum of descriptors.
    pub fn plus(&self, other: &FreeDescriptor) -> FreeDescriptor {
        let mut all = self.summands.clone();
        all.extend(other.summands.iter().copied());
        FreeDescriptor::new(all)
    }

    /// True when every summand of `self` occurs in `other` with at least
    /// the same multiplicity.
    pub fn is_sub_multiset_of(&self, other: &FreeDescriptor) -> bool {
        let mut counts: BTreeMap<FreeSummand, usize> = BTreeMap::new();
        for s in &other.summands {
            *counts.entry(*s).or_insert(0) += 1;
        }
        for s in &self.summands {
            match counts.get_mut(s) {
                Some(c) if *c > 0 => *c -= 1,
                _ => return false,
            }
        }
        true
    }
}

impl fmt::Display for FreeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The norm of a graded set: orbits of pairs under the swap. Each diagonal
/// pair in degree d contributes a FIXED summand at `d + d sigma`; each free
/// pair contributes an INDUCED summand at the sum of the degrees.
pub fn norm_graded_set(s: &GradedSet) -> FreeDescriptor {
    let mut out = Vec::new();
    let els = s.elements();
    for (i, (_, d)) in els.iter().enumerate() {
        out.push(FreeSummand::fixed(RORep::new(*d, *d)));
        for (_, e) in els.iter().skip(i + 1) {
            out.push(FreeSummand::induced(RORep::trivial(d + e)));
        }
    }
    FreeDescriptor::new(out)
}

/// Basis of the i-th tensor power: words of length i, labels concatenated,
/// degrees added. The empty word is labeled "1".
pub fn tensor_power_basis(s: &GradedSet, i: usize) -> Result<GradedSet, GrfreeError> {
    let mut words: Vec<(String, i64)> = vec![(String::from("1"), 0)];
    for _ in 0..i {
        let mut next = Vec::with_capacity(words.len() * s.len());
        for (w, d) in &words {
            for (letter, e) in s.elements() {
                let label = if w == "1" {
                    letter.clone()
                } else {
                    format!("{w}{letter}")
                };
                next.push((label, d + e));
            }
        }
        words = next;
    }
    GradedSet::new(words)
}

/// The box product of descriptors: FIXED shifts add; a FIXED summand
/// untwists against an INDUCED one; two INDUCED summands give two copies.
pub fn box_descriptors(d1: &FreeDescriptor, d2: &FreeDescriptor) -> FreeDescriptor {
    let mut out = Vec::new();
    for a in d1.summands() {
        for b in d2.summands() {
            match (a.kind, b.kind) {
                (SummandKind::Fixed, SummandKind::Fixed) => {
                    out.push(FreeSummand::fixed(a.shift.add(b.shift)));
                }
                (SummandKind::Fixed, SummandKind::Induced)
                | (SummandKind::Induced, SummandKind::Fixed) => {
                    out.push(FreeSummand::induced(a.shift.add(b.shift)));
                }
                (SummandKind::Induced, SummandKind::Induced) => {
                    let c = FreeSummand::induced(a.shift.add(b.shift));
                    out.push(c);
                    out.push(c);
                }
            }
        }
    }
    FreeDescriptor::new(out)
}

/// Homology of the coinduced space with norm coefficients: free on the
/// norm of the full homology basis of the underlying space.
pub fn coind_homology_descriptor(s: &GradedSet) -> FreeDescriptor {
    norm_graded_set(s)
}

/// Suspends every summand: FIXED shifts by the representation itself,
/// INDUCED shifts by its total dimension.
pub fn suspend_descriptor(d: &FreeDescriptor, alpha: RORep) -> FreeDescriptor {
    FreeDescriptor::new(
        d.summands()
            .iter()
            .map(|s| match s.kind {
                SummandKind::Fixed => FreeSummand::fixed(s.shift.add(alpha)),
                SummandKind::Induced => FreeSummand::induced(s.shift.add(alpha)),
            })
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Bounded(i64),
    Unbounded,
}

/// Predicted homology of the sign-James construction on X, through the
/// given stage and up to the given integer degree.
///
/// The full answer is the sum over word lengths k of the norm of the k-th
/// tensor power of the underlying reduced basis, box one copy of the unit
/// and one copy of the reduced homology of X. Stage n keeps the norm-power
/// term when 2k <= n and the smash term when 2k + 1 <= n. Summands whose
/// minimal possible degree exceeds the cap are dropped.
pub fn james_homology_descriptor(
    underlying: &GradedSet,
    hred_x: &FreeDescriptor,
    stage: Stage,
    degree_cap: i64,
) -> Result<FreeDescriptor, GrfreeError> {
    if let Stage::Bounded(n) = stage {
        if n < 0 {
            return Err(GrfreeError::InvalidStage(n));
        }
    }
    for (label, d) in underlying.elements() {
        if *d == 0 {
            return Err(GrfreeError::DegreeZeroLetter(label.clone()));
        }
    }
    let min_letter = underlying.min_degree().unwrap_or(0).max(1);
    let cap_filter = |d: &FreeDescriptor| -> FreeDescriptor {
        FreeDescriptor::new(
            d.summands()
                .iter()
                .copied()
                .filter(|s| s.shift.p <= degree_cap)
                .collect(),
        )
    };

    let mut out = FreeDescriptor::empty();
    let mut k: i64 = 0;
    loop {
        let (want_norm, want_smash) = match stage {
            Stage::Unbounded => (true, true),
            Stage::Bounded(n) => (2 * k <= n, 2 * k + 1 <= n),
        };
        if !want_norm && !want_smash {
            break;
        }
        // Words of length k sit in degree at least k * min_letter, which
        // bounds every summand degree from below.
        if k * min_letter > degree_cap {
            break;
        }
        if k > 0 && underlying.is_empty() {
            break;
        }
        let words = tensor_power_basis(underlying, k as usize)?;
        let norm = norm_graded_set(&words);
        if want_norm {
            out = out.plus(&cap_filter(&norm));
        }
        if want_smash {
            out = out.plus(&cap_filter(&box_descriptors(&norm, hred_x)));
        }
        k += 1;
    }
    Ok(out)
}

/// Reduced Bredon homology of representation spheres, computed once by the
/// cellular engine and cached by representation. Degrees within range that
/// carry no entry are zero; degrees beyond the computed range are a miss.
#[derive(Default)]
pub struct SphereTable {
    entries: BTreeMap<(i64, i64), SphereEntry>,
}

pub struct SphereEntry {
    pub max_degree: i64,
    pub homology: BTreeMap<i64, MackeyFunctor>,
}

impl SphereTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: i64, q: i64, entry: SphereEntry) {
        self.entries.insert((p, q), entry);
    }

    pub fn has(&self, p: i64, q: i64) -> bool {
        self.entries.contains_key(&(p, q))
    }

    pub fn reduced_homology(&self, p: i64, q: i64, n: i64) -> Result<MackeyFunctor, GrfreeError> {
        if n < 0 {
            return Ok(zero());
        }
        let entry = self
            .entries
            .get(&(p, q))
            .ok_or(GrfreeError::TableMiss { p, q, degree: n })?;
        if n > entry.max_degree {
            return Err(GrfreeError::TableMiss { p, q, degree: n });
        }
        Ok(entry.homology.get(&n).cloned().unwrap_or_else(zero))
    }
}

/// Evaluates a descriptor in one integer degree as a Mackey functor.
pub fn evaluate_descriptor(
    d: &FreeDescriptor,
    n: i64,
    table: &SphereTable,
) -> Result<MackeyFunctor, GrfreeError> {
    let mut parts = Vec::new();
    for s in d.summands() {
        match s.kind {
            SummandKind::Fixed => {
                let h = table.reduced_homology(s.shift.p, s.shift.q, n)?;
                if !h.is_zero() {
                    parts.push(h);
                }
            }
            SummandKind::Induced => {
                if s.shift.p == n {
                    parts.push(norm_f2_induced());
                }
            }
        }
    }
    let refs: Vec<&MackeyFunctor> = parts.iter().collect();
    Ok(direct_sum(&refs))
}
