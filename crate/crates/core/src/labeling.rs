//! Labeling value types and the pure verifiers for every labeling notion
//! the crate searches for.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labeling has {found} values but the graph needs {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("label values must be positive")]
    NonPositive,
    #[error("label {0} is used more than once")]
    NotInjective(i64),
    #[error("label {value} lies outside [{lo}, {hi}]")]
    OutOfRange { value: i64, lo: i64, hi: i64 },
    #[error("gap is undefined on an empty set")]
    EmptySet,
    #[error("value {0} occurs more than once; gap is defined on sets")]
    DuplicateElement(i64),
    #[error("strength is undefined for an edgeless graph")]
    Edgeless,
    #[error("labeling is not graceful")]
    NotGraceful,
    #[error("repeat allowance {found} is wrong; expected {expected}")]
    WrongAllowance { expected: u8, found: u8 },
    #[error("{repeats} repeated labels exceed the allowance of {allowance}")]
    RepeatAllowanceViolated { repeats: usize, allowance: u8 },
}

/// Injective assignment of positive labels to the vertices `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct VertexLabeling(Vec<u32>);

impl VertexLabeling {
    pub fn new(values: Vec<u32>) -> Result<Self, LabelingError> {
        if values.contains(&0) {
            return Err(LabelingError::NonPositive);
        }
        if let Some(v) = first_duplicate(values.iter().map(|&v| v as i64)) {
            return Err(LabelingError::NotInjective(v));
        }
        Ok(VertexLabeling(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_label(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Adds `c` to every label.
    pub fn translated(&self, c: u32) -> VertexLabeling {
        VertexLabeling(self.0.iter().map(|&v| v + c).collect())
    }
}

impl TryFrom<Vec<u32>> for VertexLabeling {
    type Error = LabelingError;
    fn try_from(values: Vec<u32>) -> Result<Self, Self::Error> {
        VertexLabeling::new(values)
    }
}

impl From<VertexLabeling> for Vec<u32> {
    fn from(f: VertexLabeling) -> Self {
        f.0
    }
}

/// A bijection `V -> [1, p]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Numbering(Vec<u32>);

impl TryFrom<Vec<u32>> for Numbering {
    type Error = LabelingError;

    fn try_from(values: Vec<u32>) -> Result<Self, Self::Error> {
        Numbering::new(values)
    }
}

impl From<Numbering> for Vec<u32> {
    fn from(f: Numbering) -> Self {
        f.0
    }
}

impl Numbering {
    pub fn new(values: Vec<u32>) -> Result<Self, LabelingError> {
        let p = values.len() as i64;
        check_range(values.iter().map(|&v| v as i64), 1, p)?;
        if let Some(v) = first_duplicate(values.iter().map(|&v| v as i64)) {
            return Err(LabelingError::NotInjective(v));
        }
        Ok(Numbering(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

/// Edge sums `f(u) + f(v)`, sorted, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSet(pub Vec<u32>);

impl SumSet {
    pub fn has_duplicates(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }
}

/// A checkable super edge-magic witness for `G ∪ isolated·K1`.
///
/// `labels` covers the graph's vertices first, then the isolated vertices in
/// increasing label order. For an edgeless graph `sums` is empty and `s` is
/// recorded as 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemCertificate {
    pub order: usize,
    pub isolated: usize,
    pub labels: Vec<u32>,
    pub sums: Vec<u32>,
    pub s: u32,
    pub k: u32,
}

/// Graceful labeling into `[0, q]`, optionally carrying the α boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GracefulLabeling {
    pub values: Vec<u32>,
    pub lambda: Option<u32>,
}

/// Residue labeling used by the harmonious and sequential checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularLabeling {
    pub values: Vec<u32>,
    pub repeat_allowance: u8,
}

impl ModularLabeling {
    /// Allowance is 1 for trees and 0 otherwise.
    pub fn for_graph(g: &Graph, values: Vec<u32>) -> Self {
        ModularLabeling { values, repeat_allowance: u8::from(g.is_tree()) }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemError {
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("labeling is not a bijection onto [1, {0}]")]
    NotBijective(usize),
    #[error("duplicate sums: {0} occurs more than once")]
    DuplicateSums(u32),
    #[error("sums are not consecutive (gap {0})")]
    NotConsecutive(u64),
}

fn first_duplicate(values: impl IntoIterator<Item = i64>) -> Option<i64> {
    let mut seen = BTreeSet::new();
    values.into_iter().find(|&v| !seen.insert(v))
}

fn check_range(values: impl IntoIterator<Item = i64>, lo: i64, hi: i64) -> Result<(), LabelingError> {
    match values.into_iter().find(|v| !(lo..=hi).contains(v)) {
        Some(value) => Err(LabelingError::OutOfRange { value, lo, hi }),
        None => Ok(()),
    }
}

fn check_len(g: &Graph, len: usize) -> Result<(), LabelingError> {
    if len == g.order() {
        Ok(())
    } else {
        Err(LabelingError::WrongLength { expected: g.order(), found: len })
    }
}

pub fn sum_set(g: &Graph, f: &VertexLabeling) -> Result<SumSet, LabelingError> {
    if f.len() < g.order() {
        return Err(LabelingError::WrongLength { expected: g.order(), found: f.len() });
    }
    let mut sums: Vec<u32> = g.edges().iter().map(|&(u, v)| f.0[u] + f.0[v]).collect();
    sums.sort_unstable();
    Ok(SumSet(sums))
}

/// `(max - min + 1) - |s|` for a nonempty set of integers.
pub fn gap(s: &[i64]) -> Result<u64, LabelingError> {
    let (min, max) = match (s.iter().min(), s.iter().max()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => return Err(LabelingError::EmptySet),
    };
    if let Some(d) = first_duplicate(s.iter().copied()) {
        return Err(LabelingError::DuplicateElement(d));
    }
    Ok((max - min + 1) as u64 - s.len() as u64)
}

pub fn is_consecutive(s: &[i64]) -> Result<bool, LabelingError> {
    Ok(gap(s)? == 0)
}

/// Checks that `f` turns `G ∪ isolated·K1` into a super edge-magic graph.
///
/// `f` may list labels for the graph vertices only (isolated vertices then
/// receive the unused labels) or for all `p + isolated` vertices.
pub fn verify_sem(g: &Graph, f: &VertexLabeling, isolated: usize) -> Result<SemCertificate, SemError> {
    let p = g.order();
    let total = p + isolated;
    if f.len() != p && f.len() != total {
        return Err(LabelingError::WrongLength { expected: total, found: f.len() }.into());
    }
    if f.values().iter().any(|&v| v as usize > total) {
        return Err(SemError::NotBijective(total));
    }
    // injective and positive by construction of VertexLabeling
    let mut labels = f.values().to_vec();
    if labels.len() == p {
        let used: BTreeSet<u32> = labels.iter().copied().collect();
        labels.extend((1..=total as u32).filter(|v| !used.contains(v)));
    }

    let sums = sum_set(g, f)?;
    if let Some(w) = sums.0.windows(2).find(|w| w[0] == w[1]) {
        return Err(SemError::DuplicateSums(w[0]));
    }
    let q = g.size();
    let s = sums.0.first().copied().unwrap_or(0);
    if q > 0 {
        let spread: Vec<i64> = sums.0.iter().map(|&x| x as i64).collect();
        let gamma = gap(&spread)?;
        if gamma != 0 {
            return Err(SemError::NotConsecutive(gamma));
        }
    }
    let k = (total + q) as u32 + s;
    let cert = SemCertificate { order: p, isolated, labels, sums: sums.0, s, k };
    debug_assert!(sum_interval_identity_holds(&cert, q));
    Ok(cert)
}

/// The sums are exactly `[k - (p' + q), k - (p' + 1)]` with `p' = p + isolated`.
pub fn sum_interval_identity_holds(cert: &SemCertificate, q: usize) -> bool {
    let total = (cert.order + cert.isolated) as i64;
    let lo = cert.k as i64 - (total + q as i64);
    let hi = cert.k as i64 - (total + 1);
    cert.sums.len() == q && cert.sums.iter().zip(lo..=hi).all(|(&s, want)| s as i64 == want)
}

/// Independent re-check of a serialized certificate against its graph.
pub fn check_sem_certificate(g: &Graph, cert: &SemCertificate) -> Result<(), String> {
    if cert.order != g.order() {
        return Err(format!("order {} does not match graph order {}", cert.order, g.order()));
    }
    let total = cert.order + cert.isolated;
    if cert.labels.len() != total {
        return Err(format!("{} labels for {} vertices", cert.labels.len(), total));
    }
    let distinct: BTreeSet<u32> = cert.labels.iter().copied().collect();
    if distinct.len() != total || distinct.iter().any(|&v| v == 0 || v as usize > total) {
        return Err(format!("labels are not a bijection onto [1, {total}]"));
    }
    let mut sums: Vec<u32> = g.edges().iter().map(|&(u, v)| cert.labels[u] + cert.labels[v]).collect();
    sums.sort_unstable();
    if sums != cert.sums {
        return Err("recorded sums differ from the recomputed edge sums".into());
    }
    if g.size() > 0 && cert.s != sums[0] {
        return Err(format!("s = {} but the least sum is {}", cert.s, sums[0]));
    }
    if g.size() == 0 && cert.s != 0 {
        return Err("edgeless certificate must record s = 0".into());
    }
    if cert.k as usize != total + g.size() + cert.s as usize {
        return Err(format!("k = {} violates k = (p + isolated) + q + s", cert.k));
    }
    if !sum_interval_identity_holds(cert, g.size()) {
        return Err("sums are not the interval [k - (p + q), k - (p + 1)]".into());
    }
    Ok(())
}

pub fn strength_of_numbering(g: &Graph, f: &Numbering) -> Result<u32, LabelingError> {
    check_len(g, f.0.len())?;
    g.edges().iter().map(|&(u, v)| f.0[u] + f.0[v]).max().ok_or(LabelingError::Edgeless)
}

/// True iff the induced differences `|f(u) - f(v)|` are exactly `{1, ..., q}`.
pub fn verify_graceful(g: &Graph, f: &GracefulLabeling) -> Result<bool, LabelingError> {
    check_len(g, f.values.len())?;
    let q = g.size();
    check_range(f.values.iter().map(|&v| v as i64), 0, q as i64)?;
    if first_duplicate(f.values.iter().map(|&v| v as i64)).is_some() {
        return Ok(false);
    }
    let mut seen = vec![false; q + 1];
    for &(u, v) in g.edges() {
        let d = f.values[u].abs_diff(f.values[v]) as usize;
        if d == 0 || seen[d] {
            return Ok(false);
        }
        seen[d] = true;
    }
    Ok(true)
}

/// Smallest λ with `min(f(u), f(v)) <= λ < max(f(u), f(v))` on every edge,
/// or `None` if the edge intervals do not intersect.
pub fn verify_alpha(g: &Graph, f: &GracefulLabeling) -> Result<Option<u32>, LabelingError> {
    if !verify_graceful(g, f)? {
        return Err(LabelingError::NotGraceful);
    }
    let mut lo = 0u32;
    let mut hi = u32::MAX;
    for &(u, v) in g.edges() {
        let (a, b) = (f.values[u].min(f.values[v]), f.values[u].max(f.values[v]));
        lo = lo.max(a);
        hi = hi.min(b - 1);
    }
    Ok((lo <= hi).then_some(lo))
}

fn check_modular(g: &Graph, f: &ModularLabeling, max_value: i64) -> Result<(), LabelingError> {
    check_len(g, f.values.len())?;
    if g.size() == 0 {
        return Err(LabelingError::Edgeless);
    }
    check_range(f.values.iter().map(|&v| v as i64), 0, max_value)?;
    let distinct: BTreeSet<u32> = f.values.iter().copied().collect();
    let repeats = f.values.len() - distinct.len();
    if repeats > f.repeat_allowance as usize {
        return Err(LabelingError::RepeatAllowanceViolated { repeats, allowance: f.repeat_allowance });
    }
    Ok(())
}

/// True iff the `q` edge sums are pairwise distinct modulo `q`.
pub fn verify_harmonious(g: &Graph, f: &ModularLabeling) -> Result<bool, LabelingError> {
    let expected = u8::from(g.is_tree());
    if f.repeat_allowance != expected {
        return Err(LabelingError::WrongAllowance { expected, found: f.repeat_allowance });
    }
    let q = g.size();
    check_modular(g, f, q as i64 - 1)?;
    let mut seen = vec![false; q];
    for &(u, v) in g.edges() {
        let r = (f.values[u] + f.values[v]) as usize % q;
        if std::mem::replace(&mut seen[r], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest label a sequential labeling may use: `q` for trees, `q - 1`
/// otherwise.
pub fn sequential_max_label(g: &Graph) -> i64 {
    g.size() as i64 - i64::from(!g.is_tree())
}

/// True iff `f` is injective and the integer edge sums form `q`
/// consecutive values.
pub fn verify_sequential(g: &Graph, f: &ModularLabeling) -> Result<bool, LabelingError> {
    if f.repeat_allowance != 0 {
        return Err(LabelingError::WrongAllowance { expected: 0, found: f.repeat_allowance });
    }
    check_modular(g, f, sequential_max_label(g))?;
    let sums: Vec<i64> = g.edges().iter().map(|&(u, v)| (f.values[u] + f.values[v]) as i64).collect();
    Ok(first_duplicate(sums.iter().copied()).is_none() && gap(&sums)? == 0)
}
