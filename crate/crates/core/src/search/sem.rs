use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::labeling::{verify_sem, ModularLabeling, SemCertificate, VertexLabeling};
use crate::search::budget::{Meter, SearchBudget, SearchError};
use crate::search::consecutive::find_consecutive_labeling;
use crate::sidon::{certify_infinite_deficiency, InfinityCertificate};

/// Outcome of a deficiency computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DeficiencyResult {
    /// `value` is the exact deficiency; every smaller count was refuted.
    Finite { value: u32, witness: SemCertificate },
    Infinite { certificate: InfinityCertificate },
    /// Nothing found with at most `searched_cap` isolated vertices. The
    /// deficiency is at least `lower_bound` (possibly infinite).
    Unknown { searched_cap: u32, lower_bound: u32, budget_exhausted: bool },
}

impl DeficiencyResult {
    pub fn finite_value(&self) -> Option<u32> {
        match self {
            DeficiencyResult::Finite { value, .. } => Some(*value),
            _ => None,
        }
    }
}

/// Injective labeling of `g` into `[1, max_label]` with `q` distinct
/// consecutive edge sums, or `None` when no such labeling exists.
pub fn find_sem_labeling(g: &Graph, max_label: u32, budget: SearchBudget) -> Result<Option<VertexLabeling>, SearchError> {
    find_sem_labeling_metered(g, max_label, &mut budget.meter())
}

fn find_sem_labeling_metered(g: &Graph, max_label: u32, meter: &mut Meter) -> Result<Option<VertexLabeling>, SearchError> {
    if (max_label as usize) < g.order() {
        return Err(SearchError::InvalidInput(format!(
            "max_label {max_label} is smaller than the order {}",
            g.order()
        )));
    }
    Ok(find_consecutive_labeling(g, 1, max_label, meter)?
        .map(|labels| VertexLabeling::new(labels).expect("search labels are positive and distinct")))
}

/// Exact super edge-magic deficiency, searching at most `cap` isolated
/// vertices after trying the clique certificate.
pub fn deficiency(g: &Graph, cap: u32, budget: SearchBudget) -> Result<DeficiencyResult, SearchError> {
    if let Some(certificate) = certify_infinite_deficiency(g) {
        return Ok(DeficiencyResult::Infinite { certificate });
    }
    deficiency_by_search(g, cap, budget)
}

/// Deficiency search without the certificate shortcut: tries
/// `max_label = p, p + 1, ..., p + cap`, leaving unused labels to isolates.
pub fn deficiency_by_search(g: &Graph, cap: u32, budget: SearchBudget) -> Result<DeficiencyResult, SearchError> {
    let p = g.order() as u32;
    let mut meter = budget.meter();
    for extra in 0..=cap {
        match find_sem_labeling_metered(g, p + extra, &mut meter) {
            Ok(Some(f)) => {
                let witness = verify_sem(g, &f, extra as usize).expect("search witnesses verify");
                return Ok(DeficiencyResult::Finite { value: extra, witness });
            }
            Ok(None) => {}
            Err(SearchError::BudgetExhausted { .. }) => {
                return Ok(DeficiencyResult::Unknown { searched_cap: cap, lower_bound: extra, budget_exhausted: true });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(DeficiencyResult::Unknown { searched_cap: cap, lower_bound: cap + 1, budget_exhausted: false })
}

/// Sequential labeling: injective into `[0, q - 1]` (`[0, q]` for trees)
/// with consecutive integer edge sums.
pub fn find_sequential(g: &Graph, budget: SearchBudget) -> Result<Option<ModularLabeling>, SearchError> {
    if g.size() == 0 {
        return Err(SearchError::InvalidInput("sequential labelings need at least one edge".into()));
    }
    let max = crate::labeling::sequential_max_label(g) as u32;
    let found = find_consecutive_labeling(g, 0, max, &mut budget.meter())?;
    Ok(found.map(|values| ModularLabeling { values, repeat_allowance: 0 }))
}

/// Upper bound `q - p + 1` on the deficiency of a graph without isolated
/// vertices that has an α-valuation.
pub fn deficiency_upper_via_alpha(g: &Graph, budget: SearchBudget) -> Result<Option<u32>, SearchError> {
    if g.has_isolated_vertex() {
        return Err(SearchError::InvalidInput("graph has isolated vertices".into()));
    }
    let found = crate::search::graceful::find_alpha_valuation(g, budget)?;
    // an α-valuation is injective into [0, q], so q + 1 >= p
    Ok(found.map(|_| (g.size() + 1 - g.order()) as u32))
}
