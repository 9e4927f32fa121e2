use rayon::prelude::*;
use serde::Serialize;

use semlab::enumerate::{enumerate_trees, is_caterpillar};
use semlab::search::{deficiency_by_search, DeficiencyResult, find_harmonious, find_sequential, strength, SearchBudget, SearchError};
use semlab::{emit_graph6, Graph};

use crate::exit::Status;

/// Largest order the survey will enumerate.
pub const MAX_SURVEY_ORDER: usize = 16;

#[derive(Debug, Serialize)]
pub struct SurveyRow {
    pub tree_id: usize,
    pub order: usize,
    pub graph6: String,
    pub is_caterpillar: bool,
    pub sem: String,
    pub strength: Option<u32>,
    pub strength_matches: Tristate,
    pub harmonious: Tristate,
    pub sequential: Tristate,
    pub conjecture3_slack: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tristate {
    True,
    False,
    Unknown,
}

fn tristate<T>(r: Result<Option<T>, SearchError>) -> Tristate {
    match r {
        Ok(Some(_)) => Tristate::True,
        Ok(None) => Tristate::False,
        Err(_) => Tristate::Unknown,
    }
}

fn survey_tree(tree_id: usize, t: &Graph, budget: SearchBudget) -> SurveyRow {
    let n = t.order();
    let sem = match deficiency_by_search(t, 0, budget) {
        Ok(DeficiencyResult::Finite { .. }) => "finite(0)",
        Ok(DeficiencyResult::Unknown { budget_exhausted: false, .. }) => "unknown(cap 0)",
        _ => "unknown(budget)",
    }
    .to_string();
    let strength = strength(t, budget).ok();
    SurveyRow {
        tree_id,
        order: n,
        graph6: emit_graph6(t).expect("survey orders fit graph6"),
        is_caterpillar: is_caterpillar(t).expect("enumerated graphs are trees"),
        sem,
        strength,
        strength_matches: match strength {
            Some(s) if s as usize == n + 1 => Tristate::True,
            Some(_) => Tristate::False,
            None => Tristate::Unknown,
        },
        harmonious: tristate(find_harmonious(t, budget)),
        sequential: tristate(find_sequential(t, budget)),
        conjecture3_slack: strength.map(|s| s as i64 - (n as i64 + 1)),
    }
}

/// One row per nontrivial tree of order at most `max_n`, ordered by order and
/// then canonical form regardless of which worker finishes first.
pub fn survey(max_n: usize, budget: SearchBudget) -> Vec<SurveyRow> {
    let trees: Vec<Graph> = (2..=max_n).flat_map(enumerate_trees).collect();
    trees.par_iter().enumerate().map(|(i, t)| survey_tree(i, t, budget)).collect()
}

/// Summary line and exit status. Open conjectures are never reported as
/// simply true.
pub fn summarize(rows: &[SurveyRow], max_n: usize) -> (String, Status) {
    let expected = |r: &SurveyRow| {
        [r.strength_matches, r.harmonious, r.sequential].iter().all(|&s| s == Tristate::True) && r.sem == "finite(0)"
    };
    let refuted = rows.iter().filter(|r| {
        [r.strength_matches, r.harmonious, r.sequential].contains(&Tristate::False) || r.sem == "unknown(cap 0)"
    });
    let refuted = refuted.count();
    let unknown = rows.iter().filter(|r| !expected(r)).count() - refuted;
    if rows.is_empty() {
        return (format!("no nontrivial trees of order at most {max_n}"), Status::Success);
    }
    if refuted > 0 {
        (format!("{refuted} of {} trees violate an expectation (see rows)", rows.len()), Status::Negative)
    } else if unknown > 0 {
        (format!("{unknown} of {} trees undecided within the budget", rows.len()), Status::Unknown)
    } else {
        (
            format!(
                "verified for all enumerated instances: {} trees of order 2..{max_n} are super edge-magic, \
                 harmonious and sequential with strength n + 1",
                rows.len()
            ),
            Status::Success,
        )
    }
}
