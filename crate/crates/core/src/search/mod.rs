//! Exact search engines. Every engine distinguishes "no such labeling
//! exists" (`Ok(None)` or a proven result) from budget exhaustion
//! (`Err(SearchError::BudgetExhausted)`).

mod budget;
mod consecutive;
pub mod graceful;
mod harmonious;
mod sem;
mod strength;

pub use budget::{Meter, SearchBudget, SearchError};
pub use graceful::{find_alpha_valuation, find_graceful};
pub use harmonious::find_harmonious;
pub use sem::{
    deficiency, deficiency_by_search, deficiency_upper_via_alpha, find_sem_labeling, find_sequential, DeficiencyResult,
};
pub use strength::{strength, strength_with_numbering};
