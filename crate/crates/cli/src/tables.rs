use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Serialize;

use semlab::bounds::{l_upper_bound, prism_bounds, PrismBoundRow};
use semlab::search::{SearchBudget, SearchError};
use semlab::sidon::{kotzig_lower_bound, rho_star_with_witness};

use crate::exit::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    LBounds,
    Prism,
    RhoStar,
}

impl Table {
    pub fn default_range(self) -> (usize, usize) {
        match self {
            Table::LBounds => (4, 8),
            Table::Prism => (4, 12),
            Table::RhoStar => (2, 9),
        }
    }
}

#[derive(Serialize)]
struct PrismCsvRow {
    n: usize,
    lower: u64,
    upper: u64,
    old_upper: Option<u64>,
    exact: Option<u64>,
    status: String,
    provenance: &'static str,
}

#[derive(Serialize)]
struct RhoRow {
    n: usize,
    rho_star: u32,
    kotzig: Option<u32>,
    witness: String,
    provenance: &'static str,
}

#[derive(Serialize)]
struct LRow {
    n: usize,
    lower: u64,
    upper: Option<u64>,
    upper_alpha: Option<usize>,
    partial: bool,
    published_upper: Option<u64>,
    provenance: String,
}

fn to_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Failure::usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub struct TableRequest {
    pub what: Table,
    pub from: usize,
    pub to: usize,
    pub max_alpha: usize,
    pub exact: BTreeMap<usize, u64>,
    pub budget: SearchBudget,
}

pub fn render(req: &TableRequest) -> Result<String, Failure> {
    let range = req.from..=req.to;
    match req.what {
        Table::Prism => {
            let rows = range
                .filter(|n| n % 2 == 0)
                .map(|n| {
                    let row = prism_bounds(n, req.exact.get(&n).copied()).map_err(|e| Failure::usage(e.to_string()))?;
                    let provenance = if row.exact.is_some() && !req.exact.contains_key(&n) {
                        "bounds: closed form; exact: known value"
                    } else if row.exact.is_some() {
                        "bounds: closed form; exact: injected search result"
                    } else {
                        "bounds: closed form"
                    };
                    let PrismBoundRow { n, lower, upper, old_upper, exact, status } = row;
                    Ok(PrismCsvRow { n, lower, upper, old_upper, exact, status, provenance })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            to_csv(rows)
        }
        Table::RhoStar => {
            let rows = range
                .map(|n| {
                    let (rho_star, set) = rho_star_with_witness(n, req.budget).map_err(|e| match e {
                        SearchError::BudgetExhausted { .. } => Failure {
                            status: crate::exit::Status::Unknown,
                            message: format!("rho*({n}): {e}"),
                        },
                        SearchError::InvalidInput(m) => Failure::usage(m),
                    })?;
                    let witness = set.elements().iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                    Ok(RhoRow {
                        n,
                        rho_star,
                        kotzig: kotzig_lower_bound(n).ok(),
                        witness,
                        provenance: "exact: exhaustive search; kotzig: closed form",
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            to_csv(rows)
        }
        Table::LBounds => {
            let rows = range
                .map(|n| {
                    let b = l_upper_bound(n, req.max_alpha).map_err(|e| Failure::usage(e.to_string()))?;
                    Ok(LRow {
                        n: b.n,
                        lower: b.lower,
                        upper: b.upper,
                        upper_alpha: b.upper_alpha,
                        partial: b.partial,
                        published_upper: b.published_upper,
                        provenance: b.provenance,
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            to_csv(rows)
        }
    }
}
