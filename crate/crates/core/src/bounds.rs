//! Closed-form bounds: the constructive lower bound on l(n), a
//! certificate-driven upper bound, the j(α) threshold, and prism rows.
//!
//! l(n) is the least size such that every graph of order `n` with at least
//! that many edges has infinite super edge-magic deficiency.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::enumerate_k_minus;
use crate::graph::build_complete;
use crate::sidon::certify_infinite_deficiency;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("alpha must be at least 1")]
    ZeroAlpha,
    #[error("prism order must be even and at least 4, got {0}")]
    BadPrismOrder(usize),
}

fn choose2(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

/// `⌈n/2⌉(⌊n/2⌋ + 1) + 1`. The witness graph one edge short of this is
/// [`crate::graph::build_lower_bound_witness`].
pub fn l_lower_bound(n: usize) -> Result<u64, BoundsError> {
    if n < 4 {
        return Err(BoundsError::OrderTooSmall { n, min: 4 });
    }
    let (c, f) = (n.div_ceil(2) as u64, (n / 2) as u64);
    Ok(c * (f + 1) + 1)
}

/// Bracket on l(n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LnBracket {
    pub n: usize,
    pub lower: u64,
    /// `C(n,2) - upper_alpha`, present when at least `K_n` is certified
    pub upper: Option<u64>,
    pub upper_alpha: Option<usize>,
    /// the search stopped at the alpha cap or where enumeration is unavailable
    pub partial: bool,
    /// upper bound claimed in the literature without a certificate check
    pub published_upper: Option<u64>,
    pub provenance: String,
}

/// Least `n` with `n > ((8α+9) + sqrt(48α² + 56α − 31)) / 2`.
pub fn j_threshold(alpha: u64) -> Result<u64, BoundsError> {
    if alpha == 0 {
        return Err(BoundsError::ZeroAlpha);
    }
    let b = 8 * alpha + 9;
    let d = 48 * alpha * alpha + 56 * alpha - 31;
    // 2n - b > sqrt(d), in integers
    let mut n = b / 2 + 1;
    while !(2 * n > b && (2 * n - b) * (2 * n - b) > d) {
        n += 1;
    }
    Ok(n)
}

/// Largest alpha the literature asserts for order `n`: 1 from order 7, and
/// every alpha with `j_threshold(alpha) <= n`.
fn published_alpha(n: usize) -> Option<u64> {
    let mut best = (n >= 7).then_some(1);
    let mut alpha = 1;
    while j_threshold(alpha).expect("alpha >= 1") <= n as u64 {
        best = Some(alpha);
        alpha += 1;
    }
    best
}

/// Certificate-driven upper bound: the largest `alpha <= max_alpha` such that
/// every graph `K_n` minus `beta` edges, `beta <= alpha`, carries an infinity
/// certificate. Then every graph with at least `C(n,2) - alpha` edges has
/// infinite deficiency.
pub fn l_upper_bound(n: usize, max_alpha: usize) -> Result<LnBracket, BoundsError> {
    let lower = l_lower_bound(n)?;
    let kn = build_complete(n).map_err(|_| BoundsError::OrderTooSmall { n, min: 4 })?;
    let mut certified: Option<usize> = None;
    let mut partial = false;
    let mut reason = String::new();
    if certify_infinite_deficiency(&kn).is_some() {
        certified = Some(0);
        for beta in 1.. {
            if beta > max_alpha {
                partial = true;
                reason = format!("stopped at alpha cap {max_alpha}");
                break;
            }
            let Ok(graphs) = enumerate_k_minus(n, beta) else {
                partial = true;
                reason = format!("no enumeration of K_{n} minus {beta} edges");
                break;
            };
            if let Some(g) = graphs.iter().find(|g| certify_infinite_deficiency(g).is_none()) {
                reason = format!("uncertified at beta {beta}: {}", crate::graph6::emit_graph6(g).unwrap_or_default());
                break;
            }
            certified = Some(beta);
        }
    } else {
        reason = format!("K_{n} is not certified");
    }
    let published_upper = published_alpha(n).map(|a| choose2(n) - a);
    Ok(LnBracket {
        n,
        lower,
        upper: certified.map(|a| choose2(n) - a as u64),
        upper_alpha: certified,
        partial,
        published_upper,
        provenance: format!("lower: construction; upper: clique certificates ({reason})"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismBoundRow {
    pub n: usize,
    pub lower: u64,
    pub upper: u64,
    pub old_upper: Option<u64>,
    pub exact: Option<u64>,
    pub status: String,
}

/// Deficiency bounds for the prism `D_n = C_n x K_2`. Odd prisms are super
/// edge-magic, reported as exact 0. `exact` injects a value found by search;
/// `D_4` (the 3-cube) is known to be 5.
pub fn prism_bounds(n: usize, exact: Option<u64>) -> Result<PrismBoundRow, BoundsError> {
    if n < 3 || (n.is_multiple_of(2) && n < 4) {
        return Err(BoundsError::BadPrismOrder(n));
    }
    if n % 2 == 1 {
        return Ok(PrismBoundRow { n, lower: 0, upper: 0, old_upper: None, exact: Some(0), status: "exact".into() });
    }
    let n64 = n as u64;
    let exact = exact.or((n == 4).then_some(5));
    Ok(PrismBoundRow {
        n,
        lower: 1,
        upper: n64 + 1,
        old_upper: n.is_multiple_of(4).then(|| 3 * n64 / 2 - 1),
        exact,
        status: if exact.is_some() { "exact" } else { "open" }.into(),
    })
}
