//! Eventual-periodicity detection for integer sequences.
//!
//! An order-2 recurrence is determined by any consecutive pair of terms, so
//! the first repeated state `(u_a, u_{a+1}) = (u_b, u_{b+1})` proves that
//! `u` is periodic from index `a` with period `b - a`. The candidate is then
//! minimized against the literal values, which keeps the result meaningful
//! for lists that do not come from a recurrence.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `values[n + period] = values[n]` for every `n > preperiod` with
/// `n + period ≤ detected_within` (1-based `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodInfo {
    pub preperiod: usize,
    pub period: usize,
    pub detected_within: usize,
}

/// Smallest `m` such that `values[n + p] = values[n]` for all 1-based
/// `n > m` inside the window.
fn min_preperiod(values: &[BigInt], p: usize) -> usize {
    let len = values.len();
    if p >= len {
        return len;
    }
    // Scan backwards from the last comparable index.
    (1..=len - p)
        .rev()
        .find(|&n| values[n - 1] != values[n - 1 + p])
        .unwrap_or(0)
}

/// Detects eventual periodicity of `u_1..u_N` (`N ≥ 4`).
///
/// `Ok(None)` means no repetition inside the window, not that the sequence
/// is aperiodic.
pub fn detect_period(values: &[BigInt]) -> Result<Option<PeriodInfo>> {
    let len = values.len();
    if len < 4 {
        return invalid(format!("period detection needs N >= 4, got {len}"));
    }
    let mut first_seen: HashMap<(&BigInt, &BigInt), usize> = HashMap::new();
    for b in 1..len {
        let state = (&values[b - 1], &values[b]);
        let Some(&a) = first_seen.get(&state) else {
            first_seen.insert(state, b);
            continue;
        };
        let candidate = b - a;
        let pre = a - 1;
        if min_preperiod(values, candidate) > pre {
            // Repeated state without a repeating tail: not a recurrence.
            continue;
        }
        let period = (1..=candidate)
            .find(|&p| min_preperiod(values, p) <= pre)
            .expect("the candidate itself qualifies");
        return Ok(Some(PeriodInfo {
            preperiod: min_preperiod(values, period),
            period,
            detected_within: len,
        }));
    }
    Ok(None)
}
