//! Exact arithmetic for order-2 linear recurrences with strong divisibility.
//!
//! A sequence `u_1 = 1, u_2 = R, u_{n+2} = P u_{n+1} - Q u_n` is a *strong
//! divisibility sequence* when `gcd(u_i, u_j) = |u_{gcd(i, j)}|` for all
//! `i, j ≥ 1`. This crate generates such sequences exactly, checks
//! divisibility by brute force, evaluates the supporting identities and
//! criteria, classifies every triple `(P, Q, R)` in closed form, and sweeps
//! parameter boxes to cross-check the classification against the oracle.
//!
//! ```
//! use sdseq::{classify, gen_sequence, is_strong_divisible, Family, Params};
//!
//! let params = Params::new(-1, 1, 1);
//! let prefix = gen_sequence(&params, 12).unwrap();
//! assert!(is_strong_divisible(prefix.values()).holds);
//! assert!(classify(&params).contains(Family::PeriodSixFamily));
//! ```

pub mod classifier;
pub mod cli;
mod decimal;
pub mod divisibility;
mod error;
pub mod identities;
pub mod lucas_fast;
pub mod periodicity;
pub mod recurrence;
pub mod search;

pub use classifier::{classify, expected_period, Classification, EpsilonR, Family};
pub use divisibility::{
    bound_kimberling, bound_weak_order2, bound_weak_orderk, check_converse_div,
    check_coprime_chain, check_div_rp, check_r_divides_even, criterion_ind34, divides, gcd_nn,
    hall_transform, hs_criterion, is_strong_divisible, is_weak_divisible, DivisibilityKind,
    DivisibilityReport, HSCriterionReport, HsReason,
};
pub use error::{Error, Result};
pub use lucas_fast::{lucas_fast, lucas_gcd};
pub use periodicity::{detect_period, PeriodInfo};
pub use recurrence::{
    closed_form_double_root, gen_order_k, gen_sequence, lucas_iter, make_pulse, recover_params,
    u_from_lucas, LucasParams, OrderKRecurrence, Params, Recovered, SequencePrefix,
};
pub use search::{filter_hs, sweep, SearchBox, SearchReport, SearchStats, Survivor};

pub use num_bigint::BigInt;
