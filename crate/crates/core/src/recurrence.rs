//! Parameter and sequence types, exact generation, and the Lucas reference
//! evaluator.
//!
//! Indexing follows the two conventions the rest of the crate relies on:
//! a sequence `u` starts at `u_1 = 1`, while a Lucas sequence `U(P, Q)`
//! starts at `U_0 = 0`. [`SequencePrefix::u`] takes the 1-based index and
//! [`lucas_iter`] the 0-based one, so the two are never mixed.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// The triple `(P, Q, R)` defining `u_1 = 1`, `u_2 = R`,
/// `u_{n+2} = P u_{n+1} - Q u_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(rename = "P", with = "crate::decimal")]
    pub p: BigInt,
    #[serde(rename = "Q", with = "crate::decimal")]
    pub q: BigInt,
    #[serde(rename = "R", with = "crate::decimal")]
    pub r: BigInt,
}

impl Params {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>) -> Self {
        Params {
            p: p.into(),
            q: q.into(),
            r: r.into(),
        }
    }

    /// The Lucas parameters `(P, Q)` sharing this recurrence.
    pub fn lucas(&self) -> LucasParams {
        LucasParams {
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }

    /// `R - P`, the quantity measuring how far `u` is from `U(P, Q)`.
    pub fn offset(&self) -> BigInt {
        &self.r - &self.p
    }

    /// `Q = R(P - R)`: the sequence is `u_n = R^{n-1}` and `(P, Q)` cannot be
    /// recovered from its terms.
    pub fn is_geometric(&self) -> bool {
        self.q == &self.r * (&self.p - &self.r)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("(P={}, Q={}, R={})", self.p, self.q, self.r))
    }
}

/// The `(P, Q)` of the Lucas sequence `U(P, Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LucasParams {
    #[serde(rename = "P", with = "crate::decimal")]
    pub p: BigInt,
    #[serde(rename = "Q", with = "crate::decimal")]
    pub q: BigInt,
}

impl LucasParams {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        LucasParams {
            p: p.into(),
            q: q.into(),
        }
    }

    /// `P^2 - 4Q`.
    pub fn discriminant(&self) -> BigInt {
        &self.p * &self.p - BigInt::from(4) * &self.q
    }

    /// The triple with `R = P`, whose `u` coincides with `U` from index 1.
    pub fn as_params(&self) -> Params {
        Params::new(self.p.clone(), self.q.clone(), self.p.clone())
    }
}

impl fmt::Display for LucasParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U(P={}, Q={})", self.p, self.q)
    }
}

/// A materialized window `u_1..u_N` (N ≥ 2) with the parameters that produced it.
///
/// Construction goes through [`gen_sequence`] or deserialization; both
/// guarantee that the recurrence holds across the whole window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPrefix")]
pub struct SequencePrefix {
    params: Params,
    #[serde(with = "crate::decimal::vec")]
    values: Vec<BigInt>,
}

#[derive(Deserialize)]
struct RawPrefix {
    params: Params,
    #[serde(with = "crate::decimal::vec")]
    values: Vec<BigInt>,
}

impl TryFrom<RawPrefix> for SequencePrefix {
    type Error = Error;

    fn try_from(raw: RawPrefix) -> Result<Self> {
        let prefix = SequencePrefix {
            params: raw.params,
            values: raw.values,
        };
        if prefix.satisfies_invariants() {
            Ok(prefix)
        } else {
            invalid("values do not follow the recurrence of params")
        }
    }
}

impl SequencePrefix {
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// The terms `u_1..u_N`, stored at offsets `0..N`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigInt> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `u_n` for `1 ≤ n ≤ N`.
    ///
    /// Panics if `n` is 0 or past the window, like slice indexing.
    pub fn u(&self, n: usize) -> &BigInt {
        assert!(n >= 1, "u is indexed from 1");
        &self.values[n - 1]
    }

    /// Re-checks `u_1 = 1`, `u_2 = R` and the recurrence over the window.
    pub fn satisfies_invariants(&self) -> bool {
        let v = &self.values;
        if v.len() < 2 || !v[0].is_one() || v[1] != self.params.r {
            return false;
        }
        v.windows(3)
            .all(|w| w[2] == &self.params.p * &w[1] - &self.params.q * &w[0])
    }
}

/// A recurrence `u_{n+k} = a_1 u_{n+k-1} + ... + a_k u_n` of order `k ≥ 1`
/// with explicit initial terms `u_1..u_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawOrderK")]
pub struct OrderKRecurrence {
    #[serde(with = "crate::decimal::vec")]
    coeffs: Vec<BigInt>,
    #[serde(with = "crate::decimal::vec")]
    initial: Vec<BigInt>,
}

#[derive(Deserialize)]
struct RawOrderK {
    #[serde(with = "crate::decimal::vec")]
    coeffs: Vec<BigInt>,
    #[serde(with = "crate::decimal::vec")]
    initial: Vec<BigInt>,
}

impl TryFrom<RawOrderK> for OrderKRecurrence {
    type Error = Error;

    fn try_from(raw: RawOrderK) -> Result<Self> {
        OrderKRecurrence::new(raw.coeffs, raw.initial)
    }
}

impl OrderKRecurrence {
    /// `coeffs` is `a_1..a_k`, `initial` is `u_1..u_k`.
    pub fn new(coeffs: Vec<BigInt>, initial: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return invalid("order-k recurrence needs k >= 1");
        }
        if coeffs.len() != initial.len() {
            return invalid(format!(
                "order-k recurrence has {} coefficients but {} initial terms",
                coeffs.len(),
                initial.len()
            ));
        }
        Ok(OrderKRecurrence { coeffs, initial })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(coeffs: &[i64], initial: &[i64]) -> Result<Self> {
        Self::new(
            coeffs.iter().map(|&a| BigInt::from(a)).collect(),
            initial.iter().map(|&u| BigInt::from(u)).collect(),
        )
    }

    /// The order-2 recurrence of `params`: `a = (P, -Q)`, initial `(1, R)`.
    pub fn order2(params: &Params) -> Self {
        OrderKRecurrence {
            coeffs: vec![params.p.clone(), -&params.q],
            initial: vec![BigInt::one(), params.r.clone()],
        }
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    /// `a_k`, the coefficient of the oldest term.
    pub fn last_coeff(&self) -> &BigInt {
        &self.coeffs[self.coeffs.len() - 1]
    }

    /// Whether every window of `k + 1` consecutive entries of `values`
    /// satisfies the recurrence (the initial terms are not compared).
    pub fn is_solution(&self, values: &[BigInt]) -> bool {
        let k = self.k();
        values.windows(k + 1).all(|w| w[k] == self.step(&w[..k]))
    }

    /// Next term given the last `k` terms in index order.
    pub(crate) fn step(&self, window: &[BigInt]) -> BigInt {
        debug_assert_eq!(window.len(), self.k());
        // a_1 multiplies the newest term, a_k the oldest.
        self.coeffs
            .iter()
            .zip(window.iter().rev())
            .map(|(a, u)| a * u)
            .sum()
    }
}

/// `u_1..u_N` for the triple; exact, no overflow at any length.
pub fn gen_sequence(params: &Params, n: usize) -> Result<SequencePrefix> {
    if n < 2 {
        return invalid(format!("sequence prefix needs N >= 2, got {n}"));
    }
    let mut values = Vec::with_capacity(n);
    values.push(BigInt::one());
    values.push(params.r.clone());
    while values.len() < n {
        let len = values.len();
        let next = &params.p * &values[len - 1] - &params.q * &values[len - 2];
        values.push(next);
    }
    Ok(SequencePrefix {
        params: params.clone(),
        values,
    })
}

/// `u_1..u_N` of an order-k recurrence.
pub fn gen_order_k(rec: &OrderKRecurrence, n: usize) -> Result<Vec<BigInt>> {
    let k = rec.k();
    if n < k {
        return invalid(format!("order-{k} prefix needs N >= {k}, got {n}"));
    }
    let mut values = rec.initial.clone();
    values.reserve(n - k);
    while values.len() < n {
        let next = rec.step(&values[values.len() - k..]);
        values.push(next);
    }
    Ok(values)
}

/// The sequence equal to `t` at multiples of `s` and to 1 elsewhere, `n` terms.
pub fn make_pulse(s: usize, t: &BigInt, n: usize) -> Result<Vec<BigInt>> {
    if s == 0 {
        return invalid("pulse spacing s must be >= 1");
    }
    if n == 0 {
        return invalid("pulse length N must be >= 1");
    }
    Ok((1..=n)
        .map(|i| if i % s == 0 { t.clone() } else { BigInt::one() })
        .collect())
}

/// `U_0..U_n` by direct iteration.
pub fn lucas_prefix(lp: &LucasParams, n: usize) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(n + 1);
    values.push(BigInt::zero());
    if n >= 1 {
        values.push(BigInt::one());
    }
    while values.len() <= n {
        let len = values.len();
        let next = &lp.p * &values[len - 1] - &lp.q * &values[len - 2];
        values.push(next);
    }
    values
}

/// `U_n` by direct iteration. This is the reference the fast path is
/// checked against.
pub fn lucas_iter(lp: &LucasParams, n: u64) -> BigInt {
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &lp.p * &cur - &lp.q * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `u_n` rebuilt from the Lucas sequence: `U_n + (R - P) U_{n-1}`.
pub fn u_from_lucas(params: &Params, n: usize) -> Result<BigInt> {
    if n == 0 {
        return invalid("u is indexed from 1");
    }
    let lucas = lucas_prefix(&params.lucas(), n);
    Ok(&lucas[n] + params.offset() * &lucas[n - 1])
}

/// `n (P/2)^{n-1}` when `P^2 = 4Q`, otherwise `None`. At `n = 0` the value is 0.
pub fn closed_form_double_root(lp: &LucasParams, n: u64) -> Option<BigInt> {
    if !lp.discriminant().is_zero() {
        return None;
    }
    // P^2 = 4Q forces P even.
    debug_assert!(lp.p.is_even());
    if n == 0 {
        return Some(BigInt::zero());
    }
    let half = &lp.p / 2;
    Some(BigInt::from(n) * Pow::pow(&half, n - 1))
}

/// Outcome of solving for `(P, Q, R)` from `u_2, u_3, u_4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Recovered {
    Unique(Params),
    /// `u_3 = R^2` and `u_4 = R^3`: `u_n = R^{n-1}`, so only `R` is determined.
    Geometric(#[serde(with = "crate::decimal")] BigInt),
    /// No integer triple produces these terms.
    Inconsistent,
}

/// Solves `R = u_2`, `Q = PR - u_3`, `P (u_3 - R^2) = u_4 - R u_3`.
pub fn recover_params(u2: &BigInt, u3: &BigInt, u4: &BigInt) -> Recovered {
    let r = u2.clone();
    let denom = u3 - &r * &r;
    let numer = u4 - &r * u3;
    if denom.is_zero() {
        return if numer.is_zero() {
            // u_3 = R^2 and u_4 - R u_3 = 0 means u_4 = R^3.
            Recovered::Geometric(r)
        } else {
            Recovered::Inconsistent
        };
    }
    let (p, rem) = numer.div_rem(&denom);
    if !rem.is_zero() {
        return Recovered::Inconsistent;
    }
    let q = &p * &r - u3;
    Recovered::Unique(Params { p, q, r })
}
