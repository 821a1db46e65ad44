//! Brute-force divisibility oracles and the divisibility criteria and bounds
//! satisfied by order-2 (and order-k) recurrences.
//!
//! Divisibility follows the integer convention: `a | b` iff `b = a c` for some
//! integer `c`, so `0 | 0` holds and `0 | b` fails for `b ≠ 0`. gcds are
//! always nonnegative and `gcd(0, 0) = 0`.
//!
//! Checks that are theorems under their hypotheses (`check_*`, `bound_*`)
//! return `Ok(bool)` so a harness can count violations instead of aborting;
//! calling them outside their hypotheses is an [`Error::InvalidArgument`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::recurrence::{gen_order_k, gen_sequence, OrderKRecurrence, Params};

/// Nonnegative gcd; `gcd_nn(0, 0) = 0`.
pub fn gcd_nn(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// `a | b` over the integers.
pub fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        b.is_multiple_of(a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DivisibilityKind {
    Strong,
    Weak,
}

/// Verdict of a brute-force divisibility test over `u_1..u_N`.
///
/// `witness` is the lexicographically smallest failing `(i, j)`, `i ≤ j ≤ N`,
/// and is present exactly when `holds` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub kind: DivisibilityKind,
    pub bound: usize,
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

impl DivisibilityReport {
    fn new(kind: DivisibilityKind, bound: usize, witness: Option<(usize, usize)>) -> Self {
        DivisibilityReport {
            kind,
            bound,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Checks `gcd(u_i, u_j) = |u_{gcd(i, j)}|` for all `1 ≤ i ≤ j ≤ N`, where
/// `values[n - 1] = u_n`. Stops at the first failure.
pub fn is_strong_divisible(values: &[BigInt]) -> DivisibilityReport {
    let n = values.len();
    let abs: Vec<BigInt> = values.iter().map(Signed::abs).collect();
    for i in 1..=n {
        for j in i..=n {
            let g = i.gcd(&j);
            if abs[i - 1].gcd(&abs[j - 1]) != abs[g - 1] {
                return DivisibilityReport::new(DivisibilityKind::Strong, n, Some((i, j)));
            }
        }
    }
    DivisibilityReport::new(DivisibilityKind::Strong, n, None)
}

/// Checks `u_i | u_j` whenever `i | j`, `1 ≤ i ≤ j ≤ N`.
pub fn is_weak_divisible(values: &[BigInt]) -> DivisibilityReport {
    let n = values.len();
    for i in 1..=n {
        for j in (i..=n).step_by(i) {
            if !divides(&values[i - 1], &values[j - 1]) {
                return DivisibilityReport::new(DivisibilityKind::Weak, n, Some((i, j)));
            }
        }
    }
    DivisibilityReport::new(DivisibilityKind::Weak, n, None)
}

fn terms(params: &Params, n: usize) -> Vec<BigInt> {
    gen_sequence(params, n.max(2))
        .expect("length is at least 2")
        .into_values()
}

/// `u_3 = PR - Q` and `u_4 = P u_3 - QR`.
fn u3_u4(params: &Params) -> (BigInt, BigInt) {
    let u3 = &params.p * &params.r - &params.q;
    let u4 = &params.p * &u3 - &params.q * &params.r;
    (u3, u4)
}

/// `gcd(P, Q) = 1` and `gcd(R, Q) = 1`.
pub fn ind34_hypotheses(params: &Params) -> bool {
    params.p.gcd(&params.q).is_one() && params.r.gcd(&params.q).is_one()
}

fn require_ind34(params: &Params) -> Result<()> {
    if ind34_hypotheses(params) {
        Ok(())
    } else {
        invalid(format!("{params} needs gcd(P, Q) = gcd(R, Q) = 1"))
    }
}

fn require_positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        invalid(format!("{name} must be >= 1"))
    } else {
        Ok(())
    }
}

/// `gcd(u_3, u_4) = 1`, which is equivalent to [`ind34_hypotheses`].
pub fn criterion_ind34(params: &Params) -> bool {
    let (u3, u4) = u3_u4(params);
    let holds = u3.gcd(&u4).is_one();
    debug_assert_eq!(holds, ind34_hypotheses(params), "{params}");
    holds
}

/// `gcd(u_n, Q) = 1` and `gcd(u_n, u_{n+1}) = 1` for every `n ≤ N`.
pub fn check_coprime_chain(params: &Params, n: usize) -> Result<bool> {
    require_ind34(params)?;
    require_positive("N", n)?;
    let u = terms(params, n + 1);
    Ok((0..n).all(|i| u[i].gcd(&params.q).is_one() && u[i].gcd(&u[i + 1]).is_one()))
}

/// The implication `u_n | u_{2n} ⟹ u_n | R - P`.
pub fn check_div_rp(params: &Params, n: usize) -> Result<bool> {
    require_ind34(params)?;
    require_positive("n", n)?;
    let u = terms(params, 2 * n);
    let (un, u2n) = (&u[n - 1], &u[2 * n - 1]);
    Ok(!divides(un, u2n) || divides(un, &params.offset()))
}

/// If `u_n | R - P`, checks `u_n | u_{kn}` for all `k ≤ kmax`; vacuously true
/// otherwise.
pub fn check_converse_div(params: &Params, n: usize, kmax: usize) -> Result<bool> {
    require_positive("n", n)?;
    require_positive("kmax", kmax)?;
    let u = terms(params, n * kmax);
    let un = &u[n - 1];
    if !divides(un, &params.offset()) {
        return Ok(true);
    }
    Ok((1..=kmax).all(|k| divides(un, &u[k * n - 1])))
}

/// `R | u_{2k}` for all `k ≤ kmax`, given `R | P`.
pub fn check_r_divides_even(params: &Params, kmax: usize) -> Result<bool> {
    if !divides(&params.r, &params.p) {
        return invalid(format!("{params} needs R | P"));
    }
    require_positive("kmax", kmax)?;
    let u = terms(params, 2 * kmax);
    Ok((1..=kmax).all(|k| divides(&params.r, &u[2 * k - 1])))
}

/// The gate at which [`hs_criterion`] stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HsReason {
    /// `R = 0`.
    RZero,
    /// `gcd(u_3, u_4) ≠ 1`.
    Ind34,
    /// `u_2 ∤ u_4`.
    U2U4,
    /// `u_3 ∤ u_6`.
    U3U6,
    /// `u_5 ∤ u_10`.
    U5U10,
    Passed,
}

/// Evaluation of the index-10 criterion: gates `R ≠ 0`, `gcd(u_3, u_4) = 1`,
/// `u_2 | u_4`, `u_3 | u_6`, `u_5 | u_10`, in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSCriterionReport {
    /// `P / R` when `R ≠ 0` and `R | P`.
    #[serde(with = "crate::decimal::option")]
    pub f: Option<BigInt>,
    /// `Q - R(P - R)`, equal to `R^2 - u_3`.
    #[serde(with = "crate::decimal")]
    pub k: BigInt,
    #[serde(with = "crate::decimal")]
    pub u3: BigInt,
    #[serde(with = "crate::decimal")]
    pub u4: BigInt,
    #[serde(with = "crate::decimal")]
    pub u5: BigInt,
    pub passed: bool,
    pub reason: HsReason,
    /// When passed: `u_3 | f - 1` and `u_5 | f - 1`. Always true by the
    /// theorem; carried so harnesses can count rather than abort.
    pub divides_f_minus_one: Option<bool>,
}

impl HSCriterionReport {
    /// Empirical check that the product `u_3 u_5` divides `f - 1`. Stated
    /// without proof; `None` unless the criterion passed.
    pub fn product_divides_f_minus_one(&self) -> Option<bool> {
        let f = self.f.as_ref().filter(|_| self.passed)?;
        Some(divides(&(&self.u3 * &self.u5), &(f - 1)))
    }
}

pub fn hs_criterion(params: &Params) -> HSCriterionReport {
    let u = terms(params, 10);
    let at = |n: usize| &u[n - 1];
    let (p, q, r) = (&params.p, &params.q, &params.r);
    let (u3, u4, u5) = (at(3).clone(), at(4).clone(), at(5).clone());

    let k = q - r * (p - r);
    debug_assert_eq!(k, r * r - &u3);
    debug_assert_eq!(u5, &u3 * &u3 - &k * p * p);

    let f = (!r.is_zero() && divides(r, p)).then(|| p / r);

    let reason = if r.is_zero() {
        HsReason::RZero
    } else if !criterion_ind34(params) {
        HsReason::Ind34
    } else if !divides(at(2), at(4)) {
        HsReason::U2U4
    } else if !divides(at(3), at(6)) {
        HsReason::U3U6
    } else if !divides(at(5), at(10)) {
        HsReason::U5U10
    } else {
        HsReason::Passed
    };
    let passed = reason == HsReason::Passed;

    let divides_f_minus_one = if passed {
        // R | P follows from the first three gates.
        let f_minus_one = f.as_ref().map(|f| f - 1);
        Some(f_minus_one.is_some_and(|d| divides(&u3, &d) && divides(&u5, &d)))
    } else {
        None
    };

    HSCriterionReport {
        f,
        k,
        u3,
        u4,
        u5,
        passed,
        reason,
        divides_f_minus_one,
    }
}

/// Empirical check of the stronger claim `u_3 (u_4 / R) u_5 | f - 1` when the
/// criterion passes and additionally `u_4 | u_8`. Not proved; `None` when the
/// hypotheses are not met.
pub fn hs_extended_product_check(params: &Params) -> Option<bool> {
    let report = hs_criterion(params);
    let f = report.f.as_ref().filter(|_| report.passed)?;
    let u = terms(params, 8);
    if !divides(&u[3], &u[7]) {
        return None;
    }
    let product = &report.u3 * (&report.u4 / &params.r) * &report.u5;
    Some(divides(&product, &(f - 1)))
}

/// `u_n | Q^{n-1} (R - P)` for all `n ≤ N`, given that `u_1..u_{2N}` is a
/// weak divisibility sequence.
pub fn bound_weak_order2(params: &Params, n: usize) -> Result<bool> {
    require_positive("N", n)?;
    let u = terms(params, 2 * n);
    if let Some((i, j)) = is_weak_divisible(&u).witness {
        return invalid(format!(
            "{params} is not weakly divisible: u_{i} does not divide u_{j}"
        ));
    }
    let offset = params.offset();
    let mut q_power = BigInt::one();
    for un in &u[..n] {
        if !divides(un, &(&q_power * &offset)) {
            return Ok(false);
        }
        q_power *= &params.q;
    }
    Ok(true)
}

fn require_nonzero_last(rec: &OrderKRecurrence) -> Result<()> {
    if rec.last_coeff().is_zero() {
        invalid("a_k = 0 is excluded")
    } else {
        Ok(())
    }
}

fn require_weak_prefix(rec: &OrderKRecurrence, n: usize) -> Result<Vec<BigInt>> {
    let u = gen_order_k(rec, n.max(rec.k()))?;
    if let Some((i, j)) = is_weak_divisible(&u[..n]).witness {
        return invalid(format!(
            "order-{} prefix is not weakly divisible: u_{i} does not divide u_{j}",
            rec.k()
        ));
    }
    Ok(u)
}

/// `d = u_k - (a_1 u_{k-1} + ... + a_{k-1} u_1)`, the value the transformed
/// sequence takes at index 0.
pub fn hall_offset(rec: &OrderKRecurrence) -> BigInt {
    let k = rec.k();
    let (a, u) = (rec.coeffs(), rec.initial());
    let sum: BigInt = (1..k).map(|i| &a[i - 1] * &u[k - i - 1]).sum();
    &u[k - 1] - sum
}

/// `u_n | a_k^{n-1} d` for all `n ≤ N`, given a weakly divisible prefix of
/// length `N ≥ 2k` and `a_k ≠ 0`.
pub fn bound_weak_orderk(rec: &OrderKRecurrence, n: usize) -> Result<bool> {
    require_nonzero_last(rec)?;
    if n < 2 * rec.k() {
        return invalid(format!("N = {n} must be at least 2k = {}", 2 * rec.k()));
    }
    let u = require_weak_prefix(rec, n)?;
    let d = hall_offset(rec);
    let a_k = rec.last_coeff();
    let mut power = BigInt::one();
    for un in &u[..n] {
        if !divides(un, &(&power * &d)) {
            return Ok(false);
        }
        power *= a_k;
    }
    Ok(true)
}

/// `v_0..v_N` with `v_0 = d` and `v_n = a_k u_n`; it follows the same
/// order-k recurrence from index 0.
pub fn hall_transform(rec: &OrderKRecurrence, n: usize) -> Result<Vec<BigInt>> {
    require_nonzero_last(rec)?;
    let a_k = rec.last_coeff();
    let mut v = Vec::with_capacity(n + 1);
    v.push(hall_offset(rec));
    if n > 0 {
        let u = gen_order_k(rec, n.max(rec.k()))?;
        v.extend(u[..n].iter().map(|un| a_k * un));
    }
    debug_assert!(rec.is_solution(&v));
    Ok(v)
}

/// `v_n | a_k^n v_0` for `1 ≤ n ≤ N` on the transformed sequence, given a
/// weakly divisible `u_1..u_N` and `a_k ≠ 0`.
pub fn bound_kimberling(rec: &OrderKRecurrence, n: usize) -> Result<bool> {
    require_nonzero_last(rec)?;
    require_positive("N", n)?;
    require_weak_prefix(rec, n)?;
    let v = hall_transform(rec, n)?;
    let a_k = rec.last_coeff();
    Ok((1..=n).all(|i| divides(&v[i], &(Pow::pow(a_k, i as u64) * &v[0]))))
}
