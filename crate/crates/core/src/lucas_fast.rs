//! Logarithmic-time Lucas evaluation and gcd-by-index.
//!
//! The doubling step comes from the addition formula
//! `u_{m+n} = U_m u_{n+1} - Q U_{m-1} u_n`, applied to `u = U` itself
//! (the triple with `R = P`, for which `u_n = U_n` when `n ≥ 1`):
//!
//! * `m = n + 1`: `U_{2n+1} = U_{n+1}^2 - Q U_n^2`.
//! * `m = n`: `U_{2n} = U_n (U_{n+1} - Q U_{n-1})`. The recurrence gives
//!   `Q U_{n-1} = P U_n - U_{n+1}`, so `U_{2n} = U_n (2 U_{n+1} - P U_n)`,
//!   which avoids `U_{n-1}` and any division by `Q`.
//!
//! Both also hold at `n = 0` with `(U_0, U_1) = (0, 1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::recurrence::LucasParams;

/// `(U_{2n}, U_{2n+1})` from `(U_n, U_{n+1})`.
pub fn double(lp: &LucasParams, un: &BigInt, un1: &BigInt) -> (BigInt, BigInt) {
    let even = un * (BigInt::from(2) * un1 - &lp.p * un);
    let odd = un1 * un1 - &lp.q * (un * un);
    (even, odd)
}

/// `(U_n, U_{n+1})` with O(log n) big-integer multiplications.
pub fn lucas_fast(lp: &LucasParams, n: u64) -> (BigInt, BigInt) {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    if n == 0 {
        return (a, b);
    }
    let bits = 64 - n.leading_zeros();
    for bit in (0..bits).rev() {
        let (even, odd) = double(lp, &a, &b);
        if (n >> bit) & 1 == 1 {
            let next = &lp.p * &odd - &lp.q * &even;
            a = odd;
            b = next;
        } else {
            a = even;
            b = odd;
        }
    }
    (a, b)
}

fn require_coprime(lp: &LucasParams) -> Result<()> {
    if lp.p.gcd(&lp.q).is_one() {
        Ok(())
    } else {
        Err(Error::PreconditionViolation(format!(
            "gcd(P, Q) = {} for {lp}; gcd by index needs coprime P and Q",
            lp.p.gcd(&lp.q)
        )))
    }
}

fn require_positive(i: u64, j: u64) -> Result<()> {
    if i == 0 || j == 0 {
        Err(Error::InvalidArgument(
            "Lucas gcd indices must be >= 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// `gcd(U_i, U_j) = |U_{gcd(i, j)}|` for coprime `(P, Q)`.
pub fn lucas_gcd(lp: &LucasParams, i: u64, j: u64) -> Result<BigInt> {
    require_coprime(lp)?;
    require_positive(i, j)?;
    Ok(lucas_fast(lp, i.gcd(&j)).0.abs())
}

/// Same result as [`lucas_gcd`], obtained by walking the Euclidean descent
/// on indices and checking at every step that `gcd(U_a, U_b)` is unchanged.
///
/// One step replaces `(a, b)` by `(b, a mod b)`, i.e. `⌊a/b⌋` applications of
/// `gcd(U_{m+n}, U_n) = gcd(U_m, U_n)`. Panics if a step changes the gcd;
/// meant for verification runs, not the hot path.
pub fn lucas_gcd_descent(lp: &LucasParams, i: u64, j: u64) -> Result<BigInt> {
    require_coprime(lp)?;
    require_positive(i, j)?;
    let value_gcd = |a: u64, b: u64| lucas_fast(lp, a).0.gcd(&lucas_fast(lp, b).0);
    let (mut a, mut b) = (i.max(j), i.min(j));
    let mut current = value_gcd(a, b);
    while b > 0 {
        let next = (b, a % b);
        let g = value_gcd(next.0, next.1);
        assert_eq!(
            g, current,
            "index descent changed gcd at ({a}, {b}) -> {next:?} for {lp}"
        );
        current = g;
        (a, b) = next;
    }
    // (a, 0): gcd(U_a, U_0) = gcd(U_a, 0) = |U_a|.
    debug_assert_eq!(current, lucas_fast(lp, a).0.abs());
    Ok(current)
}
