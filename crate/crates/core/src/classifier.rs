//! Closed-form classification of strong divisibility for `(P, Q, R)`.
//!
//! A sequence `u_1 = 1, u_2 = R, u_{n+2} = P u_{n+1} - Q u_n` is a strong
//! divisibility sequence exactly when it is a coprime Lucas sequence or
//! belongs to one of three exceptional families:
//!
//! | family            | condition                    | terms                              |
//! |-------------------|------------------------------|------------------------------------|
//! | `PulseFamily`     | `P = 0`, `Q = ±1`            | `1, r, ε, εr, 1, r, ...`           |
//! | `NullQFamily`     | `Q = 0`, `R = -P = ±1`       | `1, ε, -1, ε, -1, ...`             |
//! | `PeriodSixFamily` | `Q = 1`, `R = -P = ±1`       | `1, ε, -2, ε, 1, -2ε, 1, ε, ...`   |
//!
//! The families overlap (`(0, -1, 0)` is both Lucas and pulse), so a
//! triple carries a set of families. The decision never generates terms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::recurrence::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `u` is a Lucas sequence `U(P', Q')` with `gcd(P', Q') = 1`.
    LucasCoprime,
    PulseFamily,
    NullQFamily,
    PeriodSixFamily,
}

/// `ε = ±1`, and `r` for the pulse family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonR {
    pub epsilon: i8,
    #[serde(with = "crate::decimal::option")]
    pub r: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub strong_divisible: bool,
    pub families: BTreeSet<Family>,
    /// `Q = R(P - R)`, i.e. `u_n = R^{n-1}`.
    pub geometric: bool,
    pub epsilon_r: Option<EpsilonR>,
}

impl Classification {
    pub fn contains(&self, family: Family) -> bool {
        self.families.contains(&family)
    }
}

fn sign_of_unit(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else {
        -1
    }
}

fn is_unit(x: &BigInt) -> bool {
    x.abs().is_one()
}

pub fn classify(params: &Params) -> Classification {
    let (p, q, r) = (&params.p, &params.q, &params.r);
    let geometric = params.is_geometric();
    let mut families = BTreeSet::new();
    let mut epsilon_r = None;

    // Geometric with |R| = 1 is u = U(R, 0), a coprime Lucas sequence even
    // though R ≠ P in general.
    if (r == p && p.gcd(q).is_one()) || (geometric && is_unit(r)) {
        families.insert(Family::LucasCoprime);
    }
    if p.is_zero() && is_unit(q) {
        families.insert(Family::PulseFamily);
        epsilon_r = Some(EpsilonR {
            epsilon: -sign_of_unit(q),
            r: Some(r.clone()),
        });
    }
    if is_unit(p) && *r == -p {
        let family = if q.is_zero() {
            Some(Family::NullQFamily)
        } else if q.is_one() {
            Some(Family::PeriodSixFamily)
        } else {
            None
        };
        if let Some(family) = family {
            families.insert(family);
            epsilon_r = Some(EpsilonR {
                epsilon: sign_of_unit(r),
                r: None,
            });
        }
    }

    Classification {
        strong_divisible: !families.is_empty(),
        families,
        geometric,
        epsilon_r,
    }
}

/// Admissible `(preperiod, period)` pairs for the bounded families; `None`
/// for sequences that grow without bound in general.
pub fn expected_period(c: &Classification) -> Option<BTreeSet<(usize, usize)>> {
    let pairs: &[(usize, usize)] = if c.contains(Family::PulseFamily) {
        &[(0, 1), (0, 2), (0, 4)]
    } else if c.contains(Family::NullQFamily) {
        &[(0, 1), (0, 2), (1, 1), (1, 2)]
    } else if c.contains(Family::PeriodSixFamily) {
        &[(0, 3), (0, 6)]
    } else if c.contains(Family::LucasCoprime) && c.geometric {
        // u_n = (±1)^{n-1}.
        &[(0, 1), (0, 2)]
    } else {
        return None;
    };
    Some(pairs.iter().copied().collect())
}
