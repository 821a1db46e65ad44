//! Self-test suite: every identity and criterion checked exhaustively over a
//! small parameter box. Backs the `identities` CLI subcommand.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::classifier::classify;
use crate::divisibility::{
    check_converse_div, check_coprime_chain, check_div_rp, check_r_divides_even, criterion_ind34,
    divides, hs_criterion, ind34_hypotheses, is_strong_divisible,
};
use crate::lucas_fast::lucas_fast;
use crate::recurrence::{
    closed_form_double_root, gen_sequence, lucas_iter, lucas_prefix, make_pulse, recover_params,
    u_from_lucas, LucasParams, Params, Recovered,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityConfig {
    /// Bound on `|P|`, `|Q|`, `|R|`.
    pub bound: i64,
    /// Number of terms / largest index exercised per triple.
    pub depth: usize,
}

impl Default for IdentityConfig {
    fn default() -> Self {
        IdentityConfig {
            bound: 5,
            depth: 30,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub config: IdentityConfig,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

struct Tally {
    check: IdentityCheck,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            check: IdentityCheck {
                name: name.to_owned(),
                cases: 0,
                failures: 0,
                first_failure: None,
            },
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.check.cases += 1;
        if !ok {
            self.check.failures += 1;
            if self.check.first_failure.is_none() {
                self.check.first_failure = Some(describe());
            }
        }
    }
}

/// `(u_{m+n}, U_m u_{n+1} - Q U_{m-1} u_n)` for `m, n ≥ 1`.
pub fn addition_formula(params: &Params, m: usize, n: usize) -> (BigInt, BigInt) {
    let u = gen_sequence(params, (m + n).max(n + 1)).expect("length >= 2");
    let lucas = lucas_prefix(&params.lucas(), m);
    let lhs = u.u(m + n).clone();
    let rhs = &lucas[m] * u.u(n + 1) - &params.q * &lucas[m - 1] * u.u(n);
    (lhs, rhs)
}

fn triples(bound: i64) -> impl Iterator<Item = Params> {
    (-bound..=bound).flat_map(move |p| {
        (-bound..=bound).flat_map(move |q| (-bound..=bound).map(move |r| Params::new(p, q, r)))
    })
}

pub fn run_identity_suite(config: &IdentityConfig) -> IdentityReport {
    let b = config.bound;
    let depth = config.depth.max(4);
    let mut checks = vec![];

    let mut t = Tally::new("addition_formula");
    for params in triples(b) {
        for m in 1..=depth / 2 {
            for n in 1..=depth / 2 {
                let (lhs, rhs) = addition_formula(&params, m, n);
                t.record(lhs == rhs, || format!("{params} m={m} n={n}"));
            }
        }
    }
    checks.push(t.check);

    let mut t = Tally::new("u_from_lucas");
    for params in triples(b) {
        let prefix = gen_sequence(&params, depth).expect("depth >= 4");
        for n in 1..=depth {
            let ok = u_from_lucas(&params, n).ok().as_ref() == Some(prefix.u(n));
            t.record(ok, || format!("{params} n={n}"));
        }
    }
    checks.push(t.check);

    let mut t = Tally::new("double_root_closed_form");
    for half in -10i64..=10 {
        let lp = LucasParams::new(2 * half, half * half);
        for n in 0..=depth as u64 {
            let ok = closed_form_double_root(&lp, n) == Some(lucas_iter(&lp, n));
            t.record(ok, || format!("{lp} n={n}"));
        }
    }
    checks.push(t.check);

    let mut t = Tally::new("fast_doubling");
    for p in -b..=b {
        for q in -b..=b {
            let lp = LucasParams::new(p, q);
            let u = lucas_prefix(&lp, 10 * depth + 1);
            for n in 0..=10 * depth {
                let ok = lucas_fast(&lp, n as u64) == (u[n].clone(), u[n + 1].clone());
                t.record(ok, || format!("{lp} n={n}"));
            }
        }
    }
    checks.push(t.check);

    let mut t = Tally::new("lucas_strong_divisibility");
    for p in -b..=b {
        for q in -b..=b {
            let lp = LucasParams::new(p, q);
            let coprime = lp.p.gcd(&lp.q).is_one();
            let prefix = gen_sequence(&lp.as_params(), depth).expect("depth >= 4");
            let holds = is_strong_divisible(prefix.values()).holds;
            t.record(holds == coprime, || {
                format!("{lp} coprime={coprime} holds={holds}")
            });
        }
    }
    checks.push(t.check);

    let mut t = Tally::new("ind34_equivalence");
    for params in triples(b) {
        let ok = criterion_ind34(&params) == ind34_hypotheses(&params);
        t.record(ok, || params.to_string());
    }
    checks.push(t.check);

    let mut chain = Tally::new("coprime_chain");
    let mut div_rp = Tally::new("div_r_minus_p");
    for params in triples(b).filter(ind34_hypotheses) {
        let ok = check_coprime_chain(&params, depth) == Ok(true);
        chain.record(ok, || params.to_string());
        for n in 1..=depth / 2 {
            let ok = check_div_rp(&params, n) == Ok(true);
            div_rp.record(ok, || format!("{params} n={n}"));
        }
    }
    checks.push(chain.check);
    checks.push(div_rp.check);

    let mut converse = Tally::new("weak_converse");
    let mut r_even = Tally::new("r_divides_even_terms");
    for params in triples(b) {
        for n in 1..=6 {
            let ok = check_converse_div(&params, n, 6) == Ok(true);
            converse.record(ok, || format!("{params} n={n}"));
        }
        if divides(&params.r, &params.p) {
            let ok = check_r_divides_even(&params, depth / 2) == Ok(true);
            r_even.record(ok, || params.to_string());
        }
    }
    checks.push(converse.check);
    checks.push(r_even.check);

    let mut t = Tally::new("hs_f_minus_one");
    for params in triples(b) {
        let report = hs_criterion(&params);
        if report.passed {
            t.record(report.divides_f_minus_one == Some(true), || {
                params.to_string()
            });
        }
    }
    checks.push(t.check);

    let mut t = Tally::new("absolute_value_invariance");
    for params in triples(b) {
        let prefix = gen_sequence(&params, depth).expect("depth >= 4");
        let abs: Vec<BigInt> = prefix.values().iter().map(Signed::abs).collect();
        let ok = is_strong_divisible(prefix.values()) == is_strong_divisible(&abs);
        t.record(ok, || params.to_string());
    }
    checks.push(t.check);

    let mut t = Tally::new("pulse_strong_divisibility");
    for s in 1..=6 {
        for v in -6i64..=6 {
            let pulse = make_pulse(s, &BigInt::from(v), depth).expect("s, N >= 1");
            t.record(is_strong_divisible(&pulse).holds, || format!("s={s} t={v}"));
        }
    }
    checks.push(t.check);

    let mut t = Tally::new("parameter_recovery");
    for params in triples(b) {
        let prefix = gen_sequence(&params, 4).expect("length 4");
        let expected = if params.is_geometric() {
            Recovered::Geometric(params.r.clone())
        } else {
            Recovered::Unique(params.clone())
        };
        let ok = recover_params(prefix.u(2), prefix.u(3), prefix.u(4)) == expected;
        t.record(ok, || params.to_string());
    }
    checks.push(t.check);

    let mut t = Tally::new("classifier_vs_oracle");
    for params in triples(b) {
        let prefix = gen_sequence(&params, depth).expect("depth >= 4");
        let oracle = is_strong_divisible(prefix.values()).holds;
        t.record(oracle == classify(&params).strong_divisible, || {
            params.to_string()
        });
    }
    checks.push(t.check);

    IdentityReport {
        config: *config,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_formula_on_fibonacci() {
        // F_{m+n} = F_m F_{n+1} + F_{m-1} F_n.
        let fib = Params::new(1, -1, 1);
        assert_eq!(
            addition_formula(&fib, 5, 7),
            (BigInt::from(144), BigInt::from(144))
        );
    }

    #[test]
    fn small_suite_passes() {
        let report = run_identity_suite(&IdentityConfig {
            bound: 3,
            depth: 16,
        });
        for check in &report.checks {
            assert!(check.cases > 0, "{} ran no cases", check.name);
            assert_eq!(check.failures, 0, "{check:?}");
        }
        assert!(report.all_passed());
    }
}
