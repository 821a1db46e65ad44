//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any failed. All checks are exact.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sdseq::divisibility::ind34_hypotheses;
use sdseq::identities::addition_formula;
use sdseq::lucas_fast::double;
use sdseq::{
    bound_kimberling, bound_weak_order2, bound_weak_orderk, check_coprime_chain, check_div_rp,
    classify, closed_form_double_root, criterion_ind34, detect_period, expected_period,
    gen_order_k, gen_sequence, hs_criterion, is_strong_divisible, is_weak_divisible, lucas_fast,
    lucas_gcd, sweep, u_from_lucas, BigInt, Error, LucasParams, OrderKRecurrence, Params,
    SearchBox,
};

const SEED: u64 = 0x5d5e_9001;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("theorem reproduction", theorem_reproduction),
        ("Lucas strong divisibility", lucas_strong_divisibility),
        ("identity suite", identity_suite),
        ("criterion suite", criterion_suite),
        ("divisibility bounds", divisibility_bounds),
        ("periodicity", periodicity),
        ("fast-path equivalence", fast_path_equivalence),
    ];
    println!("acceptance suite, seed {SEED:#x}");
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_owned()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {}. {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {}. {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}

// Oracles: plain iteration and pairwise gcds, independent of the library.

fn oracle_u(p: i64, q: i64, r: i64, n: usize) -> Vec<BigInt> {
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    let mut u = vec![BigInt::one(), BigInt::from(r)];
    while u.len() < n {
        let k = u.len();
        let next = &p * &u[k - 1] - &q * &u[k - 2];
        u.push(next);
    }
    u.truncate(n);
    u
}

fn oracle_lucas(p: i64, q: i64, n: usize) -> Vec<BigInt> {
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    let mut u = vec![BigInt::zero(), BigInt::one()];
    for k in 2..=n {
        let next = &p * &u[k - 1] - &q * &u[k - 2];
        u.push(next);
    }
    u.truncate(n + 1);
    u
}

/// `u[k - 1]` holds the term of index `k`.
fn oracle_strong(u: &[BigInt]) -> bool {
    (1..=u.len())
        .all(|i| (i + 1..=u.len()).all(|j| u[i - 1].gcd(&u[j - 1]) == u[i.gcd(&j) - 1].abs()))
}

fn box_triples(bound: i64) -> Vec<(i64, i64, i64)> {
    let range = || -bound..=bound;
    range()
        .flat_map(|p| range().flat_map(move |q| range().map(move |r| (p, q, r))))
        .collect()
}

fn oracle_survivors(bound: i64, depth: usize) -> BTreeSet<(i64, i64, i64)> {
    box_triples(bound)
        .into_par_iter()
        .filter(|&(p, q, r)| oracle_strong(&oracle_u(p, q, r, depth)))
        .collect()
}

fn to_tuple(params: &Params) -> (i64, i64, i64) {
    let small = |x: &BigInt| i64::try_from(x).expect("box entries fit in i64");
    (small(&params.p), small(&params.q), small(&params.r))
}

fn literal_family(p: i64, q: i64, r: i64) -> bool {
    (r == p && p.gcd(&q) == 1)
        || (p == 0 && q.abs() == 1)
        || (r == -p && p.abs() == 1 && (q == 0 || q == 1))
}

fn geometric_unit(p: i64, q: i64, r: i64) -> bool {
    q == r * (p - r) && r.abs() == 1
}

fn theorem_reproduction() -> Outcome {
    let report = sweep(&SearchBox::new(10, 10, 10, 60).map_err(|e| e.to_string())?);
    ensure!(
        report.mismatches.is_empty(),
        "{} mismatches, first {}",
        report.mismatches.len(),
        report.mismatches[0]
    );
    ensure!(
        report.stats.tested == 21 * 21 * 21,
        "tested {}",
        report.stats.tested
    );

    let survivors: BTreeSet<_> = report
        .survivors
        .iter()
        .map(|s| to_tuple(&s.params))
        .collect();
    let oracle = oracle_survivors(10, 60);
    ensure!(
        survivors == oracle,
        "sweep survivors differ from the independent oracle"
    );

    let literal: BTreeSet<_> = box_triples(10)
        .into_iter()
        .filter(|&(p, q, r)| literal_family(p, q, r))
        .collect();
    let amended: BTreeSet<_> = box_triples(10)
        .into_iter()
        .filter(|&(p, q, r)| literal_family(p, q, r) || geometric_unit(p, q, r))
        .collect();
    ensure!(
        survivors == amended,
        "survivors differ from the amended family set"
    );
    let extra: Vec<_> = survivors.difference(&literal).collect();
    ensure!(
        extra.iter().all(|&&(p, q, r)| geometric_unit(p, q, r)),
        "non-geometric survivor outside the literal family set"
    );
    Ok(format!(
        "{} triples, {} survivors, 0 mismatches; {} survivors are geometric with |R| = 1 beyond the literal family set",
        report.stats.tested,
        survivors.len(),
        extra.len()
    ))
}

fn lucas_strong_divisibility() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pairs = Vec::new();
    while pairs.len() < 200 {
        let (p, q): (i64, i64) = (rng.gen_range(-50..=50), rng.gen_range(-50..=50));
        if p.gcd(&q) == 1 {
            pairs.push((p, q));
        }
    }
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(p, q)| {
            let lp = LucasParams::new(p, q);
            let u = oracle_lucas(p, q, 120);
            for i in 1..=120u64 {
                for j in i..=120u64 {
                    let want = u[i.gcd(&j) as usize].abs();
                    let direct = u[i as usize].gcd(&u[j as usize]);
                    let by_index = lucas_gcd(&lp, i, j).ok();
                    if direct != want || by_index.as_ref() != Some(&want) {
                        return Some(format!("{lp} i={i} j={j}"));
                    }
                }
            }
            None
        })
        .collect();
    ensure!(
        bad.is_empty(),
        "{} failing pairs, first {}",
        bad.len(),
        bad[0]
    );

    let (p, q) = loop {
        let g: i64 = rng.gen_range(2..=5);
        let (a, b): (i64, i64) = (rng.gen_range(-10..=10), rng.gen_range(-10..=10));
        if (a, b) != (0, 0) {
            break (g * a, g * b);
        }
    };
    let lp = LucasParams::new(p, q);
    let prefix = gen_sequence(&lp.as_params(), 12).map_err(|e| e.to_string())?;
    let witness = is_strong_divisible(prefix.values()).witness;
    ensure!(
        matches!(witness, Some((_, j)) if j <= 4),
        "non-coprime {lp} gave witness {witness:?}"
    );
    ensure!(
        matches!(lucas_gcd(&lp, 3, 5), Err(Error::PreconditionViolation(_))),
        "gcd by index accepted non-coprime {lp}"
    );
    Ok(format!(
        "200 coprime pairs x {} index pairs exact; non-coprime {lp} fails at {:?}",
        120 * 121 / 2,
        witness.unwrap()
    ))
}

fn identity_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let triples: Vec<(i64, i64, i64)> = (0..100)
        .map(|_| {
            (
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
            )
        })
        .collect();
    let mut cases = 0usize;
    for &(p, q, r) in &triples {
        let params = Params::new(p, q, r);
        let u = oracle_u(p, q, r, 51);
        let lucas = oracle_lucas(p, q, 50);
        for m in 1..=25 {
            for n in 1..=25 {
                let (lhs, rhs) = addition_formula(&params, m, n);
                let direct = &lucas[m] * &u[n] - BigInt::from(q) * &lucas[m - 1] * &u[n - 1];
                ensure!(
                    lhs == u[m + n - 1] && rhs == lhs && direct == lhs,
                    "addition formula fails for {params} m={m} n={n}"
                );
                cases += 1;
            }
        }
        for n in 1..=50 {
            let via_lucas = &lucas[n] + BigInt::from(r - p) * &lucas[n - 1];
            let ours = u_from_lucas(&params, n).map_err(|e| e.to_string())?;
            ensure!(
                ours == u[n - 1] && via_lucas == u[n - 1],
                "u from U fails for {params} n={n}"
            );
            cases += 1;
        }
    }
    for half in -10i64..=10 {
        let (p, q) = (2 * half, half * half);
        let lucas = oracle_lucas(p, q, 30);
        for n in 1..=30u64 {
            let formula = BigInt::from(n) * num_traits::pow(BigInt::from(half), n as usize - 1);
            let ours = closed_form_double_root(&LucasParams::new(p, q), n);
            ensure!(
                ours.as_ref() == Some(&formula) && formula == lucas[n as usize],
                "double root fails for P={p} n={n}"
            );
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} exact cases over 100 random triples and 21 double roots"
    ))
}

fn criterion_suite() -> Outcome {
    let triples = box_triples(8);
    let failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&(p, q, r)| {
            let params = Params::new(p, q, r);
            let u = oracle_u(p, q, r, 4);
            let oracle_hyp =
                u[2].gcd(&u[3]).is_one() && BigInt::from(p).gcd(&BigInt::from(q)).is_one();
            if criterion_ind34(&params) != oracle_hyp || ind34_hypotheses(&params) != oracle_hyp {
                return Some(format!("ind34 {params}"));
            }
            if oracle_hyp {
                if check_coprime_chain(&params, 40) != Ok(true) {
                    return Some(format!("chain {params}"));
                }
                if (1..=16).any(|n| check_div_rp(&params, n) != Ok(true)) {
                    return Some(format!("div_rp {params}"));
                }
            }
            None
        })
        .collect();
    ensure!(
        failures.is_empty(),
        "{} failures, first {}",
        failures.len(),
        failures[0]
    );

    let (mut passes, mut product_ok) = (0, 0);
    for &(p, q, r) in &triples {
        let params = Params::new(p, q, r);
        let report = hs_criterion(&params);
        if !report.passed {
            continue;
        }
        passes += 1;
        let u = oracle_u(p, q, r, 5);
        ensure!(
            report.u3 == u[2] && report.u5 == u[4],
            "hs terms wrong for {params}"
        );
        let f = report
            .f
            .clone()
            .ok_or(format!("hs pass without R | P for {params}"))?;
        let d: BigInt = f - 1;
        let divides = |a: &BigInt| {
            if a.is_zero() {
                d.is_zero()
            } else {
                d.is_multiple_of(a)
            }
        };
        ensure!(
            divides(&u[2]) && divides(&u[4]),
            "u3 or u5 does not divide f - 1 for {params}"
        );
        ensure!(
            report.divides_f_minus_one == Some(true),
            "report disagrees for {params}"
        );
        if divides(&(&u[2] * &u[4])) && report.product_divides_f_minus_one() == Some(true) {
            product_ok += 1;
        }
    }
    ensure!(passes > 0, "no triple passed the index-10 criterion");
    ensure!(
        product_ok == passes,
        "product u3 u5 fails to divide f - 1 in {} of {passes}",
        passes - product_ok
    );
    Ok(format!(
        "{} triples; {passes} index-10 passes, all with u3 u5 | f - 1",
        triples.len()
    ))
}

fn divisibility_bounds() -> Outcome {
    let weak2: Vec<(i64, i64, i64)> = box_triples(6)
        .into_par_iter()
        .filter(|&(p, q, r)| oracle_weak(&oracle_u(p, q, r, 40)))
        .collect();
    for &(p, q, r) in &weak2 {
        let params = Params::new(p, q, r);
        ensure!(
            is_weak_divisible(gen_sequence(&params, 40).unwrap().values()).holds,
            "library weak check disagrees for {params}"
        );
        ensure!(
            bound_weak_order2(&params, 20) == Ok(true),
            "order-2 bound fails for {params}"
        );
    }

    let small = -2i64..=2;
    let mut weak3 = 0;
    for a1 in small.clone() {
        for a2 in small.clone() {
            for a3 in small.clone().filter(|&a| a != 0) {
                for u1 in small.clone() {
                    for u2 in small.clone() {
                        for u3 in small.clone() {
                            let rec = OrderKRecurrence::from_i64(&[a1, a2, a3], &[u1, u2, u3])
                                .map_err(|e| e.to_string())?;
                            let values = gen_order_k(&rec, 24).map_err(|e| e.to_string())?;
                            if !oracle_weak(&values) {
                                continue;
                            }
                            weak3 += 1;
                            ensure!(
                                bound_weak_orderk(&rec, 24) == Ok(true),
                                "order-k bound fails for {rec:?}"
                            );
                            ensure!(
                                bound_kimberling(&rec, 24) == Ok(true),
                                "Kimberling bound fails for {rec:?}"
                            );
                        }
                    }
                }
            }
        }
    }
    ensure!(
        !weak2.is_empty() && weak3 > 0,
        "no weak-divisible cases found"
    );
    Ok(format!(
        "{} weak order-2 triples, {weak3} weak order-3 recurrences, all bounds hold",
        weak2.len()
    ))
}

fn oracle_weak(u: &[BigInt]) -> bool {
    (1..=u.len()).all(|i| {
        (2 * i..=u.len()).step_by(i).all(|j| {
            let (a, b) = (&u[i - 1], &u[j - 1]);
            if a.is_zero() {
                b.is_zero()
            } else {
                b.is_multiple_of(a)
            }
        })
    })
}

fn periodicity() -> Outcome {
    let survivors = oracle_survivors(10, 60);
    let mut checked = 0;
    for &(p, q, r) in survivors.iter().filter(|t| t.2 != t.0) {
        let params = Params::new(p, q, r);
        let u = oracle_u(p, q, r, 60);
        let info = detect_period(&u)
            .map_err(|e| e.to_string())?
            .ok_or(format!("no period within 60 terms for {params}"))?;
        let (pre, per) = (info.preperiod, info.period);
        ensure!(
            (pre..u.len() - per).all(|i| u[i] == u[i + per]),
            "reported period {per} after {pre} does not repeat for {params}"
        );
        let allowed =
            expected_period(&classify(&params)).ok_or(format!("no admissible set for {params}"))?;
        ensure!(
            allowed.contains(&(pre, per)),
            "{params}: ({pre}, {per}) not in {allowed:?}"
        );
        checked += 1;
    }
    ensure!(checked > 0, "no survivors with R != P");
    Ok(format!(
        "{checked} survivors with R != P, all periods admissible"
    ))
}

fn pisano(m: u64) -> u64 {
    let (mut a, mut b, mut k) = (0u64, 1u64, 0u64);
    loop {
        (a, b) = (b, (a + b) % m);
        k += 1;
        if (a, b) == (0, 1) {
            return k;
        }
    }
}

fn fib_mod(n: u64, m: u64) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n % pisano(m) {
        (a, b) = (b, (a + b) % m);
    }
    a
}

fn fast_path_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let pairs: Vec<(i64, i64)> = (0..100)
        .map(|_| (rng.gen_range(-50..=50), rng.gen_range(-50..=50)))
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(p, q)| {
            let lp = LucasParams::new(p, q);
            let u = oracle_lucas(p, q, 1001);
            (0..=1000)
                .find(|&n| lucas_fast(&lp, n as u64) != (u[n].clone(), u[n + 1].clone()))
                .map(|n| format!("{lp} n={n}"))
        })
        .collect();
    ensure!(
        bad.is_empty(),
        "{} disagreements, first {}",
        bad.len(),
        bad[0]
    );

    let fib = LucasParams::new(1, -1);
    let n = 1_000_000u64;
    let start = Instant::now();
    let (a, b) = lucas_fast(&fib, n);
    let elapsed = start.elapsed();
    ensure!(
        elapsed < Duration::from_secs(1),
        "F_10^6 took {elapsed:.2?}"
    );

    let (c, d) = lucas_fast(&fib, n / 2);
    ensure!(
        double(&fib, &c, &d) == (a.clone(), b.clone()),
        "doubling from n/2 disagrees"
    );
    // U_{n+1}^2 - P U_n U_{n+1} + Q U_n^2 = Q^n; here Q^n = 1.
    ensure!(
        &b * &b - &a * &b - &a * &a == BigInt::one(),
        "Cassini invariant fails"
    );
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let bits = (n as f64 * phi.log2() - 5f64.sqrt().log2()).floor() as u64 + 1;
    ensure!(
        a.bits() == bits,
        "F_10^6 has {} bits, expected {bits}",
        a.bits()
    );
    for m in [1000u64, 1_000_003] {
        let residue = (&a % m).to_string();
        ensure!(residue == fib_mod(n, m).to_string(), "F_10^6 mod {m} wrong");
    }
    Ok(format!(
        "100 pairs x n <= 1000 agree; F_10^6 ({bits} bits) in {elapsed:.2?}"
    ))
}
