//! Exhaustive sweeps over a box of parameters, cross-checking the
//! brute-force strong divisibility oracle against [`classify`].
//!
//! Work is split into one slice per value of `P` and run on a rayon pool.
//! Slices are merged and sorted before the report is built, so the output
//! does not depend on scheduling.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{classify, Classification};
use crate::divisibility::{criterion_ind34, divides, is_strong_divisible};
use crate::error::{invalid, Error, Result};
use crate::periodicity::{detect_period, PeriodInfo};
use crate::recurrence::{gen_sequence, Params};

/// Depth used when none is given: ten full periods of the longest
/// exceptional family.
pub const DEFAULT_DEPTH: usize = 60;

/// The criteria reach index 10, so shallower oracles are meaningless.
pub const MIN_DEPTH: usize = 10;

/// `|P| ≤ pmax`, `|Q| ≤ qmax`, `|R| ≤ rmax`, oracle run on `u_1..u_depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchBox {
    pub pmax: u32,
    pub qmax: u32,
    pub rmax: u32,
    pub depth: usize,
}

impl SearchBox {
    pub fn new(pmax: u32, qmax: u32, rmax: u32, depth: usize) -> Result<Self> {
        if pmax == 0 || qmax == 0 || rmax == 0 {
            return invalid("box bounds must be >= 1");
        }
        if depth < MIN_DEPTH {
            return invalid(format!("depth must be >= {MIN_DEPTH}, got {depth}"));
        }
        Ok(SearchBox {
            pmax,
            qmax,
            rmax,
            depth,
        })
    }

    /// Number of triples in the box.
    pub fn size(&self) -> u64 {
        [self.pmax, self.qmax, self.rmax]
            .iter()
            .map(|&m| 2 * u64::from(m) + 1)
            .product()
    }

    fn range(max: u32) -> std::ops::RangeInclusive<i64> {
        -i64::from(max)..=i64::from(max)
    }

    /// Every triple of the slice `P = p`, in `(Q, R)` order.
    fn slice(&self, p: i64) -> impl Iterator<Item = Params> + '_ {
        Self::range(self.qmax)
            .flat_map(move |q| Self::range(self.rmax).map(move |r| Params::new(p, q, r)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub params: Params,
    pub classification: Classification,
    /// Detected on the oracle prefix; absent for unbounded Lucas sequences.
    pub period: Option<PeriodInfo>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub tested: u64,
    /// Triples rejected by the oracle before the full pair scan completed.
    pub early_exits: u64,
    pub classifier_positive: u64,
}

impl SearchStats {
    fn merge(self, other: SearchStats) -> SearchStats {
        SearchStats {
            tested: self.tested + other.tested,
            early_exits: self.early_exits + other.early_exits,
            classifier_positive: self.classifier_positive + other.classifier_positive,
        }
    }
}

/// Survivors are sorted by `(P, Q, R)`; `mismatches` lists every triple on
/// which the oracle and the classifier disagree and is expected empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    #[serde(rename = "box")]
    pub search_box: SearchBox,
    pub survivors: Vec<Survivor>,
    pub mismatches: Vec<Params>,
    pub stats: SearchStats,
}

#[derive(Default)]
struct SliceResult {
    survivors: Vec<Survivor>,
    mismatches: Vec<Params>,
    stats: SearchStats,
}

fn sweep_slice(search_box: &SearchBox, p: i64) -> SliceResult {
    let mut out = SliceResult::default();
    for params in search_box.slice(p) {
        let prefix = gen_sequence(&params, search_box.depth).expect("depth >= 10");
        let report = is_strong_divisible(prefix.values());
        let classification = classify(&params);
        out.stats.tested += 1;
        if !report.holds {
            out.stats.early_exits += 1;
        }
        if classification.strong_divisible {
            out.stats.classifier_positive += 1;
        }
        if report.holds != classification.strong_divisible {
            out.mismatches.push(params.clone());
        }
        if report.holds {
            let period = detect_period(prefix.values()).expect("depth >= 4");
            out.survivors.push(Survivor {
                params,
                classification,
                period,
            });
        }
    }
    out
}

fn merge(search_box: SearchBox, slices: Vec<SliceResult>) -> SearchReport {
    let mut report = SearchReport {
        search_box,
        survivors: vec![],
        mismatches: vec![],
        stats: SearchStats::default(),
    };
    for slice in slices {
        report.survivors.extend(slice.survivors);
        report.mismatches.extend(slice.mismatches);
        report.stats = report.stats.merge(slice.stats);
    }
    report.survivors.sort_by(|a, b| a.params.cmp(&b.params));
    report.mismatches.sort();
    report
}

/// Sweeps the box on the current rayon pool (machine parallelism by default).
pub fn sweep(search_box: &SearchBox) -> SearchReport {
    let slices = SearchBox::range(search_box.pmax)
        .into_par_iter()
        .map(|p| sweep_slice(search_box, p))
        .collect();
    merge(*search_box, slices)
}

/// Sweeps the box on a dedicated pool of `threads` workers.
pub fn sweep_with_threads(search_box: &SearchBox, threads: usize) -> Result<SearchReport> {
    if threads == 0 {
        return invalid("thread count must be >= 1");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(|| sweep(search_box)))
}

/// Single-threaded reference sweep, slice by slice in order.
pub fn sweep_sequential(search_box: &SearchBox) -> SearchReport {
    let slices = SearchBox::range(search_box.pmax)
        .map(|p| sweep_slice(search_box, p))
        .collect();
    merge(*search_box, slices)
}

/// The hypotheses of the exceptional-family theorem: `P ≠ R`,
/// `Q ≠ R(P - R)`, `gcd(u_3, u_4) = 1`, `u_2 | u_4`, `u_3 | u_6`, `u_5 | u_10`.
pub fn satisfies_hs_hypotheses(params: &Params) -> bool {
    if params.p == params.r || params.is_geometric() || !criterion_ind34(params) {
        return false;
    }
    let prefix = gen_sequence(params, 10).expect("length 10");
    let u = |n: usize| prefix.u(n);
    divides(u(2), u(4)) && divides(u(3), u(6)) && divides(u(5), u(10))
}

/// The theorem's conclusion: `P = 0, Q = ±1` or `P = -R = ±1, Q ∈ {0, 1}`.
pub fn hs_conclusion(params: &Params) -> bool {
    let (p, q, r) = (&params.p, &params.q, &params.r);
    let unit = |x: &BigInt| x.abs().is_one();
    (p.is_zero() && unit(q)) || (unit(p) && *r == -p && (q.is_zero() || q.is_one()))
}

/// Every triple of the box meeting [`satisfies_hs_hypotheses`], sorted.
pub fn filter_hs(search_box: &SearchBox) -> Vec<Params> {
    let mut found: Vec<Params> = SearchBox::range(search_box.pmax)
        .into_par_iter()
        .flat_map_iter(|p| {
            search_box
                .slice(p)
                .filter(satisfies_hs_hypotheses)
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisibility::ind34_hypotheses;

    #[test]
    fn box_validation() {
        assert!(SearchBox::new(0, 1, 1, 20).is_err());
        assert!(SearchBox::new(1, 1, 1, 9).is_err());
        assert_eq!(SearchBox::new(2, 2, 2, 24).unwrap().size(), 125);
    }

    #[test]
    fn small_box_survivors_match_brute_force() {
        let b = SearchBox::new(2, 2, 2, 24).unwrap();
        let report = sweep(&b);
        assert!(report.mismatches.is_empty());
        assert_eq!(report.stats.tested, 125);
        // Independent brute force over the same box.
        let mut expected = vec![];
        for p in -2..=2i64 {
            for q in -2..=2i64 {
                for r in -2..=2i64 {
                    let params = Params::new(p, q, r);
                    let prefix = gen_sequence(&params, 24).unwrap();
                    if is_strong_divisible(prefix.values()).holds {
                        expected.push(params);
                    }
                }
            }
        }
        let got: Vec<Params> = report.survivors.iter().map(|s| s.params.clone()).collect();
        assert_eq!(got, expected);
        assert!(report
            .survivors
            .iter()
            .all(|s| s.classification.strong_divisible));
        assert_eq!(report.stats.classifier_positive, expected.len() as u64);
        assert_eq!(report.stats.early_exits, 125 - expected.len() as u64);
    }

    #[test]
    fn fibonacci_survives_unit_box() {
        let report = sweep(&SearchBox::new(1, 1, 1, 10).unwrap());
        assert!(report
            .survivors
            .iter()
            .any(|s| s.params == Params::new(1, -1, 1)));
        assert!(report.mismatches.is_empty());
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let b = SearchBox::new(3, 3, 3, 20).unwrap();
        let seq = sweep_sequential(&b);
        let par = sweep_with_threads(&b, 4).unwrap();
        assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            serde_json::to_string(&par).unwrap()
        );
        assert!(sweep_with_threads(&b, 0).is_err());
    }

    #[test]
    fn deeper_search_only_removes_survivors() {
        let shallow = sweep(&SearchBox::new(4, 4, 4, 10).unwrap());
        let deep = sweep(&SearchBox::new(4, 4, 4, 30).unwrap());
        let shallow_set: Vec<_> = shallow.survivors.iter().map(|s| &s.params).collect();
        assert!(deep
            .survivors
            .iter()
            .all(|s| shallow_set.contains(&&s.params)));
    }

    #[test]
    fn filter_hs_examples() {
        let found = filter_hs(&SearchBox::new(3, 3, 3, 10).unwrap());
        assert!(!found.is_empty());
        assert!(found.iter().all(hs_conclusion));
        assert!(found.contains(&Params::new(-1, 1, 1)));
        assert!(!found.contains(&Params::new(1, -1, 1)));
    }

    #[test]
    fn r_zero_never_meets_hypotheses() {
        for p in -6..=6i64 {
            for q in -6..=6i64 {
                assert!(!satisfies_hs_hypotheses(&Params::new(p, q, 0)));
            }
        }
    }

    #[test]
    fn hypotheses_imply_ind34_side() {
        for params in SearchBox::new(4, 4, 4, 10).unwrap().slice(1) {
            if satisfies_hs_hypotheses(&params) {
                assert!(ind34_hypotheses(&params));
            }
        }
    }
}
