//! Brute-force strong and weak divisibility checks with smallest witnesses.

use sdseq::{gen_order_k, gen_sequence, is_strong_divisible, is_weak_divisible};
use sdseq::{DivisibilityReport, OrderKRecurrence, Params};

fn describe(label: &str, report: &DivisibilityReport) {
    match report.witness {
        None => println!(
            "{label:<26} {:?} holds up to N = {}",
            report.kind, report.bound
        ),
        Some((i, j)) => println!("{label:<26} {:?} fails at (i, j) = ({i}, {j})", report.kind),
    }
}

fn main() -> sdseq::Result<()> {
    for (p, q, r) in [
        (1, -1, 1),
        (3, 2, 3),
        (2, 4, 2),
        (3, 6, 3),
        (0, -1, 7),
        (-1, 1, 1),
    ] {
        let params = Params::new(p, q, r);
        let prefix = gen_sequence(&params, 30)?;
        describe(&params.to_string(), &is_strong_divisible(prefix.values()));
    }

    // Weak but not strong: u_n = n.
    let naturals = gen_sequence(&Params::new(2, 1, 2), 30)?;
    describe("naturals, strong", &is_strong_divisible(naturals.values()));
    describe("naturals, weak", &is_weak_divisible(naturals.values()));

    let tribonacci = OrderKRecurrence::from_i64(&[1, 1, 1], &[1, 1, 1])?;
    describe(
        "tribonacci, weak",
        &is_weak_divisible(&gen_order_k(&tribonacci, 30)?),
    );
    Ok(())
}
