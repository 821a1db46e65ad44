//! Logarithmic-time Lucas evaluation and gcd by index.

use std::time::Instant;

use sdseq::lucas_fast::lucas_gcd_descent;
use sdseq::{lucas_fast, lucas_gcd, lucas_iter, LucasParams};

fn main() -> sdseq::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a non-negative integer"))
        .unwrap_or(1_000_000);

    let fib = LucasParams::new(1, -1);
    assert_eq!(lucas_fast(&fib, 300).0, lucas_iter(&fib, 300));

    let start = Instant::now();
    let (un, _) = lucas_fast(&fib, n);
    let elapsed = start.elapsed();
    let digits = un.to_string();
    println!(
        "F_{n}: {} digits, {}...{} ({elapsed:.2?})",
        digits.len(),
        &digits[..digits.len().min(12)],
        &digits[digits.len().saturating_sub(12)..]
    );

    let lp = LucasParams::new(3, 2);
    for (i, j) in [(12, 18), (35, 49), (64, 96)] {
        let g = lucas_gcd(&lp, i, j)?;
        assert_eq!(g, lucas_gcd_descent(&lp, i, j)?);
        println!(
            "{lp}: gcd(U_{i}, U_{j}) = U_{} = {g}",
            num_integer::gcd(i, j)
        );
    }

    match lucas_gcd(&LucasParams::new(4, 2), 3, 5) {
        Err(e) => println!("U(4, 2): {e}"),
        Ok(g) => println!("U(4, 2): unexpectedly {g}"),
    }
    Ok(())
}
