//! Divisibility bounds for weak divisibility sequences of order 2 and k,
//! and the Hall transform used for Kimberling's bound.

use sdseq::{
    bound_kimberling, bound_weak_order2, bound_weak_orderk, gen_order_k, hall_transform,
    is_weak_divisible, OrderKRecurrence, Params,
};

fn main() -> sdseq::Result<()> {
    for (p, q, r) in [(0, -1, 5), (2, 1, 2), (3, 2, 3)] {
        let params = Params::new(p, q, r);
        println!(
            "{params}: u_n | Q^(n-1) (R - P) up to 20: {}",
            bound_weak_order2(&params, 20)?
        );
    }

    // Every order-3 recurrence with coefficients and initial terms in [-2, 2].
    let small: Vec<i64> = (-2..=2).collect();
    let (mut weak, mut held) = (0, 0);
    for (i, j) in (0..5usize.pow(6)).map(|x| (x / 125, x % 125)) {
        let coeffs = [small[i / 25], small[i / 5 % 5], small[i % 5]];
        let initial = [small[j / 25], small[j / 5 % 5], small[j % 5]];
        if coeffs[2] == 0 {
            continue;
        }
        let rec = OrderKRecurrence::from_i64(&coeffs, &initial)?;
        if is_weak_divisible(&gen_order_k(&rec, 24)?).holds {
            weak += 1;
            if bound_weak_orderk(&rec, 24)? && bound_kimberling(&rec, 24)? {
                held += 1;
            }
        }
    }
    println!(
        "order-3 recurrences in [-2, 2]: {weak} weakly divisible to 24, bounds hold for {held}"
    );
    let example = OrderKRecurrence::from_i64(&[0, 0, 2], &[1, 1, 1])?;
    let terms: Vec<String> = gen_order_k(&example, 12)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("a = (0, 0, 2), u = (1, 1, 1): {}", terms.join(" "));
    println!(
        "  Kimberling bound to 12: {}",
        bound_kimberling(&example, 12)?
    );

    let rec = OrderKRecurrence::from_i64(&[1, 1], &[1, 1])?;
    let v: Vec<String> = hall_transform(&rec, 10)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("Hall transform of Fibonacci: {}", v.join(" "));
    Ok(())
}
