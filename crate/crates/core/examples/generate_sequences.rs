//! Generating sequences: order-2 triples, Lucas sequences, general order-k
//! recurrences and pulse sequences, plus recovering (P, Q, R) from a prefix.

use sdseq::recurrence::lucas_prefix;
use sdseq::{
    gen_order_k, gen_sequence, make_pulse, recover_params, u_from_lucas, BigInt, LucasParams,
    OrderKRecurrence, Params, Recovered,
};

fn show(label: &str, values: &[BigInt]) {
    let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
    println!("{label:<28} {}", shown.join(" "));
}

fn main() -> sdseq::Result<()> {
    let fib = Params::new(1, -1, 1);
    show("Fibonacci (1, -1, 1)", gen_sequence(&fib, 15)?.values());

    let shifted = Params::new(3, 2, 5);
    let prefix = gen_sequence(&shifted, 10)?;
    show("(3, 2, 5)", prefix.values());
    // The same terms through the underlying Lucas sequence.
    let via_lucas = (1..=10)
        .map(|n| u_from_lucas(&shifted, n))
        .collect::<sdseq::Result<Vec<_>>>()?;
    assert_eq!(via_lucas, prefix.values());

    show(
        "Lucas U(2, 1) from U_0",
        &lucas_prefix(&LucasParams::new(2, 1), 10),
    );

    let tribonacci = OrderKRecurrence::from_i64(&[1, 1, 1], &[1, 1, 2])?;
    show("tribonacci", &gen_order_k(&tribonacci, 12)?);

    show("pulse s=3, t=-2", &make_pulse(3, &BigInt::from(-2), 12)?);

    for (u2, u3, u4) in [(5, 13, 29), (2, 4, 8), (2, 4, 9)] {
        let recovered = recover_params(&u2.into(), &u3.into(), &u4.into());
        let text = match recovered {
            Recovered::Unique(p) => format!("unique {p}"),
            Recovered::Geometric(r) => format!("geometric, R = {r}; P and Q are not determined"),
            Recovered::Inconsistent => "no integer triple".to_owned(),
        };
        println!("recover({u2}, {u3}, {u4}) -> {text}");
    }
    Ok(())
}
