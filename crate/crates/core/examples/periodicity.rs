//! Detecting eventual periodicity in the bounded families.

use sdseq::{detect_period, gen_sequence, make_pulse, BigInt, Params};

fn main() -> sdseq::Result<()> {
    for (p, q, r) in [
        (0, -1, 5),
        (0, 1, 2),
        (1, 0, -1),
        (-1, 1, 1),
        (1, 1, -1),
        (1, -1, 1),
    ] {
        let params = Params::new(p, q, r);
        let found = detect_period(gen_sequence(&params, 60)?.values())?;
        match found {
            Some(info) => println!(
                "{params:<22} preperiod {} period {}",
                info.preperiod, info.period
            ),
            None => println!("{params:<22} no period within 60 terms"),
        }
    }
    let pulse = make_pulse(5, &BigInt::from(7), 40)?;
    println!("pulse s=5, t=7         {:?}", detect_period(&pulse)?);
    Ok(())
}
