//! The arithmetic criteria on triples: the index 3/4 coprimality test, the
//! coprime chain, divisibility of R - P, the weak converse and the index-10
//! criterion.

use sdseq::divisibility::ind34_hypotheses;
use sdseq::{
    check_converse_div, check_coprime_chain, check_div_rp, check_r_divides_even, criterion_ind34,
    hs_criterion, Params,
};

fn main() -> sdseq::Result<()> {
    for (p, q, r) in [(5, 3, 2), (2, 4, 1), (-1, 1, 1), (6, 5, 3), (3, 2, 3)] {
        let params = Params::new(p, q, r);
        let ind34 = criterion_ind34(&params);
        println!("{params}");
        println!("  gcd(u3, u4) = 1: {ind34}");
        if ind34_hypotheses(&params) {
            println!(
                "  coprime chain to 40: {}",
                check_coprime_chain(&params, 40)?
            );
            let mut div_rp = true;
            for n in 1..=8 {
                div_rp &= check_div_rp(&params, n)?;
            }
            println!("  u_n | u_2n implies u_n | R - P, n <= 8: {div_rp}");
        }
        println!(
            "  weak converse at n = 3: {}",
            check_converse_div(&params, 3, 6)?
        );
        if let Ok(holds) = check_r_divides_even(&params, 6) {
            println!("  R | u_2k for k <= 6: {holds}");
        }
        let hs = hs_criterion(&params);
        println!(
            "  index-10 criterion: {:?}, f = {:?}",
            hs.reason,
            hs.f.map(|f| f.to_string())
        );
    }
    Ok(())
}
