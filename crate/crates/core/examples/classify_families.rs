//! Closed-form classification of triples against the brute-force oracle.

use sdseq::{classify, expected_period, gen_sequence, is_strong_divisible, Params};

fn main() -> sdseq::Result<()> {
    let triples = [
        (1, -1, 1),
        (3, 2, 3),
        (0, -1, 5),
        (0, 1, -3),
        (1, 0, -1),
        (-1, 1, 1),
        (5, 4, 1),
        (0, -1, 0),
        (2, 4, 2),
        (3, 1, 2),
    ];
    for (p, q, r) in triples {
        let params = Params::new(p, q, r);
        let c = classify(&params);
        let oracle = is_strong_divisible(gen_sequence(&params, 48)?.values()).holds;
        assert_eq!(c.strong_divisible, oracle);
        let families: Vec<String> = c.families.iter().map(|f| format!("{f:?}")).collect();
        let period = expected_period(&c)
            .map(|set| format!(" periods {set:?}"))
            .unwrap_or_default();
        println!(
            "{params:<22} {:<5} {}{}{period}",
            c.strong_divisible,
            families.join("+"),
            if c.geometric { " geometric" } else { "" },
        );
    }
    Ok(())
}
