//! Runs the built-in identity and criterion self-test over a small box.

use sdseq::identities::{run_identity_suite, IdentityConfig};

fn main() {
    let report = run_identity_suite(&IdentityConfig {
        bound: 4,
        depth: 24,
    });
    for check in &report.checks {
        println!(
            "{:<28} {:>7} cases {:>3} failures",
            check.name, check.cases, check.failures
        );
    }
    println!("all passed: {}", report.all_passed());
}
