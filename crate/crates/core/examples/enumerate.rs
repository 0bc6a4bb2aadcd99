//! Counts semigroups and monoids of small order up to isomorphism and up
//! to isomorphism or anti-isomorphism.
//!
//! `cargo run --release --example enumerate -- 4`

use semiconj::enumerate::{enumerate, Dedupe, EnumConstraints};

fn main() {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "equivalence", "isomorphism", "monoids");
    for n in 1..=n_max {
        let count = |dedupe, monoid| {
            let mut c = EnumConstraints::semigroups(n, dedupe);
            c.require_monoid = monoid;
            enumerate(&c, |_| {}).expect("order within limits")
        };
        println!(
            "{:>3} {:>12} {:>12} {:>12}",
            n,
            count(Dedupe::Equivalence, false),
            count(Dedupe::Iso, false),
            count(Dedupe::Equivalence, true)
        );
    }
}
