//! Counts monoids with zero divisors by order and classifies their
//! c-conjugacy, under both duplicate conventions.
//!
//! `cargo run --release --example table1 -- 5`

use semiconj::enumerate::table1;

fn main() {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let rows = table1(n_max, n_max > 5).expect("order within limits");
    println!("{:>3} {:>22} {:>22}", "n", "equivalence", "isomorphism");
    for r in rows {
        let e = r.equivalence;
        let i = r.isomorphism;
        println!(
            "{:>3} {:>8} {:>6} {:>6} {:>8} {:>6} {:>6}   opposite disagreements: {}",
            r.n, e.monoids, e.c_identity, e.c_universal_nonzero, i.monoids, i.c_identity, i.c_universal_nonzero,
            e.opposite_disagreements
        );
    }
}
