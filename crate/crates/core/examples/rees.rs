//! Random Rees matrix semigroups, with and without zero, and their
//! conjugacy relations.
//!
//! `cargo run --example rees -- 7`

use semiconj::conjugacy::{c_conjugacy, o_conjugacy, p_relation};
use semiconj::constructors::{rees, rees_zero, ReesSpec};

fn main() {
    let seed = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let spec = ReesSpec::random(seed, 4, 3, false);
    let s = rees(&spec).expect("valid sandwich");
    println!(
        "M(G; {}, {}) over a group of order {}: order {}",
        spec.i_count, spec.lambda_count, spec.group.order(), s.order()
    );
    println!("  p transitive {}, p* = o {}", p_relation(&s).is_transitive(), p_relation(&s).closure() == o_conjugacy(&s));

    let spec = ReesSpec::random(seed, 4, 3, true);
    let s = rees_zero(&spec).expect("valid sandwich");
    println!("0-variant with sandwich {:?}: order {}", spec.sandwich, s.order());
    println!("  o {}\n  c {}", o_conjugacy(&s), c_conjugacy(&s));
}
