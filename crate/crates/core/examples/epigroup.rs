//! Index, period, pseudo-inverses and variety membership.
//!
//! `cargo run --example epigroup -- F6_STRONGC`

use semiconj::constructors::fixture;
use semiconj::epigroup::{pinv_identity_suite, variety_membership, EpigroupProfile};

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "F6_STRONGC".into());
    let s = fixture(&id).expect("known fixture").semigroup;
    let prof = EpigroupProfile::new(&s);
    println!("{:>3} {:>5} {:>6} {:>3} {:>3} {:>3}", "a", "index", "period", "a'", "a''", "a^w");
    for (a, d) in prof.elements.iter().enumerate() {
        println!(
            "{:>3} {:>5} {:>6} {:>3} {:>3} {:>3}",
            a, d.index, d.period, d.pinv, d.double_pinv, d.omega
        );
    }
    println!("{:?}", variety_membership(&s));
    println!("pseudo-inverse identities hold: {}", pinv_identity_suite(&s).ok());
}
