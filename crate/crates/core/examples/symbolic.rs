//! Cycle-chain-ray types of partial injections on infinite sets.
//!
//! `cargo run --example symbolic`

use semiconj::symbolic::{c_conjugate, gamma_relations, known_pairs, CCRType};

fn main() {
    for k in known_pairs() {
        println!("{}: [{}] vs [{}] c={}", k.name, k.first, k.second, c_conjugate(&k.first, &k.second));
    }
    let a: CCRType = "omega=w upsilon=1".parse().expect("literal");
    let b: CCRType = "omega=w".parse().expect("literal");
    println!("[{a}] vs [{b}]: {:?}", gamma_relations(&a, &b).expect("full injections"));
}
