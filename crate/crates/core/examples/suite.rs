//! Runs the built-in checks on every named example table.
//!
//! `cargo run --example suite`

use semiconj::conjugacy::{theorem_suite, Status};
use semiconj::constructors::fixtures;

fn main() {
    for f in fixtures() {
        let rep = theorem_suite(&f.semigroup);
        println!("{}: {} checks, {} failures", f.id, rep.checks.len(), rep.failures().len());
        for c in rep.checks.iter().filter(|c| c.status != Status::Pass) {
            println!("  {:?} {} {}", c.status, c.name, c.detail);
        }
    }
}
