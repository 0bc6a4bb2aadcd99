//! Variants `x ∘ y = xay` of a completely regular semigroup and the
//! formula for their pseudo-inverse.
//!
//! `cargo run --example variants`

use semiconj::constructors::{rectangular_band, symmetric_group, unary_variant_check, variant};
use semiconj::epigroup::variety_membership;

fn main() {
    for (name, s) in [("B(2,3)", rectangular_band(2, 3)), ("S3", symmetric_group(3).unwrap())] {
        for a in 0..s.order() {
            let v = variant(&s, a).expect("element in range");
            let rep = unary_variant_check(&s, a).expect("element in range");
            println!(
                "{name} at {a}: in W {}, x* {:?}, mismatches {:?}, ok {}",
                variety_membership(&v).in_w,
                rep.star,
                rep.mismatches,
                rep.ok()
            );
        }
    }
}
