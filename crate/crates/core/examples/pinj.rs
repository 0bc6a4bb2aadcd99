//! Partial injections: decomposition into cycles and chains, composition,
//! and c-conjugacy in the symmetric inverse monoid.
//!
//! `cargo run --example pinj`

use semiconj::conjugacy::c_conjugacy;
use semiconj::pinj::{c_oracle, format_pieces, symmetric_inverse_monoid, PartialInjection};

fn main() {
    let f: PartialInjection = "9; 2 5 - 4 8 7 - 1 -".parse().expect("literal");
    println!("{f} = {}", format_pieces(&f.decompose()));
    println!("type {:?}", f.cc_type());
    println!("f·f = {}", f.compose(&f).expect("same order"));
    println!("f⁻¹ = {}", f.inverse());

    let (s, codec) = symmetric_inverse_monoid(3).expect("small order");
    let c = c_conjugacy(&s);
    println!("I_3 has {} elements and {} c-classes", s.order(), c.num_classes());
    let agree = (0..s.order())
        .all(|x| (0..s.order()).all(|y| c.same_class(x, y) == c_oracle(codec.decode(x), codec.decode(y))));
    println!("table and r-homomorphism criterion agree: {agree}");
}
