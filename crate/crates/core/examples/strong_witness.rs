//! Mutually inverse conjugators built from arbitrary ones.
//!
//! `cargo run --example strong_witness -- F6_STRONGC`

use semiconj::constructors::fixture;
use semiconj::conjugacy::{conjugator_sets, strong_c_witness, strong_o_witness};
use semiconj::ExtElement;

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "F6_STRONGC".into());
    let s = fixture(&id).expect("known fixture").semigroup;
    let ext: Vec<ExtElement> = s.ext_elements().collect();
    let m = |x, y| s.mul_ext(x, y);
    let sets = conjugator_sets(&s);
    // conjugators from P¹ first, so the c-variant applies when it can
    let ranked = |a: usize| {
        let mut v = ext.clone();
        v.sort_by_key(|&g| !sets[a].contains(&s, g));
        v
    };
    for a in 0..s.order() {
        for b in a + 1..s.order() {
            let (ea, eb) = (ExtElement::Elem(a), ExtElement::Elem(b));
            let c = ranked(a).into_iter().find(|&c| m(ea, c) == m(c, eb));
            let d = ranked(b).into_iter().find(|&d| m(eb, d) == m(d, ea));
            if let (Some(c), Some(d)) = (c, d) {
                let o = strong_o_witness(&s, a, b, c, d);
                let cw = strong_c_witness(&s, a, b, c, d);
                println!("{a} ~ {b} via c={c}, d={d}: o {o:?}, c {cw:?}");
            }
        }
    }
}
