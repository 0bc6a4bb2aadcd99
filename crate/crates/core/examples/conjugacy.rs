//! Every conjugacy relation on each named example table.
//!
//! `cargo run --example conjugacy`

use semiconj::conjugacy::conjugacy_report;
use semiconj::constructors::fixtures;

fn main() {
    for f in fixtures() {
        let r = conjugacy_report(&f.semigroup);
        println!("{} (order {})", f.id, f.semigroup.order());
        println!("  p   {:?}", r.p.edges());
        println!("  p*  {}", r.p_star);
        println!("  tr  {}", r.tr);
        println!("  o   {}", r.o);
        println!("  c   {}", r.c);
        println!("  so  {:?}", r.so.edges());
        println!("  sc  {:?}", r.sc.edges());
        println!("  inclusions hold: {}", r.inclusion_diagram_ok);
    }
}
