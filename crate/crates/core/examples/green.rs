//! Green's relations, idempotents and the natural order of a table.
//!
//! `cargo run --example green -- F4_56`

use semiconj::constructors::fixture;
use semiconj::green::{green, idempotents, is_antichain, natural_order, regularity};

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "F4_56".into());
    let s = fixture(&id).expect("known fixture").semigroup;
    let g = green(&s);
    println!("L {}\nR {}\nH {}\nD {}\nJ {}", g.l, g.r, g.h, g.d, g.j);
    println!("idempotents {:?}", idempotents(&s));
    println!("natural order {:?}", natural_order(&s));
    println!("nonzero idempotents form an antichain: {}", is_antichain(&s, true));
    println!("{:?}", regularity(&s));
}
