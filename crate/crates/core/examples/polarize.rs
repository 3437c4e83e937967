//! Linearize every identity (x^p, x^q, x^r) = 0 and print the components.

use nalab::freealg::{polarize, pretty, Triple};

fn main() {
    for t in Triple::all() {
        let f = polarize(t);
        for m in 1..t.total() {
            let c = f.component(m).unwrap();
            println!("({t}.{m})  {}", pretty(c));
            println!("         = {}", f.display_component(m));
        }
    }
}
