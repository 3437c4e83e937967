//! Check the eight identities on the dimension-8 algebras with both
//! backends, printing a witness where one fails.

use std::time::Instant;

use nalab::algebra::Backend;
use nalab::catalog;
use nalab::freealg::Triple;
use nalab::identities::check_pqr;

fn main() {
    for name in ["O", "*O", "⋆O", "P"] {
        let a = catalog::lookup(name).unwrap();
        for t in Triple::all() {
            let start = Instant::now();
            let s = check_pqr(&a, t, Backend::Symbolic).unwrap();
            let m = check_pqr(&a, t, Backend::Multilinear).unwrap();
            assert_eq!(s.holds, m.holds);
            let mut line = format!("{name:<3} ({t})  {:<5}", s.holds);
            if let Some(w) = &s.witness {
                line += &format!("  x = {}, value = {}", a.format(&w.x), a.format(&w.value));
            }
            println!("{line}  [{:.1?}]", start.elapsed());
        }
    }
}
