//! The two general consequences: (x,x,x) = 0 forces (x,x^2,x) = 0, and in
//! a unital algebra each identity forces (x,x,x) = 0.

use nalab::freealg::{pretty, Triple};
use nalab::identities::{verify_prop1, verify_prop2};

fn main() {
    let r = verify_prop1();
    println!("(x,x^2,x) =");
    for (c, g) in r.coefficients.iter().zip(&r.consequences) {
        println!("  {c:>5} * [{}]", pretty(g));
    }
    for t in Triple::all().into_iter().filter(|t| t.total() > 3) {
        let r = verify_prop2(t).unwrap();
        println!("({t}): f_{} at y = e is {} (x,x,x)", r.m, r.constant);
    }
}
