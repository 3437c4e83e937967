//! Property matrix of the catalog algebras.

use nalab::catalog;
use nalab::identities::{property_report, Options, Property};

const LABELS: [&str; 12] = ["as", "al", "fl", "pa", "pc", "tpa", "x2x", "x2^3", "q", "lu", "ru", "u"];

fn main() {
    let options = Options::default();
    print!("{:<4}", "");
    for l in LABELS {
        print!(" {l:>4}");
    }
    println!("  degree");
    for a in catalog::all() {
        let r = property_report(&a, &options).unwrap();
        print!("{:<4}", a.name());
        for p in Property::ALL {
            print!(" {:>4}", if r.value(p) { "+" } else { "." });
        }
        println!("  {}", a.degree());
    }
    println!();
    for (l, p) in LABELS.iter().zip(Property::ALL) {
        println!("{l:>4} = {p}");
    }
}
