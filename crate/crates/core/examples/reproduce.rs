//! Run the full reproduction suite and print failing rows.

use nalab::identities::{reproduction_suite, Options};

fn main() {
    let r = reproduction_suite(&Options::default()).unwrap();
    for row in r.failures() {
        println!("FAIL {}: {}", row.id, row.detail);
    }
    println!("{} checks, passed: {}", r.rows.len(), r.passed());
}
