//! Define an algebra in JSON, load it and run the full report on it.
//!
//! The algebra is C with the product x*y = conj(x) conj(y) written out
//! by hand.

use nalab::catalog::{self, AlgebraSpec};
use nalab::identities::{hierarchy_report, Options};

const SPEC: &str = r#"{
  "name": "C-bar",
  "dim": 2,
  "field": "Q",
  "basis": ["e", "i"],
  "constants": [
    [0, 0, 0, "1"],
    [0, 1, 1, "-1"],
    [1, 0, 1, "-1"],
    [1, 1, 0, "-1"]
  ]
}"#;

fn main() {
    let a = AlgebraSpec::from_json(SPEC).unwrap().load().unwrap();
    assert_eq!(a, catalog::lookup("⋆C").unwrap());
    let h = hierarchy_report(&a, &Options::default()).unwrap();
    for v in &h.report.properties {
        println!("{:<18} {:<5} {}", v.property.name(), v.value, v.mode);
    }
    for e in &h.edges {
        println!("{} => {}: {:?}", e.edge.premise, e.edge.conclusion, e.verdict);
    }
    println!("\n{}", AlgebraSpec::save(&catalog::lookup("H").unwrap()).to_json());
}
