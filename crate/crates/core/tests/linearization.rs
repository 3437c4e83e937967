use std::collections::BTreeMap;

use nalab::exactmath::Rational;
use nalab::freealg::{polarize, words_in, FreePoly, Triple, Var};

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[test]
fn components_collapse_to_binomial_multiples() {
    // Putting y = x in ((x+λy)^p, ...) gives (1+λ)^n (x^p, x^q, x^r).
    let at_x = BTreeMap::from([(Var::X, FreePoly::x()), (Var::Y, FreePoly::x())]);
    for t in Triple::all() {
        let n = t.total();
        let f = polarize(t);
        for m in 1..n {
            let s = f.component(m).unwrap().substitute(&at_x).unwrap();
            assert_eq!(s, t.identity().scale(&Rational::from_integer(binomial(n, m))), "({t}.{m})");
        }
    }
}

#[test]
fn word_counts_are_catalan() {
    let catalan = [1, 1, 2, 5, 14, 42, 132];
    for (n, c) in catalan.iter().enumerate() {
        assert_eq!(words_in(Var::X, n as u32 + 1).len(), *c);
    }
}

#[test]
fn component_counts() {
    for t in Triple::all() {
        assert_eq!(polarize(t).components.len() as u32, t.total() - 1);
    }
}
