//! The free nonassociative algebra on `x` and `y`, optionally with a unit.
//!
//! Words are binary trees ([`Term`]), polynomials are rational combinations
//! of words ([`FreePoly`]). On top of that sit the linearization of
//! `(x^p, x^q, x^r)` ([`polarize`]), the hand-encoded tables it is checked
//! against ([`golden_rows`]) and compiled evaluation plans ([`EvalPlan`]).

mod golden;
mod plan;
mod polarize;
mod poly;
mod render;
mod term;

pub use golden::{golden_row, golden_rows, golden_table, parse_row, GoldenRow};
pub use plan::{EvalPlan, PlanNode};
pub use polarize::{polarize, power, Atom, PolarizedIdentity, Triple};
pub use poly::{associator, commutator, jordan, FreePoly};
pub use render::pretty;
pub use term::{words_in, Product, Term, Var};

use std::collections::BTreeMap;

use crate::exactmath::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeAlgError {
    #[error("the unit symbol needs unital mode")]
    UnitInNonUnitalMode,
    #[error("no value assigned to variable {0}")]
    UnassignedVariable(Var),
    #[error("exponents must lie in {{1, 2}}, got ({0},{1},{2})")]
    BadExponent(u8, u8, u8),
    #[error("cannot read {0:?} as an exponent triple p,q,r")]
    BadTriple(String),
    #[error("component f_{m} out of range 1..={max}")]
    ComponentOutOfRange { m: u32, max: u32 },
    #[error("no table row ({triple}.{m})")]
    RowNotInTables { triple: Triple, m: u32 },
    #[error("syntax error near {0:?}")]
    Syntax(String),
}

/// The five words of degree 4 in `x`, in the order
/// `(x·x²)x, (x²·x)x, x(x·x²), x(x²·x), x²·x²`.
pub fn degree4_basis() -> [Term; 5] {
    let x = Term::x;
    let x2 = || Term::product(x(), x());
    let x_x2 = || Term::product(x(), x2());
    let x2_x = || Term::product(x2(), x());
    [
        Term::product(x_x2(), x()),
        Term::product(x2_x(), x()),
        Term::product(x(), x_x2()),
        Term::product(x(), x2_x()),
        Term::product(x2(), x2()),
    ]
}

/// Degree-4 consequences of `(x,x,x) = 0`: `x·(x,x,x)`, `(x,x,x)·x` and the
/// first linearization of `(x,x,x)` at `y = x²`.
pub fn degree4_consequences() -> [FreePoly; 3] {
    let x = FreePoly::x();
    let tpa = associator(&x, &x, &x);
    let f1 = polarize(Triple { p: 1, q: 1, r: 1 })
        .components
        .swap_remove(0);
    let assignment = BTreeMap::from([(Var::X, x.clone()), (Var::Y, &x * &x)]);
    let sub = f1.substitute(&assignment).expect("both variables assigned");
    [&x * &tpa, &tpa * &x, sub]
}

/// Coordinates of `poly` in the given words, or `None` if it uses others.
pub fn coordinates(poly: &FreePoly, basis: &[Term]) -> Option<Vec<Rational>> {
    if poly.terms().any(|(t, _)| !basis.contains(t)) {
        return None;
    }
    Some(basis.iter().map(|t| poly.coefficient(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree4_space() {
        let mut words = words_in(Var::X, 4);
        let mut basis = degree4_basis().to_vec();
        words.sort();
        basis.sort();
        assert_eq!(words, basis);
    }

    #[test]
    fn consequences_expand_as_expected() {
        let [a, b, c, d, _] = degree4_basis().map(FreePoly::term);
        let [g1, g2, g3] = degree4_consequences();
        assert_eq!(g1, &d - &c);
        assert_eq!(g2, &b - &a);
        assert_eq!(g3, &(&a + &b) - &(&c + &d));
    }

    #[test]
    fn symmetry_and_grading() {
        for t in Triple::all() {
            let f = polarize(t);
            let n = t.total();
            for m in 1..n {
                let fm = f.component(m).unwrap();
                assert_eq!(fm.bidegree(), Some((n - m, m)));
                assert_eq!(&fm.swap_variables(), f.component(n - m).unwrap());
            }
        }
    }

    #[test]
    fn expansion_at_one() {
        for t in Triple::all() {
            let f = polarize(t);
            let lhs = t.identity_in(&(&FreePoly::x() + &FreePoly::y()));
            let mut rhs = &t.identity() + &t.identity_in(&FreePoly::y());
            for c in &f.components {
                rhs = &rhs + c;
            }
            assert_eq!(lhs, rhs, "{t}");
        }
    }

    #[test]
    fn golden_cross_check() {
        for row in golden_rows() {
            let f = polarize(row.triple);
            assert_eq!(f.component(row.m).unwrap(), &row.comparison_target());
            assert_eq!(row.is_printed_duplicate(), row.poly != row.comparison_target());
        }
    }

    #[test]
    fn substitution_examples() {
        let x = FreePoly::x();
        let tpa = associator(&x, &x, &x);
        let one = BTreeMap::from([(Var::X, x.clone()), (Var::Y, FreePoly::unit())]);

        let f = polarize(Triple { p: 1, q: 1, r: 2 });
        let s = f.component(1).unwrap().clone().into_unital().substitute(&one).unwrap();
        assert_eq!(s, tpa.scale(&Rational::from_integer(2)));

        let f = polarize(Triple { p: 2, q: 2, r: 2 });
        let s = f.component(3).unwrap().clone().into_unital().substitute(&one).unwrap();
        assert_eq!(s, tpa.scale(&Rational::from_integer(8)));

        let sq = BTreeMap::from([(Var::X, x.clone()), (Var::Y, &x * &x)]);
        let f = polarize(Triple { p: 1, q: 1, r: 1 });
        let s = f.component(1).unwrap().substitute(&sq).unwrap();
        assert_eq!(s, commutator(&jordan(&x, &(&x * &x)), &x));
    }

    #[test]
    fn spec_polarize_112_f3() {
        let f = polarize(Triple { p: 1, q: 1, r: 2 });
        let first = golden_table(Triple { p: 1, q: 1, r: 2 }, 1).unwrap();
        assert_eq!(f.component(3).unwrap(), &first.swap_variables());
    }

    #[test]
    fn term_op_examples() {
        let (x, y) = (FreePoly::x(), FreePoly::y());
        let x2 = &x * &x;
        assert_eq!(jordan(&x, &x), x2.scale(&Rational::from_integer(2)));
        assert!(commutator(&x2, &x2).is_zero());
        assert_eq!(jordan(&x, &y), &(&x * &y) + &(&y * &x));
        let u = FreePoly::unit();
        assert!(associator(&u, &x, &x).is_zero());
    }
}
