use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// The two free generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
}

impl Var {
    pub fn swapped(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "x",
            Var::Y => "y",
        })
    }
}

/// A nonassociative word: a binary tree over `x`, `y` and the unit `1`.
///
/// Built only through [`Term::product`], which drops unit factors, so a
/// product node never has `1` as a child.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Unit,
    Var(Var),
    Product(Arc<Product>),
}

#[derive(PartialEq, Eq, Hash)]
pub struct Product {
    left: Term,
    right: Term,
    x_deg: u32,
    y_deg: u32,
}

impl Term {
    pub fn x() -> Term {
        Term::Var(Var::X)
    }

    pub fn y() -> Term {
        Term::Var(Var::Y)
    }

    /// `left * right`, absorbing unit factors.
    pub fn product(left: Term, right: Term) -> Term {
        match (&left, &right) {
            (Term::Unit, _) => right,
            (_, Term::Unit) => left,
            _ => {
                let x_deg = left.x_degree() + right.x_degree();
                let y_deg = left.y_degree() + right.y_degree();
                Term::Product(Arc::new(Product {
                    left,
                    right,
                    x_deg,
                    y_deg,
                }))
            }
        }
    }

    pub fn factors(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Product(p) => Some((&p.left, &p.right)),
            _ => None,
        }
    }

    pub fn x_degree(&self) -> u32 {
        match self {
            Term::Unit => 0,
            Term::Var(Var::X) => 1,
            Term::Var(Var::Y) => 0,
            Term::Product(p) => p.x_deg,
        }
    }

    pub fn y_degree(&self) -> u32 {
        match self {
            Term::Unit => 0,
            Term::Var(Var::X) => 0,
            Term::Var(Var::Y) => 1,
            Term::Product(p) => p.y_deg,
        }
    }

    /// Number of variable leaves.
    pub fn leaf_degree(&self) -> u32 {
        self.x_degree() + self.y_degree()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x_degree(),
            Var::Y => self.y_degree(),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Term::Unit)
    }

    pub fn swap_variables(&self) -> Term {
        match self {
            Term::Unit => Term::Unit,
            Term::Var(v) => Term::Var(v.swapped()),
            Term::Product(p) => Term::product(p.left.swap_variables(), p.right.swap_variables()),
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            Term::Unit => 0,
            Term::Var(Var::X) => 1,
            Term::Var(Var::Y) => 2,
            Term::Product(_) => 3,
        }
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors().is_some() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Canonical order: by leaf degree, then `1 < x < y < products`, products
/// compared left factor first.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaf_degree()
            .cmp(&other.leaf_degree())
            .then_with(|| self.kind_rank().cmp(&other.kind_rank()))
            .then_with(|| match (self, other) {
                (Term::Product(a), Term::Product(b)) => {
                    a.left.cmp(&b.left).then_with(|| a.right.cmp(&b.right))
                }
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Words print by juxtaposition with composite factors parenthesized:
/// `(xx)x`, `x(yx)`, `(xx)(yy)`.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Unit => f.write_str("1"),
            Term::Var(v) => write!(f, "{v}"),
            Term::Product(p) => {
                p.left.fmt_factor(f)?;
                p.right.fmt_factor(f)
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All words with `n` leaves, every leaf equal to `v`, in canonical order.
/// There are Catalan(n-1) of them.
pub fn words_in(v: Var, n: u32) -> Vec<Term> {
    fn go(v: Var, n: u32) -> Vec<Term> {
        if n == 1 {
            return vec![Term::Var(v)];
        }
        let mut out = Vec::new();
        for k in 1..n {
            let lefts = go(v, k);
            let rights = go(v, n - k);
            for l in &lefts {
                for r in &rights {
                    out.push(Term::product(l.clone(), r.clone()));
                }
            }
        }
        out
    }
    assert!(n >= 1, "words need at least one leaf");
    let mut out = go(v, n);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_is_absorbed() {
        let t = Term::product(Term::Unit, Term::x());
        assert_eq!(t, Term::x());
        let t = Term::product(Term::product(Term::x(), Term::Unit), Term::Unit);
        assert_eq!(t, Term::x());
    }

    #[test]
    fn printing() {
        let xx = Term::product(Term::x(), Term::x());
        assert_eq!(xx.to_string(), "xx");
        assert_eq!(Term::product(xx.clone(), Term::x()).to_string(), "(xx)x");
        assert_eq!(Term::product(xx.clone(), xx).to_string(), "(xx)(xx)");
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| words_in(Var::X, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn order_is_by_degree_first() {
        let xx = Term::product(Term::x(), Term::x());
        assert!(Term::Unit < Term::x());
        assert!(Term::y() < xx);
        let a = Term::product(xx.clone(), Term::x());
        let b = Term::product(Term::x(), xx);
        assert!(b < a);
    }
}
