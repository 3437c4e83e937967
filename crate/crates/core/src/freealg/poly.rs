use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::{FreeAlgError, Term, Var};
use crate::exactmath::Rational;

/// A rational linear combination of words in the free (optionally unital)
/// nonassociative algebra on `x`, `y`.
///
/// Equality and hashing look only at the term map; the unital flag records
/// whether the unit may appear.
#[derive(Clone, Default)]
pub struct FreePoly {
    unital: bool,
    terms: BTreeMap<Term, Rational>,
}

impl PartialEq for FreePoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for FreePoly {}

impl Hash for FreePoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl FreePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(t: Term) -> Self {
        Self::monomial(Rational::one(), t)
    }

    pub fn monomial(c: Rational, t: Term) -> Self {
        let mut p = FreePoly {
            unital: t.is_unit(),
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            p.terms.insert(t, c);
        }
        p
    }

    pub fn x() -> Self {
        Self::term(Term::x())
    }

    pub fn y() -> Self {
        Self::term(Term::y())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Term::Var(v))
    }

    /// The unit `1`; unital mode.
    pub fn unit() -> Self {
        Self::term(Term::Unit)
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn into_unital(mut self) -> Self {
        self.unital = true;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &Term) -> Rational {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn contains_unit(&self) -> bool {
        self.terms.keys().any(Term::is_unit)
    }

    fn accumulate(&mut self, t: Term, c: Rational) {
        if c.is_zero() {
            return;
        }
        if t.is_unit() {
            self.unital = true;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return FreePoly {
                unital: self.unital,
                terms: BTreeMap::new(),
            };
        }
        FreePoly {
            unital: self.unital,
            terms: self
                .terms
                .iter()
                .map(|(t, x)| (t.clone(), x * c))
                .collect(),
        }
    }

    /// `self + c * rhs`.
    pub fn add_scaled(&self, rhs: &Self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.unital |= rhs.unital;
        for (t, x) in &rhs.terms {
            out.accumulate(t.clone(), x * c);
        }
        out
    }

    /// Bilinear product.
    pub fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = FreePoly {
            unital: self.unital || rhs.unital,
            terms: BTreeMap::new(),
        };
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.accumulate(Term::product(a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }

    /// `(x, y)`-bidegree of every term, if they all agree.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|t| (t.x_degree(), t.y_degree()));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Terms of the given `(x, y)`-bidegree.
    pub fn component(&self, x_deg: u32, y_deg: u32) -> Self {
        self.filter(|t| t.x_degree() == x_deg && t.y_degree() == y_deg)
    }

    /// Terms of the given degree in `y`.
    pub fn y_component(&self, y_deg: u32) -> Self {
        self.filter(|t| t.y_degree() == y_deg)
    }

    /// Splits into bihomogeneous components, ordered by bidegree.
    pub fn bihomogeneous_parts(&self) -> Vec<((u32, u32), FreePoly)> {
        let mut parts: BTreeMap<(u32, u32), FreePoly> = BTreeMap::new();
        for (t, c) in &self.terms {
            parts
                .entry((t.x_degree(), t.y_degree()))
                .or_insert_with(|| FreePoly {
                    unital: self.unital,
                    terms: BTreeMap::new(),
                })
                .terms
                .insert(t.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    fn filter(&self, keep: impl Fn(&Term) -> bool) -> Self {
        FreePoly {
            unital: self.unital,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut v = Vec::new();
        if self.terms.keys().any(|t| t.x_degree() > 0) {
            v.push(Var::X);
        }
        if self.terms.keys().any(|t| t.y_degree() > 0) {
            v.push(Var::Y);
        }
        v
    }

    /// Exchanges `x` and `y`.
    pub fn swap_variables(&self) -> Self {
        let mut out = FreePoly {
            unital: self.unital,
            terms: BTreeMap::new(),
        };
        for (t, c) in &self.terms {
            out.accumulate(t.swap_variables(), c.clone());
        }
        out
    }

    /// Homomorphic substitution of variables, followed by unit absorption.
    ///
    /// Substituting a polynomial containing the unit requires `self` to be in
    /// unital mode.
    pub fn substitute(&self, assignment: &BTreeMap<Var, FreePoly>) -> Result<Self, FreeAlgError> {
        if !self.unital && assignment.values().any(FreePoly::contains_unit) {
            return Err(FreeAlgError::UnitInNonUnitalMode);
        }
        let mut memo: HashMap<Term, FreePoly> = HashMap::new();
        fn go(
            t: &Term,
            assignment: &BTreeMap<Var, FreePoly>,
            memo: &mut HashMap<Term, FreePoly>,
        ) -> Result<FreePoly, FreeAlgError> {
            if let Some(p) = memo.get(t) {
                return Ok(p.clone());
            }
            let value = match t {
                Term::Unit => FreePoly::unit(),
                Term::Var(v) => assignment
                    .get(v)
                    .cloned()
                    .ok_or(FreeAlgError::UnassignedVariable(*v))?,
                Term::Product(_) => {
                    let (l, r) = t.factors().expect("product");
                    go(l, assignment, memo)?.mul_ref(&go(r, assignment, memo)?)
                }
            };
            memo.insert(t.clone(), value.clone());
            Ok(value)
        }
        let mut out = FreePoly {
            unital: self.unital,
            terms: BTreeMap::new(),
        };
        for (t, c) in &self.terms {
            let v = go(t, assignment, &mut memo)?;
            out = out.add_scaled(&v, c);
        }
        Ok(out)
    }

    /// Writes `self = c * other` if possible; `None` if not proportional or
    /// `other` is zero.
    pub fn ratio_to(&self, other: &FreePoly) -> Option<Rational> {
        let (t, c0) = other.terms.iter().next()?;
        let c = self.coefficient(t).checked_div(c0).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }
}

/// `(a b) c - a (b c)`.
pub fn associator(a: &FreePoly, b: &FreePoly, c: &FreePoly) -> FreePoly {
    let left = a.mul_ref(b).mul_ref(c);
    let right = a.mul_ref(&b.mul_ref(c));
    &left - &right
}

/// `a b - b a`.
pub fn commutator(a: &FreePoly, b: &FreePoly) -> FreePoly {
    &a.mul_ref(b) - &b.mul_ref(a)
}

/// `a b + b a`.
pub fn jordan(a: &FreePoly, b: &FreePoly) -> FreePoly {
    &a.mul_ref(b) + &b.mul_ref(a)
}

impl Add<&FreePoly> for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        self.add_scaled(rhs, &Rational::one())
    }
}

impl Sub<&FreePoly> for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self.add_scaled(rhs, &-Rational::one())
    }
}

impl Mul<&FreePoly> for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        self.scale(&-Rational::one())
    }
}

/// Raw canonical form: terms in canonical order joined by ` + ` / ` - `,
/// each an optional reduced rational coefficient followed by a space and the
/// word, e.g. `(xx)x - x(xx)` or `1/2 x(xx) + 2 (xx)x`. Zero prints as `0`.
impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for FreePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
