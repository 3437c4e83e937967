//! Sparse multivariate polynomials with [`Scalar`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::{MathError, Scalar};

const VARS_PER_WORD: usize = 8;
const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

/// Exponent vector, packed eight bits per variable. Variable 0 occupies the
/// most significant byte of the first word, so the derived ordering is the
/// lexicographic order on exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u64; 2]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars.div_ceil(VARS_PER_WORD).max(1)))
    }

    fn slot(var: usize) -> (usize, u32) {
        (var / VARS_PER_WORD, (7 - (var % VARS_PER_WORD) as u32) * 8)
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        let (w, shift) = Self::slot(var);
        m.0[w] |= 1u64 << shift;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        let mut m = Self::one(exps.len());
        for (v, &e) in exps.iter().enumerate() {
            let (w, shift) = Self::slot(v);
            m.0[w] |= (e as u64) << shift;
        }
        m
    }

    pub fn exponent(&self, var: usize) -> u8 {
        let (w, shift) = Self::slot(var);
        (self.0[w] >> shift) as u8
    }

    pub fn degree(&self) -> u32 {
        self.0
            .iter()
            .map(|w| w.to_be_bytes().iter().map(|&b| b as u32).sum::<u32>())
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn mul(&self, rhs: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(&a, &b)| {
                    assert!((a | b) & HIGH_BITS == 0, "monomial exponent overflow");
                    a + b
                })
                .collect(),
        )
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| {
            a.to_be_bytes()
                .iter()
                .zip(b.to_be_bytes().iter())
                .all(|(x, y)| x <= y)
        })
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| b - a)
                .collect(),
        )
    }
}

/// Named variables of a polynomial ring.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new(names: Vec<String>) -> Arc<Self> {
        Arc::new(PolyRing { names })
    }

    /// Variables `prefix0 .. prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Arc<Self> {
        Self::new((0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A polynomial: sorted list of monomials with nonzero coefficients.
#[derive(Clone)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn var(ring: &Arc<PolyRing>, v: usize) -> Self {
        assert!(v < ring.nvars(), "variable index out of range");
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), v), Scalar::one())],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut acc: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        for (m, c) in terms {
            let e = acc.entry(m).or_default();
            *e = &*e + &c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<PolyRing>, acc: FxHashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.last()
    }

    fn check_ring(&self, rhs: &Self) {
        assert!(
            same_ring(&self.ring, &rhs.ring),
            "polynomials from different rings"
        );
    }

    fn merge(&self, rhs: &Self, factor: Option<&Scalar>) -> Self {
        self.check_ring(rhs);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |c: &Scalar| match factor {
            Some(f) => c * f,
            None => c.clone(),
        };
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = scaled(cb);
                    if !c.is_zero() {
                        out.push((mb.clone(), c));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + &scaled(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &rhs.terms[j..] {
            let c = scaled(c);
            if !c.is_zero() {
                out.push((m.clone(), c));
            }
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self + factor * rhs`.
    pub fn add_scaled(&self, rhs: &Self, factor: &Scalar) -> Self {
        if factor.is_zero() || rhs.is_zero() {
            return self.clone();
        }
        if factor.is_one() {
            return self.merge(rhs, None);
        }
        self.merge(rhs, Some(factor))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        if c.is_one() {
            return self.clone();
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ring);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut acc: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        acc.reserve(self.terms.len() * rhs.terms.len() / 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let v = e.get_mut();
                        *v = &*v + &c;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.nvars(), "point has wrong arity");
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(v) {
                    t = &t * x;
                }
            }
            total = &total + &t;
        }
        total
    }

    /// Exact quotient `self / divisor`; fails when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, MathError> {
        self.check_ring(divisor);
        let (lm, lc) = divisor.leading().ok_or(MathError::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            if !lm.divides(&m) {
                return Err(MathError::NotDivisible);
            }
            let qm = lm.quotient_of(&m);
            let qc = &c * &lc_inv;
            let shifted = MultiPoly {
                ring: self.ring.clone(),
                terms: divisor
                    .terms
                    .iter()
                    .map(|(dm, dc)| (dm.mul(&qm), dc * &qc))
                    .collect(),
            };
            rem = rem.add_scaled(&shifted, &-Scalar::one());
            quotient.push((qm, qc));
        }
        quotient.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, None)
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_scaled(rhs, &-Scalar::one())
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if !c.is_one() || m.is_one() {
                factors.push(format!("({c})"));
            }
            for (v, name) in self.ring.names.iter().enumerate() {
                match m.exponent(v) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
