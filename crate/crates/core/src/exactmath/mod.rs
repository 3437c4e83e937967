//! Exact arithmetic kernel: rationals, one real quadratic extension, complex
//! intermediates, sparse multivariate polynomials and exact linear algebra.

mod complex;
pub mod linalg;
mod poly;
mod rational;
mod scalar;

use std::fmt;
use std::sync::Arc;

pub use complex::ComplexScalar;
pub use linalg::{poly_rank, span_membership, AffineSolution, Matrix, SpanMembership};
pub use poly::{Monomial, MultiPoly, PolyRing};
pub use rational::Rational;
pub use scalar::{scalar_arith, ArithOp, FieldTag, QuadExt, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: sqrt{0} and sqrt{1} live in different fields")]
    FieldMismatch(u32, u32),
    #[error("radicand {0} is not a square-free integer >= 2")]
    BadRadicand(u32),
    #[error("polynomial division leaves a remainder")]
    NotDivisible,
    #[error("malformed scalar {0:?}")]
    Parse(String),
}

/// Coefficient rings that algebra elements can have coordinates in: the
/// scalar field itself, or a polynomial ring over it (generic elements).
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    type Ctx: Clone;

    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn from_scalar(ctx: &Self::Ctx, s: &Scalar) -> Self;
    fn ctx(&self) -> Self::Ctx;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    /// `self += factor * rhs`.
    fn add_scaled(&mut self, rhs: &Self, factor: &Scalar);
    /// Rank of a matrix over this ring's fraction field.
    fn rank(rows: &[Vec<Self>]) -> usize;

    /// Whether `candidate` is outside the span of the linearly independent
    /// `rows`.
    fn extends_rank(rows: &[Vec<Self>], candidate: &[Self]) -> bool {
        let mut all = rows.to_vec();
        all.push(candidate.to_vec());
        Self::rank(&all) > rows.len()
    }
}

impl Coeff for Scalar {
    type Ctx = ();

    fn zero_in(_: &()) -> Self {
        Scalar::zero()
    }
    fn from_scalar(_: &(), s: &Scalar) -> Self {
        s.clone()
    }
    fn ctx(&self) {}
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
    fn add_scaled(&mut self, rhs: &Self, factor: &Scalar) {
        *self = &*self + &(rhs * factor);
    }
    fn rank(rows: &[Vec<Self>]) -> usize {
        linalg::rank(rows)
    }
}

impl Coeff for MultiPoly {
    type Ctx = Arc<PolyRing>;

    fn zero_in(ring: &Arc<PolyRing>) -> Self {
        MultiPoly::zero(ring)
    }
    fn from_scalar(ring: &Arc<PolyRing>, s: &Scalar) -> Self {
        MultiPoly::constant(ring, s.clone())
    }
    fn ctx(&self) -> Arc<PolyRing> {
        self.ring().clone()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
    fn scale(&self, s: &Scalar) -> Self {
        MultiPoly::scale(self, s)
    }
    fn add_scaled(&mut self, rhs: &Self, factor: &Scalar) {
        *self = MultiPoly::add_scaled(self, rhs, factor);
    }
    fn rank(rows: &[Vec<Self>]) -> usize {
        poly_rank(rows)
    }

    /// Specializing can only lower the rank, so full rank at one point
    /// settles independence; otherwise fall back to exact elimination.
    fn extends_rank(rows: &[Vec<Self>], candidate: &[Self]) -> bool {
        let Some(ring) = candidate.first().map(|p| p.ring().clone()) else {
            return false;
        };
        let point: Vec<Scalar> = (0..ring.nvars())
            .map(|i| Scalar::from_integer(((i as i64 * 7919 + 13) % 97) - 48))
            .collect();
        let special: Vec<Vec<Scalar>> = rows
            .iter()
            .chain(std::iter::once(&candidate.to_vec()))
            .map(|r| r.iter().map(|p| p.eval(&point)).collect())
            .collect();
        if linalg::rank(&special) > rows.len() {
            return true;
        }
        let mut all = rows.to_vec();
        all.push(candidate.to_vec());
        poly_rank(&all) > rows.len()
    }
}
