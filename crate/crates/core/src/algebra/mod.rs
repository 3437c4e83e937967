//! Finite-dimensional algebras given by structure constants.

mod closure;
mod eval;
mod multilinear;

pub use closure::{DivisionReport, Subalgebra};
pub use eval::{Backend, IdentityCheck, Witness};

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactmath::linalg::solve_affine;
use crate::exactmath::{AffineSolution, Coeff, FieldTag, Matrix, MultiPoly, PolyRing, Scalar};
use crate::freealg::{FreeAlgError, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("an algebra needs dimension at least 1")]
    EmptyAlgebra,
    #[error("expected {expected} basis names, got {got}")]
    BasisNames { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constant index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("structure constant ({i},{j},{k}) given twice")]
    DuplicateConstant { i: usize, j: usize, k: usize },
    #[error("scalar {value} does not lie in {field}")]
    FieldMismatch { value: String, field: FieldTag },
    #[error("the polynomial uses the unit but the algebra has no two-sided unit")]
    UnitRequired,
    #[error("no element assigned to variable {0}")]
    UnassignedVariable(Var),
    #[error(transparent)]
    Free(#[from] FreeAlgError),
}

/// Coordinates in the basis of an algebra: scalars for concrete elements,
/// polynomials for generic ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element<C = Scalar> {
    pub coords: Vec<C>,
}

/// An element whose coordinates are polynomials.
pub type GenericElement = Element<MultiPoly>;

impl<C: Coeff> Element<C> {
    pub fn new(coords: Vec<C>) -> Self {
        Element { coords }
    }

    pub fn zero(ctx: &C::Ctx, dim: usize) -> Self {
        Element {
            coords: vec![C::zero_in(ctx); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(C::is_zero)
    }

    /// `self += factor * rhs`.
    pub fn add_scaled(&mut self, rhs: &Self, factor: &Scalar) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            a.add_scaled(b, factor);
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Element {
            coords: self.coords.iter().map(|c| c.scale(factor)).collect(),
        }
    }
}

impl Element<Scalar> {
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![Scalar::zero(); dim];
        coords[i] = Scalar::one();
        Element { coords }
    }

    pub fn specialize(generic: &GenericElement, point: &[Scalar]) -> Self {
        Element {
            coords: generic.coords.iter().map(|p| p.eval(point)).collect(),
        }
    }
}

impl std::ops::Add for &Element<Scalar> {
    type Output = Element<Scalar>;
    fn add(self, rhs: &Element<Scalar>) -> Element<Scalar> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl std::ops::Sub for &Element<Scalar> {
    type Output = Element<Scalar>;
    fn sub(self, rhs: &Element<Scalar>) -> Element<Scalar> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_integer(-1));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Solutions of `e b_j = b_j` (left) and `b_j e = b_j` (right) for all `j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitReport {
    pub left_units: Option<AffineSolution>,
    pub right_units: Option<AffineSolution>,
    pub two_sided: Option<Element>,
}

impl UnitReport {
    pub fn has_left_unit(&self) -> bool {
        self.left_units.is_some()
    }

    pub fn has_right_unit(&self) -> bool {
        self.right_units.is_some()
    }

    pub fn has_unit(&self) -> bool {
        self.two_sided.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    name: String,
    field: FieldTag,
    basis_names: Vec<String>,
    /// `table[i * dim + j]` lists the nonzero `(k, c_ij^k)`, `k` increasing.
    table: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for StructureAlgebra {
    /// Same field, basis names and multiplication; the name is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.basis_names == other.basis_names
            && self.table == other.table
    }
}

impl StructureAlgebra {
    /// Builds an algebra from sparse constants `(i, j, k, c)` meaning
    /// `b_i b_j` has `c` as its `b_k` coordinate. Explicit zeros are dropped.
    pub fn new(
        name: impl Into<String>,
        field: FieldTag,
        basis_names: Vec<String>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(AlgebraError::EmptyAlgebra);
        }
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        let mut seen = std::collections::HashSet::new();
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::IndexOutOfRange { i, j, k, dim });
            }
            if !seen.insert((i, j, k)) {
                return Err(AlgebraError::DuplicateConstant { i, j, k });
            }
            if !field.contains(&c) {
                return Err(AlgebraError::FieldMismatch {
                    value: c.to_string(),
                    field,
                });
            }
            if !c.is_zero() {
                table[i * dim + j].push((k, c));
            }
        }
        for entry in &mut table {
            entry.sort_by_key(|(k, _)| *k);
        }
        Ok(StructureAlgebra {
            name: name.into(),
            field,
            basis_names,
            table,
        })
    }

    /// Builds an algebra from a function giving `b_i b_j` as a coordinate
    /// vector.
    pub fn from_products(
        name: impl Into<String>,
        field: FieldTag,
        basis_names: Vec<String>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_names.len();
        let mut constants = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(AlgebraError::DimensionMismatch {
                        expected: dim,
                        got: v.len(),
                    });
                }
                for (k, c) in v.into_iter().enumerate() {
                    constants.push((i, j, k, c));
                }
            }
        }
        Self::new(name, field, basis_names, constants)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Nonzero `(k, c_ij^k)` for the product `b_i b_j`.
    pub fn products(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.products(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// All nonzero constants `(i, j, k, c)` in index order.
    pub fn sparse_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.products(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(&(), self.dim())
    }

    /// A concrete element, checked against the dimension and field.
    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element, AlgebraError> {
        let e = Element::new(coords);
        self.check(&e)?;
        Ok(e)
    }

    pub fn check(&self, e: &Element) -> Result<(), AlgebraError> {
        if e.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                got: e.dim(),
            });
        }
        if let Some(c) = e.coords.iter().find(|c| !self.field.contains(c)) {
            return Err(AlgebraError::FieldMismatch {
                value: c.to_string(),
                field: self.field,
            });
        }
        Ok(())
    }

    /// The element with coordinates `prefix0, prefix1, ...` in a fresh
    /// polynomial ring.
    pub fn generic(&self, prefix: &str) -> GenericElement {
        let ring = PolyRing::indexed(prefix, self.dim());
        self.generic_in(&ring, 0)
    }

    /// The element whose `i`-th coordinate is variable `offset + i`.
    pub fn generic_in(&self, ring: &Arc<PolyRing>, offset: usize) -> GenericElement {
        Element::new(
            (0..self.dim())
                .map(|i| MultiPoly::var(ring, offset + i))
                .collect(),
        )
    }

    /// Two generic elements `x`, `y` in one ring with variables
    /// `x0.., y0..`.
    pub fn generic_pair(&self) -> (GenericElement, GenericElement) {
        let n = self.dim();
        let names = (0..n)
            .map(|i| format!("x{i}"))
            .chain((0..n).map(|i| format!("y{i}")))
            .collect();
        let ring = PolyRing::new(names);
        (self.generic_in(&ring, 0), self.generic_in(&ring, n))
    }

    fn check_dim<C>(&self, e: &Element<C>) -> Result<(), AlgebraError> {
        if e.coords.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                got: e.coords.len(),
            });
        }
        Ok(())
    }

    /// `(uv)_k = sum_ij u_i v_j c_ij^k`.
    pub fn multiply<C: Coeff>(&self, u: &Element<C>, v: &Element<C>) -> Result<Element<C>, AlgebraError> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self.mul_unchecked(u, v))
    }

    pub(crate) fn mul_unchecked<C: Coeff>(&self, u: &Element<C>, v: &Element<C>) -> Element<C> {
        let n = self.dim();
        let ctx = u.coords[0].ctx();
        let mut out: Element<C> = Element::zero(&ctx, n);
        for (i, ui) in u.coords.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.coords.iter().enumerate() {
                let entries = &self.table[i * n + j];
                if entries.is_empty() || vj.is_zero() {
                    continue;
                }
                let p = ui.mul(vj);
                for (k, c) in entries {
                    out.coords[*k].add_scaled(&p, c);
                }
            }
        }
        out
    }

    /// Matrix of `L_x` (column `j` is `x b_j`) or `R_x` (column `j` is
    /// `b_j x`).
    pub fn mult_operator(&self, x: &Element, side: Side) -> Matrix {
        let n = self.dim();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                let entries = match side {
                    Side::Left => self.products(i, j),
                    Side::Right => self.products(j, i),
                };
                for (k, c) in entries {
                    m[*k][j] = &m[*k][j] + &(xi * c);
                }
            }
        }
        m
    }

    /// Rows of the system "`e b_j = b_j` for all `j`" (or `b_j e`), one row
    /// per `(j, k)`, unknowns the coordinates of `e`.
    fn unit_system(&self, side: Side) -> (Matrix, Vec<Scalar>) {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                let row = (0..n)
                    .map(|i| match side {
                        Side::Left => self.constant(i, j, k),
                        Side::Right => self.constant(j, i, k),
                    })
                    .collect();
                rows.push(row);
                rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
            }
        }
        (rows, rhs)
    }

    pub fn find_units(&self) -> UnitReport {
        let n = self.dim();
        let (left_a, left_b) = self.unit_system(Side::Left);
        let (right_a, right_b) = self.unit_system(Side::Right);
        let left_units = solve_affine(&left_a, &left_b, n);
        let right_units = solve_affine(&right_a, &right_b, n);
        let two_sided = if left_units.is_some() && right_units.is_some() {
            let a: Matrix = left_a.iter().chain(&right_a).cloned().collect();
            let b: Vec<Scalar> = left_b.iter().chain(&right_b).cloned().collect();
            solve_affine(&a, &b, n).map(|s| Element::new(s.particular))
        } else {
            None
        };
        let report = UnitReport {
            left_units,
            right_units,
            two_sided,
        };
        self.verify_units(&report);
        report
    }

    fn verify_units(&self, report: &UnitReport) {
        for (sol, side) in [(&report.left_units, Side::Left), (&report.right_units, Side::Right)] {
            let Some(sol) = sol else { continue };
            let e = Element::new(sol.particular.clone());
            for j in 0..self.dim() {
                let b = self.basis(j);
                let p = match side {
                    Side::Left => self.mul_unchecked(&e, &b),
                    Side::Right => self.mul_unchecked(&b, &e),
                };
                assert_eq!(p, b, "{side:?} unit of {} fails on b_{j}", self.name);
                for k in &sol.kernel {
                    let k = Element::new(k.clone());
                    let p = match side {
                        Side::Left => self.mul_unchecked(&k, &b),
                        Side::Right => self.mul_unchecked(&b, &k),
                    };
                    assert!(p.is_zero(), "unit kernel vector of {} is not annihilating", self.name);
                }
            }
        }
        if let Some(e) = &report.two_sided {
            for j in 0..self.dim() {
                let b = self.basis(j);
                assert_eq!(self.mul_unchecked(e, &b), b);
                assert_eq!(self.mul_unchecked(&b, e), b);
            }
        }
    }

    /// Renders a concrete element with the basis names, e.g. `2*i - 1/2*k`.
    pub fn format(&self, x: &Element) -> String {
        let mut out = String::new();
        for (c, name) in x.coords.iter().zip(&self.basis_names) {
            if c.is_zero() {
                continue;
            }
            let pure = c.a().is_zero() && !c.is_rational();
            let (neg, mag) = if c.is_rational() && c.a().is_negative() {
                (true, (-c).to_string())
            } else if pure {
                let b = c.b().abs();
                let root = format!("sqrt{}", c.d());
                let mag = if b.is_one() { root } else { format!("{b}*{root}") };
                (c.b().is_negative(), mag)
            } else {
                (false, c.to_string())
            };
            out.push_str(match (out.is_empty(), neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            if mag == "1" {
                out.push_str(name);
            } else if c.is_rational() || pure {
                out.push_str(&format!("{mag}*{name}"));
            } else {
                out.push_str(&format!("({mag})*{name}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for StructureAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, over {})", self.name, self.dim(), self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex() -> StructureAlgebra {
        let one = Scalar::one;
        StructureAlgebra::new(
            "C",
            FieldTag::Rationals,
            vec!["e".into(), "i".into()],
            [
                (0, 0, 0, one()),
                (0, 1, 1, one()),
                (1, 0, 1, one()),
                (1, 1, 0, Scalar::from_integer(-1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn operators_of_c() {
        let c = complex();
        let m = c.mult_operator(&c.basis(1), Side::Left);
        let int = Scalar::from_integer;
        assert_eq!(m, vec![vec![int(0), int(-1)], vec![int(1), int(0)]]);
        let id = c.mult_operator(&c.basis(0), Side::Right);
        assert_eq!(id, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    }

    #[test]
    fn zero_times_anything() {
        let c = complex();
        let v = c.element(vec![Scalar::frac(1, 2), Scalar::from_integer(3)]).unwrap();
        assert!(c.multiply(&c.zero(), &v).unwrap().is_zero());
    }

    #[test]
    fn bad_constants() {
        let r = StructureAlgebra::new("z", FieldTag::Rationals, vec!["a".into()], [(0, 0, 1, Scalar::one())]);
        assert!(matches!(r, Err(AlgebraError::IndexOutOfRange { .. })));
        let s3 = Scalar::sqrt(3).unwrap();
        let r = StructureAlgebra::new("z", FieldTag::Rationals, vec!["a".into()], [(0, 0, 0, s3)]);
        assert!(matches!(r, Err(AlgebraError::FieldMismatch { .. })));
    }

    #[test]
    fn dimension_mismatch() {
        let c = complex();
        let bad = Element::new(vec![Scalar::one()]);
        assert!(matches!(c.multiply(&bad, &c.basis(0)), Err(AlgebraError::DimensionMismatch { .. })));
    }

    #[test]
    fn units_of_c_and_zero_algebra() {
        let c = complex();
        let u = c.find_units();
        assert_eq!(u.two_sided, Some(c.basis(0)));
        let z = StructureAlgebra::new("0", FieldTag::Rationals, vec!["a".into()], []).unwrap();
        let u = z.find_units();
        assert!(!u.has_left_unit() && !u.has_right_unit() && !u.has_unit());
        let m = z.mult_operator(&z.basis(0), Side::Left);
        assert!(m[0][0].is_zero());
    }

    #[test]
    fn formatting() {
        let c = complex();
        let x = c.element(vec![Scalar::from_integer(-1), Scalar::frac(1, 2)]).unwrap();
        assert_eq!(c.format(&x), "-e + 1/2*i");
        assert_eq!(c.format(&c.zero()), "0");
    }
}
