//! Cayley–Dickson doubling and the two conjugation isotopes.

use serde::Serialize;

use super::CatalogError;
use crate::algebra::{Element, StructureAlgebra};
use crate::exactmath::{FieldTag, Matrix, Scalar};

/// An algebra with a linear involution `x -> x̄`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvolutiveAlgebra {
    pub algebra: StructureAlgebra,
    /// Column `j` holds the coordinates of the conjugate of `b_j`.
    pub conjugation: Matrix,
}

impl InvolutiveAlgebra {
    pub fn conj(&self, x: &Element) -> Element {
        let n = self.algebra.dim();
        let mut out = vec![Scalar::zero(); n];
        for (j, xj) in x.coords.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o = &*o + &(xj * &self.conjugation[k][j]);
            }
        }
        Element::new(out)
    }

    /// `N(x) = x̄ x`, read off the unit coordinate (the first basis vector).
    pub fn norm(&self, x: &Element) -> Scalar {
        let p = self.algebra.mul_unchecked(&self.conj(x), x);
        p.coords[0].clone()
    }
}

/// Which classical algebra to double up to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classical {
    R,
    C,
    H,
    O,
}

impl Classical {
    pub fn dim(self) -> usize {
        match self {
            Classical::R => 1,
            Classical::C => 2,
            Classical::H => 4,
            Classical::O => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Classical::R => "R",
            Classical::C => "C",
            Classical::H => "H",
            Classical::O => "O",
        }
    }

    fn basis_names(self) -> Vec<String> {
        let names: &[&str] = match self {
            Classical::R => &["e"],
            Classical::C => &["e", "i"],
            Classical::H => &["e", "i", "j", "k"],
            Classical::O => &["e", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
        };
        names.iter().map(|s| s.to_string()).collect()
    }
}

/// `(a, b)̄ = (ā, -b)`.
fn cd_conj(x: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return x.to_vec();
    }
    let h = x.len() / 2;
    let mut out = cd_conj(&x[..h]);
    out.extend(x[h..].iter().map(|c| -c));
    out
}

/// `(a, b)(c, d) = (ac - d̄b, da + bc̄)`.
fn cd_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let sub = |u: Vec<Scalar>, v: Vec<Scalar>| u.iter().zip(&v).map(|(p, q)| p - q).collect::<Vec<_>>();
    let add = |u: Vec<Scalar>, v: Vec<Scalar>| u.iter().zip(&v).map(|(p, q)| p + q).collect::<Vec<_>>();
    let mut out = sub(cd_mul(a, c), cd_mul(&cd_conj(d), b));
    out.extend(add(cd_mul(d, a), cd_mul(b, &cd_conj(c))));
    out
}

fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `R`, `C`, `H` or `O` by repeated doubling of the rationals, which stand in
/// for the reals.
pub fn classical(which: Classical) -> InvolutiveAlgebra {
    let n = which.dim();
    let algebra = StructureAlgebra::from_products(which.name(), FieldTag::Rationals, which.basis_names(), |i, j| {
        cd_mul(&unit_vector(n, i), &unit_vector(n, j))
    })
    .expect("doubling produces valid constants");
    let mut conjugation = vec![vec![Scalar::zero(); n]; n];
    for j in 0..n {
        for (k, c) in cd_conj(&unit_vector(n, j)).into_iter().enumerate() {
            conjugation[k][j] = c;
        }
    }
    InvolutiveAlgebra { algebra, conjugation }
}

fn isotope(
    a: &InvolutiveAlgebra,
    name: String,
    conj_left: bool,
    conj_right: bool,
) -> Result<StructureAlgebra, CatalogError> {
    let alg = &a.algebra;
    let n = alg.dim();
    if a.conjugation.len() != n || a.conjugation.iter().any(|r| r.len() != n) {
        return Err(CatalogError::MissingConjugation(alg.name().to_string()));
    }
    let image = |i: usize, conj: bool| {
        let b = alg.basis(i);
        if conj {
            a.conj(&b)
        } else {
            b
        }
    };
    let out = StructureAlgebra::from_products(name, alg.field(), alg.basis_names().to_vec(), |i, j| {
        alg.mul_unchecked(&image(i, conj_left), &image(j, conj_right)).coords
    })?;
    Ok(out)
}

/// `*A`: the product `x * y = x̄ y`.
pub fn star_left(a: &InvolutiveAlgebra) -> Result<StructureAlgebra, CatalogError> {
    isotope(a, format!("*{}", a.algebra.name()), true, false)
}

/// `⋆A`: the product `x ⋆ y = x̄ ȳ`.
pub fn star_both(a: &InvolutiveAlgebra) -> Result<StructureAlgebra, CatalogError> {
    isotope(a, format!("⋆{}", a.algebra.name()), true, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units() {
        let h = classical(Classical::H).algebra;
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        assert_eq!(h.multiply(&i, &j).unwrap(), k);
        assert_eq!(h.multiply(&j, &i).unwrap(), k.scale(&Scalar::from_integer(-1)));
        let c = classical(Classical::C).algebra;
        let i = c.basis(1);
        assert_eq!(c.multiply(&i, &i).unwrap(), c.basis(0).scale(&Scalar::from_integer(-1)));
    }

    #[test]
    fn conjugation_is_involutive_antiautomorphism() {
        for w in [Classical::R, Classical::C, Classical::H, Classical::O] {
            let a = classical(w);
            let n = a.algebra.dim();
            for i in 0..n {
                let bi = a.algebra.basis(i);
                assert_eq!(a.conj(&a.conj(&bi)), bi);
                for j in 0..n {
                    let bj = a.algebra.basis(j);
                    let lhs = a.conj(&a.algebra.mul_unchecked(&bi, &bj));
                    let rhs = a.algebra.mul_unchecked(&a.conj(&bj), &a.conj(&bi));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn star_products() {
        let c = classical(Classical::C);
        let sc = star_left(&c).unwrap();
        let i = sc.basis(1);
        assert_eq!(sc.multiply(&i, &i).unwrap(), sc.basis(0));
        let bc = star_both(&c).unwrap();
        let e = bc.basis(0);
        assert_eq!(bc.multiply(&e, &e).unwrap(), e);
        let h = classical(Classical::H);
        let sh = star_left(&h).unwrap();
        let i = sh.basis(1);
        assert_eq!(sh.multiply(&i, &i).unwrap(), sh.basis(0));
    }
}
