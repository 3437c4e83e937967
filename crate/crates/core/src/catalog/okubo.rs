//! Pseudo-octonions: traceless hermitian 3×3 matrices with
//! `x * y = μxy + μ̄yx - (1/3) Tr(xy) I`, `μ = 1/2 + (√3/6) i`, in the
//! Gell-Mann basis (`Tr(λ_a λ_b) = 2 δ_ab`).

use super::CatalogError;
use crate::algebra::StructureAlgebra;
use crate::exactmath::{ComplexScalar, FieldTag, Rational, Scalar};

type Mat = [[ComplexScalar; 3]; 3];

fn zero_mat() -> Mat {
    Default::default()
}

fn real(n: i64) -> ComplexScalar {
    ComplexScalar::real(Scalar::from_integer(n))
}

fn imag(n: i64) -> ComplexScalar {
    ComplexScalar::new(Scalar::zero(), Scalar::from_integer(n))
}

fn sqrt3() -> Scalar {
    Scalar::sqrt(3).expect("3 is square-free")
}

/// `λ_1 .. λ_8`.
fn gell_mann() -> Vec<Mat> {
    let mut out = Vec::with_capacity(8);
    let sym = |r: usize, c: usize| {
        let mut m = zero_mat();
        m[r][c] = real(1);
        m[c][r] = real(1);
        m
    };
    let s01 = sym(0, 1);
    let s02 = sym(0, 2);
    let s12 = sym(1, 2);
    let anti = |r: usize, c: usize| {
        let mut m = zero_mat();
        m[r][c] = imag(-1);
        m[c][r] = imag(1);
        m
    };
    let mut l3 = zero_mat();
    l3[0][0] = real(1);
    l3[1][1] = real(-1);
    let mut l8 = zero_mat();
    let s = sqrt3().scale(&Rational::frac(1, 3));
    l8[0][0] = ComplexScalar::real(s.clone());
    l8[1][1] = ComplexScalar::real(s.clone());
    l8[2][2] = ComplexScalar::real(s.scale(&Rational::from_integer(-2)));
    out.push(s01);
    out.push(anti(0, 1));
    out.push(l3);
    out.push(s02);
    out.push(anti(0, 2));
    out.push(s12);
    out.push(anti(1, 2));
    out.push(l8);
    out
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let mut out = zero_mat();
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            for k in 0..3 {
                *cell = &*cell + &(&a[r][k] * &b[k][c]);
            }
        }
    }
    out
}

fn combine(terms: &[(ComplexScalar, &Mat)]) -> Mat {
    let mut out = zero_mat();
    for (c, m) in terms {
        for r in 0..3 {
            for k in 0..3 {
                out[r][k] = &out[r][k] + &(c * &m[r][k]);
            }
        }
    }
    out
}

fn trace(m: &Mat) -> ComplexScalar {
    &(&m[0][0] + &m[1][1]) + &m[2][2]
}

fn is_hermitian(m: &Mat) -> bool {
    (0..3).all(|r| (0..3).all(|c| m[r][c] == m[c][r].conj()))
}

pub fn mu() -> ComplexScalar {
    ComplexScalar::new(Scalar::frac(1, 2), sqrt3().scale(&Rational::frac(1, 6)))
}

/// `x * y` on matrices.
fn okubo_product(x: &Mat, y: &Mat) -> Mat {
    let m = mu();
    let xy = matmul(x, y);
    let yx = matmul(y, x);
    let t = trace(&xy).scale(&Rational::frac(-1, 3));
    let mut id = zero_mat();
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = ComplexScalar::one();
    }
    combine(&[(m.clone(), &xy), (m.conj(), &yx), (t, &id)])
}

/// Builds the algebra, asserting that every product is traceless and
/// hermitian and that all structure constants are real.
pub fn okubo() -> Result<StructureAlgebra, CatalogError> {
    let basis = gell_mann();
    let half = Rational::frac(1, 2);
    let mut constants = Vec::new();
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let p = okubo_product(bi, bj);
            if !trace(&p).is_zero() || !is_hermitian(&p) {
                return Err(CatalogError::Construction(format!(
                    "product of basis {i} and {j} leaves the traceless hermitian matrices"
                )));
            }
            let mut coords = Vec::with_capacity(8);
            for (k, bk) in basis.iter().enumerate() {
                let c = trace(&matmul(&p, bk)).scale(&half);
                if !c.is_real() {
                    return Err(CatalogError::Construction(format!(
                        "structure constant ({i},{j},{k}) has imaginary part {}",
                        c.im
                    )));
                }
                coords.push((ComplexScalar::real(c.re.clone()), bk));
                constants.push((i, j, k, c.re));
            }
            if combine(&coords) != p {
                return Err(CatalogError::Construction(format!(
                    "product of basis {i} and {j} is not reproduced by its coordinates"
                )));
            }
        }
    }
    let names = (1..=8).map(|i| format!("l{i}")).collect();
    Ok(StructureAlgebra::new("P", FieldTag::Quadratic(3), names, constants)?)
}
