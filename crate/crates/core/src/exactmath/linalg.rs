//! Exact linear algebra: Gauss–Jordan elimination over the scalar field and
//! fraction-free (Bareiss) elimination over polynomial rings.
//!
//! Pivoting is deterministic everywhere: the first row (in order) with a
//! nonzero entry in the current column.

use serde::Serialize;

use super::{MultiPoly, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                if m[r][j].is_zero() {
                    continue;
                }
                let t = &f * &m[r][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solution set `{ particular + span(kernel) }` of a linear system.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

/// Solves `a * u = rhs` for `u`; `None` when inconsistent. Free variables
/// are set to zero in the particular solution.
pub fn solve_affine(a: &[Vec<Scalar>], rhs: &[Scalar], unknowns: usize) -> Option<AffineSolution> {
    assert_eq!(a.len(), rhs.len());
    let mut aug: Matrix = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), unknowns);
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&unknowns) {
        return None;
    }
    let mut particular = vec![Scalar::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][unknowns].clone();
    }
    let mut kernel = Vec::new();
    for free in (0..unknowns).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); unknowns];
        v[free] = Scalar::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -&aug[r][free];
        }
        kernel.push(v);
    }
    Some(AffineSolution { particular, kernel })
}

/// Result of testing whether a vector lies in the span of generators.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpanMembership {
    pub inside: bool,
    /// Present iff `inside`; reproduces the target exactly.
    pub coefficients: Option<Vec<Scalar>>,
}

pub fn span_membership(target: &[Scalar], generators: &[Vec<Scalar>]) -> SpanMembership {
    let n = target.len();
    assert!(generators.iter().all(|g| g.len() == n), "ragged generators");
    let a: Matrix = (0..n)
        .map(|i| generators.iter().map(|g| g[i].clone()).collect())
        .collect();
    match solve_affine(&a, target, generators.len()) {
        Some(sol) => SpanMembership {
            inside: true,
            coefficients: Some(sol.particular),
        },
        None => SpanMembership {
            inside: false,
            coefficients: None,
        },
    }
}

/// `sum_i coefficients[i] * generators[i]`.
pub fn combine(coefficients: &[Scalar], generators: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (c, g) in coefficients.iter().zip(generators) {
        for (o, x) in out.iter_mut().zip(g) {
            *o = &*o + &(c * x);
        }
    }
    out
}

/// Rank over the fraction field of the polynomial ring, by Bareiss
/// elimination. Every division performed is exact.
pub fn poly_rank(rows: &[Vec<MultiPoly>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let cols = first.len();
    assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
    if cols == 0 {
        return 0;
    }
    let ring = first[0].ring().clone();
    let mut m = rows.to_vec();
    let nrows = m.len();
    let mut prev = MultiPoly::constant(&ring, Scalar::one());
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..nrows {
            let lead = m[i][c].clone();
            for j in c + 1..cols {
                let t = &(&pivot * &m[i][j]) - &(&lead * &m[r][j]);
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][c] = MultiPoly::zero(&ring);
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::PolyRing;

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    #[test]
    fn rank_of_identity_and_dependent_rows() {
        assert_eq!(rank(&[vec![s(1), s(0)], vec![s(0), s(1)]]), 2);
        assert_eq!(rank(&[vec![s(1), s(2)], vec![s(2), s(4)]]), 1);
        assert_eq!(rank(&[vec![s(0), s(0)]]), 0);
    }

    #[test]
    fn span_examples() {
        let zero = span_membership(&[s(0), s(0)], &[vec![s(1), s(0)]]);
        assert!(zero.inside);
        assert_eq!(zero.coefficients.unwrap(), vec![s(0)]);
        let std = span_membership(&[s(1), s(1)], &[vec![s(1), s(0)], vec![s(0), s(1)]]);
        assert_eq!(std.coefficients.unwrap(), vec![s(1), s(1)]);
        let out = span_membership(&[s(0), s(1)], &[vec![s(1), s(0)]]);
        assert!(!out.inside && out.coefficients.is_none());
    }

    #[test]
    fn affine_solution_with_kernel() {
        // u0 + u1 = 1
        let sol = solve_affine(&[vec![s(1), s(1)]], &[s(1)], 2).unwrap();
        assert_eq!(sol.particular, vec![s(1), s(0)]);
        assert_eq!(sol.kernel, vec![vec![s(-1), s(1)]]);
        assert!(solve_affine(&[vec![s(0), s(0)]], &[s(1)], 2).is_none());
    }

    #[test]
    fn poly_rank_examples() {
        let r = PolyRing::indexed("x", 2);
        let one = MultiPoly::constant(&r, Scalar::one());
        let zero = MultiPoly::zero(&r);
        assert_eq!(
            poly_rank(&[vec![one.clone(), zero.clone()], vec![zero, one]]),
            2
        );
        let x1 = MultiPoly::var(&r, 0);
        let x2 = MultiPoly::var(&r, 1);
        let two = Scalar::from_integer(2);
        assert_eq!(
            poly_rank(&[
                vec![x1.clone(), x2.clone()],
                vec![x1.scale(&two), x2.scale(&two)]
            ]),
            1
        );
        // rows (x1, x2) and (x2, x1) are independent over the function field
        assert_eq!(poly_rank(&[vec![x1.clone(), x2.clone()], vec![x2, x1]]), 2);
    }
}
