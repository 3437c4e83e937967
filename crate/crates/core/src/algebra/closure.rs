use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Element, Side, StructureAlgebra};
use crate::exactmath::linalg::rank;
use crate::exactmath::{Coeff, Scalar};

/// A basis of the subalgebra `A(x)` generated by one element.
#[derive(Clone, Debug, PartialEq)]
pub struct Subalgebra<C = Scalar> {
    pub basis: Vec<Element<C>>,
}

impl<C> Subalgebra<C> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Outcome of [`StructureAlgebra::division_sampled`]. Passing is evidence,
/// not proof, of being a division algebra.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DivisionReport {
    pub trials: usize,
    pub seed: u64,
    pub all_invertible: bool,
    pub failing_witness: Option<Element>,
    /// The operator found singular at the witness.
    pub failing_side: Option<Side>,
}

/// A random rational with numerator in `-5..=5` and denominator in `1..=3`.
pub(crate) fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

impl StructureAlgebra {
    /// Closes `{x}` under multiplication: every product of two basis
    /// elements found so far is added when it is independent of them.
    pub fn subalgebra_generated<C: Coeff>(&self, x: &Element<C>) -> Subalgebra<C> {
        let mut basis: Vec<Element<C>> = Vec::new();
        let mut rows: Vec<Vec<C>> = Vec::new();
        let mut push = |e: Element<C>, basis: &mut Vec<Element<C>>| {
            if !e.is_zero() && C::extends_rank(&rows, &e.coords) {
                rows.push(e.coords.clone());
                basis.push(e);
            }
        };
        push(x.clone(), &mut basis);
        // every pair (i, j) with i, j < done has been multiplied
        let mut done = 0;
        while done < basis.len() {
            let new = done;
            done += 1;
            for other in 0..=new {
                let pairs = if other == new {
                    vec![(new, new)]
                } else {
                    vec![(new, other), (other, new)]
                };
                for (i, j) in pairs {
                    let p = self.mul_unchecked(&basis[i], &basis[j]);
                    push(p, &mut basis);
                }
            }
        }
        Subalgebra { basis }
    }

    /// `dim A(x)` at the generic element, which is the maximum over all
    /// `x`.
    pub fn degree(&self) -> usize {
        self.subalgebra_generated(&self.generic("x")).dim()
    }

    /// Largest `dim A(x)` over `samples` random concrete `x`; a lower bound
    /// for [`degree`](Self::degree).
    pub fn degree_sampled(&self, samples: usize, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| {
                let x = self.random_nonzero(&mut rng);
                self.subalgebra_generated(&x).dim()
            })
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn random_nonzero(&self, rng: &mut ChaCha8Rng) -> Element {
        loop {
            let x = Element::new((0..self.dim()).map(|_| small_rational(rng)).collect());
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Checks that `L_x` and `R_x` are invertible at `trials` random nonzero
    /// `x` with small rational coordinates. Invertibility is tested over the
    /// algebra's own field.
    pub fn division_sampled(&self, trials: usize, seed: u64) -> DivisionReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.dim();
        for _ in 0..trials {
            let x = self.random_nonzero(&mut rng);
            for side in [Side::Left, Side::Right] {
                if rank(&self.mult_operator(&x, side)) < n {
                    return DivisionReport {
                        trials,
                        seed,
                        all_invertible: false,
                        failing_witness: Some(x),
                        failing_side: Some(side),
                    };
                }
            }
        }
        DivisionReport {
            trials,
            seed,
            all_invertible: true,
            failing_witness: None,
            failing_side: None,
        }
    }
}
