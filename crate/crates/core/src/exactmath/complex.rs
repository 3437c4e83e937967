use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{MathError, Rational, Scalar};

/// `re + im*i` over a real quadratic field. Only used as an intermediate when
/// building algebras from complex matrix models.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl ComplexScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        ComplexScalar { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        ComplexScalar {
            re,
            im: Scalar::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Scalar::one())
    }

    pub fn i() -> Self {
        ComplexScalar {
            re: Scalar::zero(),
            im: Scalar::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexScalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ComplexScalar {
            re: self.re.scale(r),
            im: self.im.scale(r),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, MathError> {
        let rr = self.re.try_mul(&rhs.re)?;
        let ii = self.im.try_mul(&rhs.im)?;
        let ri = self.re.try_mul(&rhs.im)?;
        let ir = self.im.try_mul(&rhs.re)?;
        Ok(ComplexScalar {
            re: rr.try_add(&-ii)?,
            im: ri.try_add(&ir)?,
        })
    }
}

impl Add<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: &ComplexScalar) -> ComplexScalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Debug for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared() {
        let i = ComplexScalar::i();
        assert_eq!(&i * &i, -&ComplexScalar::one());
        assert_eq!(&i * &i.conj(), ComplexScalar::one());
    }

    #[test]
    fn okubo_mu_sums_to_one() {
        let mu = ComplexScalar::new(
            Scalar::frac(1, 2),
            Scalar::sqrt(3).unwrap().scale(&Rational::frac(1, 6)),
        );
        assert_eq!(&mu + &mu.conj(), ComplexScalar::one());
        // |mu|^2 = 1/4 + 3/36 = 1/3
        assert_eq!(&mu * &mu.conj(), ComplexScalar::real(Scalar::frac(1, 3)));
    }
}
