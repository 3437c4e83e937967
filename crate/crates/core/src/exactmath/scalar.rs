//! Elements of `Q` and of a single real quadratic extension `Q(sqrt d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{MathError, Rational};

/// The base field an algebra's structure constants live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    Rationals,
    /// `Q(sqrt d)` for a square-free `d >= 2`.
    Quadratic(u32),
}

impl FieldTag {
    pub fn contains(&self, s: &QuadExt) -> bool {
        match self {
            FieldTag::Rationals => s.is_rational(),
            FieldTag::Quadratic(d) => s.is_rational() || s.d == *d,
        }
    }

    pub fn radicand(&self) -> Option<u32> {
        match self {
            FieldTag::Rationals => None,
            FieldTag::Quadratic(d) => Some(*d),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => f.write_str("Q"),
            FieldTag::Quadratic(d) => write!(f, "Q(sqrt {d})"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldTag::Rationals);
        }
        let inner = t
            .strip_prefix("Q(sqrt")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| MathError::Parse(s.to_string()))?;
        let d: u32 = inner
            .trim()
            .parse()
            .map_err(|_| MathError::Parse(s.to_string()))?;
        if !is_square_free(d) || d < 2 {
            return Err(MathError::Parse(s.to_string()));
        }
        Ok(FieldTag::Quadratic(d))
    }
}

fn is_square_free(d: u32) -> bool {
    let mut k = 2u32;
    while k * k <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `a + b*sqrt(d)`.
///
/// When `b == 0` the radicand is normalized to `1`, so a rational value has a
/// single representation regardless of which field it was computed in. Mixing
/// two different nontrivial radicands is a field mismatch.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u32,
}

/// The scalar type used for structure constants and coordinates.
pub type Scalar = QuadExt;

/// The four field operations, for [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic reporting division by zero and field mismatch.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, MathError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_add(&-b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u32) -> Result<Self, MathError> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        if d < 2 || !is_square_free(d) {
            return Err(MathError::BadRadicand(d));
        }
        Ok(QuadExt { a, b, d })
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(Rational::frac(n, d))
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: u32) -> Result<Self, MathError> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Radicand, `1` for rational values.
    pub fn d(&self) -> u32 {
        self.d
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    #[inline]
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn join(&self, rhs: &Self) -> Result<u32, MathError> {
        match (self.d, rhs.d) {
            (1, d) | (d, 1) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(MathError::FieldMismatch(d, e)),
        }
    }

    fn make(a: Rational, b: Rational, d: u32) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, MathError> {
        if rhs.is_rational() {
            return Ok(QuadExt {
                a: &self.a + &rhs.a,
                b: self.b.clone(),
                d: self.d,
            });
        }
        let d = self.join(rhs)?;
        Ok(Self::make(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, MathError> {
        if self.is_rational() && rhs.is_rational() {
            return Ok(Self::rational(&self.a * &rhs.a));
        }
        if rhs.is_rational() {
            return Ok(Self::make(&self.a * &rhs.a, &self.b * &rhs.a, self.d));
        }
        if self.is_rational() {
            return Ok(Self::make(&self.a * &rhs.a, &self.a * &rhs.b, rhs.d));
        }
        let d = self.join(rhs)?;
        let dd = Rational::from_integer(d as i64);
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &dd);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Ok(Self::make(a, b, d))
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn galois_conj(&self) -> Self {
        Self::make(self.a.clone(), -&self.b, self.d)
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        let dd = Rational::from_integer(self.d as i64);
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &dd)
    }

    pub fn inv(&self) -> Result<Self, MathError> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::rational(self.a.recip()?));
        }
        let n = self.norm().recip()?;
        Ok(Self::make(&self.a * &n, -&(&self.b * &n), self.d))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, MathError> {
        self.join(rhs)?;
        self.try_mul(&rhs.inv()?)
    }

    /// Multiplication by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        Self::make(&self.a * r, &self.b * r, self.d)
    }

    /// Approximate value, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_big().to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_big().to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::make(-&self.a, -&self.b, self.d)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

// The operator impls panic on a radicand mismatch; use the `try_*` methods
// when operands may come from different fields.
impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.try_add(&-rhs).expect("scalar field mismatch")
    }
}

impl Mul<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        &self + &rhs
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        &self - &rhs
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        &self * &rhs
    }
}

impl Default for QuadExt {
    fn default() -> Self {
        QuadExt::zero()
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::from_integer(n)
    }
}

/// Scalar-string form: `R`, `R+R*sqrtD` or `R-R*sqrtD`.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt{}", self.a, self.b.abs(), self.d)
        } else {
            write!(f, "{}+{}*sqrt{}", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QuadExt {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MathError::Parse(s.to_string());
        let Some(pos) = s.find("*sqrt") else {
            return Ok(QuadExt::rational(s.parse().map_err(|_| bad())?));
        };
        let d: u32 = s[pos + 5..].parse().map_err(|_| bad())?;
        let head = &s[..pos];
        // the sign separating the two parts is the last '+'/'-' not at index 0
        let split = head
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(bad)?;
        let a: Rational = head[..split].parse().map_err(|_| bad())?;
        let b_str = &head[split + 1..];
        if b_str.starts_with('-') {
            return Err(bad());
        }
        let mut b: Rational = b_str.parse().map_err(|_| bad())?;
        if &head[split..split + 1] == "-" {
            b = -b;
        }
        QuadExt::new(a, b, d)
    }
}


impl Serialize for QuadExt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QuadExt {
        QuadExt::new(Rational::frac(a.0, a.1), Rational::frac(b.0, b.1), 3).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let half = q((1, 2), (0, 1));
        let two_root3 = q((0, 1), (2, 1));
        assert_eq!(&half * &two_root3, q((0, 1), (1, 1)));
        let p = q((1, 1), (1, 1));
        let m = q((1, 1), (-1, 1));
        assert_eq!(&p * &m, QuadExt::from_integer(-2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = scalar_arith(&QuadExt::frac(2, 3), &QuadExt::zero(), ArithOp::Div);
        assert_eq!(r, Err(MathError::DivisionByZero));
    }

    #[test]
    fn field_mismatch() {
        let r2 = QuadExt::sqrt(2).unwrap();
        let r3 = QuadExt::sqrt(3).unwrap();
        assert_eq!(r2.try_mul(&r3), Err(MathError::FieldMismatch(2, 3)));
        assert!(scalar_arith(&r2, &r3, ArithOp::Add).is_err());
        // rationals mix with anything
        assert!(r2.try_add(&QuadExt::one()).is_ok());
    }

    #[test]
    fn inverse_round_trip() {
        let x = q((1, 2), (1, 6));
        assert_eq!(&x * &x.inv().unwrap(), QuadExt::one());
    }

    #[test]
    fn scalar_string_grammar() {
        let x: QuadExt = "1/2+1/6*sqrt3".parse().unwrap();
        assert_eq!(x, q((1, 2), (1, 6)));
        let y: QuadExt = "-1/2-3*sqrt3".parse().unwrap();
        assert_eq!(y, q((-1, 2), (-3, 1)));
        assert_eq!(y.to_string(), "-1/2-3*sqrt3");
        let z: QuadExt = "0+1*sqrt3".parse().unwrap();
        assert_eq!(z, QuadExt::sqrt(3).unwrap());
        assert_eq!("-5/4".parse::<QuadExt>().unwrap(), QuadExt::frac(-5, 4));
        assert!("1+*sqrt3".parse::<QuadExt>().is_err());
        assert!("1+2*sqrt4".parse::<QuadExt>().is_err());
        assert!("1+-2*sqrt3".parse::<QuadExt>().is_err());
    }

    #[test]
    fn field_tags() {
        assert_eq!("Q(sqrt 3)".parse::<FieldTag>().unwrap(), FieldTag::Quadratic(3));
        assert_eq!(FieldTag::Quadratic(3).to_string(), "Q(sqrt 3)");
        assert_eq!("Q".parse::<FieldTag>().unwrap(), FieldTag::Rationals);
        assert!("Q(sqrt 4)".parse::<FieldTag>().is_err());
    }
}
