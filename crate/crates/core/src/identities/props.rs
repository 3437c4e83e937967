use std::collections::BTreeMap;

use serde::Serialize;

use super::IdentityError;
use crate::exactmath::{span_membership, Rational, Scalar};
use crate::freealg::{
    associator, coordinates, degree4_basis, degree4_consequences, polarize, FreePoly, Triple, Var,
};

/// `(x, x^2, x)` written in terms of `x (x,x,x)`, `(x,x,x) x` and the
/// first linearization of `(x,x,x)` at `y = x^2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prop1Result {
    pub target: FreePoly,
    pub consequences: Vec<FreePoly>,
    pub coefficients: Vec<Rational>,
}

/// Expresses `(x, x^2, x)` as a combination of degree-4 consequences of
/// `(x,x,x) = 0`. Over a field of characteristic zero this shows every
/// third power-associative algebra satisfies `(x, x^2, x) = 0`.
pub fn verify_prop1() -> Prop1Result {
    let x = FreePoly::x();
    let x2 = &x * &x;
    let target = associator(&x, &x2, &x);
    let basis = degree4_basis();
    let consequences = degree4_consequences().to_vec();
    let as_scalars = |p: &FreePoly| {
        coordinates(p, &basis)
            .expect("degree-4 polynomial in x")
            .into_iter()
            .map(Scalar::rational)
            .collect::<Vec<_>>()
    };
    let gens: Vec<Vec<Scalar>> = consequences.iter().map(as_scalars).collect();
    let m = span_membership(&as_scalars(&target), &gens);
    let coefficients = m
        .coefficients
        .expect("(x,x^2,x) lies in the span")
        .into_iter()
        .map(|s| s.a().clone())
        .collect::<Vec<_>>();
    let mut check = FreePoly::zero();
    for (c, g) in coefficients.iter().zip(&consequences) {
        check = check.add_scaled(g, c);
    }
    assert_eq!(check, target, "combination reproduces (x,x^2,x)");
    Prop1Result {
        target,
        consequences,
        coefficients,
    }
}

/// Substituting the unit for `y` in `f_{p+q+r-3}` of `(x^p, x^q, x^r)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prop2Result {
    pub triple: Triple,
    pub m: u32,
    pub substituted: FreePoly,
    /// `substituted = c (x,x,x)`.
    pub constant: Rational,
}

/// In a unital algebra, `f_m` with `m = p+q+r-3` at `y = e` is a nonzero
/// multiple of `(x,x,x)`, so each identity implies third power-associativity.
pub fn verify_prop2(triple: Triple) -> Result<Prop2Result, IdentityError> {
    if triple.total() == 3 {
        return Err(IdentityError::ExcludedTriple);
    }
    let m = triple.total() - 3;
    let f = polarize(triple);
    let fm = f.component(m)?.clone().into_unital();
    let assignment = BTreeMap::from([(Var::X, FreePoly::x()), (Var::Y, FreePoly::unit())]);
    let substituted = fm.substitute(&assignment)?;
    let x = FreePoly::x();
    let tpa = associator(&x, &x, &x);
    let constant = substituted
        .ratio_to(&tpa)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| IdentityError::NotProportional(substituted.to_string()))?;
    Ok(Prop2Result {
        triple,
        m,
        substituted,
        constant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop1_coefficients() {
        let r = verify_prop1();
        let half = Rational::frac(1, 2);
        assert_eq!(r.coefficients, vec![-half.clone(), -half.clone(), half]);
    }

    #[test]
    fn prop2_constants() {
        // Independent: with m = p+q+r-3 and y = e, any atom containing a
        // lone y gives an associator with e, which vanishes. Only x (power
        // 1) and x•y = 2x (power 2) survive, so c = 2^(number of 2s).
        for t in Triple::all() {
            if t.total() == 3 {
                assert!(matches!(verify_prop2(t), Err(IdentityError::ExcludedTriple)));
                continue;
            }
            let twos = [t.p, t.q, t.r].iter().filter(|&&k| k == 2).count() as u32;
            let r = verify_prop2(t).unwrap();
            assert_eq!(r.constant, Rational::from_integer(2i64.pow(twos)), "{t}");
        }
        let c = |p, q, r| verify_prop2(Triple::new(p, q, r).unwrap()).unwrap().constant;
        assert_eq!(c(1, 1, 2), Rational::from_integer(2));
        assert_eq!(c(2, 2, 2), Rational::from_integer(8));
    }
}
