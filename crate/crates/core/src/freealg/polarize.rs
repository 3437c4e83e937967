//! Linearization of `(x^p, x^q, x^r) = 0` by substituting `x -> x + y` and
//! grading the expansion by degree in `y`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{associator, jordan, FreeAlgError, FreePoly};

/// The pieces a power of `x + y` splits into: `x + y` gives `x`, `y`, and
/// `(x + y)^2` gives `x^2`, `x•y`, `y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Atom {
    X,
    Y,
    XSquared,
    Jordan,
    YSquared,
}

impl Atom {
    pub fn poly(self) -> FreePoly {
        let (x, y) = (FreePoly::x(), FreePoly::y());
        match self {
            Atom::X => x,
            Atom::Y => y,
            Atom::XSquared => &x * &x,
            Atom::Jordan => jordan(&x, &y),
            Atom::YSquared => &y * &y,
        }
    }

    pub fn y_degree(self) -> u32 {
        match self {
            Atom::X | Atom::XSquared => 0,
            Atom::Y | Atom::Jordan => 1,
            Atom::YSquared => 2,
        }
    }

    pub fn x_degree(self) -> u32 {
        match self {
            Atom::Y | Atom::YSquared => 0,
            Atom::X | Atom::Jordan => 1,
            Atom::XSquared => 2,
        }
    }

    /// Atoms in the expansion of `(x + y)^k`, `k` in {1, 2}.
    pub fn of_power(k: u8) -> &'static [Atom] {
        match k {
            1 => &[Atom::X, Atom::Y],
            2 => &[Atom::XSquared, Atom::Jordan, Atom::YSquared],
            _ => panic!("only first and second powers are supported"),
        }
    }

    pub fn all() -> [Atom; 5] {
        [Atom::X, Atom::Y, Atom::XSquared, Atom::Jordan, Atom::YSquared]
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Atom::X => "x",
            Atom::Y => "y",
            Atom::XSquared => "x^2",
            Atom::Jordan => "x•y",
            Atom::YSquared => "y^2",
        })
    }
}

/// `x^k` for `k` in {1, 2}; `x^2` is the word `xx`.
pub fn power(base: &FreePoly, k: u8) -> FreePoly {
    match k {
        1 => base.clone(),
        2 => base * base,
        _ => panic!("only first and second powers are supported"),
    }
}

/// The exponent triple of an identity `(x^p, x^q, x^r) = 0`. Serialized
/// as `"p.q.r"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub p: u8,
    pub q: u8,
    pub r: u8,
}

impl Triple {
    pub fn new(p: u8, q: u8, r: u8) -> Result<Self, FreeAlgError> {
        if [p, q, r].iter().all(|k| (1..=2).contains(k)) {
            Ok(Triple { p, q, r })
        } else {
            Err(FreeAlgError::BadExponent(p, q, r))
        }
    }

    /// All eight triples in lexicographic order.
    pub fn all() -> Vec<Triple> {
        let mut out = Vec::with_capacity(8);
        for p in 1..=2 {
            for q in 1..=2 {
                for r in 1..=2 {
                    out.push(Triple { p, q, r });
                }
            }
        }
        out
    }

    pub fn total(&self) -> u32 {
        (self.p + self.q + self.r) as u32
    }

    /// `(x^p, x^q, x^r)` as a free polynomial.
    pub fn identity(&self) -> FreePoly {
        self.identity_in(&FreePoly::x())
    }

    pub fn identity_in(&self, base: &FreePoly) -> FreePoly {
        associator(
            &power(base, self.p),
            &power(base, self.q),
            &power(base, self.r),
        )
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.p, self.q, self.r)
    }
}

impl Serialize for Triple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Triple {
    type Err = FreeAlgError;

    /// Accepts `p,q,r` or `p.q.r`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split([',', '.']).map(str::trim).collect();
        let parse = |t: &str| t.parse::<u8>().map_err(|_| FreeAlgError::BadTriple(s.to_string()));
        match parts.as_slice() {
            [p, q, r] => Triple::new(parse(p)?, parse(q)?, parse(r)?),
            _ => Err(FreeAlgError::BadTriple(s.to_string())),
        }
    }
}

/// The components `f_1 .. f_{p+q+r-1}` of the linearized identity.
#[derive(Clone, Debug)]
pub struct PolarizedIdentity {
    pub triple: Triple,
    /// `components[m - 1]` is `f_m`, of `y`-degree `m`.
    pub components: Vec<FreePoly>,
}

impl PolarizedIdentity {
    /// `f_m` for `1 <= m <= p+q+r-1`.
    pub fn component(&self, m: u32) -> Result<&FreePoly, FreeAlgError> {
        let n = self.triple.total();
        if m == 0 || m >= n {
            return Err(FreeAlgError::ComponentOutOfRange { m, max: n - 1 });
        }
        Ok(&self.components[m as usize - 1])
    }

    /// `f_m` as the sum of associators of atoms whose `y`-degrees add to `m`.
    pub fn atom_expansion(&self, m: u32) -> Vec<[Atom; 3]> {
        let t = self.triple;
        let mut out = Vec::new();
        for &a in Atom::of_power(t.p) {
            for &b in Atom::of_power(t.q) {
                for &c in Atom::of_power(t.r) {
                    if a.y_degree() + b.y_degree() + c.y_degree() == m {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// `f_m` printed as a sum of associators, e.g. `(x,x,x•y) + (x,y,x^2)`.
    pub fn display_component(&self, m: u32) -> String {
        self.atom_expansion(m)
            .iter()
            .map(|[a, b, c]| format!("({a},{b},{c})"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Expands `((x+y)^p, (x+y)^q, (x+y)^r)` and splits it by degree in `y`.
pub fn polarize(triple: Triple) -> PolarizedIdentity {
    let sum = &FreePoly::x() + &FreePoly::y();
    let expanded = triple.identity_in(&sum);
    let n = triple.total();
    let components = (1..n).map(|m| expanded.y_component(m)).collect();
    PolarizedIdentity { triple, components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::commutator;

    #[test]
    fn first_component_of_tpa() {
        let f = polarize(Triple::new(1, 1, 1).unwrap());
        let (x, y) = (FreePoly::x(), FreePoly::y());
        let x2 = &x * &x;
        let expect = &commutator(&x2, &y) + &commutator(&jordan(&x, &y), &x);
        assert_eq!(f.component(1).unwrap(), &expect);
    }

    #[test]
    fn component_count_and_range() {
        let f = polarize(Triple::new(2, 2, 2).unwrap());
        assert_eq!(f.components.len(), 5);
        assert!(f.component(0).is_err());
        assert!(f.component(6).is_err());
    }

    #[test]
    fn atom_expansion_matches_components() {
        for t in Triple::all() {
            let f = polarize(t);
            for m in 1..t.total() {
                let mut sum = FreePoly::zero();
                for [a, b, c] in f.atom_expansion(m) {
                    sum = &sum + &associator(&a.poly(), &b.poly(), &c.poly());
                }
                assert_eq!(&sum, f.component(m).unwrap(), "{t} m={m}");
            }
        }
    }

    #[test]
    fn triple_parsing() {
        assert_eq!("1,1,2".parse::<Triple>().unwrap(), Triple::new(1, 1, 2).unwrap());
        assert_eq!("2.2.2".parse::<Triple>().unwrap(), Triple::new(2, 2, 2).unwrap());
        assert!("1,3,1".parse::<Triple>().is_err());
        assert!("1,1".parse::<Triple>().is_err());
    }
}
