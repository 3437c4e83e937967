//! JSON file format for algebras.
//!
//! ```json
//! {
//!   "name": "C",
//!   "dim": 2,
//!   "field": "Q",
//!   "basis": ["e", "i"],
//!   "constants": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "-1"]],
//!   "conjugation": [["1", "0"], ["0", "-1"]]
//! }
//! ```
//!
//! Indices are 0-based, omitted constants are zero, `field` is `Q` or
//! `Q(sqrt 3)`, and scalars use the grammar `R`, `R+R*sqrt3`, `R-R*sqrt3`
//! with `R` = `[-]digits[/digits]`. An optional `properties` object is kept
//! as metadata and never trusted.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CatalogError, InvolutiveAlgebra};
use crate::algebra::StructureAlgebra;
use crate::exactmath::{FieldTag, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub field: String,
    pub basis: Vec<String>,
    pub constants: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugation: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub properties: Option<BTreeMap<String, serde_json::Value>>,
}

fn parse_scalar(text: &str, location: String) -> Result<Scalar, CatalogError> {
    text.parse().map_err(|_| CatalogError::Scalar {
        location,
        text: text.to_string(),
    })
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        serde_json::from_str(text).map_err(|e| CatalogError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn read(path: &Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), CatalogError> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| CatalogError::Io(format!("{}: {e}", path.display())))
    }

    fn field_tag(&self) -> Result<FieldTag, CatalogError> {
        self.field
            .parse()
            .map_err(|_| CatalogError::Field(self.field.clone()))
    }

    pub fn load(&self) -> Result<StructureAlgebra, CatalogError> {
        let field = self.field_tag()?;
        if self.basis.len() != self.dim {
            return Err(crate::algebra::AlgebraError::BasisNames {
                expected: self.dim,
                got: self.basis.len(),
            }
            .into());
        }
        let constants = self
            .constants
            .iter()
            .enumerate()
            .map(|(n, (i, j, k, s))| Ok((*i, *j, *k, parse_scalar(s, format!("constants[{n}]"))?)))
            .collect::<Result<Vec<_>, CatalogError>>()?;
        Ok(StructureAlgebra::new(&self.name, field, self.basis.clone(), constants)?)
    }

    /// Loads the algebra together with its conjugation, which must be present.
    pub fn load_involutive(&self) -> Result<InvolutiveAlgebra, CatalogError> {
        let algebra = self.load()?;
        let rows = self
            .conjugation
            .as_ref()
            .ok_or_else(|| CatalogError::MissingConjugation(self.name.clone()))?;
        let n = self.dim;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CatalogError::Conjugation(format!("expected a {n}x{n} matrix")));
        }
        let mut conjugation = Vec::with_capacity(n);
        for (r, row) in rows.iter().enumerate() {
            let mut out = Vec::with_capacity(n);
            for (c, s) in row.iter().enumerate() {
                let v = parse_scalar(s, format!("conjugation[{r}][{c}]"))?;
                if !algebra.field().contains(&v) {
                    return Err(CatalogError::Field(format!("conjugation[{r}][{c}] = {s}")));
                }
                out.push(v);
            }
            conjugation.push(out);
        }
        Ok(InvolutiveAlgebra { algebra, conjugation })
    }

    pub fn save(a: &StructureAlgebra) -> Self {
        AlgebraSpec {
            name: a.name().to_string(),
            dim: a.dim(),
            field: a.field().to_string(),
            basis: a.basis_names().to_vec(),
            constants: a
                .sparse_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
            conjugation: None,
            properties: None,
        }
    }

    pub fn save_involutive(a: &InvolutiveAlgebra) -> Self {
        let mut spec = Self::save(&a.algebra);
        spec.conjugation = Some(
            a.conjugation
                .iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect())
                .collect(),
        );
        spec
    }

    /// The same spec with constants in index order and zeros dropped.
    pub fn canonical(&self) -> Result<Self, CatalogError> {
        let mut out = Self::save(&self.load()?);
        out.conjugation = self.conjugation.clone();
        out.properties = self.properties.clone();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const C_SPEC: &str = r#"{
      "name": "C", "dim": 2, "field": "Q", "basis": ["e", "i"],
      "constants": [[1, 1, 0, "-1"], [0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
      "conjugation": [["1", "0"], ["0", "-1"]]
    }"#;

    #[test]
    fn load_and_save() {
        let spec = AlgebraSpec::from_json(C_SPEC).unwrap();
        let c = spec.load_involutive().unwrap();
        let again = AlgebraSpec::save_involutive(&c);
        assert_eq!(again, spec.canonical().unwrap());
        assert_eq!(AlgebraSpec::from_json(&again.to_json()).unwrap(), again);
    }

    #[test]
    fn errors_carry_locations() {
        let bad = C_SPEC.replace("[1, 1, 0, \"-1\"]", "[9, 1, 0, \"-1\"]");
        assert!(matches!(
            AlgebraSpec::from_json(&bad).unwrap().load(),
            Err(CatalogError::Algebra(crate::algebra::AlgebraError::IndexOutOfRange { .. }))
        ));
        let bad = C_SPEC.replace("\"-1\"]", "\"-1.5\"]");
        match AlgebraSpec::from_json(&bad).unwrap().load() {
            Err(CatalogError::Scalar { location, .. }) => assert_eq!(location, "constants[0]"),
            other => panic!("{other:?}"),
        }
        let bad = C_SPEC.replace("\"dim\": 2,", "\"dim\": 2");
        match AlgebraSpec::from_json(&bad) {
            Err(CatalogError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quadratic_scalars() {
        let s: Scalar = "1/2+1/6*sqrt3".parse().unwrap();
        assert_eq!(s.a(), &crate::exactmath::Rational::frac(1, 2));
        assert_eq!(s.b(), &crate::exactmath::Rational::frac(1, 6));
    }
}
