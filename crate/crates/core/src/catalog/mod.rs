//! Named algebras: the doubled algebras `R, C, H, O`, their isotopes
//! `*A` (`x̄y`) and `⋆A` (`x̄ȳ`), and the pseudo-octonions `P`. Also the
//! JSON file format for user algebras.

mod cayley;
mod okubo;
mod spec;

pub use cayley::{classical, star_both, star_left, Classical, InvolutiveAlgebra};
pub use okubo::{mu, okubo};
pub use spec::AlgebraSpec;

use std::path::Path;

use serde::Serialize;

use crate::algebra::{AlgebraError, StructureAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown algebra {0:?}; try `list`")]
    UnknownAlgebra(String),
    #[error("{0} has no conjugation")]
    MissingConjugation(String),
    #[error("bad conjugation: {0}")]
    Conjugation(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("bad scalar {text:?} at {location}")]
    Scalar { location: String, text: String },
    #[error("unsupported field {0:?} (expected \"Q\" or \"Q(sqrt d)\")")]
    Field(String),
    #[error("{0}")]
    Io(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A catalog member as listed by `list`.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub dim: usize,
    pub description: &'static str,
}

const ENTRIES: [CatalogEntry; 11] = [
    CatalogEntry { name: "R", aliases: &["ℝ"], dim: 1, description: "real numbers" },
    CatalogEntry { name: "C", aliases: &["ℂ"], dim: 2, description: "complex numbers" },
    CatalogEntry { name: "H", aliases: &["ℍ"], dim: 4, description: "quaternions" },
    CatalogEntry { name: "O", aliases: &["𝕆"], dim: 8, description: "octonions" },
    CatalogEntry { name: "*C", aliases: &["star-C", "*ℂ"], dim: 2, description: "C with x*y = conj(x) y" },
    CatalogEntry { name: "*H", aliases: &["star-H", "*ℍ"], dim: 4, description: "H with x*y = conj(x) y" },
    CatalogEntry { name: "*O", aliases: &["star-O", "*𝕆"], dim: 8, description: "O with x*y = conj(x) y" },
    CatalogEntry { name: "⋆C", aliases: &["bistar-C", "⋆ℂ"], dim: 2, description: "C with x*y = conj(x) conj(y)" },
    CatalogEntry { name: "⋆H", aliases: &["bistar-H", "⋆ℍ"], dim: 4, description: "H with x*y = conj(x) conj(y)" },
    CatalogEntry { name: "⋆O", aliases: &["bistar-O", "⋆𝕆"], dim: 8, description: "O with x*y = conj(x) conj(y)" },
    CatalogEntry { name: "P", aliases: &["okubo", "ℙ"], dim: 8, description: "pseudo-octonions (Okubo algebra) over Q(sqrt 3)" },
];

pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

fn canonical_name(name: &str) -> Option<&'static str> {
    ENTRIES
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .map(|e| e.name)
}

fn classical_of(letter: char) -> Option<Classical> {
    Some(match letter {
        'R' => Classical::R,
        'C' => Classical::C,
        'H' => Classical::H,
        'O' => Classical::O,
        _ => return None,
    })
}

/// A catalog algebra by name or alias.
pub fn lookup(name: &str) -> Result<StructureAlgebra, CatalogError> {
    let canon = canonical_name(name).ok_or_else(|| CatalogError::UnknownAlgebra(name.to_string()))?;
    let mut chars = canon.chars();
    let first = chars.next().expect("nonempty name");
    if canon == "P" {
        return okubo();
    }
    if let Some(c) = classical_of(first) {
        return Ok(classical(c).algebra);
    }
    let base = classical(chars.next().and_then(classical_of).expect("isotope of a classical algebra"));
    match first {
        '*' => star_left(&base),
        _ => star_both(&base),
    }
}

/// `R`, `C`, `H` or `O` with its conjugation.
pub fn lookup_involutive(name: &str) -> Result<InvolutiveAlgebra, CatalogError> {
    let canon = canonical_name(name).ok_or_else(|| CatalogError::UnknownAlgebra(name.to_string()))?;
    let mut chars = canon.chars();
    match (chars.next().and_then(classical_of), chars.next()) {
        (Some(c), None) => Ok(classical(c)),
        _ => Err(CatalogError::MissingConjugation(canon.to_string())),
    }
}

/// Every catalog algebra, in listing order.
pub fn all() -> Vec<StructureAlgebra> {
    ENTRIES
        .iter()
        .map(|e| lookup(e.name).expect("catalog entries build"))
        .collect()
}

/// A catalog name, or else a path to an algebra file.
pub fn resolve(source: &str) -> Result<StructureAlgebra, CatalogError> {
    match lookup(source) {
        Ok(a) => Ok(a),
        Err(CatalogError::UnknownAlgebra(_)) if Path::new(source).exists() => {
            AlgebraSpec::read(Path::new(source))?.load()
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for e in entries() {
            let a = lookup(e.name).unwrap();
            assert_eq!(a.name(), e.name);
            assert_eq!(a.dim(), e.dim);
            for alias in e.aliases {
                assert_eq!(lookup(alias).unwrap().name(), e.name);
            }
        }
        assert!(matches!(lookup("Z"), Err(CatalogError::UnknownAlgebra(_))));
        assert!(lookup_involutive("H").is_ok());
        assert!(lookup_involutive("*H").is_err());
    }
}
