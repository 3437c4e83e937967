//! Exact computation in finite-dimensional nonassociative algebras.
//!
//! - [`exactmath`]: rationals, `Q(sqrt d)`, polynomials, exact linear algebra.
//! - [`freealg`]: the free nonassociative algebra on `x`, `y` and the
//!   linearization of `(x^p, x^q, x^r) = 0`.
//! - [`algebra`]: algebras given by structure constants, identity checks,
//!   units, generated subalgebras.
//! - [`catalog`]: `R`, `C`, `H`, `O`, their isotopes, the pseudo-octonions,
//!   and the JSON file format.
//! - [`identities`]: properties, implication checks and the reproduction
//!   suite.
//! - [`cli`]: the `nalab` command.

pub mod exactmath;
pub mod algebra;
pub mod catalog;
pub mod freealg;
pub mod identities;
pub mod cli;
