//! Identity checks `(x^p, x^q, x^r) = 0`, the property suite, and
//! consistency checks of known implications on concrete algebras.

mod hierarchy;
mod instances;
mod props;
mod suite;

pub use hierarchy::{edges, hierarchy_report, EdgeCheck, EdgeVerdict, HierarchyEdge, HierarchyReport};
pub use instances::{verify_instances, InstanceReport, StatementCheck};
pub use props::{verify_prop1, verify_prop2, Prop1Result, Prop2Result};
pub use suite::{reproduction_suite, SuiteReport, SuiteRow};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::{Backend, Element, IdentityCheck, StructureAlgebra, Witness};
use crate::exactmath::{poly_rank, Scalar};
use crate::freealg::{associator, commutator, polarize, words_in, FreePoly, Triple, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("the triple (1,1,1) is excluded")]
    ExcludedTriple,
    #[error("substitution result is not a multiple of (x,x,x): {0}")]
    NotProportional(String),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error(transparent)]
    Free(#[from] crate::freealg::FreeAlgError),
}

/// Settings shared by every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Options {
    pub backend: Backend,
    /// Leaf-degree bound for the power-commutativity check.
    pub bound: u32,
    /// Trials for sampled checks.
    pub trials: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            backend: Backend::Symbolic,
            bound: 5,
            trials: 1000,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Associative,
    Alternative,
    Flexible,
    PowerAssociative,
    PowerCommutative,
    Tpa,
    XX2X,
    X2X2X2,
    Quadratic,
    HasLeftUnit,
    HasRightUnit,
    HasUnit,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::Associative,
        Property::Alternative,
        Property::Flexible,
        Property::PowerAssociative,
        Property::PowerCommutative,
        Property::Tpa,
        Property::XX2X,
        Property::X2X2X2,
        Property::Quadratic,
        Property::HasLeftUnit,
        Property::HasRightUnit,
        Property::HasUnit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Associative => "associative",
            Property::Alternative => "alternative",
            Property::Flexible => "flexible",
            Property::PowerAssociative => "power_associative",
            Property::PowerCommutative => "power_commutative",
            Property::Tpa => "TPA",
            Property::XX2X => "x_x2_x",
            Property::X2X2X2 => "x2_x2_x2",
            Property::Quadratic => "quadratic",
            Property::HasLeftUnit => "has_left_unit",
            Property::HasRightUnit => "has_right_unit",
            Property::HasUnit => "has_unit",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s) || p.name().replace('_', "-").eq_ignore_ascii_case(s))
            .ok_or_else(|| IdentityError::UnknownProperty(s.to_string()))
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// How strongly a value is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exact computation with generic elements or exact linear algebra.
    SymbolicProof,
    /// Exact evaluation of the linearization on all basis tuples.
    MultilinearProof,
    /// Checked for all words up to the given leaf degree.
    Bounded(u32),
    /// Random trials; can refute but not prove.
    Sampled { trials: usize, seed: u64 },
}

impl Mode {
    pub fn is_proof(self) -> bool {
        matches!(self, Mode::SymbolicProof | Mode::MultilinearProof)
    }

    fn of(backend: Backend) -> Mode {
        match backend {
            Backend::Symbolic => Mode::SymbolicProof,
            Backend::Multilinear => Mode::MultilinearProof,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::SymbolicProof => f.write_str("symbolic-proof"),
            Mode::MultilinearProof => f.write_str("multilinear-proof"),
            Mode::Bounded(d) => write!(f, "bounded({d})"),
            Mode::Sampled { trials, seed } => write!(f, "sampled({trials}, seed {seed})"),
        }
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An element quoted as evidence, with its rendering in basis names.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedElement {
    pub name: String,
    pub text: String,
    pub coords: Element,
}

impl NamedElement {
    pub fn new(alg: &StructureAlgebra, name: &str, e: &Element) -> Self {
        NamedElement {
            name: name.to_string(),
            text: alg.format(e),
            coords: e.clone(),
        }
    }
}

fn witness_elements(alg: &StructureAlgebra, w: &Witness) -> Vec<NamedElement> {
    let mut out = vec![NamedElement::new(alg, "x", &w.x)];
    if let Some(y) = &w.y {
        out.push(NamedElement::new(alg, "y", y));
    }
    out.push(NamedElement::new(alg, "value", &w.value));
    out
}

/// Renders evidence as `x = i, value = 2*i`.
pub fn describe(elements: &[NamedElement]) -> String {
    elements
        .iter()
        .map(|e| format!("{} = {}", e.name, e.text))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyValue {
    pub property: Property,
    pub value: bool,
    pub mode: Mode,
    /// For a failed universal property: where it fails. For a unit
    /// property that holds: the unit.
    pub evidence: Vec<NamedElement>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub algebra: String,
    pub options: Options,
    pub properties: Vec<PropertyValue>,
}

impl PropertyReport {
    pub fn get(&self, p: Property) -> &PropertyValue {
        self.properties
            .iter()
            .find(|v| v.property == p)
            .expect("report covers every property")
    }

    pub fn value(&self, p: Property) -> bool {
        self.get(p).value
    }
}

/// Result of checking one identity `(x^p, x^q, x^r) = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PqrCheck {
    pub triple: Triple,
    pub backend: Backend,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// `(m, f_m vanishes)` for the multilinear backend.
    pub components: Vec<(u32, bool)>,
}

/// Checks `(x^p, x^q, x^r) = 0`: the associator itself for the symbolic
/// backend, every linearization `f_m` for the multilinear one.
pub fn check_pqr(alg: &StructureAlgebra, triple: Triple, backend: Backend) -> Result<PqrCheck, IdentityError> {
    let identity = triple.identity();
    match backend {
        Backend::Symbolic => {
            let r = alg.identity_holds(&identity, backend)?;
            Ok(PqrCheck {
                triple,
                backend,
                holds: r.holds,
                witness: r.witness,
                components: Vec::new(),
            })
        }
        Backend::Multilinear => {
            let f = polarize(triple);
            let mut components = Vec::new();
            for (i, fm) in f.components.iter().enumerate() {
                let r = alg.identity_holds(fm, backend)?;
                components.push((i as u32 + 1, r.holds));
            }
            let holds = components.iter().all(|(_, h)| *h);
            let witness = if holds {
                None
            } else {
                alg.identity_holds(&identity, backend)?.witness
            };
            Ok(PqrCheck {
                triple,
                backend,
                holds,
                witness,
                components,
            })
        }
    }
}

fn x() -> FreePoly {
    FreePoly::x()
}

fn y() -> FreePoly {
    FreePoly::y()
}

fn sq(p: &FreePoly) -> FreePoly {
    p * p
}

/// The polynomials whose vanishing defines each identity-type property.
pub fn defining_identities(p: Property) -> Vec<FreePoly> {
    let (x, y) = (x(), y());
    let x2 = sq(&x);
    match p {
        Property::Alternative => vec![associator(&x, &x, &y), associator(&y, &x, &x)],
        Property::Flexible => vec![associator(&x, &y, &x)],
        Property::Tpa => vec![associator(&x, &x, &x)],
        Property::XX2X => vec![associator(&x, &x2, &x)],
        Property::X2X2X2 => vec![associator(&x2, &x2, &x2)],
        Property::PowerAssociative => vec![
            &(&x * &x2) - &(&x2 * &x),
            &(&x2 * &x2) - &(&(&x2 * &x) * &x),
        ],
        _ => Vec::new(),
    }
}

/// Commutators `[u, v]` of distinct words in `x` with total leaf degree at
/// most `bound`.
pub fn power_commutators(bound: u32) -> Vec<(FreePoly, FreePoly)> {
    let mut words = Vec::new();
    for d in 1..bound {
        words.extend(words_in(Var::X, d));
    }
    let mut out = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            if u.leaf_degree() + v.leaf_degree() <= bound {
                out.push((FreePoly::term(u.clone()), FreePoly::term(v.clone())));
            }
        }
    }
    out
}

fn from_identities(
    alg: &StructureAlgebra,
    property: Property,
    polys: &[FreePoly],
    options: &Options,
) -> Result<PropertyValue, IdentityError> {
    for p in polys {
        let r: IdentityCheck = alg.identity_holds(p, options.backend)?;
        if !r.holds {
            return Ok(PropertyValue {
                property,
                value: false,
                mode: Mode::of(options.backend),
                evidence: r.witness.map(|w| witness_elements(alg, &w)).unwrap_or_default(),
                detail: Some(format!("{} does not vanish", crate::freealg::pretty(p))),
            });
        }
    }
    Ok(PropertyValue {
        property,
        value: true,
        mode: Mode::of(options.backend),
        evidence: Vec::new(),
        detail: None,
    })
}

fn associativity(alg: &StructureAlgebra, options: &Options) -> PropertyValue {
    let n = alg.dim();
    let assoc = |u: &Element, v: &Element, w: &Element| {
        let l = alg.mul_unchecked(&alg.mul_unchecked(u, v), w);
        let r = alg.mul_unchecked(u, &alg.mul_unchecked(v, w));
        &l - &r
    };
    let holds = match options.backend {
        Backend::Symbolic => {
            let names = ["x", "y", "z"]
                .iter()
                .flat_map(|p| (0..n).map(move |i| format!("{p}{i}")))
                .collect();
            let ring = crate::exactmath::PolyRing::new(names);
            let (gx, gy, gz) = (alg.generic_in(&ring, 0), alg.generic_in(&ring, n), alg.generic_in(&ring, 2 * n));
            let l = alg.mul_unchecked(&alg.mul_unchecked(&gx, &gy), &gz);
            let mut d = alg.mul_unchecked(&gx, &alg.mul_unchecked(&gy, &gz));
            d.add_scaled(&l, &Scalar::from_integer(-1));
            d.is_zero()
        }
        Backend::Multilinear => (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| assoc(&alg.basis(i), &alg.basis(j), &alg.basis(k)).is_zero()))
        }),
    };
    let mut evidence = Vec::new();
    if !holds {
        'search: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (u, v, w) = (alg.basis(i), alg.basis(j), alg.basis(k));
                    let value = assoc(&u, &v, &w);
                    if !value.is_zero() {
                        evidence = vec![
                            NamedElement::new(alg, "x", &u),
                            NamedElement::new(alg, "y", &v),
                            NamedElement::new(alg, "z", &w),
                            NamedElement::new(alg, "value", &value),
                        ];
                        break 'search;
                    }
                }
            }
        }
    }
    PropertyValue {
        property: Property::Associative,
        value: holds,
        mode: Mode::of(options.backend),
        evidence,
        detail: (!holds).then(|| "(x,y,z) does not vanish".to_string()),
    }
}

fn power_commutativity(alg: &StructureAlgebra, options: &Options) -> Result<PropertyValue, IdentityError> {
    for (u, v) in power_commutators(options.bound) {
        let c = commutator(&u, &v);
        let r = alg.identity_holds(&c, options.backend)?;
        if !r.holds {
            return Ok(PropertyValue {
                property: Property::PowerCommutative,
                value: false,
                mode: Mode::of(options.backend),
                evidence: r.witness.map(|w| witness_elements(alg, &w)).unwrap_or_default(),
                detail: Some(format!("[{u}, {v}] does not vanish")),
            });
        }
    }
    Ok(PropertyValue {
        property: Property::PowerCommutative,
        value: true,
        mode: Mode::Bounded(options.bound),
        evidence: Vec::new(),
        detail: Some(format!("all words of total leaf degree <= {} commute", options.bound)),
    })
}

fn quadratic(alg: &StructureAlgebra) -> PropertyValue {
    let units = alg.find_units();
    let Some(e) = units.two_sided else {
        return PropertyValue {
            property: Property::Quadratic,
            value: false,
            mode: Mode::SymbolicProof,
            evidence: Vec::new(),
            detail: Some("no two-sided unit".to_string()),
        };
    };
    let gx = alg.generic("x");
    let ring = gx.coords[0].ring().clone();
    let ge = Element::new(
        e.coords
            .iter()
            .map(|c| crate::exactmath::MultiPoly::constant(&ring, c.clone()))
            .collect(),
    );
    let gx2 = alg.mul_unchecked(&gx, &gx);
    let rank = poly_rank(&[ge.coords, gx.coords, gx2.coords]);
    let value = rank <= 2;
    let mut evidence = Vec::new();
    if !value {
        let candidates = (0..alg.dim()).map(|i| alg.basis(i)).chain((1..).map(|k| {
            Element::new(
                (0..alg.dim())
                    .map(|i| Scalar::from_integer(((i as i64 + 1) * k * 7) % 11 - 5))
                    .collect(),
            )
        }));
        for x in candidates.take(10_000) {
            let x2 = alg.mul_unchecked(&x, &x);
            if crate::exactmath::linalg::rank(&[e.coords.clone(), x.coords.clone(), x2.coords.clone()]) == 3 {
                evidence = vec![NamedElement::new(alg, "x", &x), NamedElement::new(alg, "x^2", &x2)];
                break;
            }
        }
    }
    PropertyValue {
        property: Property::Quadratic,
        value,
        mode: Mode::SymbolicProof,
        evidence,
        detail: Some(format!("generic rank of (e, x, x^2) is {rank}")),
    }
}

fn unit_property(alg: &StructureAlgebra, property: Property) -> PropertyValue {
    let units = alg.find_units();
    let (value, element, count) = match property {
        Property::HasLeftUnit => (
            units.has_left_unit(),
            units.left_units.as_ref().map(|s| Element::new(s.particular.clone())),
            units.left_units.as_ref().map(|s| s.kernel.len()),
        ),
        Property::HasRightUnit => (
            units.has_right_unit(),
            units.right_units.as_ref().map(|s| Element::new(s.particular.clone())),
            units.right_units.as_ref().map(|s| s.kernel.len()),
        ),
        _ => (units.has_unit(), units.two_sided.clone(), Some(0)),
    };
    PropertyValue {
        property,
        value,
        mode: Mode::SymbolicProof,
        evidence: element.iter().map(|e| NamedElement::new(alg, "e", e)).collect(),
        detail: match (value, count) {
            (true, Some(k)) if k > 0 => Some(format!("solution set has dimension {k}")),
            (false, _) => Some("linear system is inconsistent".to_string()),
            _ => None,
        },
    }
}

/// Evaluates one property.
pub fn predicate(alg: &StructureAlgebra, property: Property, options: &Options) -> Result<PropertyValue, IdentityError> {
    Ok(match property {
        Property::Associative => associativity(alg, options),
        Property::PowerCommutative => power_commutativity(alg, options)?,
        Property::Quadratic => quadratic(alg),
        Property::HasLeftUnit | Property::HasRightUnit | Property::HasUnit => unit_property(alg, property),
        Property::PowerAssociative => {
            let mut v = from_identities(alg, property, &defining_identities(property), options)?;
            if v.value {
                v.detail = Some(power_associativity_cross_check(alg, options));
            }
            v
        }
        _ => from_identities(alg, property, &defining_identities(property), options)?,
    })
}

/// Checks that `A(x)` is associative on its own basis for a few random `x`.
fn power_associativity_cross_check(alg: &StructureAlgebra, options: &Options) -> String {
    use rand::SeedableRng;
    let samples = 5;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(options.seed);
    for _ in 0..samples {
        let x = alg.random_nonzero(&mut rng);
        let sub = alg.subalgebra_generated(&x);
        for u in &sub.basis {
            for v in &sub.basis {
                for w in &sub.basis {
                    let l = alg.mul_unchecked(&alg.mul_unchecked(u, v), w);
                    let r = alg.mul_unchecked(u, &alg.mul_unchecked(v, w));
                    if l != r {
                        return format!(
                            "INCONSISTENT: criterion holds but A(x) is not associative at x = {}",
                            alg.format(&x)
                        );
                    }
                }
            }
        }
    }
    format!("x x^2 = x^2 x and x^2 x^2 = (x^2 x) x; A(x) associative at {samples} random x (seed {})", options.seed)
}

/// Every property, in a fixed order.
pub fn property_report(alg: &StructureAlgebra, options: &Options) -> Result<PropertyReport, IdentityError> {
    let properties = Property::ALL
        .iter()
        .map(|p| predicate(alg, *p, options))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PropertyReport {
        algebra: alg.name().to_string(),
        options: *options,
        properties,
    })
}
