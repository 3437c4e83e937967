use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{multilinear, AlgebraError, Element, StructureAlgebra};
use crate::exactmath::{Coeff, Scalar};
use crate::freealg::{EvalPlan, FreePoly, PlanNode, Var};

/// How [`StructureAlgebra::identity_holds`] decides an identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Evaluate at generic elements whose coordinates are indeterminates.
    #[default]
    Symbolic,
    /// Evaluate the full linearization on basis elements.
    Multilinear,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Symbolic => "symbolic",
            Backend::Multilinear => "multilinear",
        })
    }
}

impl FromStr for Backend {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "symbolic" => Ok(Backend::Symbolic),
            "multilinear" => Ok(Backend::Multilinear),
            _ => Err(format!("unknown backend {s:?} (expected symbolic or multilinear)")),
        }
    }
}

/// A point where a polynomial does not vanish, with the value there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub x: Element,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Element>,
    pub value: Element,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub backend: Backend,
    pub witness: Option<Witness>,
}

/// Seed of the random stage of the witness search.
const WITNESS_SEED: u64 = 0;
const WITNESS_TRIES: usize = 2000;

impl StructureAlgebra {
    /// Evaluates a compiled plan. `ctx` is the coefficient ring of the
    /// result; `unit` is only consulted if the plan contains the unit.
    pub fn eval_plan<C: Coeff>(
        &self,
        plan: &EvalPlan,
        ctx: &C::Ctx,
        x: Option<&Element<C>>,
        y: Option<&Element<C>>,
        unit: Option<&Element<C>>,
    ) -> Result<Element<C>, AlgebraError> {
        let n = self.dim();
        for e in [x, y, unit].into_iter().flatten() {
            self.check_dim(e)?;
        }
        let mut values: Vec<Element<C>> = Vec::with_capacity(plan.nodes().len());
        for node in plan.nodes() {
            let v = match node {
                PlanNode::Unit => unit.ok_or(AlgebraError::UnitRequired)?.clone(),
                PlanNode::Leaf(Var::X) => x.ok_or(AlgebraError::UnassignedVariable(Var::X))?.clone(),
                PlanNode::Leaf(Var::Y) => y.ok_or(AlgebraError::UnassignedVariable(Var::Y))?.clone(),
                PlanNode::Product(l, r) => self.mul_unchecked(&values[*l], &values[*r]),
                PlanNode::Combo(items) => {
                    let mut acc = Element::zero(ctx, n);
                    for (c, id) in items {
                        acc.add_scaled(&values[*id], &Scalar::rational(c.clone()));
                    }
                    acc
                }
            };
            values.push(v);
        }
        Ok(values.swap_remove(plan.root()))
    }

    /// Evaluates `poly` at concrete elements. The unit symbol is sent to the
    /// two-sided unit, which must exist.
    pub fn eval_free_poly(
        &self,
        poly: &FreePoly,
        assignment: &BTreeMap<Var, Element>,
    ) -> Result<Element, AlgebraError> {
        for e in assignment.values() {
            self.check(e)?;
        }
        let unit = self.unit_for(poly)?;
        self.eval_plan(
            &EvalPlan::compile(poly),
            &(),
            assignment.get(&Var::X),
            assignment.get(&Var::Y),
            unit.as_ref(),
        )
    }

    fn unit_for(&self, poly: &FreePoly) -> Result<Option<Element>, AlgebraError> {
        if !poly.contains_unit() {
            return Ok(None);
        }
        self.find_units()
            .two_sided
            .map(Some)
            .ok_or(AlgebraError::UnitRequired)
    }

    /// Decides whether `poly` vanishes for all `x`, `y` in the algebra.
    /// When it does not, a concrete witness is searched for: basis vectors,
    /// then pairs of them, then sums over the failing basis multiset, then
    /// seeded small-integer points.
    pub fn identity_holds(&self, poly: &FreePoly, backend: Backend) -> Result<IdentityCheck, AlgebraError> {
        let unit = self.unit_for(poly)?;
        let plan = EvalPlan::compile(poly);
        let failing = match backend {
            Backend::Symbolic => {
                let value = if poly.variables().contains(&Var::Y) {
                    let (x, y) = self.generic_pair();
                    let ctx = x.coords[0].ctx();
                    let u = unit.as_ref().map(|u| lift(u, &ctx));
                    self.eval_plan(&plan, &ctx, Some(&x), Some(&y), u.as_ref())?
                } else {
                    let x = self.generic("x");
                    let ctx = x.coords[0].ctx();
                    let u = unit.as_ref().map(|u| lift(u, &ctx));
                    self.eval_plan(&plan, &ctx, Some(&x), None, u.as_ref())?
                };
                (!value.is_zero()).then(|| (Vec::new(), Vec::new()))
            }
            Backend::Multilinear => poly.bihomogeneous_parts().into_iter().find_map(|(_, part)| {
                multilinear::first_failure(self, &EvalPlan::compile(&part), unit.as_ref())
            }),
        };
        let witness = failing
            .as_ref()
            .and_then(|hint| self.find_witness(&plan, poly, unit.as_ref(), hint));
        Ok(IdentityCheck {
            holds: failing.is_none(),
            backend,
            witness,
        })
    }

    fn find_witness(
        &self,
        plan: &EvalPlan,
        poly: &FreePoly,
        unit: Option<&Element>,
        hint: &(Vec<u8>, Vec<u8>),
    ) -> Option<Witness> {
        let n = self.dim();
        let uses_y = poly.variables().contains(&Var::Y);
        let try_point = |x: Element, y: Option<Element>| -> Option<Witness> {
            let value = self.eval_plan(plan, &(), Some(&x), y.as_ref(), unit).ok()?;
            (!value.is_zero()).then_some(Witness { x, y, value })
        };
        let y_choices = |j: usize| if uses_y { Some(self.basis(j)) } else { None };
        let y_range = if uses_y { n } else { 1 };
        for i in 0..n {
            for j in 0..y_range {
                if let Some(w) = try_point(self.basis(i), y_choices(j)) {
                    return Some(w);
                }
            }
        }
        let sum_of = |idx: &[u8]| {
            let mut e = self.zero();
            let mut last = None;
            for &i in idx {
                if last != Some(i) {
                    e.add_scaled(&self.basis(i as usize), &Scalar::one());
                }
                last = Some(i);
            }
            e
        };
        if !hint.0.is_empty() || !hint.1.is_empty() {
            let y = uses_y.then(|| sum_of(&hint.1));
            if let Some(w) = try_point(sum_of(&hint.0), y) {
                return Some(w);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(WITNESS_SEED);
        let random = |rng: &mut ChaCha8Rng| {
            Element::new((0..n).map(|_| Scalar::from_integer(rng.gen_range(-5..=5))).collect())
        };
        for _ in 0..WITNESS_TRIES {
            let x = random(&mut rng);
            let y = uses_y.then(|| random(&mut rng));
            if let Some(w) = try_point(x, y) {
                return Some(w);
            }
        }
        None
    }
}

fn lift<C: Coeff>(e: &Element, ctx: &C::Ctx) -> Element<C> {
    Element::new(e.coords.iter().map(|s| C::from_scalar(ctx, s)).collect())
}
