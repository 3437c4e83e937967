use serde::Serialize;

use super::{property_report, IdentityError, Mode, Options, Property, PropertyReport};
use crate::algebra::StructureAlgebra;

/// A known implication between properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HierarchyEdge {
    pub premise: Property,
    pub conclusion: Property,
}

/// The chart of implications, from associativity down to
/// `(x, x^2, x) = (x^2, x^2, x^2) = 0`.
pub fn edges() -> Vec<HierarchyEdge> {
    use Property::*;
    [
        (Associative, Alternative),
        (Alternative, Flexible),
        (Alternative, PowerAssociative),
        (Flexible, PowerCommutative),
        (PowerAssociative, PowerCommutative),
        (PowerCommutative, Tpa),
        (Tpa, XX2X),
        (Tpa, X2X2X2),
    ]
    .into_iter()
    .map(|(premise, conclusion)| HierarchyEdge { premise, conclusion })
    .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum EdgeVerdict {
    /// The premise fails.
    Vacuous,
    /// Both hold; `mode` is the weaker of the two modes.
    Consistent { mode: Mode },
    /// The premise holds and the conclusion fails.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeCheck {
    pub edge: HierarchyEdge,
    #[serde(flatten)]
    pub verdict: EdgeVerdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HierarchyReport {
    pub report: PropertyReport,
    pub edges: Vec<EdgeCheck>,
}

impl HierarchyReport {
    pub fn violations(&self) -> impl Iterator<Item = &EdgeCheck> {
        self.edges.iter().filter(|e| e.verdict == EdgeVerdict::Violated)
    }
}

pub(crate) fn check_edges(report: &PropertyReport) -> Vec<EdgeCheck> {
    edges()
        .into_iter()
        .map(|edge| {
            let p = report.get(edge.premise);
            let c = report.get(edge.conclusion);
            let verdict = match (p.value, c.value) {
                (false, _) => EdgeVerdict::Vacuous,
                (true, true) => EdgeVerdict::Consistent {
                    mode: if p.mode.is_proof() { c.mode } else { p.mode },
                },
                (true, false) => EdgeVerdict::Violated,
            };
            EdgeCheck { edge, verdict }
        })
        .collect()
}

/// Evaluates every property and checks each implication of the chart.
pub fn hierarchy_report(alg: &StructureAlgebra, options: &Options) -> Result<HierarchyReport, IdentityError> {
    let report = property_report(alg, options)?;
    let edges = check_edges(&report);
    Ok(HierarchyReport { report, edges })
}
