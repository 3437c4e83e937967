use serde::Serialize;

use super::{check_pqr, property_report, IdentityError, Options, Property, PropertyReport};
use crate::algebra::{DivisionReport, StructureAlgebra};
use crate::freealg::Triple;

/// One statement checked on one algebra. A statement is inconsistent when
/// its hypothesis holds and its conclusion fails.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatementCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypothesis: bool,
    /// `None` when not evaluated or when the statement poses a question.
    pub conclusion: Option<bool>,
    pub consistent: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceReport {
    pub algebra: String,
    pub degree: usize,
    pub division: DivisionReport,
    /// Which of the eight identities hold (symbolic proof).
    pub identities: Vec<(Triple, bool)>,
    pub properties: PropertyReport,
    pub statements: Vec<StatementCheck>,
}

impl InstanceReport {
    pub fn inconsistencies(&self) -> impl Iterator<Item = &StatementCheck> {
        self.statements.iter().filter(|s| !s.consistent)
    }
}

fn check(
    id: &'static str,
    statement: &'static str,
    hypothesis: bool,
    conclusion: bool,
    detail: String,
) -> StatementCheck {
    StatementCheck {
        id,
        statement,
        hypothesis,
        conclusion: hypothesis.then_some(conclusion),
        consistent: !hypothesis || conclusion,
        detail,
    }
}

fn list(ts: &[Triple]) -> String {
    if ts.is_empty() {
        return "none".to_string();
    }
    ts.iter().map(|t| format!("({t})")).collect::<Vec<_>>().join(" ")
}

/// Checks the hypotheses and conclusions of the structural results on
/// `alg`. "No zero divisors" and "division" are taken from sampling
/// (`options.trials`, `options.seed`); everything else is exact.
pub fn verify_instances(alg: &StructureAlgebra, options: &Options) -> Result<InstanceReport, IdentityError> {
    let props = property_report(alg, options)?;
    let degree = alg.degree();
    let division = alg.division_sampled(options.trials, options.seed);
    let identities = Triple::all()
        .into_iter()
        .map(|t| Ok((t, check_pqr(alg, t, options.backend)?.holds)))
        .collect::<Result<Vec<_>, IdentityError>>()?;

    let holding: Vec<Triple> = identities.iter().filter(|(_, h)| *h).map(|(t, _)| *t).collect();
    let holding_left: Vec<Triple> = holding.iter().copied().filter(|t| t.p == 1).collect();
    let v = |p: Property| props.value(p);
    let unit = v(Property::HasUnit);
    let left = v(Property::HasLeftUnit);
    let domain = division.all_invertible;
    let small = degree <= 4;
    let ids = format!("identities holding: {}", list(&holding));
    let mut statements = Vec::new();

    statements.push(check(
        "tpa-implies-x-x2-x",
        "every third power-associative algebra satisfies (x,x^2,x) = 0",
        v(Property::Tpa),
        v(Property::XX2X),
        String::new(),
    ));
    statements.push(check(
        "unital-identity-implies-tpa",
        "a unital algebra satisfying some (x^p,x^q,x^r) = 0 is third power-associative",
        unit && !holding.is_empty(),
        v(Property::Tpa),
        ids.clone(),
    ));
    statements.push(check(
        "left-unit-domain-implies-unit-and-tpa",
        "a left-unital algebra without zero divisors satisfying some (x,x^q,x^r) = 0 is unital and third power-associative",
        left && domain && !holding_left.is_empty(),
        unit && v(Property::Tpa),
        ids.clone(),
    ));
    let x_x_x2 = holding.iter().any(|t| (t.p, t.q, t.r) == (1, 1, 2));
    statements.push(check(
        "left-unit-domain-x-x-x2-implies-pa",
        "a left-unital algebra without zero divisors satisfying (x,x,x^2) = 0 is unital and power-associative",
        left && domain && x_x_x2,
        unit && v(Property::PowerAssociative),
        ids.clone(),
    ));
    let case1 = unit && !holding.is_empty();
    let case2 = domain && !holding_left.is_empty();
    statements.push(check(
        "degree4-left-unit-power-commutative",
        "a left-unital algebra of degree <= 4 is power-commutative if it is unital with some identity, or has no zero divisors with some (x,x^q,x^r) = 0",
        small && left && (case1 || case2),
        v(Property::PowerCommutative),
        format!("degree {degree}; {ids}"),
    ));

    let pa = v(Property::PowerAssociative);
    let quad = v(Property::Quadratic);
    let mismatched: Vec<Triple> = identities
        .iter()
        .filter(|(_, h)| *h != pa || *h != quad)
        .map(|(t, _)| *t)
        .collect();
    statements.push(check(
        "unital-degree4-equivalence",
        "for a unital division algebra of degree <= 4: each identity (x^p,x^q,x^r) = 0 <=> power-associative <=> quadratic",
        domain && unit && small,
        mismatched.is_empty(),
        format!("PA {pa}, quadratic {quad}; {ids}; mismatched: {}", list(&mismatched)),
    ));
    let mismatched_left: Vec<Triple> = identities
        .iter()
        .filter(|(t, h)| t.p == 1 && *h != quad)
        .map(|(t, _)| *t)
        .collect();
    statements.push(check(
        "left-unit-degree4-equivalence",
        "for a left-unital division algebra of degree <= 4: each identity (x,x^q,x^r) = 0 <=> quadratic",
        domain && left && small,
        mismatched_left.is_empty(),
        format!("quadratic {quad}; {ids}; mismatched: {}", list(&mismatched_left)),
    ));

    let name = alg.name();
    let flexible_role = matches!(name, "⋆C" | "⋆H" | "⋆O" | "P");
    statements.push(check(
        "flexible-not-pa-role",
        "the isotopes x̄ȳ and the pseudo-octonions are flexible, not power-associative division algebras without left unit",
        flexible_role,
        v(Property::Flexible) && !pa && !left && domain && small,
        format!("flexible {}, PA {pa}, left unit {left}, degree {degree}", v(Property::Flexible)),
    ));
    let star_role = matches!(name, "*C" | "*H" | "*O");
    let all_x2 = identities.iter().filter(|(t, _)| t.p == 2).all(|(_, h)| *h);
    statements.push(check(
        "star-isotope-role",
        "the isotopes x̄y are left-unital division algebras of degree 2 satisfying every (x^2,x^q,x^r) = 0 without being third power-associative",
        star_role,
        left && domain && degree == 2 && all_x2 && !v(Property::Tpa),
        format!("left unit {left}, degree {degree}, TPA {}; {ids}", v(Property::Tpa)),
    ));
    let open = unit && v(Property::Tpa) && domain;
    statements.push(StatementCheck {
        id: "degree8-unital-tpa-question",
        statement: "are there unital third power-associative division algebras of degree 8?",
        hypothesis: open,
        conclusion: None,
        consistent: true,
        detail: if open {
            format!("unital, TPA, division; degree {degree}")
        } else {
            "not a unital TPA division algebra".to_string()
        },
    });

    Ok(InstanceReport {
        algebra: name.to_string(),
        degree,
        division,
        identities,
        properties: props,
        statements,
    })
}
