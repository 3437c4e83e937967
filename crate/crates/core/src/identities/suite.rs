use serde::Serialize;

use super::hierarchy::check_edges;
use super::{verify_instances, verify_prop1, verify_prop2, IdentityError, Options, Property};
use crate::catalog;
use crate::exactmath::Rational;
use crate::freealg::{golden_rows, polarize, FreePoly, Triple};

/// One reproduced fact.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteRow {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

fn row(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> SuiteRow {
    SuiteRow {
        id: id.into(),
        pass,
        detail: detail.into(),
    }
}

/// Known values for each catalog algebra: `(property, value)` pairs and
/// the degree.
pub fn catalog_expectations(name: &str) -> (Vec<(Property, bool)>, usize) {
    use Property::*;
    match name {
        "R" => (vec![(Associative, true), (HasUnit, true), (Quadratic, true)], 1),
        "C" | "H" => (vec![(Associative, true), (HasUnit, true), (Quadratic, true)], 2),
        "O" => (
            vec![(Associative, false), (Alternative, true), (HasUnit, true), (Quadratic, true)],
            2,
        ),
        "*C" | "*H" | "*O" => (vec![(HasLeftUnit, true), (HasRightUnit, false), (Tpa, false)], 2),
        "⋆C" | "⋆H" | "⋆O" => (
            vec![(HasLeftUnit, false), (HasRightUnit, false), (Flexible, true), (PowerAssociative, false)],
            2,
        ),
        "P" => (
            vec![
                (HasLeftUnit, false),
                (HasRightUnit, false),
                (Flexible, true),
                (Tpa, true),
                (PowerAssociative, false),
            ],
            2,
        ),
        _ => (Vec::new(), 0),
    }
}

fn linearization_rows(rows: &mut Vec<SuiteRow>) -> Result<(), IdentityError> {
    for g in golden_rows() {
        let f = polarize(g.triple);
        let computed = f.component(g.m)?;
        let pass = *computed == g.comparison_target();
        let mut detail = format!("f_{} = {}", g.m, computed);
        if let Some(note) = g.note {
            detail.push_str(&format!(" [{note}]"));
        }
        rows.push(row(format!("linearization ({}.{})", g.triple, g.m), pass, detail));
    }
    let mut symmetric = true;
    let mut sums = true;
    for t in Triple::all() {
        let f = polarize(t);
        let n = t.total();
        for m in 1..n {
            symmetric &= f.component(m)?.swap_variables() == *f.component(n - m)?;
        }
        let mut total = &t.identity() + &t.identity().swap_variables();
        for c in &f.components {
            total = &total + c;
        }
        sums &= total == t.identity_in(&(&FreePoly::x() + &FreePoly::y()));
    }
    rows.push(row("linearization symmetry", symmetric, "f_m(y,x) = f_{n-m}(x,y) for all eight identities"));
    rows.push(row("linearization completeness", sums, "f_0 + f_1 + ... + f_n is the identity at x + y"));
    Ok(())
}

/// Reproduces the linearization tables, the two general propositions, the
/// property chart and the statements about the catalog algebras.
pub fn reproduction_suite(options: &Options) -> Result<SuiteReport, IdentityError> {
    let mut rows = Vec::new();
    linearization_rows(&mut rows)?;

    let p1 = verify_prop1();
    let half = Rational::frac(1, 2);
    let expected = vec![-half.clone(), -half.clone(), half];
    let coeffs = p1.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
    rows.push(row(
        "tpa implies (x,x^2,x) = 0",
        p1.coefficients == expected,
        format!("(x,x^2,x) = combination of x(x,x,x), (x,x,x)x, f_1(x, x^2) with coefficients {coeffs}"),
    ));

    for t in Triple::all().into_iter().filter(|t| t.total() > 3) {
        let r = verify_prop2(t)?;
        rows.push(row(
            format!("unit substitution ({t})"),
            !r.constant.is_zero(),
            format!("f_{} at y = e is {} (x,x,x)", r.m, r.constant),
        ));
    }

    for alg in catalog::all() {
        let name = alg.name().to_string();
        let inst = verify_instances(&alg, options)?;
        let (expect, degree) = catalog_expectations(&name);
        let wrong: Vec<String> = expect
            .iter()
            .filter(|(p, v)| inst.properties.value(*p) != *v)
            .map(|(p, v)| format!("{p} expected {v}"))
            .collect();
        rows.push(row(
            format!("properties of {name}"),
            wrong.is_empty(),
            if wrong.is_empty() {
                expect.iter().map(|(p, v)| format!("{p}={v}")).collect::<Vec<_>>().join(" ")
            } else {
                wrong.join("; ")
            },
        ));
        rows.push(row(
            format!("degree of {name}"),
            inst.degree == degree && (!inst.division.all_invertible || [1, 2, 4, 8].contains(&inst.degree)),
            format!("degree {}, expected {degree}", inst.degree),
        ));
        rows.push(row(
            format!("division sample of {name}"),
            inst.division.all_invertible,
            format!("{} trials, seed {}", inst.division.trials, inst.division.seed),
        ));
        let violated: Vec<String> = check_edges(&inst.properties)
            .into_iter()
            .filter(|e| e.verdict == super::EdgeVerdict::Violated)
            .map(|e| format!("{} => {}", e.edge.premise, e.edge.conclusion))
            .collect();
        rows.push(row(
            format!("property chart on {name}"),
            violated.is_empty(),
            if violated.is_empty() { "no violated implication".to_string() } else { violated.join("; ") },
        ));
        for s in &inst.statements {
            if s.hypothesis {
                rows.push(row(format!("{} on {name}", s.id), s.consistent, s.detail.clone()));
            }
        }
    }
    Ok(SuiteReport { rows })
}
