use std::fmt::Write;

use serde_json::Value;

use crate::algebra::{DivisionReport, StructureAlgebra};
use crate::catalog::CatalogEntry;
use crate::freealg::Triple;
use crate::identities::{describe, EdgeCheck, EdgeVerdict, InstanceReport, PqrCheck, PropertyValue, SuiteReport};

pub fn list(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        writeln!(out, "{:<3} dim {}  {}  (aliases: {})", e.name, e.dim, e.description, e.aliases.join(", ")).unwrap();
    }
    out
}

pub fn show(a: &StructureAlgebra) -> String {
    let mut out = String::new();
    writeln!(out, "{} over {}, dimension {}", a.name(), a.field(), a.dim()).unwrap();
    writeln!(out, "basis: {}", a.basis_names().join(", ")).unwrap();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let p = a.mul_unchecked(&a.basis(i), &a.basis(j));
            writeln!(out, "{} * {} = {}", a.basis_names()[i], a.basis_names()[j], a.format(&p)).unwrap();
        }
    }
    out
}

pub fn check(a: &StructureAlgebra, r: &PqrCheck) -> String {
    let mut out = String::new();
    let verdict = if r.holds { "holds" } else { "fails" };
    writeln!(out, "{} ({})", verdict, r.backend).unwrap();
    for (m, h) in &r.components {
        writeln!(out, "f_{m}: {}", if *h { "holds" } else { "fails" }).unwrap();
    }
    if let Some(w) = &r.witness {
        let mut parts = vec![format!("x = {}", a.format(&w.x))];
        if let Some(y) = &w.y {
            parts.push(format!("y = {}", a.format(y)));
        }
        parts.push(format!("value = {}", a.format(&w.value)));
        writeln!(out, "witness: {}", parts.join(", ")).unwrap();
    }
    out
}

pub fn property(v: &PropertyValue) -> String {
    let mut out = format!("{}: {} ({})\n", v.property, v.value, v.mode);
    if !v.evidence.is_empty() {
        let label = if v.value { "evidence" } else { "witness" };
        writeln!(out, "  {label}: {}", describe(&v.evidence)).unwrap();
    }
    if let Some(d) = &v.detail {
        writeln!(out, "  {d}").unwrap();
    }
    out
}

pub fn division(a: &StructureAlgebra, r: &DivisionReport) -> String {
    let mut out = String::new();
    if r.all_invertible {
        writeln!(out, "no zero divisor found in {} trials (seed {})", r.trials, r.seed).unwrap();
    } else {
        let x = r.failing_witness.as_ref().expect("failure has a witness");
        let side = r.failing_side.map(|s| format!("{s:?}").to_lowercase()).unwrap_or_default();
        writeln!(out, "{side} multiplication by {} is singular (seed {})", a.format(x), r.seed).unwrap();
    }
    out
}

pub fn polarize(t: Triple, rows: &[Value]) -> String {
    let mut out = String::new();
    for row in rows {
        let m = row["m"].as_u64().unwrap_or_default();
        let e = row["expression"].as_str().unwrap_or_default();
        writeln!(out, "({t}.{m}) {e} = 0").unwrap();
    }
    out
}

pub fn report(a: &StructureAlgebra, inst: &InstanceReport, edges: &[EdgeCheck]) -> String {
    let mut out = String::new();
    writeln!(out, "{} (dimension {}, field {})", a.name(), a.dim(), a.field()).unwrap();
    writeln!(out, "degree: {}", inst.degree).unwrap();
    let d = &inst.division;
    writeln!(
        out,
        "division: {} (sampled({}, seed {}))",
        d.all_invertible, d.trials, d.seed
    )
    .unwrap();
    writeln!(out, "\nidentities:").unwrap();
    for (t, h) in &inst.identities {
        writeln!(out, "  ({t}): {}", h).unwrap();
    }
    writeln!(out, "\nproperties:").unwrap();
    for v in &inst.properties.properties {
        for line in property(v).lines() {
            writeln!(out, "  {line}").unwrap();
        }
    }
    writeln!(out, "\nimplications:").unwrap();
    for e in edges {
        let verdict = match &e.verdict {
            EdgeVerdict::Vacuous => "vacuous".to_string(),
            EdgeVerdict::Consistent { mode } => format!("consistent ({mode})"),
            EdgeVerdict::Violated => "VIOLATED".to_string(),
        };
        writeln!(out, "  {} => {}: {verdict}", e.edge.premise, e.edge.conclusion).unwrap();
    }
    writeln!(out, "\nstatements:").unwrap();
    for s in &inst.statements {
        let verdict = match (s.hypothesis, s.conclusion, s.consistent) {
            (false, _, _) => "not applicable",
            (true, None, _) => "open question",
            (true, Some(_), true) => "consistent",
            (true, Some(_), false) => "INCONSISTENT",
        };
        writeln!(out, "  {}: {verdict}", s.id).unwrap();
        if s.hypothesis && !s.detail.is_empty() {
            writeln!(out, "    {}", s.detail).unwrap();
        }
    }
    out
}

pub fn suite(r: &SuiteReport) -> String {
    let mut out = String::new();
    for row in &r.rows {
        let status = if row.pass { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {}", row.id).unwrap();
        if !row.detail.is_empty() {
            writeln!(out, "      {}", row.detail).unwrap();
        }
    }
    let failed = r.failures().count();
    writeln!(out, "\n{} checks, {} failed", r.rows.len(), failed).unwrap();
    out
}
