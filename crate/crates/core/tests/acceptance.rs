//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use nalab::algebra::{Backend, StructureAlgebra};
use nalab::catalog::{self, AlgebraSpec};
use nalab::cli;
use nalab::exactmath::{FieldTag, Rational};
use nalab::freealg::{
    associator, golden_rows, polarize, words_in, FreePoly, Triple, Var,
};
use nalab::identities::{
    check_pqr, hierarchy_report, predicate, verify_prop1, verify_prop2, Options, Property,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn golden_tables() -> Outcome {
    let start = Instant::now();
    let rows = golden_rows();
    ensure(rows.len() == 17, || format!("{} rows", rows.len()))?;
    let mut flagged = Vec::new();
    for row in &rows {
        let computed = polarize(row.triple).component(row.m).map_err(|e| e.to_string())?.clone();
        ensure(computed == row.comparison_target(), || format!("({}.{}) differs", row.triple, row.m))?;
        if row.is_printed_duplicate() {
            ensure(computed != row.poly && row.note.is_some(), || "duplicate not flagged".into())?;
            flagged.push(format!("({}.{})", row.triple, row.m));
        }
    }
    ensure(flagged == ["(1.1.1.2)"], || format!("flagged {flagged:?}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("17 rows equal; printed duplicate {} flagged", flagged[0]))
}

fn symmetry_and_expansion() -> Outcome {
    let start = Instant::now();
    let sum = &FreePoly::x() + &FreePoly::y();
    for t in Triple::all() {
        let f = polarize(t);
        let n = t.total();
        for m in 1..n {
            let a = f.component(m).unwrap();
            let b = f.component(n - m).unwrap();
            ensure(a.swap_variables() == *b, || format!("symmetry ({t}.{m})"))?;
            ensure(a.bidegree() == Some((n - m, m)), || format!("bidegree ({t}.{m})"))?;
        }
        let mut total = &t.identity() + &t.identity_in(&FreePoly::y());
        for c in &f.components {
            total = &total + c;
        }
        ensure(total == t.identity_in(&sum), || format!("expansion ({t})"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok("8 triples, all m".into())
}

fn degree_four_consequence() -> Outcome {
    ensure(words_in(Var::X, 4).len() == 5, || "degree-4 space is not 5-dimensional".into())?;
    let r = verify_prop1();
    let half = Rational::frac(1, 2);
    ensure(r.coefficients == [-half.clone(), -half.clone(), half], || {
        format!("coefficients {:?}", r.coefficients)
    })?;
    // Independent recombination.
    let mut sum = FreePoly::zero();
    for (c, g) in r.coefficients.iter().zip(&r.consequences) {
        sum = sum.add_scaled(g, c);
    }
    let x = FreePoly::x();
    ensure(sum == associator(&x, &(&x * &x), &x), || "recombination differs".into())?;
    Ok("coefficients (-1/2, -1/2, 1/2)".into())
}

fn unit_substitution() -> Outcome {
    let mut constants = Vec::new();
    for t in Triple::all() {
        if t.total() == 3 {
            ensure(verify_prop2(t).is_err(), || "(1,1,1) must be excluded".into())?;
            continue;
        }
        let r = verify_prop2(t).map_err(|e| e.to_string())?;
        ensure(!r.constant.is_zero(), || format!("zero constant for ({t})"))?;
        constants.push(format!("({t}):{}", r.constant));
    }
    let c = |p, q, r| verify_prop2(Triple::new(p, q, r).unwrap()).unwrap().constant;
    ensure(c(1, 1, 2) == Rational::from_integer(2), || "c(1,1,2) != 2".into())?;
    ensure(c(2, 2, 2) == Rational::from_integer(8), || "c(2,2,2) != 8".into())?;
    Ok(constants.join(" "))
}

fn expect(alg: &StructureAlgebra, p: Property, value: bool) -> Result<(), String> {
    let v = predicate(alg, p, &Options::default()).map_err(|e| e.to_string())?;
    ensure(v.value == value, || format!("{} {p} = {}", alg.name(), v.value))?;
    Ok(())
}

/// Re-evaluates an identity at the witness the predicate reported.
fn witness_refutes(alg: &StructureAlgebra, p: Property, poly: &FreePoly) -> Result<(), String> {
    let v = predicate(alg, p, &Options::default()).map_err(|e| e.to_string())?;
    let find = |name: &str| v.evidence.iter().find(|e| e.name == name).map(|e| e.coords.clone());
    let x = find("x").ok_or_else(|| format!("{} {p}: no witness", alg.name()))?;
    let mut assignment = BTreeMap::from([(Var::X, x)]);
    if let Some(y) = find("y") {
        assignment.insert(Var::Y, y);
    }
    let value = alg.eval_free_poly(poly, &assignment).map_err(|e| e.to_string())?;
    ensure(!value.is_zero(), || format!("{} {p}: witness does not refute", alg.name()))
}

fn property_matrix() -> Outcome {
    let start = Instant::now();
    let x = FreePoly::x();
    let x2 = &x * &x;
    use Property::*;
    for (name, degree) in [("R", 1), ("C", 2), ("H", 2)] {
        let a = catalog::lookup(name).unwrap();
        expect(&a, Associative, true)?;
        expect(&a, Quadratic, true)?;
        ensure(a.degree() == degree, || format!("degree {name}"))?;
    }
    let o = catalog::lookup("O").unwrap();
    expect(&o, Alternative, true)?;
    expect(&o, Associative, false)?;
    expect(&o, Quadratic, true)?;
    ensure(o.degree() == 2, || "degree O".into())?;
    let v = predicate(&o, Associative, &Options::default()).unwrap();
    let get = |n: &str| v.evidence.iter().find(|e| e.name == n).unwrap().coords.clone();
    let (u, w, z) = (get("x"), get("y"), get("z"));
    let lhs = o.multiply(&o.multiply(&u, &w).unwrap(), &z).unwrap();
    let rhs = o.multiply(&u, &o.multiply(&w, &z).unwrap()).unwrap();
    ensure(lhs != rhs, || "O associativity witness does not refute".into())?;

    for name in ["*C", "*H", "*O"] {
        let a = catalog::lookup(name).unwrap();
        expect(&a, HasLeftUnit, true)?;
        expect(&a, HasRightUnit, false)?;
        expect(&a, Tpa, false)?;
        witness_refutes(&a, Tpa, &associator(&x, &x, &x))?;
        for t in Triple::all().into_iter().filter(|t| t.p == 2) {
            ensure(check_pqr(&a, t, Backend::Symbolic).unwrap().holds, || format!("{name} ({t})"))?;
        }
        ensure(a.degree() == 2, || format!("degree {name}"))?;
    }
    let mut star_c = String::new();
    for name in ["⋆C", "⋆H", "⋆O"] {
        let a = catalog::lookup(name).unwrap();
        expect(&a, HasLeftUnit, false)?;
        expect(&a, HasRightUnit, false)?;
        expect(&a, Flexible, true)?;
        let pa = predicate(&a, PowerAssociative, &Options::default()).unwrap().value;
        if name == "⋆C" {
            star_c = format!("⋆C power_associative={pa}");
        } else {
            ensure(!pa, || format!("{name} is power-associative"))?;
        }
    }

    let p = catalog::lookup("P").unwrap();
    ensure(p.field() == FieldTag::Quadratic(3), || "P field".into())?;
    ensure(p.sparse_constants().iter().any(|(.., c)| !c.is_rational()), || "P constants rational".into())?;
    expect(&p, HasUnit, false)?;
    expect(&p, HasLeftUnit, false)?;
    expect(&p, HasRightUnit, false)?;
    expect(&p, Flexible, true)?;
    expect(&p, Tpa, true)?;
    expect(&p, PowerAssociative, false)?;
    witness_refutes(&p, PowerAssociative, &(&(&x2 * &x2) - &(&(&x2 * &x) * &x)))?;
    let d = p.division_sampled(1000, 0);
    ensure(d.all_invertible, || "P division sample failed".into())?;

    // Multilinear checks of all eight identities on the dimension-8 algebras.
    for name in ["O", "*O", "⋆O", "P"] {
        let a = catalog::lookup(name).unwrap();
        for t in Triple::all() {
            let s = check_pqr(&a, t, Backend::Symbolic).unwrap().holds;
            let m = check_pqr(&a, t, Backend::Multilinear).unwrap().holds;
            ensure(s == m, || format!("{name} ({t}) backends disagree"))?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("all expectations met; {star_c}"))
}

fn backend_equivalence() -> Outcome {
    let mut count = 0;
    for a in catalog::all() {
        for t in Triple::all() {
            let f = polarize(t);
            let mut polys = vec![t.identity()];
            polys.extend(f.components.iter().cloned());
            for poly in &polys {
                let s = a.identity_holds(poly, Backend::Symbolic).map_err(|e| e.to_string())?;
                let m = a.identity_holds(poly, Backend::Multilinear).map_err(|e| e.to_string())?;
                ensure(s.holds == m.holds, || format!("{} ({t}) disagree", a.name()))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} algebra/polynomial pairs agree"))
}

fn hierarchy() -> Outcome {
    let mut checked = 0;
    for backend in [Backend::Symbolic, Backend::Multilinear] {
        let options = Options { backend, ..Options::default() };
        for a in catalog::all() {
            let h = hierarchy_report(&a, &options).map_err(|e| e.to_string())?;
            if let Some(v) = h.violations().next() {
                return Err(format!("{}: {} => {}", a.name(), v.edge.premise, v.edge.conclusion));
            }
            checked += h.edges.len();
        }
    }
    Ok(format!("{checked} edge checks, none violated"))
}

fn degree_instances() -> Outcome {
    let mut degrees = Vec::new();
    for a in catalog::all() {
        if a.division_sampled(1000, 0).all_invertible {
            let d = a.degree();
            ensure([1, 2, 4, 8].contains(&d), || format!("{} has degree {d}", a.name()))?;
            degrees.push(format!("{}:{d}", a.name()));
        }
    }
    ensure(catalog::lookup("*H").unwrap().degree() == 2, || "degree *H".into())?;
    Ok(degrees.join(" "))
}

fn text_facts_match(name: &str) -> Result<(), String> {
    let (_, text) = cli::run(["nalab", "report", name]);
    let (_, json) = cli::run(["nalab", "report", name, "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    ensure(doc["schema_version"] == 1, || "schema_version".into())?;
    let result = &doc["result"];
    ensure(text.contains(&format!("degree: {}", result["degree"])), || format!("{name} degree"))?;
    for p in result["properties"].as_array().unwrap() {
        let line = format!("{}: {} ({})", p["property"].as_str().unwrap(), p["value"], p["mode"].as_str().unwrap());
        ensure(text.contains(&line), || format!("{name}: text lacks {line:?}"))?;
    }
    for pair in result["identities"].as_array().unwrap() {
        let t: Triple = pair[0].as_str().unwrap().parse().map_err(|e| format!("{e}"))?;
        let line = format!("({t}): {}", pair[1]);
        ensure(text.contains(&line), || format!("{name}: text lacks {line:?}"))?;
    }
    Ok(())
}

fn round_trips() -> Outcome {
    for a in catalog::all() {
        let spec = AlgebraSpec::save(&a);
        let back = AlgebraSpec::from_json(&spec.to_json()).map_err(|e| e.to_string())?.load().map_err(|e| e.to_string())?;
        ensure(back == a && back.name() == a.name(), || format!("{} does not round-trip", a.name()))?;
        text_facts_match(a.name())?;
    }
    for argv in [
        vec!["nalab", "division", "P", "--trials", "200", "--seed", "7", "--format", "structured"],
        vec!["nalab", "report", "⋆H", "--seed", "3", "--format", "structured"],
        vec!["nalab", "check", "O", "--identity", "2,2,2", "--backend", "multilinear", "--format", "structured"],
    ] {
        let first = cli::run(argv.clone());
        let second = cli::run(argv.clone());
        ensure(first == second, || format!("{argv:?} is not deterministic"))?;
    }
    Ok("11 algebras round-trip; text and structured facts agree; outputs deterministic".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden tables", golden_tables),
        ("polarization symmetry and expansion", symmetry_and_expansion),
        ("degree-4 consequence of (x,x,x) = 0", degree_four_consequence),
        ("unit substitution constants", unit_substitution),
        ("catalog property matrix", property_matrix),
        ("backend equivalence", backend_equivalence),
        ("hierarchy consistency", hierarchy),
        ("degree instances", degree_instances),
        ("round trips", round_trips),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({t:.2?}) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({t:.2?}) {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
