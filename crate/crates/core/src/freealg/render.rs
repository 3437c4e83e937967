//! Printing in associator / commutator notation.

use std::collections::BTreeMap;

use super::{associator, commutator, Atom, FreePoly, Term};
use crate::exactmath::{span_membership, Rational, Scalar};

enum Item {
    Assoc([Atom; 3]),
    Comm([Atom; 2]),
}

impl Item {
    fn poly(&self) -> FreePoly {
        match self {
            Item::Assoc([a, b, c]) => associator(&a.poly(), &b.poly(), &c.poly()),
            Item::Comm([a, b]) => commutator(&a.poly(), &b.poly()),
        }
    }

    fn text(&self) -> String {
        match self {
            Item::Assoc([a, b, c]) => format!("({a},{b},{c})"),
            Item::Comm([a, b]) => format!("[{a},{b}]"),
        }
    }

    fn bidegree(&self) -> (u32, u32) {
        let atoms: &[Atom] = match self {
            Item::Assoc(a) => a,
            Item::Comm(a) => a,
        };
        atoms.iter().fold((0, 0), |(dx, dy), a| {
            (dx + a.x_degree(), dy + a.y_degree())
        })
    }
}

fn candidates(bidegree: (u32, u32)) -> Vec<(Item, FreePoly)> {
    let atoms = Atom::all();
    let mut items = Vec::new();
    for (i, &a) in atoms.iter().enumerate() {
        for &b in &atoms[..i] {
            items.push(Item::Comm([a, b]));
        }
    }
    for &a in &atoms {
        for &b in &atoms {
            for &c in &atoms {
                items.push(Item::Assoc([a, b, c]));
            }
        }
    }
    items
        .into_iter()
        .filter(|it| it.bidegree() == bidegree)
        .map(|it| {
            let p = it.poly();
            (it, p)
        })
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

/// `poly` as a combination of commutators and associators of
/// `x, y, x^2, x•y, y^2`, e.g. `[x^2,y] + [x•y,x]`; the raw word form when
/// no such expression exists. Commutator-only and associator-only forms are
/// tried, the one with fewer items wins (associators on a tie), and a mixed
/// form is the last resort. Deterministic.
pub fn pretty(poly: &FreePoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let Some(bidegree) = poly.bidegree() else {
        return poly.to_string();
    };
    let cands = candidates(bidegree);
    let (comms, assocs): (Vec<_>, Vec<_>) =
        cands.iter().partition(|(it, _)| matches!(it, Item::Comm(_)));
    let best = match (express(poly, &comms), express(poly, &assocs)) {
        (Some(c), Some(a)) if c.len() < a.len() => Some(c),
        (_, Some(a)) => Some(a),
        (Some(c), None) => Some(c),
        (None, None) => express(poly, &cands.iter().collect::<Vec<_>>()),
    };
    match best {
        Some(items) => render(&items),
        None => poly.to_string(),
    }
}

fn express<'a>(
    poly: &FreePoly,
    cands: &[&'a (Item, FreePoly)],
) -> Option<Vec<(&'a Item, Rational)>> {
    let mut index: BTreeMap<&Term, usize> = BTreeMap::new();
    for (t, _) in poly.terms().chain(cands.iter().flat_map(|(_, p)| p.terms())) {
        let n = index.len();
        index.entry(t).or_insert(n);
    }
    let vector = |p: &FreePoly| {
        let mut v = vec![Scalar::zero(); index.len()];
        for (t, c) in p.terms() {
            v[index[t]] = Scalar::rational(c.clone());
        }
        v
    };
    let gens: Vec<Vec<Scalar>> = cands.iter().map(|(_, p)| vector(p)).collect();
    let membership = span_membership(&vector(poly), &gens);
    let coeffs = membership.coefficients.filter(|_| membership.inside)?;
    Some(
        cands
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((item, _), c)| (item, c.a().clone()))
            .collect(),
    )
}

fn render(items: &[(&Item, Rational)]) -> String {
    let mut out = String::new();
    for (item, c) in items {
        let neg = c.is_negative();
        let mag = c.abs();
        out.push_str(match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&item.text());
    }
    out
}
