//! Hand-encoded linearized identities, written in the usual notation and
//! parsed independently of [`polarize`](super::polarize) so the two can be
//! cross-checked.
//!
//! Row grammar: `expr := item ('+' item)*`, `item := '(' a ',' a ',' a ')' |
//! '[' a ',' a ']'`, `a := x | y | x^2 | y^2 | x•y | y•x`.

use serde::Serialize;

use super::{associator, commutator, Atom, FreeAlgError, FreePoly, Triple};

/// The (1,1,1) cell of the second table is printed identical to the first
/// table's cell, although by the `x <-> y` symmetry it must be the swap.
const DUPLICATED_CELL_NOTE: &str = "printed identical to the (1.1.1.1) row; by the symmetry f_2(x,y) = f_1(y,x) the second component is [y^2,x]+[y•x,y]";

/// The (1,1,2) cell of the second table lacks the trailing `= 0`.
const MISSING_EQ_NOTE: &str = "printed without '= 0'; read as an identity like every other row";

const FIRST: [((u8, u8, u8), &str); 8] = [
    ((1, 1, 1), "[x^2,y]+[x•y,x]"),
    ((1, 1, 2), "(x,x,x•y)+(x,y,x^2)+(y,x,x^2)"),
    ((1, 2, 1), "(x,x^2,y)+(x,x•y,x)+(y,x^2,x)"),
    ((1, 2, 2), "(x,x^2,x•y)+(x,x•y,x^2)+(y,x^2,x^2)"),
    ((2, 1, 1), "(x^2,x,y)+(x^2,y,x)+(x•y,x,x)"),
    ((2, 1, 2), "(x^2,x,x•y)+(x^2,y,x^2)+(x•y,x,x^2)"),
    ((2, 2, 1), "(x^2,x^2,y)+(x^2,x•y,x)+(x•y,x^2,x)"),
    ((2, 2, 2), "(x^2,x^2,x•y)+(x^2,x•y,x^2)+(x•y,x^2,x^2)"),
];

const SECOND: [((u8, u8, u8), &str); 8] = [
    ((1, 1, 1), "[x^2,y]+[x•y,x]"),
    ((1, 1, 2), "(x,x,y^2)+(x,y,x•y)+(y,x,x•y)+(y,y,x^2)"),
    ((1, 2, 1), "(x,x•y,y)+(x,y^2,x)+(y,x^2,y)+(y,x•y,x)"),
    (
        (1, 2, 2),
        "(x,x^2,y^2)+(x,y^2,x^2)+(y,x•y,x^2)+(y,x^2,x•y)+(x,x•y,x•y)",
    ),
    ((2, 1, 1), "(x^2,y,y)+(x•y,x,y)+(x•y,y,x)+(y^2,x,x)"),
    (
        (2, 1, 2),
        "(x^2,x,y^2)+(x^2,y,x•y)+(x•y,x,x•y)+(x•y,y,x^2)+(y^2,x,x^2)",
    ),
    (
        (2, 2, 1),
        "(x^2,x•y,y)+(x^2,y^2,x)+(x•y,x^2,y)+(x•y,x•y,x)+(y^2,x^2,x)",
    ),
    (
        (2, 2, 2),
        "(x^2,x^2,y^2)+(x^2,x•y,x•y)+(x^2,y^2,x^2)+(x•y,x^2,x•y)+(x•y,x•y,x^2)+(y^2,x^2,x^2)",
    ),
];

const THIRD: &str =
    "(x•y,x^2,y^2)+(x^2,x•y,y^2)+(x^2,y^2,x•y)+(x•y,y^2,x^2)+(y^2,x•y,x^2)+(y^2,x^2,x•y)+(x•y,x•y,x•y)";

/// One cell of the tables.
#[derive(Clone, Debug, Serialize)]
pub struct GoldenRow {
    pub triple: Triple,
    pub m: u32,
    /// The cell exactly as printed.
    pub printed: &'static str,
    #[serde(skip)]
    pub poly: FreePoly,
    /// Known typesetting issue with this cell, if any.
    pub note: Option<&'static str>,
}

impl GoldenRow {
    /// What the computed component should equal. Identical to `poly` except
    /// for the duplicated cell, where it is the symmetry-corrected form.
    pub fn comparison_target(&self) -> FreePoly {
        if self.is_printed_duplicate() {
            let first = parse_row(FIRST[0].1).expect("table row parses");
            first.swap_variables()
        } else {
            self.poly.clone()
        }
    }

    pub fn is_printed_duplicate(&self) -> bool {
        self.m == 2 && self.triple == Triple { p: 1, q: 1, r: 1 }
    }
}

/// Every cell, in table order: eight first identities, eight second
/// identities, then the third identity of (2,2,2).
pub fn golden_rows() -> Vec<GoldenRow> {
    let mut out = Vec::with_capacity(17);
    for (m, table) in [(1, &FIRST), (2, &SECOND)] {
        for &((p, q, r), text) in table.iter() {
            out.push(make_row(Triple { p, q, r }, m, text));
        }
    }
    out.push(make_row(Triple { p: 2, q: 2, r: 2 }, 3, THIRD));
    out
}

fn make_row(triple: Triple, m: u32, printed: &'static str) -> GoldenRow {
    let note = match (triple.p, triple.q, triple.r, m) {
        (1, 1, 1, 2) => Some(DUPLICATED_CELL_NOTE),
        (1, 1, 2, 2) => Some(MISSING_EQ_NOTE),
        _ => None,
    };
    GoldenRow {
        triple,
        m,
        printed,
        poly: parse_row(printed).expect("table row parses"),
        note,
    }
}

pub fn golden_row(triple: Triple, m: u32) -> Result<GoldenRow, FreeAlgError> {
    golden_rows()
        .into_iter()
        .find(|row| row.triple == triple && row.m == m)
        .ok_or(FreeAlgError::RowNotInTables { triple, m })
}

/// The table cell for `(p.q.r.m)` as printed.
pub fn golden_table(triple: Triple, m: u32) -> Result<FreePoly, FreeAlgError> {
    golden_row(triple, m).map(|row| row.poly)
}

fn parse_atom(s: &str) -> Result<Atom, FreeAlgError> {
    Ok(match s.trim() {
        "x" => Atom::X,
        "y" => Atom::Y,
        "x^2" | "x²" => Atom::XSquared,
        "y^2" | "y²" => Atom::YSquared,
        "x•y" | "y•x" | "x∙y" | "y∙x" => Atom::Jordan,
        other => return Err(FreeAlgError::Syntax(other.to_string())),
    })
}

/// Parses a sum of associators and commutators of atoms.
pub fn parse_row(text: &str) -> Result<FreePoly, FreeAlgError> {
    let mut total = FreePoly::zero();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let (close, is_assoc) = match rest.chars().next() {
            Some('(') => (')', true),
            Some('[') => (']', false),
            _ => return Err(FreeAlgError::Syntax(rest.to_string())),
        };
        let end = rest
            .find(close)
            .ok_or_else(|| FreeAlgError::Syntax(rest.to_string()))?;
        let atoms = rest[1..end]
            .split(',')
            .map(parse_atom)
            .collect::<Result<Vec<_>, _>>()?;
        let item = match (is_assoc, atoms.as_slice()) {
            (true, [a, b, c]) => associator(&a.poly(), &b.poly(), &c.poly()),
            (false, [a, b]) => commutator(&a.poly(), &b.poly()),
            _ => return Err(FreeAlgError::Syntax(rest[..=end].to_string())),
        };
        total = &total + &item;
        rest = rest[end + close.len_utf8()..].trim_start();
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(FreeAlgError::Syntax(text.to_string()));
            }
        } else if !rest.is_empty() {
            return Err(FreeAlgError::Syntax(rest.to_string()));
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_rows() {
        assert_eq!(golden_rows().len(), 17);
    }

    #[test]
    fn missing_row() {
        let t = Triple::new(1, 1, 1).unwrap();
        assert!(matches!(
            golden_table(t, 3),
            Err(FreeAlgError::RowNotInTables { .. })
        ));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_row("(x,x)").is_err());
        assert!(parse_row("(x,x,z)").is_err());
        assert!(parse_row("(x,x,x)+").is_err());
        assert!(parse_row("(x,x,x) (y,y,y)").is_err());
    }

    #[test]
    fn row_2111() {
        let row = golden_table(Triple::new(2, 1, 1).unwrap(), 1).unwrap();
        let (x, y) = (FreePoly::x(), FreePoly::y());
        let x2 = &x * &x;
        let xy = super::super::jordan(&x, &y);
        let expect = &(&associator(&x2, &x, &y) + &associator(&x2, &y, &x))
            + &associator(&xy, &x, &x);
        assert_eq!(row, expect);
    }
}
