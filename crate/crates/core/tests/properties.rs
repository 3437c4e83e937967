use proptest::prelude::*;

use nalab::algebra::{Backend, Element, Side, StructureAlgebra};
use nalab::catalog::{self, classical, Classical};
use nalab::exactmath::linalg::{combine, rank};
use nalab::exactmath::{poly_rank, span_membership, FieldTag, Monomial, MultiPoly, PolyRing, Rational, Scalar};
use nalab::freealg::{polarize, Triple};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::frac(n, d))
}

fn quad() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(a, b)| Scalar::new(a, b, 3).unwrap())
}

fn element(dim: usize) -> impl Strategy<Value = Element> {
    proptest::collection::vec(-4i64..=4, dim).prop_map(|v| Element::new(v.into_iter().map(Scalar::from_integer).collect()))
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..5)
        .prop_map(|m| m.into_iter().map(|r| r.into_iter().map(Scalar::from_integer).collect()).collect())
}

fn poly_rows() -> impl Strategy<Value = Vec<Vec<MultiPoly>>> {
    let term = (0u8..3, 0u8..3, -3i64..=3);
    let poly = proptest::collection::vec(term, 0..4);
    proptest::collection::vec(proptest::collection::vec(poly, 3), 1..4).prop_map(|rows| {
        let ring = PolyRing::indexed("t", 2);
        rows.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|terms| {
                        MultiPoly::from_terms(
                            &ring,
                            terms.into_iter().map(|(a, b, c)| (Monomial::from_exponents(&[a, b]), Scalar::from_integer(c))),
                        )
                    })
                    .collect()
            })
            .collect()
    })
}

/// A two-dimensional algebra with small integer structure constants.
fn small_algebra() -> impl Strategy<Value = StructureAlgebra> {
    proptest::collection::vec(-2i64..=2, 8).prop_map(|c| {
        let constants = (0..8).map(|t| (t / 4, (t / 2) % 2, t % 2, Scalar::from_integer(c[t])));
        StructureAlgebra::new("A", FieldTag::Rationals, vec!["a".into(), "b".into()], constants).unwrap()
    })
}

fn triple() -> impl Strategy<Value = Triple> {
    (1u8..=2, 1u8..=2, 1u8..=2).prop_map(|(p, q, r)| Triple::new(p, q, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in quad(), b in quad(), c in quad()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        let s: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(s, a);
    }

    #[test]
    fn rank_survives_row_operations(m in small_matrix(), k in -3i64..=3) {
        let r = rank(&m);
        let mut reversed = m.clone();
        reversed.reverse();
        prop_assert_eq!(rank(&reversed), r);
        if m.len() > 1 {
            let mut n = m.clone();
            let f = Scalar::from_integer(k);
            n[1] = n[1].iter().zip(&m[0]).map(|(x, y)| x + &(&f * y)).collect();
            prop_assert_eq!(rank(&n), r);
        }
    }

    #[test]
    fn poly_rank_survives_row_operations(rows in poly_rows()) {
        let r = poly_rank(&rows);
        let mut reversed = rows.clone();
        reversed.reverse();
        prop_assert_eq!(poly_rank(&reversed), r);
        if rows.len() > 1 {
            let ring = rows[0][0].ring().clone();
            let f = &MultiPoly::var(&ring, 0) + &MultiPoly::constant(&ring, Scalar::from_integer(2));
            let mut n = rows.clone();
            n[1] = n[1].iter().zip(&rows[0]).map(|(x, y)| x + &f.mul_ref(y)).collect();
            prop_assert_eq!(poly_rank(&n), r);
        }
        let point = [Scalar::from_integer(3), Scalar::from_integer(-2)];
        let special: Vec<Vec<Scalar>> = rows.iter().map(|row| row.iter().map(|p| p.eval(&point)).collect()).collect();
        prop_assert!(rank(&special) <= r);
    }

    #[test]
    fn span_membership_round_trip(m in small_matrix(), coeffs in proptest::collection::vec(-3i64..=3, 4)) {
        let c: Vec<Scalar> = coeffs.iter().take(m.len()).map(|&k| Scalar::from_integer(k)).collect();
        let target = combine(&c, &m, 4);
        let s = span_membership(&target, &m);
        prop_assert!(s.inside);
        prop_assert_eq!(combine(&s.coefficients.unwrap(), &m, 4), target);
    }

    #[test]
    fn multiplication_is_bilinear(u in element(8), v in element(8), w in element(8), k in -3i64..=3) {
        let k = Scalar::from_integer(k);
        for name in ["O", "*O", "⋆O"] {
            let a = catalog::lookup(name).unwrap();
            let mut left = u.scale(&k);
            left.add_scaled(&v, &Scalar::one());
            let lhs = a.multiply(&left, &w).unwrap();
            let mut rhs = a.multiply(&u, &w).unwrap().scale(&k);
            rhs.add_scaled(&a.multiply(&v, &w).unwrap(), &Scalar::one());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn operators_match_products(x in element(8), y in element(8)) {
        let a = catalog::lookup("P").unwrap();
        for side in [Side::Left, Side::Right] {
            let m = a.mult_operator(&x, side);
            let applied: Vec<Scalar> = m
                .iter()
                .map(|row| row.iter().zip(&y.coords).fold(Scalar::zero(), |acc, (r, c)| &acc + &(r * c)))
                .collect();
            let direct = match side {
                Side::Left => a.multiply(&x, &y).unwrap(),
                Side::Right => a.multiply(&y, &x).unwrap(),
            };
            prop_assert_eq!(applied, direct.coords);
        }
    }

    #[test]
    fn norm_is_multiplicative(x in element(8), y in element(8)) {
        for c in [Classical::C, Classical::H, Classical::O] {
            let a = classical(c);
            let n = c.dim();
            let (x, y) = (Element::new(x.coords[..n].to_vec()), Element::new(y.coords[..n].to_vec()));
            let xy = a.algebra.multiply(&x, &y).unwrap();
            prop_assert_eq!(a.norm(&xy), &a.norm(&x) * &a.norm(&y));
            prop_assert_eq!(a.conj(&a.conj(&x)), x);
        }
    }

    #[test]
    fn backends_agree_on_small_algebras(a in small_algebra(), t in triple()) {
        let f = polarize(t);
        let mut polys = vec![t.identity()];
        polys.extend(f.components.iter().cloned());
        for p in &polys {
            let s = a.identity_holds(p, Backend::Symbolic).unwrap();
            let m = a.identity_holds(p, Backend::Multilinear).unwrap();
            prop_assert_eq!(s.holds, m.holds, "{}", a);
            if let Some(w) = s.witness {
                prop_assert!(!w.value.is_zero());
            }
        }
    }

    #[test]
    fn generated_subalgebra_is_closed(x in element(8), which in 0usize..4) {
        let name = ["O", "*O", "⋆O", "P"][which];
        let a = catalog::lookup(name).unwrap();
        let sub = a.subalgebra_generated(&x);
        let basis: Vec<Vec<Scalar>> = sub.basis.iter().map(|e| e.coords.clone()).collect();
        prop_assert_eq!(rank(&basis), sub.dim());
        if !x.is_zero() {
            prop_assert!(span_membership(&x.coords, &basis).inside);
        }
        for u in &sub.basis {
            for v in &sub.basis {
                let p = a.multiply(u, v).unwrap();
                prop_assert!(span_membership(&p.coords, &basis).inside);
            }
        }
    }
}
