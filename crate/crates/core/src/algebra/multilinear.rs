//! Multilinear backend.
//!
//! For a polynomial of bidegree `(a, b)`, write `x = sum x_i b_i` and
//! `y = sum y_j b_j`. The value is a polynomial in the coordinates whose
//! coefficient at `x^Mx y^My` (`Mx`, `My` multisets of basis indices) is,
//! up to the factor `prod(mult!)`, the full linearization evaluated at the
//! basis tuple listing `Mx` and `My`. The linearization is symmetric in its
//! `x`-slots and in its `y`-slots, so it vanishes on all basis tuples iff
//! every such coefficient vanishes. Coefficients are computed node by node
//! over the evaluation plan: a product node's coefficient at `M` is the sum
//! over splits `M = M1 + M2` of the factors' coefficients at `M1` and `M2`.

use std::rc::Rc;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::{Element, StructureAlgebra};
use crate::exactmath::Scalar;
use crate::freealg::{EvalPlan, PlanNode, Var};

type Multiset = SmallVec<[u8; 8]>;
/// Sparse vector: `(index, nonzero value)`, index increasing.
type SVec = Vec<(usize, Scalar)>;

struct Dp<'a> {
    alg: &'a StructureAlgebra,
    plan: &'a EvalPlan,
    unit: Option<SVec>,
    memo: Vec<FxHashMap<(Multiset, Multiset), Rc<SVec>>>,
    zero: Rc<SVec>,
}

/// The first pair of multisets, in lexicographic order of their sorted
/// index lists, at which the coefficient is nonzero; `None` if the plan's
/// polynomial vanishes identically. The plan must be bihomogeneous.
pub(super) fn first_failure(
    alg: &StructureAlgebra,
    plan: &EvalPlan,
    unit: Option<&Element>,
) -> Option<(Vec<u8>, Vec<u8>)> {
    let (a, b) = plan.bidegree(plan.root())?;
    assert!(alg.dim() <= u8::MAX as usize, "dimension too large for the multilinear backend");
    let mut dp = Dp {
        alg,
        plan,
        unit: unit.map(|u| sparse(&u.coords)),
        memo: vec![FxHashMap::default(); plan.nodes().len()],
        zero: Rc::new(Vec::new()),
    };
    let n = alg.dim() as u8;
    let xs = multisets(n, a as usize);
    let ys = multisets(n, b as usize);
    for mx in &xs {
        for my in &ys {
            if !dp.value(plan.root(), mx, my).is_empty() {
                return Some((mx.to_vec(), my.to_vec()));
            }
        }
    }
    None
}

/// All non-decreasing sequences of length `k` over `0..n`, in lexicographic
/// order.
fn multisets(n: u8, k: usize) -> Vec<Multiset> {
    let mut out = Vec::new();
    if k > 0 && n == 0 {
        return out;
    }
    let mut cur: Multiset = SmallVec::from_elem(0, k);
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&p| cur[p] + 1 < n) else {
            return out;
        };
        let v = cur[pos] + 1;
        for c in &mut cur[pos..] {
            *c = v;
        }
    }
}

/// Every way to take a sub-multiset of size `k` out of the sorted `m`, as
/// `(taken, rest)` pairs.
fn splits(m: &[u8], k: usize) -> Vec<(Multiset, Multiset)> {
    let mut runs: Vec<(u8, usize)> = Vec::new();
    for &v in m {
        match runs.last_mut() {
            Some((last, c)) if *last == v => *c += 1,
            _ => runs.push((v, 1)),
        }
    }
    let mut out = Vec::new();
    let mut taken = Multiset::new();
    let mut rest = Multiset::new();
    split_rec(&runs, k, &mut taken, &mut rest, &mut out);
    out
}

fn split_rec(
    runs: &[(u8, usize)],
    k: usize,
    taken: &mut Multiset,
    rest: &mut Multiset,
    out: &mut Vec<(Multiset, Multiset)>,
) {
    let Some((&(v, count), tail)) = runs.split_first() else {
        if k == 0 {
            out.push((taken.clone(), rest.clone()));
        }
        return;
    };
    let remaining: usize = tail.iter().map(|(_, c)| c).sum();
    for t in 0..=count.min(k) {
        if k - t > remaining {
            continue;
        }
        let (tl, rl) = (taken.len(), rest.len());
        taken.extend(std::iter::repeat_n(v, t));
        rest.extend(std::iter::repeat_n(v, count - t));
        split_rec(tail, k - t, taken, rest, out);
        taken.truncate(tl);
        rest.truncate(rl);
    }
}

fn sparse(coords: &[Scalar]) -> SVec {
    coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

impl Dp<'_> {
    fn value(&mut self, node: usize, mx: &[u8], my: &[u8]) -> Rc<SVec> {
        if let Some((a, b)) = self.plan.bidegree(node) {
            if a as usize != mx.len() || b as usize != my.len() {
                return self.zero.clone();
            }
        }
        let key = (Multiset::from_slice(mx), Multiset::from_slice(my));
        if let Some(v) = self.memo[node].get(&key) {
            return v.clone();
        }
        let v = Rc::new(self.compute(node, mx, my));
        self.memo[node].insert(key, v.clone());
        v
    }

    fn compute(&mut self, node: usize, mx: &[u8], my: &[u8]) -> SVec {
        let n = self.alg.dim();
        let plan = self.plan;
        match plan.node(node) {
            PlanNode::Unit => {
                if mx.is_empty() && my.is_empty() {
                    self.unit.clone().expect("unit presence is checked by the caller")
                } else {
                    Vec::new()
                }
            }
            PlanNode::Leaf(Var::X) => match (mx, my) {
                ([i], []) => vec![(*i as usize, Scalar::one())],
                _ => Vec::new(),
            },
            PlanNode::Leaf(Var::Y) => match (mx, my) {
                ([], [j]) => vec![(*j as usize, Scalar::one())],
                _ => Vec::new(),
            },
            PlanNode::Product(l, r) => {
                let (l, r) = (*l, *r);
                let Some((al, bl)) = plan.bidegree(l) else {
                    return Vec::new();
                };
                let (al, bl) = (al as usize, bl as usize);
                if al > mx.len() || bl > my.len() {
                    return Vec::new();
                }
                let mut acc = vec![Scalar::zero(); n];
                let sx = splits(mx, al);
                let sy = splits(my, bl);
                for (x1, x2) in &sx {
                    for (y1, y2) in &sy {
                        let u = self.value(l, x1, y1);
                        if u.is_empty() {
                            continue;
                        }
                        let v = self.value(r, x2, y2);
                        if v.is_empty() {
                            continue;
                        }
                        for (i, ui) in u.iter() {
                            for (j, vj) in v.iter() {
                                let entries = self.alg.products(*i, *j);
                                if entries.is_empty() {
                                    continue;
                                }
                                let p = ui * vj;
                                for (k, c) in entries {
                                    acc[*k] = &acc[*k] + &(&p * c);
                                }
                            }
                        }
                    }
                }
                sparse(&acc)
            }
            PlanNode::Combo(items) => {
                let mut acc = vec![Scalar::zero(); n];
                for (c, id) in items {
                    let v = self.value(*id, mx, my);
                    let c = Scalar::rational(c.clone());
                    for (k, x) in v.iter() {
                        acc[*k] = &acc[*k] + &(x * &c);
                    }
                }
                sparse(&acc)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(8, 3).len(), 120);
        assert_eq!(multisets(8, 0).len(), 1);
        assert_eq!(multisets(2, 2).len(), 3);
        assert_eq!(multisets(3, 2)[1].as_slice(), &[0, 1]);
    }

    #[test]
    fn split_enumeration() {
        let s = splits(&[0, 0, 1], 1);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].0.as_slice(), &[1]);
        assert_eq!(s[0].1.as_slice(), &[0, 0]);
        assert_eq!(splits(&[0, 1, 2, 3], 2).len(), 6);
        assert_eq!(splits(&[0, 1], 3).len(), 0);
    }
}
