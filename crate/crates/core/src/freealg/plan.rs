//! Factored evaluation plans for free polynomials.
//!
//! A polynomial `sum c_w w` is rewritten with bilinearity into a DAG of
//! products and linear combinations, e.g. `(ab)c + (ab)d` becomes
//! `(ab) * (c + d)`. Evaluating the DAG in any algebra gives the same value
//! as evaluating every word separately, with far fewer multiplications.

use std::collections::{BTreeMap, HashMap};

use super::{FreePoly, Term, Var};
use crate::exactmath::Rational;

#[derive(Clone, Debug)]
pub enum PlanNode {
    Unit,
    Leaf(Var),
    Product(usize, usize),
    Combo(Vec<(Rational, usize)>),
}

#[derive(Clone, Debug)]
pub struct EvalPlan {
    nodes: Vec<PlanNode>,
    bidegrees: Vec<Option<(u32, u32)>>,
    root: usize,
}

impl EvalPlan {
    pub fn compile(poly: &FreePoly) -> Self {
        let mut b = Builder {
            nodes: Vec::new(),
            bidegrees: Vec::new(),
            memo: HashMap::new(),
        };
        let root = b.compile(poly);
        EvalPlan {
            nodes: b.nodes,
            bidegrees: b.bidegrees,
            root,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Nodes in dependency order: children precede parents.
    pub fn nodes(&self) -> &[PlanNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &PlanNode {
        &self.nodes[id]
    }

    /// `(x, y)`-bidegree of a node; `None` for a mixed combination or zero.
    pub fn bidegree(&self, id: usize) -> Option<(u32, u32)> {
        self.bidegrees[id]
    }

    pub fn product_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, PlanNode::Product(..)))
            .count()
    }

    /// Multiplies the plan back out.
    pub fn expand(&self) -> FreePoly {
        let mut values: Vec<FreePoly> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let v = match node {
                PlanNode::Unit => FreePoly::unit(),
                PlanNode::Leaf(v) => FreePoly::var(*v),
                PlanNode::Product(l, r) => &values[*l] * &values[*r],
                PlanNode::Combo(items) => items.iter().fold(FreePoly::zero(), |acc, (c, id)| {
                    acc.add_scaled(&values[*id], c)
                }),
            };
            values.push(v);
        }
        values.swap_remove(self.root)
    }
}

struct Builder {
    nodes: Vec<PlanNode>,
    bidegrees: Vec<Option<(u32, u32)>>,
    memo: HashMap<FreePoly, usize>,
}

impl Builder {
    fn push(&mut self, node: PlanNode, bidegree: Option<(u32, u32)>) -> usize {
        self.nodes.push(node);
        self.bidegrees.push(bidegree);
        self.nodes.len() - 1
    }

    fn compile(&mut self, poly: &FreePoly) -> usize {
        if let Some(&id) = self.memo.get(poly) {
            return id;
        }
        let id = self.build(poly);
        self.memo.insert(poly.clone(), id);
        id
    }

    fn compile_term(&mut self, t: &Term) -> usize {
        self.compile(&FreePoly::term(t.clone()))
    }

    fn build(&mut self, poly: &FreePoly) -> usize {
        let bidegree = poly.bidegree();
        if poly.len() == 1 {
            let (t, c) = poly.terms().next().expect("one term");
            if c.is_one() {
                return match t {
                    Term::Unit => self.push(PlanNode::Unit, Some((0, 0))),
                    Term::Var(v) => {
                        let d = (t.x_degree(), t.y_degree());
                        self.push(PlanNode::Leaf(*v), Some(d))
                    }
                    Term::Product(_) => {
                        let (l, r) = t.factors().expect("product");
                        let (l, r) = (self.compile_term(l), self.compile_term(r));
                        self.push(PlanNode::Product(l, r), bidegree)
                    }
                };
            }
        }

        let mut items: Vec<(Rational, usize)> = Vec::new();
        // product terms grouped by the bidegrees of their two factors
        type Key = ((u32, u32), (u32, u32));
        let mut groups: BTreeMap<Key, Vec<(&Term, &Term, &Rational)>> = BTreeMap::new();
        for (t, c) in poly.terms() {
            match t.factors() {
                Some((l, r)) => groups
                    .entry(((l.x_degree(), l.y_degree()), (r.x_degree(), r.y_degree())))
                    .or_default()
                    .push((l, r, c)),
                None => {
                    let leaf = self.compile_term(t);
                    items.push((c.clone(), leaf));
                }
            }
        }
        for group in groups.values() {
            let mut by_left: BTreeMap<&Term, FreePoly> = BTreeMap::new();
            let mut by_right: BTreeMap<&Term, FreePoly> = BTreeMap::new();
            for (l, r, c) in group {
                let e = by_left.entry(l).or_default();
                *e = e.add_scaled(&FreePoly::term((*r).clone()), c);
                let e = by_right.entry(r).or_default();
                *e = e.add_scaled(&FreePoly::term((*l).clone()), c);
            }
            if by_left.len() <= by_right.len() {
                for (l, rights) in by_left {
                    let l = self.compile_term(l);
                    let r = self.compile(&rights);
                    let d = self.product_degree(l, r);
                    items.push((Rational::one(), self.push(PlanNode::Product(l, r), d)));
                }
            } else {
                for (r, lefts) in by_right {
                    let l = self.compile(&lefts);
                    let r = self.compile_term(r);
                    let d = self.product_degree(l, r);
                    items.push((Rational::one(), self.push(PlanNode::Product(l, r), d)));
                }
            }
        }
        if let [(c, id)] = items.as_slice() {
            if c.is_one() {
                return *id;
            }
        }
        self.push(PlanNode::Combo(items), bidegree)
    }

    fn product_degree(&self, l: usize, r: usize) -> Option<(u32, u32)> {
        let (a, b) = (self.bidegrees[l]?, self.bidegrees[r]?);
        Some((a.0 + b.0, a.1 + b.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{golden_rows, polarize, Triple};

    #[test]
    fn plans_expand_to_the_original() {
        for t in Triple::all() {
            let f = polarize(t);
            for p in f.components.iter().chain(std::iter::once(&t.identity())) {
                let plan = EvalPlan::compile(p);
                assert_eq!(&plan.expand(), p);
            }
        }
        for row in golden_rows() {
            assert_eq!(EvalPlan::compile(&row.poly).expand(), row.poly);
        }
    }

    #[test]
    fn factoring_saves_products() {
        let f = polarize(Triple::new(2, 2, 2).unwrap());
        let f3 = f.component(3).unwrap();
        let words = f3.len();
        let plan = EvalPlan::compile(f3);
        assert!(plan.product_count() < words, "{} vs {words}", plan.product_count());
    }

    #[test]
    fn zero_and_unit() {
        assert!(EvalPlan::compile(&FreePoly::zero()).expand().is_zero());
        let u = FreePoly::unit();
        assert_eq!(EvalPlan::compile(&u).expand(), u);
    }
}
