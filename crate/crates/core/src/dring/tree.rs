//! The splitting tree of an element over `Q`: each irreducible factor at
//! level `n` is refined into the irreducible factors of its image one level
//! up, until it is prime or the depth runs out.

use std::fmt::Write as _;

use super::element::DElement;
use super::qfact::{factor_part, prime_witness_q};
use crate::cyclo;
use crate::error::Result;
use crate::factor_q::factor_q;
use crate::field::Q;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Prime,
    /// `Φ_d` for odd `d`: never a finite product of primes.
    CyclotomicTail(u64),
    /// Irreducible at its level, not prime.
    Composite,
}

/// `poly(X^(1/2^level))`, raised to `multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub level: u32,
    pub poly: Poly<Q>,
    pub multiplicity: usize,
    pub kind: NodeKind,
    pub children: Vec<TreeNode>,
}

impl TreeNode {
    fn build(level: u32, poly: Poly<Q>, multiplicity: usize, depth: u32) -> Self {
        let kind = match cyclo::detect_cyclotomic(&poly) {
            Some(d) if d % 2 == 1 => NodeKind::CyclotomicTail(d),
            _ if prime_witness_q(&poly).is_prime() => NodeKind::Prime,
            _ => NodeKind::Composite,
        };
        let children = if depth == 0 || kind == NodeKind::Prime {
            Vec::new()
        } else {
            factor_q(&poly.compose_power(2))
                .expect("nonzero")
                .factors
                .into_iter()
                .map(|(g, k)| TreeNode::build(level + 1, g, multiplicity * k, depth - 1))
                .collect()
        };
        TreeNode { level, poly, multiplicity, kind, children }
    }

    pub fn element(&self) -> DElement<Q> {
        DElement::at_level(self.level, self.poly.clone()).expect("nonzero")
    }

    /// Nodes without children, left to right.
    pub fn leaves(&self) -> Vec<&TreeNode> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(|c| c.leaves()).collect()
    }

    fn render_into(&self, indent: usize, out: &mut String) {
        let tag = match self.kind {
            NodeKind::Prime => "prime".to_string(),
            NodeKind::CyclotomicTail(d) => format!("cyclotomic tail d={d}"),
            NodeKind::Composite => "splits".to_string(),
        };
        let _ = write!(out, "{:indent$}{}", "", self.element());
        if self.multiplicity > 1 {
            let _ = write!(out, " ^{}", self.multiplicity);
        }
        let _ = writeln!(out, "  [{tag}]");
        for c in &self.children {
            c.render_into(indent + 2, out);
        }
    }
}

/// One tree per irreducible factor of `e`, each truncated `depth` levels
/// below the level of `e`. A unit gives an empty forest.
pub fn factor_tree(e: &DElement<Q>, depth: u32) -> Result<Vec<TreeNode>> {
    if e.is_unit() {
        return Ok(Vec::new());
    }
    Ok(factor_part(e.part(), e.level())
        .into_iter()
        .map(|(h, k)| TreeNode::build(e.level(), h, k, depth))
        .collect())
}

/// Indented text rendering of a forest.
pub fn render_forest(forest: &[TreeNode]) -> String {
    let mut out = String::new();
    for t in forest {
        t.render_into(0, &mut out);
    }
    out
}
