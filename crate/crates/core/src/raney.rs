//! Raney numbers `R_{p,r}(k) = r/(kp+r) * C(kp+r, k)` and coral diagrams.
//!
//! A coral diagram of type `(p, r, k)` is a plane rooted tree whose root has
//! `r` ordered children, and in which exactly `k` non-root vertices are
//! internal, each with `p` ordered children. Their number is `R_{p,r}(k)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, internal, Result};
use crate::util::binomial;

pub fn raney(p: u32, r: u32, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::one());
    }
    if p == 0 {
        return domain("raney requires p >= 1");
    }
    let total = k as i64 * p as i64 + r as i64;
    if total == 0 {
        return domain("raney requires kp + r > 0 when k > 0");
    }
    let numer = BigInt::from(r) * binomial(total, k as i64);
    let (q, rem) = numer.div_rem(&BigInt::from(total));
    if !rem.is_zero() {
        return internal(format!("R_{{{p},{r}}}({k}) closed form is not integral"));
    }
    Ok(q)
}

/// Non-root vertex of a coral diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoralNode {
    Leaf,
    Internal(Vec<CoralNode>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoralDiagram {
    pub p: u32,
    pub root: Vec<CoralNode>,
}

impl CoralDiagram {
    pub fn root_arity(&self) -> usize {
        self.root.len()
    }

    /// Number of internal non-root vertices.
    pub fn internal_count(&self) -> usize {
        fn count(n: &CoralNode) -> usize {
            match n {
                CoralNode::Leaf => 0,
                CoralNode::Internal(ch) => 1 + ch.iter().map(count).sum::<usize>(),
            }
        }
        self.root.iter().map(count).sum()
    }

    /// Checks that every internal non-root vertex has exactly `p` children.
    pub fn is_well_formed(&self) -> bool {
        fn ok(n: &CoralNode, p: usize) -> bool {
            match n {
                CoralNode::Leaf => true,
                CoralNode::Internal(ch) => ch.len() == p && ch.iter().all(|c| ok(c, p)),
            }
        }
        self.root.iter().all(|c| ok(c, self.p as usize))
    }
}

impl fmt::Display for CoralDiagram {
    /// Parenthesized form: a leaf is `o`, an internal vertex is `(...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_node(n: &CoralNode, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match n {
                CoralNode::Leaf => write!(f, "o"),
                CoralNode::Internal(ch) => write_children(ch, f),
            }
        }
        fn write_children(ch: &[CoralNode], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "(")?;
            for (i, c) in ch.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write_node(c, f)?;
            }
            write!(f, ")")
        }
        write_children(&self.root, f)
    }
}

/// All coral diagrams of type `(p, r, k)`.
///
/// Vertices are decided in preorder, leaf before expansion, so the output is
/// lexicographic in that decision word.
pub fn enumerate_coral(p: u32, r: u32, k: u32) -> Result<Vec<CoralDiagram>> {
    if p < 2 || r < 1 {
        return domain(format!("coral diagrams need p >= 2 and r >= 1, got p={p}, r={r}"));
    }
    let mut words = Vec::new();
    let mut word = Vec::new();
    decide(p as usize, r as usize, k as usize, &mut word, &mut words);
    Ok(words
        .into_iter()
        .map(|w| CoralDiagram { p, root: build(&w, p as usize, r as usize) })
        .collect())
}

fn decide(p: usize, pending: usize, budget: usize, word: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
    if pending == 0 {
        if budget == 0 {
            out.push(word.clone());
        }
        return;
    }
    word.push(false);
    decide(p, pending - 1, budget, word, out);
    word.pop();
    if budget > 0 {
        word.push(true);
        decide(p, pending - 1 + p, budget - 1, word, out);
        word.pop();
    }
}

fn build(word: &[bool], p: usize, r: usize) -> Vec<CoralNode> {
    fn node(it: &mut std::slice::Iter<'_, bool>, p: usize) -> CoralNode {
        if *it.next().expect("decision word long enough") {
            CoralNode::Internal((0..p).map(|_| node(it, p)).collect())
        } else {
            CoralNode::Leaf
        }
    }
    let mut it = word.iter();
    (0..r).map(|_| node(&mut it, p)).collect()
}
