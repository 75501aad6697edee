use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::system::{catalan_product, RootSystem};
use crate::error::{domain, internal, Result};
use crate::polyqt::UniPoly;
use crate::util::{gcd, maximal_cliques};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn opposite(self) -> Self {
        match self {
            Epsilon::Plus => Epsilon::Minus,
            Epsilon::Minus => Epsilon::Plus,
        }
    }
}

/// Index into the list of almost positive roots: the negative simple roots
/// `-alpha_0 .. -alpha_{n-1}` come first, then the positive roots.
pub type AlmostPositiveRoot = usize;

/// One almost positive root. `support` marks the simple roots occurring with
/// nonzero coefficient; `coords` holds the full expansion when it is integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootEntry {
    pub negative_simple: Option<usize>,
    pub coords: Option<Vec<i64>>,
    pub support: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterComplex {
    pub label: String,
    pub rank: usize,
    pub coxeter_number: u32,
    pub exponents: Vec<u32>,
    pub roots: Vec<RootEntry>,
    pub plus_part: Vec<usize>,
    pub minus_part: Vec<usize>,
    pub tau_plus: Vec<AlmostPositiveRoot>,
    pub tau_minus: Vec<AlmostPositiveRoot>,
    pub r: Vec<AlmostPositiveRoot>,
    #[serde(skip)]
    compat: Vec<FixedBitSet>,
}

/// Proper 2-coloring of the Coxeter graph; the part containing simple root 0
/// comes first.
pub fn bipartition(rs: &RootSystem) -> (Vec<usize>, Vec<usize>) {
    two_color(rs.rank, &rs.coxeter_edges())
}

fn two_color(rank: usize, edges: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let mut color: Vec<Option<bool>> = vec![None; rank];
    for start in 0..rank {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(true);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored");
            for &(a, b) in edges {
                let w = if a == v { b } else if b == v { a } else { continue };
                if color[w].is_none() {
                    color[w] = Some(!c);
                    stack.push(w);
                }
            }
        }
    }
    let plus = (0..rank).filter(|&i| color[i] == Some(true)).collect();
    let minus = (0..rank).filter(|&i| color[i] == Some(false)).collect();
    (plus, minus)
}

impl ClusterComplex {
    pub fn from_root_system(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank;
        let (plus_part, minus_part) = bipartition(rs);
        let mut roots: Vec<RootEntry> = (0..n)
            .map(|i| RootEntry {
                negative_simple: Some(i),
                coords: Some(rs.simple_root(i).iter().map(|c| -c).collect()),
                support: (0..n).map(|j| j == i).collect(),
            })
            .collect();
        for beta in &rs.positive_roots {
            roots.push(RootEntry {
                negative_simple: None,
                coords: Some(beta.clone()),
                support: beta.iter().map(|&c| c != 0).collect(),
            });
        }
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone().expect("integral"), i))
            .collect();
        let tau = |part: &[usize], other: &[usize]| -> Result<Vec<usize>> {
            roots
                .iter()
                .enumerate()
                .map(|(idx, root)| {
                    if let Some(i) = root.negative_simple {
                        if other.contains(&i) {
                            return Ok(idx);
                        }
                    }
                    let mut v = root.coords.clone().expect("integral");
                    for &i in part {
                        v = rs.simple_reflection(i, &v);
                    }
                    match index.get(&v) {
                        Some(&j) => Ok(j),
                        None => internal(format!("tau sends root {idx} outside the almost positive roots")),
                    }
                })
                .collect()
        };
        let tau_plus = tau(&plus_part, &minus_part)?;
        let tau_minus = tau(&minus_part, &plus_part)?;
        Self::assemble(
            rs.label(),
            n,
            rs.coxeter_number,
            rs.exponents.clone(),
            roots,
            plus_part,
            minus_part,
            tau_plus,
            tau_minus,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        label: String,
        rank: usize,
        coxeter_number: u32,
        exponents: Vec<u32>,
        roots: Vec<RootEntry>,
        plus_part: Vec<usize>,
        minus_part: Vec<usize>,
        tau_plus: Vec<usize>,
        tau_minus: Vec<usize>,
    ) -> Result<Self> {
        let r: Vec<usize> = tau_plus.iter().map(|&i| tau_minus[i]).collect();
        let mut cc = Self {
            label,
            rank,
            coxeter_number,
            exponents,
            roots,
            plus_part,
            minus_part,
            tau_plus,
            tau_minus,
            r,
            compat: Vec::new(),
        };
        let size = cc.roots.len();
        let mut compat = vec![FixedBitSet::with_capacity(size); size];
        for a in 0..size {
            for b in a + 1..size {
                if cc.compute_compatible(a, b)? {
                    compat[a].insert(b);
                    compat[b].insert(a);
                }
            }
        }
        cc.compat = compat;
        Ok(cc)
    }

    pub fn size(&self) -> usize {
        self.roots.len()
    }

    pub fn tau(&self, eps: Epsilon, alpha: AlmostPositiveRoot) -> AlmostPositiveRoot {
        match eps {
            Epsilon::Plus => self.tau_plus[alpha],
            Epsilon::Minus => self.tau_minus[alpha],
        }
    }

    pub fn tau_permutation(&self, eps: Epsilon) -> &[AlmostPositiveRoot] {
        match eps {
            Epsilon::Plus => &self.tau_plus,
            Epsilon::Minus => &self.tau_minus,
        }
    }

    /// Applies `R` until one root is a negative simple, then reads off the
    /// coefficient rule.
    fn compute_compatible(&self, a: usize, b: usize) -> Result<bool> {
        let (mut x, mut y) = (a, b);
        for _ in 0..=self.size() {
            match (self.roots[x].negative_simple, self.roots[y].negative_simple) {
                (Some(_), Some(_)) => return Ok(true),
                (Some(i), None) => return Ok(!self.roots[y].support[i]),
                (None, Some(j)) => return Ok(!self.roots[x].support[j]),
                (None, None) => {
                    x = self.r[x];
                    y = self.r[y];
                }
            }
        }
        internal(format!("R-orbits of roots {a} and {b} never reach a negative simple root"))
    }

    pub fn compatible(&self, a: AlmostPositiveRoot, b: AlmostPositiveRoot) -> Result<bool> {
        if a == b || a >= self.size() || b >= self.size() {
            return domain("compatibility is defined for two distinct almost positive roots");
        }
        Ok(self.compat[a].contains(b))
    }

    pub fn compatibility_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size()).map(|a| (0..self.size()).map(|b| self.compat[a].contains(b)).collect()).collect()
    }

    /// Clusters: maximal sets of pairwise compatible roots, each sorted.
    pub fn enumerate_facets(&self) -> Vec<Vec<AlmostPositiveRoot>> {
        maximal_cliques(&self.compat)
    }

    fn image(perm: &[usize], facet: &[usize]) -> Vec<usize> {
        let mut img: Vec<usize> = facet.iter().map(|&i| perm[i]).collect();
        img.sort_unstable();
        img
    }

    pub fn fixed_facets_in(&self, facets: &[Vec<usize>], perm: &[usize]) -> BigInt {
        BigInt::from(facets.iter().filter(|f| Self::image(perm, f) == **f).count())
    }

    pub fn fixed_facets(&self, eps: Epsilon) -> BigInt {
        self.fixed_facets_in(&self.enumerate_facets(), self.tau_permutation(eps))
    }

    pub fn order_of_r(&self) -> u32 {
        permutation_order(&self.r)
    }

    pub fn r_power(&self, e: u32) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.size()).collect();
        for _ in 0..e {
            p = p.iter().map(|&i| self.r[i]).collect();
        }
        p
    }

    /// `Cat(Phi, q)` from the Coxeter number and exponents.
    pub fn q_catalan(&self) -> UniPoly {
        catalan_product(self.coxeter_number, &self.exponents)
    }

    /// Fixed facets of `R^l` for `l = 0..h+2`, next to `Cat(Phi, q)` at
    /// `zeta_{h+2}^l`. When `R` has order `(h+2)/2` each row appears twice.
    pub fn cyclic_census(&self) -> CyclicCensus {
        self.cyclic_census_at(self.coxeter_number + 2)
    }

    /// Census over `R^0, ..., R^{modulus-1}`, comparing with `Cat(Phi, q)` at
    /// `zeta_modulus^l`. `modulus` should be a multiple of the order of `R`.
    pub fn cyclic_census_at(&self, modulus: u32) -> CyclicCensus {
        let facets = self.enumerate_facets();
        let cat = self.q_catalan();
        let rows = (0..modulus)
            .into_par_iter()
            .map(|l| {
                let fixed = self.fixed_facets_in(&facets, &self.r_power(l));
                let value = cat.eval_at_root(modulus, l as i64);
                CensusEntry { power: l, fixed, predicted: value.as_integer().ok(), predicted_text: value.to_string() }
            })
            .collect();
        let order = self.order_of_r();
        CyclicCensus { label: self.label.clone(), order, modulus, odd_order: order % 2 == 1, rows }
    }
}

fn permutation_order(p: &[usize]) -> u32 {
    let mut seen = vec![false; p.len()];
    let mut order: u64 = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        order = order / gcd(order, len) * len;
    }
    order as u32
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub power: u32,
    #[serde(serialize_with = "crate::util::serialize_bigint")]
    pub fixed: BigInt,
    #[serde(skip)]
    pub predicted: Option<BigInt>,
    pub predicted_text: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicCensus {
    pub label: String,
    pub order: u32,
    pub modulus: u32,
    pub odd_order: bool,
    pub rows: Vec<CensusEntry>,
}

impl CyclicCensus {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.predicted.as_ref() == Some(&r.fixed))
    }
}

/// The type `I_2(m)` complex: `m + 2` almost positive roots around the
/// circle in the order `alpha_1`, the interior positive roots, `alpha_2`,
/// `-alpha_1`, `-alpha_2`. Position `p` sits at index `(p + 2) mod (m + 2)`
/// so that the negative simples come first, as in the crystallographic case.
pub fn build_i2_complex(m: u32) -> Result<ClusterComplex> {
    if m < 3 {
        return domain("I_2(m) needs m >= 3");
    }
    let size = (m + 2) as usize;
    let idx = |p: i64| -> usize { ((p.rem_euclid(size as i64)) as usize + 2) % size };
    let mut roots = vec![
        RootEntry { negative_simple: None, coords: None, support: vec![] };
        size
    ];
    for p in 0..size as i64 {
        let entry = if p == m as i64 {
            RootEntry { negative_simple: Some(0), coords: None, support: vec![true, false] }
        } else if p == m as i64 + 1 {
            RootEntry { negative_simple: Some(1), coords: None, support: vec![false, true] }
        } else if p == 0 {
            RootEntry { negative_simple: None, coords: None, support: vec![true, false] }
        } else if p == m as i64 - 1 {
            RootEntry { negative_simple: None, coords: None, support: vec![false, true] }
        } else {
            RootEntry { negative_simple: None, coords: None, support: vec![true, true] }
        };
        roots[idx(p)] = entry;
    }
    let mut tau_plus = vec![0; size];
    let mut tau_minus = vec![0; size];
    for p in 0..size as i64 {
        tau_plus[idx(p)] = idx(m as i64 - p);
        tau_minus[idx(p)] = idx(m as i64 - 2 - p);
    }
    ClusterComplex::assemble(
        format!("I2({m})"),
        2,
        m,
        vec![1, m - 1],
        roots,
        vec![0],
        vec![1],
        tau_plus,
        tau_minus,
    )
}
