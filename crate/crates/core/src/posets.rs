//! Finite posets given by their cover relation: root posets, the trapezoid,
//! double triangle and line posets, order ideals and their signed counts.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::polyqt::UniPoly;
use crate::roots::RootSystem;

/// Poset on `0..size`, stored as its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// A linear extension: every element appears after all elements below it.
    order: Vec<usize>,
}

#[derive(Serialize)]
struct CoverList {
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoverList { size: self.size(), covers: self.cover_pairs() }.serialize(s)
    }
}

impl Poset {
    /// Builds a poset from pairs `(a, b)` meaning `b` covers `a`. Rejects
    /// cycles and pairs implied by longer chains.
    pub fn from_covers(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut up = vec![Vec::new(); size];
        let mut down = vec![Vec::new(); size];
        for &(a, b) in pairs {
            if a >= size || b >= size || a == b {
                return domain(format!("invalid cover pair ({a}, {b}) for a poset of size {size}"));
            }
            if up[a].contains(&b) {
                continue;
            }
            up[a].push(b);
            down[b].push(a);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..size).filter(|&v| indegree[v] == 0).rev().collect();
        let mut order = Vec::with_capacity(size);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in up[v].iter().rev() {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        if order.len() != size {
            return domain("cover relation contains a cycle");
        }
        let poset = Self { up, down, order };
        let above = poset.strict_upsets();
        for a in 0..size {
            for &b in &poset.up[a] {
                if poset.up[a].iter().any(|&c| c != b && above[c].contains(b)) {
                    return domain(format!("pair ({a}, {b}) is implied by a longer chain"));
                }
            }
        }
        Ok(poset)
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    /// All pairs `(a, b)` with `b` covering `a`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size()).flat_map(|a| self.up[a].iter().map(move |&b| (a, b))).collect()
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size()).filter(|&v| self.down[v].is_empty()).collect()
    }

    /// `above[v]` holds every `w > v`.
    fn strict_upsets(&self) -> Vec<FixedBitSet> {
        let n = self.size();
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &v in self.order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            for &w in &self.up[v] {
                set.insert(w);
                set.union_with(&above[w]);
            }
            above[v] = set;
        }
        above
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.strict_upsets()[a].contains(b)
    }

    /// Length of the longest chain ending at each element, minimal elements
    /// having rank 0.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.size()];
        for &v in &self.order {
            rank[v] = self.down[v].iter().map(|&w| rank[w] + 1).max().unwrap_or(0);
        }
        rank
    }

    pub fn is_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|v| self.down[v].iter().all(|&w| set.contains(w)))
    }
}

/// Downward-closed subset of a poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderIdeal {
    members: FixedBitSet,
}

impl OrderIdeal {
    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }
}

/// Visits every order ideal once. Elements are decided along a linear
/// extension; an element may join only if its lower covers already have, and
/// leaving every remaining element out is always possible, so no branch is
/// wasted.
pub fn for_each_ideal<F: FnMut(&FixedBitSet)>(p: &Poset, mut visit: F) {
    fn go<F: FnMut(&FixedBitSet)>(p: &Poset, pos: usize, set: &mut FixedBitSet, visit: &mut F) {
        if pos == p.order.len() {
            visit(set);
            return;
        }
        let v = p.order[pos];
        go(p, pos + 1, set, visit);
        if p.down[v].iter().all(|&w| set.contains(w)) {
            set.insert(v);
            go(p, pos + 1, set, visit);
            set.set(v, false);
        }
    }
    let mut set = FixedBitSet::with_capacity(p.size());
    go(p, 0, &mut set, &mut visit);
}

pub fn enumerate_ideals(p: &Poset) -> Vec<OrderIdeal> {
    let mut out = Vec::new();
    for_each_ideal(p, |s| out.push(OrderIdeal { members: s.clone() }));
    out
}

/// Number of order ideals of each size.
pub fn ideal_size_counts(p: &Poset) -> Vec<u64> {
    let mut counts = vec![0u64; p.size() + 1];
    for_each_ideal(p, |s| counts[s.count_ones(..)] += 1);
    counts
}

/// `sum over ideals I of q^{|I|}`.
pub fn ideal_generating_poly(p: &Poset) -> UniPoly {
    UniPoly::new(ideal_size_counts(p).into_iter().map(BigInt::from).collect())
}

/// `sum over ideals I of (-1)^{|I|}`.
pub fn signed_ideal_sum(p: &Poset) -> BigInt {
    ideal_generating_poly(p).eval(-1)
}

/// Positive roots ordered by `alpha <= beta` iff `beta - alpha` is a
/// nonnegative combination of simple roots. Elements follow the order of
/// `rs.positive_roots`.
pub fn root_poset(rs: &RootSystem) -> Poset {
    let index: HashMap<&[i64], usize> =
        rs.positive_roots.iter().enumerate().map(|(i, r)| (r.as_slice(), i)).collect();
    let mut pairs = Vec::new();
    for (i, beta) in rs.positive_roots.iter().enumerate() {
        for s in 0..rs.rank {
            let mut up = beta.clone();
            up[s] += 1;
            if let Some(&j) = index.get(up.as_slice()) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_covers(rs.positive_roots.len(), &pairs).expect("root poset covers come from simple root steps")
}

/// Poset of `I_2(m)`: the line poset on `m` elements.
pub fn root_poset_i2(m: u32) -> Result<Poset> {
    line_poset(m)
}

fn grid_poset<K: Copy + Eq + std::hash::Hash>(cells: &[K], covers: impl Fn(K) -> Vec<K>) -> Poset {
    let index: HashMap<K, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut pairs = Vec::new();
    for (i, &c) in cells.iter().enumerate() {
        for d in covers(c) {
            pairs.push((i, index[&d]));
        }
    }
    Poset::from_covers(cells.len(), &pairs).expect("grid covers are graded")
}

/// Trapezoid `T_{n,2n}`: cells `(a, b)` with `1 <= a <= b` and `a + b <= 2n`,
/// so the rows `a = 1, 2, ..., n` have `2n-1, 2n-3, ..., 1` cells. A cell is
/// covered by its right neighbour `(a, b+1)` and by `(a-1, b)`.
pub fn trapezoid_poset(n: u32) -> Result<Poset> {
    if n < 1 {
        return domain("trapezoid poset needs n >= 1");
    }
    let n = n as i64;
    let cells: Vec<(i64, i64)> = (1..=n).flat_map(|a| (a..=2 * n - a).map(move |b| (a, b))).collect();
    Ok(grid_poset(&cells, |(a, b)| {
        let mut out = Vec::new();
        if a + b < 2 * n {
            out.push((a, b + 1));
        }
        if a > 1 {
            out.push((a - 1, b));
        }
        out
    }))
}

/// Double triangle on `n(n-1)` elements. The lower triangle has cells
/// `(i, j)`, `1 <= i < j <= n`, covered by `(i-1, j)` and `(i, j+1)`; its
/// mirror image sits on top with cells `(i, j)` covered by `(i-1, j)` and
/// `(i, j-1)`. The two outer diagonals `j = n-1` and `j = n` of the lower
/// triangle are joined crosswise to the diagonals `j = n` and `j = n-1` of
/// the upper one.
pub fn double_triangle_poset(n: u32) -> Result<Poset> {
    if n < 2 {
        return domain("double triangle poset needs n >= 2");
    }
    let n = n as i64;
    let mut cells = Vec::new();
    for upper in [false, true] {
        for i in 1..=n {
            for j in i + 1..=n {
                cells.push((upper, i, j));
            }
        }
    }
    Ok(grid_poset(&cells, |(upper, i, j)| {
        let mut out = Vec::new();
        if !upper {
            if i > 1 {
                out.push((false, i - 1, j));
            }
            if j < n {
                out.push((false, i, j + 1));
            }
            if i <= n - 2 && j == n {
                out.push((true, i, n - 1));
            }
            if i <= n - 2 && j == n - 1 {
                out.push((true, i, n));
            }
        } else {
            if i > 1 {
                out.push((true, i - 1, j));
            }
            if j - 1 > i {
                out.push((true, i, j - 1));
            }
        }
        out
    }))
}

/// Two incomparable minimal elements `0` and `1`, both covered by `2`, then a
/// chain `2 < 3 < ... < n-1`.
pub fn line_poset(n: u32) -> Result<Poset> {
    if n < 2 {
        return domain("line poset needs n >= 2");
    }
    let n = n as usize;
    let mut pairs = Vec::new();
    if n > 2 {
        pairs.push((0, 2));
        pairs.push((1, 2));
    }
    for v in 2..n.saturating_sub(1) {
        pairs.push((v, v + 1));
    }
    Poset::from_covers(n, &pairs)
}

/// Searches for an isomorphism `p -> q`; returns the image of each element
/// of `p`.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.size() != q.size() || p.cover_pairs().len() != q.cover_pairs().len() {
        return None;
    }
    let sig = |x: &Poset| -> Vec<(usize, usize, usize, usize, usize)> {
        let ranks = x.ranks();
        let above = x.strict_upsets();
        let below: Vec<usize> = (0..x.size())
            .map(|v| (0..x.size()).filter(|&w| above[w].contains(v)).count())
            .collect();
        (0..x.size())
            .map(|v| (ranks[v], x.up[v].len(), x.down[v].len(), above[v].count_ones(..), below[v]))
            .collect()
    };
    let (sp, sq) = (sig(p), sig(q));
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let mut map = vec![usize::MAX; p.size()];
    let mut used = vec![false; q.size()];
    fn extend(
        p: &Poset,
        q: &Poset,
        sp: &[(usize, usize, usize, usize, usize)],
        sq: &[(usize, usize, usize, usize, usize)],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == p.order.len() {
            return true;
        }
        let v = p.order[pos];
        for w in 0..q.size() {
            if used[w] || sp[v] != sq[w] {
                continue;
            }
            // Lower covers of v come earlier in the linear extension, so they
            // are mapped; they must be exactly the lower covers of w.
            let mut images: Vec<usize> = p.down[v].iter().map(|&x| map[x]).collect();
            images.sort_unstable();
            if images != q.down[w] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(p, q, sp, sq, pos + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    extend(p, q, &sp, &sq, 0, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    find_isomorphism(p, q).is_some()
}
