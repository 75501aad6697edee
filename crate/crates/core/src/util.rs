use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Binomial coefficient as a big integer; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Serializes a big integer as a bare JSON number of arbitrary length.
pub fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    let number: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
    number.serialize(s)
}

/// All maximal cliques of a graph given by adjacency bitsets, by
/// Bron-Kerbosch with pivoting. Each clique is returned sorted; the list is
/// sorted lexicographically.
pub fn maximal_cliques(adj: &[FixedBitSet]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let mut current = Vec::new();
    bron_kerbosch(adj, &mut current, candidates, FixedBitSet::with_capacity(n), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            out.push(current.clone());
        }
        return;
    }
    // Pivot on the vertex with the most neighbours among the candidates.
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| adj[u].intersection(&candidates).count())
        .expect("candidates nonempty");
    let mut branch = candidates.clone();
    branch.difference_with(&adj[pivot]);
    for v in branch.ones() {
        let mut next_candidates = candidates.clone();
        next_candidates.intersect_with(&adj[v]);
        let mut next_excluded = excluded.clone();
        next_excluded.intersect_with(&adj[v]);
        current.push(v);
        bron_kerbosch(adj, current, next_candidates, next_excluded, out);
        current.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(1), 1);
    }

    #[test]
    fn cliques_of_a_pentagon_and_a_triangle() {
        let mut adj = vec![FixedBitSet::with_capacity(5); 5];
        for i in 0..5 {
            adj[i].insert((i + 1) % 5);
            adj[(i + 1) % 5].insert(i);
        }
        let cliques = maximal_cliques(&adj);
        assert_eq!(cliques, vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]);

        let mut tri = vec![FixedBitSet::with_capacity(4); 4];
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            tri[a].insert(b);
            tri[b].insert(a);
        }
        assert_eq!(maximal_cliques(&tri), vec![vec![0, 1, 2], vec![3]]);
    }
}
