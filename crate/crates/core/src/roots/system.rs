use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{domain, Result, SieveError};
use crate::polyqt::UniPoly;

/// Cartan-Killing families with the crystallographic finite types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl FromStr for Family {
    type Err = SieveError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            other => domain(format!("unknown root system family {other:?}")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A finite crystallographic root system with Bourbaki numbering (0-based
/// here). Roots are integer vectors in the basis of simple roots.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `gram[i][j]` is a positive multiple of `(alpha_i, alpha_j)`.
    pub gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by height, then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    pub exponents: Vec<u32>,
    pub coxeter_number: u32,
}

fn chain_gram(rank: usize, edges: &[(usize, usize)], lengths: &[i64], weights: &HashMap<(usize, usize), i64>) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; rank]; rank];
    for i in 0..rank {
        g[i][i] = lengths[i];
    }
    for &(a, b) in edges {
        let w = *weights.get(&(a, b)).unwrap_or(&-(lengths[a].min(lengths[b]) / 2));
        g[a][b] = w;
        g[b][a] = w;
    }
    g
}

fn gram_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let path: Vec<(usize, usize)> = (1..rank).map(|i| (i - 1, i)).collect();
    let none = HashMap::new();
    let valid = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 3,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
    };
    if !valid {
        return domain(format!("no root system of type {family}{rank}"));
    }
    Ok(match family {
        Family::A => chain_gram(rank, &path, &vec![2; rank], &none),
        Family::B => {
            // alpha_n short.
            let mut lengths = vec![4; rank];
            lengths[rank - 1] = 2;
            let mut w = HashMap::new();
            w.insert((rank - 2, rank - 1), -2);
            chain_gram(rank, &path, &lengths, &w)
        }
        Family::C => {
            // alpha_n long.
            let mut lengths = vec![2; rank];
            lengths[rank - 1] = 4;
            let mut w = HashMap::new();
            w.insert((rank - 2, rank - 1), -2);
            chain_gram(rank, &path, &lengths, &w)
        }
        Family::D => {
            let mut edges: Vec<(usize, usize)> = (1..rank - 1).map(|i| (i - 1, i)).collect();
            edges.push((rank - 3, rank - 1));
            chain_gram(rank, &edges, &vec![2; rank], &none)
        }
        Family::E => {
            // Bourbaki: 1-3-4-5-6(-7-8), 2-4; shifted to 0-based.
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
            for i in 5..rank {
                edges.push((i - 1, i));
            }
            chain_gram(rank, &edges, &vec![2; rank], &none)
        }
        Family::F => {
            let lengths = vec![4, 4, 2, 2];
            let mut w = HashMap::new();
            w.insert((1, 2), -2);
            chain_gram(rank, &path, &lengths, &w)
        }
    })
}

fn exponent_table(family: Family, rank: usize) -> (Vec<u32>, u32) {
    let n = rank as u32;
    match (family, rank) {
        (Family::A, _) => ((1..=n).collect(), n + 1),
        (Family::B | Family::C, _) => ((0..n).map(|i| 2 * i + 1).collect(), 2 * n),
        (Family::D, _) => {
            let mut e: Vec<u32> = (0..n - 1).map(|i| 2 * i + 1).collect();
            e.push(n - 1);
            e.sort_unstable();
            (e, 2 * n - 2)
        }
        (Family::E, 6) => (vec![1, 4, 5, 7, 8, 11], 12),
        (Family::E, 7) => (vec![1, 5, 7, 9, 11, 13, 17], 18),
        (Family::E, 8) => (vec![1, 7, 11, 13, 17, 19, 23, 29], 30),
        (Family::F, 4) => (vec![1, 5, 7, 11], 12),
        _ => unreachable!("validated by gram_matrix"),
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let gram = gram_matrix(family, rank)?;
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let (exponents, coxeter_number) = exponent_table(family, rank);
        let mut rs = Self { family, rank, gram, cartan, positive_roots: Vec::new(), exponents, coxeter_number };
        rs.positive_roots = rs.close_positive_roots();
        Ok(rs)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    /// `(beta, gamma)` up to the fixed positive scale of the Gram matrix.
    pub fn inner(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if beta[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += beta[i] * self.gram[i][j] * gamma[j];
            }
        }
        s
    }

    /// Reflection in the simple root `alpha_i`.
    pub fn simple_reflection(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank).map(|j| beta[j] * self.cartan[j][i]).sum();
        let mut out = beta.to_vec();
        out[i] -= pairing;
        out
    }

    /// Reflection `sigma_alpha(beta) = beta - 2 (beta, alpha)/(alpha, alpha) alpha`.
    pub fn reflect(&self, alpha: &[i64], beta: &[i64]) -> Vec<i64> {
        let num = 2 * self.inner(beta, alpha);
        let den = self.inner(alpha, alpha);
        debug_assert_eq!(num % den, 0, "crystallographic pairing is integral");
        let k = num / den;
        beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect()
    }

    fn close_positive_roots(&self) -> Vec<Vec<i64>> {
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = (0..self.rank).map(|i| self.simple_root(i)).collect();
        for r in &queue {
            seen.insert(r.clone(), ());
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..self.rank {
                let img = self.simple_reflection(i, &beta);
                if img.iter().all(|&c| c >= 0) && !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_keys().collect();
        roots.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        roots
    }

    /// All roots, positive then negative.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let neg = self.positive_roots.iter().map(|r| r.iter().map(|c| -c).collect());
        self.positive_roots.iter().cloned().chain(neg).collect()
    }

    /// Adjacency of the Coxeter graph.
    pub fn coxeter_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.gram[i][j] != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `Cat(Phi, q) = prod_i [h + e_i + 1]_q / [e_i + 1]_q`.
    pub fn q_catalan(&self) -> UniPoly {
        catalan_product(self.coxeter_number, &self.exponents)
    }

    pub fn catalan_number(&self) -> BigInt {
        self.q_catalan().eval(1)
    }

    /// Whether the longest element acts as `-1`, read off the exponents:
    /// this happens exactly when every exponent is odd.
    pub fn longest_element_is_central(&self) -> bool {
        self.exponents.iter().all(|e| e % 2 == 1)
    }
}

pub fn catalan_product(h: u32, exponents: &[u32]) -> UniPoly {
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for &e in exponents {
        num = &num * &UniPoly::q_analogue(h + e + 1);
        den = &den * &UniPoly::q_analogue(e + 1);
    }
    num.div_exact(&den).expect("q-Catalan product is a polynomial")
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn all_types() -> Vec<(Family, usize)> {
        let mut v = Vec::new();
        for n in 1..=7 {
            v.push((Family::A, n));
        }
        for n in 2..=6 {
            v.push((Family::B, n));
            v.push((Family::C, n));
        }
        for n in 3..=7 {
            v.push((Family::D, n));
        }
        v.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4)]);
        v
    }

    #[test]
    fn examples() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        assert_eq!(a2.positive_roots.len(), 3);
        assert_eq!(a2.coxeter_number, 3);
        assert_eq!(a2.exponents, vec![1, 2]);
        assert_eq!(build_root_system(Family::B, 3).unwrap().positive_roots.len(), 9);
        let e6 = build_root_system(Family::E, 6).unwrap();
        assert_eq!(e6.positive_roots.len(), 36);
        assert_eq!(e6.coxeter_number, 12);
        assert!(build_root_system(Family::E, 5).is_err());
        assert!(build_root_system(Family::F, 3).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
        assert!(build_root_system(Family::D, 2).is_err());
    }

    #[test]
    fn structure() {
        for (f, n) in all_types() {
            let rs = build_root_system(f, n).unwrap();
            let h = rs.coxeter_number as usize;
            assert_eq!(rs.positive_roots.len(), n * h / 2, "{}", rs.label());
            assert_eq!(rs.exponents.len(), n);
            // The highest root has height h - 1.
            let top: i64 = rs.positive_roots.last().unwrap().iter().sum();
            assert_eq!(top as usize, h - 1, "{}", rs.label());
            let all: HashSet<Vec<i64>> = rs.all_roots().into_iter().collect();
            for alpha in &rs.positive_roots {
                for beta in &all {
                    assert!(all.contains(&rs.reflect(alpha, beta)), "{}", rs.label());
                }
            }
        }
    }

    #[test]
    fn cartan_entries() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        assert_eq!(b3.cartan[1][2], -2);
        assert_eq!(b3.cartan[2][1], -1);
        let c3 = build_root_system(Family::C, 3).unwrap();
        assert_eq!(c3.cartan[1][2], -1);
        assert_eq!(c3.cartan[2][1], -2);
        let f4 = build_root_system(Family::F, 4).unwrap();
        assert_eq!(f4.cartan[1][2], -2);
        assert_eq!(f4.cartan[2][1], -1);
        let e8 = build_root_system(Family::E, 8).unwrap();
        assert_eq!(e8.positive_roots.last().unwrap(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn catalan_numbers() {
        let cases = [
            ((Family::A, 2), 5),
            ((Family::A, 3), 14),
            ((Family::B, 3), 20),
            ((Family::D, 4), 50),
            ((Family::F, 4), 105),
            ((Family::E, 6), 833),
            ((Family::E, 7), 4160),
            ((Family::E, 8), 25080),
        ];
        for ((f, n), c) in cases {
            assert_eq!(build_root_system(f, n).unwrap().catalan_number(), BigInt::from(c));
        }
    }
}
