use std::fmt;

use serde::Serialize;

use crate::error::{domain, Result};

/// Element of `I_2(n)` acting on `Z/n` by `v -> shift + v` (rotation) or
/// `v -> shift - v` (reflection).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralElement {
    pub n: u32,
    pub shift: u32,
    pub reflected: bool,
}

impl DihedralElement {
    pub fn new(n: u32, shift: i64, reflected: bool) -> Result<Self> {
        if n == 0 {
            return domain("dihedral group parameter must be positive");
        }
        Ok(Self { n, shift: shift.rem_euclid(n as i64) as u32, reflected })
    }

    pub fn identity(n: u32) -> Self {
        Self { n, shift: 0, reflected: false }
    }

    /// Generator `r`: `v -> v + 1`.
    pub fn r(n: u32) -> Self {
        Self { n, shift: 1 % n, reflected: false }
    }

    /// Generator `s`: `v -> -v`.
    pub fn s(n: u32) -> Self {
        Self { n, shift: 0, reflected: true }
    }

    pub fn rotation(n: u32, shift: i64) -> Self {
        Self::new(n, shift, false).expect("n > 0")
    }

    pub fn reflection(n: u32, shift: i64) -> Self {
        Self::new(n, shift, true).expect("n > 0")
    }

    /// Rotations `r^0..r^{n-1}`, then reflections `s_0..s_{n-1}` where
    /// `s_j: v -> j - v`.
    pub fn elements(n: u32) -> Vec<Self> {
        (0..n)
            .map(|k| Self::rotation(n, k as i64))
            .chain((0..n).map(|k| Self::reflection(n, k as i64)))
            .collect()
    }

    pub fn apply(&self, v: u32) -> u32 {
        let n = self.n as i64;
        let v = v as i64;
        let image = if self.reflected { self.shift as i64 - v } else { self.shift as i64 + v };
        image.rem_euclid(n) as u32
    }

    /// `self * other`, acting as `v -> self(other(v))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "composing elements of different dihedral groups");
        let (a, b) = (self.shift as i64, other.shift as i64);
        match (self.reflected, other.reflected) {
            (false, false) => Self::rotation(self.n, a + b),
            (false, true) => Self::reflection(self.n, a + b),
            (true, false) => Self::reflection(self.n, a - b),
            (true, true) => Self::rotation(self.n, a - b),
        }
    }

    pub fn inverse(&self) -> Self {
        if self.reflected {
            *self
        } else {
            Self::rotation(self.n, -(self.shift as i64))
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.n), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> u32 {
        if self.reflected {
            2
        } else {
            self.n / crate::util::gcd(self.n as u64, self.shift as u64) as u32
        }
    }

    /// Eigenvalues of the defining 2x2 representation as `(d, a, b)`,
    /// meaning the pair `(zeta_d^a, zeta_d^b)`.
    pub fn eigen_exponents(&self) -> (u32, i64, i64) {
        if self.reflected {
            (2, 0, 1)
        } else {
            (self.n, self.shift as i64, -(self.shift as i64))
        }
    }

    pub fn conjugacy_class(&self) -> Vec<Self> {
        let mut class: Vec<Self> = Self::elements(self.n)
            .iter()
            .map(|g| g.compose(self).compose(&g.inverse()))
            .collect();
        class.sort();
        class.dedup();
        class
    }

    /// Conjugacy classes, each sorted, listed by their smallest element.
    pub fn conjugacy_classes(n: u32) -> Vec<Vec<Self>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for g in Self::elements(n) {
            if seen.contains(&g) {
                continue;
            }
            let class = g.conjugacy_class();
            seen.extend(class.iter().copied());
            out.push(class);
        }
        out
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "s_{}", self.shift)
        } else {
            write!(f, "r^{}", self.shift)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation() {
        for n in 1..=12 {
            let r = DihedralElement::r(n);
            let s = DihedralElement::s(n);
            let e = DihedralElement::identity(n);
            assert_eq!(r.pow(n), e);
            assert_eq!(s.compose(&s), e);
            assert_eq!(r.compose(&s), s.compose(&r.inverse()));
            assert_eq!(DihedralElement::elements(n).len(), 2 * n as usize);
        }
    }

    #[test]
    fn composition_matches_action() {
        for n in [5u32, 6, 9] {
            let all = DihedralElement::elements(n);
            for g in &all {
                assert_eq!(g.compose(&g.inverse()), DihedralElement::identity(n));
                for h in &all {
                    let gh = g.compose(h);
                    for v in 0..n {
                        assert_eq!(gh.apply(v), g.apply(h.apply(v)));
                    }
                }
            }
        }
    }

    #[test]
    fn class_structure() {
        // Odd n: identity, (n-1)/2 rotation pairs, one reflection class.
        let classes = DihedralElement::conjugacy_classes(9);
        assert_eq!(classes.len(), 1 + 4 + 1);
        assert_eq!(classes.last().unwrap().len(), 9);
        // Even n: two reflection classes and a central half turn.
        let classes = DihedralElement::conjugacy_classes(8);
        assert_eq!(classes.len(), 2 + 3 + 2);
        let sizes: usize = classes.iter().map(Vec::len).sum();
        assert_eq!(sizes, 16);
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(DihedralElement::s(7).eigen_exponents(), (2, 0, 1));
        assert_eq!(DihedralElement::r(7).eigen_exponents(), (7, 1, -1));
        assert_eq!(DihedralElement::rotation(7, 3).order(), 7);
        assert_eq!(DihedralElement::rotation(9, 3).order(), 3);
    }
}
