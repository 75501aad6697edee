//! Polygon models for the type B and type D cluster complexes.
//!
//! Type B_n: centrally symmetric triangulations of the `(2n+2)`-gon.
//!
//! Type D_n: the `2n`-gon with vertices `0..2n`. A vertex of the complex is
//! either a pair of distinct non-diameter diagonals related by the half turn,
//! or a diameter carrying one of two flavors. Non-flavored diagonals must not
//! cross anything; a diameter may share its location with the other flavor,
//! and two diameters at different locations are compatible exactly when they
//! carry the same flavor.

use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use serde::Serialize;

use super::kangulation::{crosses, enumerate_kangulations};
use super::DihedralElement;
use crate::error::{domain, Result};
use crate::util::maximal_cliques;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PolygonType {
    B,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Flavor {
    Red,
    Blue,
}

impl Flavor {
    pub fn swapped(self) -> Self {
        match self {
            Flavor::Red => Flavor::Blue,
            Flavor::Blue => Flavor::Red,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// Diameter `(location, location + half)`; the flavor is present only in
/// type D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diameter {
    pub location: u32,
    pub flavor: Option<Flavor>,
}

/// A facet of the type B or type D polygon model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FlavoredDissection {
    pub kind: PolygonType,
    pub n: u32,
    /// Non-diameter diagonals `(i, j)`, `i < j`, sorted; closed under the
    /// half turn.
    pub chords: Vec<(u32, u32)>,
    pub diameters: Vec<Diameter>,
}

fn norm(a: u32, b: u32) -> (u32, u32) {
    if a < b { (a, b) } else { (b, a) }
}

impl FlavoredDissection {
    pub fn vertex_count(&self) -> u32 {
        match self.kind {
            PolygonType::B => 2 * self.n + 2,
            PolygonType::D => 2 * self.n,
        }
    }

    /// Image under a polygon symmetry; in type D, `swap` also reverses every
    /// flavor.
    pub fn transform(&self, g: &DihedralElement, swap: bool) -> Self {
        let half = self.vertex_count() / 2;
        let mut chords: Vec<(u32, u32)> =
            self.chords.iter().map(|&(a, b)| norm(g.apply(a), g.apply(b))).collect();
        chords.sort_unstable();
        let mut diameters: Vec<Diameter> = self
            .diameters
            .iter()
            .map(|d| Diameter {
                location: g.apply(d.location) % half,
                flavor: d.flavor.map(|f| if swap { f.swapped() } else { f }),
            })
            .collect();
        diameters.sort_unstable();
        Self { kind: self.kind, n: self.n, chords, diameters }
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        let half = self.vertex_count() / 2;
        let turn = DihedralElement::rotation(self.vertex_count(), half as i64);
        self.transform(&turn, false) == *self
    }

    /// Number of vertices of the cluster complex used by this facet.
    pub fn cluster_size(&self) -> usize {
        self.chords.len() / 2 + self.diameters.len()
    }
}

impl fmt::Display for FlavoredDissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = self.vertex_count() / 2;
        let mut parts: Vec<String> = self.chords.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        for d in &self.diameters {
            let tag = match d.flavor {
                None => String::new(),
                Some(Flavor::Red) => "r".into(),
                Some(Flavor::Blue) => "b".into(),
            };
            parts.push(format!("{}-{}{tag}", d.location, d.location + half));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Centrally symmetric triangulations of the `(2n+2)`-gon.
pub fn enumerate_type_b_facets(n: u32) -> Result<Vec<FlavoredDissection>> {
    if n < 2 {
        return domain("type B polygon model needs n >= 2");
    }
    let size = 2 * n + 2;
    let half = n + 1;
    let turn = DihedralElement::rotation(size, half as i64);
    let mut out = Vec::new();
    for t in enumerate_kangulations(size, 3)? {
        if t.act(&turn)? != t {
            continue;
        }
        let mut chords = Vec::new();
        let mut diameters = Vec::new();
        for &(a, b) in t.chords() {
            if b - a == half {
                diameters.push(Diameter { location: a, flavor: None });
            } else {
                chords.push((a, b));
            }
        }
        out.push(FlavoredDissection { kind: PolygonType::B, n, chords, diameters });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DElement {
    Pair((u32, u32), (u32, u32)),
    Diam(u32, Flavor),
}

fn type_d_elements(n: u32) -> Vec<DElement> {
    let size = 2 * n;
    let mut pairs = Vec::new();
    for a in 0..size {
        for b in a + 2..size {
            if (a == 0 && b == size - 1) || b - a == n {
                continue;
            }
            let other = norm((a + n) % size, (b + n) % size);
            if (a, b) < other {
                pairs.push(DElement::Pair((a, b), other));
            }
        }
    }
    for loc in 0..n {
        pairs.push(DElement::Diam(loc, Flavor::Red));
        pairs.push(DElement::Diam(loc, Flavor::Blue));
    }
    pairs
}

fn d_compatible(n: u32, x: DElement, y: DElement) -> bool {
    let chords = |e: DElement| match e {
        DElement::Pair(c1, c2) => vec![c1, c2],
        DElement::Diam(loc, _) => vec![(loc, loc + n)],
    };
    match (x, y) {
        (DElement::Diam(l1, f1), DElement::Diam(l2, f2)) => {
            if l1 == l2 {
                f1 != f2
            } else {
                f1 == f2
            }
        }
        _ => chords(x).iter().all(|&c| chords(y).iter().all(|&e| c == e || !crosses(c, e))),
    }
}

/// Maximal compatible configurations of the type D polygon model.
pub fn enumerate_type_d_facets(n: u32) -> Result<Vec<FlavoredDissection>> {
    if n < 3 {
        return domain("type D polygon model needs n >= 3");
    }
    let elems = type_d_elements(n);
    let mut adj = vec![FixedBitSet::with_capacity(elems.len()); elems.len()];
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            if i != j && d_compatible(n, elems[i], elems[j]) {
                adj[i].insert(j);
            }
        }
    }
    let mut out = Vec::new();
    for clique in maximal_cliques(&adj) {
        let mut chords = Vec::new();
        let mut diameters = Vec::new();
        for i in clique {
            match elems[i] {
                DElement::Pair(c1, c2) => chords.extend([c1, c2]),
                DElement::Diam(location, f) => diameters.push(Diameter { location, flavor: Some(f) }),
            }
        }
        chords.sort_unstable();
        diameters.sort_unstable();
        out.push(FlavoredDissection { kind: PolygonType::D, n, chords, diameters });
    }
    out.sort();
    Ok(out)
}

pub fn enumerate_bd_facets(kind: PolygonType, n: u32) -> Result<Vec<FlavoredDissection>> {
    match kind {
        PolygonType::B => enumerate_type_b_facets(n),
        PolygonType::D => enumerate_type_d_facets(n),
    }
}

/// The polygon reflection playing the role of `tau_eps`: `v -> -v` for
/// `Plus` and `v -> 1 - v` for `Minus`. Their product is a rotation by one
/// vertex.
pub fn tau_reflection(kind: PolygonType, n: u32, eps: Sign) -> DihedralElement {
    let size = match kind {
        PolygonType::B => 2 * n + 2,
        PolygonType::D => 2 * n,
    };
    match eps {
        Sign::Plus => DihedralElement::reflection(size, 0),
        Sign::Minus => DihedralElement::reflection(size, 1),
    }
}

/// How the type D involutions treat diameter flavors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FlavorRule {
    /// Both `tau_+` and `tau_-` reverse every flavor. Then `R` is a plain
    /// rotation by one vertex, of order `n` on centrally symmetric objects.
    AllReversed,
    /// Only `tau_-` reverses flavors, so `R` rotates and flips every flavor
    /// and has order `2n` for odd `n`, as in the root-theoretic complex.
    MinusReverses,
}

impl FlavorRule {
    pub fn reverses(self, kind: PolygonType, eps: Sign) -> bool {
        kind == PolygonType::D
            && match self {
                FlavorRule::AllReversed => true,
                FlavorRule::MinusReverses => eps == Sign::Minus,
            }
    }
}

/// Facets fixed by `tau_eps` under the given flavor rule. Type B has no
/// flavors, so the rule only matters in type D.
pub fn tau_fixed_count_bd_with(kind: PolygonType, n: u32, eps: Sign, rule: FlavorRule) -> Result<BigInt> {
    let g = tau_reflection(kind, n, eps);
    let swap = rule.reverses(kind, eps);
    let facets = enumerate_bd_facets(kind, n)?;
    Ok(BigInt::from(facets.iter().filter(|f| f.transform(&g, swap) == **f).count()))
}

/// Facets fixed by `tau_eps`, with flavors following
/// [`FlavorRule::MinusReverses`].
pub fn tau_fixed_count_bd(kind: PolygonType, n: u32, eps: Sign) -> Result<BigInt> {
    tau_fixed_count_bd_with(kind, n, eps, FlavorRule::MinusReverses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::binomial;

    fn type_d_catalan(n: u32) -> BigInt {
        // Exponents 1, 3, ..., 2n-3 and n-1; Coxeter number 2n-2.
        let h = 2 * n - 2;
        let mut exps: Vec<u32> = (0..n - 1).map(|i| 2 * i + 1).collect();
        exps.push(n - 1);
        let num: BigInt = exps.iter().map(|&e| BigInt::from(h + e + 1)).product();
        let den: BigInt = exps.iter().map(|&e| BigInt::from(e + 1)).product();
        num / den
    }

    #[test]
    fn type_b_counts() {
        for n in 2..=5u32 {
            let facets = enumerate_type_b_facets(n).unwrap();
            assert_eq!(BigInt::from(facets.len()), binomial(2 * n as i64, n as i64), "n={n}");
            for f in &facets {
                assert!(f.is_centrally_symmetric());
                assert_eq!(f.diameters.len(), 1, "a symmetric triangulation has one diameter");
                assert_eq!(f.cluster_size(), n as usize);
            }
        }
    }

    #[test]
    fn type_d_counts() {
        assert_eq!(type_d_catalan(3), BigInt::from(14));
        assert_eq!(type_d_catalan(4), BigInt::from(50));
        assert_eq!(type_d_catalan(5), BigInt::from(182));
        for n in 3..=5u32 {
            let facets = enumerate_type_d_facets(n).unwrap();
            assert_eq!(BigInt::from(facets.len()), type_d_catalan(n), "n={n}");
            for f in &facets {
                assert_eq!(f.cluster_size(), n as usize);
                assert!(f.is_centrally_symmetric());
            }
        }
    }

    #[test]
    fn tau_maps_facets_to_facets() {
        for (kind, n) in [(PolygonType::B, 3), (PolygonType::B, 4), (PolygonType::D, 4), (PolygonType::D, 5)] {
            let facets = enumerate_bd_facets(kind, n).unwrap();
            let set: std::collections::HashSet<_> = facets.iter().cloned().collect();
            for eps in [Sign::Plus, Sign::Minus] {
                let g = tau_reflection(kind, n, eps);
                for swap in [false, true] {
                    for f in &facets {
                        let image = f.transform(&g, swap);
                        assert!(set.contains(&image));
                        assert_eq!(&image.transform(&g, swap), f);
                    }
                }
            }
        }
    }

    #[test]
    fn type_b_even_rank_has_no_fixed_facets() {
        for eps in [Sign::Plus, Sign::Minus] {
            for n in [2, 4] {
                assert_eq!(tau_fixed_count_bd(PolygonType::B, n, eps).unwrap(), BigInt::from(0));
            }
        }
        assert_eq!(tau_fixed_count_bd(PolygonType::B, 3, Sign::Plus).unwrap(), BigInt::from(2));
        assert_eq!(tau_fixed_count_bd(PolygonType::B, 5, Sign::Plus).unwrap(), BigInt::from(4));
    }

    #[test]
    fn type_d_fixed_facets_depend_on_the_flavor_rule() {
        for n in [3, 5] {
            for eps in [Sign::Plus, Sign::Minus] {
                let all = tau_fixed_count_bd_with(PolygonType::D, n, eps, FlavorRule::AllReversed).unwrap();
                assert_eq!(all, BigInt::from(0));
            }
        }
        let plus: Vec<BigInt> = (3..=5).map(|n| tau_fixed_count_bd(PolygonType::D, n, Sign::Plus).unwrap()).collect();
        let minus: Vec<BigInt> = (3..=5).map(|n| tau_fixed_count_bd(PolygonType::D, n, Sign::Minus).unwrap()).collect();
        assert_eq!(plus, vec![BigInt::from(4), BigInt::from(12), BigInt::from(8)]);
        assert_eq!(minus, vec![BigInt::from(0); 3]);
    }

    #[test]
    fn display() {
        let f = &enumerate_type_d_facets(3).unwrap()[0];
        assert!(!f.to_string().is_empty());
        assert!(enumerate_type_b_facets(1).is_err());
        assert!(enumerate_type_d_facets(2).is_err());
    }
}
