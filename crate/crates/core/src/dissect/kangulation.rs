use std::collections::HashMap;
use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::DihedralElement;
use crate::error::{domain, Result, SieveError};
use crate::raney::raney;
use crate::util::binomial;

/// A dissection of the convex `n`-gon with vertices `0..n` in circular
/// order, stored as its sorted list of chords `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    n: u32,
    chords: Vec<(u32, u32)>,
}

pub(super) fn crosses(a: (u32, u32), b: (u32, u32)) -> bool {
    let ((p, q), (r, s)) = (a, b);
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

fn normalize(i: u32, j: u32) -> (u32, u32) {
    if i < j { (i, j) } else { (j, i) }
}

impl Dissection {
    pub fn new(n: u32, chords: Vec<(u32, u32)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(chords.len());
        for (i, j) in chords {
            let (i, j) = normalize(i, j);
            if j >= n || i == j || j - i == 1 || (i == 0 && j == n - 1) {
                return domain(format!("({i},{j}) is not a diagonal of the {n}-gon"));
            }
            normalized.push((i, j));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let d = Self { n, chords: normalized };
        if !d.is_noncrossing() {
            return domain("chords cross");
        }
        Ok(d)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn chords(&self) -> &[(u32, u32)] {
        &self.chords
    }

    pub fn is_noncrossing(&self) -> bool {
        self.chords
            .iter()
            .enumerate()
            .all(|(i, &a)| self.chords[i + 1..].iter().all(|&b| !crosses(a, b)))
    }

    /// Vertex cycles of the bounded faces, each listed counterclockwise.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut nbrs: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
        let mut add = |a: u32, b: u32| {
            nbrs[a as usize].push(b);
            nbrs[b as usize].push(a);
        };
        for v in 0..n {
            add(v, (v + 1) % n);
        }
        for &(a, b) in &self.chords {
            add(a, b);
        }
        let offset = |from: u32, to: u32| (to + n - from) % n;
        for (v, list) in nbrs.iter_mut().enumerate() {
            list.sort_by_key(|&w| offset(v as u32, w));
            list.dedup();
        }
        // Directed edges with the face on their left: polygon edges v -> v+1
        // and both orientations of every chord.
        let mut starts: Vec<(u32, u32)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        for &(a, b) in &self.chords {
            starts.push((a, b));
            starts.push((b, a));
        }
        let mut used = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for start in starts {
            if used.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut v) = start;
            loop {
                used.insert((u, v));
                face.push(u);
                let back = offset(v, u);
                let w = *nbrs[v as usize]
                    .iter()
                    .rev()
                    .find(|&&w| offset(v, w) < back)
                    .expect("convex position always has a left turn");
                u = v;
                v = w;
                if (u, v) == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    pub fn is_kangulation(&self, k: u32) -> bool {
        self.is_noncrossing() && self.faces().iter().all(|f| f.len() == k as usize)
    }

    /// Image under `g`, which must act on the same polygon.
    pub fn act(&self, g: &DihedralElement) -> Result<Self> {
        if g.n != self.n {
            return domain(format!("element of I_2({}) cannot act on a {}-gon", g.n, self.n));
        }
        let mut chords: Vec<(u32, u32)> =
            self.chords.iter().map(|&(a, b)| normalize(g.apply(a), g.apply(b))).collect();
        chords.sort_unstable();
        Ok(Self { n: self.n, chords })
    }

    fn is_fixed_by(&self, g: &DihedralElement) -> bool {
        self.chords.iter().all(|&(a, b)| self.chords.binary_search(&normalize(g.apply(a), g.apply(b))).is_ok())
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chords.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Number of k-gons `m = (n - 2) / (k - 2)` in a k-angulation of the n-gon.
pub fn polygon_count(n: u32, k: u32) -> Result<u32> {
    if k < 3 || n < k {
        return domain(format!("k-angulations need n >= k >= 3, got n={n}, k={k}"));
    }
    if !(n - 2).is_multiple_of(k - 2) {
        return domain(format!(
            "an {n}-gon has no {k}-angulation: n must be congruent to 2 modulo k - 2"
        ));
    }
    Ok((n - 2) / (k - 2))
}

/// All k-angulations of the polygon `0..=len` whose base edge is `(0, len)`,
/// as chord lists excluding the base edge.
fn interval_dissections(len: u32, k: u32, memo: &mut HashMap<u32, Vec<Vec<(u32, u32)>>>) -> Vec<Vec<(u32, u32)>> {
    if len == 1 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&len) {
        return v.clone();
    }
    let gap_ok = |g: u32| g == 1 || (g >= k - 1 && (g - 1).is_multiple_of(k - 2));
    let mut out = Vec::new();
    let mut gaps = Vec::new();
    choose_gaps(len, k - 1, &gap_ok, &mut gaps, &mut |gaps: &[u32]| {
        let mut partial: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
        let mut start = 0;
        for &g in gaps {
            if g > 1 {
                let subs = interval_dissections(g, k, memo);
                let mut next = Vec::with_capacity(partial.len() * subs.len());
                for p in &partial {
                    for sub in &subs {
                        let mut c = p.clone();
                        c.push((start, start + g));
                        c.extend(sub.iter().map(|&(a, b)| (a + start, b + start)));
                        next.push(c);
                    }
                }
                partial = next;
            }
            start += g;
        }
        for mut c in partial {
            c.sort_unstable();
            out.push(c);
        }
    });
    memo.insert(len, out.clone());
    out
}

fn choose_gaps(
    remaining: u32,
    slots: u32,
    ok: &dyn Fn(u32) -> bool,
    gaps: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if slots == 1 {
        if ok(remaining) {
            gaps.push(remaining);
            emit(gaps);
            gaps.pop();
        }
        return;
    }
    for g in 1..remaining {
        if remaining - g < slots - 1 || !ok(g) {
            continue;
        }
        gaps.push(g);
        choose_gaps(remaining - g, slots - 1, ok, gaps, emit);
        gaps.pop();
    }
}

/// Every k-angulation of the n-gon, built around the k-gon on edge
/// `(0, n-1)`, in sorted order.
pub fn enumerate_kangulations(n: u32, k: u32) -> Result<Vec<Dissection>> {
    polygon_count(n, k)?;
    let mut memo = HashMap::new();
    let mut all: Vec<Dissection> = interval_dissections(n - 1, k, &mut memo)
        .into_iter()
        .map(|chords| Dissection { n, chords })
        .collect();
    all.sort();
    Ok(all)
}

pub fn fixed_count(n: u32, k: u32, g: &DihedralElement) -> Result<BigInt> {
    if g.n != n {
        return domain(format!("element of I_2({}) cannot act on an {n}-gon", g.n));
    }
    let all = enumerate_kangulations(n, k)?;
    Ok(BigInt::from(all.iter().filter(|d| d.is_fixed_by(g)).count()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub shift: u32,
    pub reflected: bool,
    #[serde(serialize_with = "crate::util::serialize_bigint")]
    pub fixed_count: BigInt,
}

impl CensusRow {
    pub fn element(&self, n: u32) -> DihedralElement {
        DihedralElement { n, shift: self.shift, reflected: self.reflected }
    }
}

/// Fixed-point counts for all `2n` elements, rotations first.
pub fn dihedral_census(n: u32, k: u32) -> Result<Vec<CensusRow>> {
    let all = enumerate_kangulations(n, k)?;
    Ok(DihedralElement::elements(n)
        .par_iter()
        .map(|g| CensusRow {
            shift: g.shift,
            reflected: g.reflected,
            fixed_count: BigInt::from(all.iter().filter(|d| d.is_fixed_by(g)).count()),
        })
        .collect())
}

pub fn write_census_csv<W: Write>(rows: &[CensusRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| SieveError::Internal(format!("csv output failed: {e}"));
    w.write_record(["shift", "reflected", "fixed_count"]).map_err(io)?;
    for r in rows {
        w.write_record([r.shift.to_string(), r.reflected.to_string(), r.fixed_count.to_string()])
            .map_err(io)?;
    }
    w.flush().map_err(|e| SieveError::Internal(format!("csv output failed: {e}")))
}

/// Closed form for the k-angulations fixed by any reflection of an odd
/// polygon: `R_{k-1,(k-1)/2}((m-1)/2)`.
pub fn reflection_fixed_closed_form(n: u32, k: u32) -> Result<BigInt> {
    let m = polygon_count(n, k)?;
    if n.is_multiple_of(2) {
        return Err(SieveError::Unsupported(format!("reflection closed form needs odd n, got {n}")));
    }
    raney(k - 1, (k - 1) / 2, (m - 1) / 2)
}

/// Closed form for the k-angulations of an odd polygon fixed by a rotation
/// of order `d >= 2`: `C((m(k-1)+1)/d - 1, (m-1)/d)` when `d` divides `k`,
/// and 0 otherwise.
pub fn rotation_fixed_closed_form(n: u32, k: u32, d: u32) -> Result<BigInt> {
    let m = polygon_count(n, k)?;
    if n.is_multiple_of(2) || d < 2 || !n.is_multiple_of(d) {
        return Err(SieveError::Unsupported(format!(
            "rotation closed form needs odd n and a divisor d >= 2 of n, got n={n}, d={d}"
        )));
    }
    if !k.is_multiple_of(d) {
        return Ok(BigInt::from(0));
    }
    Ok(binomial(((m * (k - 1) + 1) / d) as i64 - 1, ((m - 1) / d) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent enumeration: grow noncrossing diagonal sets and keep the
    /// ones whose faces are all k-gons.
    fn brute_force(n: u32, k: u32) -> HashSet<Vec<(u32, u32)>> {
        let m = (n - 2) / (k - 2);
        let diagonals: Vec<(u32, u32)> = (0..n)
            .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == n - 1))
            .collect();
        let mut out = HashSet::new();
        fn grow(
            start: usize,
            diags: &[(u32, u32)],
            current: &mut Vec<(u32, u32)>,
            need: usize,
            n: u32,
            k: u32,
            out: &mut HashSet<Vec<(u32, u32)>>,
        ) {
            if current.len() == need {
                let d = Dissection { n, chords: current.clone() };
                if d.is_kangulation(k) {
                    out.insert(current.clone());
                }
                return;
            }
            for i in start..diags.len() {
                if current.iter().all(|&c| !crosses(c, diags[i])) {
                    current.push(diags[i]);
                    grow(i + 1, diags, current, need, n, k, out);
                    current.pop();
                }
            }
        }
        grow(0, &diagonals, &mut Vec::new(), (m - 1) as usize, n, k, &mut out);
        out
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_kangulations(5, 5).unwrap(), vec![Dissection { n: 5, chords: vec![] }]);
        assert_eq!(enumerate_kangulations(9, 3).unwrap().len(), 429);
        assert_eq!(enumerate_kangulations(11, 5).unwrap().len(), 22);
        assert!(matches!(enumerate_kangulations(10, 5), Err(SieveError::Domain(_))));
        assert!(enumerate_kangulations(4, 5).is_err());
    }

    #[test]
    fn counts_are_fuss_catalan() {
        for k in 3..=7u32 {
            for m in 1..=5u32 {
                let n = m * (k - 2) + 2;
                if n > 20 {
                    continue;
                }
                let all = enumerate_kangulations(n, k).unwrap();
                assert_eq!(BigInt::from(all.len()), raney(k - 1, 1, m).unwrap(), "n={n} k={k}");
                for d in &all {
                    assert_eq!(d.chords().len() as u32, m - 1);
                    assert!(d.is_kangulation(k));
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (n, k) in [(6, 3), (7, 3), (8, 3), (8, 4), (10, 4), (11, 5), (8, 5)] {
            let listed: Vec<Vec<(u32, u32)>> =
                enumerate_kangulations(n, k).unwrap().into_iter().map(|d| d.chords).collect();
            let set: HashSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len());
            assert_eq!(set, brute_force(n, k), "n={n} k={k}");
        }
    }

    #[test]
    fn faces_of_a_fan() {
        let d = Dissection::new(6, vec![(0, 2), (0, 3), (0, 4)]).unwrap();
        let mut sizes: Vec<usize> = d.faces().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 3, 3]);
        assert!(d.is_kangulation(3));
        assert!(Dissection::new(6, vec![(0, 3), (1, 4)]).is_err());
        assert!(Dissection::new(6, vec![(0, 1)]).is_err());
    }

    #[test]
    fn action_laws() {
        let all = enumerate_kangulations(11, 5).unwrap();
        let group = DihedralElement::elements(11);
        let r = DihedralElement::r(11);
        for d in &all {
            assert_eq!(&d.act(&DihedralElement::identity(11)).unwrap(), d);
            let mut x = d.clone();
            for _ in 0..11 {
                x = x.act(&r).unwrap();
                assert!(x.is_kangulation(5));
            }
            assert_eq!(&x, d);
            for g in group.iter().step_by(3) {
                if g.reflected {
                    assert_eq!(&d.act(g).unwrap().act(g).unwrap(), d);
                }
                for h in group.iter().step_by(5) {
                    assert_eq!(d.act(&g.compose(h)).unwrap(), d.act(h).unwrap().act(g).unwrap());
                }
            }
        }
        assert!(all[0].act(&DihedralElement::r(9)).is_err());
    }

    #[test]
    fn fixed_count_examples() {
        assert_eq!(fixed_count(9, 3, &DihedralElement::s(9)).unwrap(), BigInt::from(5));
        assert_eq!(fixed_count(9, 3, &DihedralElement::reflection(9, 4)).unwrap(), BigInt::from(5));
        assert_eq!(fixed_count(9, 3, &DihedralElement::rotation(9, 3)).unwrap(), BigInt::from(6));
        assert_eq!(fixed_count(11, 5, &DihedralElement::s(11)).unwrap(), BigInt::from(2));
    }

    #[test]
    fn census_properties() {
        for (n, k) in [(5u32, 5u32), (5, 3), (7, 3), (9, 3), (8, 3), (11, 5), (10, 4), (11, 3)] {
            let rows = dihedral_census(n, k).unwrap();
            assert_eq!(rows.len(), 2 * n as usize);
            let total = BigInt::from(enumerate_kangulations(n, k).unwrap().len());
            assert_eq!(rows[0].fixed_count, total);
            let by_element: HashMap<DihedralElement, BigInt> =
                rows.iter().map(|r| (r.element(n), r.fixed_count.clone())).collect();
            for class in DihedralElement::conjugacy_classes(n) {
                let first = &by_element[&class[0]];
                assert!(class.iter().all(|g| &by_element[g] == first), "n={n} k={k}");
            }
            // Burnside: orbit count is integral and agrees with a direct
            // orbit enumeration.
            let sum: BigInt = rows.iter().map(|r| r.fixed_count.clone()).sum();
            assert_eq!(&sum % (2 * n), BigInt::from(0));
            let all = enumerate_kangulations(n, k).unwrap();
            let mut seen = HashSet::new();
            let mut orbits = 0;
            for d in &all {
                if seen.contains(d) {
                    continue;
                }
                orbits += 1;
                for g in DihedralElement::elements(n) {
                    seen.insert(d.act(&g).unwrap());
                }
            }
            assert_eq!(sum / (2 * n), BigInt::from(orbits));
        }
        assert!(dihedral_census(5, 5).unwrap().iter().all(|r| r.fixed_count == BigInt::from(1)));
    }

    #[test]
    fn closed_forms_match_brute_force() {
        for (n, k) in [(5u32, 3u32), (7, 3), (9, 3), (11, 3), (13, 3), (11, 5), (17, 5), (5, 5), (7, 7), (17, 7), (9, 9)] {
            let rows = dihedral_census(n, k).unwrap();
            for r in &rows {
                let g = r.element(n);
                let formula = if g.reflected {
                    reflection_fixed_closed_form(n, k).unwrap()
                } else if g.shift == 0 {
                    continue;
                } else {
                    rotation_fixed_closed_form(n, k, g.order()).unwrap()
                };
                assert_eq!(r.fixed_count, formula, "n={n} k={k} g={g}");
            }
        }
    }

    #[test]
    fn census_csv() {
        let rows = dihedral_census(5, 5).unwrap();
        let mut buf = Vec::new();
        write_census_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "shift,reflected,fixed_count");
        assert_eq!(lines[1], "0,false,1");
        assert_eq!(lines.len(), 11);
    }
}
