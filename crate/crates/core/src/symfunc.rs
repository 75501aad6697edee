//! Symmetric functions evaluated at permutation eigenvalues, the `q,t,b`
//! analogue of `n` for even dihedral groups, and brute-force fixed-point
//! counts for subsets and multisubsets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dissect::DihedralElement;
use crate::error::{domain, Result};
use crate::polyqt::{eval_at_roots, qt_binomial, CyclotomicValue};
use crate::util::gcd;

/// Cycle lengths of a permutation, sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut lengths: Vec<u32>) -> Result<Self> {
        if lengths.contains(&0) {
            return domain("cycle lengths must be positive");
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(lengths))
    }

    pub fn lengths(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Cycle type of a permutation of `0..perm.len()`.
    pub fn of_permutation(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut lengths = Vec::new();
        for start in 0..perm.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Self::new(lengths).expect("cycles are nonempty")
    }

    /// A permutation with this cycle type: consecutive blocks, each rotated.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.n() as usize);
        let mut start = 0;
        for &c in &self.0 {
            let c = c as usize;
            perm.extend((0..c).map(|i| start + (i + 1) % c));
            start += c;
        }
        perm
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Partitions of `n`, i.e. the cycle types of `S_n`, in reverse
/// lexicographic order.
pub fn cycle_types(n: u32) -> Vec<CycleType> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(CycleType(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `zeta_order^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootOfUnity {
    pub order: u32,
    pub exponent: u32,
}

impl RootOfUnity {
    /// The same root written over `zeta_big`, where `order` divides `big`.
    fn exponent_over(&self, big: u32) -> u64 {
        (self.exponent as u64 * (big / self.order) as u64) % big as u64
    }
}

/// Eigenvalues of a permutation matrix: a cycle of length `c` contributes
/// `zeta_c^j` for `j = 0..c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueMultiset {
    values: Vec<RootOfUnity>,
    lengths: Vec<u32>,
}

impl EigenvalueMultiset {
    pub fn values(&self) -> &[RootOfUnity] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `p_j = sum over cycles c with c | j of c`, an integer.
    pub fn power_sum(&self, j: u32) -> BigInt {
        if j == 0 {
            return BigInt::from(self.values.len());
        }
        self.lengths.iter().filter(|&&c| j.is_multiple_of(c)).map(|&c| BigInt::from(c)).sum()
    }

    /// All eigenvalues rewritten as exponents of one primitive root of order
    /// `lcm` of the cycle lengths, sorted.
    pub fn common_exponents(&self) -> (u32, Vec<u64>) {
        let big = self.lengths.iter().fold(1u64, |acc, &c| acc / gcd(acc, c as u64) * c as u64) as u32;
        let mut e: Vec<u64> = self.values.iter().map(|v| v.exponent_over(big)).collect();
        e.sort_unstable();
        (big, e)
    }
}

pub fn perm_eigenvalues(ct: &CycleType) -> EigenvalueMultiset {
    let values = ct
        .lengths()
        .iter()
        .flat_map(|&c| (0..c).map(move |j| RootOfUnity { order: c, exponent: j }))
        .collect();
    EigenvalueMultiset { values, lengths: ct.lengths().to_vec() }
}

/// `h_0..=h_k` from power sums `p_1..=p_k` by `i h_i = sum_j p_j h_{i-j}`.
fn complete_from_power_sums(p: &[CyclotomicValue], order: u32, k: usize) -> Result<Vec<CyclotomicValue>> {
    let mut h = vec![CyclotomicValue::constant(order, BigInt::one())];
    for i in 1..=k {
        let mut acc = CyclotomicValue::constant(order, BigInt::zero());
        for j in 1..=i {
            acc = &acc + &(&p[j - 1] * &h[i - j]);
        }
        h.push(acc.div_exact(&BigInt::from(i))?);
    }
    Ok(h)
}

/// `e_0..=e_k` from power sums by `i e_i = sum_j (-1)^{j-1} p_j e_{i-j}`.
fn elementary_from_power_sums(p: &[CyclotomicValue], order: u32, k: usize) -> Result<Vec<CyclotomicValue>> {
    let mut e = vec![CyclotomicValue::constant(order, BigInt::one())];
    for i in 1..=k {
        let mut acc = CyclotomicValue::constant(order, BigInt::zero());
        for j in 1..=i {
            let term = &p[j - 1] * &e[i - j];
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.div_exact(&BigInt::from(i))?);
    }
    Ok(e)
}

fn integer_power_sums(ev: &EigenvalueMultiset, k: usize) -> Vec<CyclotomicValue> {
    (1..=k as u32).map(|j| CyclotomicValue::constant(1, ev.power_sum(j))).collect()
}

fn to_integer(v: &CyclotomicValue) -> Result<BigInt> {
    v.as_integer()
}

/// `h_k` at the eigenvalues.
pub fn h_k_eval(k: u32, ev: &EigenvalueMultiset) -> Result<BigInt> {
    let p = integer_power_sums(ev, k as usize);
    to_integer(&complete_from_power_sums(&p, 1, k as usize)?[k as usize])
}

/// `e_k` at the eigenvalues.
pub fn e_k_eval(k: u32, ev: &EigenvalueMultiset) -> Result<BigInt> {
    let p = integer_power_sums(ev, k as usize);
    to_integer(&elementary_from_power_sums(&p, 1, k as usize)?[k as usize])
}

/// Schur function of the hook `(a, 1^{b-1})` at the eigenvalues, through
/// `s = sum_j (-1)^j h_{a+j} e_{b-1-j}`; zero when `a` or `b` is zero.
pub fn hook_schur_eval(a: u32, b: u32, ev: &EigenvalueMultiset) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Ok(BigInt::zero());
    }
    let top = (a + b) as usize;
    let p = integer_power_sums(ev, top);
    let h = complete_from_power_sums(&p, 1, top)?;
    let e = elementary_from_power_sums(&p, 1, top)?;
    hook_from(a, b, &h, &e)
}

fn hook_from(a: u32, b: u32, h: &[CyclotomicValue], e: &[CyclotomicValue]) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Ok(BigInt::zero());
    }
    let mut acc = BigInt::zero();
    for j in 0..b {
        let term = to_integer(&(&h[(a + j) as usize] * &e[(b - 1 - j) as usize]))?;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `p_k = sum_{j <= k/2} (-1)^j (s_{k-2j+1, j} + s_{k-2j, j+1})` at the
/// eigenvalues.
pub fn p_k_eval(k: u32, ev: &EigenvalueMultiset) -> Result<BigInt> {
    if k as usize > ev.len() {
        return domain(format!("p_k needs k <= n, got k={k}, n={}", ev.len()));
    }
    let top = (k + 2) as usize;
    let p = integer_power_sums(ev, top);
    let h = complete_from_power_sums(&p, 1, top)?;
    let e = elementary_from_power_sums(&p, 1, top)?;
    let mut acc = BigInt::zero();
    for j in 0..=k / 2 {
        let term = hook_from(k - 2 * j + 1, j, &h, &e)? + hook_from(k - 2 * j, j + 1, &h, &e)?;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Integer polynomial in `q`, `t`, `b`, keyed by exponent triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QTBPolynomial {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl QTBPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, q: u32, t: u32, b: u32, c: BigInt) {
        let slot = self.terms.entry((q, t, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(q, t, b));
        }
    }

    /// Adds `b^e {m}_{q,t}`.
    fn add_qt_analogue(&mut self, m: u32, e: u32) {
        for i in 0..m {
            self.add_term(i, m - 1 - i, e, BigInt::one());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_qt_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(q, t, b), c)| self.terms.get(&(t, q, b)) == Some(c))
    }

    /// Monomials listed with multiplicity; fails on a negative coefficient.
    pub fn monomials(&self) -> Result<Vec<(u32, u32, u32)>> {
        let mut out = Vec::new();
        for (&e, c) in &self.terms {
            let Ok(times) = usize::try_from(c) else {
                return domain("plethystic substitution needs nonnegative coefficients");
            };
            out.extend(std::iter::repeat_n(e, times));
        }
        Ok(out)
    }
}

impl fmt::Display for QTBPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&(q, t, b), c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            if !c.is_one() || (q, t, b) == (0, 0, 0) {
                factors.push(c.to_string());
            }
            for (name, e) in [("q", q), ("t", t), ("b", b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            parts.push(factors.join(" "));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn two_adic_valuation(n: u32) -> u32 {
    n.trailing_zeros()
}

/// `<n>_{q,t,b}`, by cases on the 2-adic valuation of `n`.
pub fn qtb_analogue(n: u32) -> Result<QTBPolynomial> {
    if n == 0 {
        return domain("qtb_analogue requires n >= 1");
    }
    let mut p = QTBPolynomial::zero();
    match two_adic_valuation(n) {
        0 => p.add_qt_analogue(n, 0),
        1 => {
            p.add_qt_analogue(n / 2, 0);
            p.add_qt_analogue(n / 2, 1);
        }
        2 => {
            p.add_qt_analogue(n / 2, 0);
            p.add_qt_analogue(n / 4, 1);
            p.add_qt_analogue(n / 4, 2);
        }
        _ => {
            p.add_qt_analogue(n / 2, 0);
            p.add_qt_analogue(n / 4 + 1, 1);
            p.add_qt_analogue(n / 4 - 1, 2);
        }
    }
    Ok(p)
}

/// The subgroup `<r^2, s>` of `I_2(n)`, by closure under composition.
pub fn even_subgroup(n: u32) -> BTreeSet<DihedralElement> {
    let gens = [DihedralElement::rotation(n, 2), DihedralElement::s(n)];
    let mut group = BTreeSet::from([DihedralElement::identity(n)]);
    let mut frontier = vec![DihedralElement::identity(n)];
    while let Some(g) = frontier.pop() {
        for h in &gens {
            let x = g.compose(h);
            if group.insert(x) {
                frontier.push(x);
            }
        }
    }
    group
}

/// `+1` on `<r^2, s>`, `-1` elsewhere.
pub fn chi_b(g: &DihedralElement) -> i32 {
    if even_subgroup(g.n).contains(g) {
        1
    } else {
        -1
    }
}

/// Values of the monomials of `<n>_{q,t,b}` at `q, t` = eigenvalues of the
/// defining representation of `g` and `b = chi_b(g)`, as exponents of a
/// primitive root of order `big`, sorted.
pub fn qtb_monomial_values(g: &DihedralElement) -> Result<(u32, Vec<u64>)> {
    let n = g.n;
    let (d, a, b) = g.eigen_exponents();
    let big = (d as u64 / gcd(d as u64, 2) * 2) as u32;
    let scale = (big / d) as i64;
    let sign_exp = if chi_b(g) == 1 { 0 } else { (big / 2) as i64 };
    let mut out: Vec<u64> = qtb_analogue(n)?
        .monomials()?
        .into_iter()
        .map(|(i, j, e)| {
            let x = (a * i as i64 + b * j as i64) * scale + sign_exp * e as i64;
            x.rem_euclid(big as i64) as u64
        })
        .collect();
    out.sort_unstable();
    Ok((big, out))
}

/// `h_k([<n>_{q,t,b}])` at `g`: power sums of the monomial values in
/// `Z[zeta]`, Newton's identities, then integer extraction.
pub fn plethystic_h_eval(k: u32, g: &DihedralElement) -> Result<BigInt> {
    if k > g.n {
        return domain(format!("plethystic_h_eval needs k <= n, got k={k}, n={}", g.n));
    }
    let (big, values) = qtb_monomial_values(g)?;
    let p: Vec<CyclotomicValue> = (1..=k as u64)
        .map(|j| {
            let mut buckets = vec![BigInt::zero(); big as usize];
            for &v in &values {
                buckets[(v * j % big as u64) as usize] += 1;
            }
            CyclotomicValue::from_power_coeffs(big, buckets)
        })
        .collect();
    complete_from_power_sums(&p, big, k as usize)?[k as usize].as_integer()
}

/// `g` as a permutation of `0..n`.
pub fn dihedral_permutation(g: &DihedralElement) -> Vec<usize> {
    (0..g.n).map(|v| g.apply(v) as usize).collect()
}

/// `qt_binomial(top, k)` at the eigenvalues of the defining representation
/// of `g`.
pub fn qt_binomial_at(top: u32, k: u32, g: &DihedralElement) -> Result<BigInt> {
    let (d, a, b) = g.eigen_exponents();
    eval_at_roots(&qt_binomial(top, k)?, d, a, b)?.as_integer()
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::with_capacity(k), f);
}

fn multisets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, f);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::with_capacity(k), f);
}

fn fixed_by(perm: &[usize], sorted: &[usize], scratch: &mut Vec<usize>) -> bool {
    scratch.clear();
    scratch.extend(sorted.iter().map(|&i| perm[i]));
    scratch.sort_unstable();
    scratch == sorted
}

/// Number of `k`-subsets of `0..n` mapped to themselves by `perm`, by
/// listing all of them.
pub fn fixed_subsets(perm: &[usize], k: usize) -> BigInt {
    let mut count = 0u64;
    let mut scratch = Vec::new();
    combinations(perm.len(), k, &mut |s| {
        if fixed_by(perm, s, &mut scratch) {
            count += 1;
        }
    });
    BigInt::from(count)
}

/// Number of `k`-multisubsets of `0..n` mapped to themselves by `perm`, by
/// listing all of them.
pub fn fixed_multisubsets(perm: &[usize], k: usize) -> BigInt {
    let mut count = 0u64;
    let mut scratch = Vec::new();
    multisets(perm.len(), k, &mut |s| {
        if fixed_by(perm, s, &mut scratch) {
            count += 1;
        }
    });
    BigInt::from(count)
}
