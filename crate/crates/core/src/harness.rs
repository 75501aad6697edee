//! Verification suites and their machine-readable reports.
//!
//! Every suite returns a list of [`CheckResult`]s in a deterministic order.
//! A check compares a count obtained by enumeration (`lhs`) with the value
//! predicted by a polynomial or closed form (`rhs`); it passes exactly when
//! the two integers agree, and a failing check always carries a witness.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::dissect::{
    dihedral_census, enumerate_bd_facets, reflection_fixed_closed_form, rotation_fixed_closed_form,
    tau_fixed_count_bd, tau_fixed_count_bd_with, DihedralElement, FlavorRule, PolygonType, Sign,
};
use crate::dyck::{cells_above_diagonal, rational_qt_catalan, signed_staircase};
use crate::error::{domain, Result, SieveError};
use crate::polyqt::{eval_at_roots, BivariatePolynomial, CyclotomicValue};
use crate::posets::{
    double_triangle_poset, is_isomorphic, line_poset, root_poset, root_poset_i2, signed_ideal_sum, trapezoid_poset,
    Poset,
};
use crate::raney::{enumerate_coral, raney};
use crate::roots::{build_i2_complex, build_root_system, ClusterComplex, Epsilon, Family};
use crate::symfunc::{
    chi_b, cycle_types, dihedral_permutation, fixed_multisubsets, fixed_subsets, h_k_eval, p_k_eval, perm_eigenvalues,
    plethystic_h_eval, qt_binomial_at,
};
use crate::util::{binomial, divisors, serialize_bigint};

/// Seed used by [`verify_algebra`] when `SIEVELAB_SEED` is unset.
pub const DEFAULT_SEED: u64 = 0x5EED_2024;

pub type Params = BTreeMap<String, Value>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub family: String,
    pub params: Params,
    #[serde(serialize_with = "serialize_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub rhs: BigInt,
    pub status: Status,
    pub witness: Option<Value>,
}

impl CheckResult {
    /// Compares `lhs` with `rhs`. A failure gets a witness holding both
    /// sides, the parameters and their difference.
    pub fn compare(check_id: impl Into<String>, family: &str, params: Params, lhs: BigInt, rhs: BigInt) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        let witness = (status == Status::Fail).then(|| {
            json!({
                "params": params,
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
                "difference": (&lhs - &rhs).to_string(),
            })
        });
        Self { check_id: check_id.into(), family: family.to_string(), params, lhs, rhs, status, witness }
    }

    /// Adds fields to the witness of a failing check. `extra` is only
    /// evaluated on failure.
    pub fn explain(mut self, extra: impl FnOnce() -> Value) -> Self {
        if let Some(Value::Object(w)) = self.witness.as_mut() {
            if let Value::Object(more) = extra() {
                w.extend(more);
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

pub fn summarize(results: &[CheckResult]) -> Summary {
    let passed = results.iter().filter(|r| r.passed()).count();
    Summary { total: results.len(), passed, failed: results.len() - passed }
}

pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::passed)
}

macro_rules! params {
    ($($key:literal => $value:expr),* $(,)?) => {{
        let mut p = Params::new();
        $( p.insert($key.to_string(), json!($value)); )*
        p
    }};
}

fn to_integer(v: &CyclotomicValue, what: impl FnOnce() -> String) -> Result<BigInt> {
    v.as_integer()
        .map_err(|_| SieveError::Internal(format!("{} evaluates to {v}, which is not an integer", what())))
}

fn sign_of(negative: bool) -> BigInt {
    BigInt::from(if negative { -1 } else { 1 })
}

// ---------------------------------------------------------------------------
// k-angulations and rational Catalan numbers

/// Dihedral sieving of the `(s+2)`-angulations of the `(sm+2)`-gon by
/// `Cat_{sm+1,m}(q,t)`, one check per conjugacy class, followed by the
/// closed forms for the reflection class and for a rotation of each order
/// `d >= 2`.
pub fn verify_type_a(s: u32, m: u32) -> Result<Vec<CheckResult>> {
    if s.is_multiple_of(2) || m.is_multiple_of(2) {
        return domain(format!("type A sieving needs odd s and m, got s={s}, m={m}"));
    }
    let (n, k) = (s * m + 2, s + 2);
    let census = dihedral_census(n, k)?;
    let fixed = |g: &DihedralElement| {
        census
            .iter()
            .find(|row| row.shift == g.shift && row.reflected == g.reflected)
            .map(|row| row.fixed_count.clone())
            .expect("census lists every element")
    };
    let catalan = rational_qt_catalan(s * m + 1, m)?;
    let box_parity = cells_above_diagonal(s * m + 1, m).cell_count() % 2 == 1;

    let mut out = Vec::new();
    for class in DihedralElement::conjugacy_classes(n) {
        let g = class[0];
        let (d, a, b) = g.eigen_exponents();
        let rhs = to_integer(&eval_at_roots(&catalan, d, a, b)?, || format!("Cat at the eigenvalues of {g}"))?;
        let lhs = fixed(&g);
        let params = params! {
            "s" => s, "m" => m, "n" => n, "k" => k,
            "element" => g.to_string(), "class_size" => class.len(),
        };
        let check = CheckResult::compare(format!("type-a/s={s}/m={m}/class/{g}"), "type-a", params, lhs, rhs.clone());
        out.push(check.explain(|| {
            let mut w = json!({ "class": class.iter().map(ToString::to_string).collect::<Vec<_>>() });
            if g.reflected {
                // (-1)^(boxes above the diagonal - area), the complementary statistic.
                w["signed_coarea_census"] = json!((sign_of(box_parity) * &rhs).to_string());
            }
            w
        }));
    }

    if n % 2 == 1 {
        let g = DihedralElement::s(n);
        let params = params! { "s" => s, "m" => m, "n" => n, "k" => k, "element" => g.to_string() };
        out.push(CheckResult::compare(
            format!("type-a/s={s}/m={m}/closed-form/reflection"),
            "type-a",
            params,
            fixed(&g),
            reflection_fixed_closed_form(n, k)?,
        ));
        for d in divisors(n as u64).into_iter().filter(|&d| d >= 2) {
            let d = d as u32;
            let g = DihedralElement::rotation(n, (n / d) as i64);
            let params = params! { "s" => s, "m" => m, "n" => n, "k" => k, "d" => d, "element" => g.to_string() };
            out.push(CheckResult::compare(
                format!("type-a/s={s}/m={m}/closed-form/rotation/d={d}"),
                "type-a",
                params,
                fixed(&g),
                rotation_fixed_closed_form(n, k, d)?,
            ));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Cluster complexes

/// Cyclic census of `R` against `Cat(Phi, q)`, then the two `tau`
/// reflections against the absolute signed ideal sum of the root poset.
pub fn verify_cluster(family: Family, rank: usize) -> Result<Vec<CheckResult>> {
    let rs = build_root_system(family, rank)?;
    let cc = ClusterComplex::from_root_system(&rs)?;
    cluster_checks(&cc, &root_poset(&rs))
}

/// The same checks for the noncrystallographic `I_2(m)`.
pub fn verify_i2(m: u32) -> Result<Vec<CheckResult>> {
    cluster_checks(&build_i2_complex(m)?, &root_poset_i2(m)?)
}

fn cluster_checks(cc: &ClusterComplex, poset: &Poset) -> Result<Vec<CheckResult>> {
    let label = cc.label.clone();
    let census = cc.cyclic_census();
    let mut out = Vec::new();
    for row in &census.rows {
        let rhs = row.predicted.clone().ok_or_else(|| {
            SieveError::Internal(format!(
                "Cat({label}, q) at zeta_{}^{} is {}, not an integer",
                census.modulus, row.power, row.predicted_text
            ))
        })?;
        let params = params! {
            "type" => label, "power" => row.power, "modulus" => census.modulus, "order_of_r" => census.order,
        };
        out.push(CheckResult::compare(
            format!("cluster/{label}/census/l={}", row.power),
            "cluster",
            params,
            row.fixed.clone(),
            rhs,
        ));
    }

    let facets = cc.enumerate_facets();
    let signed = signed_ideal_sum(poset);
    let counts: Vec<BigInt> = [Epsilon::Plus, Epsilon::Minus]
        .iter()
        .map(|&eps| cc.fixed_facets_in(&facets, cc.tau_permutation(eps)))
        .collect();
    for (i, eps) in ["plus", "minus"].iter().enumerate() {
        let params = params! {
            "type" => label, "epsilon" => eps, "order_of_r" => census.order,
            "order_of_r_is_odd" => census.odd_order, "facets" => facets.len(),
        };
        let check = CheckResult::compare(
            format!("cluster/{label}/reflection/{eps}"),
            "cluster",
            params,
            counts[i].clone(),
            signed.abs(),
        );
        out.push(check.explain(|| {
            json!({
                "signed_ideal_sum": signed.to_string(),
                "fixed_by_other_reflection": counts[1 - i].to_string(),
                "order_of_r_is_odd": census.odd_order,
            })
        }));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Polygon models of types B and D, and posets

/// Facet counts of the polygon models for `B_2..B_nmax` and `D_3..D_nmax`,
/// and the vanishing of `tau`-fixed facets for even `B_n` and odd `D_n`.
pub fn verify_polygon_models(nmax: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 2..=nmax {
        let count = BigInt::from(enumerate_bd_facets(PolygonType::B, n)?.len());
        out.push(CheckResult::compare(
            format!("polygon/B{n}/facets"),
            "polygon",
            params! { "type" => "B", "n" => n },
            count,
            binomial(2 * n as i64, n as i64),
        ));
    }
    for n in 3..=nmax {
        let count = BigInt::from(enumerate_bd_facets(PolygonType::D, n)?.len());
        // (3n - 2) / n * C(2n - 2, n - 1)
        let formula = binomial(2 * n as i64 - 2, n as i64 - 1) * BigInt::from(3 * n - 2) / BigInt::from(n);
        out.push(CheckResult::compare(
            format!("polygon/D{n}/facets"),
            "polygon",
            params! { "type" => "D", "n" => n },
            count,
            formula,
        ));
    }
    let vanishing = (2..=nmax)
        .filter(|n| n % 2 == 0)
        .map(|n| (PolygonType::B, n))
        .chain((3..=nmax).filter(|n| n % 2 == 1).map(|n| (PolygonType::D, n)));
    for (kind, n) in vanishing {
        let family = match kind {
            PolygonType::B => Family::B,
            PolygonType::D => Family::D,
        };
        for (eps, name) in [(Sign::Plus, "plus"), (Sign::Minus, "minus")] {
            let lhs = tau_fixed_count_bd(kind, n, eps)?;
            let check = CheckResult::compare(
                format!("polygon/{kind:?}{n}/tau-fixed/{name}"),
                "polygon",
                params! { "type" => format!("{kind:?}"), "n" => n, "epsilon" => name },
                lhs,
                BigInt::zero(),
            );
            out.push(check.explain(|| {
                let all_reversed = tau_fixed_count_bd_with(kind, n, eps, FlavorRule::AllReversed)
                    .map(|c| c.to_string())
                    .unwrap_or_default();
                let root_model = build_root_system(family, n as usize)
                    .and_then(|rs| ClusterComplex::from_root_system(&rs))
                    .map(|cc| {
                        let mut v: Vec<String> = [Epsilon::Plus, Epsilon::Minus]
                            .iter()
                            .map(|&e| cc.fixed_facets(e).to_string())
                            .collect();
                        v.sort();
                        v
                    })
                    .unwrap_or_default();
                json!({
                    "fixed_when_both_reflections_swap_flavors": all_reversed,
                    "root_model_fixed_counts": root_model,
                })
            }));
        }
    }
    Ok(out)
}

/// Signed ideal sums of trapezoids `T_1..T_nmax` and double triangles
/// `2..nmax` (expected 0) and of line posets of odd size up to `line_max`
/// (expected -1), then the root poset isomorphisms `B_n = T_n` for
/// `2 <= n <= bd_max` and `D_n` = double triangle for `4 <= n <= bd_max`.
/// Isomorphism checks report 1 for isomorphic and 0 otherwise.
pub fn verify_posets(nmax: u32, line_max: u32, bd_max: u32) -> Result<Vec<CheckResult>> {
    type Job = Box<dyn Fn() -> Result<(BigInt, BigInt)> + Send + Sync>;
    let mut jobs: Vec<(String, Params, Job)> = Vec::new();
    for n in 1..=nmax {
        jobs.push((
            format!("posets/trapezoid/n={n}"),
            params! { "poset" => "trapezoid", "n" => n },
            Box::new(move || Ok((signed_ideal_sum(&trapezoid_poset(n)?), BigInt::zero()))),
        ));
    }
    for n in 2..=nmax {
        jobs.push((
            format!("posets/double-triangle/n={n}"),
            params! { "poset" => "double-triangle", "n" => n },
            Box::new(move || Ok((signed_ideal_sum(&double_triangle_poset(n)?), BigInt::zero()))),
        ));
    }
    for n in (3..=line_max).step_by(2) {
        jobs.push((
            format!("posets/line/n={n}"),
            params! { "poset" => "line", "n" => n },
            Box::new(move || Ok((signed_ideal_sum(&line_poset(n)?), BigInt::from(-1)))),
        ));
    }
    let indicator = |b: bool| BigInt::from(b as u8);
    for n in 2..=bd_max {
        jobs.push((
            format!("posets/isomorphism/B{n}-trapezoid"),
            params! { "root_poset" => format!("B{n}"), "model" => "trapezoid", "n" => n },
            Box::new(move || {
                let rp = root_poset(&build_root_system(Family::B, n as usize)?);
                Ok((indicator(is_isomorphic(&rp, &trapezoid_poset(n)?)), BigInt::from(1)))
            }),
        ));
    }
    for n in 4..=bd_max {
        jobs.push((
            format!("posets/isomorphism/D{n}-double-triangle"),
            params! { "root_poset" => format!("D{n}"), "model" => "double-triangle", "n" => n },
            Box::new(move || {
                let rp = root_poset(&build_root_system(Family::D, n as usize)?);
                Ok((indicator(is_isomorphic(&rp, &double_triangle_poset(n)?)), BigInt::from(1)))
            }),
        ));
    }
    jobs.par_iter()
        .map(|(id, params, job)| {
            let (lhs, rhs) = job()?;
            Ok(CheckResult::compare(id.clone(), "posets", params.clone(), lhs, rhs))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Symmetric functions

/// `h_k` and `p_k` at the eigenvalues of every cycle type of `S_n`, against
/// fixed multisets and fixed subsets, for `0 <= k <= n`.
pub fn verify_symmetric(n: u32) -> Result<Vec<CheckResult>> {
    if n == 0 {
        return domain("verify_symmetric needs n >= 1");
    }
    let per_type: Vec<Vec<CheckResult>> = cycle_types(n)
        .par_iter()
        .map(|ct| {
            let ev = perm_eigenvalues(ct);
            let perm = ct.representative();
            let mut rows = Vec::new();
            for k in 0..=n {
                let params = params! { "n" => n, "cycle_type" => ct.to_string(), "k" => k };
                rows.push(CheckResult::compare(
                    format!("symmetric/n={n}/{ct}/h/k={k}"),
                    "symmetric",
                    params.clone(),
                    fixed_multisubsets(&perm, k as usize),
                    h_k_eval(k, &ev)?,
                ));
                let check = CheckResult::compare(
                    format!("symmetric/n={n}/{ct}/p/k={k}"),
                    "symmetric",
                    params,
                    fixed_subsets(&perm, k as usize),
                    p_k_eval(k, &ev)?,
                );
                rows.push(check.explain(|| json!({ "permutation": perm })));
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(per_type.into_iter().flatten().collect())
}

/// Plethystic `h_k` of `<n>_{q,t,b}` at every element of `I_2(n)` against
/// fixed `k`-multisubsets of the vertices, for `k <= min(kmax, n)`.
pub fn verify_even_dihedral(n: u32, kmax: u32) -> Result<Vec<CheckResult>> {
    if n == 0 || n % 2 == 1 {
        return domain(format!("even dihedral sieving needs even n >= 2, got {n}"));
    }
    let per_element: Vec<Vec<CheckResult>> = DihedralElement::elements(n)
        .par_iter()
        .map(|g| {
            let perm = dihedral_permutation(g);
            (0..=kmax.min(n))
                .map(|k| {
                    let params = params! { "n" => n, "k" => k, "element" => g.to_string(), "chi_b" => chi_b(g) };
                    Ok(CheckResult::compare(
                        format!("even-dihedral/n={n}/{g}/k={k}"),
                        "even-dihedral",
                        params,
                        fixed_multisubsets(&perm, k as usize),
                        plethystic_h_eval(k, g)?,
                    ))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(per_element.into_iter().flatten().collect())
}

/// For odd `n`: `[n choose k]_{q,t}` against fixed `k`-subsets and
/// `[n+k-1 choose k]_{q,t}` against fixed `k`-multisubsets, at every element
/// of `I_2(n)` and `0 <= k <= n`.
pub fn verify_rao_suk(n: u32) -> Result<Vec<CheckResult>> {
    if n.is_multiple_of(2) {
        return domain(format!("verify_rao_suk needs odd n, got {n}"));
    }
    let per_element: Vec<Vec<CheckResult>> = DihedralElement::elements(n)
        .par_iter()
        .map(|g| {
            let perm = dihedral_permutation(g);
            let mut rows = Vec::new();
            for k in 0..=n {
                let params = params! { "n" => n, "k" => k, "element" => g.to_string() };
                rows.push(CheckResult::compare(
                    format!("rao-suk/n={n}/{g}/subsets/k={k}"),
                    "rao-suk",
                    params.clone(),
                    fixed_subsets(&perm, k as usize),
                    qt_binomial_at(n, k, g)?,
                ));
                rows.push(CheckResult::compare(
                    format!("rao-suk/n={n}/{g}/multisubsets/k={k}"),
                    "rao-suk",
                    params,
                    fixed_multisubsets(&perm, k as usize),
                    qt_binomial_at(n + k - 1, k, g)?,
                ));
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(per_element.into_iter().flatten().collect())
}

// ---------------------------------------------------------------------------
// Raney numbers

/// Raney checks:
/// - `fuss`: `R_{p,1}(k) = sum_{i<k} R_{p,1}(i) R_{p,p-1}(k-1-i)`, `k >= 1`;
/// - `root`: `R_{p,r}(k) = sum_{i<=k} R_{p,r}(i) R_{p,r-1}(k-i)`, `r >= 2`;
/// - `peel`: `R_{p,r}(k) = sum_{i<=k} R_{p,1}(i) R_{p,r-1}(k-i)`, `r >= 2`;
/// - `coral`: number of coral diagrams against the closed form, for
///   `2 <= p <= min(pmax, 4)`, `r <= min(rmax, 4)`, `k <= min(kmax, 5)`.
pub fn verify_raney(pmax: u32, rmax: u32, kmax: u32) -> Result<Vec<CheckResult>> {
    if pmax == 0 || rmax == 0 {
        return domain("verify_raney needs pmax, rmax >= 1");
    }
    let mut out = Vec::new();
    for p in 1..=pmax {
        for k in 1..=kmax {
            let mut rhs = BigInt::zero();
            for i in 0..k {
                rhs += raney(p, 1, i)? * raney(p, p - 1, k - 1 - i)?;
            }
            out.push(CheckResult::compare(
                format!("raney/fuss/p={p}/k={k}"),
                "raney",
                params! { "recurrence" => "fuss", "p" => p, "k" => k },
                raney(p, 1, k)?,
                rhs,
            ));
        }
    }
    for (name, first_r) in [("root", None), ("peel", Some(1u32))] {
        for p in 1..=pmax {
            for r in 2..=rmax {
                for k in 0..=kmax {
                    let mut rhs = BigInt::zero();
                    for i in 0..=k {
                        rhs += raney(p, first_r.unwrap_or(r), i)? * raney(p, r - 1, k - i)?;
                    }
                    out.push(CheckResult::compare(
                        format!("raney/{name}/p={p}/r={r}/k={k}"),
                        "raney",
                        params! { "recurrence" => name, "p" => p, "r" => r, "k" => k },
                        raney(p, r, k)?,
                        rhs,
                    ));
                }
            }
        }
    }
    let grid: Vec<(u32, u32, u32)> = (2..=pmax.min(4))
        .flat_map(|p| (1..=rmax.min(4)).flat_map(move |r| (0..=kmax.min(5)).map(move |k| (p, r, k))))
        .collect();
    let coral: Vec<CheckResult> = grid
        .par_iter()
        .map(|&(p, r, k)| {
            Ok(CheckResult::compare(
                format!("raney/coral/p={p}/r={r}/k={k}"),
                "raney",
                params! { "recurrence" => "coral", "p" => p, "r" => r, "k" => k },
                BigInt::from(enumerate_coral(p, r, k)?.len()),
                raney(p, r, k)?,
            ))
        })
        .collect::<Result<_>>()?;
    out.extend(coral);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Signed staircase counts

/// `D_s(0, m) = R_{s+1,(s+1)/2}((m-1)/2)` and `D_s(0, m) = D_s(s, m-1)` for
/// the given odd `s` and odd `m <= m_max`.
pub fn dyck_parity_checks(s_values: &[u32], m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &s in s_values {
        for m in (1..=m_max).step_by(2) {
            let d = signed_staircase(s, 0, m);
            let r = raney(s + 1, s.div_ceil(2), (m - 1) / 2).expect("s + 1 >= 2");
            let check = CheckResult::compare(
                format!("dyck/parity/s={s}/m={m}"),
                "dyck",
                params! { "law" => "parity", "s" => s, "m" => m },
                d.clone(),
                r,
            );
            out.push(check.explain(|| json!({ "sign_of_lhs": d.signum().to_string() })));
            out.push(CheckResult::compare(
                format!("dyck/shift/s={s}/m={m}"),
                "dyck",
                params! { "law" => "shift", "s" => s, "m" => m },
                d,
                signed_staircase(s, s, m - 1),
            ));
        }
    }
    out
}

/// `D_s(l, m) = 0` for odd `l <= l_max` and odd `m <= m_max`.
pub fn dyck_vanishing_checks(s_values: &[u32], l_max: u32, m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &s in s_values {
        for l in (1..=l_max).step_by(2) {
            for m in (1..=m_max).step_by(2) {
                out.push(CheckResult::compare(
                    format!("dyck/vanishing/s={s}/l={l}/m={m}"),
                    "dyck",
                    params! { "law" => "vanishing", "s" => s, "l" => l, "m" => m },
                    signed_staircase(s, l, m),
                    BigInt::zero(),
                ));
            }
        }
    }
    out
}

/// `D_s(l, m) = R_{s+1,(l+1)/2}(m/2)` for odd `l <= l_max` and even
/// `m <= m_max`.
pub fn dyck_raney_checks(s_values: &[u32], l_max: u32, m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &s in s_values {
        for l in (1..=l_max).step_by(2) {
            for m in (0..=m_max).step_by(2) {
                let r = raney(s + 1, l.div_ceil(2), m / 2).expect("s + 1 >= 2");
                let check = CheckResult::compare(
                    format!("dyck/raney/s={s}/l={l}/m={m}"),
                    "dyck",
                    params! { "law" => "raney", "s" => s, "l" => l, "m" => m },
                    signed_staircase(s, l, m),
                    r.clone(),
                );
                out.push(check.explain(|| json!({ "sign_corrected_rhs": (sign_of((m / 2) % 2 == 1) * &r).to_string() })));
            }
        }
    }
    out
}

/// The two recurrences
/// `D_s(1, m) = sum_{y=0}^{m-2} (-1)^{y+1} D_s(1, y) D_s(2s-1, m-y-2)` for
/// `1 <= m <= m_max`, and
/// `D_s(l, m) = sum_{y=0}^{m} (-1)^{(m+1)y} D_s(l-2, y) D_s(1, m-y)` for odd
/// `3 <= l <= l_max` and `m <= m_max`.
pub fn dyck_recurrence_checks(s_values: &[u32], l_max: u32, m_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &s in s_values {
        for m in 1..=m_max {
            let rhs: BigInt = (0..m.saturating_sub(1))
                .map(|y| sign_of(y % 2 == 0) * signed_staircase(s, 1, y) * signed_staircase(s, 2 * s - 1, m - y - 2))
                .sum();
            out.push(CheckResult::compare(
                format!("dyck/recurrence-1/s={s}/m={m}"),
                "dyck",
                params! { "law" => "recurrence-1", "s" => s, "m" => m },
                signed_staircase(s, 1, m),
                rhs,
            ));
        }
        for l in (3..=l_max).step_by(2) {
            for m in 0..=m_max {
                let rhs: BigInt = (0..=m)
                    .map(|y| sign_of((m + 1) * y % 2 == 1) * signed_staircase(s, l - 2, y) * signed_staircase(s, 1, m - y))
                    .sum();
                out.push(CheckResult::compare(
                    format!("dyck/recurrence-2/s={s}/l={l}/m={m}"),
                    "dyck",
                    params! { "law" => "recurrence-2", "s" => s, "l" => l, "m" => m },
                    signed_staircase(s, l, m),
                    rhs,
                ));
            }
        }
    }
    out
}

/// Every signed staircase law for odd `s <= smax`, `l <= 7` and
/// `m <= mmax`.
pub fn verify_dyck(smax: u32, mmax: u32) -> Result<Vec<CheckResult>> {
    if smax == 0 || mmax == 0 {
        return domain("verify_dyck needs smax, mmax >= 1");
    }
    let s_values: Vec<u32> = (1..=smax).step_by(2).collect();
    let mut out = dyck_parity_checks(&s_values, mmax);
    out.extend(dyck_vanishing_checks(&s_values, 7, mmax));
    out.extend(dyck_raney_checks(&s_values, 7, mmax));
    out.extend(dyck_recurrence_checks(&s_values, 7, mmax));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Randomized algebra checks

/// Seed from `SIEVELAB_SEED`, or [`DEFAULT_SEED`] when unset.
pub fn seed_from_env() -> Result<u64> {
    match std::env::var("SIEVELAB_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| SieveError::Domain(format!("SIEVELAB_SEED must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn random_poly(rng: &mut ChaCha8Rng) -> BivariatePolynomial {
    let terms: Vec<((u32, u32), BigInt)> = (0..rng.gen_range(1..=6))
        .map(|_| ((rng.gen_range(0..=4), rng.gen_range(0..=4)), BigInt::from(rng.gen_range(-5i64..=5))))
        .collect();
    BivariatePolynomial::from_terms(terms)
}

fn cyclotomic_mismatches(x: &CyclotomicValue, y: &CyclotomicValue) -> usize {
    let (a, b) = (x.coeffs(), y.coeffs());
    let zero = BigInt::zero();
    (0..a.len().max(b.len())).filter(|&i| a.get(i).unwrap_or(&zero) != b.get(i).unwrap_or(&zero)).count()
}

fn poly_mismatches(x: &BivariatePolynomial, y: &BivariatePolynomial) -> usize {
    let keys: BTreeSet<(u32, u32)> = x.terms().chain(y.terms()).map(|(&k, _)| k).collect();
    keys.into_iter().filter(|&(i, j)| x.coefficient(i, j) != y.coefficient(i, j)).count()
}

/// Random checks that evaluation at roots of unity is a ring homomorphism,
/// that multiplication is associative, and that exact division undoes
/// multiplication. Each check compares the number of coordinates where the
/// two sides differ (`lhs`) with 0.
pub fn verify_algebra(seed: u64, trials: u32) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for trial in 0..trials {
        let (p, q, r) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        let d: u32 = rng.gen_range(1..=12);
        let (a, b) = (rng.gen_range(0..d as i64), rng.gen_range(0..d as i64));
        let at = |x: &BivariatePolynomial| eval_at_roots(x, d, a, b);
        let witness = || json!({ "p": p.to_string(), "q": q.to_string(), "r": r.to_string() });
        let base = params! { "seed" => seed, "trial" => trial, "d" => d, "a" => a, "b" => b };
        let mut push = |name: &str, mismatches: usize| {
            let mut params = base.clone();
            params.insert("law".into(), json!(name));
            out.push(
                CheckResult::compare(
                    format!("algebra/{name}/trial={trial}"),
                    "algebra",
                    params,
                    BigInt::from(mismatches),
                    BigInt::zero(),
                )
                .explain(witness),
            );
        };
        push("eval-add", cyclotomic_mismatches(&at(&(&p + &q))?, &(&at(&p)? + &at(&q)?)));
        push("eval-mul", cyclotomic_mismatches(&at(&(&p * &q))?, &(&at(&p)? * &at(&q)?)));
        push("mul-assoc", poly_mismatches(&(&(&p * &q) * &r), &(&p * &(&q * &r))));
        if !q.is_zero() {
            push("div-exact", poly_mismatches(&(&p * &q).div_exact(&q)?, &p));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Reports

pub fn write_json<W: Write>(results: &[CheckResult], out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, results).map_err(|e| SieveError::Internal(format!("json output failed: {e}")))
}

/// CSV with one column per parameter name (prefixed `param.`), in sorted
/// order; the witness is stored as a JSON string.
pub fn write_csv<W: Write>(results: &[CheckResult], out: W) -> Result<()> {
    let io = |e: csv::Error| SieveError::Internal(format!("csv output failed: {e}"));
    let keys: BTreeSet<&String> = results.iter().flat_map(|r| r.params.keys()).collect();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["check_id".to_string(), "family".to_string()];
    header.extend(keys.iter().map(|k| format!("param.{k}")));
    header.extend(["lhs", "rhs", "status", "witness"].map(String::from));
    w.write_record(&header).map_err(io)?;
    for r in results {
        let mut rec = vec![r.check_id.clone(), r.family.clone()];
        rec.extend(keys.iter().map(|k| match r.params.get(*k) {
            None => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        }));
        rec.push(r.lhs.to_string());
        rec.push(r.rhs.to_string());
        rec.push(if r.passed() { "pass" } else { "fail" }.to_string());
        rec.push(r.witness.as_ref().map(Value::to_string).unwrap_or_default());
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| SieveError::Internal(format!("csv output failed: {e}")))
}

/// Failing checks as `{check_id, witness}` objects.
pub fn failure_witnesses(results: &[CheckResult]) -> Vec<Value> {
    results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            let mut m = Map::new();
            m.insert("check_id".into(), json!(r.check_id));
            m.insert("witness".into(), r.witness.clone().unwrap_or(Value::Null));
            Value::Object(m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_id<'a>(rs: &'a [CheckResult], id: &str) -> &'a CheckResult {
        rs.iter().find(|r| r.check_id == id).unwrap_or_else(|| panic!("no check {id}"))
    }

    #[test]
    fn status_follows_equality() {
        let ok = CheckResult::compare("x", "f", Params::new(), BigInt::from(3), BigInt::from(3));
        assert!(ok.passed() && ok.witness.is_none());
        let bad = CheckResult::compare("x", "f", Params::new(), BigInt::from(3), BigInt::from(-3))
            .explain(|| json!({ "note": "sign" }));
        assert_eq!(bad.status, Status::Fail);
        let w = bad.witness.unwrap();
        assert_eq!(w["difference"], json!("6"));
        assert_eq!(w["note"], json!("sign"));
    }

    #[test]
    fn type_a_examples() {
        let rs = verify_type_a(1, 7).unwrap();
        let id = by_id(&rs, "type-a/s=1/m=7/class/r^0");
        assert_eq!((id.lhs.clone(), id.rhs.clone()), (BigInt::from(429), BigInt::from(429)));
        let refl = by_id(&rs, "type-a/s=1/m=7/class/s_0");
        assert_eq!(refl.lhs, BigInt::from(5));
        // The (1,-1) evaluation is the signed area census, -5 here.
        assert_eq!(refl.rhs, BigInt::from(-5));
        assert_eq!(refl.witness.as_ref().unwrap()["signed_coarea_census"], json!("5"));
        assert!(rs.iter().filter(|r| r.check_id.contains("closed-form")).all(CheckResult::passed));
        assert!(rs.iter().filter(|r| !r.check_id.contains("s_")).all(CheckResult::passed));
        assert!(verify_type_a(1, 5).unwrap().iter().all(CheckResult::passed));
        assert!(verify_type_a(2, 3).is_err());
    }

    #[test]
    fn cluster_examples() {
        let f4 = verify_cluster(Family::F, 4).unwrap();
        assert!(f4.iter().all(CheckResult::passed));
        assert_eq!(by_id(&f4, "cluster/F4/reflection/plus").lhs, BigInt::from(1));
        let e6 = verify_cluster(Family::E, 6).unwrap();
        assert!(e6.iter().all(CheckResult::passed));
        assert_eq!(by_id(&e6, "cluster/E6/reflection/minus").rhs, BigInt::from(5));
        assert!(verify_cluster(Family::A, 4).unwrap().iter().all(CheckResult::passed));
        assert!(verify_i2(5).unwrap().iter().all(CheckResult::passed));
        // B3 has R of even order; one reflection fixes two facets.
        let b3 = verify_cluster(Family::B, 3).unwrap();
        assert_eq!(b3.iter().filter(|r| !r.passed()).count(), 1);
    }

    #[test]
    fn sweeps() {
        let sym = verify_symmetric(5).unwrap();
        let failing: Vec<&str> = sym.iter().filter(|r| !r.passed()).map(|r| r.check_id.as_str()).collect();
        assert!(failing.iter().all(|id| id.ends_with("/p/k=0")), "{failing:?}");
        let dih = verify_even_dihedral(8, 8).unwrap();
        assert_eq!(dih.len(), 16 * 9);
        assert!(all_pass(&dih));
        assert!(all_pass(&verify_rao_suk(5).unwrap()));
        let raney_checks = verify_raney(4, 4, 6).unwrap();
        assert!(raney_checks.iter().filter(|r| r.params["recurrence"] != "root").all(CheckResult::passed));
        assert!(!by_id(&raney_checks, "raney/root/p=2/r=2/k=1").passed());
    }

    #[test]
    fn dyck_laws() {
        assert!(all_pass(&dyck_vanishing_checks(&[5, 7], 7, 5)));
        assert!(all_pass(&dyck_recurrence_checks(&[5, 7], 7, 6)));
        let parity = dyck_parity_checks(&[1, 3, 5], 7);
        let failing: BTreeSet<u64> =
            parity.iter().filter(|r| !r.passed()).map(|r| r.params["m"].as_u64().unwrap()).collect();
        assert_eq!(failing, BTreeSet::from([3, 7]));
    }

    #[test]
    fn polygon_and_posets() {
        let poly = verify_polygon_models(4).unwrap();
        assert!(poly.iter().filter(|r| r.check_id.ends_with("facets")).all(CheckResult::passed));
        assert!(by_id(&poly, "polygon/B2/tau-fixed/plus").passed());
        let d3 = by_id(&poly, "polygon/D3/tau-fixed/plus");
        assert_eq!(d3.lhs, BigInt::from(4));
        assert_eq!(d3.witness.as_ref().unwrap()["fixed_when_both_reflections_swap_flavors"], json!("0"));
        assert!(all_pass(&verify_posets(4, 9, 4).unwrap()));
    }

    #[test]
    fn algebra_is_deterministic() {
        let a = verify_algebra(7, 10).unwrap();
        assert!(all_pass(&a));
        assert_eq!(a, verify_algebra(7, 10).unwrap());
    }

    #[test]
    fn reports() {
        let rs = verify_raney(2, 2, 1).unwrap();
        let mut buf = Vec::new();
        write_json(&rs, &mut buf).unwrap();
        let parsed: Value = serde_json::from_slice(&buf).unwrap();
        let first = &parsed[0];
        for key in ["check_id", "family", "params", "lhs", "rhs", "status", "witness"] {
            assert!(first.get(key).is_some(), "{key}");
        }
        let mut csv_buf = Vec::new();
        write_csv(&rs, &mut csv_buf).unwrap();
        let text = String::from_utf8(csv_buf).unwrap();
        assert!(text.starts_with("check_id,family,param.k,param.p,param.r,param.recurrence,lhs,rhs,status,witness"));
        assert_eq!(text.lines().count(), rs.len() + 1);
        assert_eq!(failure_witnesses(&rs).len(), rs.iter().filter(|r| !r.passed()).count());
    }
}
