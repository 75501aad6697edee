use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::UniPoly;
use crate::error::{internal, Result, SieveError};
use crate::util::{divisors, mobius};

static CYCLOTOMIC_CACHE: OnceLock<RwLock<HashMap<u32, Arc<UniPoly>>>> = OnceLock::new();

/// `Phi_d`, computed by dividing `x^d - 1` by `Phi_e` for every proper
/// divisor `e` of `d`.
pub fn cyclotomic_polynomial(d: u32) -> Arc<UniPoly> {
    assert!(d >= 1, "cyclotomic polynomial of order 0");
    let cache = CYCLOTOMIC_CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("cache lock").get(&d) {
        return Arc::clone(p);
    }
    let mut p = UniPoly::x_pow_minus_one(d as usize);
    for e in divisors(d as u64) {
        if e as u32 == d {
            continue;
        }
        p = p
            .div_exact(&cyclotomic_polynomial(e as u32))
            .expect("cyclotomic factors divide x^d - 1");
    }
    let p = Arc::new(p);
    cache.write().expect("cache lock").insert(d, Arc::clone(&p));
    p
}

/// `Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}`, an independent route used to
/// cross-check [`cyclotomic_polynomial`].
pub fn cyclotomic_polynomial_mobius(d: u32) -> UniPoly {
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for e in divisors(d as u64) {
        match mobius(d as u64 / e) {
            1 => num = &num * &UniPoly::x_pow_minus_one(e as usize),
            -1 => den = &den * &UniPoly::x_pow_minus_one(e as usize),
            _ => {}
        }
    }
    num.div_exact(&den).expect("Mobius quotient is exact")
}

/// Element of `Z[zeta_d]` in the power basis `1, zeta, ..., zeta^{phi(d)-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicValue {
    /// Reduces `sum_i c_i x^i` modulo `Phi_d`.
    pub fn from_power_coeffs(d: u32, coeffs: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(d);
        let deg = phi.degree().expect("nonzero");
        let mut c = coeffs;
        if c.len() > deg {
            let pc = phi.coeffs();
            for i in (deg..c.len()).rev() {
                let lead = std::mem::take(&mut c[i]);
                if lead.is_zero() {
                    continue;
                }
                // Phi_d is monic.
                for j in 0..deg {
                    c[i - deg + j] -= &lead * &pc[j];
                }
            }
        }
        c.resize(deg, BigInt::zero());
        Self { order: d, coeffs: c }
    }

    pub fn constant(d: u32, c: BigInt) -> Self {
        Self::from_power_coeffs(d, vec![c])
    }

    /// `zeta_d^e`.
    pub fn root_power(d: u32, e: i64) -> Self {
        let mut c = vec![BigInt::zero(); d as usize];
        c[e.rem_euclid(d as i64) as usize] = BigInt::one();
        Self::from_power_coeffs(d, c)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn as_integer(&self) -> Result<BigInt> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Ok(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            Err(SieveError::NotRational {
                order: self.order,
                coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
            })
        }
    }

    /// Coordinatewise exact division by an integer.
    pub fn div_exact(&self, k: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return internal(format!("{self} is not divisible by {k}"));
            }
            out.push(q);
        }
        Ok(Self { order: self.order, coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.order, BigInt::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerical value with `zeta_d = exp(2 pi i / d)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let c: f64 = c.to_string().parse().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * k as f64 / self.order as f64;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixing cyclotomic orders");
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn add(self, rhs: Self) -> CyclotomicValue {
        self.check_order(rhs);
        CyclotomicValue {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn sub(self, rhs: Self) -> CyclotomicValue {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        CyclotomicValue {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn mul(self, rhs: Self) -> CyclotomicValue {
        self.check_order(rhs);
        let n = self.coeffs.len();
        let mut c = vec![BigInt::zero(); (2 * n).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        CyclotomicValue::from_power_coeffs(self.order, c)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c} z{}", self.order),
                _ => format!("{c} z{}^{k}", self.order),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::euler_phi;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), UniPoly::from_i64(&[1, 0, 1]));
        let p12 = cyclotomic_polynomial(12);
        assert_eq!(p12.degree(), Some(4));
        assert!(UniPoly::x_pow_minus_one(12).div_exact(&p12).is_ok());
    }

    #[test]
    fn recursive_matches_mobius() {
        for d in 1..=60 {
            let p = cyclotomic_polynomial(d);
            assert_eq!(*p, cyclotomic_polynomial_mobius(d), "d = {d}");
            assert!(p.is_monic());
            assert_eq!(p.degree(), Some(euler_phi(d as u64) as usize));
        }
    }

    #[test]
    fn divisor_product_reconstructs() {
        for d in 1..=30u32 {
            let prod = divisors(d as u64)
                .into_iter()
                .fold(UniPoly::one(), |acc, e| &acc * &cyclotomic_polynomial(e as u32));
            assert_eq!(prod, UniPoly::x_pow_minus_one(d as usize));
        }
    }

    #[test]
    fn root_has_exact_order() {
        for d in 1..=36u32 {
            let z = CyclotomicValue::root_power(d, 1);
            assert_eq!(z.coeffs().len(), euler_phi(d as u64) as usize);
            let one = CyclotomicValue::constant(d, BigInt::one());
            let mut acc = one.clone();
            for k in 1..=d {
                acc = &acc * &z;
                assert_eq!(acc == one, k == d, "d = {d}, k = {k}");
            }
        }
    }

    #[test]
    fn not_rational_carries_coordinates() {
        let z = CyclotomicValue::root_power(5, 1);
        match z.as_integer() {
            Err(SieveError::NotRational { order, coeffs }) => {
                assert_eq!(order, 5);
                assert_eq!(coeffs, vec!["0", "1", "0", "0"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(
            a in prop::collection::vec(-5i64..6, 0..8),
            b in prop::collection::vec(-5i64..6, 0..8),
            d in 1u32..25,
            step in -30i64..30,
        ) {
            let pa = UniPoly::from_i64(&a);
            let pb = UniPoly::from_i64(&b);
            let lhs = (&pa * &pb).eval_at_root(d, step);
            let rhs = &pa.eval_at_root(d, step) * &pb.eval_at_root(d, step);
            prop_assert_eq!(lhs, rhs);
            let sum = (&pa + &pb).eval_at_root(d, step);
            prop_assert_eq!(sum, &pa.eval_at_root(d, step) + &pb.eval_at_root(d, step));
        }
    }
}
