use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{internal, Result};

/// Integer polynomial in `q` and `t`, stored sparsely as
/// `(q-degree, t-degree) -> coefficient`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, q_deg: u32, t_deg: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((q_deg, t_deg), c);
        p
    }

    /// Builds a polynomial from possibly repeated exponent pairs; repeated
    /// pairs are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigInt)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Terms in ascending `(q-degree, t-degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, q_deg: u32, t_deg: u32) -> BigInt {
        self.terms.get(&(q_deg, t_deg)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree of all terms, or `None` if the polynomial is zero
    /// or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|&(a, b)| a + b);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn swap_variables(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.swap_variables() == *self
    }

    /// Leading term under lexicographic order on `(q-degree, t-degree)`.
    pub fn leading_term(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn eval(&self, q: i64, t: i64) -> BigInt {
        let q = BigInt::from(q);
        let t = BigInt::from(t);
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(q.clone(), a as usize) * num_traits::pow(t.clone(), b as usize))
            .sum()
    }

    /// Floating-point evaluation at `(exp(2 pi i a/d), exp(2 pi i b/d))`,
    /// used only to cross-check the exact path.
    pub fn eval_complex(&self, d: u32, a: i64, b: i64) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (&(i, j), c) in &self.terms {
            let c: f64 = c.to_string().parse().unwrap_or(f64::NAN);
            let e = (a * i as i64 + b * j as i64).rem_euclid(d as i64) as f64;
            let theta = 2.0 * std::f64::consts::PI * e / d as f64;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }

    /// Exact multivariate long division with lexicographic term order.
    /// Fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some((lead_e, lead_c)) = divisor.leading_term() else {
            return internal("division by the zero polynomial");
        };
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading_term() {
            let (qa, qb) = (e.0.checked_sub(lead_e.0), e.1.checked_sub(lead_e.1));
            let (Some(qa), Some(qb)) = (qa, qb) else {
                return internal(format!("nonzero remainder dividing {self} by {divisor}"));
            };
            let (factor, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return internal(format!("non-integral quotient dividing {self} by {divisor}"));
            }
            let step = Self::monomial(factor, qa, qb);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: Self) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Canonical form `c q^a t^b + ...`, terms in descending q-degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                parts.push(mag.to_string());
            }
            parts.extend(var_power("q", a));
            parts.extend(var_power("t", b));
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

pub(super) fn var_power(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly_strategy() -> impl Strategy<Value = BivariatePolynomial> {
        prop::collection::vec(((0u32..5, 0u32..5), -6i64..7), 0..6).prop_map(|ts| {
            BivariatePolynomial::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        })
    }

    #[test]
    fn display_canonical() {
        let p = BivariatePolynomial::from_terms(vec![
            ((2, 0), BigInt::from(1)),
            ((1, 1), BigInt::from(-3)),
            ((0, 2), BigInt::from(1)),
            ((0, 0), BigInt::from(4)),
        ]);
        assert_eq!(p.to_string(), "q^2 - 3 q t + t^2 + 4");
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
        assert_eq!((-&BivariatePolynomial::one()).to_string(), "-1");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = BivariatePolynomial::monomial(BigInt::from(3), 1, 2);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.terms().count(), 0);
    }

    #[test]
    fn div_exact_rejects_remainder() {
        let q = BivariatePolynomial::monomial(BigInt::one(), 1, 0);
        let t = BivariatePolynomial::monomial(BigInt::one(), 0, 1);
        let qt = &q + &t;
        assert!(q.div_exact(&qt).is_err());
        assert!(q.div_exact(&BivariatePolynomial::zero()).is_err());
        let two = BivariatePolynomial::constant(BigInt::from(2));
        assert!(q.div_exact(&two).is_err());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn div_exact_inverts_mul(a in poly_strategy(), b in poly_strategy()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }
    }
}
