//! Exact polynomial algebra for q,t-analogues and evaluation at roots of unity.

mod bivariate;
mod cyclotomic;
mod univariate;

pub use bivariate::BivariatePolynomial;
pub use cyclotomic::{cyclotomic_polynomial, cyclotomic_polynomial_mobius, CyclotomicValue};
pub use univariate::UniPoly;

use crate::error::{domain, Result};
use num_bigint::BigInt;

/// `{n}_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}`.
pub fn qt_analogue(n: u32) -> Result<BivariatePolynomial> {
    if n == 0 {
        return domain("qt_analogue requires n >= 1");
    }
    Ok(BivariatePolynomial::from_terms(
        (0..n).map(|i| ((i, n - 1 - i), BigInt::from(1))),
    ))
}

/// `{n}!_{q,t}`, the product of `{i}_{q,t}` for `i = 1..n`.
pub fn qt_factorial(n: u32) -> BivariatePolynomial {
    (1..=n).fold(BivariatePolynomial::one(), |acc, i| {
        &acc * &qt_analogue(i).expect("i >= 1")
    })
}

/// q,t-binomial coefficient, computed as an exact quotient of factorials.
pub fn qt_binomial(n: u32, k: u32) -> Result<BivariatePolynomial> {
    if k > n {
        return domain(format!("qt_binomial requires k <= n, got n={n}, k={k}"));
    }
    let denom = &qt_factorial(k) * &qt_factorial(n - k);
    qt_factorial(n).div_exact(&denom)
}

/// Image of `p` under `q -> zeta_d^a`, `t -> zeta_d^b`, reduced modulo `Phi_d`.
pub fn eval_at_roots(p: &BivariatePolynomial, d: u32, a: i64, b: i64) -> Result<CyclotomicValue> {
    if d == 0 {
        return domain("eval_at_roots requires d >= 1");
    }
    let dd = d as i64;
    let mut buckets = vec![BigInt::from(0); d as usize];
    for (&(i, j), c) in p.terms() {
        let e = (a.rem_euclid(dd) * i as i64 + b.rem_euclid(dd) * j as i64).rem_euclid(dd);
        buckets[e as usize] += c;
    }
    Ok(CyclotomicValue::from_power_coeffs(d, buckets))
}

/// Returns `c` when `v` is the constant `c`.
pub fn as_integer(v: &CyclotomicValue) -> Result<BigInt> {
    v.as_integer()
}
