//! From per-length counts of a cyclically closed language to counts of its
//! primitive words and of its cyclic representatives.
//!
//! Both conversions assume the language is closed under cyclic permutation,
//! under taking powers, and under taking roots. Inputs violating that surface
//! as [`Error::HypothesisViolation`] rather than as wrong counts.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let factors = prime_factors(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if factors.len().is_multiple_of(2) {
        Ok(1)
    } else {
        Ok(-1)
    }
}

pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    Ok(prime_factors(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of primitive words per length, by Möbius inversion of
/// `a(n) = Σ_{d|n} p(d)`.
///
/// `a[i]` is the number of words of length `i + 1`; the output uses the same
/// indexing.
pub fn primitive_counts(a: &[BigUint]) -> Result<Vec<BigUint>> {
    (1..=a.len() as u64)
        .map(|n| {
            let mut sum = BigInt::zero();
            for d in divisors(n) {
                let mu = mobius(n / d)?;
                if mu != 0 {
                    sum += BigInt::from(mu) * BigInt::from(a[d as usize - 1].clone());
                }
            }
            if sum.is_negative() {
                Err(Error::HypothesisViolation {
                    n: n as usize,
                    reason: format!("primitive count {sum} is negative"),
                })
            } else {
                Ok(sum.magnitude().clone())
            }
        })
        .collect()
}

/// Number of cyclic representatives per length,
/// `c(n) = (1/n) Σ_{d|n} φ(n/d) a(d)`. Same indexing as [`primitive_counts`].
pub fn cycrep_counts(a: &[BigUint]) -> Result<Vec<BigUint>> {
    (1..=a.len() as u64)
        .map(|n| {
            let total = necklace_numerator(a, n)?;
            let (q, r) = total.div_rem(&BigUint::from(n));
            if !r.is_zero() {
                return Err(Error::HypothesisViolation {
                    n: n as usize,
                    reason: format!("{total} is not divisible by {n}"),
                });
            }
            Ok(q)
        })
        .collect()
}

/// `Σ_{d|n} φ(n/d) a(d)`, which equals `n · c(n)` for valid inputs.
pub fn necklace_numerator(a: &[BigUint], n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut total = BigUint::zero();
    for d in divisors(n) {
        total += &a[d as usize - 1] * euler_phi(n / d)?;
    }
    Ok(total)
}
