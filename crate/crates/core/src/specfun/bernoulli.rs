use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest index the harness ever needs.
pub const MAX_BERNOULLI: usize = 64;

fn binomial_big(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact Bernoulli numbers B_0..B_64 from the defining recurrence
/// sum_{j<=n} C(n+1,j) B_j = 0, which fixes the B_1 = -1/2 convention.
fn bernoulli_table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut b: Vec<BigRational> = Vec::with_capacity(MAX_BERNOULLI + 1);
        b.push(BigRational::one());
        for n in 1..=MAX_BERNOULLI {
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += BigRational::from(binomial_big(n + 1, j)) * bj;
            }
            b.push(-acc / BigRational::from(BigInt::from(n + 1)));
        }
        b
    })
}

/// Exact rational B_n; internal building block for the polynomial evaluators.
pub(crate) fn bernoulli_rational(n: usize) -> Result<&'static BigRational> {
    if n > MAX_BERNOULLI {
        return Err(Error::Range(format!(
            "bernoulli_number supports n <= {MAX_BERNOULLI}, got {n}"
        )));
    }
    Ok(&bernoulli_table()[n])
}

/// B_n rounded once to f64 (B_1 = -1/2 convention).
pub fn bernoulli_number(n: usize) -> Result<f64> {
    let r = bernoulli_rational(n)?;
    Ok(rational_to_f64(r))
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    // numer/denom may exceed f64 range individually; scale by the bit-length gap.
    let numer = r.numer();
    let denom = r.denom();
    if let (Some(n), Some(d)) = (numer.to_f64(), denom.to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let shift = (numer.bits() as i64 - denom.bits() as i64).max(0);
    let scaled = numer / (BigInt::one() << shift as usize);
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    sign * (scaled.to_f64().unwrap_or(f64::MAX).abs() / denom.to_f64().unwrap_or(f64::MAX))
        * 2f64.powi(shift as i32)
}

/// f64 cache of B_{2j} used by the Euler-Maclaurin tails.
pub(crate) fn bernoulli_even_f64(j: usize) -> f64 {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=MAX_BERNOULLI / 2)
            .map(|i| rational_to_f64(&bernoulli_table()[2 * i]))
            .collect()
    });
    cache[j]
}
