//! Inclusion-exclusion counts for words missing a symbol, 1-universal words
//! and arches.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Pow, Zero};

/// Arbitrary-precision non-negative count.
pub type BigCount = BigUint;

/// `0! ..= upto!`.
pub fn factorials(upto: usize) -> Vec<BigCount> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(BigCount::one());
    for i in 1..=upto {
        let next = &out[i - 1] * BigCount::from(i);
        out.push(next);
    }
    out
}

/// Row `n` of Pascal's triangle: `C(n, 0) ..= C(n, n)`.
pub fn binomial_row(n: usize) -> Vec<BigCount> {
    let mut row = vec![BigCount::one()];
    for i in 1..=n {
        let next = &row[i - 1] * BigCount::from(n - i + 1) / BigCount::from(i);
        row.push(next);
    }
    row
}

fn pow(base: usize, exp: usize) -> BigInt {
    // 0^0 = 1
    BigInt::from(base).pow(exp as u32)
}

fn to_count(value: BigInt) -> BigCount {
    let (sign, magnitude) = value.into_parts();
    assert!(
        sign != Sign::Minus,
        "inclusion-exclusion produced a negative count"
    );
    magnitude
}

/// Words of length `n` over `{1..σ}` that miss at least one symbol
/// (universality index exactly 0).
pub fn count_index_zero(n: usize, sigma: usize) -> BigCount {
    let binom = binomial_row(sigma);
    let mut total = BigInt::zero();
    for (i, c) in binom.iter().enumerate().skip(1) {
        let term = BigInt::from(c.clone()) * pow(sigma - i, n);
        if i % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    to_count(total)
}

/// Words of length `n` containing every symbol of `{1..σ}`.
pub fn count_one_universal(n: usize, sigma: usize) -> BigCount {
    BigCount::from(sigma).pow(n as u32) - count_index_zero(n, sigma)
}

/// Words of length `n` that are arches. There are no arches of length 0.
pub fn count_arches(n: usize, sigma: usize) -> BigCount {
    if n == 0 || sigma == 0 {
        return BigCount::zero();
    }
    let binom = binomial_row(sigma);
    let mut total = BigInt::from(sigma) * pow(sigma - 1, n - 1);
    for (i, c) in binom.iter().enumerate().skip(2) {
        let term = BigInt::from(i) * BigInt::from(c.clone()) * pow(sigma - i, n - 1);
        if i % 2 == 0 {
            total -= term;
        } else {
            total += term;
        }
    }
    to_count(total)
}
