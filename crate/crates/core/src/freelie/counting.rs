//! Closed-form dimension counts for the free Lie algebra on two generators.

use crate::error::LieError;

/// Largest degree the `u128` counts below can represent without overflow.
pub const MAX_COUNTED_DEGREE: usize = 120;

pub(crate) fn mobius(mut n: u64) -> i128 {
    let mut result = 1i128;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn check_range(n: usize) -> Result<(), LieError> {
    if n == 0 {
        Err(LieError::ZeroDegree)
    } else if n > MAX_COUNTED_DEGREE {
        Err(LieError::DegreeTooLarge {
            degree: n,
            max: MAX_COUNTED_DEGREE,
        })
    } else {
        Ok(())
    }
}

/// Dimension of the degree-`n` piece of the free Lie algebra on two
/// generators: `(1/n) * sum_{d | n} mu(d) 2^(n/d)`.
pub fn witt_dimension(n: usize) -> Result<u128, LieError> {
    check_range(n)?;
    let sum: i128 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d as u64) * (1i128 << (n / d)))
        .sum();
    Ok((sum / n as i128) as u128)
}

/// Dimension of the piece spanned by brackets with `i` copies of `e` and `j`
/// copies of `f`: `(1/(i+j)) * sum_{d | gcd(i,j)} mu(d) C((i+j)/d, i/d)`.
pub fn bigraded_dimension(i: usize, j: usize) -> Result<u128, LieError> {
    let n = i + j;
    check_range(n)?;
    let g = gcd(i, j);
    let sum: i128 = (1..=g)
        .filter(|d| g.is_multiple_of(*d))
        .map(|d| mobius(d as u64) * binomial(n / d, i / d) as i128)
        .sum();
    Ok((sum / n as i128) as u128)
}
