//! Closed-form counts and bounds, evaluated in unbounded integers.

use num_bigint::BigUint;
use num_traits::One;

use crate::count::Count;
use crate::error::{Error, Result};

pub const ELL_GUARD: u64 = 20;
pub const FACTORIAL_GUARD: u64 = 30;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn small_binomial(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}

/// The `(i, j)` summand of the `K_{1,ℓ,ℓ}` formula:
/// `C(ℓ,i)·C(ℓ,j)·2^((ℓ−i)j + (ℓ−j)i)`.
pub fn k1ll_term(ell: u64, i: u64, j: u64) -> BigUint {
    (binomial(ell, i) * binomial(ell, j)) << ((ell - i) * j + (ell - j) * i)
}

/// Number of cyclic-triangle-free orientations of `K_{1,ℓ,ℓ}`.
pub fn k1ll_count(ell: u64) -> Result<Count> {
    if ell == 0 {
        return Err(Error::Invalid("ℓ must be positive".into()));
    }
    if ell > ELL_GUARD {
        return Err(Error::Guard {
            what: "ℓ",
            value: ell as usize,
            limit: ELL_GUARD as usize,
        });
    }
    let total = (0..=ell)
        .flat_map(|i| (0..=ell).map(move |j| (i, j)))
        .map(|(i, j)| k1ll_term(ell, i, j))
        .sum();
    Ok(Count(total))
}

/// `2^⌊n²/4⌋`, the count for the balanced complete bipartite graph.
pub fn bipartite_max(n: u64) -> Count {
    Count::pow2(n * n / 4)
}

/// `r² − C(r−1, 2)`.
pub fn corollary_bound(r: u64) -> Result<u64> {
    if r < 2 {
        return Err(Error::Invalid(format!("r must be at least 2, got {r}")));
    }
    Ok(r * r - small_binomial(r - 1, 2))
}

/// `(du+1)(dv+1) − C(duv+1, 2)`.
pub fn edge_kr_bound(du: u64, dv: u64, duv: u64) -> Result<u64> {
    if duv > du.min(dv) {
        return Err(Error::Invalid(format!(
            "common degree {duv} exceeds min({du}, {dv})"
        )));
    }
    Ok((du + 1) * (dv + 1) - small_binomial(duv + 1, 2))
}

pub fn factorial(n: u64) -> Result<Count> {
    if n > FACTORIAL_GUARD {
        return Err(Error::Guard {
            what: "factorial argument",
            value: n as usize,
            limit: FACTORIAL_GUARD as usize,
        });
    }
    Ok(Count((1..=n).fold(BigUint::one(), |acc, k| acc * k)))
}
