//! Certificates that the unbounded cases hold for every `n`, not just the
//! audited range. Each reduces `⌊n²/4⌋ − log₂(lhs)` to an explicit rational
//! lower bound that is increasing in `n`, using rational upper bounds on
//! logarithms certified by integer powers (`log₂ b ≤ k/q` because
//! `b^q ≤ 2^k`).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::exact::{log2_upper, quarter_square};
use crate::error::{Error, Result};

/// Denominator used for the logarithm bounds.
const LOG_DENOMINATOR: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceCertificate {
    pub case: String,
    /// The bound holds for every `n` at least this.
    pub crossover: u64,
    /// Largest `n` covered by the exact finite audit.
    pub audited_to: u64,
    pub certificate: String,
    pub pass: bool,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn log2_bound(base: &BigUint) -> (u64, BigRational) {
    let k = if base.is_one() {
        0
    } else {
        (base.pow(LOG_DENOMINATOR) - 1u32).bits()
    };
    (k, BigRational::new(BigInt::from(k), BigInt::from(LOG_DENOMINATOR)))
}

/// `⌊n²/4⌋ − ⌊(n−c)²/4⌋` written as `k² + pk` per parity is a polynomial of
/// degree at most two in `k`; agreement with `expected(n)` at three values of
/// `k` for each parity proves the identity for all `n ≥ c`.
fn floor_difference_identity(c: u64, expected: impl Fn(u64) -> i64) -> bool {
    (0..=1u64).all(|p| {
        (c..c + 3).all(|k| {
            let n = 2 * k + p;
            quarter_square(n) as i64 - quarter_square(n - c) as i64 == expected(n)
        })
    })
}

/// Smallest integer `n ≥ lo` with `a·n + b > 0`, for `a > 0`.
fn linear_crossover(a: &BigRational, b: &BigRational, lo: u64) -> u64 {
    let root = -b / a;
    let first = root.floor().to_integer() + BigInt::one();
    let first: u64 = first.max(BigInt::zero()).try_into().expect("small crossover");
    first.max(lo)
}

fn linear_certificate(case: String, a: BigRational, b: BigRational, lo: u64, audited_to: u64, text: String) -> DominanceCertificate {
    let positive_slope = a.is_positive();
    let crossover = if positive_slope { linear_crossover(&a, &b, lo) } else { u64::MAX };
    let pass = positive_slope && crossover <= audited_to + 1;
    DominanceCertificate {
        case,
        crossover,
        audited_to,
        certificate: format!("{text}; gap(n) >= ({a})*n + ({b}), slope positive = {positive_slope}"),
        pass,
    }
}

fn grandever1(audited_to: u64) -> DominanceCertificate {
    let (k9, l9) = log2_bound(&BigUint::from(9u32));
    // ⌊n²/4⌋ − ⌊(n−8)²/4⌋ = 4n − 16 exactly.
    let identity = floor_difference_identity(8, |n| 4 * n as i64 - 16);
    // gap = 4n − 16 − 16 − (n − 8)·L9
    let a = q(4) - &l9;
    let b = q(-32) + q(8) * &l9;
    let mut cert = linear_certificate(
        "grandever1".into(),
        a,
        b,
        9,
        audited_to,
        format!(
            "9^{LOG_DENOMINATOR} <= 2^{k9}; floor(n^2/4) - floor((n-8)^2/4) = 4n - 16 for both parities: {identity}"
        ),
    );
    cert.pass &= identity;
    cert
}

fn grandever2(r: u64, audited_to: u64) -> DominanceCertificate {
    let fact: BigUint = (1..=r).map(BigUint::from).product();
    let (kr, lr) = log2_bound(&BigUint::from(r));
    let (kf, lf) = log2_bound(&fact);
    // ⌊n²/4⌋ − ⌊(n−r)²/4⌋ ≥ (2rn − r² − 1)/4, checked exactly on both parities.
    let ri = r as i64;
    let lower_ok = (0..=1u64).all(|p| {
        (r..r + 3).all(|k| {
            let n = 2 * k + p;
            4 * (quarter_square(n) as i64 - quarter_square(n - r) as i64) >= 2 * ri * n as i64 - ri * ri - 1
        })
    });
    // gap ≥ (2rn − r² − 1)/4 − log₂ r! − (n − r)·log₂ r
    let a = BigRational::new(BigInt::from(ri), BigInt::from(2)) - &lr;
    let b = BigRational::new(BigInt::from(-(ri * ri) - 1), BigInt::from(4)) - &lf + q(ri) * &lr;
    let mut cert = linear_certificate(
        format!("grandever2/r={r}"),
        a,
        b,
        11.max(r + 8),
        audited_to,
        format!(
            "{r}^{LOG_DENOMINATOR} <= 2^{kr}; ({r}!)^{LOG_DENOMINATOR} <= 2^{kf}; 4*(floor(n^2/4) - floor((n-{r})^2/4)) >= 2*{r}*n - {r}^2 - 1: {lower_ok}"
        ),
    );
    cert.pass &= lower_ok;
    cert
}

fn grandever4(audited_to: u64) -> DominanceCertificate {
    // With ⌊n²/4⌋ − ⌊(n−4)²/4⌋ = 2n − 4, the ratio lhs / 2^⌊n²/4⌋ equals
    // 24·13^y / 2^(4y+4), independent of n and decreasing in y.
    let identity = floor_difference_identity(4, |n| 2 * n as i64 - 4);
    let at_two = 24 * 13u64.pow(2);
    let start_ok = at_two < 1 << 12;
    let decreasing = 13 < 16;
    let pass = identity && start_ok && decreasing;
    DominanceCertificate {
        case: "grandever4".into(),
        crossover: 11,
        audited_to,
        certificate: format!(
            "floor(n^2/4) - floor((n-4)^2/4) = 2n - 4 for both parities: {identity}; \
             ratio = 24*13^y/2^(4y+4); y = 2: {at_two} < 4096: {start_ok}; 13 < 16 so the ratio decreases in y: {decreasing}"
        ),
        pass,
    }
}

/// Certificates for `grandever1`, `grandever2` (one per `r ∈ {5,6,7}`) or
/// `grandever4`.
pub fn exponent_dominance(case: &str, audited_to: u64) -> Result<Vec<DominanceCertificate>> {
    match case {
        "grandever1" => Ok(vec![grandever1(audited_to)]),
        "grandever2" => Ok((5..=7).map(|r| grandever2(r, audited_to)).collect()),
        "grandever4" => Ok(vec![grandever4(audited_to)]),
        other => Err(Error::Invalid(format!("no dominance certificate for case {other:?}"))),
    }
}

/// All three cases.
pub fn all_dominance(audited_to: u64) -> Vec<DominanceCertificate> {
    ["grandever1", "grandever2", "grandever4"]
        .iter()
        .flat_map(|c| exponent_dominance(c, audited_to).expect("known case"))
        .collect()
}

/// Sanity check that a certified log bound is tight: `b^q ≤ 2^k < 2·b^q`.
pub fn log_bound_is_tight(base: u64, q: u32) -> bool {
    let k = log2_upper(base, q);
    let v = BigUint::from(base).pow(q);
    v <= BigUint::one() << k && (BigUint::one() << k) < v * 2u32
}
