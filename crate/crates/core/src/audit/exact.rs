//! Exact values for the audit: integers kept as prime factorisations so that
//! huge powers print compactly, and rationals for the scaled polynomial
//! checks. Every comparison goes through unbounded integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

/// Decimal output is used up to this many digits, factored output beyond.
const DECIMAL_DIGITS: usize = 40;

/// A positive integer as a map from primes to exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factored(BTreeMap<u64, u64>);

impl Factored {
    pub fn one() -> Self {
        Factored::default()
    }

    /// Factorises `v` by trial division. `v` must be positive.
    pub fn int(v: u64) -> Self {
        assert!(v > 0, "only positive integers are factored");
        let mut out = BTreeMap::new();
        let mut rest = v;
        let mut p = 2;
        while p * p <= rest {
            while rest.is_multiple_of(p) {
                *out.entry(p).or_insert(0) += 1;
                rest /= p;
            }
            p += 1;
        }
        if rest > 1 {
            *out.entry(rest).or_insert(0) += 1;
        }
        Factored(out)
    }

    pub fn pow2(e: u64) -> Self {
        Factored::int(2).pow(e)
    }

    pub fn factorial(n: u64) -> Self {
        (2..=n).fold(Factored::one(), |acc, k| acc * Factored::int(k))
    }

    pub fn pow(mut self, e: u64) -> Self {
        if e == 0 {
            return Factored::one();
        }
        for exp in self.0.values_mut() {
            *exp *= e;
        }
        self
    }

    pub fn value(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, (&p, &e)| acc * BigUint::from(p).pow(e as u32))
    }

    /// Exponent of 2 when the value is a power of two.
    pub fn log2_exact(&self) -> Option<u64> {
        match self.0.len() {
            0 => Some(0),
            1 => self.0.get(&2).copied(),
            _ => None,
        }
    }
}

impl std::ops::Mul for Factored {
    type Output = Factored;

    // Multiplying factorisations adds exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(mut self, rhs: Factored) -> Factored {
        for (p, e) in rhs.0 {
            *self.0.entry(p).or_insert(0) += e;
        }
        self
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.value();
        let dec = v.to_string();
        if dec.len() <= DECIMAL_DIGITS {
            return f.write_str(&dec);
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// An exact audit quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exact {
    Int(Factored),
    Rational(BigRational),
}

impl Exact {
    pub fn int(v: u64) -> Self {
        Exact::Int(Factored::int(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Exact::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            Exact::Int(f) => BigRational::from_integer(BigInt::from(f.value())),
            Exact::Rational(r) => r.clone(),
        }
    }

    pub fn cmp_exact(&self, other: &Exact) -> Ordering {
        match (self, other) {
            (Exact::Int(a), Exact::Int(b)) => a.value().cmp(&b.value()),
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

impl From<Factored> for Exact {
    fn from(f: Factored) -> Self {
        Exact::Int(f)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Int(v) => v.fmt(f),
            Exact::Rational(r) if r.denom().is_one() => r.numer().fmt(f),
            Exact::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `⌊n²/4⌋`.
pub fn quarter_square(n: u64) -> u64 {
    n * n / 4
}

/// `2^⌊n²/4⌋`.
pub fn turan_power(n: u64) -> Factored {
    Factored::pow2(quarter_square(n))
}

pub fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Smallest `k` with `base^q ≤ 2^k`, so that `log₂ base ≤ k/q` exactly.
pub fn log2_upper(base: u64, q: u32) -> u64 {
    let v = BigUint::from(base).pow(q);
    if v.is_zero() {
        return 0;
    }
    (v - 1u32).bits()
}
