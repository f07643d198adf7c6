//! Integer arithmetic: trial-division factorization, p-adic valuations and
//! residue tags of primes modulo 5 and 25.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest integer accepted by [`factorize`].
pub const FACTOR_CAP: u64 = 1_000_000_000;

/// Smallest integer whose square exceeds [`FACTOR_CAP`].
const SIEVE_BOUND: usize = 31_623;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_BOUND + 1];
        let mut primes = Vec::new();
        for n in 2..=SIEVE_BOUND {
            if !composite[n] {
                primes.push(n as u64);
                let mut m = n * n;
                while m <= SIEVE_BOUND {
                    composite[m] = true;
                    m += n;
                }
            }
        }
        primes
    })
}

/// Primality by trial division against the sieve. Valid up to [`FACTOR_CAP`].
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in small_primes() {
        if p * p > n {
            return true;
        }
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    true
}

/// Exponent of `p` in `n`. Zero when `n == 0` or `p < 2`.
pub fn valuation(n: u64, p: u64) -> u32 {
    if n == 0 || p < 2 {
        return 0;
    }
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// A prime factorization with primes strictly ascending and positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The empty factorization of 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from arbitrary `(prime, exponent)` pairs.
    /// Pairs are sorted, equal primes merged, zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> Result<Self> {
        let mut factors: Vec<(u64, u32)> = Vec::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if e > 0 {
                factors.push((p, e));
            }
        }
        factors.sort_unstable();
        let mut merged: Vec<(u64, u32)> = Vec::with_capacity(factors.len());
        for (p, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == p => last.1 += e,
                _ => merged.push((p, e)),
            }
        }
        Ok(Self { factors: merged })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn contains(&self, p: u64) -> bool {
        self.exponent_of(p) > 0
    }

    /// The integer this factorization represents, if it fits.
    pub fn value(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, &(p, e)| {
            (p as u128)
                .checked_pow(e)
                .and_then(|pe| acc.checked_mul(pe))
        })
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, &(p, _)| acc.checked_mul(p as u128))
    }

    /// Every exponent multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self {
            factors: self.factors.iter().map(|&(p, e)| (p, e * k)).collect(),
        }
    }

    /// Product of two factorizations.
    pub fn mul(&self, other: &Self) -> Self {
        let pairs = self.factors.iter().chain(other.factors.iter()).copied();
        Self::from_pairs(pairs).expect("factors are already prime")
    }

    /// Renders the factorization with `lead` first (if present), the rest ascending.
    pub fn display_leading(&self, lead: u64) -> String {
        let mut parts: Vec<String> = Vec::with_capacity(self.factors.len());
        let ordered = self
            .factors
            .iter()
            .filter(|&&(p, _)| p == lead)
            .chain(self.factors.iter().filter(|&&(p, _)| p != lead));
        for &(p, e) in ordered {
            parts.push(render_power(p, e));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn render_power(p: u64, e: u32) -> String {
    if e == 1 {
        p.to_string()
    } else {
        format!("{p}^{e}")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| render_power(p, e))
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Parses `p^e*q*...` in any prime order. Duplicate primes are rejected.
impl FromStr for Factorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedFactorization(s.to_string());
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(Self::one());
        }
        let mut pairs = Vec::new();
        for part in trimmed.split('*') {
            let part = part.trim();
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (part, "1"),
            };
            let p: u64 = base.parse().map_err(|_| bad())?;
            let e: u32 = exp.parse().map_err(|_| bad())?;
            if e == 0 || !is_prime(p) || pairs.iter().any(|&(q, _)| q == p) {
                return Err(bad());
            }
            pairs.push((p, e));
        }
        Self::from_pairs(pairs)
    }
}

/// Factorizes `2 <= n <= FACTOR_CAP` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    if n > FACTOR_CAP {
        return Err(Error::AboveCap(n));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Position of a prime relative to the quintic cyclotomic field.
///
/// A prime `q != 5` is *free* when `q ≡ ±1, ±7 (mod 25)`, equivalently when
/// `q` is a fifth power residue modulo 25.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueTag {
    pub q: u64,
    pub mod5: u8,
    pub mod25: u8,
}

impl ResidueTag {
    pub fn of(q: u64) -> Self {
        Self {
            q,
            mod5: (q % 5) as u8,
            mod25: (q % 25) as u8,
        }
    }

    pub fn is_five(&self) -> bool {
        self.q == 5
    }

    pub fn is_plus_one(&self) -> bool {
        self.mod5 == 1
    }

    pub fn is_minus_one(&self) -> bool {
        self.mod5 == 4
    }

    /// `q ≡ ±1 (mod 5)`: the prime splits in the real quadratic subfield.
    pub fn is_plus_minus_one(&self) -> bool {
        self.is_plus_one() || self.is_minus_one()
    }

    /// `q ≡ ±2 (mod 5)`: the prime is inert in the real quadratic subfield.
    pub fn is_plus_minus_two(&self) -> bool {
        self.mod5 == 2 || self.mod5 == 3
    }

    /// `q ≡ ±7 (mod 25)`.
    pub fn is_plus_minus_seven_25(&self) -> bool {
        self.mod25 == 7 || self.mod25 == 18
    }

    pub fn is_free(&self) -> bool {
        !self.is_five() && matches!(self.mod25, 1 | 7 | 18 | 24)
    }
}

/// Residue tag of `q` modulo 5 and 25.
pub fn residue_tag(q: u64) -> ResidueTag {
    ResidueTag::of(q)
}
