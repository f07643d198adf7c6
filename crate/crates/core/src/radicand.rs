//! Radicands of pure prime-degree fields.
//!
//! A radicand `D` of exponent `p` is a `p`th-power-free integer `D >= 2`.
//! The fields `Q(D^(1/p))` and `Q(D'^(1/p))` coincide exactly when `D'` is one
//! of the coradicands `D^(k)` obtained from `D^k` by reducing every prime
//! exponent modulo `p`. The normalized radicand is the least coradicand.

use crate::arith::{factorize, is_prime, Factorization};
use crate::error::{Error, Result};

/// Exponent of the pure quintic case.
pub const QUINTIC: u32 = 5;

/// A `p`th-power-free integer `D >= 2` with its factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Radicand {
    value: u64,
    factorization: Factorization,
    p: u32,
}

/// `D = D_1 * D_2^2 * ... * D_{p-1}^{p-1}` with pairwise coprime squarefree `D_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousDecomposition {
    /// `components[j - 1] = D_j`.
    pub components: Vec<u64>,
}

impl HomogeneousDecomposition {
    /// `D_j` for `1 <= j <= p - 1`.
    pub fn component(&self, j: usize) -> u64 {
        self.components[j - 1]
    }
}

fn check_exponent_prime(p: u32) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidExponentPrime(p));
    }
    Ok(())
}

impl Radicand {
    /// Accepts `value` only if it is already `p`th-power-free.
    pub fn new(value: u64, p: u32) -> Result<Self> {
        check_exponent_prime(p)?;
        let factorization = factorize(value)?;
        if factorization.factors().iter().any(|&(_, e)| e >= p) {
            return Err(Error::NotPowerFree { value, p });
        }
        Ok(Self {
            value,
            factorization,
            p,
        })
    }

    /// Reduces every exponent of `value` modulo `p` first.
    pub fn reduced(value: u64, p: u32) -> Result<Self> {
        check_exponent_prime(p)?;
        let full = factorize(value)?;
        let factorization =
            Factorization::from_pairs(full.factors().iter().map(|&(q, e)| (q, e % p)))?;
        if factorization.is_one() {
            return Err(Error::TrivialRadicand(value));
        }
        let value = factorization.value().expect("divides the input") as u64;
        Ok(Self {
            value,
            factorization,
            p,
        })
    }

    /// Shorthand for `Radicand::new(value, 5)`.
    pub fn quintic(value: u64) -> Result<Self> {
        Self::new(value, QUINTIC)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn homogeneous_components(&self) -> HomogeneousDecomposition {
        let mut components = vec![1u64; self.p as usize - 1];
        for &(q, e) in self.factorization.factors() {
            components[e as usize - 1] *= q;
        }
        HomogeneousDecomposition { components }
    }

    fn coradicand_exponents(&self, k: u32) -> Vec<(u64, u32)> {
        self.factorization
            .factors()
            .iter()
            .map(|&(q, e)| (q, (e * k) % self.p))
            .collect()
    }

    /// `D^(k)` for `k = 1, ..., p - 1`.
    pub fn coradicands(&self) -> Result<Vec<u128>> {
        (1..self.p)
            .map(|k| {
                self.coradicand_exponents(k)
                    .iter()
                    .try_fold(1u128, |acc, &(q, e)| {
                        (q as u128).checked_pow(e).and_then(|v| acc.checked_mul(v))
                    })
                    .ok_or(Error::Overflow("coradicand"))
            })
            .collect()
    }

    /// The least coradicand together with the `k` producing it.
    ///
    /// # Panics
    /// If two distinct `k` yield the same minimum, which would contradict the
    /// pairwise distinctness of coradicands.
    pub fn normalize(&self) -> Result<(Radicand, u32)> {
        let cor = self.coradicands()?;
        let min = *cor.iter().min().expect("p >= 3");
        let hits: Vec<usize> = (0..cor.len()).filter(|&i| cor[i] == min).collect();
        assert_eq!(
            hits.len(),
            1,
            "coradicands of {} are not distinct",
            self.value
        );
        let k = hits[0] as u32 + 1;
        let factorization = Factorization::from_pairs(self.coradicand_exponents(k))?;
        Ok((
            Radicand {
                value: min as u64,
                factorization,
                p: self.p,
            },
            k,
        ))
    }

    pub fn is_normalized(&self) -> Result<bool> {
        let cor = self.coradicands()?;
        Ok(cor.iter().all(|&c| c >= self.value as u128))
    }
}

/// All normalized `p`th-power-free radicands `2 <= D < limit`, ascending.
pub fn enumerate_normalized(limit: u64, p: u32) -> Result<Vec<Radicand>> {
    check_exponent_prime(p)?;
    let mut out = Vec::new();
    for d in 2..limit {
        let r = match Radicand::new(d, p) {
            Ok(r) => r,
            Err(Error::NotPowerFree { .. }) => continue,
            Err(e) => return Err(e),
        };
        if r.is_normalized()? {
            out.push(r);
        }
    }
    Ok(out)
}
