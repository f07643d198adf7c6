//! Number of non-isomorphic pure quintic fields sharing one conductor.

use crate::arith::Factorization;
use crate::error::{Error, Result};
use crate::invariants::Species;

/// `X_k = (4^k - (-1)^k) / 5`: 0, 1, 3, 13, 51, ...
pub fn x_sequence(k: u32) -> u64 {
    let four = 4u64.pow(k);
    if k.is_multiple_of(2) {
        (four - 1) / 5
    } else {
        (four + 1) / 5
    }
}

/// Whether the closed form is backed by a proof rather than fitted data.
///
/// Species 2 with no non-free prime (`v = 0`) is covered by the fitted rule
/// `4^(u-1)`, which agrees with exhaustive enumeration.
pub fn formula_hypotheses_hold(species: Species, v: u32) -> bool {
    !(species == Species::Two && v == 0)
}

/// Multiplicity of the conductor class with `u` free and `v` non-free primes
/// other than 5.
///
/// * species 1a: `4^(u+v)`
/// * species 1b: `4^u X_v`
/// * species 2: `4^u X_(v-1)` for `v >= 1`, `4^(u-1)` for `v = 0`
pub fn multiplicity_formula(species: Species, u: u32, v: u32) -> Result<u64> {
    let none = || Error::NoSuchConductor {
        species: species.tag(),
        u,
        v,
    };
    let pow4 = |k: u32| 4u64.checked_pow(k).ok_or(Error::Overflow("multiplicity"));
    let m = match species {
        Species::OneA => pow4(u + v)?,
        Species::OneB => pow4(u)?
            .checked_mul(x_sequence(v))
            .ok_or(Error::Overflow("multiplicity"))?,
        Species::Two if v == 0 => {
            if u == 0 {
                return Err(none());
            }
            pow4(u - 1)?
        }
        Species::Two => pow4(u)?
            .checked_mul(x_sequence(v - 1))
            .ok_or(Error::Overflow("multiplicity"))?,
    };
    if m == 0 {
        return Err(none());
    }
    Ok(m)
}

/// Species and primes encoded by a fourth-power conductor `f^4`.
fn decode_conductor(f4: &Factorization) -> Result<(Species, Vec<u64>)> {
    let invalid = || Error::InvalidConductor(f4.display_leading(5));
    let species = match f4.exponent_of(5) {
        6 => Species::OneA,
        2 => Species::OneB,
        0 => Species::Two,
        _ => return Err(invalid()),
    };
    let mut primes = Vec::new();
    for &(q, e) in f4.factors() {
        if q == 5 {
            if species == Species::OneA {
                primes.push(q);
            }
        } else if e == 4 {
            primes.push(q);
        } else {
            return Err(invalid());
        }
    }
    if primes.is_empty() {
        return Err(invalid());
    }
    Ok((species, primes))
}

fn mod_pow(base: u64, exp: u32, m: u64) -> u64 {
    (0..exp).fold(1, |acc, _| acc * (base % m) % m)
}

fn value_of(primes: &[u64], exps: &[u32], k: u32) -> Option<u128> {
    primes.iter().zip(exps).try_fold(1u128, |acc, (&q, &e)| {
        (q as u128)
            .checked_pow((e * k) % 5)
            .and_then(|v| acc.checked_mul(v))
    })
}

/// Counts normalized radicands with the given `f^4` by enumerating all
/// exponent vectors in `{1,2,3,4}` over the conductor primes.
pub fn multiplicity_bruteforce(f4: &Factorization) -> Result<u64> {
    let (species, primes) = decode_conductor(f4)?;
    let n = primes.len() as u32;
    let total = 4u64.checked_pow(n).ok_or(Error::Overflow("enumeration"))?;
    let mut count = 0;
    let mut exps = vec![1u32; primes.len()];
    for code in 0..total {
        let mut c = code;
        for e in exps.iter_mut() {
            *e = (c % 4) as u32 + 1;
            c /= 4;
        }
        let residue = primes
            .iter()
            .zip(&exps)
            .fold(1, |acc, (&q, &e)| acc * mod_pow(q, e, 25) % 25);
        let tagged = if matches!(residue, 1 | 7 | 18 | 24) {
            Species::Two
        } else if primes.contains(&5) {
            Species::OneA
        } else {
            Species::OneB
        };
        if tagged != species {
            continue;
        }
        let d = value_of(&primes, &exps, 1).ok_or(Error::Overflow("radicand"))?;
        let mut normalized = true;
        for k in 2..5 {
            let c = value_of(&primes, &exps, k).ok_or(Error::Overflow("coradicand"))?;
            if c < d {
                normalized = false;
                break;
            }
        }
        if normalized {
            count += 1;
        }
    }
    if count == 0 {
        let u = primes
            .iter()
            .filter(|&&q| crate::arith::residue_tag(q).is_free())
            .count() as u32;
        let v = primes.iter().filter(|&&q| q != 5).count() as u32 - u;
        return Err(Error::NoSuchConductor {
            species: species.tag(),
            u,
            v,
        });
    }
    Ok(count)
}
