//! Arithmetic invariants of a pure quintic field `L = Q(D^(1/5))` and of its
//! normal closure `N = Q(zeta_5, D^(1/5))` over the cyclotomic field `K`.
//!
//! The fourth power `f^4` of the class field theoretic conductor of `N/K`
//! is integral and determines the discriminants of `L`, of the real
//! intermediate field `M = Q(sqrt 5, D^(1/5))` and of `N`.

use std::fmt;
use std::str::FromStr;

use crate::arith::{residue_tag, Factorization};
use crate::error::{Error, Result};
use crate::multiplicity::multiplicity_formula;
use crate::radicand::{Radicand, QUINTIC};

/// Ramification species of the prime 5 in `N/K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Species {
    /// `5 | D` and `D ≢ ±1, ±7 (mod 25)`.
    OneA,
    /// `5 ∤ D` and `D ≢ ±1, ±7 (mod 25)`.
    OneB,
    /// `D ≡ ±1, ±7 (mod 25)`.
    Two,
}

impl Species {
    pub fn tag(self) -> &'static str {
        match self {
            Species::OneA => "1a",
            Species::OneB => "1b",
            Species::Two => "2",
        }
    }

    /// Exponent of 5 in `f^4`.
    pub fn five_exponent(self) -> u32 {
        match self {
            Species::OneA => 6,
            Species::OneB => 2,
            Species::Two => 0,
        }
    }

    pub fn is_first(self) -> bool {
        self != Species::Two
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Species {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1a" => Ok(Species::OneA),
            "1b" => Ok(Species::OneB),
            "2" => Ok(Species::Two),
            _ => Err(Error::UnknownSpecies(s.to_string())),
        }
    }
}

fn require_quintic(d: &Radicand) -> Result<()> {
    if d.p() != QUINTIC {
        return Err(Error::NotQuintic(d.p()));
    }
    Ok(())
}

/// Species from the residue of `D` modulo 25.
pub fn species_of(d: &Radicand) -> Result<Species> {
    require_quintic(d)?;
    let v = d.value();
    Ok(if matches!(v % 25, 1 | 7 | 18 | 24) {
        Species::Two
    } else if v.is_multiple_of(5) {
        Species::OneA
    } else {
        Species::OneB
    })
}

/// `f^4`: `5^2 R^4` in species 1 and `R^4` in species 2, where `R` is the
/// squarefree kernel of `D`.
pub fn conductor4(d: &Radicand) -> Result<Factorization> {
    let species = species_of(d)?;
    let kernel = Factorization::from_pairs(d.factorization().primes().map(|q| (q, 1)))?;
    let five = Factorization::from_pairs([(5, if species.is_first() { 2 } else { 0 })])?;
    Ok(kernel.scaled(4).mul(&five))
}

/// Discriminants of `L`, `M` and `N` as factorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discriminants {
    pub pure: Factorization,
    pub intermediate: Factorization,
    pub normal: Factorization,
}

/// With `d_K = 5^3`: `d_L = 5^3 f^4`, `d_M = 5 d_K^2 f^8 = 5^7 f^8` and
/// `d_N = d_K^5 f^16 = 5^15 f^16`.
pub fn discriminants(d: &Radicand) -> Result<Discriminants> {
    let f4 = conductor4(d)?;
    let power_of_five = |e: u32| Factorization::from_pairs([(5, e)]).expect("5 is prime");
    Ok(Discriminants {
        pure: power_of_five(3).mul(&f4),
        intermediate: power_of_five(7).mul(&f4.scaled(2)),
        normal: power_of_five(15).mul(&f4.scaled(4)),
    })
}

/// Prime counts attached to `D` and its conductor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Counters {
    /// Number of primes dividing `f^4` (the conductor primes).
    pub conductor_primes: u32,
    /// Number of primes `q != 5` dividing `D`.
    pub t: u32,
    /// Free primes among them, `q ≡ ±1, ±7 (mod 25)`.
    pub u: u32,
    /// `t - u`.
    pub v: u32,
    /// Primes `q ≡ -1 (mod 5)` dividing `D`.
    pub s2: u32,
    /// Primes `q ≡ +1 (mod 5)` dividing `D`.
    pub s4: u32,
    /// `t - s2 - s4`: primes `q ≡ ±2 (mod 5)`.
    pub n: u32,
}

pub fn counters(d: &Radicand) -> Result<Counters> {
    let f4 = conductor4(d)?;
    let mut c = Counters {
        conductor_primes: f4.num_primes() as u32,
        t: 0,
        u: 0,
        v: 0,
        s2: 0,
        s4: 0,
        n: 0,
    };
    for q in d.factorization().primes().filter(|&q| q != 5) {
        let tag = residue_tag(q);
        c.t += 1;
        if tag.is_free() {
            c.u += 1;
        } else {
            c.v += 1;
        }
        if tag.is_minus_one() {
            c.s2 += 1;
        } else if tag.is_plus_one() {
            c.s4 += 1;
        } else {
            c.n += 1;
        }
    }
    Ok(c)
}

/// Which extension a different valuation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// `N/K`, valuation at a prime of `N` over `q`.
    NormalOverCyclotomic,
    /// `L/Q`, valuation at a prime of `L` over `q`.
    PureOverRationals,
}

/// Valuation of the different above `q`.
///
/// For `q = 5` in species 2 at the `L/Q` level the answer depends on the
/// ramification index of the prime of `L` over 5 (`split_exponent`, 4 or 1),
/// which must then be supplied.
pub fn different_valuation(
    q: u64,
    d: &Radicand,
    level: Level,
    split_exponent: Option<u32>,
) -> Result<u32> {
    let species = species_of(d)?;
    if !crate::arith::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let divides_d = d.factorization().contains(q);
    Ok(match (level, q == 5) {
        (Level::NormalOverCyclotomic, true) => match species {
            Species::OneA => 24,
            Species::OneB => 8,
            Species::Two => 0,
        },
        (Level::NormalOverCyclotomic, false) => {
            if divides_d {
                4
            } else {
                0
            }
        }
        (Level::PureOverRationals, true) => match species {
            Species::OneA => 9,
            Species::OneB => 5,
            Species::Two => match split_exponent {
                Some(4) => 3,
                Some(1) => 0,
                Some(e) => return Err(Error::InvalidSplitExponent(e)),
                None => return Err(Error::MissingSplitExponent),
            },
        },
        (Level::PureOverRationals, false) => {
            if divides_d {
                4
            } else {
                0
            }
        }
    })
}

/// Refined ramification data `(e0; t,u,v,m; n,s2,s4)` with `m` the
/// multiplicity and `e0` the 5-exponent of `f^4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefinedSpecies {
    pub e0: u32,
    pub t: u32,
    pub u: u32,
    pub v: u32,
    pub m: u64,
    pub n: u32,
    pub s2: u32,
    pub s4: u32,
}

impl fmt::Display for RefinedSpecies {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {},{},{},{}; {},{},{})",
            self.e0, self.t, self.u, self.v, self.m, self.n, self.s2, self.s4
        )
    }
}

/// Everything derivable from the radicand alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldInvariants {
    pub radicand: Radicand,
    pub species: Species,
    pub conductor4: Factorization,
    pub discriminants: Discriminants,
    pub counters: Counters,
    pub multiplicity: u64,
}

impl FieldInvariants {
    pub fn compute(d: &Radicand) -> Result<Self> {
        let species = species_of(d)?;
        let counters = counters(d)?;
        Ok(Self {
            radicand: d.clone(),
            species,
            conductor4: conductor4(d)?,
            discriminants: discriminants(d)?,
            counters,
            multiplicity: multiplicity_formula(species, counters.u, counters.v)?,
        })
    }

    pub fn refined(&self) -> RefinedSpecies {
        let c = self.counters;
        RefinedSpecies {
            e0: self.species.five_exponent(),
            t: c.t,
            u: c.u,
            v: c.v,
            m: self.multiplicity,
            n: c.n,
            s2: c.s2,
            s4: c.s4,
        }
    }
}

pub fn refined_species(d: &Radicand) -> Result<RefinedSpecies> {
    Ok(FieldInvariants::compute(d)?.refined())
}
