//! Relations between the 5-valuations `V_L`, `V_M`, `V_N` of the class
//! numbers of `L`, `M`, `N` and the unit norm index exponent `E`, plus the
//! density of fields where `zeta_5` is a norm.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// `5`-adic class number valuations and the unit norm index exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValuationTriple {
    pub v_l: u32,
    pub v_m: u32,
    pub v_n: u32,
    pub e: u32,
}

/// `V_N = (p-1) V_L + E - (p^2 - 5)/4` for `p` in {3, 5}.
pub fn walter_predict_vn(p: u32, v_l: u32, e: u32) -> Result<u32> {
    if p != 3 && p != 5 {
        return Err(Error::UnsupportedPrime(p));
    }
    let shift = (p * p - 5) / 4;
    ((p - 1) * v_l + e)
        .checked_sub(shift)
        .ok_or_else(|| Error::Inconsistent(format!("V_L = {v_l}, E = {e} predicts negative V_N")))
}

/// Quintic case: `V_N = 4 V_L + E - 5`.
pub fn parry_predict_vn(v_l: u32, e: u32) -> Result<u32> {
    walter_predict_vn(5, v_l, e)
}

/// `Q+ = V_M - 2 V_L + 2`, required in {0, 1, 2} with `V_L = 0 <=> V_M = 0`.
pub fn kobayashi_qplus(v_l: u32, v_m: u32) -> Result<u32> {
    let q = (v_m as i64) - 2 * (v_l as i64) + 2;
    if !(0..=2).contains(&q) {
        return Err(Error::Inconsistent(format!(
            "V_M - 2 V_L + 2 = {q} for V_L = {v_l}, V_M = {v_m}"
        )));
    }
    if (v_l == 0) != (v_m == 0) {
        return Err(Error::Inconsistent(format!(
            "V_L = {v_l} and V_M = {v_m} must vanish together"
        )));
    }
    Ok(q as u32)
}

/// Cubic case: `V_N = 2 V_L + Q - 1` with `V_L = 0 <=> V_N = 0`.
pub fn scholz_check(v_l: u32, v_n: u32, q: u32) -> bool {
    (v_l == 0) == (v_n == 0) && (2 * v_l + q).checked_sub(1) == Some(v_n)
}

impl ValuationTriple {
    /// Every violated relation, empty when the triple is consistent.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        match parry_predict_vn(self.v_l, self.e) {
            Ok(vn) if vn == self.v_n => {}
            Ok(vn) => out.push(format!("V_N = {} but 4 V_L + E - 5 = {vn}", self.v_n)),
            Err(e) => out.push(e.to_string()),
        }
        if let Err(e) = kobayashi_qplus(self.v_l, self.v_m) {
            out.push(e.to_string());
        }
        out
    }
}

/// Units of `Z/25`.
pub fn units_mod25() -> Vec<u64> {
    (1..25).filter(|x| x % 5 != 0).collect()
}

/// Units `x` of `Z/25` with `x^4 ≡ 1`, which are also the fifth powers.
pub fn free_residues_mod25() -> Vec<u64> {
    units_mod25()
        .into_iter()
        .filter(|&x| x * x % 25 * x % 25 * x % 25 == 1)
        .collect()
}

/// Probability `(|free| / |U(Z/25)|)^t` that all `t` primes of `D` other
/// than 5 are free, which is the density of radicands where `zeta_5` is a norm.
pub fn zeta_norm_density(t: u32) -> Result<BigRational> {
    if t == 0 {
        return Err(Error::InvalidPrimeCount(t));
    }
    let ratio = BigRational::new(
        BigInt::from(free_residues_mod25().len()),
        BigInt::from(units_mod25().len()),
    );
    Ok((0..t).fold(BigRational::one(), |acc, _| acc * &ratio))
}
