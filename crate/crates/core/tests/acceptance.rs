//! Acceptance suite. Every test prints one `PASS`/`FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use quintic_dpf::algebra::{
    idempotents, is_scalar_multiple, stable_kernel_lines, tau_act, ExponentVector,
};
use quintic_dpf::arith::residue_tag;
use quintic_dpf::dataset::{embedded, type_frequencies, FieldRecord};
use quintic_dpf::dpf::{admissible_types, eligibility_pattern, polya_decision, DpfType, TypeSet};
use quintic_dpf::invariants::{FieldInvariants, Species};
use quintic_dpf::multiplicity::{
    formula_hypotheses_hold, multiplicity_bruteforce, multiplicity_formula,
};
use quintic_dpf::radicand::{enumerate_normalized, Radicand, QUINTIC};
use quintic_dpf::relations::{free_residues_mod25, kobayashi_qplus, zeta_norm_density};

fn report(id: u32, title: &str, ok: bool, detail: &str) {
    println!(
        "criterion {id:>2} {} {title}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} ({title}) failed: {detail}");
}

fn inv(d: u64) -> FieldInvariants {
    FieldInvariants::compute(&Radicand::quintic(d).unwrap()).unwrap()
}

fn rows() -> Vec<FieldRecord> {
    embedded()
}

#[test]
fn criterion_01_golden_table() {
    let start = Instant::now();
    let rows = rows();
    let mut mismatches = Vec::new();
    for r in &rows {
        let i = inv(r.d);
        if i.species != r.species {
            mismatches.push(format!("D={} species", r.d));
        }
        if i.conductor4 != r.f4 {
            mismatches.push(format!("D={} f4", r.d));
        }
        if i.multiplicity != r.m {
            mismatches.push(format!("D={} m", r.d));
        }
    }
    let elapsed = start.elapsed();
    let ok = rows.len() == 125 && mismatches.is_empty() && elapsed < Duration::from_secs(1);
    report(
        1,
        "golden table",
        ok,
        &format!(
            "{} rows, {} mismatches {:?}, {:?}",
            rows.len(),
            mismatches.len(),
            mismatches,
            elapsed
        ),
    );
}

#[test]
fn criterion_02_parry_identity() {
    let rows = rows();
    let violations: Vec<u64> = rows
        .iter()
        .filter(|r| 4 * r.v_l as i64 + r.e as i64 - 5 != r.v_n as i64)
        .map(|r| r.d)
        .collect();
    let spot = |no: u32| {
        let r = &rows[no as usize - 1];
        (r.v_l, r.v_n, r.e)
    };
    let spots_ok = spot(7) == (1, 2, 3) && spot(23) == (2, 5, 2) && spot(32) == (1, 5, 6);
    report(
        2,
        "class number relation V_N = 4 V_L + E - 5",
        violations.is_empty() && spots_ok,
        &format!(
            "{} violations, spot rows 7/23/32 ok = {spots_ok}",
            violations.len()
        ),
    );
}

#[test]
fn criterion_03_kobayashi_consistency() {
    let rows = rows();
    let mut bad = Vec::new();
    for r in &rows {
        let q = r.v_m as i64 - 2 * r.v_l as i64 + 2;
        let independent = (0..=2).contains(&q) && ((r.v_l == 0) == (r.v_m == 0));
        let library = kobayashi_qplus(r.v_l, r.v_m).is_ok();
        if !independent || !library {
            bad.push(r.d);
        }
    }
    report(
        3,
        "Q+ in {0,1,2} and V_L = 0 iff V_M = 0",
        bad.is_empty(),
        &format!("{} violations {:?}", bad.len(), bad),
    );
}

#[test]
fn criterion_04_type_membership() {
    let rows = rows();
    let gamma_eps = TypeSet::of(&[DpfType::Gamma, DpfType::Epsilon]);
    let mut outside = Vec::new();
    let mut prime_rows = 0;
    let mut prime_bad = Vec::new();
    let mut dichotomy_rows = 0;
    let mut dichotomy_exact = 0;
    let mut dichotomy_bad = Vec::new();
    for r in &rows {
        let i = inv(r.d);
        let adm = admissible_types(&i).admissible;
        if !adm.contains(r.dpf_type) {
            outside.push(r.d);
        }
        let tags: Vec<_> = i
            .radicand
            .factorization()
            .primes()
            .map(residue_tag)
            .collect();
        if tags.len() == 1 && !tags[0].is_plus_minus_one() {
            prime_rows += 1;
            if adm.len() != 1 || !adm.contains(r.dpf_type) {
                prime_bad.push(r.d);
            }
        }
        let no_split = tags.iter().all(|t| !t.is_plus_minus_one());
        let bound = tags.iter().any(|t| !t.is_five() && !t.is_free());
        if no_split && bound {
            dichotomy_rows += 1;
            // gamma needs three absolute factors, so T = 2 leaves epsilon alone.
            let expected = if i.counters.conductor_primes >= 3 {
                gamma_eps
            } else {
                TypeSet::of(&[DpfType::Epsilon])
            };
            if adm == gamma_eps {
                dichotomy_exact += 1;
            }
            if adm != expected || !adm.is_subset(gamma_eps) {
                dichotomy_bad.push(r.d);
            }
        }
    }
    let ok = outside.is_empty() && prime_bad.is_empty() && dichotomy_bad.is_empty();
    report(
        4,
        "recorded type admissible",
        ok,
        &format!(
            "{} outside; {prime_rows} prime rows, {} not singleton; {dichotomy_rows} no-split rows, \
             {dichotomy_exact} with exactly {{g,e}}, rest T = 2 giving {{e}}, {} off",
            outside.len(),
            prime_bad.len(),
            dichotomy_bad.len()
        ),
    );
}

#[test]
fn criterion_05_polya_agreement() {
    let annotated: &[(DpfType, bool, &[u64])] = &[
        (DpfType::Delta2, true, &[149, 199, 349, 449, 499, 599]),
        (DpfType::Zeta1, true, &[101]),
        (DpfType::Alpha2, true, &[151, 251, 601]),
        (DpfType::Alpha1, true, &[401, 701]),
        (
            DpfType::Delta2,
            false,
            &[
                19, 29, 59, 79, 89, 109, 179, 229, 239, 269, 389, 409, 439, 479, 509, 569, 619,
                659, 709, 719, 739, 769, 809, 839, 859, 919, 929,
            ],
        ),
        (DpfType::Beta2, true, &[139, 359, 419, 829]),
        (DpfType::Epsilon, true, &[379]),
        (DpfType::Alpha1, false, &[31, 281, 761]),
        (
            DpfType::Alpha2,
            false,
            &[
                11, 41, 61, 71, 131, 181, 241, 311, 331, 431, 491, 541, 571, 631, 661, 691, 811,
                821, 911, 941, 971,
            ],
        ),
        (DpfType::Beta1, true, &[191, 271, 641]),
        (DpfType::Delta1, false, &[211, 421, 461, 521, 881, 991]),
        (
            DpfType::Alpha3,
            false,
            &[319, 551, 589, 627, 649, 869, 899, 957],
        ),
    ];
    let mut checked = 0;
    let mut bad = Vec::new();
    for &(t, polya, ds) in annotated {
        for &d in ds {
            let i = inv(d);
            checked += 1;
            let admissible = admissible_types(&i).admissible.contains(t);
            if !admissible || polya_decision(t, i.counters.conductor_primes) != polya {
                bad.push(d);
            }
        }
    }
    // Prime radicands q not congruent to +-1 mod 5 are always Polya.
    for r in enumerate_normalized(1000, QUINTIC).unwrap() {
        let i = FieldInvariants::compute(&r).unwrap();
        let tags: Vec<_> = r.factorization().primes().map(residue_tag).collect();
        if tags.len() == 1 && !tags[0].is_plus_minus_one() {
            checked += 1;
            let adm = admissible_types(&i).admissible;
            if !adm
                .iter()
                .all(|t| polya_decision(t, i.counters.conductor_primes))
            {
                bad.push(r.value());
            }
        }
        if admissible_types(&i).admissible.contains(DpfType::Alpha3) {
            checked += 1;
            if polya_decision(DpfType::Alpha3, i.counters.conductor_primes) {
                bad.push(r.value());
            }
        }
    }
    for r in rows() {
        if let Some(&(_, polya, _)) = annotated.iter().find(|(_, _, ds)| ds.contains(&r.d)) {
            checked += 1;
            if polya_decision(r.dpf_type, inv(r.d).counters.conductor_primes) != polya {
                bad.push(r.d);
            }
        }
    }
    report(
        5,
        "Polya property iff A = T",
        bad.is_empty(),
        &format!("{checked} decisions, {} disagreements {:?}", bad.len(), bad),
    );
}

#[test]
fn criterion_06_pattern_reproduction() {
    let bad: Vec<u64> = rows()
        .iter()
        .filter(|r| eligibility_pattern(&inv(r.d), Some(r.dpf_type)) != r.pattern)
        .map(|r| r.d)
        .collect();
    report(
        6,
        "eligibility patterns",
        bad.is_empty(),
        &format!("125 rows, {} mismatches {:?}", bad.len(), bad),
    );
}

/// Normalized radicands with the given conductor primes and species,
/// counted without the library.
fn independent_multiplicity(primes: &[u64], species: Species) -> u64 {
    let n = primes.len() as u32;
    let mut count = 0;
    for code in 0..4u64.pow(n) {
        let exps: Vec<u32> = (0..n)
            .map(|j| (code / 4u64.pow(j) % 4) as u32 + 1)
            .collect();
        let value = |k: u32| -> u128 {
            primes
                .iter()
                .zip(&exps)
                .map(|(&q, &e)| (q as u128).pow((e * k) % 5))
                .product()
        };
        let d = value(1);
        let residue = (d % 25) as u64;
        let s = if [1, 7, 18, 24].contains(&residue) {
            Species::Two
        } else if d % 5 == 0 {
            Species::OneA
        } else {
            Species::OneB
        };
        if s == species && (2..5).all(|k| value(k) > d) {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_07_multiplicity_oracle() {
    let start = Instant::now();
    let mut conductors = BTreeSet::new();
    let mut bad = Vec::new();
    let mut fitted = 0;
    for r in enumerate_normalized(1000, QUINTIC).unwrap() {
        let i = FieldInvariants::compute(&r).unwrap();
        if !conductors.insert(i.conductor4.to_string()) {
            continue;
        }
        let c = i.counters;
        let formula = multiplicity_formula(i.species, c.u, c.v).unwrap();
        let oracle = multiplicity_bruteforce(&i.conductor4).unwrap();
        let primes: Vec<u64> = i
            .conductor4
            .primes()
            .filter(|&q| q != 5 || i.species == Species::OneA)
            .collect();
        let independent = independent_multiplicity(&primes, i.species);
        if !formula_hypotheses_hold(i.species, c.v) {
            fitted += 1;
        }
        if formula != oracle || oracle != independent {
            bad.push(r.value());
        }
    }
    let elapsed = start.elapsed();
    let ok = conductors.len() == 670 && bad.is_empty() && elapsed < Duration::from_secs(10);
    report(
        7,
        "multiplicity formula against enumeration",
        ok,
        &format!(
            "{} conductors ({fitted} on the fitted branch), {} mismatches, {:?}",
            conductors.len(),
            bad.len(),
            elapsed
        ),
    );
}

#[test]
fn criterion_08_enumeration_count() {
    let naive: Vec<u64> = (2u64..1000)
        .filter(|&d| {
            let mut f = Vec::new();
            let mut n = d;
            let mut q = 2;
            while n > 1 {
                let mut e = 0;
                while n % q == 0 {
                    n /= q;
                    e += 1;
                }
                if e > 0 {
                    f.push((q as u128, e));
                }
                q += 1;
            }
            f.iter().all(|&(_, e)| e < 5)
                && (2..5).all(|k| {
                    f.iter().map(|&(q, e)| q.pow((e * k) % 5)).product::<u128>() > d as u128
                })
        })
        .collect();
    let lib: Vec<u64> = enumerate_normalized(1000, QUINTIC)
        .unwrap()
        .iter()
        .map(|r| r.value())
        .collect();
    let range = |a: u64, b: u64| lib.iter().filter(|&&d| d > a && d < b).count();
    let counts = (lib.len(), range(0, 50), range(50, 100), range(100, 151));
    let ok = lib == naive && counts == (900, 38, 43, 44);
    report(
        8,
        "normalized radicand counts",
        ok,
        &format!("{counts:?}, library equals naive sieve = {}", lib == naive),
    );
}

fn convolve(p: i64, x: &[i64], y: &[i64]) -> Vec<i64> {
    let n = x.len();
    let mut out = vec![0i64; n];
    for i in 0..n {
        for j in 0..n {
            out[(i + j) % n] += x[i] * y[j];
        }
    }
    out.iter().map(|c| c.rem_euclid(p)).collect()
}

#[test]
fn criterion_09_algebra_suite() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let printed: [(u32, Vec<Vec<i64>>); 2] = [
        (
            5,
            vec![
                vec![4, 4, 4, 4],
                vec![4, 3, 1, 2],
                vec![4, 1, 4, 1],
                vec![4, 2, 1, 3],
            ],
        ),
        (3, vec![vec![2, 2], vec![2, 1]]),
    ];
    for (p, psi) in &printed {
        let lib: Vec<Vec<i64>> = idempotents(*p)
            .unwrap()
            .iter()
            .map(|e| e.coeffs().iter().map(|&c| c as i64).collect())
            .collect();
        if &lib != psi {
            failures.push(format!("idempotents p={p}"));
        }
        let n = psi.len();
        for i in 0..n {
            for j in 0..n {
                let prod = convolve(*p as i64, &psi[i], &psi[j]);
                let want = if i == j { psi[i].clone() } else { vec![0; n] };
                if prod != want {
                    failures.push(format!("psi{i} psi{j} p={p}"));
                }
            }
        }
        let sum: Vec<i64> = (0..n)
            .map(|k| psi.iter().map(|v| v[k]).sum::<i64>() % *p as i64)
            .collect();
        let mut one = vec![0; n];
        one[0] = 1;
        if sum != one {
            failures.push(format!("sum relation p={p}"));
        }
    }
    let ev = ExponentVector::new;
    let orbit_cases = [
        (ev([1, 1, 1, 1]), Some(1)),
        (ev([1, 4, 1, 4]), Some(4)),
        (ev([1, 2, 4, 3]), Some(3)),
        (ev([1, 0, 4, 0]), None),
    ];
    for (v, want) in orbit_cases {
        let [a, b, c, d] = v.0;
        if tau_act(&v).0 != [d, a, b, c] || is_scalar_multiple(&v, &tau_act(&v)) != want {
            failures.push(format!("orbit {:?}", v.0));
        }
    }
    let mut census = Vec::new();
    for n in 0..625u32 {
        let v = [n % 5, n / 5 % 5, n / 25 % 5, n / 125];
        if v == [0; 4] || (v[0] + v[2]) % 5 != 0 || (v[1] + v[3]) % 5 != 0 {
            continue;
        }
        let shifted = [v[3], v[0], v[1], v[2]];
        let stable = (1..5).any(|k| v.iter().zip(&shifted).all(|(x, y)| (k * x) % 5 == *y));
        if stable {
            let inv_lead = (1..5).find(|k| k * v[0] % 5 == 1).unwrap_or(0);
            census.push(v.map(|x| x * inv_lead % 5));
        }
    }
    census.sort_unstable();
    census.dedup();
    let lib_lines: Vec<[u32; 4]> = stable_kernel_lines()
        .iter()
        .map(|v| v.0.map(u32::from))
        .collect();
    if census != vec![[1, 2, 4, 3], [1, 3, 4, 2]] || lib_lines != census {
        failures.push(format!("census {census:?} vs {lib_lines:?}"));
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(1);
    report(
        9,
        "group ring identities",
        ok,
        &format!(
            "{} failures {:?}, {} stable lines, {:?}",
            failures.len(),
            failures,
            census.len(),
            elapsed
        ),
    );
}

#[test]
fn criterion_10_type_statistics() {
    let freq = type_frequencies(&rows(), 100);
    let expected = [
        (DpfType::Alpha1, 1),
        (DpfType::Alpha2, 10),
        (DpfType::Alpha3, 0),
        (DpfType::Beta1, 0),
        (DpfType::Beta2, 7),
        (DpfType::Gamma, 25),
        (DpfType::Delta1, 0),
        (DpfType::Delta2, 8),
        (DpfType::Epsilon, 26),
        (DpfType::Zeta1, 0),
        (DpfType::Zeta2, 0),
        (DpfType::Eta, 1),
        (DpfType::Theta, 3),
    ];
    let bad: Vec<_> = expected.iter().filter(|(t, n)| freq[t] != *n).collect();
    let total: usize = freq.values().sum();
    report(
        10,
        "type frequencies below 100",
        bad.is_empty() && total == 81,
        &format!("total {total}, {} mismatched types", bad.len()),
    );
}

#[test]
fn criterion_11_zeta_norm_density() {
    let units: Vec<u64> = (1..25).filter(|x| x % 5 != 0).collect();
    let free: Vec<u64> = units
        .iter()
        .copied()
        .filter(|&x| (0..4).fold(1, |acc, _| acc * x % 25) == 1)
        .collect();
    let mut bad = Vec::new();
    for t in 1..=6u32 {
        let want = BigRational::new(BigInt::from(1), BigInt::from(5u64.pow(t)));
        let ratio = BigRational::new(BigInt::from(free.len()), BigInt::from(units.len()));
        let from_count = (0..t).fold(BigRational::from_integer(BigInt::from(1)), |acc, _| {
            acc * &ratio
        });
        let lib = zeta_norm_density(t).unwrap();
        if lib != want || from_count != want {
            bad.push(t);
        }
    }
    let ok = units.len() == 20
        && free == vec![1, 7, 18, 24]
        && free == free_residues_mod25()
        && bad.is_empty();
    report(
        11,
        "density 5^-t",
        ok,
        &format!("free residues {free:?}, {} of 6 exponents wrong", bad.len()),
    );
}
