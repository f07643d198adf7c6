//! Group-ring arithmetic over `F_p[<tau>]` for `p` in {3, 5}, where `tau`
//! generates the cyclic Galois group of order `p - 1`.
//!
//! Vectors are indexed by powers of `tau`: `(a, b, c, d)` is
//! `a + b tau + c tau^2 + d tau^3`.

use crate::error::{Error, Result};
use crate::invariants::FieldInvariants;

fn check_prime(p: u32) -> Result<()> {
    if p == 3 || p == 5 {
        Ok(())
    } else {
        Err(Error::UnsupportedPrime(p))
    }
}

/// Primitive root used to identify the roots of unity of order `p - 1` with `U(Z/p)`.
fn generator(p: u32) -> u32 {
    if p == 5 {
        3
    } else {
        2
    }
}

fn inverse_mod(x: u32, p: u32) -> u32 {
    (1..p).find(|y| x * y % p == 1).expect("p is prime")
}

/// An element of `F_p[C_(p-1)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    p: u32,
    coeffs: Vec<u32>,
}

impl GroupRingElement {
    /// Coefficients are reduced mod `p`; their number must be `p - 1`.
    pub fn new(p: u32, coeffs: &[u32]) -> Result<Self> {
        check_prime(p)?;
        let order = p as usize - 1;
        if coeffs.len() != order {
            return Err(Error::DimensionMismatch {
                left: coeffs.len(),
                right: order,
            });
        }
        Ok(Self {
            p,
            coeffs: coeffs.iter().map(|c| c % p).collect(),
        })
    }

    pub fn identity(p: u32) -> Result<Self> {
        let mut c = vec![0; p as usize - 1];
        c[0] = 1;
        Self::new(p, &c)
    }

    pub fn zero(p: u32) -> Result<Self> {
        Self::new(p, &vec![0; p as usize - 1])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.order() != other.order() {
            return Err(Error::DimensionMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let c: Vec<u32> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        Self::new(self.p, &c)
    }

    /// Convolution with exponents of `tau` taken mod the group order.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let n = self.order();
        let mut c = vec![0u32; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[(i + j) % n] = (c[(i + j) % n] + a * b) % self.p;
            }
        }
        Self::new(self.p, &c)
    }
}

pub fn ring_multiply(x: &GroupRingElement, y: &GroupRingElement) -> Result<GroupRingElement> {
    x.multiply(y)
}

/// Central orthogonal idempotents `psi_j = (p-1)^(-1) sum_k chi_j(tau^(-k)) tau^k`
/// with `chi_j(tau) = g^j`, `g` = 3 for `p = 5` and 2 for `p = 3`.
pub fn idempotents(p: u32) -> Result<Vec<GroupRingElement>> {
    check_prime(p)?;
    let order = p - 1;
    let scale = inverse_mod(order % p, p);
    let g_inv = inverse_mod(generator(p), p);
    (0..order)
        .map(|j| {
            let base = (0..j).fold(1, |acc, _| acc * g_inv % p);
            let coeffs: Vec<u32> = (0..order)
                .scan(1u32, |pw, _| {
                    let c = *pw * scale % p;
                    *pw = *pw * base % p;
                    Some(c)
                })
                .collect();
            GroupRingElement::new(p, &coeffs)
        })
        .collect()
}

/// Exponents of `(L, L^tau, L^tau^2, L^tau^3)` mod 5 at a 4-split prime of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub [u8; 4]);

impl ExponentVector {
    pub fn new(entries: [u32; 4]) -> Self {
        Self(entries.map(|e| (e % 5) as u8))
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn scale(&self, k: u32) -> Self {
        Self::new(self.0.map(|e| e as u32 * k))
    }

    /// All `5^4` vectors.
    pub fn all() -> impl Iterator<Item = ExponentVector> {
        (0..625u32).map(|n| Self::new([n % 5, n / 5 % 5, n / 25 % 5, n / 125]))
    }
}

/// `tau` shifts the coefficient of `tau^k` to `tau^(k+1)`: `(a,b,c,d) -> (d,a,b,c)`.
pub fn tau_act(v: &ExponentVector) -> ExponentVector {
    let [a, b, c, d] = v.0;
    ExponentVector([d, a, b, c])
}

/// `lambda` with `w = lambda * v`. The zero pair yields 1.
pub fn is_scalar_multiple(v: &ExponentVector, w: &ExponentVector) -> Option<u8> {
    (1..5u32)
        .chain(std::iter::once(0))
        .find(|&k| v.scale(k) == *w)
        .map(|k| k as u8)
}

/// A semi-local exponent vector at some level of the tower `N / M / L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemiLocal {
    /// Four primes of `N` over one prime of `L`.
    Normal(ExponentVector),
    /// Two primes of `M` over one prime of `L`.
    Intermediate([u8; 2]),
    /// A single exponent at the level of `L`.
    Pure(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormStep {
    NormalToIntermediate,
    NormalToPure,
    IntermediateToPure,
}

/// Norm of a semi-local vector: `(a,b,c,d) -> (a+c, b+d)` and `(x,y) -> x+y`.
pub fn norm_project(v: &SemiLocal, step: NormStep) -> Result<SemiLocal> {
    let add = |x: u8, y: u8| (x + y) % 5;
    match (v, step) {
        (SemiLocal::Normal(e), NormStep::NormalToIntermediate) => {
            let [a, b, c, d] = e.0;
            Ok(SemiLocal::Intermediate([add(a, c), add(b, d)]))
        }
        (SemiLocal::Normal(e), NormStep::NormalToPure) => {
            let [a, b, c, d] = e.0;
            Ok(SemiLocal::Pure(add(add(a, c), add(b, d))))
        }
        (SemiLocal::Intermediate([x, y]), NormStep::IntermediateToPure) => {
            Ok(SemiLocal::Pure(add(*x, *y)))
        }
        (SemiLocal::Normal(_), NormStep::IntermediateToPure) => {
            Err(Error::DimensionMismatch { left: 4, right: 2 })
        }
        (SemiLocal::Intermediate(_), _) => Err(Error::DimensionMismatch { left: 2, right: 4 }),
        (SemiLocal::Pure(_), _) => Err(Error::DimensionMismatch { left: 1, right: 2 }),
    }
}

pub fn in_intermediate_kernel(v: &ExponentVector) -> bool {
    norm_project(&SemiLocal::Normal(*v), NormStep::NormalToIntermediate)
        == Ok(SemiLocal::Intermediate([0, 0]))
}

/// Whether the line through `v` in `ker(N_{N/M})` is `tau`-stable.
pub fn invariant_line_check(v: &ExponentVector) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !in_intermediate_kernel(v) {
        return Err(Error::NotInKernel);
    }
    Ok(is_scalar_multiple(v, &tau_act(v)).is_some())
}

/// `tau`-stable lines in `ker(N_{N/M})`, each represented with leading entry 1.
pub fn stable_kernel_lines() -> Vec<ExponentVector> {
    let mut lines: Vec<ExponentVector> = ExponentVector::all()
        .filter(|v| !v.is_zero() && in_intermediate_kernel(v))
        .filter(|v| invariant_line_check(v) == Ok(true))
        .map(|v| {
            let lead = *v.0.iter().find(|&&e| e != 0).expect("nonzero") as u32;
            v.scale(inverse_mod(lead, 5))
        })
        .collect();
    lines.sort_by_key(|v| v.0);
    lines.dedup();
    lines
}

/// `F_5`-dimensions of the primitive ambiguous ideals: absolute, intermediate
/// kernel and relative kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmbiguousDimensions {
    pub absolute: u32,
    pub intermediate: u32,
    pub relative: u32,
}

pub fn ambiguous_dimensions(inv: &FieldInvariants) -> AmbiguousDimensions {
    let c = inv.counters;
    AmbiguousDimensions {
        absolute: c.conductor_primes,
        intermediate: c.s2 + c.s4,
        relative: 2 * c.s4,
    }
}

/// Named identities of the group-ring layer with their outcome.
pub fn selftest() -> Vec<(&'static str, bool)> {
    let mut out = Vec::new();
    for p in [3u32, 5] {
        let psi = idempotents(p).expect("supported prime");
        let zero = GroupRingElement::zero(p).expect("supported prime");
        let orthogonal = psi.iter().enumerate().all(|(i, a)| {
            psi.iter().enumerate().all(|(j, b)| {
                let prod = a.multiply(b).expect("same ring");
                prod == if i == j { a.clone() } else { zero.clone() }
            })
        });
        let sum = psi
            .iter()
            .try_fold(zero.clone(), |acc, x| acc.add(x))
            .expect("same ring");
        let name_o = if p == 3 {
            "orthogonality over F3[C2]"
        } else {
            "orthogonality over F5[C4]"
        };
        let name_s = if p == 3 {
            "sum relation over F3[C2]"
        } else {
            "sum relation over F5[C4]"
        };
        out.push((name_o, orthogonal));
        out.push((
            name_s,
            sum == GroupRingElement::identity(p).expect("supported prime"),
        ));
    }
    out.push((
        "tau has order 4",
        ExponentVector::all().all(|v| tau_act(&tau_act(&tau_act(&tau_act(&v)))) == v),
    ));
    let ev = |a: [u32; 4]| ExponentVector::new(a);
    out.push((
        "norm vector is tau-invariant",
        tau_act(&ev([1, 1, 1, 1])) == ev([1, 1, 1, 1]),
    ));
    out.push((
        "(1414) is mapped to its inverse",
        is_scalar_multiple(&ev([1, 4, 1, 4]), &tau_act(&ev([1, 4, 1, 4]))) == Some(4),
    ));
    out.push((
        "(1243) is mapped to its third power",
        is_scalar_multiple(&ev([1, 2, 4, 3]), &tau_act(&ev([1, 2, 4, 3]))) == Some(3),
    ));
    out.push((
        "(1040) is mapped to an independent vector",
        is_scalar_multiple(&ev([1, 0, 4, 0]), &tau_act(&ev([1, 0, 4, 0]))).is_none(),
    ));
    out.push((
        "two tau-stable kernel lines",
        stable_kernel_lines() == vec![ev([1, 2, 4, 3]), ev([1, 3, 4, 2])],
    ));
    let naturality = ExponentVector::all().all(|v| {
        let swap = |s: SemiLocal| match s {
            SemiLocal::Intermediate([x, y]) => SemiLocal::Intermediate([y, x]),
            other => other,
        };
        let step = NormStep::NormalToIntermediate;
        norm_project(&SemiLocal::Normal(tau_act(&v)), step)
            == norm_project(&SemiLocal::Normal(v), step).map(swap)
    });
    out.push(("norm commutes with tau", naturality));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radicand::Radicand;
    use proptest::prelude::*;

    fn gre(p: u32, c: &[u32]) -> GroupRingElement {
        GroupRingElement::new(p, c).unwrap()
    }

    #[test]
    fn printed_idempotents() {
        let psi5: Vec<Vec<u32>> = idempotents(5)
            .unwrap()
            .iter()
            .map(|x| x.coeffs().to_vec())
            .collect();
        assert_eq!(
            psi5,
            vec![
                vec![4, 4, 4, 4],
                vec![4, 3, 1, 2],
                vec![4, 1, 4, 1],
                vec![4, 2, 1, 3]
            ]
        );
        let psi3: Vec<Vec<u32>> = idempotents(3)
            .unwrap()
            .iter()
            .map(|x| x.coeffs().to_vec())
            .collect();
        assert_eq!(psi3, vec![vec![2, 2], vec![2, 1]]);
        assert_eq!(idempotents(7), Err(Error::UnsupportedPrime(7)));
    }

    #[test]
    fn multiplication_examples() {
        let psi = idempotents(5).unwrap();
        assert_eq!(psi[0].multiply(&psi[0]).unwrap(), psi[0]);
        assert_eq!(
            psi[1].multiply(&psi[2]).unwrap(),
            GroupRingElement::zero(5).unwrap()
        );
        let x = gre(5, &[1, 2, 3, 4]);
        assert_eq!(
            GroupRingElement::identity(5).unwrap().multiply(&x).unwrap(),
            x
        );
        assert!(matches!(
            x.multiply(&gre(3, &[1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            GroupRingElement::new(5, &[1, 2]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn scalar_multiples() {
        let ev = ExponentVector::new;
        assert_eq!(
            is_scalar_multiple(&ev([1, 2, 4, 3]), &ev([3, 1, 2, 4])),
            Some(3)
        );
        assert_eq!(
            is_scalar_multiple(&ev([1, 0, 4, 0]), &ev([0, 1, 0, 4])),
            None
        );
        assert_eq!(is_scalar_multiple(&ev([0; 4]), &ev([0; 4])), Some(1));
    }

    #[test]
    fn projections() {
        let v = SemiLocal::Normal(ExponentVector::new([1, 2, 4, 3]));
        assert_eq!(
            norm_project(&v, NormStep::NormalToIntermediate),
            Ok(SemiLocal::Intermediate([0, 0]))
        );
        let w = SemiLocal::Normal(ExponentVector::new([1, 1, 1, 1]));
        assert_eq!(
            norm_project(&w, NormStep::NormalToIntermediate),
            Ok(SemiLocal::Intermediate([2, 2]))
        );
        assert_eq!(
            norm_project(&w, NormStep::NormalToPure),
            Ok(SemiLocal::Pure(4))
        );
        assert_eq!(
            norm_project(
                &SemiLocal::Intermediate([1, 4]),
                NormStep::IntermediateToPure
            ),
            Ok(SemiLocal::Pure(0))
        );
        assert!(norm_project(&SemiLocal::Pure(1), NormStep::NormalToPure).is_err());
    }

    #[test]
    fn line_checks() {
        let ev = ExponentVector::new;
        assert_eq!(invariant_line_check(&ev([1, 2, 4, 3])), Ok(true));
        assert_eq!(invariant_line_check(&ev([1, 1, 4, 4])), Ok(false));
        assert_eq!(invariant_line_check(&ev([1, 0, 4, 0])), Ok(false));
        assert_eq!(invariant_line_check(&ev([0; 4])), Err(Error::ZeroVector));
        assert_eq!(
            invariant_line_check(&ev([1, 1, 1, 1])),
            Err(Error::NotInKernel)
        );
    }

    #[test]
    fn dimensions() {
        let dims = |d| {
            let inv = FieldInvariants::compute(&Radicand::quintic(d).unwrap()).unwrap();
            let a = ambiguous_dimensions(&inv);
            (a.absolute, a.intermediate, a.relative)
        };
        assert_eq!(dims(11), (2, 1, 2));
        assert_eq!(dims(6), (3, 0, 0));
        assert_eq!(dims(319), (3, 2, 2));
    }

    #[test]
    fn selftest_passes() {
        for (name, ok) in selftest() {
            assert!(ok, "{name}");
        }
    }

    proptest! {
        #[test]
        fn multiplication_is_commutative_and_associative(
            a in proptest::array::uniform4(0u32..5),
            b in proptest::array::uniform4(0u32..5),
            c in proptest::array::uniform4(0u32..5),
        ) {
            let (x, y, z) = (gre(5, &a), gre(5, &b), gre(5, &c));
            prop_assert_eq!(x.multiply(&y).unwrap(), y.multiply(&x).unwrap());
            prop_assert_eq!(
                x.multiply(&y).unwrap().multiply(&z).unwrap(),
                x.multiply(&y.multiply(&z).unwrap()).unwrap()
            );
        }

        #[test]
        fn idempotents_decompose_every_element(a in proptest::array::uniform4(0u32..5)) {
            let x = gre(5, &a);
            let parts = idempotents(5).unwrap().iter().map(|e| e.multiply(&x).unwrap()).collect::<Vec<_>>();
            let sum = parts.iter().try_fold(GroupRingElement::zero(5).unwrap(), |acc, y| acc.add(y)).unwrap();
            prop_assert_eq!(sum, x);
        }
    }
}
