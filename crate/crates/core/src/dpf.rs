//! Differential principal factorization (DPF) types.
//!
//! Each of the thirteen types is pinned down by the dimensions `(U, A, I, R)`
//! of the spaces of unit norms, absolute, intermediate and relative principal
//! factors over `F_5`, together with two flags: whether `zeta_5` or its
//! companion unit `eta` occurs as a norm from `N` to `K`. The rules below cut
//! the thirteen candidates down to the types compatible with the prime
//! factorization of `D`.

use std::fmt;
use std::str::FromStr;

use crate::arith::residue_tag;
use crate::error::{Error, Result};
use crate::invariants::FieldInvariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DpfType {
    Alpha1,
    Alpha2,
    Alpha3,
    Beta1,
    Beta2,
    Gamma,
    Delta1,
    Delta2,
    Epsilon,
    Zeta1,
    Zeta2,
    Eta,
    Theta,
}

/// Invariants of one type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeInvariants {
    pub u: u32,
    pub a: u32,
    pub i: u32,
    pub r: u32,
    pub eta_norm: bool,
    pub zeta_norm: bool,
}

impl DpfType {
    pub const ALL: [DpfType; 13] = [
        DpfType::Alpha1,
        DpfType::Alpha2,
        DpfType::Alpha3,
        DpfType::Beta1,
        DpfType::Beta2,
        DpfType::Gamma,
        DpfType::Delta1,
        DpfType::Delta2,
        DpfType::Epsilon,
        DpfType::Zeta1,
        DpfType::Zeta2,
        DpfType::Eta,
        DpfType::Theta,
    ];

    pub fn invariants(self) -> TypeInvariants {
        let (u, a, i, r, eta_norm, zeta_norm) = match self {
            DpfType::Alpha1 => (2, 1, 0, 2, false, false),
            DpfType::Alpha2 => (2, 1, 1, 1, false, false),
            DpfType::Alpha3 => (2, 1, 2, 0, false, false),
            DpfType::Beta1 => (2, 2, 0, 1, false, false),
            DpfType::Beta2 => (2, 2, 1, 0, false, false),
            DpfType::Gamma => (2, 3, 0, 0, false, false),
            DpfType::Delta1 => (1, 1, 0, 1, true, false),
            DpfType::Delta2 => (1, 1, 1, 0, true, false),
            DpfType::Epsilon => (1, 2, 0, 0, true, false),
            DpfType::Zeta1 => (1, 1, 0, 1, false, true),
            DpfType::Zeta2 => (1, 1, 1, 0, false, true),
            DpfType::Eta => (1, 2, 0, 0, false, true),
            DpfType::Theta => (0, 1, 0, 0, true, true),
        };
        TypeInvariants {
            u,
            a,
            i,
            r,
            eta_norm,
            zeta_norm,
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            DpfType::Alpha1 => "a1",
            DpfType::Alpha2 => "a2",
            DpfType::Alpha3 => "a3",
            DpfType::Beta1 => "b1",
            DpfType::Beta2 => "b2",
            DpfType::Gamma => "g",
            DpfType::Delta1 => "d1",
            DpfType::Delta2 => "d2",
            DpfType::Epsilon => "e",
            DpfType::Zeta1 => "z1",
            DpfType::Zeta2 => "z2",
            DpfType::Eta => "eta",
            DpfType::Theta => "th",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            DpfType::Alpha1 => "α₁",
            DpfType::Alpha2 => "α₂",
            DpfType::Alpha3 => "α₃",
            DpfType::Beta1 => "β₁",
            DpfType::Beta2 => "β₂",
            DpfType::Gamma => "γ",
            DpfType::Delta1 => "δ₁",
            DpfType::Delta2 => "δ₂",
            DpfType::Epsilon => "ε",
            DpfType::Zeta1 => "ζ₁",
            DpfType::Zeta2 => "ζ₂",
            DpfType::Eta => "η",
            DpfType::Theta => "ϑ",
        }
    }

    pub fn name(self, unicode: bool) -> &'static str {
        if unicode {
            self.unicode()
        } else {
            self.ascii()
        }
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for DpfType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

/// Accepts both the ASCII and the Greek spelling.
impl FromStr for DpfType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DpfType::ALL
            .into_iter()
            .find(|t| t.ascii() == s || t.unicode() == s)
            .ok_or_else(|| Error::UnknownType(s.to_string()))
    }
}

/// A subset of the thirteen types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TypeSet(u16);

impl TypeSet {
    pub fn all() -> Self {
        Self((1 << 13) - 1)
    }

    pub fn empty() -> Self {
        Self(0)
    }

    pub fn of(types: &[DpfType]) -> Self {
        Self(types.iter().fold(0, |acc, t| acc | t.bit()))
    }

    pub fn contains(self, t: DpfType) -> bool {
        self.0 & t.bit() != 0
    }

    pub fn intersect(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = DpfType> {
        DpfType::ALL.into_iter().filter(move |t| self.contains(*t))
    }

    pub fn names(self, unicode: bool) -> Vec<&'static str> {
        self.iter().map(|t| t.name(unicode)).collect()
    }
}

/// The constraints applied by [`admissible_types`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `R <= min(2, 2 s4)`.
    RelativeBound,
    /// `I <= min(2, s2 + s4)`.
    IntermediateBound,
    /// `A <= min(3, T)`.
    AbsoluteBound,
    /// `zeta_5` is a norm only if every conductor prime is 5 or free.
    ZetaNorm,
    /// `D = q` prime with `q ≢ ±1 (mod 5)` has a single possible type.
    PrimeRadicand,
    /// No prime of `D` is `≡ ±1 (mod 5)` and some prime `q != 5` is not free.
    SplitFree,
}

impl Rule {
    pub const ORDER: [Rule; 6] = [
        Rule::RelativeBound,
        Rule::IntermediateBound,
        Rule::AbsoluteBound,
        Rule::ZetaNorm,
        Rule::PrimeRadicand,
        Rule::SplitFree,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            Rule::RelativeBound => "relative factors bounded by 2*s4",
            Rule::IntermediateBound => "intermediate factors bounded by s2+s4",
            Rule::AbsoluteBound => "absolute factors bounded by T",
            Rule::ZetaNorm => "zeta is not a norm",
            Rule::PrimeRadicand => "prime radicand",
            Rule::SplitFree => "no split prime",
        }
    }

    /// Types this rule leaves standing for the given field.
    pub fn allowed(self, inv: &FieldInvariants) -> TypeSet {
        let c = inv.counters;
        let keep = |pred: &dyn Fn(TypeInvariants) -> bool| {
            TypeSet::of(
                &DpfType::ALL
                    .into_iter()
                    .filter(|t| pred(t.invariants()))
                    .collect::<Vec<_>>(),
            )
        };
        let d = &inv.radicand;
        let tags: Vec<_> = d.factorization().primes().map(residue_tag).collect();
        match self {
            Rule::RelativeBound => keep(&|ti| ti.r <= (2 * c.s4).min(2)),
            Rule::IntermediateBound => keep(&|ti| ti.i <= (c.s2 + c.s4).min(2)),
            Rule::AbsoluteBound => keep(&|ti| ti.a <= c.conductor_primes.min(3)),
            Rule::ZetaNorm => {
                if tags.iter().all(|t| t.is_five() || t.is_free()) {
                    TypeSet::all()
                } else {
                    keep(&|ti| !ti.zeta_norm)
                }
            }
            Rule::PrimeRadicand => match tags.as_slice() {
                [t] if t.is_five() || t.is_plus_minus_seven_25() => TypeSet::of(&[DpfType::Theta]),
                [t] if t.is_plus_minus_two() => TypeSet::of(&[DpfType::Epsilon]),
                _ => TypeSet::all(),
            },
            Rule::SplitFree => {
                let no_split = tags.iter().all(|t| !t.is_plus_minus_one());
                let some_bound = tags.iter().any(|t| !t.is_five() && !t.is_free());
                if no_split && some_bound {
                    TypeSet::of(&[DpfType::Gamma, DpfType::Epsilon])
                } else {
                    TypeSet::all()
                }
            }
        }
    }
}

/// Surviving types with, for every excluded type, the first rule excluding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeConstraintResult {
    pub admissible: TypeSet,
    pub excluded: Vec<(DpfType, Rule)>,
}

/// Applies `rules` in the given order.
pub fn admissible_with_rules(inv: &FieldInvariants, rules: &[Rule]) -> TypeConstraintResult {
    let mut admissible = TypeSet::all();
    let mut excluded = Vec::new();
    for &rule in rules {
        let next = admissible.intersect(rule.allowed(inv));
        for t in admissible.iter().filter(|t| !next.contains(*t)) {
            excluded.push((t, rule));
        }
        admissible = next;
    }
    TypeConstraintResult {
        admissible,
        excluded,
    }
}

pub fn admissible_types(inv: &FieldInvariants) -> TypeConstraintResult {
    admissible_with_rules(inv, &Rule::ORDER)
}

/// A field of the given type is a Polya field iff every absolute principal
/// factor is generated by a product of ramified primes, i.e. `A = T`.
pub fn polya_decision(t: DpfType, conductor_primes: u32) -> bool {
    t.invariants().a == conductor_primes
}

/// One component of an eligibility pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    /// The condition fails.
    Absent,
    /// The condition holds.
    Cross,
    /// The condition holds but is not realized by the type.
    Partial,
    /// The condition holds and is realized by the type.
    Circled,
}

impl Mark {
    pub fn ascii(self) -> &'static str {
        match self {
            Mark::Absent => "-",
            Mark::Cross => "x",
            Mark::Partial => "(x)",
            Mark::Circled => "ox",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            Mark::Absent => "−",
            Mark::Cross => "×",
            Mark::Partial => "(×)",
            Mark::Circled => "⊗",
        }
    }
}

impl FromStr for Mark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Mark::Absent, Mark::Cross, Mark::Partial, Mark::Circled]
            .into_iter()
            .find(|m| m.ascii() == s || m.unicode() == s)
            .ok_or_else(|| Error::MalformedPattern(s.to_string()))
    }
}

/// Four marks for the conditions:
/// 1. no split prime and some non-free prime,
/// 2. some prime `≡ -1 (mod 5)`,
/// 3. some prime `≡ +1 (mod 5)`,
/// 4. every prime free or equal to 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EligibilityPattern(pub [Mark; 4]);

impl EligibilityPattern {
    pub fn render(&self, unicode: bool) -> String {
        self.0
            .iter()
            .map(|m| if unicode { m.unicode() } else { m.ascii() })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for EligibilityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl FromStr for EligibilityPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let marks: Vec<Mark> = s
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<_>>()
            .map_err(|_| Error::MalformedPattern(s.to_string()))?;
        let marks: [Mark; 4] = marks
            .try_into()
            .map_err(|_| Error::MalformedPattern(s.to_string()))?;
        Ok(Self(marks))
    }
}

/// Pattern of `D`, refined by the type when one is given.
pub fn eligibility_pattern(inv: &FieldInvariants, recorded: Option<DpfType>) -> EligibilityPattern {
    let tags: Vec<_> = inv
        .radicand
        .factorization()
        .primes()
        .map(residue_tag)
        .collect();
    let cross = |b: bool| if b { Mark::Cross } else { Mark::Absent };
    let no_split = tags.iter().all(|t| !t.is_plus_minus_one());
    let mut marks = [
        cross(no_split && tags.iter().any(|t| !t.is_five() && !t.is_free())),
        cross(tags.iter().any(|t| t.is_minus_one())),
        cross(tags.iter().any(|t| t.is_plus_one())),
        cross(tags.iter().all(|t| t.is_five() || t.is_free())),
    ];
    if let Some(t) = recorded {
        let ti = t.invariants();
        if marks[1] == Mark::Cross && ti.i >= 1 {
            marks[1] = Mark::Circled;
        }
        if marks[2] == Mark::Cross {
            if ti.r >= 1 {
                marks[2] = Mark::Circled;
            } else if ti.i >= 1 {
                marks[2] = Mark::Partial;
            }
        }
        if marks[3] == Mark::Cross && ti.zeta_norm {
            marks[3] = Mark::Circled;
        }
    }
    EligibilityPattern(marks)
}

/// A published decision on the Polya property of one field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyaAnnotation {
    pub d: u64,
    pub dpf_type: DpfType,
    pub polya: bool,
}

const ANNOTATED: &[(DpfType, bool, &[u64])] = &[
    (DpfType::Delta2, true, &[149, 199, 349, 449, 499, 599]),
    (DpfType::Zeta1, true, &[101]),
    (DpfType::Alpha2, true, &[151, 251, 601]),
    (DpfType::Alpha1, true, &[401, 701]),
    (
        DpfType::Delta2,
        false,
        &[
            19, 29, 59, 79, 89, 109, 179, 229, 239, 269, 389, 409, 439, 479, 509, 569, 619, 659,
            709, 719, 739, 769, 809, 839, 859, 919, 929,
        ],
    ),
    (DpfType::Beta2, true, &[139, 359, 419, 829]),
    (DpfType::Epsilon, true, &[379]),
    (DpfType::Alpha1, false, &[31, 281, 761]),
    (
        DpfType::Alpha2,
        false,
        &[
            11, 41, 61, 71, 131, 181, 241, 311, 331, 431, 491, 541, 571, 631, 661, 691, 811, 821,
            911, 941, 971,
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

/// All explicitly annotated fields, ascending by `D`.
pub fn polya_annotations() -> Vec<PolyaAnnotation> {
    let mut out: Vec<PolyaAnnotation> = ANNOTATED
        .iter()
        .flat_map(|&(t, polya, ds)| {
            ds.iter().map(move |&d| PolyaAnnotation {
                d,
                dpf_type: t,
                polya,
            })
        })
        .collect();
    out.sort_by_key(|a| a.d);
    out
}

/// Annotation for `D`: an explicit entry, or the prime-radicand case where
/// `D = q ≢ ±1 (mod 5)` always yields a Polya field.
pub fn polya_annotation(inv: &FieldInvariants) -> Option<PolyaAnnotation> {
    let d = inv.radicand.value();
    if let Some(a) = polya_annotations().into_iter().find(|a| a.d == d) {
        return Some(a);
    }
    let only = Rule::PrimeRadicand.allowed(inv);
    if only.len() == 1 {
        let t = only.iter().next().expect("one element");
        return Some(PolyaAnnotation {
            d,
            dpf_type: t,
            polya: true,
        });
    }
    None
}
