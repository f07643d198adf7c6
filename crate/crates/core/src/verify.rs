//! Cross-checks every derivable column of catalog rows.

use std::fmt;

use crate::dataset::FieldRecord;
use crate::dpf::{
    admissible_types, eligibility_pattern, polya_annotation, polya_decision, DpfType, TypeSet,
};
use crate::invariants::FieldInvariants;
use crate::multiplicity::multiplicity_bruteforce;
use crate::radicand::Radicand;
use crate::relations::{kobayashi_qplus, parry_predict_vn};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Species,
    Conductor,
    MultiplicityFormula,
    MultiplicityOracle,
    Parry,
    Kobayashi,
    TrivialClassNumber,
    TypeAdmissible,
    Pattern,
    Polya,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Species,
        Check::Conductor,
        Check::MultiplicityFormula,
        Check::MultiplicityOracle,
        Check::Parry,
        Check::Kobayashi,
        Check::TrivialClassNumber,
        Check::TypeAdmissible,
        Check::Pattern,
        Check::Polya,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Species => "species",
            Check::Conductor => "conductor",
            Check::MultiplicityFormula => "multiplicity-formula",
            Check::MultiplicityOracle => "multiplicity-oracle",
            Check::Parry => "parry",
            Check::Kobayashi => "kobayashi",
            Check::TrivialClassNumber => "trivial-class-number",
            Check::TypeAdmissible => "type-admissible",
            Check::Pattern => "pattern",
            Check::Polya => "polya",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The check has nothing to compare for this row.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub row_no: u32,
    pub d: u64,
    pub check: Check,
    pub status: Status,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn is_clean(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn tally(&self, check: Check) -> Tally {
        let mut t = Tally::default();
        for o in self.outcomes.iter().filter(|o| o.check == check) {
            match o.status {
                Status::Pass => t.passed += 1,
                Status::Fail => t.failed += 1,
                Status::NotApplicable => t.not_applicable += 1,
            }
        }
        t
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in self.failures() {
            writeln!(
                f,
                "FAIL row {} D={} {}: expected {}, computed {}",
                o.row_no, o.d, o.check, o.expected, o.computed
            )?;
        }
        writeln!(
            f,
            "{:<22} {:>6} {:>6} {:>6}",
            "check", "pass", "fail", "n/a"
        )?;
        for c in Check::ALL {
            let t = self.tally(c);
            writeln!(
                f,
                "{:<22} {:>6} {:>6} {:>6}",
                c.name(),
                t.passed,
                t.failed,
                t.not_applicable
            )?;
        }
        write!(
            f,
            "rows: {}, checks: {}, failures: {}",
            self.rows,
            self.outcomes.len(),
            self.failure_count()
        )
    }
}

fn type_names(s: TypeSet) -> String {
    s.names(false).join(" ")
}

fn verify_row(r: &FieldRecord) -> Vec<CheckOutcome> {
    let mut out = Vec::with_capacity(Check::ALL.len());
    let mut push = |check: Check, status: Status, expected: String, computed: String| {
        out.push(CheckOutcome {
            row_no: r.row_no,
            d: r.d,
            check,
            status,
            expected,
            computed,
        })
    };
    let pass = |ok: bool| if ok { Status::Pass } else { Status::Fail };

    let inv = match Radicand::quintic(r.d).and_then(|d| FieldInvariants::compute(&d)) {
        Ok(inv) => inv,
        Err(e) => {
            for c in Check::ALL {
                push(
                    c,
                    Status::Fail,
                    "computable invariants".into(),
                    e.to_string(),
                );
            }
            return out;
        }
    };

    push(
        Check::Species,
        pass(inv.species == r.species),
        r.species.to_string(),
        inv.species.to_string(),
    );
    push(
        Check::Conductor,
        pass(inv.conductor4 == r.f4),
        r.f4.display_leading(5),
        inv.conductor4.display_leading(5),
    );
    push(
        Check::MultiplicityFormula,
        pass(inv.multiplicity == r.m),
        r.m.to_string(),
        inv.multiplicity.to_string(),
    );
    match multiplicity_bruteforce(&inv.conductor4) {
        Ok(m) => push(
            Check::MultiplicityOracle,
            pass(m == r.m),
            r.m.to_string(),
            m.to_string(),
        ),
        Err(e) => push(
            Check::MultiplicityOracle,
            Status::Fail,
            r.m.to_string(),
            e.to_string(),
        ),
    }
    match parry_predict_vn(r.v_l, r.e) {
        Ok(vn) => push(
            Check::Parry,
            pass(vn == r.v_n),
            r.v_n.to_string(),
            vn.to_string(),
        ),
        Err(e) => push(Check::Parry, Status::Fail, r.v_n.to_string(), e.to_string()),
    }
    match kobayashi_qplus(r.v_l, r.v_m) {
        Ok(q) => push(
            Check::Kobayashi,
            Status::Pass,
            "Q+ in 0..=2".into(),
            q.to_string(),
        ),
        Err(e) => push(
            Check::Kobayashi,
            Status::Fail,
            "Q+ in 0..=2".into(),
            e.to_string(),
        ),
    }
    if r.v_n == 0 {
        let ok = r.e == 5 && matches!(r.dpf_type, DpfType::Epsilon | DpfType::Theta);
        push(
            Check::TrivialClassNumber,
            pass(ok),
            "E = 5 and type e or th".into(),
            format!("E = {}, type {}", r.e, r.dpf_type),
        );
    } else {
        push(
            Check::TrivialClassNumber,
            Status::NotApplicable,
            String::new(),
            String::new(),
        );
    }
    let admissible = admissible_types(&inv).admissible;
    push(
        Check::TypeAdmissible,
        pass(admissible.contains(r.dpf_type)),
        r.dpf_type.to_string(),
        type_names(admissible),
    );
    let pattern = eligibility_pattern(&inv, Some(r.dpf_type));
    push(
        Check::Pattern,
        pass(pattern == r.pattern),
        r.pattern.to_string(),
        pattern.to_string(),
    );
    match polya_annotation(&inv) {
        Some(a) => {
            let decided = polya_decision(r.dpf_type, inv.counters.conductor_primes);
            let ok = a.dpf_type == r.dpf_type && decided == a.polya;
            push(
                Check::Polya,
                pass(ok),
                format!("{} polya={}", a.dpf_type, a.polya),
                format!("{} polya={}", r.dpf_type, decided),
            );
        }
        None => push(
            Check::Polya,
            Status::NotApplicable,
            String::new(),
            String::new(),
        ),
    }
    out
}

/// Runs every check on every row, ordered by row then check.
pub fn verify_dataset(records: &[FieldRecord]) -> VerificationReport {
    VerificationReport {
        rows: records.len(),
        outcomes: records.iter().flat_map(verify_row).collect(),
    }
}
