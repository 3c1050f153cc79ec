//! Exhaustive verification sweeps over all compositions up to a weight.
//!
//! Compositions are checked in parallel; results are collected back in
//! composition order so reports are identical from run to run.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    characteristic_of, commutant_of, factors_of, matrices, verify_submodule_closure,
};
use crate::composition::{compositions_up_to, Composition};
use crate::hecke::{verify_relations, ActionKind};
use crate::qsym::{
    extended_schur_in_fundamental, extended_schur_in_monomial, fundamental_to_monomial, k_matrix,
    monomial_to_fundamental, schur_in_fundamental, Basis, QSymElement,
};
use num_traits::{One, Signed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Relations,
    Submodule,
    Characteristic,
    Endomorphism,
    Schur,
    Kmatrix,
    Roundtrip,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Relations,
        Check::Submodule,
        Check::Characteristic,
        Check::Endomorphism,
        Check::Schur,
        Check::Kmatrix,
        Check::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Relations => "relations",
            Check::Submodule => "submodule",
            Check::Characteristic => "characteristic",
            Check::Endomorphism => "endomorphism",
            Check::Schur => "schur",
            Check::Kmatrix => "kmatrix",
            Check::Roundtrip => "roundtrip",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<CheckSummary>,
    pub ok: bool,
}

type Outcome = Result<(), String>;

fn check_relations(alpha: &Composition) -> Outcome {
    for kind in [ActionKind::Full, ActionKind::Quotient] {
        let report = verify_relations(alpha, kind);
        if let Some(v) = report.violations.first() {
            return Err(format!(
                "alpha={alpha} {kind}: {:?} fails at i={} j={} on {:?}",
                v.relation,
                v.i,
                v.j,
                v.tableau.rows()
            ));
        }
    }
    let mats = matrices(alpha);
    if let Some((rel, i, j)) = mats.relation_failures().first() {
        return Err(format!(
            "alpha={alpha} matrices: {rel:?} fails at i={i} j={j}"
        ));
    }
    Ok(())
}

fn check_submodule(alpha: &Composition) -> Outcome {
    if verify_submodule_closure(alpha) {
        Ok(())
    } else {
        Err(format!("alpha={alpha}: non-extended tableaux not closed"))
    }
}

fn check_characteristic(alpha: &Composition) -> Outcome {
    let mats = matrices(alpha);
    let factors = factors_of(&mats);
    if !factors.matches_descents(mats.order()) {
        return Err(format!("alpha={alpha}: factors differ from descents"));
    }
    let ch = characteristic_of(&factors, alpha.weight());
    let expected = extended_schur_in_fundamental(alpha);
    if ch != expected {
        return Err(format!("alpha={alpha}: characteristic {ch} != {expected}"));
    }
    Ok(())
}

fn check_endomorphism(alpha: &Composition) -> Outcome {
    let mats = matrices(alpha);
    let e = commutant_of(&mats);
    if e.dimension() != 1 {
        return Err(format!(
            "alpha={alpha}: commutant dimension {}",
            e.dimension()
        ));
    }
    if !e.commutes_with(&mats) || !e.contains_identity() {
        return Err(format!(
            "alpha={alpha}: commutant basis failed its own checks"
        ));
    }
    Ok(())
}

fn check_schur(alpha: &Composition) -> Outcome {
    let s = schur_in_fundamental(alpha).map_err(|e| e.to_string())?;
    let e = extended_schur_in_fundamental(alpha);
    if s != e {
        return Err(format!("lambda={alpha}: {e} != {s}"));
    }
    Ok(())
}

fn check_kmatrix(n: usize) -> Outcome {
    let k = k_matrix(n).map_err(|e| e.to_string())?;
    if !k.has_unit_diagonal() {
        return Err(format!("n={n}: diagonal is not all ones"));
    }
    let det = k.determinant();
    if !det.abs().is_one() {
        return Err(format!("n={n}: determinant {det}"));
    }
    Ok(())
}

fn check_roundtrip(alpha: &Composition) -> Outcome {
    let fa = QSymElement::basis_element(Basis::Fundamental, alpha);
    let ma = QSymElement::basis_element(Basis::Monomial, alpha);
    let via_m = fundamental_to_monomial(&fa).and_then(|x| monomial_to_fundamental(&x));
    let via_f = monomial_to_fundamental(&ma).and_then(|x| fundamental_to_monomial(&x));
    if via_m.as_ref() != Ok(&fa) || via_f.as_ref() != Ok(&ma) {
        return Err(format!("alpha={alpha}: basis round trip failed"));
    }
    if extended_schur_in_monomial(alpha)
        .terms()
        .any(|(_, c)| c.is_negative())
    {
        return Err(format!("alpha={alpha}: negative monomial coefficient"));
    }
    Ok(())
}

fn summarize(check: Check, outcomes: Vec<Outcome>) -> CheckSummary {
    let failed = outcomes.iter().filter(|o| o.is_err()).count();
    CheckSummary {
        check,
        passed: outcomes.len() - failed,
        failed,
        first_counterexample: outcomes.into_iter().find_map(Result::err),
    }
}

/// Runs `check` over every composition of weight at most `n` (every
/// partition for `schur`, every degree `1..=n` for `kmatrix`).
pub fn run_check(check: Check, n: usize) -> CheckSummary {
    let alphas = compositions_up_to(n);
    let outcomes: Vec<Outcome> = match check {
        Check::Kmatrix => (1..=n).into_par_iter().map(check_kmatrix).collect(),
        Check::Schur => alphas
            .par_iter()
            .filter(|a| a.is_partition())
            .map(check_schur)
            .collect(),
        _ => {
            let f: fn(&Composition) -> Outcome = match check {
                Check::Relations => check_relations,
                Check::Submodule => check_submodule,
                Check::Characteristic => check_characteristic,
                Check::Endomorphism => check_endomorphism,
                Check::Roundtrip => check_roundtrip,
                Check::Schur | Check::Kmatrix => unreachable!(),
            };
            alphas.par_iter().map(f).collect()
        }
    };
    summarize(check, outcomes)
}

pub fn run_checks(n: usize, checks: &[Check]) -> VerifyReport {
    let checks: Vec<CheckSummary> = checks.iter().map(|&c| run_check(c, n)).collect();
    let ok = checks.iter().all(|c| c.failed == 0);
    VerifyReport { n, checks, ok }
}
