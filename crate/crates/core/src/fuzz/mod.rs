//! Seeded generators and the differential fuzz harness.
//!
//! Every trial draws an arrangement from one family, runs each applicable
//! [`Check`] and tallies passes and failures. Trials run in parallel; the
//! report depends only on the [`FuzzConfig`].

mod checks;
mod gen;
mod rng;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{format_arr, parse_arr};
use crate::nomenclature::{realize_nomenclature_with, search_infinity_permutation, Ladder};
use crate::symbolic::ConditionReading;

pub use checks::{canonical_nomenclature, shrink, Case, Check, Mismatch, RECONSTRUCT_MAX};
pub use gen::{gen_cyclic, gen_generic, gen_infinity_type, random_cycle, random_nomenclature, GENERIC_BOX};
pub use rng::SplitMix64;

/// Largest arrangement the fuzzer will draw.
pub const MAX_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Random lines in a small integer box.
    Generic,
    /// Realizations of random nomenclatures.
    Infinity,
    /// Realizations of random gonality cycles.
    Cyclic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Generic => "generic",
            Family::Infinity => "infinity",
            Family::Cyclic => "cyclic",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Family::Generic),
            "infinity" => Ok(Family::Infinity),
            "cyclic" => Ok(Family::Cyclic),
            _ => Err(Error::BadToken(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub family: Family,
    #[serde(default)]
    pub reading: ConditionReading,
}

impl FuzzConfig {
    pub fn new(family: Family, seed: u64, trials: usize, n_min: usize, n_max: usize) -> Self {
        FuzzConfig { seed, trials, n_min, n_max, family, reading: ConditionReading::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let min = if self.family == Family::Cyclic { 4 } else { 3 };
        for n in [self.n_min, self.n_max] {
            if !(min..=MAX_N).contains(&n) {
                return Err(Error::NOutOfRange { min, max: MAX_N, got: n });
            }
        }
        if self.n_min > self.n_max {
            return Err(Error::NOutOfRange { min: self.n_min, max: MAX_N, got: self.n_max });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCount {
    pub pass: u64,
    pub fail: u64,
}

/// Observations that are not pass/fail checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Greedy canonical permutation failed although backtracking found one.
    pub note_violations: u64,
    /// Arrangements with no infinity permutation at all.
    pub not_infinity_type: u64,
    /// Realizations of one nomenclature on two ladders that are not
    /// isomorphic line by line.
    pub non_isomorphic_realizations: u64,
    /// Pairs where per-line and all-lines-at-once reversal disagree.
    pub iso_reading_disagreements: u64,
    /// Generator errors (realization failures), also counted as failures.
    pub generator_errors: u64,
}

impl Diagnostics {
    fn add(&mut self, o: &Diagnostics) {
        self.note_violations += o.note_violations;
        self.not_infinity_type += o.not_infinity_type;
        self.non_isomorphic_realizations += o.non_isomorphic_realizations;
        self.iso_reading_disagreements += o.iso_reading_disagreements;
        self.generator_errors += o.generator_errors;
    }
}

/// A self-contained failing case: enough to re-run the check from text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub check: String,
    pub reading: ConditionReading,
    /// Size before shrinking.
    pub original_n: usize,
    /// The arrangement in `arr v1` format.
    pub arrangement: String,
    pub nomenclature: Option<String>,
    pub cycle: Option<String>,
    pub position: Option<usize>,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    fn record(trial: usize, check: Check, reading: ConditionReading, original_n: usize, case: &Case, m: Mismatch) -> Self {
        Counterexample {
            trial,
            check: check.name(),
            reading,
            original_n,
            arrangement: format_arr(&case.arr),
            nomenclature: case.nom.as_ref().map(ToString::to_string),
            cycle: case.cycle.as_ref().map(ToString::to_string),
            position: m.position,
            expected: m.expected,
            actual: m.actual,
        }
    }

    pub fn case(&self) -> Result<Case> {
        Ok(Case {
            arr: parse_arr(&self.arrangement)?,
            nom: self.nomenclature.as_deref().map(str::parse).transpose()?,
            cycle: self.cycle.as_deref().map(str::parse).transpose()?,
        })
    }

    /// Re-runs the recorded check; `Some` if it still fails.
    pub fn replay(&self) -> Result<Option<Mismatch>> {
        let check = Check::parse(&self.check).ok_or_else(|| Error::BadToken(self.check.clone()))?;
        Ok(self.case()?.first_failure(check, self.reading))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub trials: usize,
    pub checks: BTreeMap<String, CheckCount>,
    pub diagnostics: Diagnostics,
    pub counterexample: Option<Counterexample>,
}

impl FuzzReport {
    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.fail).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadFile { line: e.line(), msg: e.to_string() })
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        let reading = match c.reading {
            ConditionReading::Mirrored => "mirrored",
            ConditionReading::Literal => "literal",
        };
        writeln!(
            f,
            "fuzz family={} seed={} trials={} n={}..{} reading={}",
            c.family, c.seed, self.trials, c.n_min, c.n_max, reading
        )?;
        for (name, count) in &self.checks {
            writeln!(f, "check {name}: pass {} fail {}", count.pass, count.fail)?;
        }
        let d = &self.diagnostics;
        writeln!(f, "note-violations: {}", d.note_violations)?;
        writeln!(f, "not-infinity-type: {}", d.not_infinity_type)?;
        writeln!(f, "non-isomorphic-realizations: {}", d.non_isomorphic_realizations)?;
        writeln!(f, "iso-reading-disagreements: {}", d.iso_reading_disagreements)?;
        writeln!(f, "generator-errors: {}", d.generator_errors)?;
        writeln!(f, "failures: {}", self.failures())?;
        match &self.counterexample {
            None => writeln!(f, "counterexample: none"),
            Some(cx) => {
                writeln!(f, "counterexample: trial {} check {} (shrunk from n={})", cx.trial, cx.check, cx.original_n)?;
                if let Some(nom) = &cx.nomenclature {
                    writeln!(f, "  nomenclature: {nom}")?;
                }
                if let Some(cycle) = &cx.cycle {
                    writeln!(f, "  cycle: {cycle}")?;
                }
                if let Some(p) = cx.position {
                    writeln!(f, "  position: {p}")?;
                }
                writeln!(f, "  expected: {}", cx.expected)?;
                writeln!(f, "  actual: {}", cx.actual)?;
                for line in cx.arrangement.lines() {
                    writeln!(f, "  | {line}")?;
                }
                Ok(())
            }
        }
    }
}

struct TrialOutcome {
    counts: BTreeMap<Check, CheckCount>,
    diagnostics: Diagnostics,
    first_failure: Option<(Check, Case)>,
    generator_error: Option<String>,
}

/// Draws the case for trial `index`: its size, then the family's generator.
pub fn draw_case(cfg: &FuzzConfig, index: usize) -> Result<Case> {
    let mut rng = SplitMix64::new(SplitMix64::nth_output(cfg.seed, index as u64));
    let n = rng.range(cfg.n_min as i64, cfg.n_max as i64) as usize;
    let seed = rng.next_u64();
    Ok(match cfg.family {
        Family::Infinity => {
            let (nom, arr) = gen_infinity_type(n, seed)?;
            Case { arr, nom: Some(nom), cycle: None }
        }
        Family::Cyclic => {
            let (cycle, arr) = gen_cyclic(n, seed)?;
            let nom = canonical_nomenclature(&arr);
            Case { arr, nom, cycle: Some(cycle) }
        }
        Family::Generic => {
            let arr = gen_generic(n, seed);
            Case { nom: canonical_nomenclature(&arr), arr, cycle: None }
        }
    })
}

fn diagnose(cfg: &FuzzConfig, case: &Case) -> Diagnostics {
    let mut d = Diagnostics::default();
    let search = search_infinity_permutation(&case.arr);
    d.note_violations = search.note_violation() as u64;
    d.not_infinity_type = search.permutation().is_none() as u64;
    if cfg.family == Family::Infinity {
        let nom = case.nom.as_ref().expect("infinity family carries a nomenclature");
        if let Ok(other) = realize_nomenclature_with(nom, Ladder::IntegerSlope) {
            let per_line = case.arr.is_isomorphic_trivial(&other);
            let global = case.arr.is_isomorphic_trivial_global(&other);
            d.non_isomorphic_realizations = !per_line as u64;
            d.iso_reading_disagreements = (per_line != global) as u64;
        }
    }
    d
}

fn run_trial(cfg: &FuzzConfig, index: usize) -> TrialOutcome {
    let mut out = TrialOutcome {
        counts: BTreeMap::new(),
        diagnostics: Diagnostics::default(),
        first_failure: None,
        generator_error: None,
    };
    let case = match draw_case(cfg, index) {
        Ok(case) => case,
        Err(e) => {
            out.diagnostics.generator_errors = 1;
            out.counts.entry(Check::Roundtrip).or_default().fail += 1;
            out.generator_error = Some(e.to_string());
            return out;
        }
    };
    out.diagnostics = diagnose(cfg, &case);
    for check in case.applicable() {
        let count = out.counts.entry(check).or_default();
        for unit in case.evaluate(check, cfg.reading) {
            match unit {
                None => count.pass += 1,
                Some(_) => {
                    count.fail += 1;
                    if out.first_failure.is_none() {
                        out.first_failure = Some((check, case.clone()));
                    }
                }
            }
        }
    }
    out
}

pub fn fuzz_differential(cfg: &FuzzConfig) -> Result<FuzzReport> {
    cfg.validate()?;
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials).into_par_iter().map(|k| run_trial(cfg, k)).collect();

    let mut checks: BTreeMap<String, CheckCount> = BTreeMap::new();
    let mut diagnostics = Diagnostics::default();
    let mut counterexample = None;
    for (trial, o) in outcomes.into_iter().enumerate() {
        for (check, c) in o.counts {
            let total = checks.entry(check.name()).or_default();
            total.pass += c.pass;
            total.fail += c.fail;
        }
        diagnostics.add(&o.diagnostics);
        if counterexample.is_some() {
            continue;
        }
        if let Some((check, case)) = o.first_failure {
            let small = shrink(&case, check, cfg.reading);
            let m = small.first_failure(check, cfg.reading).expect("shrinking keeps the failure");
            counterexample = Some(Counterexample::record(trial, check, cfg.reading, case.arr.n(), &small, m));
        } else if let Some(err) = o.generator_error {
            counterexample = Some(Counterexample {
                trial,
                check: Check::Roundtrip.name(),
                reading: cfg.reading,
                original_n: 0,
                arrangement: String::new(),
                nomenclature: None,
                cycle: None,
                position: None,
                expected: "generator succeeds".into(),
                actual: err,
            });
        }
    }
    Ok(FuzzReport { config: cfg.clone(), trials: cfg.trials, checks, diagnostics, counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_run() {
        let r = fuzz_differential(&FuzzConfig::new(Family::Infinity, 1, 0, 3, 5)).unwrap();
        assert_eq!(r.trials, 0);
        assert!(r.checks.is_empty());
        assert!(r.counterexample.is_none());
    }

    #[test]
    fn config_validation() {
        assert!(FuzzConfig::new(Family::Cyclic, 1, 1, 3, 5).validate().is_err());
        assert!(FuzzConfig::new(Family::Infinity, 1, 1, 6, 5).validate().is_err());
        assert!(FuzzConfig::new(Family::Generic, 1, 1, 3, 65).validate().is_err());
        assert!(FuzzConfig::new(Family::Generic, 1, 1, 3, 3).validate().is_ok());
    }

    #[test]
    fn small_runs_are_clean_and_reproducible() {
        for family in [Family::Infinity, Family::Cyclic, Family::Generic] {
            let cfg = FuzzConfig::new(family, 17, 25, 4, 7);
            let a = fuzz_differential(&cfg).unwrap();
            assert!(a.is_clean(), "{a}");
            assert_eq!(a.to_json(), fuzz_differential(&cfg).unwrap().to_json());
            assert_eq!(FuzzReport::from_json(&a.to_json()).unwrap(), a);
        }
    }

    #[test]
    fn literal_reading_produces_a_replayable_counterexample() {
        let mut cfg = FuzzConfig::new(Family::Infinity, 3, 300, 4, 8);
        cfg.reading = ConditionReading::Literal;
        let r = fuzz_differential(&cfg).unwrap();
        assert!(!r.is_clean());
        let cx = r.counterexample.as_ref().unwrap();
        assert!(cx.check.starts_with("infinity-line"), "{}", cx.check);
        assert!(cx.replay().unwrap().is_some());
        // the same case is fine under the corrected reading
        let mut fixed = cx.clone();
        fixed.reading = ConditionReading::Mirrored;
        assert!(fixed.replay().unwrap().is_none());
    }
}
