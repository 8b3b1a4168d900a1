//! Runs both pipelines on words and checks the bounds and identities that
//! positive braid closures must satisfy.

use std::collections::BTreeMap;
use std::io::Write;

use braidsig_core::goeritz::{signature_gl, signature_gl_undivided};
use braidsig_core::seifert::signature_seifert;
use braidsig_core::{BraidWord, Family, FamilySpec, InvariantReport, Method};
use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};

/// Largest number of words (all lengths together) an exhaustive run may visit.
pub const DEFAULT_BUDGET: u64 = 1_500_000;

/// Largest word length for which the appendix check also runs the pipelines.
pub const DEFAULT_APPENDIX_BUDGET: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Both pipelines give the same signature and |det|.
    Agreement,
    /// `-sigma <= b1`.
    UpperBound,
    /// `-sigma > b1 / 8`, any strand count.
    EighthBound,
    /// `-sigma > b1 / 2`, at most four strands.
    HalfBound,
    /// `-sigma >= ceil(b1 / 2 + 1)`, at most three strands and `b1 >= 2`.
    ThreeStrandBound,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Agreement => "agreement",
            Check::UpperBound => "upper-bound",
            Check::EighthBound => "eighth-bound",
            Check::HalfBound => "half-bound",
            Check::ThreeStrandBound => "three-strand-bound",
        }
    }
}

/// Signature data from both pipelines, which must agree.
pub fn evaluate(word: &BraidWord) -> Result<InvariantReport> {
    let seifert = signature_seifert(word)?;
    let gl = signature_gl(word)?;
    if seifert.signature != gl.signature || seifert.determinant != gl.determinant {
        return Err(VerifyError::PipelineDisagreement {
            word: word.to_string(),
            seifert_sigma: seifert.signature,
            seifert_det: seifert.determinant.to_string(),
            gl_sigma: gl.signature,
            gl_det: gl.determinant.to_string(),
        });
    }
    Ok(InvariantReport {
        method: Method::BothAgree,
        ..seifert
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedWord {
    pub report: InvariantReport,
    pub passed: Vec<Check>,
}

fn bound_checks(report: &InvariantReport) -> (Vec<Check>, Option<(Check, String)>) {
    let mut passed = vec![Check::Agreement];
    let b1 = report.betti as i64;
    if b1 == 0 {
        return (passed, None);
    }
    let neg = -report.signature;
    let strands = report.word.strands();
    let mut checks = vec![
        (
            Check::UpperBound,
            neg <= b1,
            format!("-sigma={neg} > b1={b1}"),
        ),
        (
            Check::EighthBound,
            8 * neg > b1,
            format!("8*(-sigma)={} <= b1={b1}", 8 * neg),
        ),
    ];
    if strands <= 4 {
        checks.push((
            Check::HalfBound,
            2 * neg > b1,
            format!("2*(-sigma)={} <= b1={b1}", 2 * neg),
        ));
    }
    if strands <= 3 && b1 >= 2 {
        // -sigma is an integer, so -sigma >= ceil(b1/2 + 1) iff 2(-sigma) >= b1 + 2.
        checks.push((
            Check::ThreeStrandBound,
            2 * neg >= b1 + 2,
            format!("-sigma={neg} < ceil(b1/2 + 1) with b1={b1}"),
        ));
    }
    for (check, ok, detail) in checks {
        if !ok {
            return (passed, Some((check, detail)));
        }
        passed.push(check);
    }
    (passed, None)
}

/// Both pipelines plus every bound that applies to the word.
pub fn check_word(word: &BraidWord) -> Result<CheckedWord> {
    let report = evaluate(word)?;
    let (passed, failure) = bound_checks(&report);
    if let Some((check, detail)) = failure {
        return Err(VerifyError::BoundViolation {
            word: word.to_string(),
            check: check.name(),
            detail,
        });
    }
    Ok(CheckedWord { report, passed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub word: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinRatio {
    pub numerator: i64,
    pub denominator: i64,
    pub witness: String,
}

impl MinRatio {
    pub fn ratio(&self) -> Rational64 {
        Rational64::new(self.numerator, self.denominator)
    }
}

/// One line of the results stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordRecord {
    pub word: String,
    pub b1: usize,
    pub sigma: i64,
    pub det: String,
    pub nullity: usize,
    pub components: usize,
    pub checks: Vec<String>,
}

impl WordRecord {
    pub fn new(report: &InvariantReport, passed: &[Check]) -> Self {
        WordRecord {
            word: report.word.to_string(),
            b1: report.betti,
            sigma: report.signature,
            det: report.determinant.to_string(),
            nullity: report.nullity,
            components: report.components,
            checks: passed.iter().map(|c| c.name().to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub strands: usize,
    pub max_length: usize,
    pub words_examined: u64,
    pub canonical_classes: u64,
    pub violations: Vec<Violation>,
    pub min_ratio: Option<MinRatio>,
    pub pass_counts: BTreeMap<String, u64>,
    pub seed: Option<u64>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateConfig {
    pub strands: usize,
    pub max_length: usize,
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    pub budget: u64,
}

impl EnumerateConfig {
    pub fn new(strands: usize, max_length: usize) -> Self {
        EnumerateConfig {
            strands,
            max_length,
            workers: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Number of words of length `0..=max_length` on `strands` strands.
pub fn word_count(strands: usize, max_length: usize) -> u128 {
    let base = strands.saturating_sub(1) as u128;
    (0..=max_length as u32).map(|l| base.pow(l)).sum()
}

fn decode(strands: usize, len: usize, mut index: u64) -> BraidWord {
    let base = strands as u64 - 1;
    let mut letters = vec![0u32; len];
    for slot in letters.iter_mut().rev() {
        *slot = (index % base) as u32 + 1;
        index /= base;
    }
    BraidWord::new(strands, letters).expect("letters in range")
}

/// Every word of length `0..=max_length`, shortest first, lexicographic
/// within a length.
pub fn all_words(strands: usize, max_length: usize) -> impl Iterator<Item = BraidWord> {
    let base = strands.max(2) as u64 - 1;
    (0..=max_length)
        .flat_map(move |len| (0..base.pow(len as u32)).map(move |i| decode(strands, len, i)))
}

enum Outcome {
    Checked(CheckedWord),
    Failed {
        report: Option<InvariantReport>,
        passed: Vec<Check>,
        violation: Violation,
    },
}

fn examine(word: &BraidWord) -> Outcome {
    let report = match evaluate(word) {
        Ok(r) => r,
        Err(e) => {
            return Outcome::Failed {
                report: None,
                passed: Vec::new(),
                violation: Violation {
                    word: word.to_string(),
                    check: Check::Agreement.name().to_string(),
                    detail: e.to_string(),
                },
            }
        }
    };
    match bound_checks(&report) {
        (passed, None) => Outcome::Checked(CheckedWord { report, passed }),
        (passed, Some((check, detail))) => Outcome::Failed {
            violation: Violation {
                word: word.to_string(),
                check: check.name().to_string(),
                detail,
            },
            report: Some(report),
            passed,
        },
    }
}

/// Visits every word up to `max_length`, checks one representative per
/// canonical class, and optionally streams a [`WordRecord`] per class to
/// `results`. Output does not depend on the worker count.
pub fn enumerate_and_verify(
    config: &EnumerateConfig,
    mut results: Option<&mut dyn Write>,
) -> Result<VerificationSummary> {
    let strands = config.strands;
    if !(2..=5).contains(&strands) {
        return Err(VerifyError::StrandsOutOfRange(strands));
    }
    let words = word_count(strands, config.max_length);
    if words > config.budget as u128 {
        return Err(VerifyError::BudgetExceeded {
            words,
            budget: config.budget,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| VerifyError::PreconditionViolated(e.to_string()))?;

    let mut summary = VerificationSummary {
        strands,
        max_length: config.max_length,
        words_examined: 0,
        canonical_classes: 0,
        violations: Vec::new(),
        min_ratio: None,
        pass_counts: BTreeMap::new(),
        seed: None,
    };
    let mut best: Option<Rational64> = None;
    for len in 0..=config.max_length {
        let count = (strands as u64 - 1).pow(len as u32);
        let outcomes: Vec<Outcome> = pool.install(|| {
            (0..count)
                .into_par_iter()
                .filter_map(|idx| {
                    let word = decode(strands, len, idx);
                    word.is_canonical().then(|| examine(&word))
                })
                .collect()
        });
        summary.words_examined += count;
        summary.canonical_classes += outcomes.len() as u64;
        for outcome in outcomes {
            let (report, passed) = match outcome {
                Outcome::Checked(c) => (Some(c.report), c.passed),
                Outcome::Failed {
                    report,
                    passed,
                    violation,
                } => {
                    summary.violations.push(violation);
                    (report, passed)
                }
            };
            for check in &passed {
                *summary
                    .pass_counts
                    .entry(check.name().to_string())
                    .or_default() += 1;
            }
            let Some(report) = report else { continue };
            if report.betti >= 1 {
                let ratio = Rational64::new(-report.signature, report.betti as i64);
                if best.is_none_or(|b| ratio < b) {
                    best = Some(ratio);
                    summary.min_ratio = Some(MinRatio {
                        numerator: *ratio.numer(),
                        denominator: *ratio.denom(),
                        witness: report.word.to_string(),
                    });
                }
            }
            if let Some(out) = results.as_deref_mut() {
                serde_json::to_writer(&mut *out, &WordRecord::new(&report, &passed))?;
                out.write_all(b"\n")?;
            }
        }
    }
    Ok(summary)
}

/// Expected `(-sigma, b1)` for the four example families.
pub fn expected_family_values(family: Family, n: usize) -> Option<(i64, usize)> {
    let n4 = 4 * n as i64;
    let n8 = 8 * n;
    match family {
        Family::Alpha => Some((n4 + 2, n8 + 2)),
        Family::AlphaTilde => Some((n4 + 3, n8 + 3)),
        Family::Beta => Some((n4 + 1, n8 + 1)),
        Family::BetaTilde => Some((n4 + 2, n8 + 2)),
        Family::Torus => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub family: String,
    pub n: usize,
    pub word: String,
    pub neg_sigma: i64,
    pub b1: usize,
    pub expected_neg_sigma: i64,
    pub expected_b1: usize,
    pub components: usize,
    pub ok: bool,
}

/// Computed values for `n = 1..=n_max`, without judging them.
pub fn family_table(n_max: usize) -> Result<Vec<FamilyRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for family in Family::EXAMPLES {
            let word = FamilySpec::new(family, n).word()?;
            let report = evaluate(&word)?;
            let (expected_neg_sigma, expected_b1) =
                expected_family_values(family, n).expect("example family");
            let knot_ok = family != Family::BetaTilde || report.components == 1;
            rows.push(FamilyRow {
                family: family.name().to_string(),
                n,
                word: word.to_string(),
                neg_sigma: -report.signature,
                b1: report.betti,
                expected_neg_sigma,
                expected_b1,
                components: report.components,
                ok: knot_ok
                    && -report.signature == expected_neg_sigma
                    && report.betti == expected_b1,
            });
        }
    }
    Ok(rows)
}

pub fn verify_families(n_max: usize) -> Result<Vec<FamilyRow>> {
    if n_max == 0 {
        return Err(VerifyError::PreconditionViolated(
            "n_max must be at least 1".into(),
        ));
    }
    let rows = family_table(n_max)?;
    if let Some(row) = rows.iter().find(|r| !r.ok) {
        return Err(VerifyError::FamilyMismatch {
            family: row.family.clone(),
            n: row.n,
            detail: format!(
                "expected (-sigma, b1) = ({}, {}), got ({}, {}) with {} components",
                row.expected_neg_sigma, row.expected_b1, row.neg_sigma, row.b1, row.components
            ),
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistShift {
    pub word: String,
    pub k: usize,
    pub sigma: i64,
    pub sigma_twisted: i64,
    pub holds: bool,
}

/// Prepending `k` full twists to a 3-braid lowers the signature by `8k`.
pub fn verify_twist_shift(word: &BraidWord, k: usize) -> Result<TwistShift> {
    if k == 0 {
        return Err(VerifyError::PreconditionViolated(
            "k must be at least 1".into(),
        ));
    }
    let twisted = word.prepend_half_twists(4 * k)?;
    let sigma = evaluate(word)?.signature;
    let sigma_twisted = evaluate(&twisted)?.signature;
    Ok(TwistShift {
        word: word.to_string(),
        k,
        sigma,
        sigma_twisted,
        holds: -sigma_twisted == -sigma + 8 * k as i64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaddleOutcome {
    pub word: String,
    pub position: usize,
    pub smoothed: String,
    pub sigma: i64,
    pub sigma_smoothed: i64,
    pub holds: bool,
}

impl SaddleOutcome {
    pub fn delta(&self) -> i64 {
        self.sigma_smoothed - self.sigma
    }
}

/// Smoothing one crossing changes the signature by at most one.
pub fn verify_saddle_bound(word: &BraidWord, position: usize) -> Result<SaddleOutcome> {
    let smoothed = word.delete_letter(position)?;
    let sigma = evaluate(word)?.signature;
    let sigma_smoothed = evaluate(&smoothed)?.signature;
    Ok(SaddleOutcome {
        word: word.to_string(),
        position,
        smoothed: smoothed.to_string(),
        sigma,
        sigma_smoothed,
        holds: (sigma - sigma_smoothed).abs() <= 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCheck {
    pub neg_sigma: i64,
    pub neg_sigma_reduced: i64,
    /// Sum over the summands obtained by cutting at the single letters.
    pub neg_sigma_summands: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueRow {
    pub i: u32,
    pub word: String,
    pub b1: usize,
    pub smoothed: usize,
    /// Every generator in the residue class occurs exactly once.
    pub single_occurrence: bool,
    pub summands: Vec<String>,
    pub chain: Option<ChainCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixReport {
    pub word: String,
    pub b1: usize,
    /// `ceil(3 b1 / 4)`.
    pub required_b1: usize,
    pub best_i: u32,
    pub rows: Vec<ResidueRow>,
    pub bound_holds: bool,
    pub structure_holds: bool,
    pub chain_holds: Option<bool>,
}

impl AppendixReport {
    pub fn holds(&self) -> bool {
        self.bound_holds && self.structure_holds && self.chain_holds != Some(false)
    }
}

/// Keeps only the leftmost occurrence of every generator `k = i (mod 4)`.
/// Words of at most `budget` letters also get the signature chain checked.
pub fn verify_appendix_reduction(word: &BraidWord, budget: usize) -> Result<AppendixReport> {
    if !word.uses_all_generators() {
        return Err(VerifyError::PreconditionViolated(format!(
            "{word} does not use every generator"
        )));
    }
    let b1 = word.betti();
    let required_b1 = (3 * b1).div_ceil(4);
    let with_pipelines = word.len() <= budget;
    let neg_sigma = if with_pipelines {
        Some(-evaluate(word)?.signature)
    } else {
        None
    };
    let mut rows = Vec::new();
    for i in 1..=4u32 {
        let reduced = word.appendix_smooth(i)?;
        let class: Vec<u32> = (1..word.strands() as u32)
            .filter(|k| k % 4 == i % 4)
            .collect();
        let single_occurrence = class.iter().all(|&k| reduced.count_of(k) == 1);
        let cut = BraidWord::new(
            word.strands(),
            reduced
                .letters()
                .iter()
                .copied()
                .filter(|k| k % 4 != i % 4)
                .collect(),
        )?;
        let parts = cut.split_decompose();
        let summands: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        let smoothed = word.len() - reduced.len();
        let chain = match neg_sigma {
            Some(neg_sigma) => {
                let neg_sigma_reduced = -evaluate(&reduced)?.signature;
                let mut neg_sigma_summands = 0;
                for part in &parts {
                    neg_sigma_summands -= evaluate(part)?.signature;
                }
                Some(ChainCheck {
                    neg_sigma,
                    neg_sigma_reduced,
                    neg_sigma_summands,
                    holds: neg_sigma >= neg_sigma_reduced - smoothed as i64
                        && neg_sigma_reduced == neg_sigma_summands,
                })
            }
            None => None,
        };
        rows.push(ResidueRow {
            i,
            word: reduced.to_string(),
            b1: reduced.betti(),
            smoothed,
            single_occurrence,
            summands,
            chain,
        });
    }
    let best = rows
        .iter()
        .max_by_key(|r| (r.b1, std::cmp::Reverse(r.i)))
        .expect("four residues");
    Ok(AppendixReport {
        word: word.to_string(),
        b1,
        required_b1,
        best_i: best.i,
        bound_holds: best.b1 >= required_b1,
        structure_holds: rows.iter().all(|r| r.single_occurrence),
        chain_holds: with_pipelines.then(|| {
            rows.iter()
                .all(|r| r.chain.as_ref().is_some_and(|c| c.holds))
        }),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Additivity {
    pub word: String,
    pub parts: Vec<String>,
    pub part_sigmas: Vec<i64>,
    pub sigma_seifert: i64,
    pub sigma_goeritz: i64,
    pub holds: bool,
}

/// For a split word: the Seifert form of the whole word and the Goeritz
/// form of the undivided diagram both give the sum over the parts.
pub fn verify_additivity(word: &BraidWord) -> Result<Additivity> {
    let parts = word.split_decompose();
    if parts.len() < 2 {
        return Err(VerifyError::PreconditionViolated(format!(
            "{word} does not split"
        )));
    }
    let part_sigmas = parts
        .iter()
        .map(|p| Ok(evaluate(p)?.signature))
        .collect::<Result<Vec<_>>>()?;
    let sum: i64 = part_sigmas.iter().sum();
    let sigma_seifert = signature_seifert(word)?.signature;
    let sigma_goeritz = signature_gl_undivided(word)?;
    Ok(Additivity {
        word: word.to_string(),
        parts: parts.iter().map(|p| p.to_string()).collect(),
        part_sigmas,
        sigma_seifert,
        sigma_goeritz,
        holds: sigma_seifert == sum && sigma_goeritz == sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, letters: &[u32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn check_word_examples() {
        // Closes to T(2,4): b1 = 5 - 3 + 1 = 3 and ceil(3/2 + 1) = 3 is attained.
        let c = check_word(&w(3, &[1, 2, 2, 2, 2])).unwrap();
        assert_eq!((c.report.betti, c.report.signature), (3, -3));
        assert!(c.passed.contains(&Check::ThreeStrandBound));

        let bt = FamilySpec::new(Family::BetaTilde, 1).word().unwrap();
        let c = check_word(&bt).unwrap();
        assert_eq!((c.report.betti, c.report.signature), (10, -6));
        assert_eq!(c.report.method, Method::BothAgree);

        let c = check_word(&w(4, &[1, 3])).unwrap();
        assert_eq!(c.report.signature, 0);
        assert_eq!(c.passed, vec![Check::Agreement]);
    }

    #[test]
    fn bound_failure_is_reported() {
        let mut report = evaluate(&w(3, &[1, 1, 2, 2])).unwrap();
        report.signature = 0;
        let (_, failure) = bound_checks(&report);
        assert_eq!(failure.unwrap().0, Check::EighthBound);
    }

    #[test]
    fn word_counts() {
        assert_eq!(word_count(2, 10), 11);
        assert_eq!(word_count(3, 3), 15);
        assert_eq!(word_count(4, 12), 797_161);
        assert_eq!(decode(4, 3, 5).letters(), &[1, 2, 3]);
        assert_eq!(all_words(3, 4).count() as u128, word_count(3, 4));
    }

    #[test]
    fn small_enumerations() {
        let s = enumerate_and_verify(&EnumerateConfig::new(2, 10), None).unwrap();
        assert!(s.passed());
        // Every 2-braid closure with b1 >= 1 has -sigma = b1.
        let r = s.min_ratio.unwrap();
        assert_eq!((r.numerator, r.denominator), (1, 1));

        let s = enumerate_and_verify(&EnumerateConfig::new(3, 6), None).unwrap();
        assert!(s.passed());
        let r = s.min_ratio.unwrap();
        let b1 = r.witness.parse::<BraidWord>().unwrap().betti() as i64;
        assert!(b1 < 2 || r.ratio() >= Rational64::new(1, 2) + Rational64::new(1, b1));
        assert!(s.pass_counts["three-strand-bound"] > 0);
    }

    #[test]
    fn budget_and_strands() {
        let mut cfg = EnumerateConfig::new(4, 12);
        cfg.budget = 1000;
        assert!(matches!(
            enumerate_and_verify(&cfg, None),
            Err(VerifyError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_and_verify(&EnumerateConfig::new(6, 2), None),
            Err(VerifyError::StrandsOutOfRange(6))
        ));
    }

    #[test]
    fn worker_count_does_not_matter() {
        let mut one = EnumerateConfig::new(4, 6);
        one.workers = 1;
        let mut three = one;
        three.workers = 3;
        let mut out_one = Vec::new();
        let mut out_three = Vec::new();
        let a = enumerate_and_verify(&one, Some(&mut out_one)).unwrap();
        let b = enumerate_and_verify(&three, Some(&mut out_three)).unwrap();
        assert_eq!(a, b);
        assert_eq!(out_one, out_three);
    }

    #[test]
    fn family_examples() {
        let rows = verify_families(2).unwrap();
        assert_eq!(rows.len(), 8);
        let beta1 = rows
            .iter()
            .find(|r| r.family == "beta" && r.n == 1)
            .unwrap();
        assert_eq!((beta1.neg_sigma, beta1.b1), (5, 9));
        let at2 = rows
            .iter()
            .find(|r| r.family == "alpha_tilde" && r.n == 2)
            .unwrap();
        assert_eq!((at2.neg_sigma, at2.b1), (11, 19));
        let bt1 = rows
            .iter()
            .find(|r| r.family == "beta_tilde" && r.n == 1)
            .unwrap();
        assert_eq!(bt1.components, 1);
        assert!(verify_families(0).is_err());
    }

    #[test]
    fn twist_shift_examples() {
        assert!(verify_twist_shift(&w(3, &[1, 2]), 1).unwrap().holds);
        let empty = verify_twist_shift(&w(3, &[]), 1).unwrap();
        assert_eq!((empty.sigma, empty.sigma_twisted), (0, -8));
        let alpha = FamilySpec::new(Family::Alpha, 1).word().unwrap();
        let t = verify_twist_shift(&alpha, 2).unwrap();
        assert!(t.holds);
        assert_eq!(t.sigma - t.sigma_twisted, 16);
        assert!(verify_twist_shift(&w(4, &[1]), 1).is_err());
        assert!(verify_twist_shift(&w(3, &[1]), 0).is_err());
    }

    #[test]
    fn saddle_examples() {
        let bt = FamilySpec::new(Family::BetaTilde, 1).word().unwrap();
        let s = verify_saddle_bound(&bt, 0).unwrap();
        assert!(s.holds);
        assert_eq!(s.delta().abs(), 1);
        for p in 0..3 {
            let s = verify_saddle_bound(&w(2, &[1, 1, 1]), p).unwrap();
            assert_eq!((s.sigma, s.sigma_smoothed), (-2, -1));
        }
        let s = verify_saddle_bound(&w(2, &[1]), 0).unwrap();
        assert_eq!((s.sigma, s.sigma_smoothed), (0, 0));
        assert!(verify_saddle_bound(&w(2, &[1]), 1).is_err());
    }

    #[test]
    fn appendix_examples() {
        let r = verify_appendix_reduction(&w(5, &[1, 1, 2, 3, 4, 4]), 24).unwrap();
        assert!(r.holds());
        assert_eq!(r.rows[0].word, "B5:1,2,3,4,4");
        assert_eq!(r.rows[0].smoothed, 1);
        let r = verify_appendix_reduction(&w(4, &[1, 2, 2, 3, 1, 2, 3, 3]), 24).unwrap();
        let best = &r.rows[(r.best_i - 1) as usize];
        assert!(best.smoothed <= r.b1 / 4);
        assert!(matches!(
            verify_appendix_reduction(&w(4, &[1, 1, 3]), 24),
            Err(VerifyError::PreconditionViolated(_))
        ));
        let r = verify_appendix_reduction(&w(5, &[1, 1, 2, 3, 4, 4]), 2).unwrap();
        assert_eq!(r.chain_holds, None);
    }

    #[test]
    fn additivity_examples() {
        let a = verify_additivity(&w(4, &[1, 1, 1, 3, 3])).unwrap();
        assert!(a.holds);
        assert_eq!(a.sigma_seifert, -3);
        let a = verify_additivity(&w(4, &[1, 1])).unwrap();
        assert_eq!((a.sigma_goeritz, a.holds), (-1, true));
        assert!(matches!(
            verify_additivity(&w(3, &[1, 2])),
            Err(VerifyError::PreconditionViolated(_))
        ));
    }
}
