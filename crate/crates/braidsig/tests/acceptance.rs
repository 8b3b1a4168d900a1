//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

use std::time::{Duration, Instant};

use braidsig::sample::{random_symmetric, random_word, random_word_using_all, rng};
use braidsig::verifier::{
    all_words, enumerate_and_verify, evaluate, verify_appendix_reduction, verify_families,
    verify_saddle_bound, verify_twist_shift, EnumerateConfig, VerificationSummary,
    DEFAULT_APPENDIX_BUDGET,
};
use braidsig_core::forms::{signature_triple, sturm_inertia};
use braidsig_core::goeritz::{first_row_comparison, signature_gl, signature_per_deletion};
use braidsig_core::seifert::signature_seifert;
use braidsig_core::{BraidWord, Family, FamilySpec, FirstRowBasis};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(strands: usize, letters: &[u32]) -> BraidWord {
    BraidWord::new(strands, letters.to_vec()).unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn anchors() -> Outcome {
    let start = Instant::now();
    for n in 1..=20usize {
        let word = BraidWord::new(2, vec![1; n + 1]).unwrap();
        let s = signature_seifert(&word)
            .map_err(|e| e.to_string())?
            .signature;
        let g = signature_gl(&word).map_err(|e| e.to_string())?.signature;
        if s != -(n as i64) || g != -(n as i64) {
            return Err(format!("n={n}: seifert {s}, goeritz {g}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("n=1..20 in {:.2?}", start.elapsed()))
}

fn families() -> Outcome {
    let start = Instant::now();
    let rows = verify_families(8).map_err(|e| e.to_string())?;
    if rows.len() != 32 {
        return Err(format!("{} rows", rows.len()));
    }
    for r in rows.iter().filter(|r| r.family == Family::BetaTilde.name()) {
        if r.components != 1 {
            return Err(format!("{} has {} components", r.word, r.components));
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("32 rows in {:.2?}", start.elapsed()))
}

fn run(strands: usize, max_len: usize) -> Result<VerificationSummary, String> {
    enumerate_and_verify(&EnumerateConfig::new(strands, max_len), None).map_err(|e| e.to_string())
}

fn violations_of(summary: &VerificationSummary, checks: &[&str]) -> Vec<String> {
    summary
        .violations
        .iter()
        .filter(|v| checks.contains(&v.check.as_str()))
        .map(|v| format!("{} {}: {}", v.check, v.word, v.detail))
        .collect()
}

fn agreement() -> Outcome {
    let start = Instant::now();
    let mut classes = 0;
    let mut words = 0;
    for strands in 2..=4 {
        let s = run(strands, 10)?;
        let bad = violations_of(&s, &["agreement"]);
        if !bad.is_empty() {
            return Err(bad.join("; "));
        }
        classes += s.canonical_classes;
        // Representatives alone would lean on rotation invariance; check
        // every word as well.
        for word in all_words(strands, 10) {
            evaluate(&word).map_err(|e| e.to_string())?;
            words += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(format!(
        "{words} words ({classes} classes), 0 disagreements in {:.2?}",
        start.elapsed()
    ))
}

fn bounds() -> Outcome {
    let start = Instant::now();
    let four = run(4, 12)?;
    let five = run(5, 10)?;
    let three = run(3, 14)?;
    let mut bad = violations_of(&four, &["agreement", "half-bound", "eighth-bound"]);
    bad.extend(violations_of(&five, &["agreement", "eighth-bound"]));
    bad.extend(violations_of(&three, &["agreement", "three-strand-bound"]));
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    let count = |s: &VerificationSummary, c: &str| s.pass_counts.get(c).copied().unwrap_or(0);
    if count(&four, "half-bound") == 0
        || count(&five, "eighth-bound") == 0
        || count(&three, "three-strand-bound") == 0
    {
        return Err("a bound was never exercised".into());
    }
    within(start.elapsed(), Duration::from_secs(900))?;
    Ok(format!(
        "half {} / eighth {} / three-strand {} classes in {:.2?}",
        count(&four, "half-bound"),
        count(&four, "eighth-bound") + count(&five, "eighth-bound"),
        count(&three, "three-strand-bound"),
        start.elapsed()
    ))
}

fn twist_shift() -> Outcome {
    let mut rng = rng(0x7157);
    let mut cases = 0;
    for _ in 0..50 {
        let len = rng.gen_range(0..=8);
        let word = random_word(&mut rng, 3, len);
        for k in [1, 2] {
            let t = verify_twist_shift(&word, k).map_err(|e| e.to_string())?;
            if !t.holds {
                return Err(format!(
                    "{} k={k}: {} -> {}",
                    t.word, t.sigma, t.sigma_twisted
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn saddle() -> Outcome {
    let mut rng = rng(0x5add1e);
    for _ in 0..200 {
        let strands = rng.gen_range(2..=5);
        let len = rng.gen_range(1..=12);
        let word = random_word(&mut rng, strands, len);
        let position = rng.gen_range(0..len);
        let s = verify_saddle_bound(&word, position).map_err(|e| e.to_string())?;
        if !s.holds {
            return Err(format!(
                "{} at {position}: {} -> {}",
                s.word, s.sigma, s.sigma_smoothed
            ));
        }
    }
    for n in 1..=4 {
        let tilde = FamilySpec::new(Family::BetaTilde, n).word().unwrap();
        let plain = FamilySpec::new(Family::Beta, n).word().unwrap();
        let s = verify_saddle_bound(&tilde, 0).map_err(|e| e.to_string())?;
        if s.smoothed != plain.to_string() || s.delta().abs() != 1 {
            return Err(format!(
                "n={n}: {} -> {} moved by {}",
                s.word,
                s.smoothed,
                s.delta()
            ));
        }
    }
    Ok("200 random pairs, attained for n=1..4".into())
}

fn first_row() -> Outcome {
    let mut words = vec![w(4, &[1, 3, 2, 1, 3, 2, 2, 1, 3, 2])];
    let mut rng = rng(0xf125);
    words.extend((0..50).map(|_| random_word_using_all(&mut rng, 4, 10)));
    for word in &words {
        let r = first_row_comparison(word, FirstRowBasis::WrapAsUnbounded)
            .map_err(|e| e.to_string())?;
        if !r.agree_submatrix {
            return Err(format!("{word}: submatrices differ"));
        }
        if (r.sigma_g_beta - r.sigma_g_alpha).abs() > 1 {
            return Err(format!(
                "{word}: sigma(G_beta)={} sigma(G_alpha)={}",
                r.sigma_g_beta, r.sigma_g_alpha
            ));
        }
    }
    Ok(format!("{} words", words.len()))
}

fn appendix() -> Outcome {
    let mut rng = rng(0xa99e);
    let mut chained = 0;
    for _ in 0..50 {
        let strands = rng.gen_range(5..=8);
        let word = random_word_using_all(&mut rng, strands, 16);
        let r =
            verify_appendix_reduction(&word, DEFAULT_APPENDIX_BUDGET).map_err(|e| e.to_string())?;
        if !r.bound_holds || !r.structure_holds {
            return Err(format!(
                "{word}: best b1 {} < {} or structure broken",
                r.rows[(r.best_i - 1) as usize].b1,
                r.required_b1
            ));
        }
        if r.chain_holds == Some(false) {
            return Err(format!("{word}: signature chain fails"));
        }
        chained += usize::from(r.chain_holds == Some(true));
    }
    Ok(format!("50 words, {chained} with signature chain"))
}

fn forms_oracle() -> Outcome {
    let mut rng = rng(0x0f0f);
    for case in 0..1000 {
        let dim = rng.gen_range(1..=10);
        let m = random_symmetric(&mut rng, dim, 9);
        let a = signature_triple(&m).map_err(|e| e.to_string())?;
        let b = sturm_inertia(&m).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("case {case}: {a:?} vs {b:?} for\n{m}"));
        }
    }
    Ok("1000 matrices".into())
}

fn deletion_invariance() -> Outcome {
    let mut words = 0;
    for strands in 2..=4 {
        for word in all_words(strands, 6) {
            let sigmas = signature_per_deletion(&word).map_err(|e| e.to_string())?;
            if sigmas.windows(2).any(|p| p[0].1 != p[1].1) {
                return Err(format!("{word}: {sigmas:?}"));
            }
            words += 1;
        }
    }
    Ok(format!("{words} words"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("two-strand calibration anchors", anchors),
        ("example family table", families),
        ("pipeline agreement, b<=4, length<=10", agreement),
        ("signature lower bounds, exhaustive", bounds),
        ("full-twist shift", twist_shift),
        ("saddle bound", saddle),
        ("first-row comparison", first_row),
        ("reduction to four-strand summands", appendix),
        ("exact-forms oracle", forms_oracle),
        ("Goeritz deletion invariance", deletion_invariance),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
