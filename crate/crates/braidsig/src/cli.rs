//! Command-line front end.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use braidsig_core::diagram::ColoredDiagram;
use braidsig_core::forms::signature_triple;
use braidsig_core::goeritz::{first_row_comparison, goeritz};
use braidsig_core::seifert::seifert_matrix;
use braidsig_core::{BraidWord, FamilySpec, FirstRowBasis, GoeritzData, IntMatrix};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};
use crate::formats::{write_families_csv, write_json_line};
use crate::sample::{random_word, rng};
use crate::verifier::{
    check_word, enumerate_and_verify, family_table, verify_additivity, verify_appendix_reduction,
    verify_saddle_bound, verify_twist_shift, EnumerateConfig, SaddleOutcome, TwistShift,
    DEFAULT_APPENDIX_BUDGET, DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

pub const DEFAULT_SEED: u64 = 20240611;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    /// The wrap-around face stands in for the outer region.
    Wrap,
    /// The outer region stays in the basis and the wrap-around face is deleted.
    Kept,
}

#[derive(Debug, Parser)]
#[command(
    name = "braidsig",
    version,
    about = "Signatures of positive braid closures"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for `verify`; 0 uses every core.
    #[arg(long, global = true, env = "BRAIDSIG_WORKERS", default_value_t = 0)]
    pub workers: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Words are `B<b>:<k1>,<k2>,...`; family members like `alpha:2` or
/// `torus:3,4` are accepted too.
pub fn parse_word(s: &str) -> std::result::Result<BraidWord, String> {
    let s = s.trim();
    let mut chars = s.chars();
    if matches!(chars.next(), Some('B' | 'b')) && chars.next().is_some_and(|c| c.is_ascii_digit()) {
        return s.parse::<BraidWord>().map_err(|e| e.to_string());
    }
    s.parse::<FamilySpec>()
        .and_then(|f| f.word())
        .map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Signature, Betti number and determinant from both pipelines.
    Sig {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
        #[arg(long)]
        dump_diagram: bool,
    },
    /// Goeritz matrix, correction term and signature.
    Goeritz {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
        /// Region to delete; defaults to the outer region.
        #[arg(long)]
        delete: Option<usize>,
        #[arg(long)]
        dump_diagram: bool,
    },
    /// Seifert matrix of the braid surface.
    Seifert {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Values of the four example families for n = 1..=N.
    Families {
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Exhaustive check of every word up to a length.
    Verify {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_len: usize,
        /// JSON lines file receiving one record per class and the summary.
        #[arg(long)]
        results: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Full twists shift the signature by 8 each. Without a word, samples
    /// random 3-braids.
    TwistShift {
        #[arg(value_parser = parse_word)]
        word: Option<BraidWord>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Smoothing a crossing moves the signature by at most one. Without a
    /// word, samples random words and positions.
    Saddle {
        #[arg(value_parser = parse_word)]
        word: Option<BraidWord>,
        #[arg(long, default_value_t = 0)]
        position: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Goeritz matrices of a 4-braid and of its a3 -> a1 substitute.
    FirstRow {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
        #[arg(long, value_enum, default_value_t = Reading::Wrap)]
        reading: Reading,
    },
    /// Reduction to connected sums of braids on at most four strands.
    Appendix {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
        #[arg(long, default_value_t = DEFAULT_APPENDIX_BUDGET)]
        budget: usize,
    },
    /// Additivity over the split parts of a word.
    Additivity {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
}

impl Cli {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

fn matrix_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|v| {
                    v.to_i64().ok_or_else(|| {
                        VerifyError::PreconditionViolated(format!("entry {v} too large"))
                    })
                })
                .collect()
        })
        .collect()
}

fn write_matrix(out: &mut dyn Write, m: &IntMatrix) -> Result<()> {
    if m.rows() > 0 {
        writeln!(out, "{m}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigDoc {
    pub word: String,
    pub sigma: i64,
    pub b1: usize,
    pub det: String,
    pub nullity: usize,
    pub components: usize,
    pub genus_lb: Option<u64>,
    pub checks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoeritzDoc {
    pub word: String,
    pub mu: i64,
    pub basis: Vec<usize>,
    pub deleted: usize,
    pub matrix: Vec<Vec<i64>>,
    pub sigma_g: i64,
    pub sigma: i64,
}

impl GoeritzDoc {
    fn new(word: &BraidWord, g: &GoeritzData) -> Result<Self> {
        let sigma_g = signature_triple(&g.matrix)?.signature();
        Ok(GoeritzDoc {
            word: word.to_string(),
            mu: g.mu,
            basis: g.region_labels.clone(),
            deleted: g.deleted_region,
            matrix: matrix_rows(&g.matrix)?,
            sigma_g,
            sigma: sigma_g - g.mu,
        })
    }

    fn write_text(&self, out: &mut dyn Write, m: &IntMatrix) -> Result<()> {
        let basis: Vec<String> = self.basis.iter().map(|f| format!("f{f}")).collect();
        writeln!(out, "word={}", self.word)?;
        writeln!(out, "μ={}", self.mu)?;
        writeln!(out, "basis={} deleted=f{}", basis.join(","), self.deleted)?;
        write_matrix(out, m)?;
        writeln!(out, "σ(G)={} σ={}", self.sigma_g, self.sigma)?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertDoc {
    pub word: String,
    pub v: Vec<Vec<i64>>,
    pub v_plus_vt: Vec<Vec<i64>>,
    pub sigma: i64,
    pub det: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstRowDoc {
    pub beta: GoeritzDoc,
    pub alpha: GoeritzDoc,
    pub agree_submatrix: bool,
    pub inequality_holds: bool,
    pub mu_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cases<T> {
    pub seed: Option<u64>,
    pub cases: Vec<T>,
    pub holds: bool,
}

fn emit<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<()> {
    write_json_line(out, doc)
}

fn no_csv(command: &str) -> VerifyError {
    VerifyError::PreconditionViolated(format!("csv output is not available for {command}"))
}

/// Runs one command, writing to `out`. `Ok(true)` means every check held.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let format = cli.format();
    match &cli.command {
        Command::Sig { word, dump_diagram } => {
            if *dump_diagram {
                write!(out, "{}", ColoredDiagram::new(word)?.dump())?;
            }
            let checked = check_word(word)?;
            let r = &checked.report;
            let doc = SigDoc {
                word: word.to_string(),
                sigma: r.signature,
                b1: r.betti,
                det: r.determinant.to_string(),
                nullity: r.nullity,
                components: r.components,
                genus_lb: r.slice_genus_lower_bound(),
                checks: checked
                    .passed
                    .iter()
                    .map(|c| c.name().to_string())
                    .collect(),
            };
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.serialize((
                        &doc.word,
                        doc.sigma,
                        doc.b1,
                        &doc.det,
                        doc.components,
                        doc.genus_lb,
                    ))
                    .map_err(std::io::Error::other)?;
                    w.flush()?;
                }
                Format::Text => {
                    write!(
                        out,
                        "σ={} b₁={} det={} components={}",
                        doc.sigma, doc.b1, doc.det, doc.components
                    )?;
                    if let Some(g) = doc.genus_lb {
                        write!(out, " genus_lb={g}")?;
                    }
                    writeln!(out)?;
                }
            }
            Ok(true)
        }
        Command::Goeritz {
            word,
            delete,
            dump_diagram,
        } => {
            let cd = ColoredDiagram::new(word)?;
            if *dump_diagram {
                write!(out, "{}", cd.dump())?;
            }
            let g = goeritz(&cd, *delete)?;
            let doc = GoeritzDoc::new(word, &g)?;
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Csv => return Err(no_csv("goeritz")),
                Format::Text => doc.write_text(out, &g.matrix)?,
            }
            Ok(true)
        }
        Command::Seifert { word } => {
            let data = seifert_matrix(word);
            let sym = data.symmetrized();
            let triple = signature_triple(&sym)?;
            let doc = SeifertDoc {
                word: word.to_string(),
                v: matrix_rows(&data.matrix)?,
                v_plus_vt: matrix_rows(&sym)?,
                sigma: triple.signature(),
                det: braidsig_core::forms::determinant(&sym)?.to_string(),
            };
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Csv => return Err(no_csv("seifert")),
                Format::Text => {
                    writeln!(out, "word={}", doc.word)?;
                    writeln!(out, "V=")?;
                    write_matrix(out, &data.matrix)?;
                    writeln!(out, "V+Vᵀ=")?;
                    write_matrix(out, &sym)?;
                    writeln!(out, "σ={} det={}", doc.sigma, doc.det)?;
                }
            }
            Ok(true)
        }
        Command::Families { n } => {
            if *n == 0 {
                return Err(VerifyError::PreconditionViolated(
                    "--n must be at least 1".into(),
                ));
            }
            let rows = family_table(*n)?;
            match format {
                Format::Json => emit(out, &rows)?,
                Format::Csv => write_families_csv(&mut *out, &rows)?,
                Format::Text => {
                    for r in &rows {
                        writeln!(
                            out,
                            "{} n={} -σ={} b₁={} expected=({},{}) components={} {}",
                            r.family,
                            r.n,
                            r.neg_sigma,
                            r.b1,
                            r.expected_neg_sigma,
                            r.expected_b1,
                            r.components,
                            if r.ok { "ok" } else { "MISMATCH" }
                        )?;
                    }
                }
            }
            Ok(rows.iter().all(|r| r.ok))
        }
        Command::Verify {
            strands,
            max_len,
            results,
            budget,
        } => {
            let config = EnumerateConfig {
                strands: *strands,
                max_length: *max_len,
                workers: cli.workers,
                budget: *budget,
            };
            let summary = match results {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    let summary = enumerate_and_verify(&config, Some(&mut file))?;
                    write_json_line(&mut file, &summary)?;
                    file.flush()?;
                    summary
                }
                None => enumerate_and_verify(&config, None)?,
            };
            match format {
                Format::Json => emit(out, &summary)?,
                Format::Csv => return Err(no_csv("verify")),
                Format::Text => {
                    writeln!(
                        out,
                        "strands={} max_len={} words={} classes={} violations={}",
                        summary.strands,
                        summary.max_length,
                        summary.words_examined,
                        summary.canonical_classes,
                        summary.violations.len()
                    )?;
                    if let Some(m) = &summary.min_ratio {
                        writeln!(
                            out,
                            "min_ratio={}/{} witness={}",
                            m.numerator, m.denominator, m.witness
                        )?;
                    }
                    for (check, count) in &summary.pass_counts {
                        writeln!(out, "pass {check}={count}")?;
                    }
                    for v in &summary.violations {
                        writeln!(out, "VIOLATION {} {}: {}", v.check, v.word, v.detail)?;
                    }
                }
            }
            Ok(summary.passed())
        }
        Command::TwistShift { word, k, samples } => {
            let (seed, cases) = match word {
                Some(word) => (None, vec![verify_twist_shift(word, *k)?]),
                None => {
                    let mut rng = rng(cli.seed);
                    let mut cases = Vec::new();
                    for _ in 0..*samples {
                        let len = rng.gen_range(0..=8);
                        let word = random_word(&mut rng, 3, len);
                        cases.push(verify_twist_shift(&word, *k)?);
                    }
                    (Some(cli.seed), cases)
                }
            };
            let doc = Cases {
                seed,
                holds: cases.iter().all(|c| c.holds),
                cases,
            };
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Csv => return Err(no_csv("twist-shift")),
                Format::Text => {
                    for c in &doc.cases {
                        write_twist(out, c)?;
                    }
                }
            }
            Ok(doc.holds)
        }
        Command::Saddle {
            word,
            position,
            samples,
        } => {
            let (seed, cases) = match word {
                Some(word) => (None, vec![verify_saddle_bound(word, *position)?]),
                None => {
                    let mut rng = rng(cli.seed);
                    let mut cases = Vec::new();
                    for _ in 0..*samples {
                        let strands = rng.gen_range(2..=5);
                        let len = rng.gen_range(1..=12);
                        let word = random_word(&mut rng, strands, len);
                        let position = rng.gen_range(0..len);
                        cases.push(verify_saddle_bound(&word, position)?);
                    }
                    (Some(cli.seed), cases)
                }
            };
            let doc = Cases {
                seed,
                holds: cases.iter().all(|c| c.holds),
                cases,
            };
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Csv => return Err(no_csv("saddle")),
                Format::Text => {
                    for c in &doc.cases {
                        write_saddle(out, c)?;
                    }
                }
            }
            Ok(doc.holds)
        }
        Command::FirstRow { word, reading } => {
            let reading = match reading {
                Reading::Wrap => FirstRowBasis::WrapAsUnbounded,
                Reading::Kept => FirstRowBasis::UnboundedKept,
            };
            let report = first_row_comparison(word, reading)?;
            let doc = FirstRowDoc {
                beta: GoeritzDoc::new(&report.beta, &report.g_beta)?,
                alpha: GoeritzDoc::new(&report.alpha, &report.g_alpha)?,
                agree_submatrix: report.agree_submatrix,
                inequality_holds: report.inequality_holds,
                mu_equal: report.mu_equal,
            };
            match format {
                Format::Json => emit(out, &doc)?,
                Format::Csv => return Err(no_csv("first-row")),
                Format::Text => {
                    doc.beta.write_text(out, &report.g_beta.matrix)?;
                    doc.alpha.write_text(out, &report.g_alpha.matrix)?;
                    writeln!(
                        out,
                        "submatrix_agrees={} inequality_holds={} mu_equal={}",
                        doc.agree_submatrix, doc.inequality_holds, doc.mu_equal
                    )?;
                }
            }
            Ok(doc.agree_submatrix && doc.inequality_holds)
        }
        Command::Appendix { word, budget } => {
            let report = verify_appendix_reduction(word, *budget)?;
            match format {
                Format::Json => emit(out, &report)?,
                Format::Csv => return Err(no_csv("appendix")),
                Format::Text => {
                    writeln!(
                        out,
                        "word={} b₁={} required={} best_i={}",
                        report.word, report.b1, report.required_b1, report.best_i
                    )?;
                    for row in &report.rows {
                        write!(
                            out,
                            "i={} word={} b₁={} smoothed={} single={} summands={}",
                            row.i,
                            row.word,
                            row.b1,
                            row.smoothed,
                            row.single_occurrence,
                            row.summands.join(" ")
                        )?;
                        if let Some(c) = &row.chain {
                            write!(
                                out,
                                " -σ={} -σ(i)={} -σ(summands)={} chain={}",
                                c.neg_sigma, c.neg_sigma_reduced, c.neg_sigma_summands, c.holds
                            )?;
                        }
                        writeln!(out)?;
                    }
                    writeln!(out, "holds={}", report.holds())?;
                }
            }
            Ok(report.holds())
        }
        Command::Additivity { word } => {
            let a = verify_additivity(word)?;
            match format {
                Format::Json => emit(out, &a)?,
                Format::Csv => return Err(no_csv("additivity")),
                Format::Text => {
                    let parts: Vec<String> = a
                        .parts
                        .iter()
                        .zip(&a.part_sigmas)
                        .map(|(p, s)| format!("{p}(σ={s})"))
                        .collect();
                    writeln!(out, "word={} parts={}", a.word, parts.join(" "))?;
                    writeln!(
                        out,
                        "σ_seifert={} σ_goeritz={} holds={}",
                        a.sigma_seifert, a.sigma_goeritz, a.holds
                    )?;
                }
            }
            Ok(a.holds)
        }
    }
}

fn write_twist(out: &mut dyn Write, c: &TwistShift) -> Result<()> {
    writeln!(
        out,
        "{} k={} σ={} σ_twisted={} holds={}",
        c.word, c.k, c.sigma, c.sigma_twisted, c.holds
    )?;
    Ok(())
}

fn write_saddle(out: &mut dyn Write, c: &SaddleOutcome) -> Result<()> {
    writeln!(
        out,
        "{} position={} σ={} σ_smoothed={} holds={}",
        c.word, c.position, c.sigma, c.sigma_smoothed, c.holds
    )?;
    Ok(())
}

/// Exit status for a finished run.
pub fn exit_code(result: &Result<bool>) -> i32 {
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VIOLATION,
        Err(e) if e.is_violation() => EXIT_VIOLATION,
        Err(VerifyError::Io(_) | VerifyError::Json(_)) => EXIT_ERROR,
        Err(_) => EXIT_USAGE,
    }
}
