//! Command-line front end: every decision of the crate plus the verification
//! sweep, with human-readable text or line-delimited JSON output.
//!
//! Exit codes: 0 on success (for `sweep`: zero mismatches and zero error
//! markers), 2 on validation errors, 3 when a group exceeds the closure or
//! conductor bounds, 4 on internal consistency failures (including any
//! disagreement between the two critical-pair criteria, which must never
//! occur).

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::abelian::{is_r2_abelian, is_r2_abelian_bruteforce, AbelianGroup};
use crate::catalog::{
    family_generators, render_summary_table, summarize, sweep, table_prediction, verify_family,
    Family, FamilySpec, SweepBounds, VerificationReport,
};
use crate::cyclic_sing::{is_type_r, CyclicType};
use crate::error::{Error, Result};
use crate::hjcf::{hj_expand, is_critical_pair, is_critical_pair_arith};
use crate::invariant::GroupSingularity;
use crate::matgrp::{
    pgl_image_type, pseudoreflection_subgroup, quotient_structure, scalar_subgroup,
    FiniteMatrixGroup, GroupFile, QuotientStructure, DEFAULT_MAX_ORDER,
};

#[derive(Debug, Parser)]
#[command(name = "tqs", version, about = "Exact decisions for two-dimensional tame quotient singularities of type R")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hirzebruch-Jung expansion of n/d and the resolution string
    Hj { n: u64, d: u64 },
    /// Evaluate both critical-pair criteria and check that they agree
    Critical { n: u64, d: u64 },
    /// Decide whether the singularity 1/n(1,d) is of type R
    IsR {
        n: u64,
        d: u64,
        /// Base characteristic (0 or a prime not dividing n)
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Classify the quotient singularity of a matrix group read from a file
    Group {
        /// JSON file with fields `conductor` and `generators`
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u64,
    },
    /// Classify one member of the nine families
    Family {
        /// Family tag: D-C, D-D, muD, D-Codd, A4-D2, muA4, muS4, S4-A4, muA5
        #[arg(long)]
        name: Family,
        #[arg(long)]
        q: u64,
        /// Second parameter, D-families only
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u64,
    },
    /// Verify the classification table over a parameter sweep
    Sweep {
        #[arg(long, default_value_t = 24)]
        max_q: u64,
        #[arg(long, default_value_t = 8)]
        max_m: u64,
        #[arg(long, default_value_t = 4000)]
        max_order: u64,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Decide whether a finite abelian group (given by cyclic factors) is R2
    Abelian {
        #[arg(required = true)]
        factors: Vec<u64>,
    },
}

/// Rendered output plus the exit code the process should end with.
#[derive(Debug)]
pub struct RunOutput {
    pub text: String,
    pub exit_code: i32,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::GroupTooLarge(_) | Error::ConductorTooLarge(_, _) => 3,
        Error::Internal(_)
        | Error::InconsistentExpansion(_)
        | Error::NotNormal
        | Error::NotReflectionGroup => 4,
        _ => 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HjReport {
    pub n: u64,
    pub d: u64,
    pub expansion: Vec<u64>,
    pub resolution: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalReport {
    pub n: u64,
    pub d: u64,
    pub shape: bool,
    pub arithmetic: bool,
    pub critical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsRReport {
    pub n: u64,
    pub d: u64,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub singularity: String,
    pub type_r: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub order: u64,
    pub center: u64,
    pub pgl_image: String,
    pub reflection_order: u64,
    pub quotient: String,
    pub singularity: String,
    pub type_r: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(flatten)]
    pub group: GroupReport,
    #[serde(rename = "predicted_negR")]
    pub predicted_neg_r: bool,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianReport {
    pub input: Vec<u64>,
    pub invariant_factors: Vec<u64>,
    pub order: u64,
    pub rank: usize,
    pub r2_formula: bool,
    /// None when the order is beyond the brute-force bound.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r2_bruteforce: Option<bool>,
}

pub fn render_hj_text(r: &HjReport) -> String {
    format!(
        "n/d = {}/{}\nexpansion = ({})\nresolution = ({})\n",
        r.n,
        r.d,
        join(&r.expansion),
        join(&r.resolution)
    )
}

pub fn render_critical_text(r: &CriticalReport) -> String {
    format!(
        "pair ({}, {})\nshape criterion (palindromic, odd length, even center): {}\narithmetic criterion (d^2 = 1 mod n, n even, d = +-1 mod 2^a): {}\ncritical pair: {}\n",
        r.n, r.d, r.shape, r.arithmetic, r.critical
    )
}

pub fn render_is_r_text(r: &IsRReport) -> String {
    format!(
        "singularity {} in characteristic {}\nverdict: {}\n",
        r.singularity,
        r.characteristic,
        if r.type_r { "of type R" } else { "not of type R" }
    )
}

pub fn render_group_text(r: &GroupReport) -> String {
    format!(
        "order = {}\ncenter order = {}\npgl image = {}\nreflection subgroup order = {}\nquotient = {}\nsingularity = {}\ntype R = {}\n",
        r.order, r.center, r.pgl_image, r.reflection_order, r.quotient, r.singularity, r.type_r
    )
}

pub fn render_family_text(r: &FamilyReport) -> String {
    let mut out = match r.m {
        Some(m) => format!("family = {} (q = {}, m = {})\n", r.family, r.q, m),
        None => format!("family = {} (q = {})\n", r.family, r.q),
    };
    out.push_str(&render_group_text(&r.group));
    out.push_str(&format!(
        "predicted not-R = {}\nmatch = {}\n",
        r.predicted_neg_r, r.matched
    ));
    out
}

pub fn render_abelian_text(r: &AbelianReport) -> String {
    format!(
        "input factors = [{}]\ninvariant factors = [{}]\norder = {}\nrank = {}\nR2 by the closed form = {}\nR2 by brute force = {}\n",
        join(&r.input),
        join(&r.invariant_factors),
        r.order,
        r.rank,
        r.r2_formula,
        match r.r2_bruteforce {
            Some(b) => b.to_string(),
            None => "skipped (order above the brute-force bound)".to_string(),
        }
    )
}

pub fn render_sweep_line_text(r: &VerificationReport) -> String {
    let mut line = format!("family={}", r.family);
    if let Some(m) = r.m {
        line.push_str(&format!(" m={}", m));
    }
    line.push_str(&format!(" q={}", r.q));
    if let Some(order) = r.order {
        line.push_str(&format!(" order={}", order));
    }
    if let Some(t) = &r.computed_type {
        line.push_str(&format!(" computed_type={}", t));
    }
    if let Some(b) = r.computed_type_r {
        line.push_str(&format!(" computed_typeR={}", b));
    }
    line.push_str(&format!(" predicted_negR={}", r.predicted_neg_r));
    if let Some(b) = r.matched {
        line.push_str(&format!(" match={}", b));
    }
    if let Some(e) = &r.error {
        line.push_str(&format!(" error={:?}", e));
    }
    line.push('\n');
    line
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)
        .map_err(|e| Error::Internal(format!("serialization failure: {}", e)))?;
    s.push('\n');
    Ok(s)
}

/// Everything the `group` and `family` commands print about a matrix group.
pub fn group_report(g: &FiniteMatrixGroup) -> Result<GroupReport> {
    let p = pseudoreflection_subgroup(g)?;
    let quotient = match quotient_structure(g, &p)? {
        QuotientStructure::Cyclic { order, .. } => format!("cyclic({})", order),
        QuotientStructure::NonCyclic => "noncyclic".to_string(),
    };
    let sing = crate::invariant::singularity_of_group(g)?;
    let singularity = match &sing {
        GroupSingularity::Smooth => "smooth".to_string(),
        GroupSingularity::NonCyclicQuotient => "noncyclic".to_string(),
        GroupSingularity::Classified { quotient, .. } => quotient.to_string(),
    };
    Ok(GroupReport {
        order: g.order(),
        center: scalar_subgroup(g)?,
        pgl_image: pgl_image_type(g)?.to_string(),
        reflection_order: p.order(),
        quotient,
        singularity,
        type_r: sing.is_type_r(),
    })
}

/// Orders up to this bound get the brute-force abelian verdict in the CLI.
pub const ABELIAN_BRUTEFORCE_BOUND: u64 = 120;

pub fn run(cli: &Cli) -> Result<RunOutput> {
    let json = cli.format == OutputFormat::Json;
    match &cli.command {
        Command::Hj { n, d } => {
            let expansion = hj_expand(*n, *d)?;
            let resolution = expansion.iter().map(|&a| -(a as i64)).collect();
            let report = HjReport {
                n: *n,
                d: *d,
                expansion,
                resolution,
            };
            Ok(RunOutput {
                text: if json {
                    json_line(&report)?
                } else {
                    render_hj_text(&report)
                },
                exit_code: 0,
            })
        }
        Command::Critical { n, d } => {
            let shape = is_critical_pair(*n, *d)?;
            let arithmetic = is_critical_pair_arith(*n, *d)?;
            if shape != arithmetic {
                return Err(Error::Internal(format!(
                    "critical-pair criteria disagree on ({}, {}): shape {}, arithmetic {}",
                    n, d, shape, arithmetic
                )));
            }
            let report = CriticalReport {
                n: *n,
                d: *d,
                shape,
                arithmetic,
                critical: shape,
            };
            Ok(RunOutput {
                text: if json {
                    json_line(&report)?
                } else {
                    render_critical_text(&report)
                },
                exit_code: 0,
            })
        }
        Command::IsR {
            n,
            d,
            characteristic,
        } => {
            let t = CyclicType::new(*n, *d)?;
            let type_r = is_type_r(&t, *characteristic)?;
            let report = IsRReport {
                n: *n,
                d: *d,
                characteristic: *characteristic,
                singularity: t.to_string(),
                type_r,
            };
            Ok(RunOutput {
                text: if json {
                    json_line(&report)?
                } else {
                    render_is_r_text(&report)
                },
                exit_code: 0,
            })
        }
        Command::Group { file, max_order } => {
            let raw = std::fs::read_to_string(file)
                .map_err(|e| Error::Io(format!("{}: {}", file.display(), e)))?;
            let gf = GroupFile::from_json(&raw)?;
            let gens = gf.to_matrices()?;
            let g = FiniteMatrixGroup::generate(&gens, *max_order)?;
            let report = group_report(&g)?;
            Ok(RunOutput {
                text: if json {
                    json_line(&report)?
                } else {
                    render_group_text(&report)
                },
                exit_code: 0,
            })
        }
        Command::Family {
            name,
            q,
            m,
            max_order,
        } => {
            let spec = FamilySpec::new(*name, *q, *m)?;
            let (_, gens) = family_generators(&spec)?;
            let g = FiniteMatrixGroup::generate(&gens, *max_order)?;
            let group = group_report(&g)?;
            let predicted = table_prediction(&spec);
            let matched = group.type_r == !predicted;
            let report = FamilyReport {
                family: spec.family.tag().to_string(),
                q: spec.q,
                m: spec.m,
                group,
                predicted_neg_r: predicted,
                matched,
            };
            let exit_code = if matched { 0 } else { 4 };
            Ok(RunOutput {
                text: if json {
                    json_line(&report)?
                } else {
                    render_family_text(&report)
                },
                exit_code,
            })
        }
        Command::Sweep {
            max_q,
            max_m,
            max_order,
            jobs,
        } => {
            let bounds = SweepBounds {
                max_q: *max_q,
                max_m: *max_m,
                max_order: *max_order,
            };
            let reports = sweep(&bounds, *jobs);
            let summary = summarize(&reports);
            let mut text = String::new();
            if json {
                for r in &reports {
                    text.push_str(&json_line(r)?);
                }
                text.push_str(&json_line(&summary)?);
            } else {
                for r in &reports {
                    text.push_str(&render_sweep_line_text(r));
                }
                text.push('\n');
                text.push_str(&render_summary_table(&reports));
            }
            let exit_code = if summary.mismatches > 0 {
                4
            } else if summary.errors > 0 {
                3
            } else {
                0
            };
            Ok(RunOutput { text, exit_code })
        }
        Command::Abelian { factors } => {
            let g = AbelianGroup::new(factors)?;
            let r2_formula = is_r2_abelian(&g);
            let r2_bruteforce = if g.rank() <= 2 && g.order() <= ABELIAN_BRUTEFORCE_BOUND {
                Some(is_r2_abelian_bruteforce(&g)?)
            } else {
                None
            };
            if let Some(bf) = r2_bruteforce {
                if bf != r2_formula {
                    return Err(Error::Internal(format!(
                        "abelian R2 verdicts disagree on {:?}: formula {}, brute force {}",
                        g.invariant_factors(),
                        r2_formula,
                        bf
                    )));
                }
            }
            let report = AbelianReport {
                input: factors.clone(),
                invariant_factors: g.invariant_factors().to_vec(),
                order: g.order(),
                rank: g.rank(),
                r2_formula,
                r2_bruteforce,
            };
            Ok(RunOutput {
                text: if json {
                    json_line(&report)?
                } else {
                    render_abelian_text(&report)
                },
                exit_code: 0,
            })
        }
    }
}

/// Re-run `verify_family` for one spec; used by integration tests that need
/// a single report without a sweep.
pub fn family_verification(spec: &FamilySpec, max_order: u64) -> VerificationReport {
    verify_family(spec, max_order)
}
