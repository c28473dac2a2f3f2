//! Command-line front end. Every command produces a [`ReportDocument`];
//! exit code 0 means no machine-checked failure, 1 means at least one, and
//! 2 means the input was rejected.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::polarization::{check_lemma1, construct_chi_proof_path, search_chi};
use crate::ratlp::Rational;
use crate::report::{
    cell_check_json, chi_echo, lemma1_checks, lemma1_json, rats, sweep_json, wonderful_section,
    word, CheckLine, ReportDocument, Section,
};
use crate::rootsys::{Coweight, RootDatum, RootType, Weight};
use crate::stability::{check_mu_formula, mu, verify_lemma2, SchubertContext};
use crate::weyl::{enumerate_weyl, WeylElement, WeylGroup, DEFAULT_MAX_WEYL};
use crate::wonderful::{verify_cor1, verify_picard, WonderfulModel};

pub const MAX_WEYL_ENV: &str = "TORUS_GIT_MAX_WEYL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Flag,
    Wonderful,
    All,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::Flag => "flag",
            Scope::Wonderful => "wonderful",
            Scope::All => "all",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "torus-git",
    version,
    about = "Exact torus GIT on flag varieties and wonderful compactifications"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Cartan type letter A-G
    #[arg(long = "type")]
    pub root_type: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    /// χ in fundamental-weight coordinates, e.g. 3,3,1
    #[arg(long, allow_hyphen_values = true, conflicts_with = "chi_alpha")]
    pub chi_omega: Option<String>,
    /// χ in simple-root coordinates; entries may be p/q
    #[arg(long, allow_hyphen_values = true)]
    pub chi_alpha: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots, 2ρ and determinant
    Roots(TypeArgs),
    /// Search polarization characters up to an α-height bound
    FindChi {
        #[command(flatten)]
        t: TypeArgs,
        #[arg(long, default_value_t = 20)]
        bound: u32,
    },
    /// Check the four polarization conditions for one χ
    CheckChi {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        chi: ChiArgs,
    },
    /// Full verification report
    Verify {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        chi: ChiArgs,
        #[arg(long, value_enum, default_value = "all")]
        scope: Scope,
    },
    /// μ of a Schubert cell state at coweights
    Mu {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        chi: ChiArgs,
        /// reduced word, 1-based, e.g. 1,2,1; empty for the identity
        #[arg(long, default_value = "")]
        word: String,
        /// coweight in λ-coordinates; all fundamental coweights if omitted
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Generic verdict of every Schubert cell
    ClassifyCells {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        chi: ChiArgs,
    },
    /// Same as verify --scope flag
    VerifyFlag {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        chi: ChiArgs,
    },
    /// Same as verify --scope wonderful
    VerifyWonderful {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        chi: ChiArgs,
    },
    /// Picard ranks of X, Z and the quotient Y
    Picard {
        #[command(flatten)]
        t: TypeArgs,
        #[command(flatten)]
        chi: ChiArgs,
    },
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad {what} entry {x:?} in {s:?}")))
        })
        .collect()
}

pub fn datum_from(t: &TypeArgs) -> Result<RootDatum> {
    let root_type: RootType = t.root_type.parse()?;
    RootDatum::new(root_type, t.rank)
}

/// χ from either basis; `None` if neither flag is present.
pub fn parse_chi(d: &RootDatum, c: &ChiArgs) -> Result<Option<Weight>> {
    let n = d.rank();
    let check_len = |len: usize| {
        if len == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                found: len,
            })
        }
    };
    if let Some(s) = &c.chi_omega {
        let v: Vec<i64> = parse_list(s, "χ")?;
        check_len(v.len())?;
        return Ok(Some(Weight(v)));
    }
    if let Some(s) = &c.chi_alpha {
        let m: Vec<Rational> = parse_list(s, "χ")?;
        check_len(m.len())?;
        let omega: Option<Vec<i64>> = d
            .cartan()
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&m)
                    .fold(Rational::zero(), |acc, (a, b)| {
                        acc + &Rational::from_int(*a) * b
                    })
                    .to_i64()
            })
            .collect();
        let omega = omega.ok_or_else(|| {
            Error::Parse(format!(
                "α-coordinates {s:?} do not give an integral weight"
            ))
        })?;
        return Ok(Some(Weight(omega)));
    }
    Ok(None)
}

fn require_chi(d: &RootDatum, c: &ChiArgs) -> Result<Weight> {
    parse_chi(d, c)?
        .ok_or_else(|| Error::Parse("one of --chi-omega or --chi-alpha is required".into()))
}

/// Enumeration guard, overridable through the environment.
pub fn weyl_bound() -> Result<u128> {
    match std::env::var(MAX_WEYL_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Parse(format!("{MAX_WEYL_ENV}={v:?} is not a nonnegative integer"))
        }),
        Err(_) => Ok(DEFAULT_MAX_WEYL),
    }
}

fn input_echo(d: &RootDatum, chi: Option<&Weight>) -> serde_json::Value {
    json!({
        "type": d.root_type().to_string(),
        "rank": d.rank(),
        "chi": chi.map(|c| chi_echo(d, c)),
    })
}

pub fn cmd_roots(d: &RootDatum) -> ReportDocument {
    let mut s = Section::new("root_datum");
    s.data = json!({
        "label": d.label(),
        "cartan": d.cartan(),
        "cartan_determinant": d.cartan_determinant(),
        "positive_root_count": d.positive_roots().len(),
        "positive_roots_alpha": d.positive_roots(),
        "positive_roots_omega": d.positive_roots().iter().map(|r| d.weight_from_alpha(r).0).collect::<Vec<_>>(),
        "two_rho": chi_echo(d, &d.two_rho()),
        "weyl_order": d.weyl_order().to_string(),
    });
    ReportDocument::new("roots", input_echo(d, None), vec![s])
}

pub fn cmd_find_chi(d: &RootDatum, group: &WeylGroup, bound: u32) -> ReportDocument {
    let found = search_chi(d, group, bound);
    let certs: Vec<_> = found
        .iter()
        .map(|chi| check_lemma1(d, group, chi))
        .collect();
    let bad: Vec<String> = certs
        .iter()
        .filter(|c| !c.passes())
        .map(|c| format!("{:?}", c.chi.0))
        .collect();
    let mut s = Section::new("search");
    s.checks.push(CheckLine::machine(
        "candidates_recheck",
        "every returned χ passes the four conditions again",
        bad.is_empty(),
        || format!("failing: {}", bad.join(" ")),
        json!({ "rechecked": certs.len() }),
    ));
    let note = if d.root_type() == RootType::A && d.rank() == 2 {
        Some("A2 is excluded by hypothesis; an empty result is expected")
    } else {
        None
    };
    let proof_path = match construct_chi_proof_path(d, group) {
        Ok(p) => json!({
            "chi": chi_echo(d, &p.chi),
            "m": p.m,
            "k": p.k,
            "det": p.det,
            "passes": p.certificate.passes(),
        }),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    s.data = json!({
        "bound": bound,
        "count": found.len(),
        "note": note,
        "found": certs.iter().map(|c| lemma1_json(d, c)).collect::<Vec<_>>(),
        "proof_path": proof_path,
    });
    let mut input = input_echo(d, None);
    input["bound"] = json!(bound);
    ReportDocument::new("find-chi", input, vec![s])
}

pub fn cmd_check_chi(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> ReportDocument {
    let cert = check_lemma1(d, group, chi);
    let mut s = Section::new("lemma1");
    s.checks = lemma1_checks(d, &cert, group.len());
    ReportDocument::new("check-chi", input_echo(d, Some(chi)), vec![s])
}

fn precondition_section(name: &str, d: &RootDatum, chi: &Weight) -> Option<Section> {
    if d.is_dominant(chi) && d.in_root_lattice(chi) {
        return None;
    }
    let mut s = Section::new(name);
    s.checks.push(CheckLine::machine(
        "preconditions",
        "χ is dominant and lies in the root lattice",
        false,
        || "χ must be dominant and in the root lattice".to_string(),
        json!({ "alpha": rats(&d.alpha_coords(chi)), "dominant": d.is_dominant(chi) }),
    ));
    Some(s)
}

fn flag_section(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> Result<Section> {
    if let Some(s) = precondition_section("flag", d, chi) {
        return Ok(s);
    }
    let r = verify_lemma2(d, group, chi)?;
    let mu_check = check_mu_formula(d, group, chi)?;
    let mut s = Section::new("flag");
    let line = |name: &str, statement: &str, c: &crate::stability::CellCheck| {
        CheckLine::machine(
            name,
            statement,
            c.passed,
            || format!("violated at {:?}", crate::report::words(&c.violations)),
            cell_check_json(c),
        )
    };
    s.checks = vec![
        line(
            "codim_implication",
            "w(χ) ≰ 0 implies codimension >= 2",
            &r.codim_implication,
        ),
        line(
            "semistable_is_stable",
            "no generic cell state is semistable without being stable",
            &r.semistable_is_stable,
        ),
        line(
            "low_codim_stable",
            "cells of codimension <= 1 are generically stable",
            &r.low_codim_stable,
        ),
        line(
            "mu_formula",
            "μ(cell state, λᵢ) = -⟨w(χ), λᵢ⟩ for all w and i",
            &mu_check,
        ),
    ];
    s.data = sweep_json(d, &r.sweep);
    Ok(s)
}

fn wonderful_sections(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> Result<Section> {
    if let Some(s) = precondition_section("wonderful", d, chi) {
        return Ok(s);
    }
    let m = WonderfulModel::new(d, group, chi)?;
    let r = verify_cor1(&m)?;
    Ok(wonderful_section(&m, &r))
}

pub fn cmd_verify(
    d: &RootDatum,
    group: &WeylGroup,
    chi: &Weight,
    scope: Scope,
) -> Result<ReportDocument> {
    let cert = check_lemma1(d, group, chi);
    let mut l1 = Section::new("lemma1");
    l1.checks = lemma1_checks(d, &cert, group.len());
    let mut sections = vec![l1];
    if matches!(scope, Scope::Flag | Scope::All) {
        sections.push(flag_section(d, group, chi)?);
    }
    if matches!(scope, Scope::Wonderful | Scope::All) {
        sections.push(wonderful_sections(d, group, chi)?);
    }
    let mut input = input_echo(d, Some(chi));
    input["scope"] = json!(scope.name());
    Ok(ReportDocument::new("verify", input, sections))
}

pub fn cmd_mu(
    d: &RootDatum,
    chi: &Weight,
    w: &WeylElement,
    lambdas: &[Coweight],
) -> Result<ReportDocument> {
    let ctx = SchubertContext::new(d, chi)?;
    let state = ctx.cell_state(d, w);
    let w_chi = w.act_on_weight(chi);
    let mut s = Section::new("mu");
    let mut values = Vec::new();
    for l in lambdas {
        let value = mu(d, &state, l);
        let formula = -d.pairing(&w_chi, l);
        let dominant = l.0.iter().all(|&x| x >= 0);
        values.push(json!({
            "lambda": l.0,
            "mu": value.to_string(),
            "minus_pairing_w_chi": formula.to_string(),
        }));
        if dominant {
            s.checks.push(CheckLine::machine(
                &format!("mu_formula_{:?}", l.0),
                "μ at a dominant coweight equals -⟨w(χ), λ⟩",
                value == formula,
                || format!("μ = {value}, formula gives {formula}"),
                json!({ "lambda": l.0, "mu": value.to_string() }),
            ));
        }
    }
    s.data = json!({
        "word": word(w),
        "w_chi": chi_echo(d, &w_chi),
        "state_size": state.len(),
        "values": values,
    });
    Ok(ReportDocument::new("mu", input_echo(d, Some(chi)), vec![s]))
}

pub fn cmd_classify_cells(
    d: &RootDatum,
    group: &WeylGroup,
    chi: &Weight,
) -> Result<ReportDocument> {
    let sections = match precondition_section("cells", d, chi) {
        Some(s) => vec![s],
        None => {
            let sweep = crate::stability::classify_cells(d, group, chi)?;
            let mut s = Section::new("cells");
            let ctx = SchubertContext::new(d, chi)?;
            let bad: Vec<Vec<usize>> = sweep
                .cells
                .iter()
                .filter(|c| !c.generic_verdict.verify(d, &ctx.cell_state(d, &c.w)))
                .map(|c| word(&c.w))
                .collect();
            s.checks.push(CheckLine::machine(
                "certificates_verify",
                "every cell verdict certificate re-verifies",
                bad.is_empty(),
                || format!("bad certificates at {bad:?}"),
                json!({ "cells": sweep.cells.len() }),
            ));
            s.data = sweep_json(d, &sweep);
            vec![s]
        }
    };
    Ok(ReportDocument::new(
        "classify-cells",
        input_echo(d, Some(chi)),
        sections,
    ))
}

pub fn cmd_picard(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> Result<ReportDocument> {
    let m = WonderfulModel::new(d, group, chi)?;
    let r = verify_picard(&m);
    let mut s = wonderful_section(&m, &r);
    s.name = "picard".to_string();
    Ok(ReportDocument::new(
        "picard",
        input_echo(d, Some(chi)),
        vec![s],
    ))
}

fn dispatch(cli: &Cli) -> Result<ReportDocument> {
    let bound = weyl_bound()?;
    let setup = |t: &TypeArgs| -> Result<(RootDatum, WeylGroup)> {
        let d = datum_from(t)?;
        let g = enumerate_weyl(&d, bound)?;
        Ok((d, g))
    };
    match &cli.command {
        Command::Roots(t) => Ok(cmd_roots(&datum_from(t)?)),
        Command::FindChi { t, bound } => {
            let (d, g) = setup(t)?;
            Ok(cmd_find_chi(&d, &g, *bound))
        }
        Command::CheckChi { t, chi } => {
            let (d, g) = setup(t)?;
            let chi = require_chi(&d, chi)?;
            Ok(cmd_check_chi(&d, &g, &chi))
        }
        Command::Verify { t, chi, scope } => {
            let (d, g) = setup(t)?;
            let chi = require_chi(&d, chi)?;
            cmd_verify(&d, &g, &chi, *scope)
        }
        Command::VerifyFlag { t, chi } => {
            let (d, g) = setup(t)?;
            let chi = require_chi(&d, chi)?;
            cmd_verify(&d, &g, &chi, Scope::Flag)
        }
        Command::VerifyWonderful { t, chi } => {
            let (d, g) = setup(t)?;
            let chi = require_chi(&d, chi)?;
            cmd_verify(&d, &g, &chi, Scope::Wonderful)
        }
        Command::Mu {
            t,
            chi,
            word,
            lambda,
        } => {
            let d = datum_from(t)?;
            let chi = require_chi(&d, chi)?;
            let letters: Vec<usize> = parse_list(word, "word")?;
            if letters.contains(&0) {
                return Err(Error::Parse("reduced words are 1-based".into()));
            }
            let zero_based: Vec<usize> = letters.iter().map(|i| i - 1).collect();
            let w = WeylElement::from_word(&d, &zero_based)?;
            let lambdas = match lambda {
                Some(s) => {
                    let v: Vec<i64> = parse_list(s, "λ")?;
                    if v.len() != d.rank() {
                        return Err(Error::DimensionMismatch {
                            expected: d.rank(),
                            found: v.len(),
                        });
                    }
                    vec![Coweight(v)]
                }
                None => (0..d.rank())
                    .map(|i| Coweight::fundamental(d.rank(), i))
                    .collect(),
            };
            cmd_mu(&d, &chi, &w, &lambdas)
        }
        Command::ClassifyCells { t, chi } => {
            let (d, g) = setup(t)?;
            let chi = require_chi(&d, chi)?;
            cmd_classify_cells(&d, &g, &chi)
        }
        Command::Picard { t, chi } => {
            let (d, g) = setup(t)?;
            let chi = parse_chi(&d, chi)?.unwrap_or_else(|| d.two_rho());
            cmd_picard(&d, &g, &chi)
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(doc) => {
            let text = match cli.format {
                Format::Json => doc.to_json() + "\n",
                Format::Tsv => doc.to_tsv(),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            if doc.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
