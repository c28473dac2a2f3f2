//! Machine-readable reports. Indices and reduced words are 1-based here;
//! rationals are "p/q" strings.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::polarization::{ChiCertificate, FailureWitness};
use crate::ratlp::{ConeWitness, RatVector, Rational};
use crate::rootsys::{RootDatum, Weight};
use crate::stability::{CellCheck, CellSweep, SchubertContext, State, Verdict};
use crate::weyl::WeylElement;
use crate::wonderful::{CheckStatus, Evidence, NamedCheck, VerificationReport, WonderfulModel};

pub const FORMAT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub statement: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assumes: Option<String>,
    #[serde(default)]
    pub certificate: Value,
}

impl CheckLine {
    pub fn new(name: &str, statement: &str, status: &CheckStatus, certificate: Value) -> Self {
        let detail = match status {
            CheckStatus::MachineCheckedFail { witness } => Some(witness.clone()),
            CheckStatus::OutOfHypothesis { reason } => Some(reason.clone()),
            _ => None,
        };
        CheckLine {
            name: name.to_string(),
            statement: statement.to_string(),
            status: status.name().to_string(),
            detail,
            assumes: None,
            certificate,
        }
    }

    pub fn machine(
        name: &str,
        statement: &str,
        ok: bool,
        detail: impl FnOnce() -> String,
        certificate: Value,
    ) -> Self {
        let status = if ok {
            CheckStatus::MachineCheckedPass
        } else {
            CheckStatus::MachineCheckedFail { witness: detail() }
        };
        CheckLine::new(name, statement, &status, certificate)
    }

    pub fn failed(&self) -> bool {
        self.status == "machine_checked_fail"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<CheckLine>,
    #[serde(default)]
    pub data: Value,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section {
            name: name.to_string(),
            checks: Vec::new(),
            data: json!({}),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: u32,
    pub tool_version: String,
    pub command: String,
    pub input: Value,
    pub sections: Vec<Section>,
    /// "pass" iff no check is `machine_checked_fail`.
    pub outcome: String,
}

impl ReportDocument {
    pub fn new(command: &str, input: Value, sections: Vec<Section>) -> Self {
        let failed = sections
            .iter()
            .flat_map(|s| &s.checks)
            .any(CheckLine::failed);
        ReportDocument {
            format_version: FORMAT_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            input,
            sections,
            outcome: if failed { "fail" } else { "pass" }.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == "pass"
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn check(&self, name: &str) -> Option<&CheckLine> {
        self.sections
            .iter()
            .flat_map(|s| &s.checks)
            .find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One row per check, then one per scalar data field.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("section\tname\tstatus\tdetail\n");
        for s in &self.sections {
            for c in &s.checks {
                let detail = c.detail.as_deref().unwrap_or("");
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    s.name,
                    c.name,
                    c.status,
                    clean(detail)
                ));
            }
            if let Value::Object(map) = &s.data {
                for (k, v) in map {
                    let shown = match v {
                        Value::String(x) => x.clone(),
                        Value::Number(_) | Value::Bool(_) | Value::Null => v.to_string(),
                        _ => continue,
                    };
                    out.push_str(&format!("{}\t{}\tdata\t{}\n", s.name, k, clean(&shown)));
                }
            }
        }
        out.push_str(&format!("report\toutcome\t{}\t\n", self.outcome));
        out
    }
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

pub fn word(w: &WeylElement) -> Vec<usize> {
    w.reduced_word().iter().map(|i| i + 1).collect()
}

pub fn words(ws: &[WeylElement]) -> Vec<Vec<usize>> {
    ws.iter().map(word).collect()
}

pub fn rats(v: &RatVector) -> Vec<String> {
    v.entries().iter().map(Rational::to_string).collect()
}

pub fn chi_echo(d: &RootDatum, chi: &Weight) -> Value {
    json!({ "omega": chi.0, "alpha": rats(&d.alpha_coords(chi)) })
}

pub fn failure_json(w: &FailureWitness) -> Value {
    match w {
        FailureWitness::NotInNs { alpha_coords } => json!({
            "condition": w.condition().name(),
            "alpha_coords": rats(alpha_coords),
        }),
        FailureWitness::NotRegularDominant { index } => json!({
            "condition": w.condition().name(),
            "index": index + 1,
        }),
        FailureWitness::ReflectionNegative {
            index,
            reflected_alpha,
        } => json!({
            "condition": w.condition().name(),
            "index": index + 1,
            "reflected_alpha": rats(reflected_alpha),
        }),
        FailureWitness::PairingZero { word, index } => json!({
            "condition": w.condition().name(),
            "word": word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "index": index + 1,
        }),
    }
}

pub fn lemma1_json(d: &RootDatum, cert: &ChiCertificate) -> Value {
    let reflected: Vec<Vec<String>> = (0..d.rank())
        .map(|i| rats(&d.alpha_coords(&d.simple_reflect(&cert.chi, i))))
        .collect();
    json!({
        "chi": chi_echo(d, &cert.chi),
        "in_NS": cert.in_ns,
        "regular_dominant": cert.regular_dominant,
        "reflections_nonneg": cert.reflections_nonneg,
        "pairings_nonzero": cert.pairings_nonzero,
        "reflected_alpha": reflected,
        "failure_witness": cert.failure_witness.as_ref().map(failure_json),
    })
}

/// The four conditions as separate lines.
pub fn lemma1_checks(d: &RootDatum, cert: &ChiCertificate, weyl_order: usize) -> Vec<CheckLine> {
    let detail = || {
        cert.failure_witness
            .as_ref()
            .map(|w| serde_json::to_string(&failure_json(w)).expect("json"))
            .unwrap_or_default()
    };
    let body = lemma1_json(d, cert);
    vec![
        CheckLine::machine(
            "in_NS",
            "χ has nonnegative integer α-coordinates",
            cert.in_ns,
            detail,
            body.clone(),
        ),
        CheckLine::machine(
            "regular_dominant",
            "every ω-coordinate of χ is positive",
            cert.regular_dominant,
            detail,
            json!({ "omega": cert.chi.0 }),
        ),
        CheckLine::machine(
            "reflections_nonneg",
            "every simple reflection of χ has nonnegative α-coordinates",
            cert.reflections_nonneg,
            detail,
            json!({ "reflected_alpha": body["reflected_alpha"] }),
        ),
        CheckLine::machine(
            "pairings_nonzero",
            "⟨χ, w(λᵢ)⟩ ≠ 0 for all w and i",
            cert.pairings_nonzero,
            detail,
            json!({ "weyl_elements_checked": weyl_order, "failure_witness": body["failure_witness"] }),
        ),
    ]
}

fn combination(weights: &[Weight], coeffs: &[Rational]) -> Value {
    Value::Array(
        weights
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| json!({ "weight": w.0, "coeff": c.to_string() }))
            .collect(),
    )
}

fn spanning_json(weights: &[Weight], s: &ConeWitness) -> Value {
    json!({
        "direction": rats(&s.direction),
        "combination": combination(weights, &s.coefficients),
    })
}

/// Verdict with sparse certificates: hull and cone combinations name the
/// weights they use. Cone combinations are over α-coordinates scaled by
/// `det(cartan)`.
pub fn verdict_json(state: &State, v: &Verdict) -> Value {
    let ws = state.weights();
    match v {
        Verdict::Unstable { destabilizer } => json!({
            "verdict": v.kind().name(),
            "destabilizer": destabilizer.0,
        }),
        Verdict::SemistableNotStable { hull, supporting } => json!({
            "verdict": v.kind().name(),
            "hull": combination(ws, hull),
            "supporting": supporting.0,
        }),
        Verdict::Stable { hull, spanning } => json!({
            "verdict": v.kind().name(),
            "hull": combination(ws, hull),
            "spanning": spanning.iter().map(|s| spanning_json(ws, s)).collect::<Vec<_>>(),
        }),
    }
}

pub fn cell_check_json(c: &CellCheck) -> Value {
    json!({ "passed": c.passed, "violations": words(&c.violations) })
}

pub fn sweep_json(d: &RootDatum, sweep: &CellSweep) -> Value {
    let ctx = SchubertContext::new(d, &sweep.chi).expect("sweeps exist only for valid χ");
    let cells: Vec<Value> = sweep
        .cells
        .iter()
        .map(|c| {
            let state = ctx.cell_state(d, &c.w);
            json!({
                "word": word(&c.w),
                "length": c.length,
                "codim": c.codim,
                "w_chi": chi_echo(d, &c.w_chi),
                "w_chi_leq_zero": c.w_chi_leq_zero,
                "state_size": c.state_size,
                "generic": verdict_json(&state, &c.generic_verdict),
            })
        })
        .collect();
    json!({
        "chi": chi_echo(d, &sweep.chi),
        "support_size": ctx.support().len(),
        "alpha_scale": d.cartan_determinant(),
        "min_unstable_codim": sweep.min_unstable_codim(),
        "cells": cells,
    })
}

fn evidence_json(m: &WonderfulModel, e: &Evidence) -> Value {
    match e {
        Evidence::None => Value::Null,
        Evidence::Lemma1(c) => lemma1_json(m.datum(), c),
        Evidence::Cells(c) => cell_check_json(c),
        Evidence::FixedPoints { compared } => json!({ "fixed_points_compared": compared }),
        Evidence::StateVerdict {
            state_size,
            verdict,
        } => {
            let state = crate::wonderful::identity_state(m);
            json!({
                "state_size": state_size,
                "alpha_scale": m.datum().cartan_determinant(),
                "generic": verdict_json(&state, verdict),
            })
        }
        Evidence::Arithmetic { inputs, result } => {
            let map: serde_json::Map<String, Value> =
                inputs.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            json!({ "inputs": map, "result": result })
        }
    }
}

pub fn named_check_line(m: &WonderfulModel, c: &NamedCheck) -> CheckLine {
    let mut line = CheckLine::new(
        &c.name,
        &c.statement,
        &c.status,
        evidence_json(m, &c.evidence),
    );
    line.assumes = c.assumes.clone();
    line
}

pub fn wonderful_section(m: &WonderfulModel, r: &VerificationReport) -> Section {
    let d = m.datum();
    let mut s = Section::new("wonderful");
    s.checks = r.checks.iter().map(|c| named_check_line(m, c)).collect();
    s.data = json!({
        "chi": chi_echo(d, &r.chi),
        "chi_prime": chi_echo(d, &r.chi_prime),
        "boundary_labels": m.boundary_labels().iter().map(|b| json!({
            "divisor": format!("D{}", b.index + 1),
            "character": chi_echo(d, &b.character),
        })).collect::<Vec<_>>(),
        "min_unstable_codim_in_Z": r.min_unstable_codim_in_z,
        "derived_codim_bound_in_X": r.derived_codim_bound_in_x,
        "picard_rank_X": r.picard.as_ref().map(|p| p.rank_x),
        "picard_rank_Z": r.picard.as_ref().map(|p| p.rank_z),
        "picard_rank_Y": r.picard.as_ref().map(|p| p.rank_y),
        "picard": r.picard.as_ref().map(|p| json!({
            "basis_X": p.basis_x,
            "basis_Z": p.basis_z,
            "basis_Y": p.basis_y,
            "within_hypotheses": p.within_hypotheses,
            "note": p.note,
        })),
        "z_sweep": r.z_report.as_ref().map(|z| sweep_json(d, &z.sweep)),
    });
    s
}
