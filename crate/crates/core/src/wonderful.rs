//! Bookkeeping on the wonderful compactification `X` of an adjoint group:
//! the 1×T state of the identity, the closed orbit `Z = G/B × G/B⁻`, the
//! codimension of the unstable locus and Picard ranks of the quotient.
//!
//! Opposite-Borel data on `G/B⁻` with character `-χ` is analyzed on `G/B`
//! with `χ' = -w₀(χ)`; a fixed point `wB⁻` corresponds to `w·w₀·B`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polarization::{check_lemma1, ChiCertificate};
use crate::rootsys::{Coweight, RootDatum, RootType, Weight};
use crate::stability::{
    classify_state, mu, verify_lemma2, CellCheck, Lemma2Report, State, Verdict, VerdictKind,
};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Borel {
    Standard,
    Opposite,
}

/// A flag variety `G/B` or `G/B⁻` polarized by a character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagPolarization {
    pub borel: Borel,
    pub chi: Weight,
}

/// Boundary divisor `Dᵢ` with `O(Dᵢ) = L_{αᵢ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLabel {
    pub index: usize,
    /// `αᵢ` in ω-coordinates.
    pub character: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedOrbit {
    pub first: FlagPolarization,
    pub second: FlagPolarization,
}

impl ClosedOrbit {
    /// Restriction of `L_ψ` to the closed orbit: `(ψ on G/B, -ψ on G/B⁻)`.
    pub fn restrict(psi: &Weight) -> ClosedOrbit {
        ClosedOrbit {
            first: FlagPolarization {
                borel: Borel::Standard,
                chi: psi.clone(),
            },
            second: FlagPolarization {
                borel: Borel::Opposite,
                chi: psi.neg(),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct WonderfulModel<'a> {
    datum: &'a RootDatum,
    group: &'a WeylGroup,
    chi: Weight,
    support: Vec<Weight>,
    boundary_labels: Vec<BoundaryLabel>,
    closed_orbit: ClosedOrbit,
}

impl<'a> WonderfulModel<'a> {
    /// Requires a dominant χ in the root lattice.
    pub fn new(datum: &'a RootDatum, group: &'a WeylGroup, chi: &Weight) -> Result<Self> {
        let support = datum.weight_support(chi)?.into_iter().collect();
        let boundary_labels = (0..datum.rank())
            .map(|i| BoundaryLabel {
                index: i,
                character: datum.simple_root(i),
            })
            .collect();
        Ok(WonderfulModel {
            datum,
            group,
            chi: chi.clone(),
            support,
            boundary_labels,
            closed_orbit: ClosedOrbit::restrict(chi),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        self.datum
    }

    pub fn group(&self) -> &WeylGroup {
        self.group
    }

    pub fn chi(&self) -> &Weight {
        &self.chi
    }

    /// `Π(χ)`, sorted.
    pub fn support(&self) -> &[Weight] {
        &self.support
    }

    pub fn boundary_labels(&self) -> &[BoundaryLabel] {
        &self.boundary_labels
    }

    pub fn closed_orbit(&self) -> &ClosedOrbit {
        &self.closed_orbit
    }

    /// `χ' = -w₀(χ)`, the character on `G/B` standing in for `-χ` on `G/B⁻`.
    pub fn translated_chi(&self) -> Weight {
        self.group.longest().act_on_weight(&self.chi).neg()
    }

    /// Index set `{ν dominant : ν ≤ χ}` of the isotypic decomposition of the
    /// sections of `L_χ` on `X`.
    pub fn section_index_set(&self) -> Result<Vec<Weight>> {
        self.datum.dominant_weights_leq(&self.chi)
    }
}

/// `{-ν : ν ∈ Π(χ)}`.
pub fn identity_state(m: &WonderfulModel) -> State {
    State::new(m.support().iter().map(Weight::neg)).expect("Π(χ) is nonempty")
}

pub fn closed_orbit_restriction(m: &WonderfulModel) -> (FlagPolarization, FlagPolarization) {
    let c = m.closed_orbit();
    (c.first.clone(), c.second.clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    MachineCheckedPass,
    MachineCheckedFail {
        witness: String,
    },
    PaperAsserted,
    /// The input lies outside the stated setting; nothing was checked.
    OutOfHypothesis {
        reason: String,
    },
}

impl CheckStatus {
    pub fn name(&self) -> &'static str {
        match self {
            CheckStatus::MachineCheckedPass => "machine_checked_pass",
            CheckStatus::MachineCheckedFail { .. } => "machine_checked_fail",
            CheckStatus::PaperAsserted => "paper_asserted",
            CheckStatus::OutOfHypothesis { .. } => "out_of_hypothesis",
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::MachineCheckedFail { .. })
    }

    fn from_outcome(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            CheckStatus::MachineCheckedPass
        } else {
            CheckStatus::MachineCheckedFail { witness: witness() }
        }
    }
}

/// Data backing a check, for offline re-verification.
#[derive(Debug, Clone)]
pub enum Evidence {
    None,
    Lemma1(ChiCertificate),
    /// The full cell sweep lives in [`VerificationReport::z_report`].
    Cells(CellCheck),
    FixedPoints {
        compared: usize,
    },
    StateVerdict {
        state_size: usize,
        verdict: Verdict,
    },
    Arithmetic {
        inputs: Vec<(String, i64)>,
        result: i64,
    },
}

#[derive(Debug, Clone)]
pub struct NamedCheck {
    pub name: String,
    pub statement: String,
    pub status: CheckStatus,
    /// Geometric input taken on trust when the check itself is arithmetic.
    pub assumes: Option<String>,
    pub evidence: Evidence,
}

impl NamedCheck {
    fn new(name: &str, statement: &str, status: CheckStatus, evidence: Evidence) -> Self {
        NamedCheck {
            name: name.to_string(),
            statement: statement.to_string(),
            status,
            assumes: None,
            evidence,
        }
    }

    fn assuming(mut self, what: &str) -> Self {
        self.assumes = Some(what.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardReport {
    pub rank_x: usize,
    pub rank_z: usize,
    pub rank_y: usize,
    pub basis_x: Vec<String>,
    pub basis_z: Vec<String>,
    pub basis_y: Vec<String>,
    pub within_hypotheses: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub chi: Weight,
    pub chi_prime: Weight,
    pub checks: Vec<NamedCheck>,
    /// Cell sweep of `χ'` on the second factor of `Z`.
    pub z_report: Option<Lemma2Report>,
    pub min_unstable_codim_in_z: Option<usize>,
    pub derived_codim_bound_in_x: Option<usize>,
    pub picard: Option<PicardReport>,
}

impl VerificationReport {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status.is_fail())
    }

    pub fn check(&self, name: &str) -> Option<&NamedCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn count(&self, status: &str) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status.name() == status)
            .count()
    }
}

fn words(cells: &[WeylElement]) -> String {
    cells
        .iter()
        .map(|w| format!("{w:?}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn lemma2_witness(r: &Lemma2Report) -> String {
    let mut parts = Vec::new();
    for (name, c) in [
        ("codim_implication", &r.codim_implication),
        ("semistable_is_stable", &r.semistable_is_stable),
        ("low_codim_stable", &r.low_codim_stable),
    ] {
        if !c.passed {
            parts.push(format!("{name} violated at {}", words(&c.violations)));
        }
    }
    parts.join("; ")
}

/// Compares the state of each fixed point `wB⁻` under `-χ`, which is
/// `{-w(χ)}`, with the `χ'`-state of `w·w₀·B`, through μ at `±λᵢ`.
fn fixed_point_agreement(m: &WonderfulModel) -> std::result::Result<usize, String> {
    let d = m.datum();
    let w0 = m.group().longest();
    let chi_prime = m.translated_chi();
    let n = d.rank();
    for w in m.group().elements() {
        let opposite = State::new([w.act_on_weight(m.chi()).neg()]).expect("one weight");
        let translated =
            State::new([w.compose(d, w0).act_on_weight(&chi_prime)]).expect("one weight");
        for i in 0..n {
            let l = Coweight::fundamental(n, i);
            let minus = Coweight(l.0.iter().map(|x| -x).collect());
            for lambda in [l, minus] {
                if mu(d, &opposite, &lambda) != mu(d, &translated, &lambda) {
                    return Err(format!("μ differs at w = {w:?}, λ = {:?}", lambda.0));
                }
            }
        }
        if opposite != translated {
            return Err(format!("states differ at w = {w:?}"));
        }
    }
    Ok(m.group().len())
}

pub fn verify_prop1(m: &WonderfulModel) -> Result<VerificationReport> {
    let d = m.datum();
    let chi_prime = m.translated_chi();
    let mut checks = Vec::new();

    let cert = check_lemma1(d, m.group(), m.chi());
    checks.push(NamedCheck::new(
        "lemma1_hypotheses",
        "χ satisfies the four polarization conditions",
        CheckStatus::from_outcome(cert.passes(), || match &cert.failure_witness {
            Some(w) => format!("{} fails: {w:?}", w.condition().name()),
            None => "condition failed".to_string(),
        }),
        Evidence::Lemma1(cert),
    ));

    let agreement = fixed_point_agreement(m);
    checks.push(NamedCheck::new(
        "closed_orbit_translation",
        "fixed points of G/B⁻ under -χ match fixed points of G/B under -w₀χ",
        match &agreement {
            Ok(_) => CheckStatus::MachineCheckedPass,
            Err(e) => CheckStatus::MachineCheckedFail { witness: e.clone() },
        },
        Evidence::FixedPoints {
            compared: agreement.unwrap_or(0),
        },
    ));

    let z = verify_lemma2(d, m.group(), &chi_prime)?;
    checks.push(NamedCheck::new(
        "z_semistable_equals_stable",
        "every Schubert cell of the second factor of Z passes the ss = s sweep",
        CheckStatus::from_outcome(z.all_passed(), || lemma2_witness(&z)),
        Evidence::Cells(z.semistable_is_stable.clone()),
    ));

    let min_codim = z.sweep.min_unstable_codim();
    let z_ok = min_codim.is_none_or(|c| c >= 2);
    checks.push(NamedCheck::new(
        "z_unstable_codim_at_least_two",
        "unstable Schubert cells of the second factor of Z have codimension >= 2",
        CheckStatus::from_outcome(z_ok, || {
            let low: Vec<WeylElement> = z
                .sweep
                .cells
                .iter()
                .filter(|c| c.generic_verdict.kind() == VerdictKind::Unstable && c.codim < 2)
                .map(|c| c.w.clone())
                .collect();
            format!("unstable cells of codimension < 2: {}", words(&low))
        }),
        Evidence::Cells(z.codim_implication.clone()),
    ));

    let derived = min_codim.map(|c| c + 1);
    let x_ok = derived.is_none_or(|c| c >= 3);
    checks.push(
        NamedCheck::new(
            "x_unstable_codim_at_least_three",
            "min unstable codimension in Z plus one is at least 3",
            CheckStatus::from_outcome(x_ok, || format!("derived bound {derived:?} < 3")),
            Evidence::Arithmetic {
                inputs: vec![(
                    "min_unstable_codim_in_z".to_string(),
                    min_codim.map_or(-1, |c| c as i64),
                )],
                result: derived.map_or(-1, |c| c as i64),
            },
        )
        .assuming(
            "unstable points lie in the boundary and meet each Dᵢ in the Z-level codimension",
        ),
    );

    let id = identity_state(m);
    let has_zero = id.contains(&Weight::zero(d.rank()));
    let verdict = classify_state(d, &id);
    let id_ok = has_zero && verdict.kind() == VerdictKind::Stable;
    checks.push(NamedCheck::new(
        "identity_semistable",
        "the 1×T state of the identity contains 0 and is stable",
        CheckStatus::from_outcome(id_ok, || {
            if has_zero {
                format!("identity state is {}", verdict.kind().name())
            } else {
                "0 is not a weight of the identity state".to_string()
            }
        }),
        Evidence::StateVerdict {
            state_size: id.len(),
            verdict,
        },
    ));

    Ok(VerificationReport {
        chi: m.chi().clone(),
        chi_prime,
        checks,
        z_report: Some(z),
        min_unstable_codim_in_z: min_codim,
        derived_codim_bound_in_x: derived,
        picard: None,
    })
}

pub fn picard_rank_report(m: &WonderfulModel) -> PicardReport {
    let d = m.datum();
    let n = d.rank();
    let (within_hypotheses, note) = match d.root_type() {
        RootType::A if n >= 3 => (true, None),
        RootType::A => (
            false,
            Some(format!(
                "outside theorem hypotheses: PSL({}) needs n >= 3",
                n + 1
            )),
        ),
        _ => (false, Some("theorem stated for PSL(n+1) only".to_string())),
    };
    let basis_x: Vec<String> = (1..=n).map(|i| format!("L(ω{i})")).collect();
    let basis_z = (1..=n)
        .map(|i| format!("p1*L(ω{i})"))
        .chain((1..=n).map(|i| format!("p2*L(ω{i})")))
        .collect();
    let basis_y = (1..=n)
        .map(|i| format!("L{i} (boundary D{i})"))
        .chain((1..=n).map(|i| format!("character ε{i} of T̂")))
        .collect();
    PicardReport {
        rank_x: basis_x.len(),
        rank_z: 2 * n,
        rank_y: 2 * n,
        basis_x,
        basis_z,
        basis_y,
        within_hypotheses,
        note,
    }
}

fn picard_checks(p: &PicardReport, n: usize) -> Vec<NamedCheck> {
    let status = |ok: bool, what: &str| {
        if p.within_hypotheses {
            CheckStatus::from_outcome(ok, || format!("{what} rank mismatch"))
        } else {
            CheckStatus::OutOfHypothesis {
                reason: p.note.clone().unwrap_or_default(),
            }
        }
    };
    vec![
        NamedCheck::new(
            "picard_rank_y",
            "Pic(Y) has rank n + n = 2n",
            status(p.rank_y == p.basis_y.len() && p.rank_y == 2 * n, "Y"),
            Evidence::Arithmetic {
                inputs: vec![
                    ("boundary_classes".to_string(), n as i64),
                    ("characters_of_t_hat".to_string(), n as i64),
                ],
                result: p.rank_y as i64,
            },
        )
        .assuming("boundary classes are independent and Pic(G/T) is the character group of T̂"),
        NamedCheck::new(
            "picard_rank_difference",
            "rank Pic(Y) - rank Pic(X) = n",
            status(p.rank_y - p.rank_x == n, "Y - X"),
            Evidence::Arithmetic {
                inputs: vec![
                    ("picard_rank_y".to_string(), p.rank_y as i64),
                    ("picard_rank_x".to_string(), p.rank_x as i64),
                ],
                result: (p.rank_y - p.rank_x) as i64,
            },
        ),
    ]
}

/// Picard bookkeeping as a report of its own.
pub fn verify_picard(m: &WonderfulModel) -> VerificationReport {
    let p = picard_rank_report(m);
    VerificationReport {
        chi: m.chi().clone(),
        chi_prime: m.translated_chi(),
        checks: picard_checks(&p, m.datum().rank()),
        z_report: None,
        min_unstable_codim_in_z: None,
        derived_codim_bound_in_x: None,
        picard: Some(p),
    }
}

/// Refuses type A of rank below 3; other types get the Prop-1 checks with
/// the corollary lines marked out of hypothesis.
pub fn verify_cor1(m: &WonderfulModel) -> Result<VerificationReport> {
    let d = m.datum();
    let n = d.rank();
    if d.root_type() == RootType::A && n < 3 {
        return Err(Error::ExcludedByHypothesis(format!(
            "{} is excluded: the corollary needs PSL(n+1) with n >= 3",
            d.label()
        )));
    }
    let mut report = verify_prop1(m)?;
    let scoped = |status: CheckStatus| {
        if d.root_type() == RootType::A {
            status
        } else {
            CheckStatus::OutOfHypothesis {
                reason: "theorem stated for PSL(n+1) only".to_string(),
            }
        }
    };
    let prop1_ok = !report.any_failed();
    let x_ok = report.derived_codim_bound_in_x.is_none_or(|c| c >= 3);
    report.checks.push(NamedCheck::new(
        "cor1_prop1_holds",
        "all machine-checked lines of the proposition pass",
        scoped(CheckStatus::from_outcome(prop1_ok, || {
            let failed: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| c.status.is_fail())
                .map(|c| c.name.as_str())
                .collect();
            format!("failed: {}", failed.join(","))
        })),
        Evidence::None,
    ));
    report.checks.push(NamedCheck::new(
        "cor1_codim_at_least_three",
        "the unstable locus of X has codimension >= 3",
        scoped(CheckStatus::from_outcome(x_ok, || {
            format!("derived bound {:?} < 3", report.derived_codim_bound_in_x)
        })),
        Evidence::Arithmetic {
            inputs: vec![],
            result: report.derived_codim_bound_in_x.map_or(-1, |c| c as i64),
        },
    ));
    report.checks.push(NamedCheck::new(
        "cor1_t_action_free",
        "{1}×T acts freely on the semistable locus",
        scoped(CheckStatus::PaperAsserted),
        Evidence::None,
    ));
    report.checks.push(NamedCheck::new(
        "cor1_quotient_smooth",
        "the quotient is smooth and L_χ descends to a projective embedding",
        scoped(CheckStatus::PaperAsserted),
        Evidence::None,
    ));
    let p = picard_rank_report(m);
    report.checks.extend(picard_checks(&p, n));
    report.picard = Some(p);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(t: RootType, n: usize) -> (RootDatum, WeylGroup) {
        let d = RootDatum::new(t, n).unwrap();
        let g = WeylGroup::new(&d).unwrap();
        (d, g)
    }

    #[test]
    fn model_labels() {
        let (d, g) = setup(RootType::A, 3);
        let m = WonderfulModel::new(&d, &g, &Weight(vec![3, 3, 1])).unwrap();
        for (i, b) in m.boundary_labels().iter().enumerate() {
            assert_eq!(b.character, d.simple_root(i));
            let r = ClosedOrbit::restrict(&b.character);
            assert_eq!(r.second.chi, b.character.neg());
        }
        let (first, second) = closed_orbit_restriction(&m);
        assert_eq!(first.borel, Borel::Standard);
        assert_eq!(second.borel, Borel::Opposite);
        assert_eq!(second.chi, Weight(vec![-3, -3, -1]));
        assert_eq!(m.translated_chi(), Weight(vec![1, 3, 3]));
    }

    #[test]
    fn identity_state_is_negated_support() {
        let (d, g) = setup(RootType::A, 3);
        let m = WonderfulModel::new(&d, &g, &Weight(vec![3, 3, 1])).unwrap();
        let id = identity_state(&m);
        assert!(id.contains(&Weight::zero(3)));
        let dual: Vec<Weight> = d
            .weight_support(&m.translated_chi())
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(id.weights(), dual.as_slice());
    }

    #[test]
    fn rejects_non_root_lattice() {
        let (d, g) = setup(RootType::A, 3);
        assert!(WonderfulModel::new(&d, &g, &Weight(vec![1, 0, 0])).is_err());
    }

    #[test]
    fn prop1_a3() {
        let (d, g) = setup(RootType::A, 3);
        let m = WonderfulModel::new(&d, &g, &Weight(vec![3, 3, 1])).unwrap();
        let r = verify_prop1(&m).unwrap();
        assert!(!r.any_failed(), "{:?}", r.checks);
        assert_eq!(r.min_unstable_codim_in_z, Some(2));
        assert_eq!(r.derived_codim_bound_in_x, Some(3));
    }

    #[test]
    fn prop1_two_rho_fails() {
        let (d, g) = setup(RootType::A, 3);
        let m = WonderfulModel::new(&d, &g, &d.two_rho()).unwrap();
        let r = verify_prop1(&m).unwrap();
        assert!(r
            .check("z_semistable_equals_stable")
            .unwrap()
            .status
            .is_fail());
        assert!(r.check("lemma1_hypotheses").unwrap().status.is_fail());
    }

    #[test]
    fn picard_ranks() {
        for (n, y) in [(3, 6), (4, 8)] {
            let (d, g) = setup(RootType::A, n);
            let m = WonderfulModel::new(&d, &g, &d.two_rho()).unwrap();
            let p = picard_rank_report(&m);
            assert_eq!((p.rank_x, p.rank_z, p.rank_y), (n, 2 * n, y));
            assert!(p.within_hypotheses);
        }
        let (d, g) = setup(RootType::A, 2);
        let m = WonderfulModel::new(&d, &g, &d.two_rho()).unwrap();
        assert!(!picard_rank_report(&m).within_hypotheses);
    }

    #[test]
    fn cor1_scope() {
        let (d, g) = setup(RootType::A, 2);
        let m = WonderfulModel::new(&d, &g, &d.two_rho()).unwrap();
        assert!(matches!(
            verify_cor1(&m),
            Err(Error::ExcludedByHypothesis(_))
        ));

        let (d, g) = setup(RootType::A, 3);
        let m = WonderfulModel::new(&d, &g, &Weight(vec![3, 3, 1])).unwrap();
        let r = verify_cor1(&m).unwrap();
        assert!(!r.any_failed());
        assert_eq!(r.count("paper_asserted"), 2);

        let (d, g) = setup(RootType::B, 3);
        let m = WonderfulModel::new(&d, &g, &Weight(vec![2, 1, 2])).unwrap();
        let r = verify_cor1(&m).unwrap();
        assert!(!r.any_failed());
        assert!(r.count("out_of_hypothesis") >= 4);
    }
}
