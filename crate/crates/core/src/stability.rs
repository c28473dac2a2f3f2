//! Hilbert–Mumford analysis of torus states on the flag variety.
//!
//! A state is the set of torus weights on the nonzero coordinates of a point.
//! With `μ(s, λ) = -min_{ψ ∈ s} ⟨ψ, λ⟩`, a state is semistable iff 0 lies in
//! the convex hull of its weights and stable iff 0 is an interior point; both
//! are decided by exact LP with re-checkable certificates.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polarization::check_lemma1;
use crate::ratlp::{interior_membership, ConeWitness, InteriorCertificate, RatVector, Rational};
use crate::rootsys::{Coweight, RootDatum, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// Torus weights of a point, deduplicated and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State {
    weights: Vec<Weight>,
}

impl State {
    pub fn new(weights: impl IntoIterator<Item = Weight>) -> Result<Self> {
        let mut weights: Vec<Weight> = weights.into_iter().collect();
        weights.sort();
        weights.dedup();
        if weights.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(State { weights })
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.weights.binary_search(w).is_ok()
    }

    /// Applies a Weyl element to every weight.
    pub fn translate(&self, w: &WeylElement) -> State {
        State::new(self.weights.iter().map(|psi| w.act_on_weight(psi))).expect("nonempty")
    }

    // α-coordinates scaled by det(cartan) > 0; hulls, cones and separating
    // functionals through the origin are unchanged by the positive scaling.
    fn alpha_points(&self, d: &RootDatum) -> Vec<RatVector> {
        self.weights
            .iter()
            .map(|w| RatVector::from_ints(&d.scaled_alpha_coords(w)))
            .collect()
    }
}

pub fn mu(d: &RootDatum, state: &State, lambda: &Coweight) -> Rational {
    let min = state
        .weights()
        .iter()
        .map(|psi| d.pairing(psi, lambda))
        .min()
        .expect("states are nonempty");
    -min
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictKind {
    Unstable,
    SemistableNotStable,
    Stable,
}

impl VerdictKind {
    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::Unstable => "unstable",
            VerdictKind::SemistableNotStable => "semistable_not_stable",
            VerdictKind::Stable => "stable",
        }
    }
}

/// A stability verdict with its certificate. Hull coefficients are aligned
/// with `State::weights`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `μ(state, destabilizer) < 0`.
    Unstable { destabilizer: Coweight },
    /// 0 is in the hull, and `⟨ψ, supporting⟩ >= 0` for every weight.
    SemistableNotStable {
        hull: Vec<Rational>,
        supporting: Coweight,
    },
    /// 0 is in the hull and every `±e_j` is a nonnegative combination of the
    /// weights, taken in α-coordinates scaled by `det(cartan)`.
    Stable {
        hull: Vec<Rational>,
        spanning: Vec<ConeWitness>,
    },
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Unstable { .. } => VerdictKind::Unstable,
            Verdict::SemistableNotStable { .. } => VerdictKind::SemistableNotStable,
            Verdict::Stable { .. } => VerdictKind::Stable,
        }
    }

    /// Re-checks the certificate against the state by exact evaluation.
    pub fn verify(&self, d: &RootDatum, state: &State) -> bool {
        let points = state.alpha_points(d);
        let origin = RatVector::zeros(d.rank());
        match self {
            Verdict::Unstable { destabilizer } => mu(d, state, destabilizer).is_negative(),
            Verdict::SemistableNotStable { hull, supporting } => InteriorCertificate::Boundary {
                hull: hull.clone(),
                supporting: supporting.to_ratvector(),
            }
            .verify(&points, &origin),
            Verdict::Stable { hull, spanning } => InteriorCertificate::Interior {
                hull: hull.clone(),
                spanning: spanning.clone(),
            }
            .verify(&points, &origin),
        }
    }
}

fn to_coweight(v: &RatVector) -> Coweight {
    Coweight(
        v.primitive_integer()
            .iter()
            .map(|x| i64::try_from(x).expect("primitive coweight fits in i64"))
            .collect(),
    )
}

pub fn classify_state(d: &RootDatum, state: &State) -> Verdict {
    let points = state.alpha_points(d);
    let origin = RatVector::zeros(d.rank());
    let cert = interior_membership(&points, &origin).expect("state dimensions are consistent");
    match cert {
        InteriorCertificate::Exterior { separator } => Verdict::Unstable {
            destabilizer: to_coweight(&separator),
        },
        InteriorCertificate::Boundary { hull, supporting } => Verdict::SemistableNotStable {
            hull,
            supporting: to_coweight(&supporting),
        },
        InteriorCertificate::Interior { hull, spanning } => Verdict::Stable { hull, spanning },
    }
}

/// Weight support of `V(χ)` with cached α-coordinates, for building the
/// generic states of Schubert cells.
#[derive(Debug, Clone)]
pub struct SchubertContext {
    chi: Weight,
    support: Vec<Weight>,
    support_alpha: Vec<Vec<i64>>,
}

impl SchubertContext {
    pub fn new(d: &RootDatum, chi: &Weight) -> Result<Self> {
        let support: Vec<Weight> = d.weight_support(chi)?.into_iter().collect();
        let support_alpha = support
            .iter()
            .map(|w| {
                d.alpha_coords_int(w)
                    .expect("support lies in the root lattice")
            })
            .collect();
        Ok(SchubertContext {
            chi: chi.clone(),
            support,
            support_alpha,
        })
    }

    pub fn chi(&self) -> &Weight {
        &self.chi
    }

    pub fn support(&self) -> &[Weight] {
        &self.support
    }

    /// Generic state of the cell `BwB/B`: all `ν ∈ Π(χ)` with `w(χ) ≤ ν`.
    pub fn cell_state(&self, d: &RootDatum, w: &WeylElement) -> State {
        let low = d
            .alpha_coords_int(&w.act_on_weight(&self.chi))
            .expect("χ lies in the root lattice");
        let weights = self
            .support
            .iter()
            .zip(&self.support_alpha)
            .filter(|(_, a)| a.iter().zip(&low).all(|(x, y)| x >= y))
            .map(|(w, _)| w.clone());
        State::new(weights).expect("w(χ) itself is in the support")
    }
}

pub fn schubert_cell_state(d: &RootDatum, chi: &Weight, w: &WeylElement) -> Result<State> {
    Ok(SchubertContext::new(d, chi)?.cell_state(d, w))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub w: WeylElement,
    pub length: usize,
    /// `l(w₀) - l(w)`
    pub codim: usize,
    pub w_chi: Weight,
    pub w_chi_leq_zero: bool,
    pub state_size: usize,
    pub generic_verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct CellSweep {
    pub chi: Weight,
    /// Whether χ passes all four polarization conditions.
    pub hypotheses_met: bool,
    /// One report per Weyl element, ordered by length then reduced word.
    pub cells: Vec<CellReport>,
}

impl CellSweep {
    /// Minimal codimension among cells whose generic state is unstable.
    pub fn min_unstable_codim(&self) -> Option<usize> {
        self.cells
            .iter()
            .filter(|c| c.generic_verdict.kind() == VerdictKind::Unstable)
            .map(|c| c.codim)
            .min()
    }
}

pub fn classify_cells(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> Result<CellSweep> {
    let ctx = SchubertContext::new(d, chi)?;
    let top = group.max_length();
    let mut cells: Vec<CellReport> = group
        .elements()
        .par_iter()
        .map(|w| {
            let state = ctx.cell_state(d, w);
            let w_chi = w.act_on_weight(chi);
            let w_chi_leq_zero = d
                .alpha_coords_int(&w_chi)
                .expect("χ lies in the root lattice")
                .iter()
                .all(|&c| c <= 0);
            CellReport {
                w: w.clone(),
                length: w.length(),
                codim: top - w.length(),
                w_chi,
                w_chi_leq_zero,
                state_size: state.len(),
                generic_verdict: classify_state(d, &state),
            }
        })
        .collect();
    cells.sort_by(|a, b| (a.length, a.w.reduced_word()).cmp(&(b.length, b.w.reduced_word())));
    Ok(CellSweep {
        chi: chi.clone(),
        hypotheses_met: check_lemma1(d, group, chi).passes(),
        cells,
    })
}

/// Outcome of one sweep check; `violations` lists the offending cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub passed: bool,
    pub violations: Vec<WeylElement>,
}

impl CellCheck {
    fn from_violations(violations: Vec<WeylElement>) -> Self {
        CellCheck {
            passed: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Lemma2Report {
    pub sweep: CellSweep,
    /// `w(χ) ≰ 0` implies `l(w₀) - l(w) >= 2`.
    pub codim_implication: CellCheck,
    /// No generic cell state is semistable without being stable.
    pub semistable_is_stable: CellCheck,
    /// Every cell of codimension at most 1 is generically stable.
    pub low_codim_stable: CellCheck,
}

impl Lemma2Report {
    pub fn all_passed(&self) -> bool {
        self.codim_implication.passed
            && self.semistable_is_stable.passed
            && self.low_codim_stable.passed
    }
}

pub fn verify_lemma2(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> Result<Lemma2Report> {
    let sweep = classify_cells(d, group, chi)?;
    let pick = |pred: &dyn Fn(&CellReport) -> bool| {
        CellCheck::from_violations(
            sweep
                .cells
                .iter()
                .filter(|c| pred(c))
                .map(|c| c.w.clone())
                .collect(),
        )
    };
    let codim_implication = pick(&|c| !c.w_chi_leq_zero && c.codim < 2);
    let semistable_is_stable =
        pick(&|c| c.generic_verdict.kind() == VerdictKind::SemistableNotStable);
    let low_codim_stable =
        pick(&|c| c.codim <= 1 && c.generic_verdict.kind() != VerdictKind::Stable);
    Ok(Lemma2Report {
        sweep,
        codim_implication,
        semistable_is_stable,
        low_codim_stable,
    })
}

/// `μ(state of BwB/B, λᵢ) = -⟨w(χ), λᵢ⟩` for every `w` and fundamental `λᵢ`;
/// violations list the offending elements.
pub fn check_mu_formula(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> Result<CellCheck> {
    let ctx = SchubertContext::new(d, chi)?;
    let n = d.rank();
    let violations = group
        .elements()
        .par_iter()
        .filter(|w| {
            let state = ctx.cell_state(d, w);
            let w_chi = w.act_on_weight(chi);
            (0..n).any(|i| {
                let l = Coweight::fundamental(n, i);
                mu(d, &state, &l) != -d.pairing(&w_chi, &l)
            })
        })
        .cloned()
        .collect();
    Ok(CellCheck::from_violations(violations))
}
