//! Checking and finding polarization characters χ: regular dominant, in `ℕS`,
//! with every `s_i(χ) ≥ 0` and `⟨χ, w(λ_i)⟩ ≠ 0` for all `w ∈ W` and all `i`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ratlp::{RatVector, Rational};
use crate::rootsys::{Coweight, RootDatum, RootType, Weight};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    InNs,
    RegularDominant,
    ReflectionsNonneg,
    PairingsNonzero,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::InNs => "in_NS",
            Condition::RegularDominant => "regular_dominant",
            Condition::ReflectionsNonneg => "reflections_nonneg",
            Condition::PairingsNonzero => "pairings_nonzero",
        }
    }
}

/// Data that reproduces a single failed condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureWitness {
    NotInNs {
        alpha_coords: RatVector,
    },
    NotRegularDominant {
        index: usize,
    },
    ReflectionNegative {
        index: usize,
        reflected_alpha: RatVector,
    },
    /// `⟨χ, w(λ_index)⟩ = 0` for the element with this reduced word.
    PairingZero {
        word: Vec<usize>,
        index: usize,
    },
}

impl FailureWitness {
    pub fn condition(&self) -> Condition {
        match self {
            FailureWitness::NotInNs { .. } => Condition::InNs,
            FailureWitness::NotRegularDominant { .. } => Condition::RegularDominant,
            FailureWitness::ReflectionNegative { .. } => Condition::ReflectionsNonneg,
            FailureWitness::PairingZero { .. } => Condition::PairingsNonzero,
        }
    }

    /// Re-runs the single named check on the witness data.
    pub fn reverify(&self, d: &RootDatum, chi: &Weight) -> bool {
        match self {
            FailureWitness::NotInNs { alpha_coords } => {
                *alpha_coords == d.alpha_coords(chi) && !d.in_ns(chi)
            }
            FailureWitness::NotRegularDominant { index } => *index < d.rank() && chi.0[*index] <= 0,
            FailureWitness::ReflectionNegative {
                index,
                reflected_alpha,
            } => {
                if d.check_index(*index).is_err() {
                    return false;
                }
                let img = d.alpha_coords(&d.simple_reflect(chi, *index));
                img == *reflected_alpha && img.entries().iter().any(Rational::is_negative)
            }
            FailureWitness::PairingZero { word, index } => {
                // Goes through the coweight action, independently of the
                // α-coordinate shortcut used by the check itself.
                match WeylElement::from_word(d, word) {
                    Ok(w) if *index < d.rank() => {
                        let lam = w.act_on_coweight(&Coweight::fundamental(d.rank(), *index));
                        d.pairing(chi, &lam).is_zero()
                    }
                    _ => false,
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiCertificate {
    pub chi: Weight,
    pub alpha_coords: RatVector,
    pub in_ns: bool,
    pub regular_dominant: bool,
    pub reflections_nonneg: bool,
    pub pairings_nonzero: bool,
    /// Witness for the first failing condition, in the order above.
    pub failure_witness: Option<FailureWitness>,
}

impl ChiCertificate {
    pub fn passes(&self) -> bool {
        self.in_ns && self.regular_dominant && self.reflections_nonneg && self.pairings_nonzero
    }
}

/// First `(u, i)` with `(α-coords of uχ)_i = 0`. Since `⟨χ, w(λ_i)⟩` is the
/// i-th α-coordinate of `w⁻¹χ`, the witness element is `u⁻¹`.
fn zero_pairing(
    d: &RootDatum,
    group: &WeylGroup,
    alpha: &RatVector,
) -> Option<(WeylElement, usize)> {
    if let Some(ints) = alpha.to_ints() {
        for u in group.elements() {
            for (i, row) in u.alpha_action().iter().enumerate() {
                let c: i64 = row.iter().zip(&ints).map(|(a, b)| a * b).sum();
                if c == 0 {
                    return Some((u.inverse(d), i));
                }
            }
        }
        return None;
    }
    for u in group.elements() {
        let img = u.act_on_alpha(alpha);
        if let Some(i) = img.entries().iter().position(Rational::is_zero) {
            return Some((u.inverse(d), i));
        }
    }
    None
}

pub fn check_lemma1(d: &RootDatum, group: &WeylGroup, chi: &Weight) -> ChiCertificate {
    let alpha = d.alpha_coords(chi);
    let in_ns = d.in_ns(chi);
    let nonregular = chi.0.iter().position(|&c| c <= 0);
    let negative_reflection = (0..d.rank()).find_map(|i| {
        let img = d.alpha_coords(&d.simple_reflect(chi, i));
        img.entries()
            .iter()
            .any(Rational::is_negative)
            .then_some((i, img))
    });
    let zero = zero_pairing(d, group, &alpha);

    let failure_witness = if !in_ns {
        Some(FailureWitness::NotInNs {
            alpha_coords: alpha.clone(),
        })
    } else if let Some(index) = nonregular {
        Some(FailureWitness::NotRegularDominant { index })
    } else if let Some((index, reflected_alpha)) = negative_reflection.clone() {
        Some(FailureWitness::ReflectionNegative {
            index,
            reflected_alpha,
        })
    } else {
        zero.as_ref().map(|(w, index)| FailureWitness::PairingZero {
            word: w.reduced_word().to_vec(),
            index: *index,
        })
    };

    ChiCertificate {
        chi: chi.clone(),
        alpha_coords: alpha,
        in_ns,
        regular_dominant: nonregular.is_none(),
        reflections_nonneg: negative_reflection.is_none(),
        pairings_nonzero: zero.is_none(),
        failure_witness,
    }
}

/// Nonnegative integer vectors of length `n` summing to `total`, in
/// ascending lexicographic order.
pub(crate) fn compositions(n: usize, total: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, total: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(n - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, total, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every χ ∈ ℕS of α-height at most `height_bound` passing all four
/// conditions, in graded-lexicographic order of α-coordinates.
pub fn search_chi(d: &RootDatum, group: &WeylGroup, height_bound: u32) -> Vec<Weight> {
    (0..=i64::from(height_bound))
        .flat_map(|h| compositions(d.rank(), h))
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|m| {
            let chi = d.weight_from_alpha(&m);
            // cheap conditions first
            if !d.is_regular_dominant(&chi) {
                return None;
            }
            check_lemma1(d, group, &chi).passes().then_some(chi)
        })
        .collect()
}

/// A χ of the shape `2mρ + N Σ k_i ω_i` together with the bookkeeping of
/// the constructive steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofPathChi {
    pub chi: Weight,
    pub m: i64,
    pub k: Vec<i64>,
    /// Determinant of the Cartan matrix.
    pub det: i64,
    /// α-coordinates of `s_i(2ρ)`, each required to lie in ℕS.
    pub reflected_two_rho: Vec<Vec<i64>>,
    /// α-coordinates of `m·s_i(2ρ) - N·α_i` for the chosen `m`.
    pub intermediate: Vec<Vec<i64>>,
    pub intermediate_in_ns: bool,
    pub certificate: ChiCertificate,
}

/// Largest `m` tried before giving up on the intermediate claim.
const MAX_M: i64 = 256;
/// How many `m` past the minimal one are searched.
const EXTRA_M: i64 = 16;

pub fn construct_chi_proof_path(d: &RootDatum, group: &WeylGroup) -> Result<ProofPathChi> {
    if d.rank() < 2 {
        return Err(Error::ExcludedByHypothesis(format!(
            "{} has rank below 2",
            d.label()
        )));
    }
    if d.root_type() == RootType::A && d.rank() == 2 {
        return Err(Error::ExcludedByHypothesis(
            "root system A2 is excluded".to_string(),
        ));
    }
    let n = d.rank();
    let det = d.cartan_determinant();
    let two_rho = d.two_rho();
    let reflected_two_rho: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            d.alpha_coords_int(&d.simple_reflect(&two_rho, i))
                .expect("2ρ lies in the root lattice")
        })
        .collect();
    let intermediate_for = |m: i64| -> Vec<Vec<i64>> {
        reflected_two_rho
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut v: Vec<i64> = s.iter().map(|c| m * c).collect();
                v[i] -= det;
                v
            })
            .collect()
    };
    let all_nonneg = |vs: &[Vec<i64>]| vs.iter().all(|v| v.iter().all(|&c| c >= 0));
    let m_min = (1..=MAX_M)
        .find(|&m| all_nonneg(&intermediate_for(m)))
        .ok_or_else(|| {
            Error::SearchExhausted(format!(
                "no m <= {MAX_M} with m·s_i(2ρ) - N·α_i in ℕS for {}",
                d.label()
            ))
        })?;

    let max_degree = 2 * n as i64;
    for m in m_min..m_min + EXTRA_M {
        for degree in 0..=max_degree {
            for k in compositions(n, degree) {
                let omega: Vec<i64> = (0..n).map(|i| 2 * m + det * k[i]).collect();
                let chi = Weight(omega);
                let certificate = check_lemma1(d, group, &chi);
                if certificate.passes() {
                    let intermediate = intermediate_for(m);
                    return Ok(ProofPathChi {
                        chi,
                        m,
                        k,
                        det,
                        intermediate_in_ns: all_nonneg(&intermediate),
                        reflected_two_rho,
                        intermediate,
                        certificate,
                    });
                }
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no candidate 2mρ + NΣk_iω_i with m < {} and |k| <= {max_degree} for {}",
        m_min + EXTRA_M,
        d.label()
    )))
}
