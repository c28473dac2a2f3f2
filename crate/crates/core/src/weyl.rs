//! The Weyl group as exact integer matrices: enumeration, lengths, the
//! longest element, and the actions on weights and coweights.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ratlp::{RatVector, Rational};
use crate::rootsys::{Coweight, RootDatum, Weight};

/// Enumeration guard used when the caller does not supply one.
pub const DEFAULT_MAX_WEYL: u128 = 1_000_000;

type IntMatrix = Vec<Vec<i64>>;

fn int_identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = b.len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| (0..n).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn int_apply(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// `s_i` on ω-coordinates: `I - (column i of cartan) e_iᵀ`.
fn omega_reflection(d: &RootDatum, i: usize) -> IntMatrix {
    let mut m = int_identity(d.rank());
    for (j, row) in m.iter_mut().enumerate() {
        row[i] -= d.cartan()[j][i];
    }
    m
}

/// `s_i` on α-coordinates: `I - e_i (row i of cartan)`.
fn alpha_reflection(d: &RootDatum, i: usize) -> IntMatrix {
    let mut m = int_identity(d.rank());
    for (k, v) in m[i].iter_mut().enumerate() {
        *v -= d.cartan()[i][k];
    }
    m
}

/// A Weyl group element. Equality and hashing use the action matrix only,
/// since reduced words are not unique.
#[derive(Clone)]
pub struct WeylElement {
    action: IntMatrix,
    alpha_action: IntMatrix,
    // (alpha action of w⁻¹)ᵀ, the contragredient action on λ-coordinates
    coweight_action: IntMatrix,
    length: usize,
    reduced_word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reduced_word.is_empty() {
            return write!(f, "e");
        }
        let word: Vec<String> = self
            .reduced_word
            .iter()
            .map(|i| format!("s{}", i + 1))
            .collect();
        write!(f, "{}", word.join(""))
    }
}

impl WeylElement {
    pub fn identity(d: &RootDatum) -> Self {
        let n = d.rank();
        WeylElement {
            action: int_identity(n),
            alpha_action: int_identity(n),
            coweight_action: int_identity(n),
            length: 0,
            reduced_word: Vec::new(),
        }
    }

    /// Right multiplication by `s_i`; the word is extended without checking
    /// that it stays reduced.
    fn times_simple(&self, d: &RootDatum, i: usize) -> Self {
        let mut reduced_word = self.reduced_word.clone();
        reduced_word.push(i);
        WeylElement {
            action: int_mul(&self.action, &omega_reflection(d, i)),
            alpha_action: int_mul(&self.alpha_action, &alpha_reflection(d, i)),
            coweight_action: int_mul(&self.coweight_action, &transpose(&alpha_reflection(d, i))),
            length: self.length + 1,
            reduced_word,
        }
    }

    pub fn simple_reflection(d: &RootDatum, i: usize) -> Result<Self> {
        d.check_index(i)?;
        Ok(Self::identity(d).times_simple(d, i))
    }

    /// The product `s_{i_1} ⋯ s_{i_k}`; length and stored word are
    /// recomputed so the result is always reduced.
    pub fn from_word(d: &RootDatum, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(d);
        for &i in word {
            d.check_index(i)?;
            w = w.times_simple(d, i);
        }
        w.length = w.inversion_count(d);
        if w.length != word.len() {
            w.reduced_word = w.find_reduced_word(d);
        }
        Ok(w)
    }

    /// Peels off right descents: `i` with `w(α_i) < 0` shortens `w`.
    fn find_reduced_word(&self, d: &RootDatum) -> Vec<usize> {
        let mut word = Vec::new();
        let mut current = self.alpha_action.clone();
        loop {
            let descent = (0..d.rank()).find(|&i| current.iter().any(|row| row[i] < 0));
            match descent {
                None => break,
                Some(i) => {
                    word.push(i);
                    current = int_mul(&current, &alpha_reflection(d, i));
                }
            }
        }
        word.reverse();
        word
    }

    pub fn action(&self) -> &[Vec<i64>] {
        &self.action
    }

    pub fn alpha_action(&self) -> &[Vec<i64>] {
        &self.alpha_action
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn reduced_word(&self) -> &[usize] {
        &self.reduced_word
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, d: &RootDatum) -> usize {
        d.positive_roots()
            .iter()
            .filter(|beta| int_apply(&self.alpha_action, beta).iter().any(|&c| c < 0))
            .count()
    }

    pub fn inverse(&self, d: &RootDatum) -> Self {
        let word: Vec<usize> = self.reduced_word.iter().rev().copied().collect();
        let mut w = Self::identity(d);
        for i in word {
            w = w.times_simple(d, i);
        }
        w.length = self.length;
        w
    }

    /// `self ∘ other`.
    pub fn compose(&self, d: &RootDatum, other: &WeylElement) -> Self {
        let mut word = self.reduced_word.clone();
        word.extend_from_slice(&other.reduced_word);
        Self::from_word(d, &word).expect("indices come from valid elements")
    }

    pub fn act_on_weight(&self, psi: &Weight) -> Weight {
        Weight(int_apply(&self.action, &psi.0))
    }

    /// Action on (possibly rational) α-coordinates.
    pub fn act_on_alpha(&self, m: &RatVector) -> RatVector {
        RatVector(
            self.alpha_action
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(m.entries())
                        .fold(Rational::zero(), |acc, (&a, x)| {
                            acc + &Rational::from_int(a) * x
                        })
                })
                .collect(),
        )
    }

    /// Contragredient action, so that `⟨wψ, wλ⟩ = ⟨ψ, λ⟩`.
    pub fn act_on_coweight(&self, lambda: &Coweight) -> Coweight {
        Coweight(int_apply(&self.coweight_action, &lambda.0))
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

/// A fully enumerated Weyl group.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    longest: usize,
}

impl WeylGroup {
    pub fn new(d: &RootDatum) -> Result<Self> {
        enumerate_weyl(d, DEFAULT_MAX_WEYL)
    }

    /// Elements in breadth-first order (nondecreasing length).
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    pub fn max_length(&self) -> usize {
        self.longest().length()
    }

    /// Number of elements of each length `0..=l(w₀)`.
    pub fn length_distribution(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_length() + 1];
        for w in &self.elements {
            counts[w.length()] += 1;
        }
        counts
    }

    /// Looks up an element by its action matrix.
    pub fn find(&self, action: &[Vec<i64>]) -> Option<&WeylElement> {
        self.elements.iter().find(|w| w.action == action)
    }
}

fn check_bound(d: &RootDatum, bound: u128) -> Result<()> {
    let order = d.weyl_order();
    if order > bound {
        return Err(Error::WeylBoundExceeded { order, bound });
    }
    Ok(())
}

/// Breadth-first closure under right multiplication by simple reflections,
/// deduplicated by the image of ρ (W acts simply transitively on the orbit
/// of a regular weight). BFS depth is the length.
pub fn enumerate_weyl(d: &RootDatum, bound: u128) -> Result<WeylGroup> {
    check_bound(d, bound)?;
    let n = d.rank();
    let rho = vec![1i64; n];
    let id = WeylElement::identity(d);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(rho.clone());
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for i in 0..n {
            let next = elements[idx].times_simple(d, i);
            if seen.insert(int_apply(&next.action, &rho)) {
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    let longest = elements
        .iter()
        .enumerate()
        .max_by_key(|(_, w)| w.length)
        .map(|(k, _)| k)
        .expect("group is nonempty");
    Ok(WeylGroup { elements, longest })
}

pub fn longest_element(d: &RootDatum, bound: u128) -> Result<WeylElement> {
    Ok(enumerate_weyl(d, bound)?.longest().clone())
}

/// The Weyl orbit of a weight.
pub fn weyl_orbit(d: &RootDatum, psi: &Weight, bound: u128) -> Result<BTreeSet<Weight>> {
    check_bound(d, bound)?;
    Ok(d.reflection_orbit(psi))
}

/// The unique dominant weight in the orbit of `psi`.
pub fn dominant_representative(d: &RootDatum, psi: &Weight) -> Weight {
    let mut w = psi.clone();
    while let Some(i) = w.0.iter().position(|&c| c < 0) {
        w = d.simple_reflect(&w, i);
    }
    w
}
