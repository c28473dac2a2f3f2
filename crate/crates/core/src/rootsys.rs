//! Root data for the simple types, weights in the fundamental-weight basis,
//! and the exact conversions between the ω- and α-bases.
//!
//! Cartan convention: `cartan[i][j] = ⟨α_j, α_i^∨⟩`, so the ω-coordinates of a
//! weight are `cartan · (α-coordinates)` and the ω-coordinates of `α_i` are the
//! i-th column. Simple roots are numbered as in Bourbaki; indices are 0-based
//! in the API.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratlp::{from_ints, int_determinant, invert_matrix, RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "E" => Ok(RootType::E),
            "F" => Ok(RootType::F),
            "G" => Ok(RootType::G),
            other => Err(Error::Parse(format!("unknown root system type {other:?}"))),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl RootType {
    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            RootType::A => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 4,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        }
    }

    /// Order of the Weyl group, from the classification.
    pub fn weyl_order(self, rank: usize) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        match self {
            RootType::A => fact(rank + 1),
            RootType::B | RootType::C => (1u128 << rank) * fact(rank),
            RootType::D => (1u128 << (rank - 1)) * fact(rank),
            RootType::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            RootType::F => 1_152,
            RootType::G => 12,
        }
    }

    fn known_determinant(self, rank: usize) -> i64 {
        match self {
            RootType::A => rank as i64 + 1,
            RootType::B | RootType::C => 2,
            RootType::D => 4,
            RootType::E => 9 - rank as i64,
            RootType::F | RootType::G => 1,
        }
    }

    fn known_positive_root_count(self, rank: usize) -> usize {
        match self {
            RootType::A => rank * (rank + 1) / 2,
            RootType::B | RootType::C => rank * rank,
            RootType::D => rank * (rank - 1),
            RootType::E => match rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            RootType::F => 24,
            RootType::G => 6,
        }
    }
}

/// A character of the maximal torus, in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn omega_coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω{:?}", self.0)
    }
}

/// A one-parameter subgroup of the torus, in the basis `λ_j` dual to the
/// simple roots (`⟨α_i, λ_j⟩ = δ_ij`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    /// The fundamental coweight `λ_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Coweight(v)
    }

    pub fn lambda_coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn to_ratvector(&self) -> RatVector {
        RatVector::from_ints(&self.0)
    }
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ{:?}", self.0)
    }
}

/// Result of comparing two weights in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dominance {
    /// The difference is a nonnegative integer combination of simple roots.
    Leq,
    NotLeq,
    /// The difference has nonnegative but non-integral α-coordinates, where
    /// the order is undefined.
    NonIntegral,
}

#[derive(Clone, PartialEq, Eq)]
pub struct RootDatum {
    root_type: RootType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    inverse_cartan: RatMatrix,
    // det(cartan) · cartan⁻¹, integral
    adjugate: Vec<Vec<i64>>,
    det: i64,
    positive_roots: Vec<Vec<i64>>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}{})", self.root_type, self.rank)
    }
}

fn cartan_matrix(t: RootType, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t {
        RootType::A | RootType::B | RootType::C | RootType::F | RootType::G => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        RootType::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        RootType::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match t {
        // α_n short
        RootType::B => a[n - 1][n - 2] = -2,
        // α_n long
        RootType::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        RootType::F => a[2][1] = -2,
        // α_1 short, α_2 long
        RootType::G => a[0][1] = -3,
        _ => {}
    }
    a
}

impl RootDatum {
    /// Builds the root datum of a simple type from its Cartan matrix.
    pub fn new(root_type: RootType, rank: usize) -> Result<Self> {
        if !root_type.is_valid_rank(rank) {
            return Err(Error::InvalidType {
                label: root_type.to_string(),
                rank,
            });
        }
        let cartan = cartan_matrix(root_type, rank);
        let inverse_cartan = invert_matrix(&from_ints(&cartan))?;
        let det = int_determinant(&cartan);
        let det_q = Rational::from_int(det);
        let adjugate = inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * &det_q).to_i64().expect("adjugate is integral"))
                    .collect()
            })
            .collect();
        let mut datum = RootDatum {
            root_type,
            rank,
            cartan,
            inverse_cartan,
            adjugate,
            det,
            positive_roots: Vec::new(),
        };
        datum.positive_roots = datum.generate_positive_roots();
        debug_assert_eq!(det, root_type.known_determinant(rank));
        debug_assert_eq!(
            datum.positive_roots.len(),
            root_type.known_positive_root_count(rank)
        );
        Ok(datum)
    }

    /// Closes the simple roots under simple reflections, keeping only roots
    /// with nonnegative α-coordinates.
    fn generate_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let reflected = self.reflect_alpha(&beta, i);
                if reflected.iter().all(|&c| c >= 0) && seen.insert(reflected.clone()) {
                    queue.push_back(reflected);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        roots
    }

    /// `s_i` on integer α-coordinates: `m - (cartan·m)_i e_i`.
    pub(crate) fn reflect_alpha(&self, m: &[i64], i: usize) -> Vec<i64> {
        let coroot_pairing: i64 = (0..self.rank).map(|k| self.cartan[i][k] * m[k]).sum();
        let mut out = m.to_vec();
        out[i] -= coroot_pairing;
        out
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &RatMatrix {
        &self.inverse_cartan
    }

    /// Positive roots in α-coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn cartan_determinant(&self) -> i64 {
        int_determinant(&self.cartan)
    }

    pub fn weyl_order(&self) -> u128 {
        self.root_type.weyl_order(self.rank)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.root_type, self.rank)
    }

    fn check_rank(&self, w: &Weight) {
        assert_eq!(w.rank(), self.rank, "weight rank does not match root datum");
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        }
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|j| self.cartan[j][i]).collect())
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Weight(v)
    }

    /// The weight `Σ m_i α_i`.
    pub fn weight_from_alpha(&self, m: &[i64]) -> Weight {
        assert_eq!(m.len(), self.rank);
        Weight(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|k| self.cartan[j][k] * m[k]).sum())
                .collect(),
        )
    }

    /// `det(cartan)` times the α-coordinates; always integral.
    pub fn scaled_alpha_coords(&self, w: &Weight) -> Vec<i64> {
        self.check_rank(w);
        self.adjugate
            .iter()
            .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact α-coordinates: the unique `m` with `cartan · m = ω-coordinates`.
    pub fn alpha_coords(&self, w: &Weight) -> RatVector {
        RatVector(
            self.scaled_alpha_coords(w)
                .into_iter()
                .map(|x| Rational::new(x, self.det).expect("nonzero determinant"))
                .collect(),
        )
    }

    /// α-coordinates when the weight lies in the root lattice.
    pub fn alpha_coords_int(&self, w: &Weight) -> Option<Vec<i64>> {
        let scaled = self.scaled_alpha_coords(w);
        if scaled.iter().all(|x| x % self.det == 0) {
            Some(scaled.into_iter().map(|x| x / self.det).collect())
        } else {
            None
        }
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.alpha_coords_int(w).is_some()
    }

    /// Membership in `ℕS`: nonnegative integer α-coordinates (0 included).
    pub fn in_ns(&self, w: &Weight) -> bool {
        self.alpha_coords(w)
            .entries()
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// The natural pairing `⟨w, λ⟩ = Σ_i (α-coords of w)_i · λ_i`.
    pub fn pairing(&self, w: &Weight, c: &Coweight) -> Rational {
        self.alpha_coords(w).dot(&c.to_ratvector())
    }

    pub fn dominance_leq(&self, lower: &Weight, upper: &Weight) -> Dominance {
        let diff = self.alpha_coords(&upper.sub(lower));
        if diff.entries().iter().any(Rational::is_negative) {
            Dominance::NotLeq
        } else if diff.entries().iter().all(Rational::is_integer) {
            Dominance::Leq
        } else {
            Dominance::NonIntegral
        }
    }

    /// `2ρ`, the sum of the positive roots.
    pub fn two_rho(&self) -> Weight {
        let mut sum = vec![0i64; self.rank];
        for root in &self.positive_roots {
            for (s, c) in sum.iter_mut().zip(root) {
                *s += c;
            }
        }
        self.weight_from_alpha(&sum)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular_dominant(&self, w: &Weight) -> bool {
        w.0.iter().all(|&c| c > 0)
    }

    /// `s_i(ψ) = ψ - ⟨ψ, α_i^∨⟩ α_i` in ω-coordinates.
    pub fn simple_reflect(&self, w: &Weight, i: usize) -> Weight {
        let k = w.0[i];
        Weight(
            (0..self.rank)
                .map(|j| w.0[j] - k * self.cartan[j][i])
                .collect(),
        )
    }

    fn require_dominant_root_lattice(&self, chi: &Weight) -> Result<Vec<i64>> {
        self.check_rank(chi);
        let m = self
            .alpha_coords_int(chi)
            .ok_or_else(|| Error::NotInRootLattice(chi.0.clone()))?;
        if !self.is_dominant(chi) {
            return Err(Error::NotDominant(chi.0.clone()));
        }
        Ok(m)
    }

    /// All dominant `ν` with `ν ≤ χ`, highest first.
    ///
    /// Dominant weights have nonnegative α-coordinates, so `χ - ν` ranges over
    /// the box `Π [0, m_i]` where `m` are the α-coordinates of `χ`.
    pub fn dominant_weights_leq(&self, chi: &Weight) -> Result<Vec<Weight>> {
        let m = self.require_dominant_root_lattice(chi)?;
        let mut out = Vec::new();
        let mut c = vec![0i64; self.rank];
        loop {
            let nu_alpha: Vec<i64> = m.iter().zip(&c).map(|(a, b)| a - b).collect();
            let nu = self.weight_from_alpha(&nu_alpha);
            if self.is_dominant(&nu) {
                out.push(nu);
            }
            // odometer over the box
            let mut k = 0;
            loop {
                if k == self.rank {
                    out.sort_by(|a, b| {
                        let ha: i64 = self.alpha_coords_int(a).unwrap().iter().sum();
                        let hb: i64 = self.alpha_coords_int(b).unwrap().iter().sum();
                        hb.cmp(&ha).then_with(|| b.cmp(a))
                    });
                    return Ok(out);
                }
                if c[k] < m[k] {
                    c[k] += 1;
                    break;
                }
                c[k] = 0;
                k += 1;
            }
        }
    }

    /// The weights of the irreducible representation with highest weight `χ`:
    /// the Weyl orbits of the dominant weights below `χ`.
    pub fn weight_support(&self, chi: &Weight) -> Result<BTreeSet<Weight>> {
        let mut support = BTreeSet::new();
        for nu in self.dominant_weights_leq(chi)? {
            support.extend(self.reflection_orbit(&nu));
        }
        Ok(support)
    }

    /// Orbit of a weight under the simple reflections (breadth-first).
    pub(crate) fn reflection_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                if x.0[i] == 0 {
                    continue;
                }
                let y = self.simple_reflect(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}
