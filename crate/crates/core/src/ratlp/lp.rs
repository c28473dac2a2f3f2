//! Phase-1 simplex over exact rationals, and the hull-membership tests built on it.
//!
//! Every answer carries a certificate that can be re-checked with a handful of
//! exact dot products: convex coefficients for a feasible system, a Farkas
//! vector for an infeasible one.

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{identity, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};

/// Outcome of `{x >= 0 : A x = b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A nonnegative solution, one entry per column.
    Feasible(Vec<Rational>),
    /// A Farkas vector `y` with `y.A_j >= 0` for every column and `y.b < 0`.
    Infeasible(RatVector),
}

/// Columns of a constraint matrix, each rescaled once by a positive integer so
/// that its entries are integers. Positive column scaling keeps the sign of
/// every reduced cost, so one scaled copy serves any number of right-hand
/// sides; `scale[j]` converts solutions back.
#[derive(Debug, Clone)]
pub struct ColumnSet {
    rows: usize,
    big: Vec<Vec<BigInt>>,
    // machine-word copy for pricing, when every entry fits
    small: Option<Vec<Vec<i64>>>,
    scale: Vec<BigInt>,
}

impl ColumnSet {
    pub fn new(columns: &[RatVector], rows: usize) -> Self {
        let mut scale = Vec::with_capacity(columns.len());
        let big: Vec<Vec<BigInt>> = columns
            .iter()
            .map(|c| {
                debug_assert_eq!(c.dim(), rows);
                if c.entries().iter().all(Rational::is_integer) {
                    scale.push(BigInt::one());
                    return c.entries().iter().map(|x| x.numer().clone()).collect();
                }
                let s = c
                    .entries()
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                let col = c
                    .entries()
                    .iter()
                    .map(|x| x.numer() * (&s / x.denom()))
                    .collect();
                scale.push(s);
                col
            })
            .collect();
        let small = big
            .iter()
            .map(|c| c.iter().map(ToPrimitive::to_i64).collect())
            .collect();
        ColumnSet {
            rows,
            big,
            small,
            scale,
        }
    }

    pub fn len(&self) -> usize {
        self.big.len()
    }

    pub fn is_empty(&self) -> bool {
        self.big.is_empty()
    }

    /// Picks an improving column for integer multipliers `y`: the first `j`
    /// with `y · A_j > 0` under Bland's rule, otherwise the one maximizing it.
    fn entering(&self, y_big: &[BigInt], y_small: Option<&[i64]>, bland: bool) -> Option<usize> {
        match (y_small, &self.small) {
            // m products of two i64 values cannot overflow i128 for m < 2^63
            (Some(ys), Some(cs)) => {
                let price = |j: usize| -> i128 {
                    ys.iter()
                        .zip(&cs[j])
                        .map(|(&a, &b)| i128::from(a) * i128::from(b))
                        .sum()
                };
                if bland {
                    (0..self.len()).find(|&j| price(j) > 0)
                } else {
                    best_positive((0..self.len()).map(|j| (j, price(j))))
                }
            }
            _ => {
                let price = |j: usize| -> BigInt {
                    y_big
                        .iter()
                        .zip(&self.big[j])
                        .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
                };
                if bland {
                    (0..self.len()).find(|&j| price(j).is_positive())
                } else {
                    best_positive((0..self.len()).map(|j| (j, price(j))))
                }
            }
        }
    }

    /// Decides feasibility of `{x >= 0 : Σ_j x_j A_j = rhs}`.
    ///
    /// Revised simplex on the phase-1 problem with one artificial per row,
    /// minimizing the artificial sum. Only `B⁻¹` (rows × rows) is kept and
    /// columns are priced against the current multipliers.
    pub fn phase_one(&self, rhs: &RatVector) -> Feasibility {
        let m = self.rows;
        assert_eq!(rhs.dim(), m, "right-hand side has the wrong dimension");
        let n = self.len();

        // Rows with negative rhs are negated (D = diag(±1)); instead of
        // flipping columns, the multipliers are flipped before pricing:
        // y·(D A_j) = (D y)·A_j.
        let flip: Vec<bool> = rhs.entries().iter().map(Rational::is_negative).collect();
        let unflip = |v: &[Rational]| -> Vec<Rational> {
            v.iter()
                .zip(&flip)
                .map(|(x, &f)| if f { -x } else { x.clone() })
                .collect()
        };

        let mut binv = identity(m);
        let mut xb: Vec<Rational> = rhs.entries().iter().map(Rational::abs).collect();
        let mut basis: Vec<usize> = (n..n + m).collect();

        let multipliers = |binv: &RatMatrix, basis: &[usize]| -> Vec<Rational> {
            (0..m)
                .map(|k| {
                    basis
                        .iter()
                        .enumerate()
                        .filter(|(_, &j)| j >= n)
                        .fold(Rational::zero(), |acc, (r, _)| acc + &binv[r][k])
                })
                .collect()
        };

        // Largest-coefficient pricing until pivots stall, then Bland's rule
        // for the rest of the solve, which cannot cycle.
        let mut bland = false;
        let mut degenerate = 0usize;
        loop {
            // y = c_Bᵀ B⁻¹; reduced cost of an original column is -y·A'_j,
            // of artificial r it is 1 - y_r.
            let y = multipliers(&binv, &basis);
            let dy = unflip(&y);
            let den = dy.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let y_big: Vec<BigInt> = dy.iter().map(|v| v.numer() * (&den / v.denom())).collect();
            let y_small: Option<Vec<i64>> = y_big.iter().map(ToPrimitive::to_i64).collect();
            let enter = self
                .entering(&y_big, y_small.as_deref(), bland)
                .or_else(|| (0..m).find(|&r| y[r] > Rational::one()).map(|r| n + r));
            let Some(enter) = enter else {
                break;
            };

            // u = B⁻¹ A'_enter
            let u: Vec<Rational> = if enter < n {
                let col: Vec<Rational> = self.big[enter]
                    .iter()
                    .zip(&flip)
                    .map(|(v, &f)| Rational::from_bigint(if f { -v } else { v.clone() }))
                    .collect();
                binv.iter()
                    .map(|row| {
                        row.iter()
                            .zip(&col)
                            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                    })
                    .collect()
            } else {
                binv.iter().map(|row| row[enter - n].clone()).collect()
            };

            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..m {
                if !u[r].is_positive() {
                    continue;
                }
                let ratio = xb[r].checked_div(&u[r]).expect("positive pivot");
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            // The phase-1 objective is bounded below by zero, so a ratio row exists.
            let (pr, ratio) = leave.expect("phase-1 problem is bounded");
            if ratio.is_zero() {
                degenerate += 1;
                bland |= degenerate > 4 * m;
            }

            let inv = u[pr].recip().expect("nonzero pivot");
            for v in binv[pr].iter_mut() {
                *v = &*v * &inv;
            }
            xb[pr] = &xb[pr] * &inv;
            let pivot_row = binv[pr].clone();
            let pivot_x = xb[pr].clone();
            for r in 0..m {
                if r == pr || u[r].is_zero() {
                    continue;
                }
                for (v, p) in binv[r].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v -= &(&u[r] * p);
                    }
                }
                xb[r] -= &(&u[r] * &pivot_x);
            }
            basis[pr] = enter;
        }

        let objective = basis
            .iter()
            .zip(&xb)
            .filter(|(&j, _)| j >= n)
            .fold(Rational::zero(), |acc, (_, x)| acc + x);
        if objective.is_zero() {
            let mut x = vec![Rational::zero(); n];
            for (r, &j) in basis.iter().enumerate() {
                if j < n {
                    x[j] = &xb[r] * &Rational::from_bigint(self.scale[j].clone());
                }
            }
            Feasibility::Feasible(x)
        } else {
            // y·A'_j <= 0 for every column and y·b' > 0 in the flipped
            // system; unflip and negate.
            let farkas = unflip(&multipliers(&binv, &basis))
                .into_iter()
                .map(|v| -v)
                .collect();
            Feasibility::Infeasible(RatVector(farkas))
        }
    }
}

fn best_positive<T: PartialOrd + Zero>(prices: impl Iterator<Item = (usize, T)>) -> Option<usize> {
    let mut best: Option<(usize, T)> = None;
    for (j, p) in prices {
        if p > T::zero() && best.as_ref().is_none_or(|(_, b)| p > *b) {
            best = Some((j, p));
        }
    }
    best.map(|(j, _)| j)
}

/// Decides feasibility of `{x >= 0 : Σ_j x_j columns[j] = rhs}`; see
/// [`ColumnSet::phase_one`].
pub fn phase_one(columns: &[RatVector], rhs: &RatVector) -> Feasibility {
    ColumnSet::new(columns, rhs.dim()).phase_one(rhs)
}

fn check_dims(points: &[RatVector], target: &RatVector) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = target.dim();
    match points.iter().find(|p| p.dim() != dim) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        }),
        None => Ok(()),
    }
}

fn primitive(v: &RatVector) -> RatVector {
    RatVector(
        v.primitive_integer()
            .into_iter()
            .map(Rational::from_bigint)
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HullVerdict {
    Inside,
    Outside,
}

/// Evidence for or against `target` lying in the convex hull of a point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MembershipCertificate {
    /// Convex coefficients, one per input point.
    Inside { coefficients: Vec<Rational> },
    /// A primitive integer functional strictly positive on every `p - target`.
    Outside { separator: RatVector },
}

impl MembershipCertificate {
    pub fn verdict(&self) -> HullVerdict {
        match self {
            Self::Inside { .. } => HullVerdict::Inside,
            Self::Outside { .. } => HullVerdict::Outside,
        }
    }

    /// Re-checks the certificate by exact evaluation.
    pub fn verify(&self, points: &[RatVector], target: &RatVector) -> bool {
        match self {
            Self::Inside { coefficients } => {
                verify_convex_combination(points, target, coefficients)
            }
            Self::Outside { separator } => {
                separator.dim() == target.dim()
                    && points
                        .iter()
                        .all(|p| separator.dot(&p.sub(target)).is_positive())
            }
        }
    }
}

fn verify_convex_combination(
    points: &[RatVector],
    target: &RatVector,
    coefficients: &[Rational],
) -> bool {
    if coefficients.len() != points.len() || coefficients.iter().any(Rational::is_negative) {
        return false;
    }
    let total = coefficients.iter().fold(Rational::zero(), |acc, t| acc + t);
    let mut sum = RatVector::zeros(target.dim());
    for (p, t) in points.iter().zip(coefficients) {
        if !t.is_zero() {
            sum = sum.add(&p.scale(t));
        }
    }
    total == Rational::one() && sum == *target
}

fn verify_cone_combination(
    vectors: &[RatVector],
    goal: &RatVector,
    coefficients: &[Rational],
) -> bool {
    if coefficients.len() != vectors.len() || coefficients.iter().any(Rational::is_negative) {
        return false;
    }
    let mut sum = RatVector::zeros(goal.dim());
    for (v, t) in vectors.iter().zip(coefficients) {
        if !t.is_zero() {
            sum = sum.add(&v.scale(t));
        }
    }
    sum == *goal
}

/// Decides whether `target` lies in the convex hull of `points`.
pub fn convex_membership(
    points: &[RatVector],
    target: &RatVector,
) -> Result<MembershipCertificate> {
    check_dims(points, target)?;
    let dim = target.dim();
    let lift = |p: &RatVector| {
        let mut v = p.0.clone();
        v.push(Rational::one());
        RatVector(v)
    };
    let columns: Vec<RatVector> = points.iter().map(lift).collect();
    match ColumnSet::new(&columns, dim + 1).phase_one(&lift(target)) {
        Feasibility::Feasible(coefficients) => Ok(MembershipCertificate::Inside { coefficients }),
        Feasibility::Infeasible(y) => {
            // y = (s, c) with s.p + c >= 0 and s.target + c < 0, so s.(p - target) > 0.
            let separator = RatVector(y.0[..dim].to_vec());
            Ok(MembershipCertificate::Outside {
                separator: primitive(&separator),
            })
        }
    }
}

/// A nonnegative combination of `p - target` reaching one signed unit direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeWitness {
    pub direction: RatVector,
    pub coefficients: Vec<Rational>,
}

/// Evidence for the interior test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InteriorCertificate {
    /// In the hull, and every `±e_j` is a nonnegative combination of the
    /// vectors `p - target`, so the polar cone is `{0}`.
    Interior {
        hull: Vec<Rational>,
        spanning: Vec<ConeWitness>,
    },
    /// In the hull, with a nonzero `λ` such that `⟨p - target, λ⟩ >= 0` for all `p`.
    Boundary {
        hull: Vec<Rational>,
        supporting: RatVector,
    },
    Exterior {
        separator: RatVector,
    },
}

impl InteriorCertificate {
    pub fn is_interior(&self) -> bool {
        matches!(self, Self::Interior { .. })
    }

    pub fn in_hull(&self) -> bool {
        !matches!(self, Self::Exterior { .. })
    }

    pub fn verify(&self, points: &[RatVector], target: &RatVector) -> bool {
        let diffs: Vec<RatVector> = points.iter().map(|p| p.sub(target)).collect();
        let dim = target.dim();
        match self {
            Self::Interior { hull, spanning } => {
                verify_convex_combination(points, target, hull)
                    && spanning.len() == 2 * dim
                    && (0..dim).all(|j| {
                        [1, -1].iter().all(|&s| {
                            let goal = RatVector::unit(dim, j, s);
                            spanning.iter().any(|w| {
                                w.direction == goal
                                    && verify_cone_combination(&diffs, &goal, &w.coefficients)
                            })
                        })
                    })
            }
            Self::Boundary { hull, supporting } => {
                verify_convex_combination(points, target, hull)
                    && supporting.dim() == dim
                    && !supporting.is_zero()
                    && diffs.iter().all(|d| !supporting.dot(d).is_negative())
            }
            Self::Exterior { separator } => MembershipCertificate::Outside {
                separator: separator.clone(),
            }
            .verify(points, target),
        }
    }
}

/// Decides whether `target` lies in the interior of the convex hull of `points`.
///
/// The polar cone `{λ : ⟨p - target, λ⟩ >= 0 ∀p}` is trivial exactly when each
/// of the `2·dim` directions `±e_j` lies in the cone spanned by the `p - target`
/// (Farkas). Each direction is one phase-1 run; an infeasible run yields a
/// nonzero supporting functional directly.
pub fn interior_membership(
    points: &[RatVector],
    target: &RatVector,
) -> Result<InteriorCertificate> {
    let hull = match convex_membership(points, target)? {
        MembershipCertificate::Outside { separator } => {
            return Ok(InteriorCertificate::Exterior { separator })
        }
        MembershipCertificate::Inside { coefficients } => coefficients,
    };
    let dim = target.dim();
    let diffs: Vec<RatVector> = if target.is_zero() {
        points.to_vec()
    } else {
        points.iter().map(|p| p.sub(target)).collect()
    };
    let cone = ColumnSet::new(&diffs, dim);
    let mut spanning = Vec::with_capacity(2 * dim);
    for j in 0..dim {
        for sign in [1, -1] {
            let direction = RatVector::unit(dim, j, sign);
            match cone.phase_one(&direction) {
                Feasibility::Feasible(coefficients) => spanning.push(ConeWitness {
                    direction,
                    coefficients,
                }),
                Feasibility::Infeasible(y) => {
                    return Ok(InteriorCertificate::Boundary {
                        hull,
                        supporting: primitive(&y),
                    })
                }
            }
        }
    }
    Ok(InteriorCertificate::Interior { hull, spanning })
}
