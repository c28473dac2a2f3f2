//! Brute-force oracles used only by tests. None of them touch the simplex
//! code or the Weyl group enumeration of the library.
#![allow(dead_code, clippy::needless_range_loop)]

use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i128>;

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

pub fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// ε-coordinates (last entry 0) of `Σ aᵢωᵢ` in type A_n.
pub fn epsilon(a: &[i64]) -> Vec<i64> {
    let n = a.len();
    let mut x = vec![0i64; n + 1];
    for k in (0..n).rev() {
        x[k] = x[k + 1] + a[k];
    }
    x
}

/// `(n+1)` times the α-coordinates of the type-A weight with ε-coordinates `x`.
fn scaled_alpha(x: &[i64]) -> Vec<i64> {
    let n1 = x.len() as i64;
    let total: i64 = x.iter().sum();
    (1..x.len())
        .map(|k| n1 * x[..k].iter().sum::<i64>() - k as i64 * total)
        .collect()
}

/// The four polarization conditions for type A_n computed on permutations
/// of ε-coordinates: `[in ℕS, regular dominant, reflections, pairings]`.
pub fn type_a_conditions(a: &[i64]) -> [bool; 4] {
    let n = a.len();
    let n1 = (n + 1) as i64;
    let x = epsilon(a);
    let total: i64 = x.iter().sum();
    let in_ns = scaled_alpha(&x).iter().all(|&m| m >= 0 && m % n1 == 0);
    let regular = a.iter().all(|&v| v > 0);
    let reflections = (0..n).all(|i| {
        let mut y = x.clone();
        y.swap(i, i + 1);
        scaled_alpha(&y).iter().all(|&m| m >= 0)
    });
    // ⟨χ, σ(λᵢ)⟩ = Σ_{k ∈ σ{1..i}} x_k - i·T/(n+1)
    let pairings = permutations(n + 1).iter().all(|sigma| {
        (1..=n).all(|i| {
            let s: i64 = sigma[..i].iter().map(|&k| x[k]).sum();
            n1 * s != i as i64 * total
        })
    });
    [in_ns, regular, reflections, pairings]
}

/// Unique solution of `m · x = b` if the columns of `m` are independent and
/// the system is consistent.
pub fn solve_unique(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(r, v)| r.iter().cloned().chain([*v]).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(r, p);
        let piv = aug[r][c];
        for v in aug[r].iter_mut() {
            *v /= piv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c];
                for j in 0..=cols {
                    let t = aug[r][j];
                    aug[i][j] -= f * t;
                }
            }
        }
        r += 1;
    }
    if (r..rows).any(|i| !aug[i][cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| aug[i][cols]).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Carathéodory: `target` is in the hull iff it is a convex combination of
/// some affinely independent subset of at most `dim + 1` points.
pub fn caratheodory_inside(points: &[Vec<i64>], target: &[i64]) -> bool {
    let dim = target.len();
    for k in 1..=(dim + 1).min(points.len()) {
        for s in subsets(points.len(), k) {
            let m: Vec<Vec<Q>> = (0..=dim)
                .map(|row| {
                    s.iter()
                        .map(|&j| {
                            if row < dim {
                                Q::from(i128::from(points[j][row]))
                            } else {
                                Q::from(1)
                            }
                        })
                        .collect()
                })
                .collect();
            let b: Vec<Q> = target
                .iter()
                .map(|&t| Q::from(i128::from(t)))
                .chain([Q::from(1)])
                .collect();
            if let Some(x) = solve_unique(&m, &b) {
                if x.iter().all(|v| !v.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn rank(points: &[Vec<i64>], dim: usize) -> usize {
    let mut rows: Vec<Vec<Q>> = points
        .iter()
        .map(|p| p.iter().map(|&v| Q::from(i128::from(v))).collect())
        .collect();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c] / rows[r][c];
                for j in 0..dim {
                    let t = rows[r][j];
                    rows[i][j] -= f * t;
                }
            }
        }
        r += 1;
    }
    r
}

/// 0 is interior to the hull iff the points span and no nonzero λ has
/// `⟨p, λ⟩ >= 0` for all points. Extreme rays of that cone are orthogonal to
/// `dim - 1` independent points, so checking those candidates suffices.
pub fn origin_interior(points: &[Vec<i64>], dim: usize) -> bool {
    if rank(points, dim) < dim {
        return false;
    }
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    match dim {
        1 => candidates.extend([vec![1], vec![-1]]),
        2 => {
            for p in points {
                candidates.push(vec![-p[1], p[0]]);
            }
        }
        3 => {
            for p in points {
                for q in points {
                    candidates.push(vec![
                        p[1] * q[2] - p[2] * q[1],
                        p[2] * q[0] - p[0] * q[2],
                        p[0] * q[1] - p[1] * q[0],
                    ]);
                }
            }
        }
        _ => panic!("oracle handles dim <= 3"),
    }
    !candidates
        .iter()
        .filter(|l| l.iter().any(|&v| v != 0))
        .flat_map(|l| [l.clone(), l.iter().map(|v| -v).collect()])
        .any(|l| {
            points
                .iter()
                .all(|p| p.iter().zip(&l).map(|(a, b)| a * b).sum::<i64>() >= 0)
        })
}

/// Size of a W-orbit in type A: distinct permutations of ε-coordinates.
pub fn type_a_orbit_size(a: &[i64]) -> usize {
    let x = epsilon(a);
    let mut seen = std::collections::BTreeSet::new();
    for p in permutations(x.len()) {
        seen.insert(p.iter().map(|&i| x[i]).collect::<Vec<_>>());
    }
    seen.len()
}
