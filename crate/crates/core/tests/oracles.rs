mod common;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use torus_git::polarization::{check_lemma1, search_chi};
use torus_git::ratlp::{convex_membership, interior_membership, HullVerdict, RatVector};
use torus_git::rootsys::{RootDatum, RootType, Weight};
use torus_git::weyl::WeylGroup;

fn group(t: RootType, n: usize) -> (RootDatum, WeylGroup) {
    let d = RootDatum::new(t, n).unwrap();
    let g = WeylGroup::new(&d).unwrap();
    (d, g)
}

#[test]
fn lemma1_matches_permutation_oracle_a3() {
    let (d, g) = group(RootType::A, 3);
    for a in 0..7 {
        for b in 0..7 {
            for c in 0..7 {
                let chi = Weight(vec![a, b, c]);
                let cert = check_lemma1(&d, &g, &chi);
                let got = [
                    cert.in_ns,
                    cert.regular_dominant,
                    cert.reflections_nonneg,
                    cert.pairings_nonzero,
                ];
                assert_eq!(got, common::type_a_conditions(&chi.0), "χ = {:?}", chi.0);
                if let Some(w) = &cert.failure_witness {
                    assert!(w.reverify(&d, &chi));
                }
            }
        }
    }
}

#[test]
fn lemma1_matches_permutation_oracle_a4_sample() {
    let (d, g) = group(RootType::A, 4);
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let chi = Weight((0..4).map(|_| rng.gen_range(0..8)).collect());
        let cert = check_lemma1(&d, &g, &chi);
        let got = [
            cert.in_ns,
            cert.regular_dominant,
            cert.reflections_nonneg,
            cert.pairings_nonzero,
        ];
        assert_eq!(got, common::type_a_conditions(&chi.0), "χ = {:?}", chi.0);
    }
}

#[test]
fn search_matches_oracle_enumeration_a3() {
    let (d, g) = group(RootType::A, 3);
    let found = search_chi(&d, &g, 20);
    // every regular dominant χ of α-height <= 20 has ω-coordinates <= 20
    let mut expected = Vec::new();
    for a in 1..=20i64 {
        for b in 1..=20 {
            for c in 1..=20 {
                let chi = Weight(vec![a, b, c]);
                if common::type_a_conditions(&chi.0).iter().all(|&x| x) {
                    let h: i64 = d.alpha_coords_int(&chi).unwrap().iter().sum();
                    if h <= 20 {
                        expected.push(chi);
                    }
                }
            }
        }
    }
    let mut got = found.clone();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
}

#[test]
fn weyl_group_matches_permutations() {
    for n in 1..=4 {
        let (_, g) = group(RootType::A, n);
        let perms = common::permutations(n + 1);
        assert_eq!(g.len(), perms.len());
        let mut dist = vec![0usize; n * (n + 1) / 2 + 1];
        for p in &perms {
            dist[common::inversions(p)] += 1;
        }
        assert_eq!(g.length_distribution(), dist, "A{n}");
    }
}

#[test]
fn support_size_matches_orbit_sums_a3() {
    let (d, _) = group(RootType::A, 3);
    for chi in [vec![3, 3, 1], vec![1, 3, 3], vec![2, 2, 2], vec![2, 3, 4]] {
        let chi = Weight(chi);
        let dominant = d.dominant_weights_leq(&chi).unwrap();
        let expected: usize = dominant
            .iter()
            .map(|nu| common::type_a_orbit_size(&nu.0))
            .sum();
        assert_eq!(d.weight_support(&chi).unwrap().len(), expected);
    }
}

fn random_instance(rng: &mut StdRng) -> (Vec<Vec<i64>>, Vec<i64>) {
    let dim = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=8);
    let pts = (0..k)
        .map(|_| (0..dim).map(|_| rng.gen_range(-5..=5)).collect())
        .collect();
    let target = (0..dim).map(|_| rng.gen_range(-5..=5)).collect();
    (pts, target)
}

#[test]
fn convex_membership_matches_caratheodory() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..2000 {
        let (pts, t) = random_instance(&mut rng);
        let points: Vec<RatVector> = pts.iter().map(|p| RatVector::from_ints(p)).collect();
        let target = RatVector::from_ints(&t);
        let cert = convex_membership(&points, &target).unwrap();
        assert!(cert.verify(&points, &target));
        let inside = cert.verdict() == HullVerdict::Inside;
        assert_eq!(
            inside,
            common::caratheodory_inside(&pts, &t),
            "{pts:?} {t:?}"
        );
    }
}

#[test]
fn interior_matches_dual_cone_oracle() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..1500 {
        let (pts, _) = random_instance(&mut rng);
        let dim = pts[0].len();
        let points: Vec<RatVector> = pts.iter().map(|p| RatVector::from_ints(p)).collect();
        let origin = RatVector::zeros(dim);
        let cert = interior_membership(&points, &origin).unwrap();
        assert!(cert.verify(&points, &origin));
        assert_eq!(
            cert.is_interior(),
            common::origin_interior(&pts, dim),
            "{pts:?}"
        );
        assert_eq!(
            cert.in_hull(),
            common::caratheodory_inside(&pts, &vec![0; dim])
        );
    }
}
