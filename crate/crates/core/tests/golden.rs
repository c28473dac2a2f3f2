//! Pinned values from full computations.

use torus_git::polarization::{check_lemma1, construct_chi_proof_path, search_chi, FailureWitness};
use torus_git::rootsys::{RootDatum, RootType, Weight};
use torus_git::stability::verify_lemma2;
use torus_git::weyl::WeylGroup;
use torus_git::wonderful::{picard_rank_report, verify_cor1, verify_prop1, WonderfulModel};
use torus_git::Error;

fn group(t: RootType, n: usize) -> (RootDatum, WeylGroup) {
    let d = RootDatum::new(t, n).unwrap();
    let g = WeylGroup::new(&d).unwrap();
    (d, g)
}

#[test]
fn a3_search_counts() {
    let (d, g) = group(RootType::A, 3);
    assert!(search_chi(&d, &g, 3).is_empty());
    assert!(search_chi(&d, &g, 11).is_empty());
    let at12 = search_chi(&d, &g, 12);
    assert_eq!(at12, vec![Weight(vec![1, 3, 3]), Weight(vec![3, 3, 1])]);
    assert_eq!(search_chi(&d, &g, 20).len(), 16);
}

#[test]
fn a4_search_counts() {
    let (d, g) = group(RootType::A, 4);
    assert!(search_chi(&d, &g, 24).is_empty());
    let at25 = search_chi(&d, &g, 25);
    assert_eq!(
        at25,
        vec![Weight(vec![1, 2, 3, 4]), Weight(vec![4, 3, 2, 1])]
    );
    assert_eq!(search_chi(&d, &g, 30).len(), 10);
}

#[test]
fn a2_is_empty() {
    let (d, g) = group(RootType::A, 2);
    assert!(search_chi(&d, &g, 30).is_empty());
    assert!(matches!(
        construct_chi_proof_path(&d, &g),
        Err(Error::ExcludedByHypothesis(_))
    ));
}

#[test]
fn other_types() {
    let (d, g) = group(RootType::B, 3);
    let b3 = search_chi(&d, &g, 20);
    assert!(b3.contains(&Weight(vec![2, 1, 2])));
    let (d, g) = group(RootType::G, 2);
    let g2 = search_chi(&d, &g, 20);
    assert_eq!(g2.len(), 9);
    assert_eq!(g2[0], Weight(vec![1, 1]));
}

#[test]
fn proof_paths() {
    let (d, g) = group(RootType::A, 3);
    let p = construct_chi_proof_path(&d, &g).unwrap();
    assert_eq!(
        (p.chi.clone(), p.m, p.k.clone(), p.det),
        (Weight(vec![8, 8, 12]), 4, vec![0, 0, 1], 4)
    );
    assert!(p.certificate.passes());
    let (d, g) = group(RootType::A, 4);
    let p = construct_chi_proof_path(&d, &g).unwrap();
    assert_eq!(p.chi, Weight(vec![6, 6, 6, 11]));
    assert_eq!(d.alpha_coords_int(&p.chi).unwrap(), vec![13, 20, 21, 16]);
}

#[test]
fn two_rho_a3() {
    let (d, g) = group(RootType::A, 3);
    let cert = check_lemma1(&d, &g, &d.two_rho());
    assert!(cert.in_ns && cert.regular_dominant && cert.reflections_nonneg);
    assert!(!cert.pairings_nonzero);
    assert!(matches!(
        cert.failure_witness,
        Some(FailureWitness::PairingZero { .. })
    ));
    let r = verify_lemma2(&d, &g, &d.two_rho()).unwrap();
    assert!(r.codim_implication.passed && r.low_codim_stable.passed);
    let words: Vec<Vec<usize>> = r
        .semistable_is_stable
        .violations
        .iter()
        .map(|w| w.reduced_word().to_vec())
        .collect();
    assert_eq!(words, vec![vec![0, 1, 2, 1], vec![0, 2, 1, 0]]);
}

#[test]
fn cell_sweep_minimal_codims() {
    for (t, n, chi, support, min) in [
        (RootType::A, 3, vec![3, 3, 1], 297, 2),
        (RootType::A, 4, vec![1, 2, 3, 4], 6041, 2),
        (RootType::B, 3, vec![2, 1, 2], 437, 3),
    ] {
        let (d, g) = group(t, n);
        let chi = Weight(chi);
        assert_eq!(d.weight_support(&chi).unwrap().len(), support);
        let r = verify_lemma2(&d, &g, &chi).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.sweep.min_unstable_codim(), Some(min));
    }
}

#[test]
fn prop1_golden() {
    for (n, chi) in [(3, vec![3, 3, 1]), (4, vec![1, 2, 3, 4])] {
        let (d, g) = group(RootType::A, n);
        let m = WonderfulModel::new(&d, &g, &Weight(chi)).unwrap();
        let r = verify_prop1(&m).unwrap();
        assert!(!r.any_failed());
        assert_eq!(r.min_unstable_codim_in_z, Some(2));
        assert_eq!(r.derived_codim_bound_in_x, Some(3));
    }
}

#[test]
fn cor1_and_picard() {
    let (d, g) = group(RootType::A, 3);
    let m = WonderfulModel::new(&d, &g, &Weight(vec![3, 3, 1])).unwrap();
    let r = verify_cor1(&m).unwrap();
    assert_eq!(r.count("paper_asserted"), 2);
    assert_eq!(r.count("machine_checked_fail"), 0);
    assert_eq!(picard_rank_report(&m).rank_y, 6);
    let sections = m.section_index_set().unwrap();
    assert_eq!(sections.first(), Some(&Weight(vec![3, 3, 1])));
    assert_eq!(sections.last(), Some(&Weight(vec![0, 0, 0])));
}
