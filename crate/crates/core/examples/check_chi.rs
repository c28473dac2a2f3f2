//! The four polarization conditions, with the witness of the first failure.

use torus_git::polarization::check_lemma1;
use torus_git::rootsys::{RootDatum, RootType, Weight};
use torus_git::weyl::WeylGroup;

fn main() -> torus_git::Result<()> {
    let d = RootDatum::new(RootType::A, 3)?;
    let g = WeylGroup::new(&d)?;
    for chi in [vec![3, 3, 1], vec![2, 2, 2], vec![1, 1, 7], vec![1, 0, 0]] {
        let chi = Weight(chi);
        let c = check_lemma1(&d, &g, &chi);
        println!(
            "{:?}: in ℕS {} regular {} reflections {} pairings {}",
            chi.0, c.in_ns, c.regular_dominant, c.reflections_nonneg, c.pairings_nonzero
        );
        if let Some(w) = &c.failure_witness {
            println!("  witness {w:?} re-verifies: {}", w.reverify(&d, &chi));
        }
    }
    Ok(())
}
