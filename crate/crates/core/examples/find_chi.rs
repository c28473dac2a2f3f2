//! Search for polarization characters by α-height, and the constructive
//! candidate 2mρ + Nωᵢ.

use torus_git::polarization::{construct_chi_proof_path, search_chi};
use torus_git::rootsys::{RootDatum, RootType};
use torus_git::weyl::WeylGroup;

fn main() -> torus_git::Result<()> {
    for (t, n, bound) in [
        (RootType::A, 2, 30),
        (RootType::A, 3, 14),
        (RootType::A, 4, 26),
        (RootType::B, 3, 20),
    ] {
        let d = RootDatum::new(t, n)?;
        let g = WeylGroup::new(&d)?;
        let found = search_chi(&d, &g, bound);
        println!("{} height <= {bound}: {} found", d.label(), found.len());
        for chi in found.iter().take(4) {
            println!("  ω {:?}  α {}", chi.0, d.alpha_coords(chi));
        }
        match construct_chi_proof_path(&d, &g) {
            Ok(p) => println!(
                "  constructed: ω {:?} with m = {}, k = {:?}, N = {}",
                p.chi.0, p.m, p.k, p.det
            ),
            Err(e) => println!("  constructed: {e}"),
        }
    }
    Ok(())
}
