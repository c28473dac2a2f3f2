//! Stability report on the wonderful compactification of PSL(4).

use torus_git::rootsys::{RootDatum, RootType, Weight};
use torus_git::stability::classify_state;
use torus_git::weyl::WeylGroup;
use torus_git::wonderful::{identity_state, verify_cor1, WonderfulModel};

fn main() -> torus_git::Result<()> {
    let d = RootDatum::new(RootType::A, 3)?;
    let g = WeylGroup::new(&d)?;
    let m = WonderfulModel::new(&d, &g, &Weight(vec![3, 3, 1]))?;
    let id = identity_state(&m);
    println!(
        "identity state: {} weights, {}",
        id.len(),
        classify_state(&d, &id).kind().name()
    );
    println!("χ' = -w0(χ) = {:?}", m.translated_chi().0);
    let r = verify_cor1(&m)?;
    for c in &r.checks {
        println!("  {:<34} {}", c.name, c.status.name());
        if let Some(a) = &c.assumes {
            println!("  {:<34} assumes: {a}", "");
        }
    }
    println!(
        "min unstable codim in Z {:?}, bound in X {:?}",
        r.min_unstable_codim_in_z, r.derived_codim_bound_in_x
    );
    let sections = m.section_index_set()?;
    println!(
        "{} dominant ν <= χ index the sections of L_χ",
        sections.len()
    );
    Ok(())
}
