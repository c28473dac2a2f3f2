//! Picard ranks of X, Z and the quotient Y.

use torus_git::rootsys::{RootDatum, RootType};
use torus_git::weyl::WeylGroup;
use torus_git::wonderful::{picard_rank_report, WonderfulModel};

fn main() -> torus_git::Result<()> {
    for n in 2..=5 {
        let d = RootDatum::new(RootType::A, n)?;
        let g = WeylGroup::new(&d)?;
        let m = WonderfulModel::new(&d, &g, &d.two_rho())?;
        let p = picard_rank_report(&m);
        print!(
            "PSL({}): X {} Z {} Y {}",
            n + 1,
            p.rank_x,
            p.rank_z,
            p.rank_y
        );
        match &p.note {
            Some(note) => println!("  ({note})"),
            None => println!(),
        }
    }
    Ok(())
}
