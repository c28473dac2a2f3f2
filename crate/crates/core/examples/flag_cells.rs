//! Generic stability of every Schubert cell of G/B for one χ.

use torus_git::rootsys::{RootDatum, RootType, Weight};
use torus_git::stability::{verify_lemma2, SchubertContext};
use torus_git::weyl::WeylGroup;

fn main() -> torus_git::Result<()> {
    let d = RootDatum::new(RootType::A, 3)?;
    let g = WeylGroup::new(&d)?;
    for chi in [Weight(vec![3, 3, 1]), d.two_rho()] {
        let r = verify_lemma2(&d, &g, &chi)?;
        let ctx = SchubertContext::new(&d, &chi)?;
        println!("χ = {:?}, |Π(χ)| = {}", chi.0, ctx.support().len());
        for c in &r.sweep.cells {
            println!(
                "  {:<12} codim {}  w(χ) <= 0: {:<5}  |state| {:>3}  {}",
                format!("{:?}", c.w),
                c.codim,
                c.w_chi_leq_zero,
                c.state_size,
                c.generic_verdict.kind().name()
            );
        }
        println!(
            "  codim {}  ss = s {}  low codim stable {}  min unstable codim {:?}",
            r.codim_implication.passed,
            r.semistable_is_stable.passed,
            r.low_codim_stable.passed,
            r.sweep.min_unstable_codim()
        );
    }
    Ok(())
}
