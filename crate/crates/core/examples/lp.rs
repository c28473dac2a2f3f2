//! Certified hull membership and interior tests over the rationals.

use torus_git::ratlp::{convex_membership, interior_membership, RatVector};

fn pts(v: &[[i64; 2]]) -> Vec<RatVector> {
    v.iter().map(|p| RatVector::from_ints(p)).collect()
}

fn main() -> torus_git::Result<()> {
    let origin = RatVector::zeros(2);
    for (name, p) in [
        ("diamond", pts(&[[1, 0], [0, 1], [-1, 0], [0, -1]])),
        ("segment", pts(&[[1, 0], [-1, 0]])),
        ("corner", pts(&[[1, 0], [0, 1], [2, 3]])),
    ] {
        let hull = convex_membership(&p, &origin)?;
        let int = interior_membership(&p, &origin)?;
        println!("{name}: {hull:?}");
        println!("  interior test {int:?}");
        println!(
            "  certificates verify: {} {}",
            hull.verify(&p, &origin),
            int.verify(&p, &origin)
        );
    }
    Ok(())
}
