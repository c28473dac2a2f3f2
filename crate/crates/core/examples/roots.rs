//! Root data of a few simple types: Cartan matrix, positive roots, 2ρ.
//!
//! cargo run --example roots -- B 3

use torus_git::rootsys::{RootDatum, RootType};
use torus_git::weyl::WeylGroup;

fn main() -> torus_git::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (t, n): (RootType, usize) = match args.as_slice() {
        [t, n] => (
            t.parse()?,
            n.parse().map_err(|_| torus_git::Error::Parse(n.clone()))?,
        ),
        _ => (RootType::A, 3),
    };
    let d = RootDatum::new(t, n)?;
    println!("{} det {}", d.label(), d.cartan_determinant());
    for row in d.cartan() {
        println!("  {row:?}");
    }
    println!("positive roots (α-coordinates):");
    for r in d.positive_roots() {
        println!("  {r:?}");
    }
    let two_rho = d.two_rho();
    println!("2ρ = {:?}_ω = {}_α", two_rho.0, d.alpha_coords(&two_rho));
    let g = WeylGroup::new(&d)?;
    println!(
        "|W| = {}, l(w0) = {}, w0 = {:?}",
        g.len(),
        g.max_length(),
        g.longest()
    );
    println!("Poincaré coefficients {:?}", g.length_distribution());
    Ok(())
}
