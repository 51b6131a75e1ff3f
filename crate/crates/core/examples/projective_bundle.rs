//! Projective bundles over a base known only through its Chow ranks.
//!
//! For a rank-r bundle E over Y, CH^*(P(E)) is r shifted copies of CH^*(Y).

use motcalc::{BaseSpec, FibreSpec, OrbitCap, TowerSpec};
use num_bigint::BigUint;

fn main() -> Result<(), motcalc::Error> {
    // A surface with Chow ranks 1, 3, 1, e.g. a blow-up of P^2 at two points.
    let ranks: Vec<BigUint> = [1u32, 3, 1].into_iter().map(BigUint::from).collect();
    let surface = BaseSpec::free_chow(ranks, 2)?;

    for r in 1..=4 {
        let tower = TowerSpec::new(surface.clone(), vec![FibreSpec::ProjectiveSpace(r - 1)]);
        let ranks: Vec<String> = tower
            .chow_ranks(OrbitCap::DEFAULT)?
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("P(E), rank E = {r}: CH ranks {}", ranks.join(" "));
    }

    // The base carries no motive, only ranks.
    let tower = TowerSpec::new(surface, vec![FibreSpec::ProjectiveSpace(1)]);
    if let Err(e) = tower.motive(OrbitCap::DEFAULT) {
        println!("motive unavailable: {e}");
    }
    Ok(())
}
