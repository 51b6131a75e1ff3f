//! Grassmann bundles: the fibre motive counts partitions in a box by weight.

use motcalc::verify::partitions_in_box;
use motcalc::{BaseSpec, FibreSpec, OrbitCap, TateMotive, TowerSpec};

fn main() -> Result<(), motcalc::Error> {
    for (d, n) in [(1, 4), (2, 4), (2, 5), (3, 6)] {
        let fibre = FibreSpec::Grassmannian { d, n };
        let motive = fibre.motive(OrbitCap::DEFAULT)?;
        assert_eq!(motive, partitions_in_box(d, n - d));
        println!("Gr({d},{n}), dim {:>2}: {motive}", fibre.dimension()?);
    }

    // Gr_2 of a rank-4 bundle over P^2: M(Y) ⊗ M(Gr(2,4)).
    let p2 = TateMotive::from_coefficients([1u32, 1, 1]);
    let tower = TowerSpec::new(BaseSpec::TateBase(p2), vec!["Gr 2 4".parse()?]);
    println!("Gr_2(E) over P^2: {}", tower.motive(OrbitCap::DEFAULT)?);
    println!("dimension {}", tower.dimension()?);
    Ok(())
}
