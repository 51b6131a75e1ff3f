//! Motives of G/P from minimal coset representatives of the Weyl group.

use motcalc::{coset_lengths, Family, OrbitCap, ParabolicSpec, RootSystem};

fn main() -> Result<(), motcalc::Error> {
    let cases = [
        (Family::A, 3, ParabolicSpec::new([1, 3]), "Gr(2,4)"),
        (Family::A, 2, ParabolicSpec::borel(), "full flags of k^3"),
        (
            Family::B,
            3,
            ParabolicSpec::maximal(3, 1),
            "quadric of dim 5",
        ),
        (
            Family::C,
            3,
            ParabolicSpec::maximal(3, 3),
            "Lagrangian Grassmannian LG(3,6)",
        ),
        (Family::G, 2, ParabolicSpec::borel(), "G2/B"),
        (Family::E, 6, ParabolicSpec::maximal(6, 1), "Cayley plane"),
        (
            Family::E,
            7,
            ParabolicSpec::maximal(7, 7),
            "Freudenthal variety",
        ),
    ];
    for (family, rank, parabolic, name) in cases {
        let rs = RootSystem::new(family, rank)?;
        let profile = coset_lengths(&rs, &parabolic, OrbitCap::DEFAULT)?;
        println!(
            "{rs} levi {{{parabolic}}} ({name}): |W^P| = {}, dim = {}",
            profile.total,
            rs.flag_dimension(&parabolic)?
        );
        println!("    {}", profile.to_motive());
    }

    let e8 = RootSystem::new(Family::E, 8)?;
    match coset_lengths(&e8, &ParabolicSpec::borel(), OrbitCap::DEFAULT) {
        Ok(_) => println!("E8/B enumerated"),
        Err(e) => println!("E8/B: {e}"),
    }
    Ok(())
}
