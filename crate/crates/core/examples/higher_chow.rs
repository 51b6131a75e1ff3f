//! Higher Chow ranks of a tower from those of its base: each q-column is
//! convolved with the fibre's multiplicity vector.

use motcalc::{higher_chow_table, FibreSpec, OrbitCap, RankTable};

fn main() -> Result<(), motcalc::Error> {
    // Base ranks as input data: CH^0(Y,0) = 1, CH^1(Y,1) = 1, CH^1(Y,0) = 2.
    let mut base = RankTable::new();
    base.add(0, 0, 1u32.into());
    base.add(1, 0, 2u32.into());
    base.add(1, 1, 1u32.into());

    let fibres: Vec<FibreSpec> = vec!["P 1".parse()?, "Gr 2 4".parse()?];
    let table = higher_chow_table(&base, &fibres, OrbitCap::DEFAULT)?;
    println!("   q    p  rank");
    for (p, q, rank) in table.iter() {
        println!("{q:>4} {p:>4}  {rank}");
    }
    Ok(())
}
