//! Chow–Künneth pieces of a bundle with pure Tate fibre over an abelian
//! surface: each piece h^i(A) is tensored with every summand L^n of the fibre.

use motcalc::{ck_assemble, CKComponent, FibreSpec, OrbitCap};
use num_bigint::BigUint;

fn main() -> Result<(), motcalc::Error> {
    let betti = [1u32, 4, 6, 4, 1];
    let base: Vec<CKComponent> = betti
        .iter()
        .enumerate()
        .map(|(i, &b)| CKComponent::new(format!("h{i}"), i as i64, vec![BigUint::from(b)]))
        .collect();

    let fibre: FibreSpec = "P 1".parse()?;
    for c in ck_assemble(&base, &fibre, OrbitCap::DEFAULT)? {
        let ranks: Vec<String> = c.chow_ranks.iter().map(ToString::to_string).collect();
        println!(
            "weight {:>2}  {:<10} ranks [{}]",
            c.weight,
            c.label,
            ranks.join(" ")
        );
    }
    Ok(())
}
