//! Arithmetic on pure Tate motives: sums, tensor products, twists and the
//! Chow ranks they encode.

use motcalc::TateMotive;

fn main() {
    let point = TateMotive::unit();
    let lefschetz = TateMotive::lefschetz_power(1);
    let p1 = point.direct_sum(&lefschetz);
    println!("M(P^1)         = {p1}");

    let quadric = p1.tensor(&p1);
    println!("M(P^1 x P^1)   = {quadric}");
    println!("  rank CH_1    = {}", quadric.chow_rank(1));
    println!("  total rank   = {}", quadric.rank());
    println!("  self-dual @2 = {}", quadric.is_self_dual(2));

    let twisted = quadric.twist(3);
    println!("M(P^1 x P^1)(-3) = {twisted}");

    let cube: TateMotive = std::iter::repeat_n(p1.clone(), 3).product();
    println!("M((P^1)^3)     = {cube}  [{}]", cube.multiplicity_line());

    let not_dual = TateMotive::from_coefficients([1u32, 2]);
    println!(
        "{not_dual} self-dual in dimension 1: {}",
        not_dual.is_self_dual(1)
    );

    match TateMotive::from_multiplicities([(-1i64, 1u32)]) {
        Ok(m) => println!("unexpected: {m}"),
        Err(e) => println!("rejected: {e}"),
    }
}
