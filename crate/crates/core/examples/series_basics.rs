//! Arithmetic on the half-integer grid.

use qbailey::series::{HalfExp, Monomial, QSeries};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trunc = HalfExp::q(4);
    let t: Monomial = "q^1/2".parse()?;

    let a = QSeries::one_minus(t, trunc);
    let inv = a.invert_unit()?;
    println!("1/(1 - q^1/2) = {inv}");
    println!("product       = {}", &a * &inv);

    let s = QSeries::one_minus(Monomial::q(1), trunc).substitute_square();
    println!("(1 - q) at q -> q^2 = {s}");

    let shifted = QSeries::monomial(Monomial::q(3), trunc).shift_down(HalfExp::q(1))?;
    println!("q^3 / q = {shifted}");
    Ok(())
}
