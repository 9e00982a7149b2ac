use qbailey::bailey::{fine_identity_check, fine_sides};
use qbailey::series::{HalfExp, Monomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (lhs, rhs) = fine_sides(Monomial::t(1), Monomial::q(1), HalfExp::q(4))?;
    println!("lhs = {lhs}");
    println!("rhs = {rhs}");

    for (b, t) in [("q^1/2", "q"), ("-q", "q^2"), ("q", "q"), ("-1", "q^3/2")] {
        let report = fine_identity_check(b.parse()?, t.parse()?, HalfExp::q(60))?;
        println!("{}", report.to_json(false));
    }
    Ok(())
}
