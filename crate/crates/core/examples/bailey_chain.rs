//! Builds pairs through the transform chain and checks each one.

use qbailey::bailey::{lovejoy_star, slater_e1, square_base, symmetrize_b, u_pair_chain, u_pair_closed, verify_pair};
use qbailey::series::{HalfExp, Monomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = Monomial::t(1);
    let trunc = HalfExp::q(40);

    let e1 = slater_e1();
    let star = lovejoy_star(&e1, b)?;
    let sym = symmetrize_b(&e1, b)?;
    let sq = square_base(&sym)?;
    let closed = u_pair_closed(b)?;

    for p in [&e1, &star, &sym, &sq, &closed] {
        let r = verify_pair(p, 6, trunc)?;
        println!("{:<28} a={:<6} n<={} {:?}", p.label(), p.a().to_string(), r.n_checked, r.status);
    }

    // the chain and the closed form are the same pair
    let chain = u_pair_chain(b)?;
    for n in 0..=6 {
        let same = chain.beta(n, trunc)? == closed.beta(n, trunc)? && chain.alpha(n, trunc)? == closed.alpha(n, trunc)?;
        println!("n={n} chain == closed: {same}");
    }
    println!("beta_2 = {}", closed.beta(2, HalfExp::q(8))?);
    Ok(())
}
