//! Euler's product against the pentagonal number series.

use num_rational::BigRational;
use qbailey::series::{pochhammer, HalfExp, Length, Monomial, QSeries};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 60;
    let trunc = HalfExp::q(n);
    let product = pochhammer(Monomial::q(1), 2, Length::Infinite, trunc)?;

    let mut terms = Vec::new();
    for k in 0i64.. {
        let p = (k * (3 * k - 1) / 2) as u32;
        if p > n {
            break;
        }
        let sign = BigRational::from_integer(if k % 2 == 0 { 1.into() } else { (-1).into() });
        terms.push((HalfExp::q(p), sign.clone()));
        if k > 0 {
            let p2 = (k * (3 * k + 1) / 2) as u32;
            if p2 <= n {
                terms.push((HalfExp::q(p2), sign));
            }
        }
    }
    let pentagonal = QSeries::from_terms(terms, trunc);

    println!("(q;q)_inf = {}", product.truncate(HalfExp::q(26)));
    match product.first_difference(&pentagonal) {
        None => println!("agrees with the pentagonal series to q^{n}"),
        Some(m) => println!("differs at q^{}", m.exponent),
    }
    Ok(())
}
