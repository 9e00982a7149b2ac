//! Signed counts by enumeration, next to the series they should match.

use qbailey::oracle::{enumerate, naive, Family};
use qbailey::series::HalfExp;
use qbailey::verify::lhs_series;
use qbailey::theta::Identity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 15;
    for (family, id) in [(Family::P, Identity::One), (Family::Q, Identity::Two), (Family::R, Identity::Three)] {
        let table = enumerate(family, n);
        let series = lhs_series(id, HalfExp::q(n as u32))?;
        println!("{family}:");
        println!("  n  dp  naive  series");
        for k in 0..=n {
            let c = series.coeff(HalfExp::q(k as u32));
            println!("{k:>3} {:>3} {:>6} {:>7}", table.count(k), naive::signed_count(family, k), c);
        }
    }
    Ok(())
}
