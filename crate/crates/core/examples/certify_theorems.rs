//! The three partition identities: n-sum, theta side, counts and the Bailey
//! lemma, all to q^100.

use qbailey::series::HalfExp;
use qbailey::theta::Identity;
use qbailey::verify::verify_theorem;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trunc = HalfExp::q(100);
    for id in Identity::ALL {
        let oracle = if id == Identity::One { 50 } else { 40 };
        for r in verify_theorem(id, trunc, Some(oracle))? {
            println!("{:?}  {:>4}ms  {}", r.status, r.elapsed_ms, r.identity);
        }
    }
    Ok(())
}
