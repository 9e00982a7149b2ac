//! Corrupt one coefficient and watch the first mismatch land on it.

use num_bigint::BigInt;
use num_rational::BigRational;
use qbailey::bailey::{slater_e1, verify_pair};
use qbailey::oracle::enumerate;
use qbailey::series::HalfExp;
use qbailey::theta::{theorem_blocks, theta_block, Identity};
use qbailey::verify::{compare_with_table, lhs_series};
use qbailey::report::VerificationReport;
use std::time::Instant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let one = BigRational::from_integer(BigInt::from(1));
    let trunc = HalfExp::q(20);

    // alpha_3 of E(1) is -2q^9; add q^11
    let bad = slater_e1().with_alpha_perturbed(3, HalfExp::q(11), one.clone());
    let r = verify_pair(&bad, 5, trunc)?;
    println!("{}", serde_json::to_string(&r)?);

    // a wrong coefficient in one theta block
    let id = Identity::Two;
    let [plain, twisted] = theorem_blocks(id);
    let rhs = &theta_block(&plain, trunc)? + &theta_block(&twisted, trunc)?;
    let e = HalfExp::q(7);
    let corrupt = rhs.with_coeff(e, rhs.coeff(e) + one);
    let r = VerificationReport::compare("corrupted theta", &lhs_series(id, trunc)?, &corrupt, trunc, Instant::now());
    println!("{}", r.to_json(false));

    // a wrong entry in the count table
    let mut table = enumerate(id.family(), 20);
    table.counts[13] += 1;
    let r = compare_with_table("corrupted table", &lhs_series(id, trunc)?, &table, Instant::now());
    println!("{}", r.to_json(false));
    Ok(())
}
