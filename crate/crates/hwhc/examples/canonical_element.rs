//! Compute the minimal-length Weyl element w with w⁻¹(λ+ρ) antidominant
//! and verify that the diagram of λ equals the diagram of −wρ−ρ. Run with:
//!
//!     cargo run --example canonical_element

use hwhc::diagram::{apply_word, canonical_w, compute_diagram, HermitianContext};
use hwhc::root_data::{HermitianType, Weight};

fn main() {
    let ctx = HermitianContext::new(HermitianType::Su { p: 4, q: 3 }).unwrap();
    let lambda_rho = Weight::from_ints(&[2, 1, -1, -2, 3, 0, -3]);
    println!("λ+ρ = {lambda_rho}  (singular: two coordinates tie across blocks)");

    let word = canonical_w(&lambda_rho, &ctx.rs).unwrap();
    let pretty: Vec<String> = word.iter().map(|i| format!("s{}", i + 1)).collect();
    println!("w = {} (length {})", pretty.join(" "), word.len());

    let w_rho = apply_word(&ctx.rs, &word, &ctx.rs.rho.clone());
    println!("-wρ = {}", w_rho.neg());

    let d1 = compute_diagram(&lambda_rho, &ctx).unwrap();
    let d2 = compute_diagram(&w_rho.neg(), &ctx).unwrap();
    println!(
        "Y_λ has {} roots; Y_(-wρ-ρ) has {} roots; equal: {}",
        d1.y.count(),
        d2.y.count(),
        d1.y == d2.y
    );
}
