//! The metaplectic sp(22,R) example: a half-integral weight whose diagram
//! has width 3, so the associated variety is the closure of the 7th orbit
//! and the GK dimension is 56. Run with:
//!
//!     cargo run --example intro_example

use hwhc::avcore::associated_variety;
use hwhc::diagram::{compute_diagram, HermitianContext};
use hwhc::poset::width_fast_sp;
use hwhc::root_data::{HermitianType, Weight};
use hwhc::rs_oracle::k_prime;
use hwhc::Rat;

fn main() {
    let ctx = HermitianContext::new(HermitianType::Sp { n: 11 }).unwrap();
    let lambda_rho = Weight::new(
        [25, 23, 19, 15, 13, 11, 9, -3, -7, -9, -17]
            .iter()
            .map(|&n| Rat::new(n, 2))
            .collect(),
    );
    println!("λ+ρ = {lambda_rho}");

    let fast = width_fast_sp(&lambda_rho.coords).unwrap();
    println!("greedy pair scan: width(Y) = {fast}");

    let diagram = compute_diagram(&lambda_rho, &ctx).unwrap();
    let (width, witness) = ctx.poset.width(&diagram.y);
    println!(
        "diagram: {} of {} noncompact roots, width {width}, witness {:?}",
        diagram.y.count(),
        ctx.poset.len(),
        witness
            .iter()
            .map(|&i| ctx.poset.roots[i].display())
            .collect::<Vec<_>>()
    );

    let av = associated_variety(&ctx, &lambda_rho).unwrap();
    println!(
        "class {}, k = {}, orbit {} of dimension {}, GK dimension {}",
        av.integrality, av.k, av.orbit_label, av.orbit_dim, av.gk_dim
    );

    let oracle = k_prime(&ctx, &lambda_rho).unwrap();
    println!("insertion oracle: k' = {oracle} ({})", if oracle == av.k { "agrees" } else { "DISAGREES" });
}
