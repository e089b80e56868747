//! Cross-check the width-based orbit index against the insertion-based one
//! on a grid of so*(2n) weights, hitting all three integrality classes.
//! Run with:
//!
//!     cargo run --example oracle_sweep

use hwhc::avcore::associated_variety;
use hwhc::diagram::HermitianContext;
use hwhc::root_data::{HermitianType, Weight};
use hwhc::rs_oracle::k_prime;
use hwhc::Rat;

fn main() {
    let ctx = HermitianContext::new(HermitianType::SoStar { n: 5 }).unwrap();
    let window: Vec<i64> = (-4..=4).rev().collect();
    let mut total = 0usize;
    let mut by_k = [0usize; 3];
    for a in 0..window.len() {
        for b in a + 1..window.len() {
            for c in b + 1..window.len() {
                for d in c + 1..window.len() {
                    for e in d + 1..window.len() {
                        for shift in [Rat::new(0, 1), Rat::new(1, 2), Rat::new(1, 4)] {
                            let coords: Vec<Rat> = [a, b, c, d, e]
                                .iter()
                                .map(|&i| Rat::from_integer(window[i]) + shift)
                                .collect();
                            let lr = Weight::new(coords);
                            let av = associated_variety(&ctx, &lr).unwrap();
                            let oracle = k_prime(&ctx, &lr).unwrap();
                            assert_eq!(av.k, oracle, "disagreement at {lr}");
                            by_k[av.k] += 1;
                            total += 1;
                        }
                    }
                }
            }
        }
    }
    println!("so_star(5): {total} weights, k distribution {by_k:?}, oracle agreement 100%");
}
