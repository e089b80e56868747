//! Reproduce the width census across all seven families: the number of
//! lower order ideals of Δ(𝔭⁺) of each width, checked against the closed
//! forms. Run with:
//!
//!     cargo run --example census_table

use hwhc::census::width_census;
use hwhc::root_data::HermitianType;

fn main() {
    let types = [
        HermitianType::Su { p: 4, q: 3 },
        HermitianType::Sp { n: 6 },
        HermitianType::SoStar { n: 8 },
        HermitianType::SoOdd { n: 6 },
        HermitianType::SoEven { n: 6 },
        HermitianType::E6,
        HermitianType::E7,
    ];
    println!("{:<14} {:>8}  counts by width 0..r", "family", "total");
    for t in types {
        let report = width_census(t).unwrap();
        println!(
            "{:<14} {:>8}  {:?}{}",
            report.type_label,
            report.total,
            report.counts,
            if report.pass { "" } else { "  MISMATCH" }
        );
        assert!(report.pass, "{:?}", report.mismatches);
    }
}
