//! Check the orbit/Springer data against the census: for simply-laced
//! families the number of width-k ideals equals dim π(𝒪_kᶜ,1); for sp it is
//! a two-term sum; so_odd pairs the non-special and special rows. Also runs
//! the explicit Weyl-group bijection at small rank. Run with:
//!
//!     cargo run --example springer_check

use hwhc::census::{verify_bijection_classical, verify_springer_identities};
use hwhc::root_data::HermitianType;

fn main() {
    for t in [
        HermitianType::Su { p: 3, q: 3 },
        HermitianType::Sp { n: 5 },
        HermitianType::SoStar { n: 6 },
        HermitianType::SoOdd { n: 5 },
        HermitianType::SoEven { n: 6 },
        HermitianType::E6,
        HermitianType::E7,
    ] {
        let r = verify_springer_identities(t).unwrap();
        println!(
            "{:<12} counts {:?} vs springer-predicted {:?} -> {}",
            r.type_label,
            r.counts,
            r.predicted,
            if r.pass { "ok" } else { "MISMATCH" }
        );
        assert!(r.pass);
    }
    for t in [
        HermitianType::Su { p: 3, q: 3 },
        HermitianType::Sp { n: 4 },
        HermitianType::SoStar { n: 5 },
    ] {
        let b = verify_bijection_classical(t).unwrap();
        println!(
            "{:<12} |W-orbit reps| = {} = |downsets| = {}, bijective: {}",
            b.type_label, b.weyl_count, b.downset_count, b.bijective
        );
        assert!(b.pass);
    }
}
