//! Emit the Hasse diagram of a noncompact root poset as DOT text, ready for
//! `dot -Tsvg`. Pass a family name (su, sp, so_star, so_odd, so_even, e6,
//! e7); defaults to e6. Run with:
//!
//!     cargo run --example hasse_dot -- e7

use hwhc::diagram::HermitianContext;
use hwhc::root_data::HermitianType;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "e6".to_owned());
    let htype = match arg.as_str() {
        "su" => HermitianType::Su { p: 4, q: 3 },
        "sp" => HermitianType::Sp { n: 5 },
        "so_star" => HermitianType::SoStar { n: 6 },
        "so_odd" => HermitianType::SoOdd { n: 4 },
        "so_even" => HermitianType::SoEven { n: 6 },
        "e6" => HermitianType::E6,
        "e7" => HermitianType::E7,
        other => {
            eprintln!("unknown family '{other}'");
            std::process::exit(2);
        }
    };
    let ctx = HermitianContext::new(htype).unwrap();
    print!("{}", ctx.poset.emit_hasse_dot());
}
