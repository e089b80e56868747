//! The orbit index k(λ), orbit dimensions and labels, Springer dimensions,
//! and the Gelfand-Kirillov dimension.
//!
//! The K-orbits in 𝔭⁺ form a chain 0 = 𝒪_0 ⊂ 𝒪_1 ⊂ … ⊂ 𝒪_r = 𝔭⁺, and the
//! associated variety of L(λ) is the closure of 𝒪_{k(λ)} where k(λ) depends
//! only on the integrality class of λ and the width m of its diagram:
//!
//! * simply laced, integral: k = m;
//! * non-simply laced, integral: k = 2m, capped at r when m = (r+1)/2;
//! * non-simply laced, half-integral: k = 2m+1, capped at r when m = r/2;
//! * anything else: k = r.
//!
//! Orbit data for the classical families is kept as formulas and tested via
//! the census identities, so transcription errors cannot hide; the E-type
//! rows are literal.

use num_integer::binomial;

use crate::diagram::{
    check_k_dominant, classify_integrality, compute_diagram, integral_subsystem,
    HermitianContext, IntegralityClass, IntegralSubsystem,
};
use crate::root_data::{HermitianType, Weight};
use crate::{Error, Result};

/// Everything the pipeline knows about one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvResult {
    pub integrality: IntegralityClass,
    pub width_m: usize,
    pub k: usize,
    pub real_rank: usize,
    pub orbit_dim: usize,
    pub orbit_label: String,
    pub gk_dim: usize,
    /// δ = |Δ⁺| − |Δ_λ⁺|; zero for integral weights.
    pub delta: usize,
    pub y_size: usize,
}

/// One row of the orbit / Springer data table.
#[derive(Clone, Debug)]
pub struct SpringerRow {
    pub k: usize,
    pub orbit_dim: usize,
    pub complex_label: String,
    pub special: bool,
    pub springer_dim: u64,
}

/// The orbit index as a function of family, integrality class and width.
pub fn k_of_lambda(htype: HermitianType, class: IntegralityClass, m: usize) -> Result<usize> {
    let r = htype.real_rank();
    if m > r {
        return Err(Error::Internal(format!(
            "width {m} exceeds real rank {r} of {htype}"
        )));
    }
    match class {
        IntegralityClass::Integral if htype.is_simply_laced() => Ok(m),
        IntegralityClass::Integral => {
            if 2 * m < r + 1 {
                Ok(2 * m)
            } else if 2 * m == r + 1 {
                Ok(r)
            } else {
                Err(Error::Internal(format!(
                    "integral width {m} out of range for {htype}"
                )))
            }
        }
        IntegralityClass::HalfIntegral => {
            if htype.is_simply_laced() {
                return Err(Error::Internal(format!(
                    "half-integral class is unreachable for {htype}"
                )));
            }
            if 2 * m < r {
                Ok(2 * m + 1)
            } else if 2 * m == r {
                Ok(r)
            } else {
                Err(Error::Internal(format!(
                    "half-integral width {m} out of range for {htype}"
                )))
            }
        }
        IntegralityClass::Other => Ok(r),
    }
}

pub fn orbit_dimension(htype: HermitianType, k: usize) -> Result<usize> {
    check_orbit_index(htype, k)?;
    Ok(match htype {
        HermitianType::Su { p, q } => k * (p + q - k),
        HermitianType::Sp { n } => k * (2 * n - k + 1) / 2,
        HermitianType::SoStar { n } => k * (2 * n - 2 * k - 1),
        HermitianType::SoOdd { n } => [0, 2 * n - 2, 2 * n - 1][k],
        HermitianType::SoEven { n } => [0, 2 * n - 3, 2 * n - 2][k],
        HermitianType::E6 => [0, 11, 16][k],
        HermitianType::E7 => [0, 17, 26, 27][k],
    })
}

/// Partition label of the complex orbit 𝒪_kᶜ (Bala-Carter for E types).
pub fn orbit_label(htype: HermitianType, k: usize) -> Result<String> {
    check_orbit_index(htype, k)?;
    Ok(match htype {
        HermitianType::Su { p, q } => partition_label(k, p + q - 2 * k),
        HermitianType::Sp { n } => partition_label(k, 2 * n - 2 * k),
        HermitianType::SoStar { n } => partition_label(2 * k, 2 * n - 4 * k),
        HermitianType::SoOdd { n } => match k {
            0 => partition_label(0, 2 * n + 1),
            1 => format!("[2^2,1^{}]", 2 * n - 3),
            _ => format!("[3,1^{}]", 2 * n - 2),
        },
        HermitianType::SoEven { n } => match k {
            0 => partition_label(0, 2 * n),
            1 => format!("[2^2,1^{}]", 2 * n - 4),
            _ => format!("[3,1^{}]", 2 * n - 3),
        },
        HermitianType::E6 => ["0", "A_1", "2A_1"][k].to_owned(),
        HermitianType::E7 => ["0", "A_1", "2A_1", "(3A_1)''"][k].to_owned(),
    })
}

fn partition_label(twos: usize, ones: usize) -> String {
    let mut parts = Vec::new();
    match twos {
        0 => {}
        1 => parts.push("2".to_owned()),
        _ => parts.push(format!("2^{twos}")),
    }
    match ones {
        0 => {}
        1 => parts.push("1".to_owned()),
        _ => parts.push(format!("1^{ones}")),
    }
    if parts.is_empty() {
        "0".to_owned()
    } else {
        format!("[{}]", parts.join(","))
    }
}

fn check_orbit_index(htype: HermitianType, k: usize) -> Result<()> {
    if k > htype.real_rank() {
        return Err(Error::Internal(format!(
            "orbit index {k} out of range for {htype} (real rank {})",
            htype.real_rank()
        )));
    }
    Ok(())
}

/// dim π(𝒪_kᶜ, 1) and whether that Springer representation is special.
fn springer_entry(htype: HermitianType, k: usize) -> (u64, bool) {
    match htype {
        HermitianType::Su { p, q } => {
            let n = (p + q) as u64;
            let dim = binomial(n, k as u64) - if k == 0 { 0 } else { binomial(n, k as u64 - 1) };
            (dim, true)
        }
        HermitianType::Sp { n } => {
            let n = n as u64;
            let k = k as u64;
            if k.is_multiple_of(2) {
                (binomial(n, k / 2), true)
            } else if k < n {
                (binomial(n, (k - 1) / 2), false)
            } else {
                (binomial(n, (n - 1) / 2), true)
            }
        }
        HermitianType::SoStar { n } => {
            let dim = if n % 2 == 0 && k == n / 2 {
                binomial(n as u64, k as u64) / 2
            } else {
                binomial(n as u64, k as u64)
            };
            (dim, true)
        }
        HermitianType::SoOdd { n } => match k {
            0 => (1, true),
            1 => (n as u64 - 1, false),
            _ => (n as u64, true),
        },
        HermitianType::SoEven { n } => match k {
            0 => (1, true),
            1 => (n as u64, true),
            _ => (n as u64 - 1, true),
        },
        HermitianType::E6 => ([1, 6, 20][k], true),
        HermitianType::E7 => ([1, 7, 27, 21][k], true),
    }
}

/// Full orbit table for one family, k = 0..r.
pub fn springer_table(htype: HermitianType) -> Result<Vec<SpringerRow>> {
    htype.validate()?;
    (0..=htype.real_rank())
        .map(|k| {
            let (springer_dim, special) = springer_entry(htype, k);
            Ok(SpringerRow {
                k,
                orbit_dim: orbit_dimension(htype, k)?,
                complex_label: orbit_label(htype, k)?,
                special,
                springer_dim,
            })
        })
        .collect()
}

/// Gelfand-Kirillov dimension. Each branch computes the value from its own
/// formula and cross-checks it against the orbit dimension at k; the two
/// routes disagreeing would mean a transcription bug, reported as an error
/// rather than masked.
pub fn gk_dimension(
    htype: HermitianType,
    class: IntegralityClass,
    m: usize,
    k: usize,
    subsystem: &IntegralSubsystem,
) -> Result<usize> {
    let delta = subsystem.delta_count_gap;
    let computed = match (class, htype) {
        (IntegralityClass::Integral, _) => {
            if delta != 0 {
                return Err(Error::Internal(format!("integral weight with δ = {delta}")));
            }
            orbit_dimension(htype, k)?
        }
        (IntegralityClass::HalfIntegral, HermitianType::Sp { n }) => {
            // δ = n long roots are nonintegral; the rest is a D_n diagram.
            if delta != n {
                return Err(Error::Internal(format!("sp half-integral δ = {delta}, not {n}")));
            }
            delta + m * (2 * n - 2 * m - 1)
        }
        (IntegralityClass::HalfIntegral, HermitianType::SoOdd { n }) => {
            if delta != 2 * n - 2 {
                return Err(Error::Internal(format!(
                    "so_odd half-integral δ = {delta}, not {}",
                    2 * n - 2
                )));
            }
            delta + m
        }
        (IntegralityClass::HalfIntegral, _) => {
            return Err(Error::Internal(format!(
                "half-integral class is unreachable for {htype}"
            )));
        }
        (IntegralityClass::Other, _) => {
            if !subsystem.noncompact_part.is_empty() {
                return Err(Error::Internal(
                    "nonintegral weight with nonempty integral noncompact part".into(),
                ));
            }
            delta
        }
    };
    let reference = orbit_dimension(htype, k)?;
    if computed != reference {
        return Err(Error::Internal(format!(
            "GK dimension mismatch for {htype}: subsystem route {computed}, orbit route {reference}"
        )));
    }
    Ok(computed)
}

/// Full pipeline: dominance check, classification, diagram, width, orbit
/// index, orbit data, GK dimension.
pub fn associated_variety(ctx: &HermitianContext, lambda_rho: &Weight) -> Result<AvResult> {
    check_k_dominant(lambda_rho, &ctx.rs)?;
    let class = classify_integrality(lambda_rho, &ctx.rs)?;
    let subsystem = integral_subsystem(lambda_rho, ctx)?;
    let diagram = compute_diagram(lambda_rho, ctx)?;
    let (m, _witness) = ctx.poset.width(&diagram.y);
    let k = k_of_lambda(ctx.htype(), class, m)?;
    let orbit_dim = orbit_dimension(ctx.htype(), k)?;
    let gk_dim = gk_dimension(ctx.htype(), class, m, k, &subsystem)?;
    Ok(AvResult {
        integrality: class,
        width_m: m,
        k,
        real_rank: ctx.htype().real_rank(),
        orbit_dim,
        orbit_label: orbit_label(ctx.htype(), k)?,
        gk_dim,
        delta: if class == IntegralityClass::Integral {
            0
        } else {
            subsystem.delta_count_gap
        },
        y_size: diagram.y.count(),
    })
}
