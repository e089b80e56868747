//! Exhaustive verification harness: bucket every lower order ideal of
//! Δ(𝔭⁺) by width and compare with the closed forms; check the width
//! counts against the Springer dimensions; verify the bijection between
//! downsets and the Weyl elements w with −wρ compact-dominant by explicit
//! enumeration of (signed) permutations.
//!
//! Feasibility guards are hard refusals, never truncations: a partial
//! census that "passes" would be worse than no census.

use std::collections::HashSet;

use itertools::Itertools;
use num_integer::binomial;
use num_traits::Zero;
use serde::Serialize;

use crate::avcore::springer_table;
use crate::diagram::{compute_diagram, HermitianContext};
use crate::poset::Bitset;
use crate::root_data::{HermitianType, Weight};
use crate::{Error, Rat, Result};

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    #[serde(rename = "type")]
    pub type_label: String,
    /// Downset counts indexed by width 0..=r.
    pub counts: Vec<u64>,
    /// Closed-form expectations, same indexing.
    pub expected: Vec<u64>,
    pub total: u64,
    pub pass: bool,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpringerReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub counts: Vec<u64>,
    /// Width counts predicted from the Springer dimensions alone.
    pub predicted: Vec<u64>,
    pub springer_dims: Vec<u64>,
    pub pass: bool,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub weyl_count: u64,
    pub downset_count: u64,
    /// Every diagram matched Δ(𝔫 ∩ w𝔫) and the map hit every downset once.
    pub bijective: bool,
    pub pass: bool,
}

fn census_guard(t: HermitianType) -> Result<()> {
    let refuse = |bound: &str| {
        Err(Error::InfeasibleCensus {
            family: t.label(),
            bound: bound.to_owned(),
        })
    };
    match t {
        HermitianType::Su { p, q } if p + q > 16 => refuse("su census requires p+q <= 16"),
        HermitianType::Sp { n } if n > 20 => refuse("sp census requires n <= 20"),
        HermitianType::SoStar { n } if n > 21 => refuse("so* census requires n <= 21"),
        HermitianType::SoOdd { n } if n > 64 => refuse("so_odd census requires n <= 64"),
        HermitianType::SoEven { n } if n > 64 => refuse("so_even census requires n <= 64"),
        _ => Ok(()),
    }
}

/// Closed-form width counts, indexed 0..=r.
pub fn expected_width_counts(t: HermitianType) -> Vec<u64> {
    let r = t.real_rank();
    (0..=r)
        .map(|m| {
            let m64 = m as u64;
            match t {
                HermitianType::Su { p, q } => {
                    let n = (p + q) as u64;
                    binomial(n, m64) - if m == 0 { 0 } else { binomial(n, m64 - 1) }
                }
                HermitianType::Sp { n } => {
                    let n1 = (n + 1) as u64;
                    if 2 * m < n + 1 {
                        binomial(n1, m64)
                    } else if 2 * m == n + 1 {
                        binomial(n1, m64) / 2
                    } else {
                        0
                    }
                }
                HermitianType::SoStar { n } => {
                    if 2 * m < n {
                        binomial(n as u64, m64)
                    } else {
                        binomial(n as u64, m64) / 2
                    }
                }
                HermitianType::SoOdd { n } => [1, 2 * n as u64 - 1, 0][m],
                HermitianType::SoEven { n } => [1, n as u64, n as u64 - 1][m],
                HermitianType::E6 => [1, 6, 20][m],
                HermitianType::E7 => [1, 7, 27, 21][m],
            }
        })
        .collect()
}

/// |𝒲| = |W/W(𝔨)| in closed form.
pub fn expected_total(t: HermitianType) -> u64 {
    match t {
        HermitianType::Su { p, q } => binomial((p + q) as u64, p as u64),
        HermitianType::Sp { n } => 1 << n,
        HermitianType::SoStar { n } => 1 << (n - 1),
        HermitianType::SoOdd { n } | HermitianType::SoEven { n } => 2 * n as u64,
        HermitianType::E6 => 27,
        HermitianType::E7 => 56,
    }
}

/// Enumerate all downsets, bucket by width, compare with the closed forms.
pub fn width_census(t: HermitianType) -> Result<CensusReport> {
    t.validate()?;
    census_guard(t)?;
    let ctx = HermitianContext::new(t)?;
    let r = t.real_rank();
    let mut counts = vec![0u64; r + 1];
    let mut total = 0u64;
    for d in ctx.poset.enumerate_downsets() {
        let m = ctx.poset.max_antichain_size(&d);
        if m > r {
            return Err(Error::Internal(format!(
                "{t}: downset of width {m} exceeds real rank {r}"
            )));
        }
        counts[m] += 1;
        total += 1;
    }
    let expected = expected_width_counts(t);
    let mut mismatches = Vec::new();
    for m in 0..=r {
        if counts[m] != expected[m] {
            mismatches.push(format!(
                "width {m}: counted {}, expected {}",
                counts[m], expected[m]
            ));
        }
    }
    if total != expected_total(t) {
        mismatches.push(format!(
            "total: counted {total}, expected {}",
            expected_total(t)
        ));
    }
    Ok(CensusReport {
        type_label: t.label(),
        counts,
        expected,
        total,
        pass: mismatches.is_empty(),
        mismatches,
    })
}

/// Width counts predicted by the Springer dimensions: for simply-laced
/// families the count at width k is dim π(𝒪_kᶜ,1); for sp it is the sum of
/// the dimensions at 2k and 2k−1 (with the odd-rank top width collapsing to
/// the k = n row); for so_odd the width-1 count is the non-special/special
/// pair at k = 1, 2.
pub fn springer_predicted_counts(t: HermitianType) -> Result<Vec<u64>> {
    let rows = springer_table(t)?;
    let dim = |k: usize| rows[k].springer_dim;
    let r = t.real_rank();
    Ok(match t {
        HermitianType::Sp { n } => (0..=r)
            .map(|k| {
                if 2 * k < n + 1 {
                    dim(2 * k) + if k == 0 { 0 } else { dim(2 * k - 1) }
                } else if 2 * k == n + 1 {
                    dim(n)
                } else {
                    0
                }
            })
            .collect(),
        HermitianType::SoOdd { .. } => vec![dim(0), dim(1) + dim(2), 0],
        _ => (0..=r).map(dim).collect(),
    })
}

pub fn verify_springer_identities(t: HermitianType) -> Result<SpringerReport> {
    let census = width_census(t)?;
    let predicted = springer_predicted_counts(t)?;
    let springer_dims = springer_table(t)?.iter().map(|r| r.springer_dim).collect();
    let mut mismatches = Vec::new();
    for (m, (&got, &want)) in census.counts.iter().zip(&predicted).enumerate() {
        if got != want {
            mismatches.push(format!("width {m}: counted {got}, springer predicts {want}"));
        }
    }
    Ok(SpringerReport {
        type_label: t.label(),
        counts: census.counts,
        predicted,
        springer_dims,
        pass: mismatches.is_empty(),
        mismatches,
    })
}

/// A signed permutation w: ε_j ↦ signs[j]·ε_{perm[j]}.
struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i64>,
}

impl SignedPerm {
    fn apply_weight(&self, v: &Weight) -> Weight {
        let mut out = vec![Rat::zero(); v.dim()];
        for (j, &c) in v.coords.iter().enumerate() {
            out[self.perm[j]] = c * Rat::from_integer(self.signs[j]);
        }
        Weight::new(out)
    }

    fn apply_inverse_eps2(&self, a: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len()];
        for j in 0..a.len() {
            out[j] = self.signs[j] * a[self.perm[j]];
        }
        out
    }
}

fn weyl_elements(t: HermitianType) -> Result<Vec<SignedPerm>> {
    let refuse = |bound: &str| {
        Err(Error::InfeasibleCensus {
            family: t.label(),
            bound: bound.to_owned(),
        })
    };
    let (n, sign_kind) = match t {
        HermitianType::Su { p, q } => {
            if p + q > 8 {
                return refuse("bijection check requires p+q <= 8");
            }
            (p + q, SignKind::None)
        }
        HermitianType::Sp { n } | HermitianType::SoOdd { n } => {
            if n > 6 {
                return refuse("bijection check requires n <= 6");
            }
            (n, SignKind::All)
        }
        HermitianType::SoStar { n } | HermitianType::SoEven { n } => {
            if n > 7 {
                return refuse("bijection check requires n <= 7");
            }
            (n, SignKind::Even)
        }
        HermitianType::E6 | HermitianType::E7 => {
            return refuse("bijection check enumerates classical Weyl groups only");
        }
    };
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        match sign_kind {
            SignKind::None => out.push(SignedPerm {
                perm: perm.clone(),
                signs: vec![1; n],
            }),
            SignKind::All | SignKind::Even => {
                for mask in 0u32..1 << n {
                    if sign_kind == SignKind::Even && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let signs: Vec<i64> =
                        (0..n).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
                    out.push(SignedPerm {
                        perm: perm.clone(),
                        signs,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SignKind {
    None,
    All,
    Even,
}

/// Enumerate 𝒲 = {w : −wρ is compact-dominant} inside the full (signed)
/// permutation group, map each w to the diagram of −wρ − ρ, and verify the
/// map is a bijection onto the downsets, with Y_{−wρ−ρ} = Δ(𝔫 ∩ w𝔫).
pub fn verify_bijection_classical(t: HermitianType) -> Result<BijectionReport> {
    t.validate()?;
    let ctx = HermitianContext::new(t)?;
    let rs = &ctx.rs;
    let mut images: HashSet<Bitset> = HashSet::new();
    let mut weyl_count = 0u64;
    let mut all_match = true;
    for w in weyl_elements(t)? {
        let lr = w.apply_weight(&rs.rho).neg(); // λ+ρ = −wρ
        let dominant = rs.compact_positive.iter().all(|&i| {
            rs.pairing(&lr, &rs.positive_roots[i]) >= Rat::zero()
        });
        if !dominant {
            continue;
        }
        weyl_count += 1;
        let diagram = compute_diagram(&lr, &ctx)?;
        let mut nilradical = Bitset::new(ctx.poset.len());
        for (i, root) in ctx.poset.roots.iter().enumerate() {
            // α ∈ Δ(𝔫 ∩ w𝔫) iff α is noncompact positive and w⁻¹α > 0.
            let pre = w.apply_inverse_eps2(&root.eps2);
            let positive = rs.positive_roots.iter().any(|r| r.eps2 == pre);
            if positive {
                nilradical.insert(i);
            }
        }
        all_match &= diagram.y == nilradical;
        images.insert(diagram.y);
    }
    let downsets = ctx.poset.enumerate_downsets();
    let bijective = all_match
        && images.len() as u64 == weyl_count
        && images.len() == downsets.len()
        && downsets.iter().all(|d| images.contains(d));
    Ok(BijectionReport {
        type_label: t.label(),
        weyl_count,
        downset_count: downsets.len() as u64,
        bijective,
        pass: bijective && weyl_count == expected_total(t),
    })
}
