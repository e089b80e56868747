//! Diagrams of highest weights: integrality classification, the subset
//! `Y = {α ∈ Δ(𝔭⁺) : ⟨λ+ρ, α∨⟩ ∈ ℤ_{≤0}}`, the integral subsystem, and the
//! canonical minimal-length Weyl element moving λ+ρ into the closure of the
//! antidominant chamber.
//!
//! Everything takes the ρ-shifted weight λ+ρ; the CLI adds ρ for
//! `--highest-weight` input before calling in.

use num_traits::Zero;
use serde::Serialize;

use crate::poset::{Bitset, NoncompactPoset};
use crate::root_data::{build_root_data, coroot_pairing, solve_square, HermitianType, RootSystemData, Weight};
use crate::{Error, Rat, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralityClass {
    Integral,
    HalfIntegral,
    Other,
}

impl IntegralityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Integral => "integral",
            Self::HalfIntegral => "half_integral",
            Self::Other => "other",
        }
    }
}

impl std::fmt::Display for IntegralityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Root data plus the noncompact poset, built once per family and shared by
/// every downstream computation.
#[derive(Clone, Debug)]
pub struct HermitianContext {
    pub rs: RootSystemData,
    pub poset: NoncompactPoset,
}

impl HermitianContext {
    pub fn new(htype: HermitianType) -> Result<Self> {
        let rs = build_root_data(htype)?;
        let poset = NoncompactPoset::new(&rs);
        Ok(Self { rs, poset })
    }

    pub fn htype(&self) -> HermitianType {
        self.rs.htype
    }
}

#[derive(Clone, Debug)]
pub struct Diagram {
    /// Membership over the noncompact poset indices.
    pub y: Bitset,
    pub lambda_rho: Weight,
    pub integrality: IntegralityClass,
}

#[derive(Clone, Debug)]
pub struct IntegralSubsystem {
    /// Indices into `rs.positive_roots` of Δ_λ⁺ = Δ⁺ ∩ Δ_λ.
    pub delta_lambda_pos: Vec<usize>,
    /// Δ_λ(𝔭⁺) as a subset of the noncompact poset.
    pub noncompact_part: Bitset,
    /// δ = |Δ⁺| − |Δ_λ⁺| = |Δ(𝔭⁺)| − |Δ_λ(𝔭⁺)|.
    pub delta_count_gap: usize,
}

/// Mode and channel for user-supplied weights.
#[derive(Clone, Debug)]
pub enum WeightCoords {
    Epsilon(Vec<Rat>),
    /// One label per simple root: ⟨λ+ρ, α_i∨⟩ (or ⟨λ, α_i∨⟩ in
    /// highest-weight mode).
    CorootLabels(Vec<Rat>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    RhoShifted,
    HighestWeight,
}

#[derive(Clone, Debug)]
pub struct WeightInput {
    pub mode: WeightMode,
    pub coords: WeightCoords,
}

/// Resolve user input to λ+ρ in ε-coordinates. Coroot labels are expanded
/// over the simple roots by solving the Cartan system exactly; coordinates
/// orthogonal to the root span stay zero.
pub fn resolve_weight_input(input: &WeightInput, rs: &RootSystemData) -> Result<Weight> {
    match &input.coords {
        WeightCoords::Epsilon(coords) => {
            if coords.len() != rs.htype.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    expected: rs.htype.ambient_dim(),
                    got: coords.len(),
                });
            }
            let w = Weight::new(coords.clone());
            Ok(match input.mode {
                WeightMode::RhoShifted => w,
                WeightMode::HighestWeight => w.add(&rs.rho),
            })
        }
        WeightCoords::CorootLabels(labels) => {
            let k = rs.rank();
            if labels.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: labels.len(),
                });
            }
            let one = Rat::from_integer(1);
            let target: Vec<Rat> = match input.mode {
                WeightMode::RhoShifted => labels.clone(),
                // ⟨ρ, α_i∨⟩ = 1 for every simple root.
                WeightMode::HighestWeight => labels.iter().map(|l| l + one).collect(),
            };
            let a: Vec<Vec<Rat>> = (0..k)
                .map(|j| {
                    (0..k)
                        .map(|i| {
                            let alpha_i = Weight::new(rs.simple_roots[i].eps());
                            rs.pairing(&alpha_i, &rs.simple_roots[j])
                        })
                        .collect()
                })
                .collect();
            let c = solve_square(a, target)
                .ok_or_else(|| Error::Internal("Cartan matrix is singular".into()))?;
            let mut coords = vec![Rat::zero(); rs.htype.ambient_dim()];
            for (ci, alpha) in c.iter().zip(&rs.simple_roots) {
                for (x, &a2) in coords.iter_mut().zip(&alpha.eps2) {
                    *x += ci * Rat::new(a2, 2);
                }
            }
            Ok(Weight::new(coords))
        }
    }
}

/// λ+ρ must pair to a nonnegative integer with every positive compact coroot.
pub fn check_k_dominant(lambda_rho: &Weight, rs: &RootSystemData) -> Result<()> {
    for &i in &rs.compact_positive {
        let root = &rs.positive_roots[i];
        let v = coroot_pairing(lambda_rho, root)?;
        if !v.is_integer() || v < Rat::zero() {
            return Err(Error::NotKDominant {
                root: root.display(),
                value: v.to_string(),
            });
        }
    }
    Ok(())
}

/// 2x ∈ ℤ.
fn is_half_integer(x: Rat) -> bool {
    (x * Rat::from_integer(2)).is_integer()
}

/// Integral: every coroot pairing of λ+ρ is an integer. Half-integral: not
/// integral, but all pairings lie in ½ℤ and the family is non-simply laced
/// (sp or so_odd; elsewhere the integral subsystem cannot meet Δ(𝔭⁺)).
pub fn classify_integrality(lambda_rho: &Weight, rs: &RootSystemData) -> Result<IntegralityClass> {
    let mut all_integral = true;
    let mut all_half = true;
    for root in &rs.positive_roots {
        let v = coroot_pairing(lambda_rho, root)?;
        all_integral &= v.is_integer();
        all_half &= is_half_integer(v);
    }
    Ok(if all_integral {
        IntegralityClass::Integral
    } else if all_half && !rs.htype.is_simply_laced() {
        IntegralityClass::HalfIntegral
    } else {
        IntegralityClass::Other
    })
}

/// Y = the noncompact positive roots whose pairing with λ+ρ is an integer
/// ≤ 0. Half-integral pairings stay out even when negative.
pub fn compute_diagram(lambda_rho: &Weight, ctx: &HermitianContext) -> Result<Diagram> {
    let integrality = classify_integrality(lambda_rho, &ctx.rs)?;
    let mut y = Bitset::new(ctx.poset.len());
    for (i, root) in ctx.poset.roots.iter().enumerate() {
        let v = coroot_pairing(lambda_rho, root)?;
        if v.is_integer() && v <= Rat::zero() {
            y.insert(i);
        }
    }
    Ok(Diagram {
        y,
        lambda_rho: lambda_rho.clone(),
        integrality,
    })
}

/// Δ_λ⁺ = {α ∈ Δ⁺ : ⟨λ+ρ, α∨⟩ ∈ ℤ} plus its noncompact part and the count
/// gap δ.
pub fn integral_subsystem(lambda_rho: &Weight, ctx: &HermitianContext) -> Result<IntegralSubsystem> {
    let rs = &ctx.rs;
    let mut delta_lambda_pos = Vec::new();
    for (i, root) in rs.positive_roots.iter().enumerate() {
        if coroot_pairing(lambda_rho, root)?.is_integer() {
            delta_lambda_pos.push(i);
        }
    }
    let mut noncompact_part = Bitset::new(ctx.poset.len());
    for (i, root) in ctx.poset.roots.iter().enumerate() {
        if coroot_pairing(lambda_rho, root)?.is_integer() {
            noncompact_part.insert(i);
        }
    }
    let delta_count_gap = rs.positive_roots.len() - delta_lambda_pos.len();
    debug_assert_eq!(
        delta_count_gap,
        ctx.poset.len() - noncompact_part.count(),
        "the gap comes entirely from the noncompact part"
    );
    Ok(IntegralSubsystem {
        delta_lambda_pos,
        noncompact_part,
        delta_count_gap,
    })
}

/// The word of the minimal-length w with w⁻¹(λ+ρ) in the closure of the
/// antidominant chamber: greedy descent, always reflecting in the smallest
/// simple root pairing strictly positively. Walls (pairing zero) are never
/// crossed, which is exactly what makes w minimal. The word lists the
/// reflections in the order applied to λ+ρ, so w = s_{w[0]} ∘ … ∘ s_{w[k−1]}.
pub fn canonical_w(lambda_rho: &Weight, rs: &RootSystemData) -> Result<Vec<usize>> {
    let class = classify_integrality(lambda_rho, rs)?;
    if class != IntegralityClass::Integral {
        return Err(Error::NonIntegralWeight {
            class: class.as_str().to_owned(),
        });
    }
    let mut v = lambda_rho.clone();
    let mut word = Vec::new();
    loop {
        let step = (0..rs.rank())
            .find(|&i| rs.pairing(&v, &rs.simple_roots[i]) > Rat::zero());
        match step {
            Some(i) => {
                v = rs.simple_reflection(i, &v);
                word.push(i);
            }
            None => break,
        }
    }
    Ok(word)
}

/// Apply w = s_{word[0]} ∘ … ∘ s_{word[k−1]} to a weight.
pub fn apply_word(rs: &RootSystemData, word: &[usize], v: &Weight) -> Weight {
    word.iter()
        .rev()
        .fold(v.clone(), |x, &i| rs.simple_reflection(i, &x))
}

/// Apply w⁻¹ (the reflections in the order they were recorded).
pub fn apply_word_inv(rs: &RootSystemData, word: &[usize], v: &Weight) -> Weight {
    word.iter()
        .fold(v.clone(), |x, &i| rs.simple_reflection(i, &x))
}

/// Membership list of Y sorted by poset index, rendered as root strings.
pub fn diagram_root_names(diagram: &Diagram, ctx: &HermitianContext) -> Vec<String> {
    diagram
        .y
        .iter_ones()
        .map(|i| ctx.poset.roots[i].display())
        .collect()
}
