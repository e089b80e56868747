//! Exact root-system data for the seven Hermitian families.
//!
//! Conventions (fixed once, so every result in the crate is bit-reproducible):
//!
//! * `su(p,q)`: type A with `Δ⁺ = {ε_i − ε_j : i < j ≤ p+q}` and
//!   `Δ(𝔭⁺) = {ε_i − ε_j : i ≤ p < j}`.
//! * `sp(2n,ℝ)`: type C with `Δ(𝔭⁺) = {ε_i + ε_j : i < j} ∪ {2ε_l}`.
//! * `so*(2n)`: type D with `Δ(𝔭⁺) = {ε_i + ε_j : i < j}`.
//! * `so(2,2n−1)`: type B with `Δ(𝔭⁺) = {ε_1 ± ε_j : 2 ≤ j ≤ n} ∪ {ε_1}`.
//! * `so(2,2n−2)`: type D with `Δ(𝔭⁺) = {ε_1 ± ε_j : 2 ≤ j ≤ n}`.
//! * `e6(−14)`, `e7(−25)`: realized in ℝ⁸ with simple roots
//!   `α_1 = ½(ε_1−ε_2−…−ε_7+ε_8)`, `α_2 = ε_1+ε_2`, `α_k = ε_{k−1}−ε_{k−2}`.
//!
//! Root coordinates are stored doubled (`eps2`), so entries stay integers
//! even for E-type roots. Every positive root also carries its coordinates
//! over the simple roots; those drive the partial order on `Δ(𝔭⁺)` and the
//! height function.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::{Error, Rat, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HermitianType {
    Su { p: usize, q: usize },
    Sp { n: usize },
    SoStar { n: usize },
    SoOdd { n: usize },
    SoEven { n: usize },
    E6,
    E7,
}

impl HermitianType {
    pub fn validate(self) -> Result<()> {
        let fail = |detail: String| {
            Err(Error::ParameterOutOfBounds {
                family: self.family_name().to_owned(),
                detail,
            })
        };
        match self {
            Self::Su { p, q } if p < 1 || q < 1 => {
                fail(format!("su(p,q) needs p,q >= 1, got p={p}, q={q}"))
            }
            Self::Sp { n } if n < 2 => fail(format!("sp(2n,R) needs n >= 2, got n={n}")),
            Self::SoStar { n } if n < 4 => fail(format!("so*(2n) needs n >= 4, got n={n}")),
            Self::SoOdd { n } if n < 3 => fail(format!("so(2,2n-1) needs n >= 3, got n={n}")),
            Self::SoEven { n } if n < 4 => fail(format!("so(2,2n-2) needs n >= 4, got n={n}")),
            _ => Ok(()),
        }
    }

    pub fn family_name(self) -> &'static str {
        match self {
            Self::Su { .. } => "su",
            Self::Sp { .. } => "sp",
            Self::SoStar { .. } => "so_star",
            Self::SoOdd { .. } => "so_odd",
            Self::SoEven { .. } => "so_even",
            Self::E6 => "e6",
            Self::E7 => "e7",
        }
    }

    pub fn label(self) -> String {
        match self {
            Self::Su { p, q } => format!("su({p},{q})"),
            Self::Sp { n } => format!("sp({n})"),
            Self::SoStar { n } => format!("so_star({n})"),
            Self::SoOdd { n } => format!("so_odd({n})"),
            Self::SoEven { n } => format!("so_even({n})"),
            Self::E6 => "e6".to_owned(),
            Self::E7 => "e7".to_owned(),
        }
    }

    /// Real rank r: the length of the K-orbit chain in 𝔭⁺ is r+1.
    pub fn real_rank(self) -> usize {
        match self {
            Self::Su { p, q } => p.min(q),
            Self::Sp { n } => n,
            Self::SoStar { n } => n / 2,
            Self::SoOdd { .. } | Self::SoEven { .. } | Self::E6 => 2,
            Self::E7 => 3,
        }
    }

    pub fn ambient_dim(self) -> usize {
        match self {
            Self::Su { p, q } => p + q,
            Self::Sp { n } | Self::SoStar { n } | Self::SoOdd { n } | Self::SoEven { n } => n,
            Self::E6 | Self::E7 => 8,
        }
    }

    /// Height constant c of the distinguished antichains `A_k` (simply-laced
    /// families only): `A_k` sits at height (k−1)c + 1.
    pub fn appendix_c(self) -> Option<usize> {
        match self {
            Self::Su { .. } => Some(1),
            Self::SoStar { .. } => Some(2),
            Self::SoEven { n } => Some(n - 2),
            Self::E6 => Some(3),
            Self::E7 => Some(4),
            Self::Sp { .. } | Self::SoOdd { .. } => None,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        !matches!(self, Self::Sp { .. } | Self::SoOdd { .. })
    }

    /// |Δ(𝔭⁺)| in closed form; the constructed data is checked against this.
    pub fn noncompact_count(self) -> usize {
        match self {
            Self::Su { p, q } => p * q,
            Self::Sp { n } => n * (n + 1) / 2,
            Self::SoStar { n } => n * (n - 1) / 2,
            Self::SoOdd { n } => 2 * n - 1,
            Self::SoEven { n } => 2 * n - 2,
            Self::E6 => 16,
            Self::E7 => 27,
        }
    }
}

impl fmt::Display for HermitianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A root, with ε-coordinates doubled (`eps2`) and coordinates over the
/// simple roots (`simple`, nonnegative for positive roots).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    pub eps2: Vec<i64>,
    pub simple: Vec<i64>,
}

impl Root {
    pub fn eps(&self) -> Vec<Rat> {
        self.eps2.iter().map(|&c| Rat::new(c, 2)).collect()
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self) -> usize {
        self.simple.iter().sum::<i64>() as usize
    }

    /// 4(α,α); values 4, 8, 16 for squared lengths 1, 2, 4.
    pub fn norm2_x4(&self) -> i64 {
        self.eps2.iter().map(|&c| c * c).sum()
    }

    /// Symbolic form like `ε1-ε5`, `2ε3`, `ε2`; falls back to the exact
    /// coordinate tuple for roots with more than two nonzero entries.
    pub fn display(&self) -> String {
        let nz: Vec<(usize, i64)> = self
            .eps2
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let symbolic = !nz.is_empty()
            && nz.len() <= 2
            && nz.iter().all(|&(_, c)| c % 2 == 0 && (c / 2).abs() <= 2);
        if symbolic {
            let mut out = String::new();
            for (pos, &(i, c2)) in nz.iter().enumerate() {
                let c = c2 / 2;
                if pos == 0 {
                    if c < 0 {
                        out.push('-');
                    }
                } else {
                    out.push(if c < 0 { '-' } else { '+' });
                }
                if c.abs() == 2 {
                    out.push('2');
                }
                out.push_str(&format!("ε{}", i + 1));
            }
            out
        } else {
            let coords: Vec<String> = self.eps().iter().map(|r| r.to_string()).collect();
            format!("({})", coords.join(","))
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// A weight in ε-coordinates, exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self {
            coords: coords.iter().map(|&c| Rat::from_integer(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", coords.join(","))
    }
}

/// ⟨v, α∨⟩ = 2(v,α)/(α,α), exact.
pub fn coroot_pairing(v: &Weight, alpha: &Root) -> Result<Rat> {
    if v.dim() != alpha.eps2.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.eps2.len(),
            got: v.dim(),
        });
    }
    let mut dot = Rat::zero();
    for (c, &a2) in v.coords.iter().zip(&alpha.eps2) {
        dot += c * Rat::from_integer(a2);
    }
    // (v,α) = dot/2 and (α,α) = norm2_x4/4, so the pairing is 4·dot/norm2_x4.
    Ok(dot * Rat::new(4, alpha.norm2_x4()))
}

/// ⟨β, α∨⟩ for two roots given by doubled coordinates.
fn root_pairing2(beta2: &[i64], alpha2: &[i64]) -> Rat {
    let dot: i64 = beta2.iter().zip(alpha2).map(|(&b, &a)| b * a).sum();
    let norm: i64 = alpha2.iter().map(|&a| a * a).sum();
    Rat::new(2 * dot, norm)
}

/// Root data for one Hermitian family. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub htype: HermitianType,
    /// All of Δ⁺, sorted by (height, lexicographic ε-coordinates).
    pub positive_roots: Vec<Root>,
    pub simple_roots: Vec<Root>,
    /// Index into `simple_roots` of the unique noncompact simple root.
    pub noncompact_simple_index: usize,
    /// Indices into `positive_roots`.
    pub compact_positive: Vec<usize>,
    /// Indices into `positive_roots` (Δ(𝔭⁺)), in `positive_roots` order.
    pub noncompact_positive: Vec<usize>,
    pub rho: Weight,
    root_set: HashSet<Vec<i64>>,
}

impl RootSystemData {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn pairing(&self, v: &Weight, root: &Root) -> Rat {
        coroot_pairing(v, root).expect("dimension checked at construction")
    }

    /// Is the given doubled-coordinate vector a root (positive or negative)?
    pub fn is_root_eps2(&self, eps2: &[i64]) -> bool {
        self.root_set.contains(eps2)
    }

    pub fn noncompact_roots(&self) -> impl Iterator<Item = &Root> {
        self.noncompact_positive
            .iter()
            .map(|&i| &self.positive_roots[i])
    }

    /// s_i(v) = v − ⟨v, α_i∨⟩ α_i for the i-th simple root.
    pub fn simple_reflection(&self, i: usize, v: &Weight) -> Weight {
        let alpha = &self.simple_roots[i];
        let c = self.pairing(v, alpha);
        let coords = v
            .coords
            .iter()
            .zip(&alpha.eps2)
            .map(|(x, &a2)| x - c * Rat::new(a2, 2))
            .collect();
        Weight::new(coords)
    }
}

fn unit2(dim: usize, i: usize, val: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[i] = val;
    v
}

fn pair2(dim: usize, i: usize, vi: i64, j: usize, vj: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[i] = vi;
    v[j] = vj;
    v
}

/// Simple roots (doubled coordinates) and the noncompact simple index.
fn simple_system(t: HermitianType) -> (Vec<Vec<i64>>, usize) {
    let d = t.ambient_dim();
    match t {
        HermitianType::Su { p, q } => {
            let n = p + q;
            let simples = (0..n - 1).map(|k| pair2(d, k, 2, k + 1, -2)).collect();
            (simples, p - 1)
        }
        HermitianType::Sp { n } => {
            let mut simples: Vec<Vec<i64>> =
                (0..n - 1).map(|k| pair2(d, k, 2, k + 1, -2)).collect();
            simples.push(unit2(d, n - 1, 4));
            (simples, n - 1)
        }
        HermitianType::SoStar { n } | HermitianType::SoEven { n } => {
            let mut simples: Vec<Vec<i64>> =
                (0..n - 1).map(|k| pair2(d, k, 2, k + 1, -2)).collect();
            simples.push(pair2(d, n - 2, 2, n - 1, 2));
            let nc = if matches!(t, HermitianType::SoStar { .. }) {
                n - 1
            } else {
                0
            };
            (simples, nc)
        }
        HermitianType::SoOdd { n } => {
            let mut simples: Vec<Vec<i64>> =
                (0..n - 1).map(|k| pair2(d, k, 2, k + 1, -2)).collect();
            simples.push(unit2(d, n - 1, 2));
            (simples, 0)
        }
        HermitianType::E6 | HermitianType::E7 => {
            let rank = if t == HermitianType::E6 { 6 } else { 7 };
            let mut simples = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
            simples.push(vec![2, 2, 0, 0, 0, 0, 0, 0]);
            for k in 3..=rank {
                // α_k = ε_{k−1} − ε_{k−2}
                simples.push(pair2(8, k - 2, 2, k - 3, -2));
            }
            let nc = if t == HermitianType::E6 { 0 } else { 6 };
            (simples, nc)
        }
    }
}

/// Positive roots as doubled coordinate vectors (unsorted).
fn positive_system(t: HermitianType, simples: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = t.ambient_dim();
    let mut roots = Vec::new();
    match t {
        HermitianType::Su { p, q } => {
            let n = p + q;
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(pair2(d, i, 2, j, -2));
                }
            }
        }
        HermitianType::Sp { n } => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(pair2(d, i, 2, j, -2));
                    roots.push(pair2(d, i, 2, j, 2));
                }
                roots.push(unit2(d, i, 4));
            }
        }
        HermitianType::SoStar { n } | HermitianType::SoEven { n } => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(pair2(d, i, 2, j, -2));
                    roots.push(pair2(d, i, 2, j, 2));
                }
            }
        }
        HermitianType::SoOdd { n } => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(pair2(d, i, 2, j, -2));
                    roots.push(pair2(d, i, 2, j, 2));
                }
                roots.push(unit2(d, i, 2));
            }
        }
        HermitianType::E6 | HermitianType::E7 => {
            // Closure under addition of simple roots. In a simply laced
            // system β + α is a root exactly when ⟨β, α∨⟩ = −1, and every
            // positive root is reachable one simple step at a time.
            let mut seen: HashSet<Vec<i64>> = simples.iter().cloned().collect();
            let mut list: Vec<Vec<i64>> = simples.to_vec();
            let mut idx = 0;
            while idx < list.len() {
                let beta = list[idx].clone();
                idx += 1;
                for alpha in simples {
                    if beta == *alpha {
                        continue;
                    }
                    let dot: i64 = beta.iter().zip(alpha).map(|(&b, &a)| b * a).sum();
                    if dot == -4 {
                        let sum: Vec<i64> =
                            beta.iter().zip(alpha).map(|(&b, &a)| b + a).collect();
                        if seen.insert(sum.clone()) {
                            list.push(sum);
                        }
                    }
                }
            }
            roots = list;
        }
    }
    roots
}

/// Solve a square rational linear system by Gaussian elimination.
pub(crate) fn solve_square(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col];
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col] / inv;
                for (x, v) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= f * v;
                }
                let bc = b[col];
                b[r] -= f * bc;
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// Coordinates of `beta2` over the simple roots, via the Cartan matrix:
/// ⟨β, α_j∨⟩ = Σ_i c_i ⟨α_i, α_j∨⟩.
fn simple_coords(beta2: &[i64], simples: &[Vec<i64>]) -> Option<Vec<i64>> {
    let k = simples.len();
    let a: Vec<Vec<Rat>> = (0..k)
        .map(|j| (0..k).map(|i| root_pairing2(&simples[i], &simples[j])).collect())
        .collect();
    let b: Vec<Rat> = (0..k).map(|j| root_pairing2(beta2, &simples[j])).collect();
    let sol = solve_square(a, b)?;
    let mut out = Vec::with_capacity(k);
    for c in sol {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(out)
}

/// Construct the full root datum for one family.
pub fn build_root_data(t: HermitianType) -> Result<RootSystemData> {
    t.validate()?;
    let (simple2, nc_index) = simple_system(t);
    let pos2 = positive_system(t, &simple2);

    let simple_roots: Vec<Root> = simple2
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut s = vec![0i64; simple2.len()];
            s[i] = 1;
            Root {
                eps2: e.clone(),
                simple: s,
            }
        })
        .collect();

    let mut positive_roots = Vec::with_capacity(pos2.len());
    for e in &pos2 {
        let simple = simple_coords(e, &simple2).ok_or_else(|| {
            Error::Internal(format!("root {e:?} is not an integer combination of simple roots"))
        })?;
        if simple.iter().any(|&c| c < 0) {
            return Err(Error::Internal(format!(
                "root {e:?} has a negative simple coordinate"
            )));
        }
        positive_roots.push(Root {
            eps2: e.clone(),
            simple,
        });
    }
    positive_roots.sort_by(|a, b| (a.height(), &a.eps2).cmp(&(b.height(), &b.eps2)));

    let mut compact_positive = Vec::new();
    let mut noncompact_positive = Vec::new();
    for (i, r) in positive_roots.iter().enumerate() {
        match r.simple[nc_index] {
            0 => compact_positive.push(i),
            1 => noncompact_positive.push(i),
            c => {
                return Err(Error::Internal(format!(
                    "noncompact simple coefficient {c} in {:?}; the nilradical is abelian",
                    r.eps2
                )))
            }
        }
    }
    if noncompact_positive.len() != t.noncompact_count() {
        return Err(Error::Internal(format!(
            "{t}: expected {} noncompact positive roots, built {}",
            t.noncompact_count(),
            noncompact_positive.len()
        )));
    }

    let d = t.ambient_dim();
    let mut rho_coords = vec![Rat::zero(); d];
    for r in &positive_roots {
        for (c, &a2) in rho_coords.iter_mut().zip(&r.eps2) {
            *c += Rat::new(a2, 4);
        }
    }
    let rho = Weight::new(rho_coords);

    let mut root_set = HashSet::with_capacity(2 * positive_roots.len());
    for r in &positive_roots {
        root_set.insert(r.eps2.clone());
        root_set.insert(r.eps2.iter().map(|&c| -c).collect());
    }

    Ok(RootSystemData {
        htype: t,
        positive_roots,
        simple_roots,
        noncompact_simple_index: nc_index,
        compact_positive,
        noncompact_positive,
        rho,
        root_set,
    })
}
