//! Independent recomputation of the orbit index via Robinson-Schensted
//! insertion and antichain tests. This module never looks at the poset
//! width, so agreement with [`crate::avcore::k_of_lambda`] is a genuine
//! cross-check of the whole pipeline.
//!
//! Row insertion uses weakly increasing rows (bump the leftmost entry
//! strictly greater than the inserted value), so the first part of the
//! shape is the longest weakly increasing subsequence.

use num_traits::Zero;

use crate::diagram::{classify_integrality, HermitianContext, IntegralityClass};
use crate::root_data::{coroot_pairing, HermitianType, Root, Weight};
use crate::{Error, Rat, Result};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// i-th part, 1-based; zero beyond the last.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn dual(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }
}

/// Counts of even and odd boxes per row: box (i,l) is even when i+l is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvOddCounts {
    pub ev: Vec<usize>,
    pub odd: Vec<usize>,
}

pub fn ev_odd(p: &Partition) -> EvOddCounts {
    let mut ev = Vec::with_capacity(p.parts.len());
    let mut odd = Vec::with_capacity(p.parts.len());
    for (row0, &len) in p.parts.iter().enumerate() {
        let i = row0 + 1;
        let e = if i % 2 == 1 { len.div_ceil(2) } else { len / 2 };
        ev.push(e);
        odd.push(len - e);
    }
    EvOddCounts { ev, odd }
}

/// Shape of the insertion tableau of `x` under row insertion.
pub fn rs_shape(x: &[Rat]) -> Partition {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for &value in x {
        let mut carry = value;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![carry]);
                break;
            }
            match rows[r].iter().position(|&e| e > carry) {
                None => {
                    rows[r].push(carry);
                    break;
                }
                Some(idx) => {
                    std::mem::swap(&mut rows[r][idx], &mut carry);
                    r += 1;
                }
            }
        }
    }
    Partition::new(rows.iter().map(Vec::len).collect())
}

/// x⁻ = (x_1, …, x_n, −x_n, …, −x_1).
pub fn lambda_minus(t: &[Rat]) -> Vec<Rat> {
    let mut out = t.to_vec();
    out.extend(t.iter().rev().map(|v| -v));
    out
}

/// Largest k with t_{n−k+i} ≤ s_i for i = 1..k. Both halves must be
/// strictly decreasing with integer gaps (the dominance hypothesis under
/// which this equals the second column of the insertion tableau of t·s).
pub fn minimax_k(t: &[Rat], s: &[Rat]) -> Result<usize> {
    check_dominant_half(t, 0)?;
    check_dominant_half(s, t.len())?;
    let n = t.len();
    let top = n.min(s.len());
    for k in (1..=top).rev() {
        if (1..=k).all(|i| t[n - k + i - 1] <= s[i - 1]) {
            return Ok(k);
        }
    }
    Ok(0)
}

fn check_dominant_half(v: &[Rat], offset: usize) -> Result<()> {
    for (pos, w) in v.windows(2).enumerate() {
        let gap = w[0] - w[1];
        if gap <= Rat::zero() || !gap.is_integer() {
            return Err(Error::NonMonotoneInput {
                position: offset + pos + 1,
            });
        }
    }
    Ok(())
}

/// q_2 of the dual shape of the doubled sequence, the quantity driving all
/// the classical dispatches below.
fn q2_of_doubled(t: &[Rat]) -> usize {
    rs_shape(&lambda_minus(t)).dual().part(2)
}

fn is_half_integer(x: Rat) -> bool {
    (x * Rat::from_integer(2)).is_integer()
}

/// Literal test sets for the exceptional families: `sets[j]` is A_{j+1},
/// given in doubled ε-coordinates.
fn exceptional_sets(htype: HermitianType) -> Vec<Vec<Vec<i64>>> {
    match htype {
        HermitianType::E6 => vec![
            vec![vec![1, -1, -1, -1, -1, -1, -1, 1]],
            vec![
                vec![-1, -1, -1, 1, -1, -1, -1, 1],
                vec![1, 1, 1, -1, -1, -1, -1, 1],
            ],
        ],
        HermitianType::E7 => vec![
            vec![vec![0, 0, 0, 0, -2, 2, 0, 0]],
            vec![vec![-2, 0, 0, 0, 0, 2, 0, 0], vec![2, 0, 0, 0, 0, 2, 0, 0]],
            vec![
                vec![-1, 1, 1, -1, -1, 1, -1, 1],
                vec![1, -1, -1, 1, -1, 1, -1, 1],
                vec![0, 0, 0, 0, 2, 2, 0, 0],
            ],
        ],
        _ => unreachable!("exceptional sets are defined for e6/e7 only"),
    }
}

/// Recompute the orbit index from the highest weight alone.
pub fn k_prime(ctx: &HermitianContext, lambda_rho: &Weight) -> Result<usize> {
    let htype = ctx.htype();
    let class = classify_integrality(lambda_rho, &ctx.rs)?;
    let t = &lambda_rho.coords;
    let r = htype.real_rank();
    match htype {
        HermitianType::Su { .. } => {
            if class == IntegralityClass::Integral {
                Ok(rs_shape(t).dual().part(2))
            } else {
                Ok(r)
            }
        }
        HermitianType::Sp { n } => match class {
            IntegralityClass::Integral => {
                let q2 = q2_of_doubled(t);
                // 2·(odd boxes in row 2) = 2⌈q2/2⌉; the boundary width
                // m = (n+1)/2 lands on the top orbit, hence the cap.
                Ok((2 * q2.div_ceil(2)).min(n))
            }
            IntegralityClass::HalfIntegral => {
                let q2 = q2_of_doubled(t);
                Ok((2 * (q2 / 2) + 1).min(n))
            }
            IntegralityClass::Other => Ok(n),
        },
        HermitianType::SoStar { n } => {
            if class == IntegralityClass::Integral {
                Ok(q2_of_doubled(t).div_euclid(2))
            } else {
                Ok(n / 2)
            }
        }
        HermitianType::SoOdd { .. } => {
            let gap = t[0] - t[1];
            if gap.is_integer() && t[0] > t[1] {
                Ok(0)
            } else if is_half_integer(gap) && !gap.is_integer() && t[0] > Rat::zero() {
                Ok(1)
            } else {
                Ok(2)
            }
        }
        HermitianType::SoEven { .. } => {
            let gap = t[0] - t[1];
            let tn_abs = {
                let last = *t.last().unwrap();
                if last < Rat::zero() {
                    -last
                } else {
                    last
                }
            };
            if gap.is_integer() && t[0] > t[1] {
                Ok(0)
            } else if gap.is_integer() && -tn_abs < t[0] && t[0] <= t[1] {
                Ok(1)
            } else {
                Ok(2)
            }
        }
        HermitianType::E6 | HermitianType::E7 => {
            if class != IntegralityClass::Integral {
                return Ok(r);
            }
            let sets = exceptional_sets(htype);
            let positive_on = |set: &[Vec<i64>]| -> Result<bool> {
                for eps2 in set {
                    if !ctx.rs.is_root_eps2(eps2) {
                        return Err(Error::Internal(format!(
                            "test vector {eps2:?} is not a root of {htype}"
                        )));
                    }
                    let root = Root {
                        eps2: eps2.clone(),
                        simple: vec![],
                    };
                    if coroot_pairing(lambda_rho, &root)? > Rat::zero() {
                        return Ok(true);
                    }
                }
                Ok(false)
            };
            for (j, set) in sets.iter().enumerate() {
                if positive_on(set)? {
                    return Ok(j);
                }
            }
            Ok(sets.len())
        }
    }
}
