//! The partial order on Δ(𝔭⁺): Hasse diagrams, antichain width, downset
//! enumeration.
//!
//! `α ≤ β` iff β − α has nonnegative coordinates over the simple roots.
//! Width of a subset is computed by Dilworth's theorem: a minimum chain
//! cover of the strict order realized as a maximum bipartite matching, so
//! `width = |S| − |matching|`. A witness antichain is recovered greedily,
//! lexicographically smallest by root index, which keeps all output golden.

use std::collections::{HashSet, VecDeque};

use num_traits::Zero;

use crate::root_data::{HermitianType, Root, RootSystemData};
use crate::{Error, Rat, Result};

/// Fixed-length bitset over poset indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut s = Self::new(len);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }
}

#[derive(Clone, Debug)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
    /// Index of the simple root by which the covering step climbs (0-based).
    pub simple_index: usize,
}

/// A lower order ideal together with the witness antichain found for it.
#[derive(Clone, Debug)]
pub struct Downset {
    pub members: Bitset,
    pub max_antichain_witness: Vec<usize>,
}

/// The poset of positive noncompact roots of one Hermitian family.
#[derive(Clone, Debug)]
pub struct NoncompactPoset {
    pub htype: HermitianType,
    /// Elements, in (height, lexicographic ε) order.
    pub roots: Vec<Root>,
    leq: Vec<bool>,
    strict_lower: Vec<Bitset>,
    pub hasse: Vec<HasseEdge>,
}

impl NoncompactPoset {
    pub fn new(rs: &RootSystemData) -> Self {
        let roots: Vec<Root> = rs.noncompact_roots().cloned().collect();
        let n = roots.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = roots[b]
                    .simple
                    .iter()
                    .zip(&roots[a].simple)
                    .all(|(cb, ca)| cb >= ca);
            }
        }
        let mut strict_lower = vec![Bitset::new(n); n];
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a * n + b] {
                    strict_lower[b].insert(a);
                }
            }
        }
        let mut hasse = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a * n + b] {
                    continue;
                }
                let covered = (0..n).any(|c| c != a && c != b && leq[a * n + c] && leq[c * n + b]);
                if covered {
                    continue;
                }
                let diff: Vec<i64> = roots[b]
                    .simple
                    .iter()
                    .zip(&roots[a].simple)
                    .map(|(cb, ca)| cb - ca)
                    .collect();
                let simple_index = match diff.iter().enumerate().filter(|(_, &c)| c != 0).collect::<Vec<_>>()[..] {
                    [(i, &1)] => i,
                    _ => unreachable!("covering step is not a simple root"),
                };
                hasse.push(HasseEdge {
                    lower: a,
                    upper: b,
                    simple_index,
                });
            }
        }
        hasse.sort_by_key(|e| (e.lower, e.upper));
        Self {
            htype: rs.htype,
            roots,
            leq,
            strict_lower,
            hasse,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.leq(a, b) && !self.leq(b, a)
    }

    pub fn full_set(&self) -> Bitset {
        Bitset::full(self.len())
    }

    pub fn is_downset(&self, s: &Bitset) -> bool {
        s.iter_ones().all(|b| self.strict_lower[b].is_subset(s))
    }

    /// The downset generated by the given elements.
    pub fn downset_of(&self, elems: &[usize]) -> Bitset {
        let mut out = Bitset::new(self.len());
        for &e in elems {
            out.insert(e);
            for x in self.strict_lower[e].iter_ones() {
                out.insert(x);
            }
        }
        out
    }

    /// Size of a maximum matching in the bipartite strict-order graph of the
    /// induced subposet. A minimum chain cover has |S| − matching chains.
    pub fn matching_size(&self, s: &Bitset) -> usize {
        let elems: Vec<usize> = s.iter_ones().collect();
        let k = elems.len();
        let adj: Vec<Vec<usize>> = elems
            .iter()
            .map(|&u| {
                (0..k)
                    .filter(|&v| self.lt(u, elems[v]))
                    .collect()
            })
            .collect();
        let mut match_right: Vec<Option<usize>> = vec![None; k];
        let mut matched = 0;
        let mut visited = vec![false; k];
        for u in 0..k {
            visited.iter_mut().for_each(|v| *v = false);
            if augment(u, &adj, &mut match_right, &mut visited) {
                matched += 1;
            }
        }
        matched
    }

    /// Maximum antichain size of the induced subposet (Dilworth).
    pub fn max_antichain_size(&self, s: &Bitset) -> usize {
        s.count() - self.matching_size(s)
    }

    /// Width plus a witness antichain, lexicographically smallest by index.
    pub fn width(&self, s: &Bitset) -> (usize, Vec<usize>) {
        let m = self.max_antichain_size(s);
        let mut witness: Vec<usize> = Vec::with_capacity(m);
        let mut pool: Vec<usize> = s.iter_ones().collect();
        while witness.len() < m {
            let mut advanced = false;
            for (pos, &i) in pool.iter().enumerate() {
                let rest: Vec<usize> = pool[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&j| self.incomparable(i, j))
                    .collect();
                let rest_bits = Bitset::from_indices(self.len(), &rest);
                if witness.len() + 1 + self.max_antichain_size(&rest_bits) == m {
                    witness.push(i);
                    pool = rest;
                    advanced = true;
                    break;
                }
            }
            assert!(advanced, "maximum antichain extension must exist");
        }
        (m, witness)
    }

    pub fn width_downset(&self, members: Bitset) -> Downset {
        let (_, max_antichain_witness) = self.width(&members);
        Downset {
            members,
            max_antichain_witness,
        }
    }

    /// All lower order ideals, by breadth-first search over the downset
    /// lattice (add one admissible element at a time, dedup by bitset).
    pub fn enumerate_downsets(&self) -> Vec<Bitset> {
        let n = self.len();
        let empty = Bitset::new(n);
        let mut seen: HashSet<Bitset> = HashSet::new();
        seen.insert(empty.clone());
        let mut queue = VecDeque::from([empty]);
        let mut out = Vec::new();
        while let Some(d) = queue.pop_front() {
            for x in 0..n {
                if !d.contains(x) && self.strict_lower[x].is_subset(&d) {
                    let mut e = d.clone();
                    e.insert(x);
                    if seen.insert(e.clone()) {
                        queue.push_back(e);
                    }
                }
            }
            out.push(d);
        }
        out
    }

    /// Distinguished antichains A_1..A_r: the noncompact roots of height
    /// (k−1)c + 1, for the simply-laced families carrying the constant c.
    pub fn distinguished_antichains(&self) -> Result<Vec<Vec<usize>>> {
        let c = self.htype.appendix_c().ok_or(Error::UnsupportedType {
            family: self.htype.label(),
        })?;
        let r = self.htype.real_rank();
        Ok((1..=r)
            .map(|k| {
                let h = (k - 1) * c + 1;
                (0..self.len())
                    .filter(|&i| self.roots[i].height() == h)
                    .collect()
            })
            .collect())
    }

    /// Deterministic DOT rendering of the Hasse diagram. Nodes are labelled
    /// by ε-coordinates, edges by the 1-based simple-root index of the step.
    pub fn emit_hasse_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph hasse {\n");
        out.push_str("  rankdir=BT;\n");
        for (i, r) in self.roots.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, r.display()));
        }
        for e in &self.hasse {
            out.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"];\n",
                e.lower,
                e.upper,
                e.simple_index + 1
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &v in &adj[u] {
        if !visited[v] {
            visited[v] = true;
            if match_right[v].is_none() || augment(match_right[v].unwrap(), adj, match_right, visited)
            {
                match_right[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// Greedy linear-time width scan for sp(2n,ℝ) weights `t = λ+ρ`, strictly
/// decreasing. Pairs are matched from the right: j_1 = n, then the smallest
/// i_1 < j_1 with t_{i_1} + t_{j_1} ≤ 0, then j_2 = n−1 with i_2 > i_1, and
/// so on. For half-integral t this is width(Y_λ); for integral t it counts
/// the nested short-root pairs and the caller accounts for the long roots.
pub fn width_fast_sp(t: &[Rat]) -> Result<usize> {
    for (pos, w) in t.windows(2).enumerate() {
        if w[0] <= w[1] {
            return Err(Error::NonMonotoneInput { position: pos + 1 });
        }
    }
    let n = t.len();
    let mut m = 0;
    let mut lo = 0;
    for step in 0..n {
        let j = match n.checked_sub(1 + step) {
            Some(j) if lo < j => j,
            _ => break,
        };
        match (lo..j).find(|&i| t[i] + t[j] <= Rat::zero()) {
            Some(i) => {
                m += 1;
                lo = i + 1;
            }
            None => break,
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::build_root_data;

    fn poset(t: HermitianType) -> NoncompactPoset {
        NoncompactPoset::new(&build_root_data(t).unwrap())
    }

    // Independent of the matching path: try all subsets of the given
    // elements and keep the largest pairwise-incomparable one.
    pub(crate) fn brute_force_width(p: &NoncompactPoset, s: &Bitset) -> usize {
        let elems: Vec<usize> = s.iter_ones().collect();
        assert!(elems.len() <= 20, "brute force oracle capped");
        let mut best = 0;
        for mask in 0u32..1 << elems.len() {
            let chosen: Vec<usize> = (0..elems.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| elems[i])
                .collect();
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| p.incomparable(a, b)));
            if ok {
                best = best.max(chosen.len());
            }
        }
        best
    }

    fn find(p: &NoncompactPoset, eps2: &[i64]) -> usize {
        p.roots.iter().position(|r| r.eps2 == eps2).unwrap()
    }

    #[test]
    fn example_2_4_ideal_has_width_two() {
        // su(4,3): the six roots ε_i − ε_j with (i,j) among
        // (1,5),(2,5),(3,5),(4,5),(3,6),(4,6).
        let p = poset(HermitianType::Su { p: 4, q: 3 });
        let pairs = [(1, 5), (2, 5), (3, 5), (4, 5), (3, 6), (4, 6)];
        let idx: Vec<usize> = pairs
            .iter()
            .map(|&(i, j)| {
                let mut e = vec![0i64; 7];
                e[i - 1] = 2;
                e[j - 1] = -2;
                find(&p, &e)
            })
            .collect();
        let s = Bitset::from_indices(p.len(), &idx);
        assert_eq!(brute_force_width(&p, &s), 2);
        let (m, witness) = p.width(&s);
        assert_eq!(m, 2);
        assert_eq!(witness.len(), 2);
        assert!(p.incomparable(witness[0], witness[1]));
        assert!(p.is_downset(&s));
    }

    #[test]
    fn full_poset_widths() {
        // Simply-laced families reach the real rank; for sp the maximum
        // width is ⌊(n+1)/2⌋ and the so_odd chain has width 1. Width never
        // exceeds the real rank anywhere.
        let cases = [
            (HermitianType::Su { p: 4, q: 3 }, 3),
            (HermitianType::Sp { n: 5 }, 3),
            (HermitianType::Sp { n: 4 }, 2),
            (HermitianType::SoStar { n: 7 }, 3),
            (HermitianType::SoOdd { n: 4 }, 1),
            (HermitianType::SoEven { n: 5 }, 2),
            (HermitianType::E6, 2),
            (HermitianType::E7, 3),
        ];
        for (t, expected) in cases {
            let p = poset(t);
            let (m, witness) = p.width(&p.full_set());
            assert_eq!(m, expected, "{t}");
            assert!(m <= t.real_rank());
            assert_eq!(witness.len(), m);
        }
    }

    #[test]
    fn empty_subset_has_width_zero() {
        let p = poset(HermitianType::Su { p: 4, q: 3 });
        let (m, witness) = p.width(&Bitset::new(p.len()));
        assert_eq!(m, 0);
        assert!(witness.is_empty());
    }

    #[test]
    fn unique_extremes_and_cover_degree_at_most_two() {
        for t in [
            HermitianType::Su { p: 4, q: 3 },
            HermitianType::Sp { n: 5 },
            HermitianType::SoStar { n: 7 },
            HermitianType::SoOdd { n: 4 },
            HermitianType::SoEven { n: 6 },
            HermitianType::E6,
            HermitianType::E7,
        ] {
            let p = poset(t);
            let minimal: Vec<usize> = (0..p.len())
                .filter(|&b| (0..p.len()).all(|a| !p.lt(a, b)))
                .collect();
            let maximal: Vec<usize> = (0..p.len())
                .filter(|&a| (0..p.len()).all(|b| !p.lt(a, b)))
                .collect();
            assert_eq!(minimal.len(), 1, "{t}: unique minimal element");
            assert_eq!(maximal.len(), 1, "{t}: unique maximal element (θ)");
            // The minimal element is the noncompact simple root: height 1.
            assert_eq!(p.roots[minimal[0]].height(), 1, "{t}");
            for x in 0..p.len() {
                let up = p.hasse.iter().filter(|e| e.lower == x).count();
                let down = p.hasse.iter().filter(|e| e.upper == x).count();
                assert!(up <= 2 && down <= 2, "{t}: cover degree bound");
            }
        }
    }

    #[test]
    fn downset_counts_match_weyl_coset_counts() {
        let cases = [
            (HermitianType::Su { p: 4, q: 3 }, 35),
            (HermitianType::Su { p: 1, q: 1 }, 2),
            (HermitianType::Sp { n: 4 }, 16),
            (HermitianType::SoStar { n: 5 }, 16),
            (HermitianType::SoOdd { n: 4 }, 8),
            (HermitianType::SoEven { n: 5 }, 10),
            (HermitianType::E6, 27),
            (HermitianType::E7, 56),
        ];
        for (t, count) in cases {
            let p = poset(t);
            let downsets = p.enumerate_downsets();
            assert_eq!(downsets.len(), count, "{t}");
            for d in &downsets {
                assert!(p.is_downset(d));
            }
        }
    }

    #[test]
    fn downset_width_is_monotone_under_inclusion() {
        for t in [HermitianType::Sp { n: 3 }, HermitianType::Su { p: 2, q: 2 }] {
            let p = poset(t);
            let downsets = p.enumerate_downsets();
            for a in &downsets {
                for b in &downsets {
                    if a.is_subset(b) {
                        assert!(p.max_antichain_size(a) <= p.max_antichain_size(b));
                    }
                }
            }
        }
    }

    #[test]
    fn dilworth_consistency_on_every_downset() {
        let p = poset(HermitianType::Sp { n: 4 });
        for d in p.enumerate_downsets() {
            let antichain = p.max_antichain_size(&d);
            let matching = p.matching_size(&d);
            assert_eq!(antichain + matching, d.count());
            assert_eq!(antichain, brute_force_width(&p, &d));
        }
    }

    #[test]
    fn witness_roots_are_pairwise_strongly_orthogonal() {
        // Strong orthogonality: neither the sum nor the difference of two
        // antichain members is a root. The sum never is (the nilradical is
        // abelian); incomparability rules out the difference.
        for t in [
            HermitianType::Su { p: 3, q: 3 },
            HermitianType::Sp { n: 4 },
            HermitianType::SoOdd { n: 4 },
            HermitianType::E7,
        ] {
            let rs = build_root_data(t).unwrap();
            let p = NoncompactPoset::new(&rs);
            for d in p.enumerate_downsets() {
                let (_, witness) = p.width(&d);
                for (i, &a) in witness.iter().enumerate() {
                    for &b in &witness[i + 1..] {
                        let diff: Vec<i64> = p.roots[a]
                            .eps2
                            .iter()
                            .zip(&p.roots[b].eps2)
                            .map(|(x, y)| x - y)
                            .collect();
                        let sum: Vec<i64> = p.roots[a]
                            .eps2
                            .iter()
                            .zip(&p.roots[b].eps2)
                            .map(|(x, y)| x + y)
                            .collect();
                        assert!(!rs.is_root_eps2(&diff), "{t}: difference must not be a root");
                        assert!(!rs.is_root_eps2(&sum), "{t}: sum must not be a root");
                    }
                }
            }
        }
    }

    #[test]
    fn distinguished_antichain_sizes() {
        let p = poset(HermitianType::Su { p: 4, q: 3 });
        let a = p.distinguished_antichains().unwrap();
        assert_eq!(a.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 2, 3]);

        let p = poset(HermitianType::E6);
        let a = p.distinguished_antichains().unwrap();
        assert_eq!(a[1].len(), 2);

        let p = poset(HermitianType::E7);
        let a = p.distinguished_antichains().unwrap();
        let gamma3 = vec![0, 0, 0, 0, 2, 2, 0, 0];
        assert!(a[2].iter().any(|&i| p.roots[i].eps2 == gamma3));

        for (k, ak) in a.iter().enumerate() {
            assert_eq!(ak.len(), k + 1);
            for (i, &x) in ak.iter().enumerate() {
                for &y in &ak[i + 1..] {
                    assert!(p.incomparable(x, y));
                }
            }
        }

        assert!(matches!(
            poset(HermitianType::Sp { n: 3 }).distinguished_antichains(),
            Err(Error::UnsupportedType { .. })
        ));
    }

    #[test]
    fn hasse_counts() {
        // Edge counts are frozen from brute-force cover counting over leq.
        let p = poset(HermitianType::E6);
        assert_eq!(p.len(), 16);
        assert_eq!(p.hasse.len(), 20);

        let p = poset(HermitianType::SoEven { n: 6 });
        assert_eq!(p.len(), 10);

        let p = poset(HermitianType::Su { p: 1, q: 1 });
        assert_eq!(p.len(), 1);
        assert!(p.hasse.is_empty());

        let dot = poset(HermitianType::SoEven { n: 6 }).emit_hasse_dot();
        assert_eq!(dot.matches(" [label=\"ε").count(), 10);
        assert!(dot.starts_with("digraph hasse {"));
    }

    #[test]
    fn width_fast_sp_matches_paper_scan() {
        let t: Vec<Rat> = [25, 23, 19, 15, 13, 11, 9, -3, -7, -9, -17]
            .iter()
            .map(|&n| Rat::new(n, 2))
            .collect();
        assert_eq!(width_fast_sp(&t).unwrap(), 3);

        let t: Vec<Rat> = [5, 3, 1].iter().map(|&n| Rat::new(n, 2)).collect();
        assert_eq!(width_fast_sp(&t).unwrap(), 0);

        let t: Vec<Rat> = [1, -1].iter().map(|&n| Rat::new(n, 2)).collect();
        assert_eq!(width_fast_sp(&t).unwrap(), 1);

        let bad: Vec<Rat> = [1, 1].iter().map(|&n| Rat::new(n, 2)).collect();
        assert!(matches!(
            width_fast_sp(&bad),
            Err(Error::NonMonotoneInput { position: 1 })
        ));
    }

    proptest::proptest! {
        // Width takes arbitrary subsets, not only downsets.
        #[test]
        fn matching_width_matches_brute_force_on_random_subsets(
            mask in 0u32..(1 << 10),
            family in 0usize..3,
        ) {
            let p = poset([
                HermitianType::Su { p: 3, q: 3 },
                HermitianType::Sp { n: 4 },
                HermitianType::SoEven { n: 5 },
            ][family]);
            let idx: Vec<usize> = (0..p.len().min(10)).filter(|&i| mask >> i & 1 == 1).collect();
            let s = Bitset::from_indices(p.len(), &idx);
            let (m, witness) = p.width(&s);
            proptest::prop_assert_eq!(m, brute_force_width(&p, &s));
            proptest::prop_assert_eq!(witness.len(), m);
            proptest::prop_assert_eq!(m + p.matching_size(&s), s.count());
        }
    }

    #[test]
    fn downset_carries_its_witness() {
        let p = poset(HermitianType::SoStar { n: 5 });
        let d = p.width_downset(p.full_set());
        assert_eq!(d.max_antichain_witness.len(), 2);
        assert_eq!(d.members.count(), p.len());
    }

    #[test]
    fn width_witness_is_lexicographically_smallest() {
        let p = poset(HermitianType::Su { p: 3, q: 3 });
        let (m, witness) = p.width(&p.full_set());
        assert_eq!(m, 3);
        // Verify minimality against all maximum antichains by brute force.
        let elems: Vec<usize> = (0..p.len()).collect();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..1 << elems.len() {
            if (mask.count_ones() as usize) != m {
                continue;
            }
            let chosen: Vec<usize> = (0..elems.len()).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| p.incomparable(a, b)));
            if ok && best.as_ref().is_none_or(|b| &chosen < b) {
                best = Some(chosen);
            }
        }
        assert_eq!(witness, best.unwrap());
    }
}
