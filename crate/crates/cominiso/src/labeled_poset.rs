//! Abstract labeled posets and the isomorphism decision between them.
//!
//! A [`LabeledPoset`] is a finite poset together with a long/short label per
//! element, with element identity forgotten. Isomorphism is decided by a
//! backtracking search pruned on cheap isomorphism invariants; the posets
//! here never exceed 27 elements, so no canonical-form machinery is needed.

use crate::comin_poset::{CominPoset, Ideal};
use crate::root_system::LengthClass;

/// A finite poset with long/short labels, closed under the usual partial
/// order axioms. Covers and a rank function (longest chain from the minima)
/// are cached at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoset {
    n: usize,
    leq: Vec<bool>,
    labels: Vec<LengthClass>,
    rank: Vec<usize>,
    up_covers: Vec<Vec<usize>>,
    down_covers: Vec<Vec<usize>>,
}

impl LabeledPoset {
    /// Builds a poset from its order relation. `leq` must be reflexive,
    /// antisymmetric, and transitive; this is asserted.
    pub fn new(n: usize, leq: Vec<bool>, labels: Vec<LengthClass>) -> Self {
        assert_eq!(leq.len(), n * n);
        assert_eq!(labels.len(), n);
        for a in 0..n {
            assert!(leq[a * n + a], "order must be reflexive");
            for b in 0..n {
                if a != b && leq[a * n + b] {
                    assert!(!leq[b * n + a], "order must be antisymmetric");
                }
                for c in 0..n {
                    if leq[a * n + b] && leq[b * n + c] {
                        assert!(leq[a * n + c], "order must be transitive");
                    }
                }
            }
        }

        let mut up_covers = vec![Vec::new(); n];
        let mut down_covers = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a * n + b] {
                    continue;
                }
                let is_cover = (0..n)
                    .all(|c| c == a || c == b || !(leq[a * n + c] && leq[c * n + b]));
                if is_cover {
                    up_covers[a].push(b);
                    down_covers[b].push(a);
                }
            }
        }

        // Longest chain from a minimal element, via repeated relaxation.
        let mut rank = vec![0usize; n];
        let mut changed = true;
        while changed {
            changed = false;
            for b in 0..n {
                for &a in &down_covers[b] {
                    if rank[a] + 1 > rank[b] {
                        rank[b] = rank[a] + 1;
                        changed = true;
                    }
                }
            }
        }

        LabeledPoset {
            n,
            leq,
            labels,
            rank,
            up_covers,
            down_covers,
        }
    }

    /// The induced subposet of `ideal` inside `P_X`, elements renumbered
    /// `0..|ideal|` in canonical order, with their labels.
    pub fn from_ideal(p: &CominPoset, ideal: Ideal) -> Self {
        let members: Vec<usize> = ideal.indices().collect();
        let n = members.len();
        let mut leq = vec![false; n * n];
        for (a, &ea) in members.iter().enumerate() {
            for (b, &eb) in members.iter().enumerate() {
                leq[a * n + b] = p.leq(ea, eb);
            }
        }
        let labels = members.iter().map(|&e| p.label(e)).collect();
        LabeledPoset::new(n, leq, labels)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn label(&self, e: usize) -> LengthClass {
        self.labels[e]
    }

    pub fn labels(&self) -> &[LengthClass] {
        &self.labels
    }

    pub fn rank_of(&self, e: usize) -> usize {
        self.rank[e]
    }

    pub fn up_covers(&self, e: usize) -> &[usize] {
        &self.up_covers[e]
    }

    pub fn down_covers(&self, e: usize) -> &[usize] {
        &self.down_covers[e]
    }

    /// Same poset with every label set to `Long`.
    pub fn unlabeled(&self) -> LabeledPoset {
        let mut out = self.clone();
        out.labels = vec![LengthClass::Long; self.n];
        out
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Label sequence from the bottom, only meaningful for chains.
    fn chain_labels(&self) -> Vec<LengthClass> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&e| self.rank[e]);
        order.into_iter().map(|e| self.labels[e]).collect()
    }

    fn signature(&self, e: usize) -> (usize, LengthClass, usize, usize) {
        (
            self.rank[e],
            self.labels[e],
            self.down_covers[e].len(),
            self.up_covers[e].len(),
        )
    }

    /// Searches for an order- and label-preserving bijection onto `other`.
    /// Returns the first witness in a fixed search order, so the result is
    /// deterministic.
    pub fn find_isomorphism(&self, other: &LabeledPoset) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        if self.n == 0 {
            return Some(Vec::new());
        }

        // Chains are isomorphic iff their label sequences agree.
        if self.is_chain() || other.is_chain() {
            if self.is_chain() != other.is_chain() {
                return None;
            }
            if self.chain_labels() != other.chain_labels() {
                return None;
            }
            let mut order_a: Vec<usize> = (0..self.n).collect();
            order_a.sort_by_key(|&e| self.rank[e]);
            let mut order_b: Vec<usize> = (0..self.n).collect();
            order_b.sort_by_key(|&e| other.rank[e]);
            let mut map = vec![0usize; self.n];
            for (a, b) in order_a.into_iter().zip(order_b) {
                map[a] = b;
            }
            return Some(map);
        }

        let mut sigs_a: Vec<_> = (0..self.n).map(|e| self.signature(e)).collect();
        let mut sigs_b: Vec<_> = (0..self.n).map(|e| other.signature(e)).collect();
        sigs_a.sort();
        sigs_b.sort();
        if sigs_a != sigs_b {
            return None;
        }

        // Backtracking over elements in (rank, index) order; candidate
        // images must share the signature and respect the order relative to
        // everything already mapped.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&e| (self.rank[e], e));
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        if self.extend(other, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend(
        &self,
        other: &LabeledPoset,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        let sig = self.signature(x);
        for y in 0..other.n {
            if used[y] || other.signature(y) != sig {
                continue;
            }
            let consistent = order[..depth].iter().all(|&x2| {
                let y2 = map[x2];
                self.leq(x, x2) == other.leq(y, y2) && self.leq(x2, x) == other.leq(y2, y)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend(other, order, depth + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    /// Checks that `map` is an order- and label-preserving bijection onto
    /// `other`; used by tests to validate returned witnesses.
    pub fn verify_isomorphism(&self, other: &LabeledPoset, map: &[usize]) -> bool {
        if map.len() != self.n || self.n != other.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &y in map {
            if y >= self.n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        for a in 0..self.n {
            if self.labels[a] != other.labels[map[a]] {
                return false;
            }
            for b in 0..self.n {
                if self.leq(a, b) != other.leq(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
}
