//! Linear-threshold spread of influence.
//!
//! A node becomes active once the summed weight of arcs arriving from active
//! nodes reaches its threshold. The fixpoint does not depend on the order in
//! which activations are processed, so [`Spreader`] uses a work stack, while
//! [`spread_trace`] runs synchronous rounds to expose the per-step sets.
//!
//! Unconvincible nodes join `F(X)` only when seeded, and even then they do
//! not count towards a quota: [`Spreader::reaches`] and
//! [`Spreader::influence`] count convincible active nodes only.

use crate::coalition::Coalition;
use crate::graph::{InfluenceGraph, NodeId};

/// Reusable working state for repeated spread computations on one graph.
pub struct Spreader<'g> {
    graph: &'g InfluenceGraph,
    limits: Vec<u64>,
    acc: Vec<u64>,
    active: Vec<u64>,
    stack: Vec<usize>,
    size: usize,
    count: usize,
}

impl<'g> Spreader<'g> {
    pub fn new(graph: &'g InfluenceGraph) -> Self {
        let n = graph.node_count();
        Spreader {
            graph,
            limits: graph.thresholds().iter().map(|t| t.as_limit()).collect(),
            acc: vec![0; n],
            active: vec![0; n.div_ceil(64).max(1)],
            stack: Vec::with_capacity(n),
            size: 0,
            count: 0,
        }
    }

    pub fn graph(&self) -> &'g InfluenceGraph {
        self.graph
    }

    fn reset(&mut self) {
        self.acc.fill(0);
        self.active.fill(0);
        self.stack.clear();
        self.size = 0;
        self.count = 0;
    }

    #[inline]
    fn is_active(&self, i: usize) -> bool {
        self.active[i >> 6] & (1 << (i & 63)) != 0
    }

    #[inline]
    fn activate(&mut self, i: usize) {
        self.active[i >> 6] |= 1 << (i & 63);
        self.size += 1;
        self.count += (self.limits[i] != u64::MAX) as usize;
        self.stack.push(i);
    }

    /// Propagates until the fixpoint or until `stop_at` convincible nodes are
    /// active.
    fn propagate(&mut self, stop_at: usize) {
        let offsets = self.graph.out_offsets();
        let targets = self.graph.out_targets();
        let weights = self.graph.out_weights();
        while let Some(u) = self.stack.pop() {
            if self.count >= stop_at {
                return;
            }
            for k in offsets[u]..offsets[u + 1] {
                let v = targets[k];
                if self.is_active(v) {
                    continue;
                }
                // saturates below the unconvincible sentinel
                self.acc[v] = self.acc[v].saturating_add(weights[k]).min(u64::MAX - 1);
                if self.acc[v] >= self.limits[v] {
                    self.activate(v);
                }
            }
        }
    }

    fn seed(&mut self, seed: &Coalition) {
        self.reset();
        for i in seed.iter() {
            self.activate(i.0);
        }
    }

    /// `|F(seed)|`.
    pub fn spread_size(&mut self, seed: &Coalition) -> usize {
        self.seed(seed);
        self.propagate(usize::MAX);
        self.size
    }

    /// Number of convincible nodes in `F(seed)`; this is what a quota is
    /// compared against.
    pub fn influence(&mut self, seed: &Coalition) -> usize {
        self.seed(seed);
        self.propagate(usize::MAX);
        self.count
    }

    /// `influence(seed) >= quota`, stopping as soon as the quota is reached.
    pub fn reaches(&mut self, seed: &Coalition, quota: usize) -> bool {
        self.seed(seed);
        self.propagate(quota);
        self.count >= quota
    }

    /// Same as [`reaches`](Self::reaches) for a coalition given as a bitmask
    /// over the first 64 players.
    #[inline]
    pub fn reaches_mask(&mut self, mut mask: u64, quota: usize) -> bool {
        self.reset();
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            self.activate(i);
        }
        self.propagate(quota);
        self.count >= quota
    }

    pub fn spread(&mut self, seed: &Coalition) -> Coalition {
        self.spread_size(seed);
        let mut out = Coalition::empty(self.graph.node_count());
        for i in 0..self.graph.node_count() {
            if self.is_active(i) {
                out.insert(NodeId(i));
            }
        }
        out
    }
}

/// `F(seed)`: every node active at the fixpoint.
pub fn spread(graph: &InfluenceGraph, seed: &Coalition) -> Coalition {
    Spreader::new(graph).spread(seed)
}

/// Cumulative active sets after each synchronous round that activated at
/// least one node: `[F^1, F^2, ..., F^k]` with `F^k = F(seed)`.
///
/// A seed that activates nothing beyond itself yields an empty trace.
pub fn spread_trace(graph: &InfluenceGraph, seed: &Coalition) -> Vec<Coalition> {
    let n = graph.node_count();
    let mut active = seed.clone();
    let mut acc = vec![0u64; n];
    let mut frontier: Vec<NodeId> = seed.iter().collect();
    let mut trace = Vec::new();
    loop {
        for &u in &frontier {
            for (v, w) in graph.out_arcs(u) {
                acc[v.0] = acc[v.0].saturating_add(w).min(u64::MAX - 1);
            }
        }
        frontier = graph
            .nodes()
            .filter(|&v| !active.contains(v) && acc[v.0] >= graph.threshold(v).as_limit())
            .collect();
        if frontier.is_empty() {
            return trace;
        }
        for &v in &frontier {
            active.insert(v);
        }
        trace.push(active.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GraphBuilder, Threshold};

    /// a=0, b=1, c=2, d=3.
    fn g1() -> InfluenceGraph {
        let mut b = GraphBuilder::new(4);
        b.insert_arc(0, 2, 2).unwrap();
        b.insert_arc(0, 3, 3).unwrap();
        b.insert_arc(1, 0, 1).unwrap();
        b.insert_arc(1, 3, 1).unwrap();
        b.insert_arc(2, 3, 1).unwrap();
        b.threshold(3, Threshold::Finite(4)).unwrap();
        b.build()
    }

    fn set(members: &[usize]) -> Coalition {
        Coalition::from_members(4, members.iter().copied())
    }

    #[test]
    fn spread_from_a() {
        assert_eq!(spread(&g1(), &set(&[0])), set(&[0, 2, 3]));
        assert_eq!(spread(&g1(), &set(&[1])), set(&[0, 1, 2, 3]));
        assert_eq!(spread(&g1(), &set(&[])), set(&[]));
    }

    #[test]
    fn trace_from_a_matches_rounds() {
        assert_eq!(spread_trace(&g1(), &set(&[0])), vec![set(&[0, 2]), set(&[0, 2, 3])]);
        assert!(spread_trace(&g1(), &set(&[])).is_empty());
    }

    #[test]
    fn trace_from_b() {
        // d already collects 3 + 1 from a and b in round two, alongside c.
        assert_eq!(
            spread_trace(&g1(), &set(&[1])),
            vec![set(&[0, 1]), set(&[0, 1, 2, 3])]
        );
    }

    #[test]
    fn early_stop_agrees_with_full_spread() {
        let g = g1();
        let mut sp = Spreader::new(&g);
        for mask in 0u64..16 {
            let c = Coalition::from_mask(4, mask);
            let size = sp.influence(&c);
            assert_eq!(size, sp.spread_size(&c));
            for q in 0..=5 {
                assert_eq!(sp.reaches_mask(mask, q), size >= q);
                assert_eq!(sp.reaches(&c, q), size >= q);
            }
        }
    }

    #[test]
    fn unconvincible_needs_seeding() {
        let mut b = GraphBuilder::new(2);
        b.insert_arc(0, 1, 100).unwrap();
        b.threshold(1, Threshold::Unconvincible).unwrap();
        let g = b.build();
        assert_eq!(spread(&g, &Coalition::from_members(2, [0usize])).len(), 1);
        assert_eq!(spread(&g, &Coalition::from_members(2, [1usize])).len(), 1);
    }

    #[test]
    fn seeded_unconvincible_is_not_counted() {
        let mut b = GraphBuilder::new(3);
        b.insert_arc(0, 1, 1).unwrap();
        b.threshold(2, Threshold::Unconvincible).unwrap();
        let g = b.build();
        let mut sp = Spreader::new(&g);
        let seed = Coalition::from_members(3, [0usize, 2]);
        assert_eq!(sp.spread_size(&seed), 3);
        assert_eq!(sp.influence(&seed), 2);
        assert!(sp.reaches(&seed, 2));
        assert!(!sp.reaches(&seed, 3));
        assert!(!sp.reaches_mask(0b100, 1));
    }
}
