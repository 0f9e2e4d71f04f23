use thiserror::Error;

use crate::coalition::Coalition;
use crate::graph::InfluenceGraph;
use crate::spread::Spreader;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("quota {quota} outside [0, {max}] for a graph with {n} nodes", max = n + 1)]
    QuotaOutOfRange { quota: usize, n: usize },
}

/// An influence graph plus a quota: `X` wins iff `F(X)` holds at least
/// `quota` convincible nodes.
///
/// Every player may be part of the initial activation. A seeded
/// unconvincible player stays in `F(X)` but adds nothing towards the quota,
/// so an isolated player is always a dummy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfluenceGame {
    graph: InfluenceGraph,
    quota: usize,
}

impl InfluenceGame {
    /// Quotas `0` (everything wins) through `n + 1` (nothing wins) are valid.
    pub fn new(graph: InfluenceGraph, quota: usize) -> Result<Self, GameError> {
        let n = graph.node_count();
        if quota > n + 1 {
            return Err(GameError::QuotaOutOfRange { quota, n });
        }
        Ok(InfluenceGame { graph, quota })
    }

    pub fn graph(&self) -> &InfluenceGraph {
        &self.graph
    }

    pub fn quota(&self) -> usize {
        self.quota
    }

    pub fn player_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn with_quota(&self, quota: usize) -> Result<Self, GameError> {
        InfluenceGame::new(self.graph.clone(), quota)
    }

    pub fn is_winning(&self, coalition: &Coalition) -> bool {
        Spreader::new(&self.graph).reaches(coalition, self.quota)
    }

    /// A [`WinOracle`] reusing its buffers across queries.
    pub fn oracle(&self) -> WinOracle<'_> {
        WinOracle {
            spreader: Spreader::new(&self.graph),
            quota: self.quota,
        }
    }
}

/// Repeated winning-coalition queries against one game.
pub struct WinOracle<'g> {
    spreader: Spreader<'g>,
    quota: usize,
}

impl WinOracle<'_> {
    pub fn is_winning(&mut self, coalition: &Coalition) -> bool {
        self.spreader.reaches(coalition, self.quota)
    }

    #[inline]
    pub fn is_winning_mask(&mut self, mask: u64) -> bool {
        self.spreader.reaches_mask(mask, self.quota)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GraphBuilder, Threshold};

    fn g1() -> InfluenceGraph {
        let mut b = GraphBuilder::new(4);
        for (s, d, w) in [(0, 2, 2), (0, 3, 3), (1, 0, 1), (1, 3, 1), (2, 3, 1)] {
            b.insert_arc(s, d, w).unwrap();
        }
        b.threshold(3, Threshold::Finite(4)).unwrap();
        b.build()
    }

    #[test]
    fn winning_examples() {
        let game = InfluenceGame::new(g1(), 4).unwrap();
        assert!(game.is_winning(&Coalition::from_members(4, [1usize])));
        assert!(!game.is_winning(&Coalition::from_members(4, [0usize])));
        assert!(!game.is_winning(&Coalition::empty(4)));
    }

    #[test]
    fn quota_bounds() {
        assert!(InfluenceGame::new(g1(), 5).is_ok());
        assert_eq!(
            InfluenceGame::new(g1(), 6).unwrap_err(),
            GameError::QuotaOutOfRange { quota: 6, n: 4 }
        );
        let all = InfluenceGame::new(g1(), 0).unwrap();
        assert!(all.is_winning(&Coalition::empty(4)));
        let none = InfluenceGame::new(g1(), 5).unwrap();
        assert!(!none.is_winning(&Coalition::full(4)));
    }
}
