//! Structural centralities on the arc set alone; weights and thresholds are
//! ignored and distances are hop counts.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{InfluenceGraph, NodeId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeasureError {
    #[error("{measure} needs at least {needed} nodes, graph has {n}")]
    TooFewNodes {
        measure: &'static str,
        needed: usize,
        n: usize,
    },
}

fn require(measure: &'static str, needed: usize, n: usize) -> Result<(), MeasureError> {
    if n < needed {
        Err(MeasureError::TooFewNodes { measure, needed, n })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

/// `deg(i) / (n - 1)` in the requested direction.
pub fn degree_centrality(graph: &InfluenceGraph, dir: Direction) -> Result<Vec<f64>, MeasureError> {
    let n = graph.node_count();
    require("degree centrality", 2, n)?;
    Ok(graph
        .nodes()
        .map(|i| {
            let d = match dir {
                Direction::In => graph.in_degree(i),
                Direction::Out => graph.out_degree(i),
            };
            d as f64 / (n - 1) as f64
        })
        .collect())
}

/// Hop distances along arc direction; unreachable pairs hold `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<usize>,
}

impl DistanceMatrix {
    pub fn new(graph: &InfluenceGraph) -> Self {
        let n = graph.node_count();
        let mut dist = vec![n; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for (v, _) in graph.out_arcs(NodeId(u)) {
                    if row[v.0] == n && v.0 != s {
                        row[v.0] = row[u] + 1;
                        queue.push_back(v.0);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, from: NodeId, to: NodeId) -> usize {
        self.dist[from.0 * self.n + to.0]
    }

    pub fn row(&self, from: NodeId) -> &[usize] {
        &self.dist[from.0 * self.n..(from.0 + 1) * self.n]
    }
}

/// `(n - 1) / sum_j D(i, j)` over outgoing hop distances.
pub fn closeness_centrality(graph: &InfluenceGraph) -> Result<Vec<f64>, MeasureError> {
    let n = graph.node_count();
    require("closeness centrality", 2, n)?;
    let d = DistanceMatrix::new(graph);
    Ok(graph
        .nodes()
        .map(|i| {
            let total: usize = d.row(i).iter().sum();
            (n - 1) as f64 / total as f64
        })
        .collect())
}

/// Shortest-path betweenness over ordered pairs, normalized by
/// `(n - 1)(n - 2)`.
///
/// Path counts accumulate per source by BFS; dependencies are then pushed
/// back along the BFS order.
pub fn betweenness_centrality(graph: &InfluenceGraph) -> Result<Vec<f64>, MeasureError> {
    let n = graph.node_count();
    require("betweenness centrality", 3, n)?;
    let mut score = vec![0.0f64; n];

    let mut order = Vec::with_capacity(n);
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0u128; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        order.clear();
        dist.fill(usize::MAX);
        sigma.fill(0);
        delta.fill(0.0);
        dist[s] = 0;
        sigma[s] = 1;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for (v, _) in graph.out_arcs(NodeId(u)) {
                let v = v.0;
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if dist[v] == dist[u] + 1 {
                    sigma[v] += sigma[u];
                }
            }
        }
        for &w in order.iter().rev() {
            for (v, _) in graph.out_arcs(NodeId(w)) {
                let v = v.0;
                if dist[v] != usize::MAX && dist[v] == dist[w] + 1 {
                    delta[w] += (sigma[w] as f64 / sigma[v] as f64) * (1.0 + delta[v]);
                }
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }

    let norm = ((n - 1) * (n - 2)) as f64;
    Ok(score.into_iter().map(|b| b / norm).collect())
}
