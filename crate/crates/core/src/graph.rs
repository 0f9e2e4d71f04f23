//! Influence graphs: directed, integer-weighted arcs plus a per-node
//! activation threshold.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Dense node index in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for NodeId {
    fn from(i: usize) -> Self {
        NodeId(i)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Activation threshold of a node.
///
/// `Unconvincible` nodes are never activated by incoming influence; they are
/// active only when placed in the seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Threshold {
    Finite(u64),
    Unconvincible,
}

impl Threshold {
    pub fn finite(value: u64) -> Result<Self, GraphError> {
        if value == 0 {
            Err(GraphError::ZeroThreshold)
        } else {
            Ok(Threshold::Finite(value))
        }
    }

    pub fn value(self) -> Option<u64> {
        match self {
            Threshold::Finite(v) => Some(v),
            Threshold::Unconvincible => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Threshold::Finite(_))
    }

    pub fn mass(self) -> Mass {
        match self {
            Threshold::Finite(v) => Mass::Finite(v),
            Threshold::Unconvincible => Mass::Infinite,
        }
    }

    /// Threshold as a sentinel-encoded integer; `u64::MAX` can never be
    /// reached by a finite sum of weights on a graph this crate can build.
    pub(crate) fn as_limit(self) -> u64 {
        self.value().unwrap_or(u64::MAX)
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(v) => write!(f, "{v}"),
            Threshold::Unconvincible => f.write_str("inf"),
        }
    }
}

/// Extended non-negative integer used for threshold masses and efforts.
///
/// Variant order gives `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mass {
    Finite(u64),
    Infinite,
}

impl Mass {
    pub const ZERO: Mass = Mass::Finite(0);

    pub fn finite(self) -> Option<u64> {
        match self {
            Mass::Finite(v) => Some(v),
            Mass::Infinite => None,
        }
    }
}

impl std::ops::Add for Mass {
    type Output = Mass;

    fn add(self, rhs: Mass) -> Mass {
        match (self, rhs) {
            (Mass::Finite(a), Mass::Finite(b)) => Mass::Finite(a + b),
            _ => Mass::Infinite,
        }
    }
}

impl fmt::Display for Mass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mass::Finite(v) => write!(f, "{v}"),
            Mass::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("arc weight must be at least 1")]
    ZeroWeight,
    #[error("threshold must be at least 1 (use Unconvincible for unreachable thresholds)")]
    ZeroThreshold,
    #[error("duplicate arc {src} -> {dst}")]
    DuplicateArc { src: usize, dst: usize },
    #[error("arc {src} -> {dst} has weight {weight}; weight swapping needs weights in {{1, 2}}")]
    SwapWeight { src: usize, dst: usize, weight: u64 },
}

/// A directed arc with a positive integer weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub src: NodeId,
    pub dst: NodeId,
    pub weight: u64,
}

/// How per-node thresholds are derived from the graph structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdScheme {
    /// Every node gets the same threshold `k >= 1`.
    Constant(u64),
    /// Threshold 1 everywhere.
    Min,
    /// `ceil(indeg / 2)`.
    AverageIndegree,
    /// `floor(indeg / 2) + 1`.
    MajorityIndegree,
    /// `indeg`.
    MaxIndegree,
}

impl ThresholdScheme {
    /// Threshold for a node of the given in-degree. Degree-based schemes map
    /// in-degree 0 to `Unconvincible`.
    pub fn threshold_for(self, in_degree: usize) -> Result<Threshold, GraphError> {
        let d = in_degree as u64;
        match self {
            ThresholdScheme::Constant(k) => Threshold::finite(k),
            ThresholdScheme::Min => Ok(Threshold::Finite(1)),
            _ if d == 0 => Ok(Threshold::Unconvincible),
            ThresholdScheme::AverageIndegree => Ok(Threshold::Finite(d.div_ceil(2))),
            ThresholdScheme::MajorityIndegree => Ok(Threshold::Finite(d / 2 + 1)),
            ThresholdScheme::MaxIndegree => Ok(Threshold::Finite(d)),
        }
    }
}

/// Directed weighted graph with activation thresholds.
///
/// Immutable once built. Arcs are kept in CSR form sorted by `(src, dst)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfluenceGraph {
    thresholds: Vec<Threshold>,
    labels: Vec<Option<String>>,
    out_offsets: Vec<usize>,
    out_targets: Vec<usize>,
    out_weights: Vec<u64>,
    in_degree: Vec<usize>,
}

impl InfluenceGraph {
    /// Graph with `n` nodes, no arcs and threshold 1 everywhere.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Each unordered pair `{a, b}` with weight `w` becomes arcs `a -> b` and
    /// `b -> a`, both of weight `w`. Thresholds default to 1.
    pub fn from_undirected<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut b = GraphBuilder::new(n);
        for (a, c, w) in edges {
            b.insert_arc(a, c, w)?;
            b.insert_arc(c, a, w)?;
        }
        Ok(b.build())
    }

    pub fn node_count(&self) -> usize {
        self.thresholds.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_targets.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count()).map(NodeId)
    }

    pub fn threshold(&self, node: NodeId) -> Threshold {
        self.thresholds[node.0]
    }

    pub fn thresholds(&self) -> &[Threshold] {
        &self.thresholds
    }

    pub fn label(&self, node: NodeId) -> Option<&str> {
        self.labels[node.0].as_deref()
    }

    /// Label if one was set, otherwise the numeric index.
    pub fn display_label(&self, node: NodeId) -> String {
        self.label(node)
            .map(str::to_owned)
            .unwrap_or_else(|| node.0.to_string())
    }

    pub fn in_degree(&self, node: NodeId) -> usize {
        self.in_degree[node.0]
    }

    pub fn out_degree(&self, node: NodeId) -> usize {
        self.out_offsets[node.0 + 1] - self.out_offsets[node.0]
    }

    /// Out-neighbours of `node` with arc weights, ascending by target.
    pub fn out_arcs(&self, node: NodeId) -> impl Iterator<Item = (NodeId, u64)> + '_ {
        let range = self.out_offsets[node.0]..self.out_offsets[node.0 + 1];
        self.out_targets[range.clone()]
            .iter()
            .zip(&self.out_weights[range])
            .map(|(&t, &w)| (NodeId(t), w))
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.nodes().flat_map(move |src| {
            self.out_arcs(src)
                .map(move |(dst, weight)| Arc { src, dst, weight })
        })
    }

    pub fn weight(&self, src: NodeId, dst: NodeId) -> Option<u64> {
        let range = self.out_offsets[src.0]..self.out_offsets[src.0 + 1];
        let targets = &self.out_targets[range.clone()];
        targets
            .binary_search(&dst.0)
            .ok()
            .map(|k| self.out_weights[range.start + k])
    }

    /// No arcs in either direction.
    pub fn is_isolated(&self, node: NodeId) -> bool {
        self.in_degree(node) == 0 && self.out_degree(node) == 0
    }

    /// Sum of thresholds; `Infinite` if any member is unconvincible.
    pub fn threshold_mass<I>(&self, members: I) -> Mass
    where
        I: IntoIterator<Item = NodeId>,
    {
        members
            .into_iter()
            .fold(Mass::ZERO, |acc, i| acc + self.threshold(i).mass())
    }

    /// Sum of the finite thresholds only.
    pub fn finite_threshold_total(&self) -> u64 {
        self.thresholds.iter().filter_map(|t| t.value()).sum()
    }

    pub fn with_threshold_scheme(&self, scheme: ThresholdScheme) -> Result<Self, GraphError> {
        let thresholds = self
            .nodes()
            .map(|i| scheme.threshold_for(self.in_degree(i)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(InfluenceGraph {
            thresholds,
            ..self.clone()
        })
    }

    /// Isolated nodes (no arcs at all) become unconvincible.
    pub fn with_isolated_unconvincible(&self) -> Self {
        let mut g = self.clone();
        for i in self.nodes() {
            if self.is_isolated(i) {
                g.thresholds[i.0] = Threshold::Unconvincible;
            }
        }
        g
    }

    pub fn with_thresholds(&self, thresholds: Vec<Threshold>) -> Self {
        assert_eq!(thresholds.len(), self.node_count(), "threshold vector length");
        InfluenceGraph {
            thresholds,
            ..self.clone()
        }
    }

    /// Turns a preference graph into an influence graph: every arc `i -> j`
    /// becomes `j -> i`, and weights 1 and 2 trade places.
    pub fn reverse_with_weight_swap(&self) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(self.node_count());
        for arc in self.arcs() {
            let swapped = match arc.weight {
                1 => 2,
                2 => 1,
                weight => {
                    return Err(GraphError::SwapWeight {
                        src: arc.src.0,
                        dst: arc.dst.0,
                        weight,
                    })
                }
            };
            b.insert_arc(arc.dst.0, arc.src.0, swapped)?;
        }
        b.thresholds = self.thresholds.clone();
        b.labels = self.labels.clone();
        Ok(b.build())
    }

    pub(crate) fn out_offsets(&self) -> &[usize] {
        &self.out_offsets
    }

    pub(crate) fn out_targets(&self) -> &[usize] {
        &self.out_targets
    }

    pub(crate) fn out_weights(&self) -> &[u64] {
        &self.out_weights
    }
}

/// Incremental construction of an [`InfluenceGraph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    arcs: BTreeMap<(usize, usize), u64>,
    thresholds: Vec<Threshold>,
    labels: Vec<Option<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            arcs: BTreeMap::new(),
            thresholds: vec![Threshold::Finite(1); n],
            labels: vec![None; n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    fn check(&self, src: usize, dst: usize, weight: u64) -> Result<(), GraphError> {
        for node in [src, dst] {
            self.check_node(node)?;
        }
        if src == dst {
            return Err(GraphError::SelfLoop(src));
        }
        if weight == 0 {
            return Err(GraphError::ZeroWeight);
        }
        Ok(())
    }

    fn check_node(&self, node: usize) -> Result<(), GraphError> {
        if node >= self.n {
            Err(GraphError::NodeOutOfRange { node, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds an arc, summing the weight into an existing parallel arc.
    pub fn add_arc(&mut self, src: usize, dst: usize, weight: u64) -> Result<&mut Self, GraphError> {
        self.check(src, dst, weight)?;
        *self.arcs.entry((src, dst)).or_insert(0) += weight;
        Ok(self)
    }

    /// Adds an arc, rejecting a second arc on the same ordered pair.
    pub fn insert_arc(
        &mut self,
        src: usize,
        dst: usize,
        weight: u64,
    ) -> Result<&mut Self, GraphError> {
        self.check(src, dst, weight)?;
        if self.arcs.insert((src, dst), weight).is_some() {
            return Err(GraphError::DuplicateArc { src, dst });
        }
        Ok(self)
    }

    pub fn has_arc(&self, src: usize, dst: usize) -> bool {
        self.arcs.contains_key(&(src, dst))
    }

    pub fn threshold(&mut self, node: usize, threshold: Threshold) -> Result<&mut Self, GraphError> {
        self.check_node(node)?;
        if threshold == Threshold::Finite(0) {
            return Err(GraphError::ZeroThreshold);
        }
        self.thresholds[node] = threshold;
        Ok(self)
    }

    pub fn label(&mut self, node: usize, label: impl Into<String>) -> Result<&mut Self, GraphError> {
        self.check_node(node)?;
        self.labels[node] = Some(label.into());
        Ok(self)
    }

    pub fn build(&self) -> InfluenceGraph {
        let mut out_offsets = vec![0usize; self.n + 1];
        let mut in_degree = vec![0usize; self.n];
        let mut out_targets = Vec::with_capacity(self.arcs.len());
        let mut out_weights = Vec::with_capacity(self.arcs.len());
        for (&(src, dst), &w) in &self.arcs {
            out_offsets[src + 1] += 1;
            in_degree[dst] += 1;
            out_targets.push(dst);
            out_weights.push(w);
        }
        for i in 0..self.n {
            out_offsets[i + 1] += out_offsets[i];
        }
        InfluenceGraph {
            thresholds: self.thresholds.clone(),
            labels: self.labels.clone(),
            out_offsets,
            out_targets,
            out_weights,
            in_degree,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undirected_pair_expands_to_two_arcs() {
        let g = InfluenceGraph::from_undirected(4, [(1, 3, 1)]).unwrap();
        let arcs: Vec<_> = g.arcs().map(|a| (a.src.0, a.dst.0, a.weight)).collect();
        assert_eq!(arcs, vec![(1, 3, 1), (3, 1, 1)]);
    }

    #[test]
    fn undirected_empty_and_duplicates() {
        let g = InfluenceGraph::from_undirected(3, []).unwrap();
        assert_eq!(g.arc_count(), 0);
        let err = InfluenceGraph::from_undirected(3, [(0, 1, 1), (1, 0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateArc { src: 1, dst: 0 });
        assert_eq!(
            InfluenceGraph::from_undirected(3, [(2, 2, 1)]).unwrap_err(),
            GraphError::SelfLoop(2)
        );
    }

    #[test]
    fn parallel_arcs_merge_by_summing() {
        let mut b = GraphBuilder::new(2);
        b.add_arc(0, 1, 2).unwrap();
        b.add_arc(0, 1, 3).unwrap();
        let g = b.build();
        assert_eq!(g.arc_count(), 1);
        assert_eq!(g.weight(NodeId(0), NodeId(1)), Some(5));
        assert!(b.insert_arc(0, 1, 1).is_err());
    }

    #[test]
    fn rejects_zero_weight_and_threshold() {
        let mut b = GraphBuilder::new(2);
        assert_eq!(b.add_arc(0, 1, 0).unwrap_err(), GraphError::ZeroWeight);
        assert_eq!(
            b.threshold(0, Threshold::Finite(0)).unwrap_err(),
            GraphError::ZeroThreshold
        );
        assert_eq!(Threshold::finite(0), Err(GraphError::ZeroThreshold));
        assert!(matches!(
            b.add_arc(0, 5, 1),
            Err(GraphError::NodeOutOfRange { node: 5, n: 2 })
        ));
    }

    #[test]
    fn weight_swap_reverses_and_exchanges() {
        let mut b = GraphBuilder::new(3);
        b.insert_arc(0, 1, 1).unwrap().insert_arc(0, 2, 2).unwrap();
        let g = b.build();
        let r = g.reverse_with_weight_swap().unwrap();
        assert_eq!(r.weight(NodeId(1), NodeId(0)), Some(2));
        assert_eq!(r.weight(NodeId(2), NodeId(0)), Some(1));
        assert_eq!(r.arc_count(), 2);
        assert_eq!(r.reverse_with_weight_swap().unwrap(), g);

        let mut b = GraphBuilder::new(2);
        b.insert_arc(0, 1, 3).unwrap();
        assert!(matches!(
            b.build().reverse_with_weight_swap(),
            Err(GraphError::SwapWeight { weight: 3, .. })
        ));
    }

    #[test]
    fn threshold_schemes() {
        use ThresholdScheme::*;
        assert_eq!(AverageIndegree.threshold_for(4), Ok(Threshold::Finite(2)));
        assert_eq!(AverageIndegree.threshold_for(5), Ok(Threshold::Finite(3)));
        assert_eq!(MajorityIndegree.threshold_for(4), Ok(Threshold::Finite(3)));
        assert_eq!(MajorityIndegree.threshold_for(5), Ok(Threshold::Finite(3)));
        assert_eq!(MaxIndegree.threshold_for(4), Ok(Threshold::Finite(4)));
        assert_eq!(MaxIndegree.threshold_for(0), Ok(Threshold::Unconvincible));
        assert_eq!(AverageIndegree.threshold_for(0), Ok(Threshold::Unconvincible));
        assert_eq!(Min.threshold_for(0), Ok(Threshold::Finite(1)));
        assert_eq!(Constant(3).threshold_for(0), Ok(Threshold::Finite(3)));
        assert_eq!(Constant(0).threshold_for(2), Err(GraphError::ZeroThreshold));
    }

    #[test]
    fn mass_arithmetic() {
        let mut b = GraphBuilder::new(3);
        b.threshold(0, Threshold::Finite(2)).unwrap();
        b.threshold(1, Threshold::Finite(3)).unwrap();
        b.threshold(2, Threshold::Unconvincible).unwrap();
        let g = b.build();
        assert_eq!(g.threshold_mass([]), Mass::Finite(0));
        assert_eq!(g.threshold_mass([NodeId(0), NodeId(1)]), Mass::Finite(5));
        assert_eq!(g.threshold_mass([NodeId(0), NodeId(2)]), Mass::Infinite);
        assert_eq!(g.finite_threshold_total(), 5);
        assert!(Mass::Finite(u64::MAX - 1) < Mass::Infinite);
    }

    #[test]
    fn isolated_nodes_become_unconvincible() {
        let g = InfluenceGraph::from_undirected(3, [(0, 1, 1)])
            .unwrap()
            .with_isolated_unconvincible();
        assert_eq!(g.threshold(NodeId(2)), Threshold::Unconvincible);
        assert_eq!(g.threshold(NodeId(0)), Threshold::Finite(1));
    }
}
