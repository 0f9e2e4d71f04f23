//! Influence games on social networks.
//!
//! A social network whose nodes carry activation thresholds spreads
//! influence under the linear-threshold rule. Pairing it with a quota turns
//! it into a simple game: a coalition wins when the set it eventually
//! activates holds at least `quota` convincible nodes. Power indices of that game
//! (Banzhaf, Shapley-Shubik) and derived scores (effort, width,
//! satisfaction) serve as centrality measures, next to the classical degree,
//! closeness and betweenness.

pub mod classical;
pub mod coalition;
pub mod datasets;
pub mod exact;
pub mod game;
pub mod graph;
pub mod io;
pub mod parallel;
pub mod sampling;
pub mod spread;

pub use coalition::Coalition;
pub use exact::{enumerate, enumerate_with, EffortScale, EnumerationOptions, GameReport, PlayerClass, PlayerTally};
pub use game::InfluenceGame;
pub use graph::{GraphBuilder, InfluenceGraph, Mass, NodeId, Threshold, ThresholdScheme};
pub use spread::{spread, spread_trace, Spreader};
