//! Monte Carlo estimates of Banzhaf, Shapley-Shubik and satisfaction values.
//!
//! Samples are drawn in fixed batches of [`BATCH`]. Batch `k` uses stream `k`
//! of a ChaCha8 generator keyed by the master seed, and batches are merged as
//! integer hit counts, so a report depends only on the game, the sample count
//! and the seed, never on how many threads ran it.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalition::Coalition;
use crate::game::InfluenceGame;
use crate::graph::NodeId;
use crate::parallel::{default_workers, map_jobs};
use crate::spread::Spreader;

/// Samples per independently seeded batch.
pub const BATCH: u64 = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct EstimateReport {
    pub estimates: Vec<f64>,
    pub std_errors: Vec<f64>,
    /// Per-player indicator counts; `estimates[i] = hits[i] / samples`.
    pub hits: Vec<u64>,
    pub samples: u64,
    pub rng_seed: u64,
}

impl EstimateReport {
    fn from_hits(hits: Vec<u64>, samples: u64, rng_seed: u64) -> Self {
        let m = samples as f64;
        let estimates: Vec<f64> = hits.iter().map(|&h| h as f64 / m).collect();
        let std_errors = estimates
            .iter()
            .map(|&p| (p * (1.0 - p) / m).sqrt())
            .collect();
        EstimateReport {
            estimates,
            std_errors,
            hits,
            samples,
            rng_seed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingOptions {
    pub samples: u64,
    pub seed: u64,
    pub workers: Option<usize>,
}

impl SamplingOptions {
    pub fn new(samples: u64, seed: u64) -> Self {
        SamplingOptions {
            samples,
            seed,
            workers: None,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }
}

fn batch_rng(seed: u64, batch: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

fn random_coalition(rng: &mut ChaCha8Rng, n: usize, out: &mut Coalition) {
    *out = Coalition::empty(n);
    let mut bits = 0u64;
    for i in 0..n {
        if i % 64 == 0 {
            bits = rng.random();
        }
        if bits & 1 == 1 {
            out.insert(NodeId(i));
        }
        bits >>= 1;
    }
}

/// Runs `sample` once per sample across all batches and sums the per-player
/// hit vectors.
fn run_batches<F>(game: &InfluenceGame, opts: &SamplingOptions, sample: F) -> EstimateReport
where
    F: Fn(&mut Spreader, &mut ChaCha8Rng, &mut [u64]) + Sync,
{
    assert!(opts.samples >= 1, "at least one sample is required");
    let n = game.player_count();
    let batches = opts.samples.div_ceil(BATCH);
    let workers = opts.workers.unwrap_or_else(default_workers);
    let partials = map_jobs(batches as usize, workers, |k| {
        let k = k as u64;
        let count = BATCH.min(opts.samples - k * BATCH);
        let mut rng = batch_rng(opts.seed, k);
        let mut spreader = Spreader::new(game.graph());
        let mut hits = vec![0u64; n];
        for _ in 0..count {
            sample(&mut spreader, &mut rng, &mut hits);
        }
        hits
    });
    let mut hits = vec![0u64; n];
    for part in partials {
        for (h, p) in hits.iter_mut().zip(part) {
            *h += p;
        }
    }
    EstimateReport::from_hits(hits, opts.samples, opts.seed)
}

/// Estimates `eta(i) / 2^(n-1)`: the chance that `i` turns a uniformly
/// random coalition without `i` from losing to winning.
pub fn estimate_banzhaf_raw(game: &InfluenceGame, opts: &SamplingOptions) -> EstimateReport {
    let n = game.player_count();
    let q = game.quota();
    run_batches(game, opts, |sp, rng, hits| {
        let mut x = Coalition::empty(n);
        random_coalition(rng, n, &mut x);
        let wins = sp.reaches(&x, q);
        for i in 0..n {
            let id = NodeId(i);
            // x without i and x with i are both uniform given the other bits
            let critical = if x.contains(id) {
                wins && !sp.reaches(&x.without(id), q)
            } else {
                !wins && sp.reaches(&x.with(id), q)
            };
            hits[i] += critical as u64;
        }
    })
}

/// Estimates the Shapley-Shubik index from random orderings. The pivotal
/// player of an ordering is found by bisection over its prefixes, which is
/// valid because winning is monotone. When the empty coalition wins or the
/// grand coalition loses no ordering has a pivot and all estimates are 0.
pub fn estimate_shapley(game: &InfluenceGame, opts: &SamplingOptions) -> EstimateReport {
    let n = game.player_count();
    let q = game.quota();
    let trivial = {
        let mut sp = Spreader::new(game.graph());
        sp.reaches(&Coalition::empty(n), q) || !sp.reaches(&Coalition::full(n), q)
    };
    run_batches(game, opts, |sp, rng, hits| {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        if trivial {
            return;
        }
        // smallest k with order[..k] winning; k >= 1 since the empty set loses
        let (mut lo, mut hi) = (0usize, n);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            let prefix = Coalition::from_members(n, order[..mid].iter().copied());
            if sp.reaches(&prefix, q) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hits[order[hi - 1]] += 1;
    })
}

/// Estimates `(|W_i| + |L_-i|) / 2^n` from uniform coalitions.
pub fn estimate_satisfaction(game: &InfluenceGame, opts: &SamplingOptions) -> EstimateReport {
    let n = game.player_count();
    let q = game.quota();
    run_batches(game, opts, |sp, rng, hits| {
        let mut x = Coalition::empty(n);
        random_coalition(rng, n, &mut x);
        let wins = sp.reaches(&x, q);
        for (i, h) in hits.iter_mut().enumerate() {
            *h += (x.contains(NodeId(i)) == wins) as u64;
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GraphBuilder, InfluenceGraph, Threshold};

    fn g1_game() -> InfluenceGame {
        let mut b = GraphBuilder::new(4);
        for (s, d, w) in [(0, 2, 2), (0, 3, 3), (1, 0, 1), (1, 3, 1), (2, 3, 1)] {
            b.insert_arc(s, d, w).unwrap();
        }
        b.threshold(3, Threshold::Finite(4)).unwrap();
        InfluenceGame::new(b.build(), 4).unwrap()
    }

    #[test]
    fn critical_player_found_every_time() {
        let opts = SamplingOptions::new(500, 7);
        let bz = estimate_banzhaf_raw(&g1_game(), &opts);
        assert_eq!(bz.estimates, vec![0.0, 1.0, 0.0, 0.0]);
        assert_eq!(bz.std_errors, vec![0.0; 4]);
        let ss = estimate_shapley(&g1_game(), &opts);
        assert_eq!(ss.hits, vec![0, 500, 0, 0]);
        let cs = estimate_satisfaction(&g1_game(), &opts);
        assert_eq!(cs.estimates[1], 1.0);
    }

    #[test]
    fn dictator_takes_every_pivot() {
        // only player 0 reaches the others, and the quota is everybody
        let mut b = GraphBuilder::new(5);
        for i in 1..5 {
            b.insert_arc(0, i, 1).unwrap();
        }
        let game = InfluenceGame::new(b.build(), 5).unwrap();
        let ss = estimate_shapley(&game, &SamplingOptions::new(300, 1));
        assert_eq!(ss.hits, vec![300, 0, 0, 0, 0]);
    }

    #[test]
    fn trivial_games_have_no_pivots() {
        let game = InfluenceGame::new(InfluenceGraph::empty(3), 0).unwrap();
        let ss = estimate_shapley(&game, &SamplingOptions::new(10, 1));
        assert_eq!(ss.hits, vec![0, 0, 0]);
    }

    #[test]
    fn independent_of_worker_count() {
        let game = InfluenceGame::new(InfluenceGraph::empty(6), 3).unwrap();
        let samples = 3 * BATCH + 17;
        let one = estimate_shapley(&game, &SamplingOptions::new(samples, 42).with_workers(1));
        let four = estimate_shapley(&game, &SamplingOptions::new(samples, 42).with_workers(4));
        assert_eq!(one, four);
        assert_eq!(one.hits.iter().sum::<u64>(), samples);
        let other = estimate_shapley(&game, &SamplingOptions::new(samples, 43).with_workers(1));
        assert_ne!(one.hits, other.hits);
    }
}
