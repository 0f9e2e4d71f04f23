//! Exact game-theoretic centralities from one sweep over all `2^n`
//! coalitions.
//!
//! The sweep runs in two phases. The first evaluates every coalition once
//! and records the outcome in a bitmap indexed by coalition mask. The second
//! walks contiguous ranges of masks and tallies, per player, critical
//! coalitions by size, winning coalitions containing the player, losing
//! coalitions excluding it, and the lightest and smallest winning coalitions
//! containing it. Range tallies merge by addition and minimum, so any
//! partition of the mask space produces the same report.

use thiserror::Error;

use crate::game::InfluenceGame;
use crate::graph::{InfluenceGraph, Mass, NodeId};
use crate::parallel::{default_workers, for_each_chunk, map_jobs};

/// Default largest game accepted by [`enumerate`].
pub const DEFAULT_MAX_PLAYERS: usize = 30;

/// Hard limit: `34!` is the largest factorial representable in `u128`.
pub const MAX_SUPPORTED_PLAYERS: usize = 34;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CapacityError {
    #[error("exact enumeration supports at most {max} players, game has {n}")]
    TooManyPlayers { n: usize, max: usize },
}

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub max_players: usize,
    /// Number of contiguous coalition ranges; `None` picks one per worker.
    pub partitions: Option<usize>,
    /// Worker threads; `None` reads [`crate::parallel::WORKERS_ENV`].
    pub workers: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_players: DEFAULT_MAX_PLAYERS,
            partitions: None,
            workers: None,
        }
    }
}

impl EnumerationOptions {
    pub fn with_partitions(mut self, partitions: usize) -> Self {
        self.partitions = Some(partitions.max(1));
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers.max(1));
        self
    }
}

/// Exact per-player counts from the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayerTally {
    /// Number of coalitions in which the player is critical.
    pub eta: u64,
    /// `crit_by_size[s]`: critical coalitions of size `s`; index 0 is unused.
    pub crit_by_size: Vec<u64>,
    /// Winning coalitions containing the player.
    pub win_containing: u64,
    /// Losing coalitions not containing the player.
    pub lose_excluding: u64,
    /// Lightest threshold mass of a winning coalition containing the player.
    pub min_win_mass: Mass,
    /// Smallest winning coalition containing the player, if any.
    pub min_win_card: Option<usize>,
}

impl PlayerTally {
    fn new(n: usize) -> Self {
        PlayerTally {
            eta: 0,
            crit_by_size: vec![0; n + 1],
            win_containing: 0,
            lose_excluding: 0,
            min_win_mass: Mass::Infinite,
            min_win_card: None,
        }
    }

    pub fn merge(&mut self, other: &PlayerTally) {
        self.eta += other.eta;
        for (a, b) in self.crit_by_size.iter_mut().zip(&other.crit_by_size) {
            *a += b;
        }
        self.win_containing += other.win_containing;
        self.lose_excluding += other.lose_excluding;
        self.min_win_mass = self.min_win_mass.min(other.min_win_mass);
        self.min_win_card = match (self.min_win_card, other.min_win_card) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

/// Simple-game role of a player.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PlayerClass {
    /// Never critical.
    pub dummy: bool,
    /// Member of every winning coalition.
    pub vetoer: bool,
    /// Wins alone and is a vetoer.
    pub dictator: bool,
}

/// Denominator `w(N)` of the effort centrality.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EffortScale {
    /// Sum of the finite thresholds.
    #[default]
    ThresholdMass,
    /// Number of convincible players, as if every finite threshold were 1.
    /// Efforts above it clamp the centrality to 0.
    ConvincibleCount,
}

/// All exact tallies of one game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameReport {
    pub n: usize,
    pub quota: usize,
    pub players: Vec<PlayerTally>,
    pub total_winning: u64,
    /// `w(N)`: sum of the finite thresholds.
    pub finite_mass_total: u64,
    /// Players with a finite threshold.
    pub convincible_count: usize,
}

pub fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

impl GameReport {
    fn empty(n: usize, quota: usize, finite_mass_total: u64, convincible_count: usize) -> Self {
        GameReport {
            n,
            quota,
            players: (0..n).map(|_| PlayerTally::new(n)).collect(),
            total_winning: 0,
            finite_mass_total,
            convincible_count,
        }
    }

    /// Folds another range's tallies into this one.
    pub fn merge(&mut self, other: &GameReport) {
        assert_eq!((self.n, self.quota), (other.n, other.quota), "merging different games");
        for (a, b) in self.players.iter_mut().zip(&other.players) {
            a.merge(b);
        }
        self.total_winning += other.total_winning;
    }

    pub fn player(&self, i: NodeId) -> &PlayerTally {
        &self.players[i.0]
    }

    pub fn coalition_count(&self) -> u64 {
        1u64 << self.n
    }

    pub fn eta_total(&self) -> u64 {
        self.players.iter().map(|p| p.eta).sum()
    }

    /// Normalized Banzhaf index; all zeros when nobody is ever critical.
    pub fn banzhaf(&self) -> Vec<f64> {
        let total = self.eta_total();
        self.players
            .iter()
            .map(|p| if total == 0 { 0.0 } else { p.eta as f64 / total as f64 })
            .collect()
    }

    /// Shapley-Shubik value `sum over critical S of (|S|-1)! (n-|S|)!`.
    pub fn kappa(&self, i: NodeId) -> u128 {
        let n = self.n;
        self.players[i.0]
            .crit_by_size
            .iter()
            .enumerate()
            .skip(1)
            .map(|(s, &c)| c as u128 * factorial(s - 1) * factorial(n - s))
            .sum()
    }

    pub fn kappas(&self) -> Vec<u128> {
        (0..self.n).map(|i| self.kappa(NodeId(i))).collect()
    }

    /// `kappa(i) / n!`.
    pub fn shapley_shubik(&self) -> Vec<f64> {
        let denom = factorial(self.n) as f64;
        self.kappas().into_iter().map(|k| k as f64 / denom).collect()
    }

    /// `(|W_i| + |L_-i|) / 2^n`.
    pub fn satisfaction(&self) -> Vec<f64> {
        let denom = self.coalition_count() as f64;
        self.players
            .iter()
            .map(|p| (p.win_containing + p.lose_excluding) as f64 / denom)
            .collect()
    }

    /// Threshold mass of the lightest winning coalition containing `i`.
    pub fn effort(&self, i: NodeId) -> Mass {
        self.players[i.0].min_win_mass
    }

    /// `(w(N) - Effort(i)) / w(N)` with `w(N)` the threshold mass, or 0
    /// when the effort is infinite.
    pub fn effort_centrality(&self) -> Vec<f64> {
        self.effort_centrality_with(EffortScale::ThresholdMass)
    }

    pub fn effort_centrality_with(&self, scale: EffortScale) -> Vec<f64> {
        let total = match scale {
            EffortScale::ThresholdMass => self.finite_mass_total,
            EffortScale::ConvincibleCount => self.convincible_count as u64,
        };
        self.players
            .iter()
            .map(|p| match p.min_win_mass {
                Mass::Finite(e) if total > 0 => total.saturating_sub(e) as f64 / total as f64,
                _ => 0.0,
            })
            .collect()
    }

    /// Size of the smallest winning coalition containing `i`.
    pub fn width(&self, i: NodeId) -> Option<usize> {
        self.players[i.0].min_win_card
    }

    /// `(n - Width(i)) / n`, or 0 when no winning coalition contains `i`.
    pub fn width_centrality(&self) -> Vec<f64> {
        let n = self.n;
        self.players
            .iter()
            .map(|p| match p.min_win_card {
                Some(w) => (n - w) as f64 / n as f64,
                None => 0.0,
            })
            .collect()
    }

    pub fn classify(&self, i: NodeId) -> PlayerClass {
        let p = &self.players[i.0];
        let vetoer = p.win_containing == self.total_winning;
        PlayerClass {
            dummy: p.eta == 0,
            vetoer,
            dictator: vetoer && p.min_win_card == Some(1),
        }
    }
}

/// Sweep with default options.
pub fn enumerate(game: &InfluenceGame) -> Result<GameReport, CapacityError> {
    enumerate_with(game, &EnumerationOptions::default())
}

pub fn enumerate_with(
    game: &InfluenceGame,
    opts: &EnumerationOptions,
) -> Result<GameReport, CapacityError> {
    let n = game.player_count();
    let max = opts.max_players.min(MAX_SUPPORTED_PLAYERS);
    if n > max {
        return Err(CapacityError::TooManyPlayers { n, max });
    }
    let workers = opts.workers.unwrap_or_else(default_workers);
    let partitions = opts.partitions.unwrap_or(workers).max(1);

    let wins = WinTable::build(game, partitions, workers);
    let masses = MassTable::new(game.graph());
    let total = 1u64 << n;
    let parts = partitions.min(total as usize) as u64;
    let step = total.div_ceil(parts);

    let partials = map_jobs(parts as usize, workers, |k| {
        let lo = k as u64 * step;
        let hi = (lo + step).min(total);
        tally_range(game, &wins, &masses, lo, hi)
    });

    let convincible = game.graph().thresholds().iter().filter(|t| t.is_finite()).count();
    let mut report =
        GameReport::empty(n, game.quota(), game.graph().finite_threshold_total(), convincible);
    for partial in &partials {
        report.merge(partial);
    }
    Ok(report)
}

/// Outcome of every coalition, one bit per mask.
struct WinTable {
    words: Vec<u64>,
}

impl WinTable {
    fn build(game: &InfluenceGame, partitions: usize, workers: usize) -> Self {
        let n = game.player_count();
        let total = 1u64 << n;
        let quota = game.quota();
        let mut words = vec![0u64; total.div_ceil(64) as usize];
        if quota == 0 {
            words.fill(u64::MAX);
        } else if quota <= n {
            let per_chunk = words.len().div_ceil(partitions.max(1)).max(1);
            let chunks: Vec<&mut [u64]> = words.chunks_mut(per_chunk).collect();
            for_each_chunk(chunks, workers, |k, chunk| {
                let mut oracle = game.oracle();
                let base = (k * per_chunk) as u64 * 64;
                for (j, word) in chunk.iter_mut().enumerate() {
                    let start = base + j as u64 * 64;
                    let mut bits = 0u64;
                    for b in 0..64u64.min(total.saturating_sub(start)) {
                        if oracle.is_winning_mask(start + b) {
                            bits |= 1 << b;
                        }
                    }
                    *word = bits;
                }
            });
        }
        if total < 64 {
            words[0] &= (1u64 << total) - 1;
        }
        WinTable { words }
    }

    #[inline]
    fn wins(&self, mask: u64) -> bool {
        self.words[(mask >> 6) as usize] & (1 << (mask & 63)) != 0
    }
}

/// Threshold mass of a mask via 16-bit block lookups; `u64::MAX` = infinite.
struct MassTable {
    blocks: Vec<Vec<u64>>,
}

const INFINITE_MASS: u64 = u64::MAX;

impl MassTable {
    fn new(graph: &InfluenceGraph) -> Self {
        let n = graph.node_count();
        let blocks = (0..n.div_ceil(16))
            .map(|b| {
                let width = (n - b * 16).min(16);
                let mut table = vec![0u64; 1 << width];
                for m in 1usize..(1 << width) {
                    let low = m.trailing_zeros() as usize;
                    let t = graph.threshold(NodeId(b * 16 + low)).value();
                    let rest = table[m & (m - 1)];
                    table[m] = match t {
                        Some(v) if rest != INFINITE_MASS => rest + v,
                        _ => INFINITE_MASS,
                    };
                }
                table
            })
            .collect();
        MassTable { blocks }
    }

    #[inline]
    fn mass(&self, mask: u64) -> u64 {
        let mut total = 0u64;
        for (b, table) in self.blocks.iter().enumerate() {
            let m = table[((mask >> (16 * b)) & 0xffff) as usize];
            if m == INFINITE_MASS {
                return INFINITE_MASS;
            }
            total += m;
        }
        total
    }
}

fn tally_range(
    game: &InfluenceGame,
    wins: &WinTable,
    masses: &MassTable,
    lo: u64,
    hi: u64,
) -> GameReport {
    let n = game.player_count();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let stride = n + 1;
    let mut crit = vec![0u64; n * stride];
    let mut win_containing = vec![0u64; n];
    let mut lose_excluding = vec![0u64; n];
    let mut min_mass = vec![INFINITE_MASS; n];
    let mut min_card = vec![usize::MAX; n];
    let mut total_winning = 0u64;

    for x in lo..hi {
        if wins.wins(x) {
            total_winning += 1;
            let card = x.count_ones() as usize;
            let mass = masses.mass(x);
            let mut rest = x;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                win_containing[i] += 1;
                if mass < min_mass[i] {
                    min_mass[i] = mass;
                }
                if card < min_card[i] {
                    min_card[i] = card;
                }
                if !wins.wins(x ^ (1 << i)) {
                    crit[i * stride + card] += 1;
                }
            }
        } else {
            let mut rest = !x & full;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                lose_excluding[i] += 1;
            }
        }
    }

    let players = (0..n)
        .map(|i| {
            let crit_by_size = crit[i * stride..(i + 1) * stride].to_vec();
            PlayerTally {
                eta: crit_by_size.iter().sum(),
                crit_by_size,
                win_containing: win_containing[i],
                lose_excluding: lose_excluding[i],
                min_win_mass: if min_mass[i] == INFINITE_MASS {
                    Mass::Infinite
                } else {
                    Mass::Finite(min_mass[i])
                },
                min_win_card: (min_card[i] != usize::MAX).then_some(min_card[i]),
            }
        })
        .collect();
    GameReport {
        n,
        quota: game.quota(),
        players,
        total_winning,
        finite_mass_total: game.graph().finite_threshold_total(),
        convincible_count: game.graph().thresholds().iter().filter(|t| t.is_finite()).count(),
    }
}
