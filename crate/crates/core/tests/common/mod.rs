//! Brute-force reference implementations shared by the integration tests.
//! Everything here works from the adjacency matrix and plain subset loops,
//! sharing no code with the library's sweep.

#![allow(dead_code)]

use influence_games::{GraphBuilder, InfluenceGame, InfluenceGraph, NodeId, Threshold};
use proptest::prelude::*;

/// Dense copy of a game.
pub struct Dense {
    pub n: usize,
    pub w: Vec<Vec<u64>>,
    /// `None` for unconvincible.
    pub f: Vec<Option<u64>>,
    pub q: usize,
}

impl Dense {
    pub fn new(game: &InfluenceGame) -> Self {
        let g = game.graph();
        let n = g.node_count();
        let mut w = vec![vec![0; n]; n];
        for a in g.arcs() {
            w[a.src.0][a.dst.0] = a.weight;
        }
        let f = g.nodes().map(|i| g.threshold(i).value()).collect();
        Dense { n, w, f, q: game.quota() }
    }

    /// Synchronous rounds until nothing changes.
    pub fn spread(&self, seed: u64) -> u64 {
        let mut active = seed;
        loop {
            let mut next = active;
            for v in 0..self.n {
                if active >> v & 1 == 1 {
                    continue;
                }
                let Some(f) = self.f[v] else { continue };
                let total: u64 = (0..self.n).filter(|&u| active >> u & 1 == 1).map(|u| self.w[u][v]).sum();
                if total >= f {
                    next |= 1 << v;
                }
            }
            if next == active {
                return active;
            }
            active = next;
        }
    }

    pub fn wins(&self, x: u64) -> bool {
        let f = self.spread(x);
        let counted = (0..self.n).filter(|&i| f >> i & 1 == 1 && self.f[i].is_some()).count();
        counted >= self.q
    }

    pub fn table(&self) -> Vec<bool> {
        (0..1u64 << self.n).map(|x| self.wins(x)).collect()
    }
}

pub struct Oracle {
    pub eta: Vec<u64>,
    pub kappa: Vec<u128>,
    pub win_containing: Vec<u64>,
    pub lose_excluding: Vec<u64>,
    /// `None` when no winning coalition with finite mass contains `i`.
    pub effort: Vec<Option<u64>>,
    pub width: Vec<Option<usize>>,
    pub total_winning: u64,
}

fn fact(k: usize) -> u128 {
    (1..=k as u128).product()
}

pub fn oracle(game: &InfluenceGame) -> Oracle {
    let d = Dense::new(game);
    let n = d.n;
    let win = d.table();
    let mut o = Oracle {
        eta: vec![0; n],
        kappa: vec![0; n],
        win_containing: vec![0; n],
        lose_excluding: vec![0; n],
        effort: vec![None; n],
        width: vec![None; n],
        total_winning: win.iter().filter(|&&b| b).count() as u64,
    };
    for x in 0..1u64 << n {
        let s = x.count_ones() as usize;
        let mass: Option<u64> = (0..n).filter(|&i| x >> i & 1 == 1).map(|i| d.f[i]).sum();
        for i in 0..n {
            let inside = x >> i & 1 == 1;
            if inside && win[x as usize] {
                o.win_containing[i] += 1;
                if !win[(x & !(1 << i)) as usize] {
                    o.eta[i] += 1;
                    o.kappa[i] += fact(s - 1) * fact(n - s);
                }
                if let Some(m) = mass {
                    o.effort[i] = Some(o.effort[i].map_or(m, |e: u64| e.min(m)));
                }
                o.width[i] = Some(o.width[i].map_or(s, |w: usize| w.min(s)));
            }
            if !inside && !win[x as usize] {
                o.lose_excluding[i] += 1;
            }
        }
    }
    o
}

/// Every simple path from `s` to `t`, as node lists.
fn simple_paths(adj: &[Vec<bool>], s: usize, t: usize) -> Vec<Vec<usize>> {
    fn walk(adj: &[Vec<bool>], t: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for v in 0..adj.len() {
            if adj[u][v] && !path.contains(&v) {
                path.push(v);
                walk(adj, t, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(adj, t, &mut vec![s], &mut out);
    out
}

/// Betweenness from an explicit listing of all simple paths, keeping the
/// shortest ones per ordered pair.
pub fn betweenness_by_paths(g: &InfluenceGraph) -> Vec<f64> {
    let n = g.node_count();
    let mut adj = vec![vec![false; n]; n];
    for a in g.arcs() {
        adj[a.src.0][a.dst.0] = true;
    }
    let mut score = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let paths = simple_paths(&adj, s, t);
            let Some(best) = paths.iter().map(Vec::len).min() else { continue };
            let shortest: Vec<&Vec<usize>> = paths.iter().filter(|p| p.len() == best).collect();
            for i in 0..n {
                if i == s || i == t {
                    continue;
                }
                let through = shortest.iter().filter(|p| p.contains(&i)).count();
                score[i] += through as f64 / shortest.len() as f64;
            }
        }
    }
    let norm = ((n - 1) * (n - 2)) as f64;
    score.into_iter().map(|b| b / norm).collect()
}

/// Raw description of a random game, kept small enough to enumerate.
#[derive(Clone, Debug)]
pub struct GameSpec {
    pub n: usize,
    pub arcs: Vec<(usize, usize, u64)>,
    pub thresholds: Vec<Option<u64>>,
    pub quota: usize,
}

impl GameSpec {
    pub fn graph(&self) -> InfluenceGraph {
        let mut b = GraphBuilder::new(self.n);
        for &(s, d, w) in &self.arcs {
            if s != d && !b.has_arc(s, d) {
                b.insert_arc(s, d, w).unwrap();
            }
        }
        for (i, t) in self.thresholds.iter().enumerate() {
            let t = match t {
                Some(v) => Threshold::Finite(*v),
                None => Threshold::Unconvincible,
            };
            b.threshold(i, t).unwrap();
        }
        b.build()
    }

    pub fn game(&self) -> InfluenceGame {
        InfluenceGame::new(self.graph(), self.quota).unwrap()
    }
}

pub fn game_spec(max_n: usize) -> impl Strategy<Value = GameSpec> {
    (1..=max_n).prop_flat_map(|n| {
        let arcs = prop::collection::vec((0..n, 0..n, 1u64..=4), 0..=(n * n).min(40));
        let thresholds = prop::collection::vec(
            prop_oneof![9 => (1u64..=5).prop_map(Some), 1 => Just(None)],
            n,
        );
        (Just(n), arcs, thresholds, 0..=n + 1).prop_map(|(n, arcs, thresholds, quota)| GameSpec {
            n,
            arcs,
            thresholds,
            quota,
        })
    })
}

pub fn ids(n: usize) -> impl Iterator<Item = NodeId> {
    (0..n).map(NodeId)
}
