//! Exact Banzhaf and Shapley-Shubik indices and satisfaction for a small game.

use influence_games::{enumerate, GraphBuilder, InfluenceGame, NodeId, Threshold};

fn main() {
    let mut b = GraphBuilder::new(4);
    for (s, d, w) in [(0, 2, 2), (0, 3, 3), (1, 0, 1), (1, 3, 1), (2, 3, 1)] {
        b.insert_arc(s, d, w).unwrap();
    }
    b.threshold(3, Threshold::Finite(4)).unwrap();
    let game = InfluenceGame::new(b.build(), 4).unwrap();

    let r = enumerate(&game).unwrap();
    let (bz, ss, cs) = (r.banzhaf(), r.shapley_shubik(), r.satisfaction());
    println!("player  eta  kappa  Bz      SS      C_S");
    for i in 0..game.player_count() {
        let p = r.player(NodeId(i));
        println!(
            "{:<7} {:<4} {:<6} {:.4}  {:.4}  {:.4}",
            ["a", "b", "c", "d"][i],
            p.eta,
            r.kappa(NodeId(i)),
            bz[i],
            ss[i],
            cs[i]
        );
    }
    println!("winning coalitions: {} of {}", r.total_winning, r.coalition_count());
}
