//! Effort and width: how cheap and how small a winning coalition through a
//! player can be, under both effort scales.

use influence_games::{enumerate, EffortScale, GraphBuilder, InfluenceGame, NodeId, Threshold};

fn main() {
    let mut b = GraphBuilder::new(4);
    for (s, d, w) in [(0, 2, 2), (0, 3, 3), (1, 0, 1), (1, 3, 1), (2, 3, 1)] {
        b.insert_arc(s, d, w).unwrap();
    }
    b.threshold(3, Threshold::Finite(4)).unwrap();
    let game = InfluenceGame::new(b.build(), 4).unwrap();
    let r = enumerate(&game).unwrap();

    let mass = r.effort_centrality_with(EffortScale::ThresholdMass);
    let count = r.effort_centrality_with(EffortScale::ConvincibleCount);
    let width = r.width_centrality();
    for i in 0..4 {
        println!(
            "{}: effort {:?}, width {:?}, C_E {:.4} (mass) {:.4} (players), C_W {:.4}",
            ["a", "b", "c", "d"][i],
            r.effort(NodeId(i)),
            r.width(NodeId(i)),
            mass[i],
            count[i],
            width[i]
        );
    }
}
