//! Writes a network in the text format, reads it back and scores it.

use influence_games::io::format::{emit_network, read_network};
use influence_games::{enumerate, GraphBuilder, Threshold};

fn main() {
    let mut b = GraphBuilder::new(5);
    for (k, name) in ["hub", "left", "right", "tail", "loner"].iter().enumerate() {
        b.label(k, *name).unwrap();
    }
    for (s, d, w) in [(0, 1, 2), (0, 2, 2), (1, 3, 1), (2, 3, 1), (3, 0, 1)] {
        b.insert_arc(s, d, w).unwrap();
    }
    b.threshold(0, Threshold::Finite(1)).unwrap();
    b.threshold(3, Threshold::Finite(2)).unwrap();
    b.threshold(4, Threshold::Unconvincible).unwrap();
    let text = emit_network(&b.build(), Some(3));
    println!("{text}");

    let path = std::env::temp_dir().join("influence-games-example.net-txt");
    std::fs::write(&path, &text).unwrap();
    let file = read_network(&path).unwrap();
    let game = file.game(None).unwrap().unwrap();
    let r = enumerate(&game).unwrap();
    for (i, (bz, ss)) in r.banzhaf().iter().zip(r.shapley_shubik()).enumerate() {
        println!("{:<6} Bz {:.4}  SS {:.4}", game.graph().label(influence_games::NodeId(i)).unwrap(), bz, ss);
    }
    std::fs::remove_file(path).ok();
}
