//! Linear-threshold spread on a four-node graph, round by round.

use influence_games::{spread, spread_trace, Coalition, GraphBuilder, InfluenceGraph, Threshold};

fn names(g: &InfluenceGraph, c: &Coalition) -> String {
    let v: Vec<String> = c.iter().map(|i| g.display_label(i)).collect();
    format!("{{{}}}", v.join(","))
}

fn main() {
    let mut b = GraphBuilder::new(4);
    for (k, l) in ["a", "b", "c", "d"].iter().enumerate() {
        b.label(k, *l).unwrap();
    }
    for (s, d, w) in [(0, 2, 2), (0, 3, 3), (1, 0, 1), (1, 3, 1), (2, 3, 1)] {
        b.insert_arc(s, d, w).unwrap();
    }
    b.threshold(3, Threshold::Finite(4)).unwrap();
    let g = b.build();

    for seed in [vec![0], vec![1], vec![2, 3]] {
        let x = Coalition::from_members(4, seed);
        let steps: Vec<String> = spread_trace(&g, &x).iter().map(|c| names(&g, c)).collect();
        println!("{} -> {}   F = {}", names(&g, &x), steps.join(" -> "), names(&g, &spread(&g, &x)));
    }
}
