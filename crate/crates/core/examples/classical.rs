//! Degree, closeness and betweenness on the bundled networks.

use influence_games::classical::{betweenness_centrality, closeness_centrality, degree_centrality, Direction};
use influence_games::datasets::{base_network, CaseStudy};

fn main() {
    for study in CaseStudy::ALL {
        let g = base_network(study).unwrap().graph;
        let din = degree_centrality(&g, Direction::In).unwrap();
        let dout = degree_centrality(&g, Direction::Out).unwrap();
        let cc = closeness_centrality(&g).unwrap();
        let cb = betweenness_centrality(&g).unwrap();
        println!("{} ({} nodes, {} arcs)", study.name(), g.node_count(), g.arcs().count());
        println!("  node  C_D-   C_D+   C_C    C_B");
        for i in g.nodes() {
            let k = i.0;
            println!("  {:<5} {:.3}  {:.3}  {:.3}  {:.3}", g.display_label(i), din[k], dout[k], cc[k], cb[k]);
        }
    }
}
