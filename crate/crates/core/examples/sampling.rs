//! Monte Carlo estimates next to the exact values on the Student Government
//! game. Results depend only on the seed, not on the thread count.

use influence_games::datasets::{load_builtin, CaseStudy};
use influence_games::enumerate;
use influence_games::sampling::{estimate_banzhaf_raw, estimate_shapley, SamplingOptions};

fn main() {
    let game = load_builtin(CaseStudy::StudentGov, None).unwrap();
    let exact = enumerate(&game).unwrap();
    let ss = exact.shapley_shubik();
    let half = (1u64 << (game.player_count() - 1)) as f64;

    let opts = SamplingOptions::new(100_000, 42);
    let sh = estimate_shapley(&game, &opts);
    let bz = estimate_banzhaf_raw(&game, &opts);
    println!("node  SS exact  SS est (se)        raw Bz exact  raw Bz est (se)");
    for i in 0..game.player_count() {
        println!(
            "{:<5} {:.4}    {:.4} ({:.4})    {:.4}        {:.4} ({:.4})",
            i + 1,
            ss[i],
            sh.estimates[i],
            sh.std_errors[i],
            exact.players[i].eta as f64 / half,
            bz.estimates[i],
            bz.std_errors[i]
        );
    }
    println!("pivots counted: {} over {} permutations", sh.hits.iter().sum::<u64>(), sh.samples);
}
