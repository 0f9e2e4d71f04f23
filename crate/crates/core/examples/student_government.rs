//! Dummies, vetoers and dictators of the Student Government game, and how
//! they change with the quota.

use influence_games::datasets::{load_builtin, CaseStudy};
use influence_games::{enumerate, NodeId};

fn main() {
    let base = load_builtin(CaseStudy::StudentGov, None).unwrap();
    for quota in [1, 3, 6, 9, 11] {
        let game = base.with_quota(quota).unwrap();
        let r = enumerate(&game).unwrap();
        let pick = |f: &dyn Fn(NodeId) -> bool| -> Vec<String> {
            game.graph().nodes().filter(|&i| f(i)).map(|i| game.graph().display_label(i)).collect()
        };
        println!(
            "q={quota:<2} winning={:<5} dummies={:?} vetoers={:?} dictators={:?}",
            r.total_winning,
            pick(&|i| r.classify(i).dummy),
            pick(&|i| r.classify(i).vetoer),
            pick(&|i| r.classify(i).dictator),
        );
    }
}
