//! The three bundled case-study networks.
//!
//! The networks ship as text files under `data/` and are embedded at build
//! time. Every load re-checks the structural facts of each network, so a
//! corrupted transcription fails instead of silently skewing results.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::game::{GameError, InfluenceGame};
use crate::graph::{GraphError, InfluenceGraph, NodeId, Threshold, ThresholdScheme};
use crate::io::format::{parse_network, NetworkFile, ParseError};

const MONKEYS: &str = include_str!("../data/monkeys.net-txt");
const DINING: &str = include_str!("../data/dining.net-txt");
const DINING_PREFERENCES: &str = include_str!("../data/dining-preferences.net-txt");
const STUDENTGOV: &str = include_str!("../data/studentgov.net-txt");

/// Directory holding the bundled `.net-txt` files.
pub fn data_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("unknown builtin network `{0}` (expected monkeys, dining or studentgov)")]
    UnknownNetwork(String),
    #[error("unknown threshold case `{0}`")]
    UnknownCase(String),
    #[error("{study} has no threshold case {case}")]
    UnsupportedCase { study: CaseStudy, case: ThresholdCase },
    #[error("{0} needs a threshold case")]
    MissingCase(CaseStudy),
    #[error("bundled {study} file is malformed: {source}")]
    Parse { study: CaseStudy, source: ParseError },
    #[error("bundled {study} file failed a structural check: {check}")]
    Check { study: CaseStudy, check: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseStudy {
    Monkeys,
    Dining,
    StudentGov,
}

impl CaseStudy {
    pub const ALL: [CaseStudy; 3] = [CaseStudy::Monkeys, CaseStudy::Dining, CaseStudy::StudentGov];

    pub fn name(self) -> &'static str {
        match self {
            CaseStudy::Monkeys => "monkeys",
            CaseStudy::Dining => "dining",
            CaseStudy::StudentGov => "studentgov",
        }
    }

    pub fn file_name(self) -> String {
        format!("{}.net-txt", self.name())
    }

    /// Threshold cases the study defines; empty when thresholds are fixed.
    pub fn cases(self) -> &'static [ThresholdCase] {
        use ThresholdCase::*;
        match self {
            CaseStudy::Monkeys => &[C1, C2, C3, C4],
            CaseStudy::Dining => &[C1, C2, C3],
            CaseStudy::StudentGov => &[],
        }
    }

    pub fn quota(self) -> usize {
        match self {
            CaseStudy::Monkeys | CaseStudy::Dining => 14,
            CaseStudy::StudentGov => 6,
        }
    }

    fn text(self) -> &'static str {
        match self {
            CaseStudy::Monkeys => MONKEYS,
            CaseStudy::Dining => DINING,
            CaseStudy::StudentGov => STUDENTGOV,
        }
    }
}

impl fmt::Display for CaseStudy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseStudy {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseStudy::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| DatasetError::UnknownNetwork(s.to_owned()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThresholdCase {
    C1,
    C2,
    C3,
    C4,
}

impl ThresholdCase {
    pub fn name(self) -> &'static str {
        match self {
            ThresholdCase::C1 => "C1",
            ThresholdCase::C2 => "C2",
            ThresholdCase::C3 => "C3",
            ThresholdCase::C4 => "C4",
        }
    }
}

impl fmt::Display for ThresholdCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ThresholdCase {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().trim_start_matches('C') {
            "1" => Ok(ThresholdCase::C1),
            "2" => Ok(ThresholdCase::C2),
            "3" => Ok(ThresholdCase::C3),
            "4" => Ok(ThresholdCase::C4),
            _ => Err(DatasetError::UnknownCase(s.to_owned())),
        }
    }
}

/// Position of a Student Government member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Advisor,
    Minister,
    PrimeMinister,
}

impl Role {
    /// Weight of every arc sent by a member in this role.
    pub fn sender_weight(self) -> u64 {
        match self {
            Role::Advisor => 1,
            Role::Minister => 2,
            Role::PrimeMinister => 3,
        }
    }

    pub fn threshold(self, in_degree: usize) -> Threshold {
        let scheme = match self {
            Role::Advisor => ThresholdScheme::Min,
            Role::Minister => ThresholdScheme::AverageIndegree,
            Role::PrimeMinister => ThresholdScheme::MaxIndegree,
        };
        scheme
            .threshold_for(in_degree)
            .expect("role schemes never produce a zero threshold")
    }
}

/// Roles of Student Government members 1..=11, by node index.
pub const STUDENTGOV_ROLES: [Role; 11] = {
    use Role::*;
    [
        Minister,
        PrimeMinister,
        Minister,
        Minister,
        Minister,
        Minister,
        Minister,
        Minister,
        Advisor,
        Advisor,
        Advisor,
    ]
};

fn check(study: CaseStudy, ok: bool, what: impl Into<String>) -> Result<(), DatasetError> {
    if ok {
        Ok(())
    } else {
        Err(DatasetError::Check {
            study,
            check: what.into(),
        })
    }
}

fn parse(study: CaseStudy, text: &str) -> Result<NetworkFile, DatasetError> {
    parse_network(text).map_err(|source| DatasetError::Parse { study, source })
}

/// The original dining-table choices, before reversal.
pub fn dining_preferences() -> Result<InfluenceGraph, DatasetError> {
    Ok(parse(CaseStudy::Dining, DINING_PREFERENCES)?.graph)
}

/// The bundled network with its file thresholds and quota, after the
/// structural checks.
pub fn base_network(study: CaseStudy) -> Result<NetworkFile, DatasetError> {
    let file = parse(study, study.text())?;
    let g = &file.graph;
    check(study, file.quota == Some(study.quota()), "quota")?;
    match study {
        CaseStudy::Monkeys => {
            check(study, g.node_count() == 20, "20 nodes")?;
            check(study, g.arc_count() == 62, "31 undirected edges")?;
            let isolated: Vec<usize> = g
                .nodes()
                .filter(|&i| g.is_isolated(i))
                .map(|i| i.0 + 1)
                .collect();
            check(study, isolated == [2, 6, 16, 18, 19, 20], "isolated monkeys")?;
            check(
                study,
                g.arcs().all(|a| a.weight == 1 && g.weight(a.dst, a.src) == Some(1)),
                "symmetric unit weights",
            )?;
        }
        CaseStudy::Dining => {
            check(study, g.node_count() == 26, "26 nodes")?;
            check(study, g.arc_count() == 52, "52 arcs")?;
            for i in g.nodes() {
                let mut ws: Vec<u64> = g
                    .arcs()
                    .filter(|a| a.dst == i)
                    .map(|a| a.weight)
                    .collect();
                ws.sort_unstable();
                check(study, ws == [1, 2], format!("node {} in-arcs weighted 1 and 2", i.0 + 1))?;
            }
            let reversed = dining_preferences()?.reverse_with_weight_swap()?;
            check(
                study,
                reversed.arcs().eq(g.arcs()),
                "weight-swapped reversal of the preferences",
            )?;
        }
        CaseStudy::StudentGov => {
            check(study, g.node_count() == 11, "11 nodes")?;
            check(study, g.arc_count() == 41, "41 arcs")?;
            let expected = [1, 5, 1, 4, 1, 2, 3, 4, 1, 1, 1].map(Threshold::Finite);
            check(study, g.thresholds() == expected, "thresholds")?;
            for i in g.nodes() {
                let role = STUDENTGOV_ROLES[i.0];
                check(
                    study,
                    g.threshold(i) == role.threshold(g.in_degree(i)),
                    format!("role threshold of member {}", i.0 + 1),
                )?;
                check(
                    study,
                    g.out_arcs(i).all(|(_, w)| w == role.sender_weight()),
                    format!("sender weights of member {}", i.0 + 1),
                )?;
            }
        }
    }
    Ok(file)
}

/// Graph of a case study with the thresholds of `case` applied.
pub fn builtin_graph(
    study: CaseStudy,
    case: Option<ThresholdCase>,
) -> Result<InfluenceGraph, DatasetError> {
    let base = base_network(study)?.graph;
    match (study, case) {
        (CaseStudy::StudentGov, None) => Ok(base),
        (CaseStudy::StudentGov, Some(case)) => Err(DatasetError::UnsupportedCase { study, case }),
        (_, None) => Err(DatasetError::MissingCase(study)),
        (CaseStudy::Monkeys, Some(case)) => {
            let scheme = match case {
                ThresholdCase::C1 => ThresholdScheme::Min,
                ThresholdCase::C2 => ThresholdScheme::AverageIndegree,
                ThresholdCase::C3 => ThresholdScheme::MajorityIndegree,
                ThresholdCase::C4 => ThresholdScheme::MaxIndegree,
            };
            Ok(base.with_threshold_scheme(scheme)?.with_isolated_unconvincible())
        }
        (CaseStudy::Dining, Some(ThresholdCase::C4)) => Err(DatasetError::UnsupportedCase {
            study,
            case: ThresholdCase::C4,
        }),
        (CaseStudy::Dining, Some(case)) => {
            let k = case as u64 + 1;
            Ok(base.with_threshold_scheme(ThresholdScheme::Constant(k))?)
        }
    }
}

/// The case-study game with its fixed quota.
pub fn load_builtin(
    study: CaseStudy,
    case: Option<ThresholdCase>,
) -> Result<InfluenceGame, DatasetError> {
    Ok(InfluenceGame::new(builtin_graph(study, case)?, study.quota())?)
}

/// Node whose label is `label`.
pub fn node_by_label(graph: &InfluenceGraph, label: &str) -> Option<NodeId> {
    graph.nodes().find(|&i| graph.label(i) == Some(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_networks_pass_their_checks() {
        for study in CaseStudy::ALL {
            base_network(study).unwrap();
        }
    }

    #[test]
    fn case_selection() {
        assert!(load_builtin(CaseStudy::StudentGov, None).is_ok());
        assert!(matches!(
            load_builtin(CaseStudy::StudentGov, Some(ThresholdCase::C1)),
            Err(DatasetError::UnsupportedCase { .. })
        ));
        assert!(matches!(
            load_builtin(CaseStudy::Dining, Some(ThresholdCase::C4)),
            Err(DatasetError::UnsupportedCase { .. })
        ));
        assert!(matches!(
            load_builtin(CaseStudy::Monkeys, None),
            Err(DatasetError::MissingCase(_))
        ));
        assert!(matches!("zoo".parse::<CaseStudy>(), Err(DatasetError::UnknownNetwork(_))));
        assert!(matches!("C7".parse::<ThresholdCase>(), Err(DatasetError::UnknownCase(_))));
        assert_eq!("c3".parse::<ThresholdCase>().unwrap(), ThresholdCase::C3);
    }

    #[test]
    fn monkey_thresholds_per_case() {
        let three = NodeId(2); // monkey 3, degree 13
        let two = NodeId(1);
        let expect = [(ThresholdCase::C1, 1), (ThresholdCase::C2, 7), (ThresholdCase::C3, 7), (ThresholdCase::C4, 13)];
        for (case, t) in expect {
            let g = builtin_graph(CaseStudy::Monkeys, Some(case)).unwrap();
            assert_eq!(g.threshold(three), Threshold::Finite(t));
            assert_eq!(g.threshold(two), Threshold::Unconvincible);
        }
    }

    #[test]
    fn dining_constant_thresholds() {
        for (case, k) in [(ThresholdCase::C1, 1), (ThresholdCase::C2, 2), (ThresholdCase::C3, 3)] {
            let g = builtin_graph(CaseStudy::Dining, Some(case)).unwrap();
            assert!(g.thresholds().iter().all(|&t| t == Threshold::Finite(k)));
        }
    }
}
