//! Rebuilds the three published case-study tables from the bundled networks.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::golden::{compare, published, GoldenTable, TableDiff};
use super::table::{CentralityTable, OutputFormat};
use crate::classical::{betweenness_centrality, closeness_centrality, degree_centrality, Direction, MeasureError};
use crate::datasets::{base_network, load_builtin, CaseStudy, DatasetError};
use crate::exact::{enumerate_with, CapacityError, EffortScale, EnumerationOptions};
use crate::graph::InfluenceGraph;

#[derive(Debug, Error)]
pub enum ReproduceError {
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableId {
    Monkeys = 1,
    Dining = 2,
    StudentGov = 3,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::Monkeys, TableId::Dining, TableId::StudentGov];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn study(self) -> CaseStudy {
        match self {
            TableId::Monkeys => CaseStudy::Monkeys,
            TableId::Dining => CaseStudy::Dining,
            TableId::StudentGov => CaseStudy::StudentGov,
        }
    }

    pub fn golden(self) -> GoldenTable {
        published(self.number()).expect("bundled table")
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" => Ok(TableId::Monkeys),
            "2" => Ok(TableId::Dining),
            "3" => Ok(TableId::StudentGov),
            other => Err(format!("unknown table {other:?}, expected 1, 2 or 3")),
        }
    }
}

/// Effort columns are compared but their deviations are only reported.
pub fn is_reported_column(name: &str) -> bool {
    name.starts_with("C_E")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Reproduction {
    pub id: TableId,
    pub table: CentralityTable,
    pub diff: TableDiff,
}

impl Reproduction {
    /// The table followed by its diff against the published values.
    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = self.table.render(format);
        out.push('\n');
        out.push_str(&self.diff.to_csv());
        out
    }
}

fn labels(graph: &InfluenceGraph) -> Vec<String> {
    graph.nodes().map(|i| graph.display_label(i)).collect()
}

fn push_classical(
    table: &mut CentralityTable,
    golden: &GoldenTable,
    graph: &InfluenceGraph,
) -> Result<(), MeasureError> {
    let prec = |name: &str| golden.column_decimals(name).unwrap_or(4);
    for name in &golden.columns {
        let values = match name.as_str() {
            "C_D" | "C_D-" => degree_centrality(graph, Direction::In)?,
            "C_D+" => degree_centrality(graph, Direction::Out)?,
            "C_C" => closeness_centrality(graph)?,
            "C_B" => betweenness_centrality(graph)?,
            _ => continue,
        };
        table.push(name.clone(), values, prec(name));
    }
    Ok(())
}

/// Computes every column of a published table with the bundled data.
pub fn build_table(id: TableId, opts: &EnumerationOptions) -> Result<CentralityTable, ReproduceError> {
    let golden = id.golden();
    let study = id.study();
    let base = base_network(study)?.graph;
    let mut table = CentralityTable::new(golden.key.clone(), labels(&base));
    push_classical(&mut table, &golden, &base)?;

    let cases: Vec<Option<_>> = if study.cases().is_empty() {
        vec![None]
    } else {
        study.cases().iter().copied().map(Some).collect()
    };
    let mut per_case = Vec::new();
    for case in &cases {
        let game = load_builtin(study, *case)?;
        per_case.push((*case, enumerate_with(&game, opts)?));
    }
    let prec = |name: &str| golden.column_decimals(name).unwrap_or(4);
    for measure in ["Bz", "SS", "C_E", "C_S"] {
        for (case, report) in &per_case {
            let name = match case {
                Some(c) => format!("{measure}-{c}"),
                None => measure.to_string(),
            };
            let values = match measure {
                "Bz" => report.banzhaf(),
                "SS" => report.shapley_shubik(),
                "C_E" => report.effort_centrality_with(EffortScale::ConvincibleCount),
                _ => report.satisfaction(),
            };
            table.push(name.clone(), values, prec(&name));
        }
    }
    Ok(table)
}

pub fn reproduce(id: TableId, opts: &EnumerationOptions) -> Result<Reproduction, ReproduceError> {
    let table = build_table(id, opts)?;
    let diff = compare(&table, &id.golden(), is_reported_column);
    Ok(Reproduction { id, table, diff })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_three_has_published_shape() {
        let r = reproduce(TableId::StudentGov, &EnumerationOptions::default()).unwrap();
        assert_eq!(r.table.rows.len(), 11);
        assert_eq!(r.table.columns.len(), 8);
        let names: Vec<&str> = r.table.columns.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["C_D-", "C_D+", "C_C", "C_B", "Bz", "SS", "C_E", "C_S"]);
        assert_eq!(r.diff.cells.len(), 88);
    }

    #[test]
    fn table_ids() {
        assert_eq!("2".parse::<TableId>(), Ok(TableId::Dining));
        assert!("4".parse::<TableId>().is_err());
    }
}
