//! Published reference tables and cell-by-cell comparison against them.
//!
//! A printed value `0.130` is taken to stand for anything that rounds to it,
//! so a computed value matches when it lies within half a unit in the last
//! printed place. The precision is read per cell from the printed string.

use std::fmt::Write as _;

use thiserror::Error;

use super::table::{csv_line, format_value, CentralityTable};

const TABLE1: &str = include_str!("../../data/golden/table1.csv");
const TABLE2: &str = include_str!("../../data/golden/table2.csv");
const TABLE3: &str = include_str!("../../data/golden/table3.csv");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoldenError {
    #[error("golden table is empty")]
    Empty,
    #[error("golden row {row} has {found} cells, header has {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("golden cell {value:?} in row {row} is not a number")]
    NotANumber { row: String, value: String },
}

/// A published cell: the printed text and its decimal places.
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedValue {
    pub text: String,
    pub value: f64,
    pub decimals: usize,
}

impl PrintedValue {
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        let value: f64 = text.parse().ok()?;
        let decimals = text.split_once('.').map_or(0, |(_, frac)| frac.len());
        Some(PrintedValue {
            text: text.to_string(),
            value,
            decimals,
        })
    }

    /// Half an ulp of the printed precision.
    pub fn tolerance(&self) -> f64 {
        0.5 * 10f64.powi(-(self.decimals as i32))
    }

    pub fn admits(&self, computed: f64) -> bool {
        // a hair of slack so that exact half-ulp distances are not lost to
        // binary rounding of the printed value itself
        (computed - self.value).abs() <= self.tolerance() * (1.0 + 1e-9)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenTable {
    pub key: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<PrintedValue>)>,
}

impl GoldenTable {
    /// Header line then one line per row; `#` lines are comments.
    pub fn parse(text: &str) -> Result<Self, GoldenError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header: Vec<String> = lines
            .next()
            .ok_or(GoldenError::Empty)?
            .split(',')
            .map(|s| s.trim().to_string())
            .collect();
        let mut rows = Vec::new();
        for (k, line) in lines.enumerate() {
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != header.len() {
                return Err(GoldenError::Ragged {
                    row: k + 1,
                    found: cells.len(),
                    expected: header.len(),
                });
            }
            let label = cells[0].trim().to_string();
            let values = cells[1..]
                .iter()
                .map(|c| {
                    PrintedValue::parse(c).ok_or_else(|| GoldenError::NotANumber {
                        row: label.clone(),
                        value: c.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push((label, values));
        }
        Ok(GoldenTable {
            key: header[0].clone(),
            columns: header[1..].to_vec(),
            rows,
        })
    }

    pub fn cell(&self, row: &str, column: &str) -> Option<&PrintedValue> {
        let c = self.columns.iter().position(|n| n == column)?;
        self.rows.iter().find(|(r, _)| r == row).map(|(_, v)| &v[c])
    }

    /// Widest printed precision of a column.
    pub fn column_decimals(&self, column: &str) -> Option<usize> {
        let c = self.columns.iter().position(|n| n == column)?;
        self.rows.iter().map(|(_, v)| v[c].decimals).max()
    }
}

/// Published table `1`, `2` or `3`.
pub fn published(table: u8) -> Option<GoldenTable> {
    let text = match table {
        1 => TABLE1,
        2 => TABLE2,
        3 => TABLE3,
        _ => return None,
    };
    Some(GoldenTable::parse(text).expect("bundled golden tables parse"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Match,
    Mismatch,
    /// Outside tolerance in a column whose deviations are reported rather
    /// than failed.
    Reported,
    /// No computed value for a published cell.
    Missing,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CellDiff {
    pub row: String,
    pub column: String,
    pub printed: PrintedValue,
    pub computed: Option<f64>,
    pub status: CellStatus,
}

impl CellDiff {
    pub fn delta(&self) -> Option<f64> {
        self.computed.map(|c| c - self.printed.value)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableDiff {
    pub cells: Vec<CellDiff>,
}

impl TableDiff {
    pub fn count(&self, status: CellStatus) -> usize {
        self.cells.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellDiff> {
        self.cells
            .iter()
            .filter(|c| matches!(c.status, CellStatus::Mismatch | CellStatus::Missing))
    }

    pub fn passes(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Restricted to the columns accepted by `keep`.
    pub fn columns<F: Fn(&str) -> bool>(&self, keep: F) -> TableDiff {
        TableDiff {
            cells: self.cells.iter().filter(|c| keep(&c.column)).cloned().collect(),
        }
    }

    /// One summary comment line, then a CSV listing of every cell that is not
    /// an exact match at printed precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# cells={} match={} mismatch={} reported={} missing={}",
            self.cells.len(),
            self.count(CellStatus::Match),
            self.count(CellStatus::Mismatch),
            self.count(CellStatus::Reported),
            self.count(CellStatus::Missing),
        );
        csv_line(
            &mut out,
            &["row", "column", "printed", "computed", "delta", "status"].map(String::from),
        );
        for c in self.cells.iter().filter(|c| c.status != CellStatus::Match) {
            let digits = c.printed.decimals + 3;
            csv_line(
                &mut out,
                &[
                    c.row.clone(),
                    c.column.clone(),
                    c.printed.text.clone(),
                    c.computed.map_or(String::new(), |v| format_value(v, digits)),
                    c.delta().map_or(String::new(), |d| format_value(d, digits)),
                    status_name(c.status).to_string(),
                ],
            );
        }
        out
    }
}

fn status_name(s: CellStatus) -> &'static str {
    match s {
        CellStatus::Match => "match",
        CellStatus::Mismatch => "mismatch",
        CellStatus::Reported => "reported",
        CellStatus::Missing => "missing",
    }
}

/// Compares every published cell with the computed table. Cells in columns
/// for which `reported` holds are never failures.
pub fn compare<F: Fn(&str) -> bool>(
    computed: &CentralityTable,
    golden: &GoldenTable,
    reported: F,
) -> TableDiff {
    let mut cells = Vec::new();
    for (row, printed_row) in &golden.rows {
        let r = computed.rows.iter().position(|x| x == row);
        for (column, printed) in golden.columns.iter().zip(printed_row) {
            let value = r.and_then(|r| computed.column(column).map(|c| c.values[r]));
            let status = match value {
                None => CellStatus::Missing,
                Some(v) if printed.admits(v) => CellStatus::Match,
                Some(_) if reported(column) => CellStatus::Reported,
                Some(_) => CellStatus::Mismatch,
            };
            cells.push(CellDiff {
                row: row.clone(),
                column: column.clone(),
                printed: printed.clone(),
                computed: value,
                status,
            });
        }
    }
    TableDiff { cells }
}
