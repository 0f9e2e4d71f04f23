//! Per-node result tables and their CSV and markdown renderings.
//!
//! Values are rounded half-to-even at the column's precision; Rust's float
//! formatting already rounds exact decimal ties to even.

use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq)]
pub struct Column {
    pub name: String,
    pub values: Vec<f64>,
    /// Decimal places shown.
    pub precision: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentralityTable {
    /// Header of the label column.
    pub key: String,
    pub rows: Vec<String>,
    pub columns: Vec<Column>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Markdown,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "md" | "markdown" => Ok(OutputFormat::Markdown),
            other => Err(format!("unknown format {other:?}, expected csv or md")),
        }
    }
}

impl CentralityTable {
    pub fn new(key: impl Into<String>, rows: Vec<String>) -> Self {
        CentralityTable {
            key: key.into(),
            rows,
            columns: Vec::new(),
        }
    }

    /// # Panics
    /// If `values` does not hold one entry per row.
    pub fn push(&mut self, name: impl Into<String>, values: Vec<f64>, precision: usize) -> &mut Self {
        let name = name.into();
        assert_eq!(values.len(), self.rows.len(), "column {name} has the wrong length");
        self.columns.push(Column {
            name,
            values,
            precision,
        });
        self
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    /// Every column rendered at `precision` decimals instead of its own.
    pub fn with_precision(mut self, precision: usize) -> Self {
        for c in &mut self.columns {
            c.precision = precision;
        }
        self
    }

    fn header(&self) -> Vec<String> {
        std::iter::once(self.key.clone())
            .chain(self.columns.iter().map(|c| c.name.clone()))
            .collect()
    }

    fn cells(&self, row: usize) -> Vec<String> {
        std::iter::once(self.rows[row].clone())
            .chain(self.columns.iter().map(|c| format_value(c.values[row], c.precision)))
            .collect()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Markdown => self.to_markdown(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        csv_line(&mut out, &self.header());
        for r in 0..self.rows.len() {
            csv_line(&mut out, &self.cells(r));
        }
        out
    }

    /// Pipe table with every column padded to its widest cell; labels are
    /// left-aligned and numbers right-aligned.
    pub fn to_markdown(&self) -> String {
        let header = self.header();
        let body: Vec<Vec<String>> = (0..self.rows.len()).map(|r| self.cells(r)).collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                body.iter()
                    .map(|row| row[c].chars().count())
                    .chain(std::iter::once(header[c].chars().count().max(3)))
                    .max()
                    .unwrap_or(3)
            })
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String]| {
            out.push('|');
            for (c, cell) in cells.iter().enumerate() {
                if c == 0 {
                    let _ = write!(out, " {:<w$} |", md_escape(cell), w = widths[c]);
                } else {
                    let _ = write!(out, " {:>w$} |", md_escape(cell), w = widths[c]);
                }
            }
            out.push('\n');
        };
        line(&mut out, &header);
        out.push('|');
        for (c, w) in widths.iter().enumerate() {
            if c == 0 {
                let _ = write!(out, " :{} |", "-".repeat(w - 1));
            } else {
                let _ = write!(out, " {}: |", "-".repeat(w - 1));
            }
        }
        out.push('\n');
        for row in &body {
            line(&mut out, row);
        }
        out
    }
}

pub fn format_value(v: f64, precision: usize) -> String {
    let s = format!("{v:.precision$}");
    // negative zero from rounding tiny negatives
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// RFC 4180: fields holding a comma, quote or line break are quoted, with
/// embedded quotes doubled.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub(crate) fn csv_line(out: &mut String, cells: &[String]) {
    for (k, c) in cells.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&csv_field(c));
    }
    out.push('\n');
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CentralityTable {
        let mut t = CentralityTable::new("node", vec!["a".into(), "b, c".into()]);
        t.push("Bz", vec![0.125, 1.0], 2).push("SS", vec![0.0625, -1e-9], 3);
        t
    }

    #[test]
    fn csv_rounds_and_quotes() {
        assert_eq!(sample().to_csv(), "node,Bz,SS\na,0.12,0.062\n\"b, c\",1.00,0.000\n");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn markdown_is_aligned() {
        let md = sample().to_markdown();
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines[0], "| node |   Bz |    SS |");
        assert_eq!(lines[1], "| :--- | ---: | ----: |");
        assert_eq!(lines[3], "| b, c | 1.00 | 0.000 |");
        assert!(lines.iter().all(|l| l.len() == lines[0].len()));
    }

    #[test]
    fn half_even_ties() {
        assert_eq!(format_value(0.125, 2), "0.12");
        assert_eq!(format_value(0.375, 2), "0.38");
        assert_eq!(format_value(2.5, 0), "2");
    }

    #[test]
    fn format_names() {
        assert_eq!("md".parse::<OutputFormat>(), Ok(OutputFormat::Markdown));
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
