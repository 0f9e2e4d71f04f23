//! Line-oriented network text format.
//!
//! ```text
//! # comment
//! nodes <n>
//! label <id> <text>
//! threshold <id> <int>|inf
//! edge <src> <dst> <weight>
//! uedge <a> <b> <weight>
//! quota <q>
//! ```
//!
//! `nodes` must come before any directive that names a node. Thresholds
//! default to 1 and the quota is optional. `uedge` adds both directions.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::game::{GameError, InfluenceGame};
use crate::graph::{GraphBuilder, GraphError, InfluenceGraph, NodeId, Threshold};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{kind} at line {line}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("`{directive}` expects {expected}")]
    Arity {
        directive: &'static str,
        expected: &'static str,
    },
    #[error("invalid number `{0}`")]
    Number(String),
    #[error("`nodes` must precede node references")]
    MissingNodes,
    #[error("`nodes` given twice")]
    DuplicateNodes,
    #[error("`quota` given twice")]
    DuplicateQuota,
    #[error("node {node} out of range (n = {n})")]
    OutOfRange { node: usize, n: usize },
    #[error("self-loop")]
    SelfLoop,
    #[error("duplicate arc {src} -> {dst}")]
    DuplicateArc { src: usize, dst: usize },
    #[error("weight must be at least 1")]
    Weight,
    #[error("threshold must be at least 1 or `inf`")]
    Threshold,
    #[error("quota {quota} exceeds n + 1 = {max}")]
    Quota { quota: usize, max: usize },
    #[error("empty label")]
    EmptyLabel,
}

impl From<GraphError> for ParseErrorKind {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::NodeOutOfRange { node, n } => ParseErrorKind::OutOfRange { node, n },
            GraphError::SelfLoop(_) => ParseErrorKind::SelfLoop,
            GraphError::ZeroWeight => ParseErrorKind::Weight,
            GraphError::ZeroThreshold => ParseErrorKind::Threshold,
            GraphError::DuplicateArc { src, dst } => ParseErrorKind::DuplicateArc { src, dst },
            GraphError::SwapWeight { .. } => ParseErrorKind::Weight,
        }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}

/// A parsed network: the graph plus the quota, when the file states one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkFile {
    pub graph: InfluenceGraph,
    pub quota: Option<usize>,
}

impl NetworkFile {
    /// Game with `quota` if given, else the file's quota.
    pub fn game(&self, quota: Option<usize>) -> Option<Result<InfluenceGame, GameError>> {
        quota
            .or(self.quota)
            .map(|q| InfluenceGame::new(self.graph.clone(), q))
    }

    /// Canonical text: labels, non-default thresholds, then arcs sorted by
    /// `(src, dst)`, then the quota.
    pub fn emit(&self) -> String {
        emit_network(&self.graph, self.quota)
    }
}

pub fn emit_network(graph: &InfluenceGraph, quota: Option<usize>) -> String {
    let mut out = String::new();
    writeln!(out, "nodes {}", graph.node_count()).unwrap();
    for i in graph.nodes() {
        if let Some(l) = graph.label(i) {
            writeln!(out, "label {} {}", i, l).unwrap();
        }
    }
    for i in graph.nodes() {
        let t = graph.threshold(i);
        if t != Threshold::Finite(1) {
            writeln!(out, "threshold {} {}", i, t).unwrap();
        }
    }
    for a in graph.arcs() {
        writeln!(out, "edge {} {} {}", a.src, a.dst, a.weight).unwrap();
    }
    if let Some(q) = quota {
        writeln!(out, "quota {q}").unwrap();
    }
    out
}

fn number(tok: &str) -> Result<u64, ParseErrorKind> {
    tok.parse::<u64>()
        .map_err(|_| ParseErrorKind::Number(tok.to_owned()))
}

fn index(tok: &str) -> Result<usize, ParseErrorKind> {
    tok.parse::<usize>()
        .map_err(|_| ParseErrorKind::Number(tok.to_owned()))
}

pub fn parse_network(text: &str) -> Result<NetworkFile, ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    let mut quota: Option<usize> = None;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let err = |kind: ParseErrorKind| ParseError { line, kind };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (directive, rest) = content
            .split_once(char::is_whitespace)
            .map(|(d, r)| (d, r.trim()))
            .unwrap_or((content, ""));
        let args: Vec<&str> = rest.split_whitespace().collect();

        if directive == "nodes" {
            if builder.is_some() {
                return Err(err(ParseErrorKind::DuplicateNodes));
            }
            let [n] = args[..] else {
                return Err(err(ParseErrorKind::Arity {
                    directive: "nodes",
                    expected: "a node count",
                }));
            };
            builder = Some(GraphBuilder::new(index(n).map_err(err)?));
            continue;
        }

        let known = ["label", "threshold", "edge", "uedge", "quota"];
        if !known.contains(&directive) {
            return Err(err(ParseErrorKind::UnknownDirective(directive.to_owned())));
        }
        let b = builder.as_mut().ok_or_else(|| err(ParseErrorKind::MissingNodes))?;
        let n = b.node_count();
        let node = |tok: &str| -> Result<usize, ParseErrorKind> {
            let i = index(tok)?;
            if i >= n {
                Err(ParseErrorKind::OutOfRange { node: i, n })
            } else {
                Ok(i)
            }
        };

        match directive {
            "label" => {
                let (id, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                if id.is_empty() {
                    return Err(err(ParseErrorKind::Arity {
                        directive: "label",
                        expected: "a node id and a label",
                    }));
                }
                let id = node(id).map_err(err)?;
                let text = text.trim();
                if text.is_empty() {
                    return Err(err(ParseErrorKind::EmptyLabel));
                }
                b.label(id, text).map_err(|e| err(e.into()))?;
            }
            "threshold" => {
                let [id, value] = args[..] else {
                    return Err(err(ParseErrorKind::Arity {
                        directive: "threshold",
                        expected: "a node id and a value",
                    }));
                };
                let id = node(id).map_err(err)?;
                let t = if value == "inf" {
                    Threshold::Unconvincible
                } else {
                    Threshold::finite(number(value).map_err(err)?).map_err(|e| err(e.into()))?
                };
                b.threshold(id, t).map_err(|e| err(e.into()))?;
            }
            "edge" | "uedge" => {
                let [src, dst, w] = args[..] else {
                    return Err(err(ParseErrorKind::Arity {
                        directive: if directive == "edge" { "edge" } else { "uedge" },
                        expected: "two node ids and a weight",
                    }));
                };
                let (src, dst) = (node(src).map_err(err)?, node(dst).map_err(err)?);
                let w = number(w).map_err(err)?;
                b.insert_arc(src, dst, w).map_err(|e| err(e.into()))?;
                if directive == "uedge" {
                    b.insert_arc(dst, src, w).map_err(|e| err(e.into()))?;
                }
            }
            "quota" => {
                if quota.is_some() {
                    return Err(err(ParseErrorKind::DuplicateQuota));
                }
                let [q] = args[..] else {
                    return Err(err(ParseErrorKind::Arity {
                        directive: "quota",
                        expected: "a quota",
                    }));
                };
                let q = index(q).map_err(err)?;
                if q > n + 1 {
                    return Err(err(ParseErrorKind::Quota { quota: q, max: n + 1 }));
                }
                quota = Some(q);
            }
            _ => unreachable!(),
        }
    }

    let graph = builder
        .map(|b| b.build())
        .ok_or(ParseError {
            line: text.lines().count().max(1),
            kind: ParseErrorKind::MissingNodes,
        })?;
    Ok(NetworkFile { graph, quota })
}

pub fn read_network(path: impl AsRef<Path>) -> Result<NetworkFile, LoadError> {
    let path = path.as_ref();
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_network(&text).map_err(|source| LoadError::Parse { path: shown, source })
}

/// Looks up a node by its label, falling back to a numeric index.
pub fn resolve_node(graph: &InfluenceGraph, name: &str) -> Option<NodeId> {
    graph
        .nodes()
        .find(|&i| graph.label(i) == Some(name))
        .or_else(|| {
            name.parse::<usize>()
                .ok()
                .filter(|&i| i < graph.node_count())
                .map(NodeId)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_network("nodes 2\nedge 0 1 3\nquota 1").unwrap();
        assert_eq!(f.graph.node_count(), 2);
        assert_eq!(f.graph.weight(NodeId(0), NodeId(1)), Some(3));
        assert_eq!(f.graph.arc_count(), 1);
        assert_eq!(f.quota, Some(1));
    }

    #[test]
    fn comments_labels_thresholds() {
        let text = "# header\nnodes 3 # three\nlabel 0 Ada Lovelace\nthreshold 1 inf\nthreshold 2 4\nuedge 0 2 2\n";
        let f = parse_network(text).unwrap();
        assert_eq!(f.graph.label(NodeId(0)), Some("Ada Lovelace"));
        assert_eq!(f.graph.threshold(NodeId(1)), Threshold::Unconvincible);
        assert_eq!(f.graph.threshold(NodeId(2)), Threshold::Finite(4));
        assert_eq!(f.graph.threshold(NodeId(0)), Threshold::Finite(1));
        assert_eq!(f.graph.arc_count(), 2);
        assert_eq!(f.quota, None);
        assert_eq!(resolve_node(&f.graph, "Ada Lovelace"), Some(NodeId(0)));
        assert_eq!(resolve_node(&f.graph, "2"), Some(NodeId(2)));
    }

    #[test]
    fn self_loop_reports_line() {
        let e = parse_network("nodes 2\n\nedge 0 0 1").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.to_string(), "self-loop at line 3");
    }

    #[test]
    fn error_cases() {
        let kind = |t: &str| parse_network(t).unwrap_err().kind;
        assert_eq!(kind("nodes 2\nfoo 1"), ParseErrorKind::UnknownDirective("foo".into()));
        assert_eq!(kind("edge 0 1 1"), ParseErrorKind::MissingNodes);
        assert_eq!(kind("nodes 2\nedge 0 2 1"), ParseErrorKind::OutOfRange { node: 2, n: 2 });
        assert_eq!(kind("nodes 2\nedge 0 1 0"), ParseErrorKind::Weight);
        assert_eq!(kind("nodes 2\nthreshold 0 0"), ParseErrorKind::Threshold);
        assert_eq!(
            kind("nodes 2\nedge 0 1 1\nuedge 1 0 1"),
            ParseErrorKind::DuplicateArc { src: 0, dst: 1 }
        );
        assert_eq!(kind("nodes 2\nquota 4"), ParseErrorKind::Quota { quota: 4, max: 3 });
        assert_eq!(kind("nodes 2\nnodes 3"), ParseErrorKind::DuplicateNodes);
        assert_eq!(kind("nodes x"), ParseErrorKind::Number("x".into()));
        assert!(matches!(kind("nodes 2\nedge 0 1"), ParseErrorKind::Arity { .. }));
        assert_eq!(kind(""), ParseErrorKind::MissingNodes);
    }

    #[test]
    fn emit_is_canonical() {
        let text = "nodes 3\nuedge 2 0 1\nthreshold 0 inf\nlabel 1 b\nquota 2\n";
        let f = parse_network(text).unwrap();
        let emitted = f.emit();
        assert_eq!(
            emitted,
            "nodes 3\nlabel 1 b\nthreshold 0 inf\nedge 0 2 1\nedge 2 0 1\nquota 2\n"
        );
        let again = parse_network(&emitted).unwrap();
        assert_eq!(again, f);
        assert_eq!(again.emit(), emitted);
    }
}
