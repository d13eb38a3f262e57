//! Graph ingestion, argument syntax and JSON rendering for the `chromabij`
//! command-line tool.

pub mod commands;
pub mod edgelist;
pub mod graph6;
pub mod json;

use std::path::Path;

use chromabij::{named_graph, Coloring, EdgeSubset, Graph, NamedGraph, Orientation};

pub use edgelist::{parse_edgelist, to_edgelist};
pub use graph6::{parse_graph6, to_graph6};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("graph6, byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("{0}")]
    Syntax(String),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] chromabij::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(chromabij::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    Graph6,
    EdgeList,
}

/// A parsed graph together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: SourceFormat,
    pub graph: Graph,
    pub name: Option<String>,
}

impl GraphDocument {
    /// Parses `text`, guessing the format when none is given: a first
    /// content line with two fields is an edge list header.
    pub fn parse(text: &str, format: Option<SourceFormat>) -> Result<Self, ParseError> {
        let format = format.unwrap_or_else(|| detect_format(text));
        let graph = match format {
            SourceFormat::EdgeList => parse_edgelist(text)?,
            SourceFormat::Graph6 => {
                let mut lines = text.lines().filter(|l| !l.trim().is_empty());
                let first = lines.next().unwrap_or("");
                if lines.next().is_some() {
                    return Err(ParseError::Syntax("expected a single graph6 line".into()));
                }
                parse_graph6(first)?
            }
        };
        Ok(GraphDocument {
            format,
            graph,
            name: None,
        })
    }

    pub fn serialize(&self) -> String {
        match self.format {
            SourceFormat::EdgeList => to_edgelist(&self.graph),
            SourceFormat::Graph6 => to_graph6(&self.graph) + "\n",
        }
    }

    /// Reads the file at `spec`, or falls back to a fixture name such as
    /// `fig1` or `butterfly` when no such file exists.
    pub fn load(spec: &str) -> Result<Self, CliError> {
        let path = Path::new(spec);
        if path.exists() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{spec}: {e}")))?;
            let format = match path.extension().and_then(|e| e.to_str()) {
                Some("g6") => Some(SourceFormat::Graph6),
                Some("el") => Some(SourceFormat::EdgeList),
                _ => None,
            };
            let mut doc = GraphDocument::parse(&text, format)?;
            doc.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
            return Ok(doc);
        }
        match spec.parse::<NamedGraph>() {
            Ok(named) => Ok(GraphDocument {
                format: SourceFormat::EdgeList,
                graph: named_graph(named),
                name: Some(named.name().to_string()),
            }),
            Err(_) => Err(CliError::Io(format!(
                "{spec}: no such file, and not a fixture name ({})",
                NamedGraph::ALL.map(|g| g.name()).join(", ")
            ))),
        }
    }
}

fn detect_format(text: &str) -> SourceFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .find(|l| !l.trim().is_empty())
        .unwrap_or("");
    if first.split_whitespace().count() >= 2 {
        SourceFormat::EdgeList
    } else {
        SourceFormat::Graph6
    }
}

/// `+` for the normal direction (low to high), `-` for the reverse.
pub fn parse_orientation(s: &str, g: &Graph) -> Result<Orientation, ParseError> {
    let dirs = s
        .trim()
        .chars()
        .map(|c| match c {
            '+' => Ok(true),
            '-' | '\u{2212}' => Ok(false),
            other => Err(ParseError::Syntax(format!(
                "orientation characters must be '+' or '-', found {other:?}"
            ))),
        })
        .collect::<Result<Vec<bool>, _>>()?;
    if dirs.len() != g.edge_count() {
        return Err(ParseError::Syntax(format!(
            "orientation has {} characters but the graph has {} edges",
            dirs.len(),
            g.edge_count()
        )));
    }
    Ok(Orientation::new(dirs))
}

pub fn format_orientation(o: &Orientation) -> String {
    o.directions().iter().map(|&d| if d { '+' } else { '-' }).collect()
}

/// Comma-separated 1-based edge indices; the empty string is `∅`.
pub fn parse_subset(s: &str, g: &Graph) -> Result<EdgeSubset, ParseError> {
    let mut out = EdgeSubset::new();
    for field in s.split(',').map(str::trim).filter(|f| !f.is_empty()) {
        let i: usize = field
            .parse()
            .map_err(|_| ParseError::Syntax(format!("{field:?} is not an edge index")))?;
        if i == 0 || i > g.edge_count() {
            return Err(ParseError::Syntax(format!(
                "edge index {i} is outside 1..={}",
                g.edge_count()
            )));
        }
        if !out.insert(i - 1) {
            return Err(ParseError::Syntax(format!("edge index {i} is repeated")));
        }
    }
    Ok(out)
}

pub fn subset_indices(s: &EdgeSubset) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

/// Comma-separated positive colors, one per vertex.
pub fn parse_coloring(s: &str, g: &Graph) -> Result<Coloring, ParseError> {
    let colors = s
        .split(',')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| {
            f.parse::<u32>()
                .map_err(|_| ParseError::Syntax(format!("{f:?} is not a color")))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    if colors.len() != g.vertex_count() {
        return Err(ParseError::Syntax(format!(
            "coloring has {} entries but the graph has {} vertices",
            colors.len(),
            g.vertex_count()
        )));
    }
    Coloring::new(colors).map_err(|e| ParseError::Syntax(e.to_string()))
}
