use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

/// Which values DOT and text labels show for polynomial trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum At {
    Generic,
    #[value(name = "q=1")]
    QOne,
    #[value(name = "t=3")]
    TThree,
}

/// What a command produced: stdout text, plus a witness for stderr when a
/// verification failed.
pub struct Report {
    pub stdout: String,
    pub witness: Option<serde_json::Value>,
}

impl Report {
    pub fn ok(stdout: String) -> Self {
        Report {
            stdout,
            witness: None,
        }
    }
}

pub fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// JSON or text; `dot` is rejected for commands that do not produce trees.
pub fn emit<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<String> {
    match format {
        Format::Json => json(value),
        Format::Text => Ok(text()),
        Format::Dot => bail!("--format dot is only available for tree commands"),
    }
}

/// A tree node for DOT output: its id, its parent's id and its label.
pub struct DotNode {
    pub id: String,
    pub parent: Option<String>,
    pub label: String,
    pub edge: Option<String>,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn dot(name: &str, nodes: &[DotNode]) -> String {
    let mut out = format!(
        "digraph \"{}\" {{\n  node [shape=box, fontname=\"monospace\"];\n",
        escape(name)
    );
    for n in nodes {
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\"];",
            escape(&n.id),
            escape(&n.label)
        );
    }
    for n in nodes {
        if let Some(p) = &n.parent {
            match &n.edge {
                Some(e) => {
                    let _ = writeln!(
                        out,
                        "  \"{}\" -> \"{}\" [label=\"{}\"];",
                        escape(p),
                        escape(&n.id),
                        escape(e)
                    );
                }
                None => {
                    let _ = writeln!(out, "  \"{}\" -> \"{}\";", escape(p), escape(&n.id));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Node id for an `L`/`R` path; the parent drops the last step.
pub fn path_node(path: &str, label: String) -> DotNode {
    let id = |p: &str| format!("n{p}");
    DotNode {
        id: id(path),
        parent: (!path.is_empty()).then(|| id(&path[..path.len() - 1])),
        label,
        edge: None,
    }
}
