use std::fs;
use std::path::Path;

use shk_core::format::{parse_complex, parse_graph, parse_ideal, write_complex, write_graph, write_ideal};
use shk_core::{Graph, MonomialIdeal, SimplicialComplex};

use crate::CliError;

/// A parsed input file; the kind follows the extension.
#[derive(Clone, Debug)]
pub enum Input {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
    Graph(Graph),
}

impl Input {
    pub fn load(path: &Path) -> Result<Input, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        let kind = match ext {
            "cx" => "complex",
            "mi" => "ideal",
            "g" => "graph",
            _ => {
                return Err(CliError::Input(format!(
                    "{}: unknown extension; expected .cx, .mi or .g",
                    path.display()
                )))
            }
        };
        Input::parse(kind, &text).map_err(|e| match e {
            CliError::Core(inner) if !inner.is_capacity() => {
                CliError::Input(format!("{}: {inner}", path.display()))
            }
            other => other,
        })
    }

    pub fn parse(kind: &str, text: &str) -> Result<Input, CliError> {
        Ok(match kind {
            "complex" => Input::Complex(parse_complex(text)?),
            "ideal" => Input::Ideal(parse_ideal(text)?),
            "graph" => Input::Graph(parse_graph(text)?),
            other => return Err(CliError::Input(format!("unknown input kind `{other}`"))),
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Complex(_) => "complex",
            Input::Ideal(_) => "ideal",
            Input::Graph(_) => "graph",
        }
    }

    /// Canonical text in the kind's file format.
    pub fn canonical(&self) -> String {
        match self {
            Input::Complex(c) => write_complex(c),
            Input::Ideal(i) => write_ideal(i),
            Input::Graph(g) => write_graph(g),
        }
    }
}
