//! Graph arguments: `g6:<graph6>`, `@<file>`, spec syntax (`S5+S2`,
//! `122K2`, `C5`), or a bare graph6 string, tried in that order. A file holds
//! one graph in either text form on its first non-empty line.

use std::fs;

use ramsey_core::classify::TargetProfile;
use ramsey_core::graph6::parse_graph6;
use ramsey_core::spec::GraphSpec;
use ramsey_core::Graph;

use crate::CliError;

/// A parsed graph argument.
#[derive(Debug, Clone)]
pub enum GraphInput {
    Spec(GraphSpec),
    Graph6(Graph),
}

impl GraphInput {
    pub fn parse(arg: &str) -> Result<Self, CliError> {
        if let Some(text) = arg.strip_prefix("g6:") {
            return parse_graph6(text)
                .map(GraphInput::Graph6)
                .map_err(|e| CliError::usage(format!("graph6 argument `{text}`: {e}")));
        }
        if let Some(path) = arg.strip_prefix('@') {
            let body = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read `{path}`: {e}")))?;
            let line = body
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| CliError::usage(format!("`{path}` contains no graph")))?;
            if line.starts_with('@') {
                return Err(CliError::usage(format!("`{path}`: nested file reference")));
            }
            return Self::parse(line);
        }
        let spec_err = match arg.parse::<GraphSpec>() {
            Ok(spec) => return Ok(GraphInput::Spec(spec)),
            Err(e) => e,
        };
        match parse_graph6(arg) {
            Ok(g) => Ok(GraphInput::Graph6(g)),
            Err(_) => Err(CliError::usage(format!(
                "`{arg}` is neither spec syntax nor graph6 ({spec_err})"
            ))),
        }
    }

    pub fn graph(&self) -> Result<Graph, CliError> {
        match self {
            GraphInput::Spec(s) => s.build().map_err(CliError::from),
            GraphInput::Graph6(g) => Ok(g.clone()),
        }
    }

    /// Component profile; spec inputs may exceed the vertex cap.
    pub fn profile(&self) -> Result<TargetProfile, CliError> {
        match self {
            GraphInput::Spec(s) => TargetProfile::from_spec(s).map_err(CliError::from),
            GraphInput::Graph6(g) => Ok(TargetProfile::from_graph(g)),
        }
    }
}

pub fn graph(arg: &str) -> Result<Graph, CliError> {
    GraphInput::parse(arg)?.graph()
}
