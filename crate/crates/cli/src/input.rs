use std::fs;
use std::path::PathBuf;

use clap::Args;
use semlab::search::SearchBudget;
use semlab::{parse_graph6, Graph, GraphFamilyTag};

use crate::exit::Failure;

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Graph in graph6 format
    #[arg(long, conflicts_with_all = ["file", "family"])]
    pub graph6: Option<String>,
    /// File with one graph6 string per line
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// Generated family, e.g. `prism:4`, `complete:7`, `cycle:5`,
    /// `complete-minus-alpha:8,2`, `tree-enumeration:6`
    #[arg(long)]
    pub family: Option<GraphFamilyTag>,
}

impl GraphSource {
    pub fn load(&self) -> Result<Vec<Graph>, Failure> {
        if let Some(text) = &self.graph6 {
            return parse_graph6(text).map(|g| vec![g]).map_err(|e| Failure::usage(format!("bad graph6 {text:?}: {e}")));
        }
        if let Some(path) = &self.file {
            let text =
                fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            return text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| parse_graph6(l).map_err(|e| Failure::usage(format!("bad graph6 {l:?}: {e}"))))
                .collect();
        }
        if let Some(tag) = &self.family {
            return tag.build().map_err(|e| Failure::usage(e.to_string()));
        }
        Err(Failure::usage("give one of --graph6, --file or --family"))
    }

    /// Exactly one graph, for commands that pair it with a certificate.
    pub fn load_one(&self) -> Result<Graph, Failure> {
        let mut graphs = self.load()?;
        if graphs.len() != 1 {
            return Err(Failure::usage(format!("expected one graph, got {}", graphs.len())));
        }
        Ok(graphs.remove(0))
    }
}

#[derive(Debug, Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Maximum number of search nodes per engine call
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Wall-clock limit in seconds per engine call
    #[arg(long, conflicts_with = "deterministic")]
    pub time_limit: Option<f64>,
    /// Refuse wall-clock limits so that reruns give identical output
    #[arg(long)]
    pub deterministic: bool,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        SearchBudget {
            node_limit: self.node_limit,
            time_limit: self.time_limit.map(std::time::Duration::from_secs_f64),
            deterministic: self.time_limit.is_none(),
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the certificate, witness or table to this file
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print JSON instead of text
    #[arg(long)]
    pub json: bool,
}

impl OutputArgs {
    pub fn write(&self, contents: &str) -> Result<(), Failure> {
        if let Some(path) = &self.out {
            fs::write(path, contents).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok(())
    }
}
