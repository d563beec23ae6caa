use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use ramsey_core::structures::{load_graph, load_model, Graph};

#[derive(Args, Clone)]
pub struct InstanceArgs {
    /// DIMACS edge file; `e v v` lines mark vertices allowed in the set
    #[arg(long, required_unless_present = "model", conflicts_with = "model")]
    pub graph: Option<PathBuf>,
    /// Relational model file (`n <size>`, `S <a> <b>`)
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Treat every vertex as reflexive (plain simple-graph input)
    #[arg(long)]
    pub loops_free: bool,
}

pub struct Instance {
    pub graph: Graph,
    /// DIMACS numbers vertices from 1, model files from 0.
    one_based: bool,
}

impl Instance {
    pub fn load(args: &InstanceArgs) -> Result<Self> {
        let (graph, one_based) = match (&args.graph, &args.model) {
            (Some(path), _) => (load_graph(path).with_context(|| format!("reading {}", path.display()))?, true),
            (None, Some(path)) => {
                let m = load_model(path).with_context(|| format!("reading {}", path.display()))?;
                (m.to_graph(), false)
            }
            (None, None) => unreachable!("clap requires one input"),
        };
        let graph = if args.loops_free { graph.with_all_eligible() } else { graph };
        Ok(Instance { graph, one_based })
    }

    /// Vertex id as numbered in the input file.
    pub fn external_id(&self, v: usize) -> usize {
        if self.one_based {
            v + 1
        } else {
            v
        }
    }
}
