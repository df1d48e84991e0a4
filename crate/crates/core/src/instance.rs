use crate::error::{Error, Result};
use crate::graph::Graph;

/// A complete problem input: graph, facility count `p` and budget `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub p: usize,
    pub budget: u64,
}

impl Instance {
    pub fn new(graph: Graph, p: usize, budget: u64) -> Result<Self> {
        check_p(&graph, p)?;
        Ok(Instance { graph, p, budget })
    }
}

pub(crate) fn check_p(graph: &Graph, p: usize) -> Result<()> {
    let n = graph.vertex_count();
    if p == 0 || p > n {
        return Err(Error::Input(format!("p = {p} must lie in 1..={n}")));
    }
    Ok(())
}
