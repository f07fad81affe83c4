use super::count::hom_count;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::graphs::Graph;

/// `H/P`: blocks identified, parallel edges collapsed, loops recorded only
/// as a flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    pub simple: Graph,
    pub has_loop: bool,
    pub origin: Partition,
}

impl QuotientGraph {
    /// Homomorphisms into a simple graph; zero whenever a loop is present.
    pub fn hom_count(&self, g: &Graph) -> u128 {
        if self.has_loop {
            0
        } else {
            hom_count(&self.simple, g)
        }
    }
}

pub fn quotient(h: &Graph, p: &Partition) -> Result<QuotientGraph> {
    if p.len() != h.order() {
        return Err(Error::PartitionMismatch(h.order()));
    }
    let block = p.rgs();
    let mut simple = Graph::empty(p.block_count())?;
    let mut has_loop = false;
    for (u, v) in h.edges() {
        let (a, b) = (block[u], block[v]);
        if a == b {
            has_loop = true;
        } else {
            simple.add_edge(a, b)?;
        }
    }
    Ok(QuotientGraph {
        simple,
        has_loop,
        origin: p.clone(),
    })
}
