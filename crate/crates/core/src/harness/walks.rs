use crate::error::{Error, Result};
use crate::graphs::{canonical_graph6, enumerate_regular_range, Graph};
use crate::spectral::closed_walks_at_vertex;
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkReport {
    pub d: u32,
    /// Walk length.
    pub k: usize,
    pub n_max: usize,
    /// Closed `k`-walks at a vertex of `K_{d+1}`.
    pub clique_value: i128,
    pub max: i128,
    /// `(canonical graph6, vertex)` pairs attaining `max`.
    pub attained: Vec<(String, usize)>,
    /// `max` equals the clique value and is attained only inside `K_{d+1}`
    /// components.
    pub holds: bool,
}

impl WalkReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": "hdensity.walks/1",
            "d": self.d,
            "k": self.k,
            "n_max": self.n_max,
            "clique_value": self.clique_value.to_string(),
            "max": self.max.to_string(),
            "attained": self.attained.iter().map(|(g, v)| json!({"graph6": g, "vertex": v})).collect::<Vec<_>>(),
            "holds": self.holds,
        })
    }
}

/// The component of `v` is `K_{d+1}` exactly when it has `d + 1` vertices.
fn in_clique_component(g: &Graph, v: usize, d: usize) -> bool {
    g.components().iter().any(|c| c.contains(&v) && c.len() == d + 1)
}

/// Maximizes closed `k`-walks at a vertex over all `d`-regular graphs with
/// at most `n_max` vertices, for odd `k`.
pub fn vertexwise_walk_check(d: u32, k: usize, n_max: usize) -> Result<WalkReport> {
    if k.is_multiple_of(2) {
        return Err(Error::EvenWalkLength(k));
    }
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let du = d as usize;
    let corpus = enumerate_regular_range(du + 1..=n_max, du, false)?;
    let clique = Graph::from_edges(du + 1, &(0..=du).flat_map(|a| (a + 1..=du).map(move |b| (a, b))).collect::<Vec<_>>())?;
    let clique_value = closed_walks_at_vertex(&clique, 0, k)?;
    let per_graph: Vec<(String, Vec<i128>, Vec<bool>)> = corpus
        .par_iter()
        .map(|g| {
            let walks = (0..g.order()).map(|v| closed_walks_at_vertex(g, v, k)).collect::<Result<Vec<_>>>()?;
            let inside = (0..g.order()).map(|v| in_clique_component(g, v, du)).collect();
            Ok((canonical_graph6(g)?, walks, inside))
        })
        .collect::<Result<_>>()?;
    let max = per_graph.iter().flat_map(|(_, w, _)| w.iter().copied()).max().unwrap_or(0);
    let mut attained = Vec::new();
    let mut only_cliques = true;
    for (g6, walks, inside) in &per_graph {
        for (v, &w) in walks.iter().enumerate() {
            if w == max {
                attained.push((g6.clone(), v));
                only_cliques &= inside[v];
            }
        }
    }
    attained.sort();
    Ok(WalkReport {
        d,
        k,
        n_max,
        clique_value,
        max,
        holds: max == clique_value && only_cliques,
        attained,
    })
}
