use super::poly::{rat, BivarPoly};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use std::collections::BTreeMap;

/// Which family of extremal graphs a bound is aimed at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    /// Bipartite patterns, extremal graph `K_{d,d}`; only bipartite
    /// quotients contribute and all λ-exponents are even.
    Bipartite,
    /// Non-bipartite patterns, extremal graph `K_{d+1}`.
    NonBipartite,
}

impl Parity {
    pub fn of(h: &Graph) -> Parity {
        if h.is_bipartite() {
            Parity::Bipartite
        } else {
            Parity::NonBipartite
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Bipartite => "bipartite",
            Parity::NonBipartite => "non-bipartite",
        }
    }
}

/// A BFS spanning tree of a connected graph and the cycles closed by the
/// remaining edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleProfile {
    pub tree_edges: Vec<(usize, usize)>,
    /// Non-tree edges in lexicographic order.
    pub extra_edges: Vec<(usize, usize)>,
    /// Length of the cycle `extra_edges[i]` closes in the tree.
    pub cycle_lengths: Vec<usize>,
    /// Number of extra edges closing a cycle of each length.
    pub counts: BTreeMap<usize, usize>,
}

/// Tree from a breadth-first search rooted at vertex 0, neighbours visited in
/// increasing order.
pub fn cycle_profile(h: &Graph) -> Result<CycleProfile> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = h.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0];
    let mut i = 0;
    let mut tree_edges = Vec::new();
    while i < queue.len() {
        let u = queue[i];
        i += 1;
        for w in h.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                depth[w] = depth[u] + 1;
                tree_edges.push((u.min(w), u.max(w)));
                queue.push(w);
            }
        }
    }
    tree_edges.sort_unstable();
    let mut extra_edges = Vec::new();
    let mut cycle_lengths = Vec::new();
    let mut counts = BTreeMap::new();
    for (u, v) in h.edges() {
        if parent[u] == v || parent[v] == u {
            continue;
        }
        let (mut a, mut b, mut len) = (u, v, 1);
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
            } else {
                b = parent[b];
            }
            len += 1;
        }
        extra_edges.push((u, v));
        cycle_lengths.push(len);
        *counts.entry(len).or_insert(0) += 1;
    }
    Ok(CycleProfile {
        tree_edges,
        extra_edges,
        cycle_lengths,
        counts,
    })
}

/// Exact `hom(h, G)` as a spectral polynomial: `d^(n-1)` for a tree and
/// `λ^k d^(n-k)` for a connected graph with a single `k`-cycle.
pub fn unicyclic_hom_poly(h: &Graph) -> Result<BivarPoly> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = h.order() as u32;
    match h.cyclomatic_number() {
        0 => Ok(BivarPoly::from_terms(&[(0, n - 1, 1)])),
        1 => {
            let profile = cycle_profile(h)?;
            let k = profile.cycle_lengths[0] as u32;
            Ok(BivarPoly::from_terms(&[(k, n - k, 1)]))
        }
        c => Err(Error::Multicyclic(c)),
    }
}

/// `q_h` with `-hom(h, G) ≤ Σ_λ q_h(λ, d)` for every d-regular `G`:
/// `(m - n)·d^(n-1) - Σ_k c_k·λ^k·d^(n-k)`.
pub fn neg_hom_majorant(h: &Graph) -> Result<BivarPoly> {
    let profile = cycle_profile(h)?;
    if profile.extra_edges.is_empty() {
        return Err(Error::Tree);
    }
    let n = h.order() as u32;
    let surplus = profile.extra_edges.len() as i64 - 1;
    let mut q = BivarPoly::from_terms(&[(0, n - 1, surplus)]);
    for (&k, &c) in &profile.counts {
        let k = k as u32;
        q.add_term(k, n - k, rat(-(c as i64)));
    }
    Ok(q)
}

/// `T ∪ {e}` for the extra edge `e` closing the shortest odd cycle
/// (non-bipartite) or the shortest cycle (bipartite), ties broken by the
/// lexicographically smallest edge.
pub fn choose_unicyclic_subgraph(h: &Graph, parity: Parity) -> Result<Graph> {
    let profile = cycle_profile(h)?;
    if profile.extra_edges.is_empty() {
        return Err(Error::Tree);
    }
    let bipartite = h.is_bipartite();
    match parity {
        Parity::NonBipartite if bipartite => return Err(Error::NoOddCycle),
        Parity::Bipartite if !bipartite => return Err(Error::NotBipartite),
        _ => {}
    }
    let (len, e) = profile
        .extra_edges
        .iter()
        .zip(&profile.cycle_lengths)
        .filter(|(_, &len)| parity == Parity::Bipartite || len % 2 == 1)
        .map(|(&e, &len)| (len, e))
        .min()
        .expect("a non-bipartite graph has a fundamental odd cycle");
    debug_assert!(len >= 3);
    let mut edges = profile.tree_edges;
    edges.push(e);
    Graph::from_edges(h.order(), &edges)
}
