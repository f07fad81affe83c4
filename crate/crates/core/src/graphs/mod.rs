//! Simple undirected graphs stored as adjacency bit-rows.
//!
//! Every graph has at least one vertex and no loops. Rows are packed into
//! `u64` words so neighbourhood intersections are word operations; the
//! search paths (canonical labelling, enumeration) additionally require the
//! order to fit in a single word, see [`MAX_SEARCH_ORDER`].

mod canon;
mod family;
mod graph6;
mod metrics;
mod regular;
mod small;

pub use canon::{canonical_form, canonical_graph6, Canon};
pub use family::{construct_family, Family};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use metrics::{metrics, Coloring, Extent, GraphMetrics};
pub use regular::{enumerate_regular, enumerate_regular_range};
pub use small::all_connected_graphs;

use crate::error::{Error, Result};
use std::fmt;

/// Largest order accepted by canonical labelling and enumeration.
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Graph> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let words = order.div_ceil(64);
        Ok(Graph {
            order,
            words,
            bits: vec![0; words * order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u != v {
            self.set(u, v, false);
        }
        Ok(())
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u / 64, u % 64);
        let (wv, bv) = (v / 64, v % 64);
        if on {
            self.bits[u * self.words + wv] |= 1 << bv;
            self.bits[v * self.words + wu] |= 1 << bu;
        } else {
            self.bits[u * self.words + wv] &= !(1 << bv);
            self.bits[v * self.words + wu] &= !(1 << bu);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Single-word neighbourhood mask. Only valid for orders up to 64.
    #[inline]
    pub(crate) fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.order <= 64);
        self.bits[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.order).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            current: self.row(v).first().copied().unwrap_or(0),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order).expect("order is positive");
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order).expect("order is positive");
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check(v)?;
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &a) in vertices.iter().enumerate() {
            self.check(a)?;
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-colouring by BFS, `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.order];
        for s in 0..self.order {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            let mut i = 0;
            while i < queue.len() {
                let u = queue[i];
                i += 1;
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected with exactly `order - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order && self.is_connected()
    }

    /// Dimension of the cycle space: `m - n + c`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.components().len() - self.order
    }

    /// Bipartite double cover: vertex `x` keeps label `x`, its copy `x'` is
    /// `x + n`, and every edge `xy` lifts to `xy'` and `x'y`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.order;
        let mut g = Graph::empty(2 * n).expect("order is positive");
        for (x, y) in self.edges() {
            g.set(x, y + n, true);
            g.set(x + n, y, true);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", write_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

/// Iterates the set bits of a word.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_is_rejected() {
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn loops_and_out_of_range() {
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn adjacency_is_symmetric_across_words() {
        let mut g = Graph::empty(130).unwrap();
        g.add_edge(3, 127).unwrap();
        g.add_edge(129, 64).unwrap();
        assert!(g.has_edge(127, 3) && g.has_edge(64, 129));
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), vec![64]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(3, 127), (64, 129)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn double_cover_of_odd_cycle_is_connected() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let cover = c5.bipartite_double_cover();
        assert_eq!(cover.order(), 10);
        assert_eq!(cover.regular_degree(), Some(2));
        assert!(cover.is_connected() && cover.is_bipartite());
    }

    #[test]
    fn structural_predicates() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_tree() && p4.is_bipartite());
        assert_eq!(p4.cyclomatic_number(), 0);
        let k4 = p4.complement().complement();
        assert_eq!(k4, p4);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!two.is_connected() && !two.is_tree());
    }
}
