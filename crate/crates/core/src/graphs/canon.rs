//! Canonical labelling by individualisation and refinement.
//!
//! The search tree starts from the degree partition, refines to an equitable
//! ordered partition, and branches on the first smallest non-singleton cell.
//! Every leaf is a discrete partition, i.e. a labelling; the canonical form
//! is the leaf whose relabelled upper triangle (graph6 bit order) is
//! lexicographically smallest. Leaves that compare equal expose
//! automorphisms, which prune sibling branches in the same orbit.

use super::{bits, write_graph6, Graph, MAX_SEARCH_ORDER};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Canon {
    /// `labeling[i]` is the original vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Upper triangle of the canonical graph, most significant bit first.
    pub key: Vec<u64>,
    /// Automorphisms discovered during the search (not necessarily a full
    /// generating set).
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    /// The input graph relabelled into canonical position.
    pub fn graph(&self, g: &Graph) -> Graph {
        let mut perm = vec![0; self.labeling.len()];
        for (pos, &v) in self.labeling.iter().enumerate() {
            perm[v] = pos;
        }
        g.relabel(&perm)
    }
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    start: usize,
    mask: u64,
}

fn refine(rows: &[u64], cells: &mut Vec<Cell>, mut queue: u64) {
    while queue != 0 {
        let s = queue.trailing_zeros() as usize;
        queue &= queue - 1;
        let Ok(idx) = cells.binary_search_by_key(&s, |c| c.start) else {
            continue;
        };
        let splitter = cells[idx].mask;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.mask.count_ones() == 1 {
                i += 1;
                continue;
            }
            let mut counted: Vec<(u32, usize)> = bits(cell.mask)
                .map(|v| ((rows[v] & splitter).count_ones(), v))
                .collect();
            if counted.iter().all(|&(c, _)| c == counted[0].0) {
                i += 1;
                continue;
            }
            counted.sort_unstable();
            let mut parts: Vec<Cell> = Vec::new();
            let mut start = cell.start;
            let mut j = 0;
            while j < counted.len() {
                let c = counted[j].0;
                let mut mask = 0u64;
                while j < counted.len() && counted[j].0 == c {
                    mask |= 1 << counted[j].1;
                    j += 1;
                }
                parts.push(Cell { start, mask });
                queue |= 1 << start;
                start += mask.count_ones() as usize;
            }
            let added = parts.len();
            cells.splice(i..=i, parts);
            i += added;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<(Vec<usize>, Vec<u64>)>,
    best: Option<(Vec<usize>, Vec<u64>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn key(&self, lab: &[usize]) -> Vec<u64> {
        let nbits = self.n * (self.n - 1) / 2;
        let mut key = vec![0u64; nbits.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..self.n {
            let row = self.rows[lab[j]];
            for &li in &lab[..j] {
                if (row >> li) & 1 == 1 {
                    key[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        key
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(i, &g)| i != g) && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let key = self.key(&lab);
        match (&self.first, &self.best) {
            (None, _) => {
                self.first = Some((lab.clone(), key.clone()));
                self.best = Some((lab, key));
            }
            (Some((first_lab, first_key)), Some((best_lab, best_key))) => {
                if key == *first_key {
                    let from = first_lab.clone();
                    self.record_automorphism(&from, &lab);
                } else if key == *best_key {
                    let from = best_lab.clone();
                    self.record_automorphism(&from, &lab);
                } else if key < *best_key {
                    self.best = Some((lab, key));
                }
            }
            _ => unreachable!("first and best are set together"),
        }
    }

    /// Union-find orbits of the discovered automorphisms fixing `path`.
    fn orbit_roots(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.generators {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        (0..self.n).map(|x| find(&mut parent, x)).collect()
    }

    fn visit(&mut self, cells: Vec<Cell>, path: &mut Vec<usize>) {
        if cells.len() == self.n {
            let lab = cells.iter().map(|c| c.mask.trailing_zeros() as usize).collect();
            self.leaf(lab);
            return;
        }
        let (ti, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.mask.count_ones() > 1)
            .min_by_key(|(i, c)| (c.mask.count_ones(), *i))
            .map(|(i, c)| (i, *c))
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target.mask) {
            if !explored.is_empty() {
                let roots = self.orbit_roots(path);
                if explored.iter().any(|&w| roots[w] == roots[v]) {
                    continue;
                }
            }
            let mut child = cells.clone();
            child.splice(
                ti..=ti,
                [
                    Cell {
                        start: target.start,
                        mask: 1 << v,
                    },
                    Cell {
                        start: target.start + 1,
                        mask: target.mask & !(1 << v),
                    },
                ],
            );
            refine(self.rows, &mut child, (1 << target.start) | (1 << (target.start + 1)));
            path.push(v);
            self.visit(child, path);
            path.pop();
            explored.push(v);
        }
    }
}

/// Canonical labelling of a graph with at most [`MAX_SEARCH_ORDER`] vertices.
pub fn canonical_form(g: &Graph) -> Result<Canon> {
    let n = g.order();
    if n > MAX_SEARCH_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_SEARCH_ORDER,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut by_degree: Vec<(u32, usize)> = rows.iter().enumerate().map(|(v, r)| (r.count_ones(), v)).collect();
    by_degree.sort_unstable();
    let mut cells = Vec::new();
    let mut start = 0;
    let mut j = 0;
    while j < n {
        let deg = by_degree[j].0;
        let mut mask = 0u64;
        while j < n && by_degree[j].0 == deg {
            mask |= 1 << by_degree[j].1;
            j += 1;
        }
        cells.push(Cell { start, mask });
        start += mask.count_ones() as usize;
    }
    let queue = cells.iter().fold(0u64, |q, c| q | (1 << c.start));
    refine(&rows, &mut cells, queue);

    let mut search = Search {
        rows: &rows,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.visit(cells, &mut Vec::new());
    let (labeling, key) = search.best.take().expect("search visits at least one leaf");
    Ok(Canon {
        labeling,
        key,
        generators: search.generators,
    })
}

/// graph6 string of the canonical relabelling; equal exactly for isomorphic
/// graphs.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    let c = canonical_form(g)?;
    Ok(write_graph6(&c.graph(g)))
}
