use super::canon::canonical_form;
use super::Graph;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

const SMALL_LIMIT: usize = 8;

/// Every connected graph on `n` vertices up to isomorphism, canonically
/// labelled, ordered by edge count and then graph6 string.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > SMALL_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: SMALL_LIMIT,
        });
    }
    let mut level: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
    let empty = Graph::empty(n)?;
    level.insert(canonical_form(&empty)?.key, empty);
    let mut out = Vec::new();
    loop {
        let mut batch: Vec<Graph> = level.values().filter(|g| g.is_connected()).cloned().collect();
        batch.sort_by_cached_key(super::write_graph6);
        out.extend(batch);
        let mut next = BTreeMap::new();
        for g in level.values() {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.set(u, v, true);
                        let c = canonical_form(&h)?;
                        next.entry(c.key.clone()).or_insert_with(|| c.graph(&h));
                    }
                }
            }
        }
        if next.is_empty() {
            return Ok(out);
        }
        level = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349.
        let counts: Vec<usize> = (1..=6).map(|n| all_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn size_guard() {
        assert!(all_connected_graphs(0).is_err());
        assert!(all_connected_graphs(9).is_err());
    }
}
