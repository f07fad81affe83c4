//! Exhaustive generation of d-regular graphs up to isomorphism.
//!
//! Connected graphs grow from a star: at every step the open (degree < d)
//! non-isolated vertex of largest degree is completed by joining it to open
//! non-adjacent vertices and to fresh isolated ones. Partial graphs are
//! reduced to canonical form after every step, level by edge count, so each
//! isomorphism class of partial graph is expanded once. Disconnected graphs
//! are assembled from multisets of connected components.

use super::canon::{canonical_form, canonical_graph6};
use super::family::disjoint_union;
use super::{bits, Graph, MAX_SEARCH_ORDER};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

/// One representative per isomorphism class of `d`-regular graphs on `n`
/// vertices, canonically labelled and sorted by graph6 string. Infeasible
/// parameters (`n·d` odd, `d ≥ n`) give an empty list.
pub fn enumerate_regular(n: usize, d: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > MAX_SEARCH_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_SEARCH_ORDER,
        });
    }
    if n == 0 || d >= n || (n * d) % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut out = if connected_only {
        connected(n, d)?
    } else {
        all(n, d)?
    };
    out.sort_by_cached_key(super::write_graph6);
    Ok(out)
}

/// Concatenation of [`enumerate_regular`] over a range of orders, ascending.
pub fn enumerate_regular_range(orders: RangeInclusive<usize>, d: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in orders {
        out.extend(enumerate_regular(n, d, connected_only)?);
    }
    Ok(out)
}

fn canonical(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.graph(g))
}

fn connected(n: usize, d: usize) -> Result<Vec<Graph>> {
    if d == 0 {
        return Ok(if n == 1 { vec![Graph::empty(1)?] } else { Vec::new() });
    }
    let mut star = Graph::empty(n)?;
    for v in 1..=d {
        star.set(0, v, true);
    }
    let mut levels: BTreeMap<usize, HashMap<Vec<u64>, Graph>> = BTreeMap::new();
    let c = canonical_form(&star)?;
    levels.entry(d).or_default().insert(c.key.clone(), c.graph(&star));

    let target = n * d / 2;
    while let Some((edges, states)) = levels.pop_first() {
        if edges == target {
            return Ok(states.into_values().collect());
        }
        let children: Vec<(usize, Vec<u64>, Graph)> = states
            .into_par_iter()
            .flat_map_iter(|(_, g)| expand(&g, n, d))
            .map(|child| {
                let c = canonical_form(&child).expect("order checked by caller");
                (child.edge_count(), c.key.clone(), c.graph(&child))
            })
            .collect();
        for (m, key, g) in children {
            levels.entry(m).or_default().entry(key).or_insert(g);
        }
    }
    Ok(Vec::new())
}

/// Children of a partial graph: the chosen vertex completed in every way.
fn expand(g: &Graph, n: usize, d: usize) -> Vec<Graph> {
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let deg: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    let touched: u64 = (0..n).filter(|&v| deg[v] > 0).fold(0, |m, v| m | 1 << v);
    let open: u64 = bits(touched).filter(|&v| deg[v] < d).fold(0, |m, v| m | 1 << v);
    let fresh: Vec<usize> = (0..n).filter(|&v| deg[v] == 0).collect();
    if open == 0 {
        return Vec::new();
    }
    let v = bits(open)
        .max_by_key(|&u| (deg[u], std::cmp::Reverse(u)))
        .expect("open is nonempty");
    let need = d - deg[v];
    let candidates: Vec<usize> = bits(open & !rows[v] & !(1 << v)).collect();

    let mut out = Vec::new();
    for t in 0..=need.min(fresh.len()) {
        let k = need - t;
        if k > candidates.len() {
            continue;
        }
        for_each_subset(&candidates, k, &mut |chosen| {
            let mut child = g.clone();
            for &w in chosen {
                child.set(v, w, true);
            }
            for &w in &fresh[..t] {
                child.set(v, w, true);
            }
            if feasible(&child, n, d) {
                out.push(child);
            }
        });
    }
    out
}

fn for_each_subset(items: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=items.len() - (k - cur.len()) {
            cur.push(items[i]);
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Cheap necessary conditions for a partial graph to extend to a connected
/// d-regular graph.
fn feasible(g: &Graph, n: usize, d: usize) -> bool {
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut open = 0u64;
    let mut fresh = 0usize;
    for (v, r) in rows.iter().enumerate() {
        let deg = r.count_ones() as usize;
        if deg == 0 {
            fresh += 1;
        } else if deg < d {
            open |= 1 << v;
        }
    }
    if open == 0 {
        return fresh == 0;
    }
    bits(open).all(|v| {
        let deficit = d - rows[v].count_ones() as usize;
        deficit <= (open & !rows[v] & !(1 << v)).count_ones() as usize + fresh
    })
}

/// Every d-regular graph on n vertices as a multiset of connected components.
fn all(n: usize, d: usize) -> Result<Vec<Graph>> {
    if d == 0 {
        return Ok(vec![Graph::empty(n)?]);
    }
    let mut comps: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for m in d + 1..=n {
        if (m * d).is_multiple_of(2) && (m == n || m + d < n) {
            comps.insert(m, connected(m, d)?);
        }
    }
    // Component choices as non-increasing sequences of (order, index) pairs.
    let pool: Vec<(usize, usize)> = comps
        .iter()
        .flat_map(|(&m, gs)| (0..gs.len()).map(move |i| (m, i)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(
        pool: &[(usize, usize)],
        comps: &BTreeMap<usize, Vec<Graph>>,
        remaining: usize,
        min_index: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Graph>,
    ) -> Result<()> {
        if remaining == 0 {
            let parts: Vec<Graph> = stack.iter().map(|&i| comps[&pool[i].0][pool[i].1].clone()).collect();
            out.push(canonical(&disjoint_union(&parts)?)?);
            return Ok(());
        }
        for i in min_index..pool.len() {
            if pool[i].0 <= remaining {
                stack.push(i);
                go(pool, comps, remaining - pool[i].0, i, stack, out)?;
                stack.pop();
            }
        }
        Ok(())
    }
    go(&pool, &comps, n, 0, &mut stack, &mut out)?;
    debug_assert!({
        let mut seen: Vec<String> = out.iter().map(|g| canonical_graph6(g).unwrap()).collect();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    });
    Ok(out)
}
