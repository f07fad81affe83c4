//! Regular graph enumeration against a labelled brute force: every class is
//! regular, classes are pairwise non-isomorphic, and the orbit-stabilizer sum
//! `Σ n!/|Aut(G)|` equals the number of labelled graphs.

use hdensity::graphs::{enumerate_regular, Graph};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

fn mask(n: usize, adj: impl Fn(usize, usize) -> bool) -> u64 {
    let mut m = 0u64;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if adj(i, j) {
                m |= 1 << bit;
            }
            bit += 1;
        }
    }
    m
}

fn permuted_mask(g: &Graph, p: &[usize]) -> u64 {
    mask(g.order(), |i, j| g.has_edge(p[i], p[j]))
}

fn connected(n: usize, adj: &[Vec<bool>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if adj[u][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Labelled d-regular graphs on n vertices, deciding pairs in order.
fn labelled(n: usize, d: usize, connected_only: bool) -> u64 {
    fn go(pairs: &[(usize, usize)], i: usize, deg: &mut [usize], adj: &mut Vec<Vec<bool>>, d: usize, conn: bool) -> u64 {
        let n = deg.len();
        if i == pairs.len() {
            let ok = deg.iter().all(|&x| x == d) && (!conn || connected(n, adj));
            return ok as u64;
        }
        let (u, v) = pairs[i];
        // Once every pair at u is decided its degree must be final.
        let last_for_u = i + 1 == pairs.len() || pairs[i + 1].0 != u;
        let mut total = 0;
        if deg[u] < d && deg[v] < d {
            deg[u] += 1;
            deg[v] += 1;
            adj[u][v] = true;
            adj[v][u] = true;
            if !last_for_u || deg[u] == d {
                total += go(pairs, i + 1, deg, adj, d, conn);
            }
            adj[u][v] = false;
            adj[v][u] = false;
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !last_for_u || deg[u] == d {
            total += go(pairs, i + 1, deg, adj, d, conn);
        }
        total
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut deg = vec![0; n];
    let mut adj = vec![vec![false; n]; n];
    if n == 1 {
        return (d == 0) as u64;
    }
    go(&pairs, 0, &mut deg, &mut adj, d, connected_only)
}

fn check(n: usize, d: usize, connected_only: bool) {
    let classes = enumerate_regular(n, d, connected_only).unwrap();
    let perms = permutations(n);
    let mut canon = Vec::new();
    let mut orbit_sum = 0u64;
    for g in &classes {
        assert_eq!(g.regular_degree(), Some(d));
        assert!(!connected_only || g.is_connected());
        let own = permuted_mask(g, &perms[0]);
        let images: Vec<u64> = perms.iter().map(|p| permuted_mask(g, p)).collect();
        let aut = images.iter().filter(|&&m| m == own).count() as u64;
        orbit_sum += perms.len() as u64 / aut;
        canon.push(*images.iter().min().unwrap());
    }
    let distinct = canon.len();
    canon.sort_unstable();
    canon.dedup();
    assert_eq!(canon.len(), distinct, "n={n} d={d}: isomorphic classes listed twice");
    assert_eq!(orbit_sum, labelled(n, d, connected_only), "n={n} d={d} connected={connected_only}");
}

#[test]
fn labelled_counts() {
    assert_eq!(labelled(4, 3, false), 1);
    assert_eq!(labelled(6, 3, false), 70);
    assert_eq!(labelled(5, 2, false), 12);
}

#[test]
fn cycles_and_unions_of_cycles() {
    for n in 3..=8 {
        check(n, 2, false);
        check(n, 2, true);
    }
}

#[test]
fn cubic_up_to_eight() {
    for n in [4, 6, 8] {
        check(n, 3, false);
        check(n, 3, true);
    }
}

#[test]
fn quartic_and_quintic_up_to_eight() {
    for n in 5..=8 {
        check(n, 4, false);
        check(n, 4, true);
    }
    check(6, 5, false);
    check(8, 5, true);
}
