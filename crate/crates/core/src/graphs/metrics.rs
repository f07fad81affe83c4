use super::Graph;
use std::fmt;

/// A length that may be unbounded: the girth of a forest, the diameter of a
/// disconnected graph. `Finite(_) < Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(x) => Some(x),
            Extent::Infinite => None,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(x) => write!(f, "{x}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

/// Side (0 or 1) of each vertex in a proper two-colouring.
pub type Coloring = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub degrees: Vec<usize>,
    pub regular_degree: Option<usize>,
    pub girth: Extent,
    pub diameter: Extent,
    pub bipartite: bool,
    pub coloring: Option<Coloring>,
    pub connected: bool,
    pub tree: bool,
}

fn bfs(g: &Graph, s: usize, dist: &mut [usize], parent: &mut [usize], queue: &mut Vec<usize>) {
    dist.fill(usize::MAX);
    dist[s] = 0;
    parent[s] = usize::MAX;
    queue.clear();
    queue.push(s);
    let mut i = 0;
    while i < queue.len() {
        let u = queue[i];
        i += 1;
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push(w);
            }
        }
    }
}

pub fn girth(g: &Graph) -> Extent {
    let n = g.order();
    let (mut dist, mut parent, mut queue) = (vec![0; n], vec![0; n], Vec::new());
    let mut best = usize::MAX;
    for s in 0..n {
        bfs(g, s, &mut dist, &mut parent, &mut queue);
        for &u in &queue {
            for w in g.neighbors(u) {
                // A non-tree edge closes a closed walk through s of this length;
                // the minimum over all roots is the shortest cycle.
                if parent[u] != w && parent[w] != u {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Extent::Infinite
    } else {
        Extent::Finite(best)
    }
}

pub fn diameter(g: &Graph) -> Extent {
    let n = g.order();
    let (mut dist, mut parent, mut queue) = (vec![0; n], vec![0; n], Vec::new());
    let mut best = 0;
    for s in 0..n {
        bfs(g, s, &mut dist, &mut parent, &mut queue);
        if queue.len() < n {
            return Extent::Infinite;
        }
        best = best.max(dist[*queue.last().expect("queue holds the root")]);
    }
    Extent::Finite(best)
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let coloring = g.bipartition();
    let connected = g.is_connected();
    GraphMetrics {
        degrees: g.degrees(),
        regular_degree: g.regular_degree(),
        girth: girth(g),
        diameter: diameter(g),
        bipartite: coloring.is_some(),
        coloring,
        connected,
        tree: connected && g.edge_count() + 1 == g.order(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{construct_family, Family};

    fn m(s: &str) -> GraphMetrics {
        metrics(&construct_family(&s.parse().unwrap()).unwrap())
    }

    #[test]
    fn petersen() {
        let p = m("petersen");
        assert_eq!(p.regular_degree, Some(3));
        assert_eq!(p.girth, Extent::Finite(5));
        assert_eq!(p.diameter, Extent::Finite(2));
        assert!(!p.bipartite && p.connected && !p.tree);
    }

    #[test]
    fn complete_bipartite() {
        let k = m("K3,3");
        assert_eq!(k.regular_degree, Some(3));
        assert_eq!(k.girth, Extent::Finite(4));
        assert!(k.bipartite);
    }

    #[test]
    fn path_is_a_tree() {
        let p = m("P4");
        assert!(p.tree);
        assert_eq!(p.girth, Extent::Infinite);
        assert_eq!(p.diameter, Extent::Finite(3));
        assert_eq!(p.regular_degree, None);
    }

    #[test]
    fn forests_and_disconnected_graphs() {
        let f = m("union(P3,P2)");
        assert_eq!(f.girth, Extent::Infinite);
        assert_eq!(f.diameter, Extent::Infinite);
        assert!(!f.connected && !f.tree);
        let two = m("copies(2,C5)");
        assert_eq!(two.girth, Extent::Finite(5));
        assert!(Extent::Finite(100) < Extent::Infinite);
    }

    #[test]
    fn family_sanity() {
        for n in 3..9 {
            let k = m(&format!("K{n}"));
            assert_eq!((k.girth, k.diameter), (Extent::Finite(3), Extent::Finite(1)));
        }
        for d in 2..6 {
            assert_eq!(m(&format!("K{d},{d}")).girth, Extent::Finite(4));
        }
    }

    #[test]
    fn coloring_is_proper() {
        let g = construct_family(&Family::Cycle(8)).unwrap();
        let c = metrics(&g).coloring.unwrap();
        assert!(g.edges().all(|(u, v)| c[u] != c[v]));
    }
}
