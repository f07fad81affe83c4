//! Backtracking homomorphism counts. Pattern vertices are placed so that each
//! has as many already-placed neighbours as possible; candidates for the next
//! vertex are the intersection of the target neighbourhoods of those images.

use crate::graphs::Graph;

struct Plan {
    /// `back[i]`: positions `j < i` of the placement order adjacent to position `i`.
    back: Vec<Vec<usize>>,
}

fn plan(h: &Graph) -> Plan {
    let n = h.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut back_count = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (back_count[v], h.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for w in h.neighbors(v) {
            back_count[w] += 1;
        }
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut b: Vec<usize> = h.neighbors(v).map(|w| position[w]).filter(|&j| j < i).collect();
            b.sort_unstable();
            b
        })
        .collect();
    Plan { back }
}

struct Counter<'a> {
    g: &'a Graph,
    plan: Plan,
    injective: bool,
    full: Vec<u64>,
    images: Vec<usize>,
    used: Vec<u64>,
    scratch: Vec<Vec<u64>>,
}

impl Counter<'_> {
    fn candidates(&mut self, depth: usize) {
        let mut cand = std::mem::take(&mut self.scratch[depth]);
        cand.copy_from_slice(&self.full);
        for &j in &self.plan.back[depth] {
            for (c, r) in cand.iter_mut().zip(self.g.row(self.images[j])) {
                *c &= r;
            }
        }
        if self.injective {
            for (c, u) in cand.iter_mut().zip(&self.used) {
                *c &= !u;
            }
        }
        self.scratch[depth] = cand;
    }

    fn count(&mut self, depth: usize) -> u128 {
        self.candidates(depth);
        if depth + 1 == self.images.len() {
            return self.scratch[depth].iter().map(|w| w.count_ones() as u128).sum();
        }
        let mut total = 0;
        for wi in 0..self.full.len() {
            let mut word = self.scratch[depth][wi];
            while word != 0 {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                let x = wi * 64 + b;
                self.images[depth] = x;
                self.used[wi] |= 1 << b;
                total += self.count(depth + 1);
                self.used[wi] &= !(1 << b);
            }
        }
        total
    }
}

fn run(h: &Graph, g: &Graph, injective: bool) -> u128 {
    if injective && h.order() > g.order() {
        return 0;
    }
    let words = g.order().div_ceil(64);
    let mut full = vec![u64::MAX; words];
    if !g.order().is_multiple_of(64) {
        full[words - 1] = (1u64 << (g.order() % 64)) - 1;
    }
    let mut c = Counter {
        g,
        plan: plan(h),
        injective,
        full,
        images: vec![0; h.order()],
        used: vec![0; words],
        scratch: vec![vec![0; words]; h.order()],
    };
    c.count(0)
}

/// Number of adjacency-preserving maps `V(h) → V(g)`.
pub fn hom_count(h: &Graph, g: &Graph) -> u128 {
    run(h, g, false)
}

/// Number of injective adjacency-preserving maps `V(h) → V(g)`.
pub fn inj_count(h: &Graph, g: &Graph) -> u128 {
    run(h, g, true)
}
