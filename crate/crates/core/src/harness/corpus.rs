use crate::error::Result;
use crate::graphs::{construct_family, enumerate_regular_range, Graph};

/// Regular graphs built from family expressions, none of them cubic.
pub const CONSTRUCTED: [&str; 20] = [
    "C3",
    "C4",
    "C5",
    "C6",
    "C8",
    "K5",
    "K6",
    "K7",
    "K4,4",
    "K2,2,2",
    "K3,3,3",
    "circ(7;2,3)",
    "circ(9;2,3)",
    "circ(12;2,3)",
    "circ(11;1,3)",
    "prod(K3,K3)",
    "prod(C4,C4)",
    "comp(C8)",
    "comp(petersen)",
    "comp(union(K3,C5))",
];

pub fn constructed_corpus() -> Result<Vec<Graph>> {
    CONSTRUCTED.iter().map(|s| construct_family(&s.parse()?)).collect()
}

/// Every cubic graph with at most 10 vertices, connected or not (30), then
/// the 20 constructed graphs.
pub fn standard_corpus() -> Result<Vec<Graph>> {
    let mut out = enumerate_regular_range(4..=10, 3, false)?;
    out.extend(constructed_corpus()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::canonical_graph6;
    use std::collections::HashSet;

    #[test]
    fn fifty_distinct_regular_graphs() {
        let corpus = standard_corpus().unwrap();
        assert_eq!(corpus.len(), 50);
        assert!(corpus.iter().all(|g| g.regular_degree().is_some()));
        let classes: HashSet<String> = corpus.iter().map(|g| canonical_graph6(g).unwrap()).collect();
        assert_eq!(classes.len(), 50);
        assert!(constructed_corpus().unwrap().iter().all(|g| g.regular_degree() != Some(3)));
    }
}
