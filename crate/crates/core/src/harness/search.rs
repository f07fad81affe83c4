use super::report::{density, known_name};
use crate::bounds::rational_string;
use crate::error::{Error, Result};
use crate::graphs::{canonical_graph6, enumerate_regular_range, write_graph6, Graph};
use crate::homomorphism::{inj_count, inj_via_moebius, MAX_PARTITION_ORDER};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Seed of the sampler choosing Möbius spot checks.
pub const SPOT_CHECK_SEED: u64 = 0x5eed_c5c5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusSource {
    Enumerated,
    File,
}

impl CorpusSource {
    pub fn name(self) -> &'static str {
        match self {
            CorpusSource::Enumerated => "enumerated",
            CorpusSource::File => "file",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRow {
    /// Canonical graph6.
    pub graph6: String,
    pub order: usize,
    pub inj: u128,
    pub density: BigRational,
    pub name: Option<&'static str>,
}

impl SearchRow {
    fn to_json(&self) -> Value {
        json!({
            "graph6": self.graph6,
            "order": self.order,
            "inj": self.inj.to_string(),
            "density": rational_string(&self.density),
            "name": self.name,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub pattern: String,
    pub d: u32,
    pub n_range: (usize, usize),
    pub corpus: CorpusSource,
    pub best_density: BigRational,
    /// Rows attaining `best_density`, in canonical graph6 order.
    pub maximizers: Vec<SearchRow>,
    /// Largest density strictly below the best.
    pub runner_up_density: Option<BigRational>,
    /// Every corpus graph, in canonical graph6 order.
    pub table: Vec<SearchRow>,
    /// Rows whose count was recomputed by partition-lattice inversion.
    pub spot_checks: usize,
}

impl SearchReport {
    pub fn to_json(&self, with_table: bool) -> Value {
        json!({
            "schema": "hdensity.search/1",
            "pattern": self.pattern,
            "d": self.d,
            "n_range": [self.n_range.0, self.n_range.1],
            "corpus": self.corpus.name(),
            "corpus_size": self.table.len(),
            "best_density": rational_string(&self.best_density),
            "maximizers": self.maximizers.iter().map(SearchRow::to_json).collect::<Vec<_>>(),
            "runner_up_density": self.runner_up_density.as_ref().map(rational_string),
            "spot_checks": self.spot_checks,
            "table": with_table.then(|| self.table.iter().map(SearchRow::to_json).collect::<Vec<_>>()),
        })
    }
}

/// Exhaustive `t_inj(h, ·)` over every `d`-regular graph with `d+1 ≤ n ≤ n_max`.
pub fn search_max_density(h: &Graph, d: u32, n_max: usize, connected_only: bool) -> Result<SearchReport> {
    let lo = d as usize + 1;
    if n_max < lo {
        return Err(Error::EmptyInterval {
            lo: lo.to_string(),
            hi: n_max.to_string(),
        });
    }
    let corpus = enumerate_regular_range(lo..=n_max, d as usize, connected_only)?;
    search_corpus(h, d, &corpus, CorpusSource::Enumerated)
}

/// The same scan over a given list of `d`-regular graphs.
pub fn search_corpus(h: &Graph, d: u32, corpus: &[Graph], source: CorpusSource) -> Result<SearchReport> {
    if corpus.is_empty() {
        return Err(Error::Invalid(format!("no {d}-regular graphs to search")));
    }
    if corpus.iter().any(|g| g.regular_degree() != Some(d as usize)) {
        return Err(Error::NotRegular { d });
    }
    let mut table: Vec<SearchRow> = corpus
        .par_iter()
        .map(|g| {
            let inj = inj_count(h, g);
            Ok(SearchRow {
                graph6: canonical_graph6(g)?,
                order: g.order(),
                inj,
                density: density(inj, g.order()),
                name: known_name(g),
            })
        })
        .collect::<Result<_>>()?;
    table.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let spot_checks = spot_check(h, corpus, &table)?;
    let best_density = table.iter().map(|r| &r.density).max().expect("nonempty").clone();
    let maximizers = table.iter().filter(|r| r.density == best_density).cloned().collect();
    let runner_up_density = table
        .iter()
        .map(|r| &r.density)
        .filter(|x| **x < best_density)
        .max()
        .cloned();
    let orders = table.iter().map(|r| r.order);
    let n_range = (orders.clone().min().unwrap(), orders.max().unwrap());
    Ok(SearchReport {
        pattern: write_graph6(h),
        d,
        n_range,
        corpus: source,
        best_density,
        maximizers,
        runner_up_density,
        table,
        spot_checks,
    })
}

/// Recomputes a seeded tenth of the counts (at least one) through
/// `inj_via_moebius`.
fn spot_check(h: &Graph, corpus: &[Graph], table: &[SearchRow]) -> Result<usize> {
    if h.order() > MAX_PARTITION_ORDER {
        return Ok(0);
    }
    let mut rng = StdRng::seed_from_u64(SPOT_CHECK_SEED);
    let amount = corpus.len().div_ceil(10);
    let picks = rand::seq::index::sample(&mut rng, corpus.len(), amount).into_vec();
    picks.par_iter().try_for_each(|&i| {
        let g = &corpus[i];
        let key = canonical_graph6(g)?;
        let row = table.iter().find(|r| r.graph6 == key).expect("every corpus graph has a row");
        let via = inj_via_moebius(h, g)?;
        if via != row.inj as i128 {
            return Err(Error::Invalid(format!(
                "inj({}, {key}) = {} but partition inversion gives {via}",
                write_graph6(h),
                row.inj
            )));
        }
        Ok(())
    })?;
    Ok(amount)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{construct_family, Family};
    use num_bigint::BigInt;

    fn f(s: &str) -> Graph {
        construct_family(&s.parse::<Family>().unwrap()).unwrap()
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn petersen_maximizes_pentagons() {
        let r = search_max_density(&f("C5"), 3, 10, true).unwrap();
        assert_eq!(r.table.len(), 27);
        assert_eq!(r.best_density, int(12));
        assert_eq!(r.maximizers.len(), 1);
        assert_eq!(r.maximizers[0].name, Some("Petersen"));
        assert!(r.runner_up_density.as_ref().unwrap() < &int(12));
        assert_eq!(r.spot_checks, 3);
        let v = r.to_json(false);
        assert_eq!(v["best_density"], "12/1");
        assert_eq!(v["maximizers"][0]["name"], "Petersen");
    }

    #[test]
    fn small_patterns() {
        let r = search_max_density(&f("C4"), 3, 8, true).unwrap();
        assert_eq!(r.best_density, int(12));
        assert_eq!(r.maximizers.iter().map(|m| m.name).collect::<Vec<_>>(), vec![Some("K3,3")]);
        let r = search_max_density(&f("C3"), 3, 10, true).unwrap();
        assert_eq!(r.best_density, int(6));
        assert_eq!(r.maximizers[0].name, Some("K4"));
    }

    #[test]
    fn errors() {
        assert!(matches!(search_max_density(&f("C5"), 3, 3, true), Err(Error::EmptyInterval { .. })));
        assert!(matches!(
            search_corpus(&f("C5"), 3, &[f("K5")], CorpusSource::File),
            Err(Error::NotRegular { d: 3 })
        ));
    }

    #[test]
    fn deterministic_output() {
        let a = search_max_density(&f("P4"), 3, 10, false).unwrap().to_json(true);
        let b = search_max_density(&f("P4"), 3, 10, false).unwrap().to_json(true);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
