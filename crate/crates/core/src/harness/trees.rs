use super::report::density;
use crate::bounds::rational_string;
use crate::error::{Error, Result};
use crate::graphs::{canonical_graph6, enumerate_regular_range, metrics, write_graph6, Extent, Graph};
use crate::homomorphism::inj_count;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeRow {
    pub graph6: String,
    pub girth: Extent,
    pub density: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeReport {
    pub pattern: String,
    pub d: u32,
    pub n_max: usize,
    pub diameter: usize,
    pub rows: Vec<TreeRow>,
    pub best_density: BigRational,
    pub maximizers: Vec<String>,
    /// Graphs whose girth exceeds the pattern's diameter.
    pub girth_set: Vec<String>,
    /// The two sets coincide.
    pub holds: bool,
}

impl TreeReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": "hdensity.tree/1",
            "pattern": self.pattern,
            "d": self.d,
            "n_max": self.n_max,
            "diameter": self.diameter,
            "best_density": rational_string(&self.best_density),
            "maximizers": self.maximizers,
            "girth_set": self.girth_set,
            "holds": self.holds,
            "rows": self.rows.iter().map(|r| json!({
                "graph6": r.graph6,
                "girth": r.girth.to_string(),
                "density": rational_string(&r.density),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Over all `d`-regular graphs with at most `n_max` vertices, compares the
/// graphs maximizing `t_inj(h, ·)` with those of girth above `diam(h)`.
pub fn tree_extremal_check(h: &Graph, d: u32, n_max: usize) -> Result<TreeReport> {
    if !h.is_tree() {
        return Err(Error::Invalid(format!("{} is not a tree", write_graph6(h))));
    }
    if h.degrees().into_iter().max().unwrap_or(0) > d as usize {
        return Err(Error::Invalid(format!("a degree of {} exceeds {d}", write_graph6(h))));
    }
    let diameter = metrics(h).diameter.finite().expect("trees are connected");
    let corpus = enumerate_regular_range(d as usize + 1..=n_max, d as usize, false)?;
    if corpus.is_empty() {
        return Err(Error::EmptyInterval {
            lo: (d + 1).to_string(),
            hi: n_max.to_string(),
        });
    }
    let mut rows: Vec<TreeRow> = corpus
        .par_iter()
        .map(|g| {
            Ok(TreeRow {
                graph6: canonical_graph6(g)?,
                girth: metrics(g).girth,
                density: density(inj_count(h, g), g.order()),
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let best_density = rows.iter().map(|r| &r.density).max().expect("nonempty").clone();
    let maximizers: Vec<String> = rows.iter().filter(|r| r.density == best_density).map(|r| r.graph6.clone()).collect();
    let girth_set: Vec<String> = rows
        .iter()
        .filter(|r| r.girth > Extent::Finite(diameter))
        .map(|r| r.graph6.clone())
        .collect();
    Ok(TreeReport {
        pattern: write_graph6(h),
        d,
        n_max,
        diameter,
        holds: maximizers == girth_set,
        rows,
        best_density,
        maximizers,
        girth_set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{construct_family, Family};
    use num_bigint::BigInt;

    fn f(s: &str) -> Graph {
        construct_family(&s.parse::<Family>().unwrap()).unwrap()
    }

    #[test]
    fn paths() {
        let r = tree_extremal_check(&f("P3"), 3, 10).unwrap();
        assert!(r.holds);
        assert_eq!(r.maximizers.len(), 30);
        assert_eq!(r.best_density, BigRational::from_integer(BigInt::from(6)));
        let r = tree_extremal_check(&f("P4"), 3, 10).unwrap();
        assert!(r.holds);
        assert!(r.rows.iter().all(|row| (row.girth > Extent::Finite(3)) == r.maximizers.contains(&row.graph6)));
    }

    #[test]
    fn spider_of_diameter_four() {
        let spider = f("spider(2,2,1)");
        let r = tree_extremal_check(&spider, 3, 10).unwrap();
        assert_eq!(r.diameter, 4);
        assert!(r.holds);
        let petersen = canonical_graph6(&f("petersen")).unwrap();
        assert_eq!(r.maximizers, vec![petersen]);
    }

    #[test]
    fn rejects_non_trees() {
        assert!(tree_extremal_check(&f("C5"), 3, 10).is_err());
        assert!(tree_extremal_check(&f("spider(1,1,1,1)"), 3, 10).is_err());
    }
}
