use super::report::density;
use super::search::search_max_density;
use crate::bounds::{rational_string, BivarPoly};
use crate::error::Result;
use crate::graphs::{construct_family, enumerate_regular_range, write_graph6, Graph};
use crate::homomorphism::inj_count;
use crate::optimize::{certify_threshold, OptParity};
use crate::spectral::eval_poly_sum;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Hand transcription of the two drawn 4-regular examples (10 and 9
/// vertices).
pub const FIGURE_TEN: &str = "Ik?tRrKF_";
pub const FIGURE_NINE: &str = "H{KiiUT";

/// `(name, family expression, degree)` of every named example.
pub const EXAMPLES: [(&str, &str, u32); 15] = [
    ("K5", "K5", 4),
    ("octahedron", "K2,2,2", 4),
    ("C7(2,3)", "circ(7;2,3)", 4),
    ("C9(2,3)", "circ(9;2,3)", 4),
    ("C12(2,3)", "circ(12;2,3)", 4),
    ("C13(2,3)", "circ(13;2,3)", 4),
    ("C7(1,2)", "circ(7;1,2)", 4),
    ("K3xK3", "prod(K3,K3)", 4),
    ("figure, 10 vertices", "g6:Ik?tRrKF_", 4),
    ("figure, 9 vertices", "g6:H{KiiUT", 4),
    ("K6", "K6", 5),
    ("complement of K3+C5", "comp(union(K3,C5))", 5),
    ("K7", "K7", 6),
    ("K3,3,3", "K3,3,3", 6),
    ("K8 minus a perfect matching", "comp(copies(4,K2))", 6),
];

/// `λ^5 + (5 - 5d)λ^3`: summed over the spectrum of a d-regular graph it
/// counts injective pentagons.
pub fn c5_poly() -> BivarPoly {
    BivarPoly::from_terms(&[(5, 0, 1), (3, 0, 5), (3, 1, -5)])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleRow {
    pub name: String,
    pub family: String,
    pub graph6: String,
    pub d: u32,
    pub order: usize,
    pub regular: bool,
    pub inj: u128,
    pub density: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperReport {
    pub examples: Vec<ExampleRow>,
    pub checks: Vec<Check>,
}

impl PaperReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "hdensity.paper/1",
            "passed": self.passed(),
            "examples": self.examples.iter().map(|r| json!({
                "name": r.name,
                "family": r.family,
                "graph6": r.graph6,
                "d": r.d,
                "order": r.order,
                "regular": r.regular,
                "inj": r.inj.to_string(),
                "density": rational_string(&r.density),
            })).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn example_rows() -> Result<Vec<ExampleRow>> {
    let c5 = construct_family(&"C5".parse()?)?;
    EXAMPLES
        .par_iter()
        .map(|&(name, expr, d)| {
            let g = construct_family(&expr.parse()?)?;
            let inj = inj_count(&c5, &g);
            Ok(ExampleRow {
                name: name.to_string(),
                family: expr.to_string(),
                graph6: write_graph6(&g),
                d,
                order: g.order(),
                regular: g.regular_degree() == Some(d as usize),
                inj,
                density: density(inj, g.order()),
            })
        })
        .collect()
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn listing(rows: &[&ExampleRow]) -> String {
    rows.iter()
        .map(|r| format!("{}={}", r.name, rational_string(&r.density)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Pentagon densities of the named examples and the comparisons among them.
pub fn verify_paper_examples() -> Result<PaperReport> {
    let examples = example_rows()?;
    let by_name = |n: &str| examples.iter().find(|r| r.name == n).expect("listed example");
    let mut checks = Vec::new();

    let irregular: Vec<&ExampleRow> = examples.iter().filter(|r| !r.regular).collect();
    checks.push(check(
        "every example is regular of its stated degree",
        irregular.is_empty(),
        irregular.iter().map(|r| r.name.clone()).collect::<Vec<_>>().join(", "),
    ));
    let fig_orders = (by_name("figure, 10 vertices").order, by_name("figure, 9 vertices").order);
    checks.push(check(
        "figure transcriptions have 10 and 9 vertices",
        fig_orders == (10, 9),
        format!("{fig_orders:?}"),
    ));

    let octa = by_name("octahedron");
    checks.push(check(
        "octahedron has pentagon density 40",
        octa.density == int(40),
        rational_string(&octa.density),
    ));

    let k5 = by_name("K5");
    let four: Vec<&ExampleRow> = examples.iter().filter(|r| r.d == 4 && r.name != "K5").collect();
    let common = four.iter().all(|r| r.density == four[0].density);
    checks.push(check(
        "d=4 examples share one density above K5",
        common && four[0].density > k5.density,
        format!("K5={}; {}", rational_string(&k5.density), listing(&four)),
    ));

    let (k6, five) = (by_name("K6"), by_name("complement of K3+C5"));
    checks.push(check(
        "d=5 example exceeds K6",
        five.density > k6.density,
        listing(&[k6, five]),
    ));

    let six: Vec<&ExampleRow> = examples.iter().filter(|r| r.d == 6).collect();
    checks.push(check(
        "d=6 graphs tie K7 at 360",
        six.iter().all(|r| r.density == int(360)),
        listing(&six),
    ));
    Ok(PaperReport { examples, checks })
}

/// Everything [`verify_paper_examples`] checks, plus the spectral pentagon
/// formula on cubic graphs, the Petersen search and the majorant threshold.
pub fn paper_campaign() -> Result<PaperReport> {
    let mut report = verify_paper_examples()?;
    let c5 = construct_family(&"C5".parse()?)?;

    let cubic = enumerate_regular_range(4..=10, 3, true)?;
    let poly = c5_poly();
    let mismatched: Vec<String> = cubic
        .par_iter()
        .map(|g: &Graph| -> Result<Option<String>> {
            let spectral = eval_poly_sum(&poly, g, 3)?;
            let direct = BigRational::from_integer(BigInt::from(inj_count(&c5, g)));
            Ok((spectral != direct).then(|| write_graph6(g)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    report.checks.push(check(
        "spectral pentagon formula on connected cubic graphs up to 10 vertices",
        mismatched.is_empty() && cubic.len() == 27,
        format!("{} graphs, mismatches: [{}]", cubic.len(), mismatched.join(", ")),
    ));

    let search = search_max_density(&c5, 3, 10, true)?;
    let names: Vec<String> = search.maximizers.iter().map(|m| m.name.unwrap_or(&m.graph6).to_string()).collect();
    report.checks.push(check(
        "Petersen is the unique cubic pentagon maximizer up to 10 vertices",
        names == ["Petersen"] && search.best_density == int(12),
        format!("best {} at [{}]", rational_string(&search.best_density), names.join(", ")),
    ));

    let scan = certify_threshold(&poly, OptParity::Odd, 2..=12)?;
    let fails = scan.failures();
    report.checks.push(check(
        "pentagon majorant threshold is 7 and fails at 4, 5, 6",
        scan.threshold == Some(7) && [4, 5, 6].iter().all(|d| fails.contains(d)),
        format!("threshold {:?}, failures {fails:?}", scan.threshold),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_pass() {
        let r = verify_paper_examples().unwrap();
        assert!(r.passed(), "{:?}", r.failed());
        let octa = r.examples.iter().find(|e| e.name == "octahedron").unwrap();
        assert_eq!(octa.inj, 240);
        let five = r.examples.iter().find(|e| e.d == 5 && e.name != "K6").unwrap();
        assert_eq!(five.density, int(265) / int(2));
    }

    #[test]
    fn figure_constants_match_edge_lists() {
        let ten = Graph::from_edges(
            10,
            &[
                (0, 1), (0, 3), (0, 6), (0, 8), (1, 2), (1, 7), (1, 8), (3, 9), (3, 5), (3, 7),
                (4, 6), (4, 7), (4, 8), (4, 9), (5, 8), (5, 9), (5, 2), (6, 9), (6, 2), (7, 2),
            ],
        )
        .unwrap();
        assert_eq!(write_graph6(&ten), FIGURE_TEN);
        let nine = Graph::from_edges(
            9,
            &[
                (0, 2), (2, 1), (1, 0), (0, 8), (8, 7), (7, 1), (1, 6), (6, 5), (5, 2),
                (2, 4), (4, 3), (3, 0), (8, 3), (4, 5), (6, 7), (5, 8), (7, 4), (3, 6),
            ],
        )
        .unwrap();
        assert_eq!(write_graph6(&nine), FIGURE_NINE);
    }

    #[test]
    fn full_campaign() {
        let r = paper_campaign().unwrap();
        assert!(r.passed(), "{:?}", r.failed());
        assert_eq!(r.checks.len(), 9);
        assert_eq!(r.to_json()["passed"], true);
    }
}
