//! Acceptance gate. Each criterion prints one PASS or FAIL line; any failure
//! makes the target exit nonzero.

use hdensity::bounds::{build_bound_poly, verify_bound, BivarPoly};
use hdensity::graphs::{
    all_connected_graphs, canonical_graph6, construct_family, enumerate_regular_range, parse_graph6, write_graph6,
    Family, Graph,
};
use hdensity::harness::{
    c5_poly, constructed_corpus, search_max_density, standard_corpus, tree_extremal_check, verify_paper_examples,
    vertexwise_walk_check,
};
use hdensity::homomorphism::{hom_count, hom_via_inj_sum, inj_count, inj_via_moebius};
use hdensity::optimize::{certify_threshold, majorant_check_even, majorant_check_odd, OptParity};
use hdensity::spectral::{eval_poly_sum, trace_power, traces};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn f(s: &str) -> Graph {
    construct_family(&s.parse::<Family>().unwrap()).unwrap()
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= budget, || format!("took {spent:.1?}, budget {budget:?}"))
}

fn connected_patterns(max: usize) -> Vec<Graph> {
    (1..=max).flat_map(|n| all_connected_graphs(n).unwrap()).collect()
}

fn inversion() -> Outcome {
    let start = Instant::now();
    let patterns = connected_patterns(5);
    let corpus = standard_corpus().map_err(|e| e.to_string())?;
    ensure(patterns.len() == 31 && corpus.len() == 50, || "pattern or corpus size".into())?;
    let mut checks = 0;
    for h in &patterns {
        for g in &corpus {
            let hom = hom_count(h, g);
            let inj = inj_count(h, g);
            let via_inj = hom_via_inj_sum(h, g).map_err(|e| e.to_string())?;
            let via_hom = inj_via_moebius(h, g).map_err(|e| e.to_string())?;
            ensure(via_inj == hom && via_hom == inj as i128, || {
                format!("{} into {}: hom {hom} vs {via_inj}, inj {inj} vs {via_hom}", write_graph6(h), write_graph6(g))
            })?;
            checks += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{checks} pattern/graph pairs, zero failures"))
}

fn spectral_identity() -> Outcome {
    let corpus = standard_corpus().map_err(|e| e.to_string())?;
    let cycles: Vec<Graph> = (3..=8).map(|k| construct_family(&Family::Cycle(k)).unwrap()).collect();
    for g in &corpus {
        for (k, c) in (3..=8).zip(&cycles) {
            let tr = trace_power(g, k).map_err(|e| e.to_string())?;
            let hom = hom_count(c, g) as i128;
            ensure(tr == hom, || format!("tr(A^{k}) = {tr} but hom(C{k}) = {hom} on {}", write_graph6(g)))?;
        }
    }
    Ok(format!("{} graphs, k = 3..8", corpus.len()))
}

fn c5_formula() -> Outcome {
    let cubic = enumerate_regular_range(4..=10, 3, true).map_err(|e| e.to_string())?;
    ensure(cubic.len() == 27, || format!("{} connected cubic graphs", cubic.len()))?;
    let c5 = f("C5");
    let p = c5_poly();
    for g in &cubic {
        let spectral = eval_poly_sum(&p, g, 3).map_err(|e| e.to_string())?;
        let direct = int(inj_count(&c5, g) as i64);
        ensure(spectral == direct, || format!("{}: {spectral} vs {direct}", write_graph6(g)))?;
    }
    Ok("27 graphs, exact".into())
}

fn petersen() -> Outcome {
    let c5 = f("C5");
    let report = search_max_density(&c5, 3, 10, true).map_err(|e| e.to_string())?;
    let petersen = canonical_graph6(&f("petersen")).unwrap();
    let names: Vec<&str> = report.maximizers.iter().map(|m| m.graph6.as_str()).collect();
    ensure(names == [petersen.as_str()], || format!("maximizers {names:?}"))?;
    ensure(report.best_density == int(12), || format!("density {}", report.best_density))?;
    // Independent route for the winning count.
    let via = inj_via_moebius(&c5, &f("petersen")).map_err(|e| e.to_string())?;
    ensure(via == 120, || format!("inversion gives {via}"))?;
    Ok(format!("unique maximizer Petersen at 12 over {} graphs", report.table.len()))
}

fn threshold() -> Outcome {
    let report = certify_threshold(&c5_poly(), OptParity::Odd, 2..=12).map_err(|e| e.to_string())?;
    let fails = report.failures();
    ensure(report.threshold == Some(7) && fails == [4, 5, 6], || {
        format!("threshold {:?}, failures {fails:?}; expected 7 with failures exactly [4, 5, 6]", report.threshold)
    })?;
    Ok("d* = 7, failures [4, 5, 6]".into())
}

fn monomials() -> Outcome {
    for d in 2..=12 {
        for k in [1, 3, 5, 7] {
            let c = majorant_check_odd(&BivarPoly::from_terms(&[(k, 0, 1)]), d).map_err(|e| e.to_string())?;
            ensure(c.verdict.passes(), || format!("odd λ^{k} at d={d}: {}", c.verdict.name()))?;
        }
        for k in [2, 4, 6, 8] {
            let c = majorant_check_even(&BivarPoly::from_terms(&[(k, 0, 1)]), d).map_err(|e| e.to_string())?;
            ensure(c.verdict.passes(), || format!("even λ^{k} at d={d}: {}", c.verdict.name()))?;
        }
    }
    Ok("odd k in {1,3,5,7}, even k in {2,4,6,8}, d = 2..12".into())
}

fn bound_soundness() -> Outcome {
    let start = Instant::now();
    let corpora = [
        (3, enumerate_regular_range(4..=10, 3, true).map_err(|e| e.to_string())?),
        (4, enumerate_regular_range(5..=9, 4, true).map_err(|e| e.to_string())?),
    ];
    let patterns: Vec<Graph> = connected_patterns(5).into_iter().filter(|h| !h.is_tree()).collect();
    let mut nonzero_anchor = Vec::new();
    for h in &patterns {
        let cert = build_bound_poly(h, None).map_err(|e| e.to_string())?;
        ensure(cert.shape_holds(), || format!("shape of {}", write_graph6(h)))?;
        for (d, corpus) in &corpora {
            let report = verify_bound(&cert, corpus, *d).map_err(|e| format!("{}: {e}", write_graph6(h)))?;
            ensure(report.rows.iter().all(|r| !r.gap.is_negative()), || "negative gap".into())?;
            if !report.anchor.gap.is_zero() {
                nonzero_anchor.push(format!("{}@d={d}", write_graph6(h)));
            }
        }
    }
    for exact in ["C3", "C4", "C5"] {
        let cert = build_bound_poly(&f(exact), None).map_err(|e| e.to_string())?;
        ensure(cert.exact, || format!("{exact} is not on the exact path"))?;
        ensure(cert.equality_report.iter().all(|r| r.gap.is_zero()), || format!("{exact} has a clique gap"))?;
        for (d, corpus) in &corpora {
            let report = verify_bound(&cert, corpus, *d).map_err(|e| e.to_string())?;
            ensure(report.anchor.gap.is_zero(), || format!("{exact} anchor gap at d={d}"))?;
        }
    }
    within(start, Duration::from_secs(900))?;
    Ok(format!(
        "{} patterns sound on {} + {} graphs; nonzero clique gaps: {}",
        patterns.len(),
        corpora[0].1.len(),
        corpora[1].1.len(),
        if nonzero_anchor.is_empty() { "none".to_string() } else { nonzero_anchor.join(" ") }
    ))
}

fn appendix_examples() -> Outcome {
    let report = verify_paper_examples().map_err(|e| e.to_string())?;
    let density = |name: &str| report.examples.iter().find(|r| r.name == name).unwrap().density.clone();
    ensure(density("octahedron") == int(40), || "octahedron".into())?;
    let four: Vec<_> = report.examples.iter().filter(|r| r.d == 4 && r.name != "K5").collect();
    ensure(four.len() == 9, || format!("{} d=4 examples", four.len()))?;
    ensure(four.iter().all(|r| r.density == four[0].density && r.regular), || "d=4 densities differ".into())?;
    ensure(four[0].density > int(24) && density("K5") == int(24), || "d=4 vs K5".into())?;
    ensure(density("complement of K3+C5") > int(120) && density("K6") == int(120), || "d=5".into())?;
    for name in ["K7", "K3,3,3", "K8 minus a perfect matching"] {
        ensure(density(name) == int(360), || format!("{name}: {}", density(name)))?;
    }
    ensure(report.passed(), || format!("{:?}", report.failed()))?;
    Ok(format!(
        "d=4 common density {}, d=5 example {}",
        four[0].density,
        density("complement of K3+C5")
    ))
}

fn tree_theorem() -> Outcome {
    let report = tree_extremal_check(&f("P4"), 3, 10).map_err(|e| e.to_string())?;
    ensure(report.holds && !report.maximizers.is_empty(), || {
        format!("maximizers {:?}, girth > 3 {:?}", report.maximizers, report.girth_set)
    })?;
    Ok(format!("{} maximizers = girth > 3 set of {} graphs", report.maximizers.len(), report.rows.len()))
}

fn vertex_walks() -> Outcome {
    let report = vertexwise_walk_check(3, 5, 10).map_err(|e| e.to_string())?;
    ensure(report.max == 60 && report.holds, || format!("max {} holds {}", report.max, report.holds))?;
    Ok(format!("max 60 at {} vertices, all in K4 components", report.attained.len()))
}

fn double_cover() -> Outcome {
    let corpus = constructed_corpus().map_err(|e| e.to_string())?;
    let bipartite: Vec<Graph> = connected_patterns(5).into_iter().filter(Graph::is_bipartite).collect();
    for g in &corpus {
        let cover = g.bipartite_double_cover();
        let (a, b) = (traces(g, 8).unwrap(), traces(&cover, 8).unwrap());
        for k in 0..=8 {
            let want = if k % 2 == 1 { 0 } else { 2 * a[k] };
            ensure(b[k] == want, || format!("tr(A^{k}) of cover of {}", write_graph6(g)))?;
        }
        for h in &bipartite {
            ensure(inj_count(h, &cover) >= 2 * inj_count(h, g), || {
                format!("{} in cover of {}", write_graph6(h), write_graph6(g))
            })?;
        }
    }
    Ok(format!("{} graphs, {} bipartite patterns", corpus.len(), bipartite.len()))
}

fn graph6_round_trip() -> Outcome {
    let mut graphs = enumerate_regular_range(4..=14, 3, true).map_err(|e| e.to_string())?;
    graphs.extend(enumerate_regular_range(5..=11, 4, true).map_err(|e| e.to_string())?);
    graphs.extend(enumerate_regular_range(6..=10, 5, true).map_err(|e| e.to_string())?);
    ensure(graphs.len() >= 1000, || format!("only {} graphs", graphs.len()))?;
    graphs.truncate(1000);
    for g in &graphs {
        let s = write_graph6(g);
        let back = parse_graph6(&s).map_err(|e| e.to_string())?;
        ensure(&back == g && write_graph6(&back) == s, || s.clone())?;
    }
    Ok("1000 graphs bit-exact".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("inversion identities", inversion),
        ("spectral trace identity", spectral_identity),
        ("pentagon spectral formula", c5_formula),
        ("Petersen extremality", petersen),
        ("pentagon majorant threshold", threshold),
        ("monomial majorants", monomials),
        ("bound soundness", bound_soundness),
        ("example densities", appendix_examples),
        ("tree girth check", tree_theorem),
        ("vertexwise walks", vertex_walks),
        ("double cover", double_cover),
        ("graph6 round trip", graph6_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
