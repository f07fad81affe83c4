//! Recursive construction of `p_H`.
//!
//! For a pattern `Y` that is not a tree, pick a spanning unicyclic `H' ≤ Y`
//! (so `inj(Y) ≤ inj(H')`) and expand
//!
//! ```text
//! inj(X) = hom(X) - Σ_P hom(X/P) + Σ_P Σ_Q inj(X/P/Q)
//! ```
//!
//! over non-trivial partitions, dropping loopy quotients (and non-bipartite
//! ones when aiming at `K_{d,d}`). `hom` of trees and unicyclic graphs is
//! exact, `-hom` of graphs with several cycles is bounded by the cycle
//! profile, and the inner `inj` terms recurse on strictly smaller patterns.
//! When every quotient is a tree or unicyclic the Möbius formula gives
//! `inj(X)` exactly instead.

use super::poly::{rat, rational_string, BivarPoly};
use super::profile::{choose_unicyclic_subgraph, neg_hom_majorant, unicyclic_hom_poly, Parity};
use crate::error::{Error, Result};
use crate::graphs::{canonical_form, construct_family, write_graph6, Family, Graph};
use crate::homomorphism::{enumerate_partitions, moebius_coeff, quotient};
use crate::spectral::eval_poly_sum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};

/// Largest pattern order accepted by [`build_bound_poly`].
pub const MAX_BOUND_ORDER: usize = 8;

/// Number of degrees, starting at `d = |V(H)|`, in the equality report.
const EQUALITY_SPAN: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `inj(Y) ≤ inj(H')` for a spanning unicyclic subgraph `H'`.
    Subgraph,
    /// `hom(X)` of a tree or unicyclic graph, exact.
    HomExact,
    /// `-hom(X/P)` of a tree or unicyclic quotient, exact.
    NegHomExact,
    /// `-hom(X/P) ≤ Σ q_{X/P}` from the cycle profile.
    NegHomMajorant,
    /// `inj(X/P/Q)` bounded by a smaller certificate.
    InjRecursive,
    /// `μ_P · hom(X/P)` term of the exact Möbius expansion.
    Moebius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Equality,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub depth: usize,
    pub rule: Rule,
    /// Canonical graph6 of the graph the rule is applied to.
    pub pattern: String,
    /// The unicyclic subgraph, for [`Rule::Subgraph`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgraph: Option<String>,
    /// Signed number of times the term enters the bound.
    pub multiplicity: i64,
    pub direction: Direction,
    /// Whether the step holds with equality at the anchor clique for
    /// `d = |V(H)|`.
    pub sharp_at_clique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityRow {
    pub d: u32,
    pub clique: String,
    pub poly_sum: BigRational,
    pub inj: BigInt,
    pub gap: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub pattern: Graph,
    pub poly: BivarPoly,
    pub parity: Parity,
    pub anchor_k: u32,
    /// True when no step is a strict inequality: the bound is an identity.
    pub exact: bool,
    pub steps: Vec<Step>,
    pub equality_report: Vec<EqualityRow>,
}

/// The extremal graph the bound is sharp for: `K_{d+1}` or `K_{d,d}`.
pub fn anchor_clique(parity: Parity, d: u32) -> Graph {
    let d = d as usize;
    let family = match parity {
        Parity::NonBipartite => Family::Complete(d + 1),
        Parity::Bipartite => Family::CompleteBipartite(d, d),
    };
    construct_family(&family).expect("cliques with d >= 1 are valid")
}

pub fn anchor_name(parity: Parity, d: u32) -> String {
    match parity {
        Parity::NonBipartite => format!("K{}", d + 1),
        Parity::Bipartite => format!("K{d},{d}"),
    }
}

fn falling(q: u32, k: usize) -> BigInt {
    (0..k as u32).fold(BigInt::one(), |acc, i| if i >= q { BigInt::zero() } else { acc * (q - i) })
}

/// `inj(x, K)` for the anchor clique in closed form: `(d+1)_v` for
/// `K_{d+1}`, and `2·(d)_a·(d)_b` for a connected bipartite `x` with sides
/// of sizes `a`, `b` into `K_{d,d}`.
pub fn inj_into_anchor(x: &Graph, parity: Parity, d: u32) -> BigInt {
    match parity {
        Parity::NonBipartite => falling(d + 1, x.order()),
        Parity::Bipartite => match x.bipartition() {
            None => BigInt::zero(),
            Some(_) if !x.is_connected() => {
                BigInt::from(crate::homomorphism::inj_count(x, &anchor_clique(parity, d)))
            }
            Some(side) => {
                let a = side.iter().filter(|&&s| s == 0).count();
                2 * falling(d, a) * falling(d, x.order() - a)
            }
        },
    }
}

/// `hom(x, K)` in closed form: `Σ_P (d+1)_{|P|}` over loop-free quotients for
/// `K_{d+1}`, and `2·d^v` for a connected bipartite `x` into `K_{d,d}`.
fn hom_into_anchor(x: &Graph, parity: Parity, d: u32) -> Result<BigInt> {
    match parity {
        Parity::NonBipartite => {
            let mut total = BigInt::zero();
            for p in enumerate_partitions(x.order())? {
                if !quotient(x, &p)?.has_loop {
                    total += falling(d + 1, p.block_count());
                }
            }
            Ok(total)
        }
        Parity::Bipartite if !x.is_bipartite() => Ok(BigInt::zero()),
        Parity::Bipartite if x.is_connected() => Ok(2 * BigInt::from(d).pow(x.order() as u32)),
        Parity::Bipartite => Ok(BigInt::from(crate::homomorphism::hom_count(x, &anchor_clique(parity, d)))),
    }
}

struct QuotientClass {
    graph: Graph,
    key: String,
    count: i64,
    moebius: i64,
}

fn canonical(g: &Graph) -> Result<(Graph, String)> {
    let c = canonical_form(g)?;
    let cg = c.graph(g);
    let key = write_graph6(&cg);
    Ok((cg, key))
}

fn int(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

struct Builder {
    parity: Parity,
    anchor: Graph,
    anchor_d: u32,
    upper_memo: HashMap<String, (BivarPoly, bool)>,
    expand_memo: HashMap<String, (BivarPoly, bool)>,
    steps: Vec<Step>,
}

impl Builder {
    fn anchor_sum(&self, p: &BivarPoly) -> Result<BigRational> {
        eval_poly_sum(p, &self.anchor, self.anchor_d)
    }

    fn step(&mut self, depth: usize, rule: Rule, pattern: &str, multiplicity: i64, direction: Direction, sharp: bool) {
        self.steps.push(Step {
            depth,
            rule,
            pattern: pattern.to_string(),
            subgraph: None,
            multiplicity,
            direction,
            sharp_at_clique: sharp,
        });
    }

    /// Admissible non-trivial quotients of `x`, grouped by isomorphism class.
    fn classes(&self, x: &Graph) -> Result<Vec<QuotientClass>> {
        let mut by_key: BTreeMap<String, QuotientClass> = BTreeMap::new();
        for p in enumerate_partitions(x.order())? {
            if p.is_discrete() {
                continue;
            }
            let q = quotient(x, &p)?;
            if q.has_loop || (self.parity == Parity::Bipartite && !q.simple.is_bipartite()) {
                continue;
            }
            let (graph, key) = canonical(&q.simple)?;
            let entry = by_key.entry(key.clone()).or_insert(QuotientClass {
                graph,
                key,
                count: 0,
                moebius: 0,
            });
            entry.count += 1;
            entry.moebius += moebius_coeff(&p);
        }
        Ok(by_key.into_values().collect())
    }

    /// Bound on `inj(y)` for a connected pattern that is not a tree (or, in
    /// the bipartite branch, any connected pattern).
    fn upper(&mut self, y: &Graph, depth: usize) -> Result<(BivarPoly, bool)> {
        let (y, key) = canonical(y)?;
        if let Some(hit) = self.upper_memo.get(&key) {
            return Ok(hit.clone());
        }
        let result = if y.cyclomatic_number() <= 1 {
            self.expand(&y, depth)?
        } else {
            let sub = choose_unicyclic_subgraph(&y, self.parity)?;
            let (sub, sub_key) = canonical(&sub)?;
            let sharp = inj_into_anchor(&y, self.parity, self.anchor_d) == inj_into_anchor(&sub, self.parity, self.anchor_d);
            self.steps.push(Step {
                depth,
                rule: Rule::Subgraph,
                pattern: key.clone(),
                subgraph: Some(sub_key),
                multiplicity: 1,
                direction: Direction::Upper,
                sharp_at_clique: sharp,
            });
            let (p, _) = self.expand(&sub, depth)?;
            (p, false)
        };
        self.upper_memo.insert(key, result.clone());
        Ok(result)
    }

    /// Bound on `inj(x)` for a tree or unicyclic `x` via the partition
    /// expansion.
    fn expand(&mut self, x: &Graph, depth: usize) -> Result<(BivarPoly, bool)> {
        let (x, key) = canonical(x)?;
        if let Some(hit) = self.expand_memo.get(&key) {
            return Ok(hit.clone());
        }
        let quotients = self.classes(&x)?;
        let mut p = unicyclic_hom_poly(&x)?;
        self.step(depth, Rule::HomExact, &key, 1, Direction::Equality, true);
        let mut exact = true;

        if quotients.iter().all(|q| q.graph.cyclomatic_number() <= 1) {
            for q in &quotients {
                p += &unicyclic_hom_poly(&q.graph)?.scale(&rat(q.moebius));
                self.step(depth, Rule::Moebius, &q.key, q.moebius, Direction::Equality, true);
            }
        } else {
            let mut inner: BTreeMap<String, (Graph, i64)> = BTreeMap::new();
            for q in &quotients {
                if q.graph.cyclomatic_number() <= 1 {
                    p -= &unicyclic_hom_poly(&q.graph)?.scale(&rat(q.count));
                    self.step(depth, Rule::NegHomExact, &q.key, q.count, Direction::Equality, true);
                } else {
                    let bound = neg_hom_majorant(&q.graph)?;
                    let hom = hom_into_anchor(&q.graph, self.parity, self.anchor_d)?;
                    let sharp = self.anchor_sum(&bound)? == -int(&hom);
                    p += &bound.scale(&rat(q.count));
                    self.step(depth, Rule::NegHomMajorant, &q.key, q.count, Direction::Upper, sharp);
                    exact = false;
                }
                for r in self.classes(&q.graph)? {
                    inner.entry(r.key).or_insert((r.graph, 0)).1 += q.count * r.count;
                }
            }
            for (inner_key, (graph, count)) in inner {
                let (sub, sub_exact) = self.upper(&graph, depth + 1)?;
                let gap = self.anchor_sum(&sub)? - int(&inj_into_anchor(&graph, self.parity, self.anchor_d));
                let direction = if sub_exact { Direction::Equality } else { Direction::Upper };
                self.step(depth, Rule::InjRecursive, &inner_key, count, direction, gap.is_zero());
                p += &sub.scale(&rat(count));
                exact &= sub_exact;
            }
        }
        self.expand_memo.insert(key, (p.clone(), exact));
        Ok((p, exact))
    }
}

/// Builds `p_H` for a connected pattern with a cycle. `parity` defaults to
/// the pattern's own.
pub fn build_bound_poly(h: &Graph, parity: Option<Parity>) -> Result<BoundCertificate> {
    if h.order() > MAX_BOUND_ORDER {
        return Err(Error::OrderTooLarge {
            order: h.order(),
            limit: MAX_BOUND_ORDER,
        });
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if h.cyclomatic_number() == 0 {
        return Err(Error::Tree);
    }
    let own = Parity::of(h);
    let parity = parity.unwrap_or(own);
    match (parity, own) {
        (Parity::Bipartite, Parity::NonBipartite) => return Err(Error::NotBipartite),
        (Parity::NonBipartite, Parity::Bipartite) => return Err(Error::NoOddCycle),
        _ => {}
    }
    let n = h.order() as u32;
    let mut builder = Builder {
        parity,
        anchor: anchor_clique(parity, n),
        anchor_d: n,
        upper_memo: HashMap::new(),
        expand_memo: HashMap::new(),
        steps: Vec::new(),
    };
    let (poly, exact) = builder.upper(h, 0)?;

    let top = poly.top_monomials();
    let shape_ok = match top.as_slice() {
        [(k, j)] if k + j == n => match parity {
            Parity::Bipartite => poly.lambda_exponents_even(),
            Parity::NonBipartite => k % 2 == 1,
        },
        _ => false,
    };
    if !shape_ok {
        return Err(Error::Invalid(format!("bound polynomial {poly} has the wrong leading shape")));
    }
    let anchor_k = top[0].0;

    let mut equality_report = Vec::new();
    for d in n..n + EQUALITY_SPAN {
        let clique = anchor_clique(parity, d);
        let poly_sum = eval_poly_sum(&poly, &clique, d)?;
        let inj = inj_into_anchor(h, parity, d);
        equality_report.push(EqualityRow {
            d,
            clique: anchor_name(parity, d),
            gap: &poly_sum - int(&inj),
            poly_sum,
            inj,
        });
    }

    Ok(BoundCertificate {
        pattern: h.clone(),
        poly,
        parity,
        anchor_k,
        exact,
        steps: builder.steps,
        equality_report,
    })
}

impl BoundCertificate {
    /// Leading-monomial and exponent-parity conditions, read off the
    /// coefficients alone.
    pub fn shape_holds(&self) -> bool {
        let n = self.pattern.order() as u32;
        let single_top = self.poly.top_monomials() == vec![(self.anchor_k, n - self.anchor_k)];
        let parity_ok = match self.parity {
            Parity::Bipartite => self.poly.lambda_exponents_even(),
            Parity::NonBipartite => self.anchor_k % 2 == 1,
        };
        single_top && parity_ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "hdensity.bound/1",
            "pattern": write_graph6(&self.pattern),
            "poly": self.poly.to_json(),
            "poly_text": self.poly.to_string(),
            "parity": self.parity.name(),
            "anchor_k": self.anchor_k,
            "exact": self.exact,
            "steps": serde_json::to_value(&self.steps).expect("steps serialize"),
            "equality_report": self.equality_report.iter().map(|r| json!({
                "d": r.d,
                "clique": r.clique,
                "poly_sum": rational_string(&r.poly_sum),
                "inj": r.inj.to_string(),
                "gap": rational_string(&r.gap),
            })).collect::<Vec<_>>(),
        })
    }
}
