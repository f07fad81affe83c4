//! Spectral moments. Traces of adjacency powers are computed exactly with
//! checked integer arithmetic; floating eigenvalues are only for reporting.

use crate::bounds::BivarPoly;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Largest exponent accepted by the exact trace routines.
pub const MAX_TRACE_POWER: usize = 16;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralMoments {
    /// `traces[k] = tr(A^k)` for `k = 0..=k_max`.
    pub traces: Vec<i128>,
    pub order: usize,
    pub degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMeasure {
    /// Distinct eigenvalues, descending, with multiplicities.
    pub eigenvalues: Vec<(f64, usize)>,
    pub tolerance: f64,
}

impl SpectralMeasure {
    /// `Σ λ^k` over the spectrum with multiplicity.
    pub fn power_sum(&self, k: u32) -> f64 {
        self.eigenvalues.iter().map(|&(l, m)| m as f64 * l.powi(k as i32)).sum()
    }
}

fn check_power(k: usize) -> Result<()> {
    if k > MAX_TRACE_POWER {
        Err(Error::ExponentOutOfRange {
            k,
            max: MAX_TRACE_POWER,
        })
    } else {
        Ok(())
    }
}

/// Dense `A·M` where `A` is the adjacency matrix.
fn adjacency_times(g: &Graph, m: &[i128]) -> Result<Vec<i128>> {
    let n = g.order();
    let mut out = vec![0i128; n * n];
    for i in 0..n {
        let row = &mut out[i * n..(i + 1) * n];
        for w in g.neighbors(i) {
            for (o, x) in row.iter_mut().zip(&m[w * n..(w + 1) * n]) {
                *o = o.checked_add(*x).ok_or(Error::Overflow("matrix power"))?;
            }
        }
    }
    Ok(out)
}

/// `tr(A^k)` for `k = 0..=k_max`.
pub fn traces(g: &Graph, k_max: usize) -> Result<Vec<i128>> {
    check_power(k_max)?;
    let n = g.order();
    let mut power: Vec<i128> = (0..n * n).map(|x| (x / n == x % n) as i128).collect();
    let mut out = vec![n as i128];
    for _ in 0..k_max {
        power = adjacency_times(g, &power)?;
        out.push((0..n).map(|i| power[i * n + i]).sum());
    }
    Ok(out)
}

pub fn trace_power(g: &Graph, k: usize) -> Result<i128> {
    Ok(traces(g, k)?[k])
}

pub fn spectral_moments(g: &Graph, k_max: usize) -> Result<SpectralMoments> {
    Ok(SpectralMoments {
        traces: traces(g, k_max)?,
        order: g.order(),
        degree: g.regular_degree(),
    })
}

/// `(A^k)_{v,v}`: closed walks of length `k` starting and ending at `v`.
pub fn closed_walks_at_vertex(g: &Graph, v: usize, k: usize) -> Result<i128> {
    check_power(k)?;
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let mut x = vec![0i128; g.order()];
    x[v] = 1;
    for _ in 0..k {
        let mut y = vec![0i128; g.order()];
        for (i, yi) in y.iter_mut().enumerate() {
            for w in g.neighbors(i) {
                *yi = yi.checked_add(x[w]).ok_or(Error::Overflow("closed walks"))?;
            }
        }
        x = y;
    }
    Ok(x[v])
}

/// All eigenvalues of the adjacency matrix, grouped into clusters whose
/// consecutive members lie within `10·tol`.
pub fn eigenvalues(g: &Graph, tol: f64) -> SpectralMeasure {
    let n = g.order();
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut values: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    values.sort_by(|x, y| y.total_cmp(x));
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for l in values {
        match clusters.last_mut() {
            Some(c) if c.last().is_some_and(|&prev| prev - l <= 10.0 * tol) => c.push(l),
            _ => clusters.push(vec![l]),
        }
    }
    SpectralMeasure {
        eigenvalues: clusters
            .into_iter()
            .map(|c| {
                let mean = c.iter().sum::<f64>() / c.len() as f64;
                // Snap to the nearest integer when it is within tolerance.
                let snapped = if (mean - mean.round()).abs() <= 10.0 * tol { mean.round() + 0.0 } else { mean };
                (snapped, c.len())
            })
            .collect(),
        tolerance: tol,
    }
}

/// `Σ_{λ∈σ(G)} p(λ, d) = Σ c_{k,j} tr(A^k) d^j`, exactly.
pub fn eval_poly_sum(p: &BivarPoly, g: &Graph, d: u32) -> Result<BigRational> {
    if g.regular_degree() != Some(d as usize) {
        return Err(Error::NotRegular { d });
    }
    let k_max = p.max_lambda_degree().unwrap_or(0) as usize;
    let tr = traces(g, k_max)?;
    let d = BigInt::from(d);
    let mut total = BigRational::zero();
    for (k, j, c) in p.terms() {
        total += c * BigRational::from_integer(BigInt::from(tr[k as usize]) * d.pow(j));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::BivarPoly;
    use crate::graphs::{construct_family, Family};
    use crate::homomorphism::inj_count;

    fn f(s: &str) -> Graph {
        construct_family(&s.parse::<Family>().unwrap()).unwrap()
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn petersen_traces() {
        let p = f("petersen");
        assert_eq!(trace_power(&p, 2).unwrap(), 30);
        assert_eq!(trace_power(&p, 3).unwrap(), 0);
        assert_eq!(trace_power(&p, 5).unwrap(), 120);
        let m = spectral_moments(&p, 4).unwrap();
        assert_eq!(m.traces[..2], [10, 0]);
        assert_eq!(m.degree, Some(3));
        assert!(trace_power(&p, 17).is_err());
    }

    #[test]
    fn closed_walks() {
        let k4 = f("K4");
        for v in 0..4 {
            assert_eq!(closed_walks_at_vertex(&k4, v, 3).unwrap(), 6);
            assert_eq!(closed_walks_at_vertex(&k4, v, 5).unwrap(), 60);
        }
        assert_eq!(closed_walks_at_vertex(&f("petersen"), 7, 3).unwrap(), 0);
        assert!(closed_walks_at_vertex(&k4, 4, 3).is_err());
    }

    #[test]
    fn spectra() {
        assert_eq!(eigenvalues(&f("K4"), DEFAULT_TOLERANCE).eigenvalues, vec![(3.0, 1), (-1.0, 3)]);
        assert_eq!(
            eigenvalues(&f("K3,3"), DEFAULT_TOLERANCE).eigenvalues,
            vec![(3.0, 1), (0.0, 4), (-3.0, 1)]
        );
        let p = eigenvalues(&f("petersen"), DEFAULT_TOLERANCE);
        assert_eq!(p.eigenvalues, vec![(3.0, 1), (1.0, 5), (-2.0, 4)]);
        for k in 0..=6 {
            assert!((p.power_sum(k) - trace_power(&f("petersen"), k as usize).unwrap() as f64).abs() < 1e-6);
        }
    }

    #[test]
    fn c5_formula_sums() {
        let p = BivarPoly::from_terms(&[(5, 0, 1), (3, 0, 5), (3, 1, -5)]);
        assert_eq!(eval_poly_sum(&p, &f("petersen"), 3).unwrap(), int(120));
        assert_eq!(eval_poly_sum(&p, &f("K4"), 3).unwrap(), int(0));
        assert_eq!(eval_poly_sum(&p, &f("K8"), 7).unwrap(), int(6720));
        assert_eq!(inj_count(&f("C5"), &f("K8")), 6720);
        assert!(matches!(eval_poly_sum(&p, &f("K4"), 4), Err(Error::NotRegular { d: 4 })));
    }
}
