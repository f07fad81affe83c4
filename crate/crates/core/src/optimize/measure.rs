use super::unipoly::UniPoly;
use crate::bounds::{BivarPoly, Parity};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Finitely supported probability measure: `(value, weight)` pairs.
pub type Measure = Vec<(BigRational, BigRational)>;

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Spectral measure of the extremal graph for `parity` at degree `d`:
/// `K_{d,d}` puts `1/(2d)` on each of `±d` and `1 - 1/d` on `0`; `K_{d+1}`
/// puts `1/(d+1)` on `d` and `d/(d+1)` on `-1`.
pub fn extremal_measure(parity: Parity, d: u32) -> Measure {
    let dd = int(d as i64);
    match parity {
        Parity::Bipartite => {
            let w = (int(2) * &dd).recip();
            vec![
                (dd.clone(), w.clone()),
                (BigRational::zero(), BigRational::one() - dd.recip()),
                (-dd, w),
            ]
        }
        Parity::NonBipartite => {
            let total = &dd + int(1);
            vec![
                (dd.clone(), total.recip()),
                (int(-1), dd / total),
            ]
        }
    }
}

/// The same measure pushed to the optimization variable: `Y = (X/d)^2` in
/// the bipartite case and `Y = X/d` otherwise.
pub fn extremal_y_measure(parity: Parity, d: u32) -> Measure {
    let dd = int(d as i64);
    let mut out: Measure = Vec::new();
    for (x, w) in extremal_measure(parity, d) {
        let y = match parity {
            Parity::Bipartite => (&x / &dd) * (&x / &dd),
            Parity::NonBipartite => &x / &dd,
        };
        match out.iter_mut().find(|(v, _)| *v == y) {
            Some((_, acc)) => *acc += w,
            None => out.push((y, w)),
        }
    }
    out
}

/// `E[X^k]`.
pub fn moment(mu: &[(BigRational, BigRational)], k: u32) -> BigRational {
    mu.iter()
        .map(|(x, w)| w * num_traits::pow(x.clone(), k as usize))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `E[p(X, d)]`.
pub fn expectation(p: &BivarPoly, mu: &[(BigRational, BigRational)], d: u32) -> BigRational {
    let dd = int(d as i64);
    mu.iter()
        .map(|(x, w)| w * p.eval(x, &dd))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `Σ_{a=0}^{k-2} (a+1) y0^a y^(k-2-a)`, the quotient of
/// `y^k - y0^k - (y - y0)·k·y0^(k-1)` by `(y - y0)^2`.
pub fn tangent_quotient(k: usize, y0: &BigRational) -> UniPoly {
    if k < 2 {
        return UniPoly::zero();
    }
    let mut coeffs = vec![BigRational::zero(); k - 1];
    let mut power = BigRational::one();
    for a in 0..=k - 2 {
        coeffs[k - 2 - a] = &power * int(a as i64 + 1);
        power *= y0;
    }
    UniPoly::new(coeffs)
}

/// `y^k - y0^k - (y - y0)·k·y0^(k-1)`.
pub fn tangent_remainder(k: usize, y0: &BigRational) -> UniPoly {
    let yk = UniPoly::monomial(k, BigRational::one());
    let c = num_traits::pow(y0.clone(), k);
    let slope = if k == 0 { BigRational::zero() } else { int(k as i64) * num_traits::pow(y0.clone(), k - 1) };
    let line = &UniPoly::linear_root(y0).scale(&slope) + &UniPoly::constant(c);
    &yk - &line
}
