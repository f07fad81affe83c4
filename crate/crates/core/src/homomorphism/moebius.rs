//! Inversion over the partition lattice of the pattern:
//! `hom(H) = Σ_P inj(H/P)` and `inj(H) = Σ_P μ_P hom(H/P)`.

use super::count::inj_count;
use super::partition::{enumerate_partitions, Partition};
use super::quotient::quotient;
use crate::error::Result;
use crate::graphs::Graph;

/// `μ_P = (-1)^(n - |P|) ∏_{S ∈ P} (|S| - 1)!`
pub fn moebius_coeff(p: &Partition) -> i64 {
    let sign = if (p.len() - p.block_count()).is_multiple_of(2) { 1 } else { -1 };
    let product: i64 = p
        .blocks()
        .iter()
        .map(|b| (1..b.len() as i64).product::<i64>())
        .product();
    sign * product
}

pub fn inj_via_moebius(h: &Graph, g: &Graph) -> Result<i128> {
    let mut total = 0i128;
    for p in enumerate_partitions(h.order())? {
        let q = quotient(h, &p)?;
        if !q.has_loop {
            total += moebius_coeff(&p) as i128 * q.hom_count(g) as i128;
        }
    }
    Ok(total)
}

pub fn hom_via_inj_sum(h: &Graph, g: &Graph) -> Result<u128> {
    let mut total = 0u128;
    for p in enumerate_partitions(h.order())? {
        let q = quotient(h, &p)?;
        if !q.has_loop {
            total += inj_count(&q.simple, g);
        }
    }
    Ok(total)
}
