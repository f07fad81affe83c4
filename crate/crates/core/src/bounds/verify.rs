use super::certificate::{anchor_clique, anchor_name, inj_into_anchor, BoundCertificate};
use super::poly::rational_string;
use crate::error::{Error, Result};
use crate::graphs::{write_graph6, Graph};
use crate::homomorphism::inj_count;
use crate::spectral::eval_poly_sum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapRow {
    pub graph6: String,
    pub poly_sum: BigRational,
    pub inj: BigInt,
    pub gap: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub d: u32,
    /// One row per corpus graph, in corpus order.
    pub rows: Vec<GapRow>,
    pub anchor: GapRow,
}

impl VerifyReport {
    pub fn zero_gaps(&self) -> usize {
        self.rows.iter().filter(|r| r.gap.is_zero()).count()
    }

    pub fn to_json(&self) -> Value {
        let row = |r: &GapRow| {
            json!({
                "graph6": r.graph6,
                "poly_sum": rational_string(&r.poly_sum),
                "inj": r.inj.to_string(),
                "gap": rational_string(&r.gap),
            })
        };
        json!({
            "schema": "hdensity.verify/1",
            "d": self.d,
            "rows": self.rows.iter().map(row).collect::<Vec<_>>(),
            "anchor": row(&self.anchor),
        })
    }
}

fn gap_row(cert: &BoundCertificate, g: &Graph, d: u32) -> Result<GapRow> {
    let poly_sum = eval_poly_sum(&cert.poly, g, d)?;
    let inj = BigInt::from(inj_count(&cert.pattern, g));
    Ok(GapRow {
        graph6: write_graph6(g),
        gap: &poly_sum - BigRational::from_integer(inj.clone()),
        poly_sum,
        inj,
    })
}

/// Checks `Σ_λ p_H(λ, d) ≥ inj(H, G)` exactly on every corpus graph. A
/// negative gap rejects the certificate, naming the first offending graph in
/// corpus order.
pub fn verify_bound(cert: &BoundCertificate, corpus: &[Graph], d: u32) -> Result<VerifyReport> {
    let rows: Vec<GapRow> = corpus
        .par_iter()
        .map(|g| gap_row(cert, g, d))
        .collect::<Result<_>>()?;
    if let Some(bad) = rows.iter().find(|r| r.gap.is_negative()) {
        return Err(Error::CertificateRejected {
            graph6: bad.graph6.clone(),
            gap: rational_string(&bad.gap),
        });
    }
    let clique = anchor_clique(cert.parity, d);
    let poly_sum = eval_poly_sum(&cert.poly, &clique, d)?;
    let inj = inj_into_anchor(&cert.pattern, cert.parity, d);
    let anchor = GapRow {
        graph6: anchor_name(cert.parity, d),
        gap: &poly_sum - BigRational::from_integer(inj.clone()),
        poly_sum,
        inj,
    };
    Ok(VerifyReport { d, rows, anchor })
}
