use super::majorant::{majorant_check_even, majorant_check_odd, MajorantCertificate, OptParity, Verdict};
use crate::bounds::BivarPoly;
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::ops::RangeInclusive;

/// Per-d majorant verdicts over a scanned range. The threshold certifies
/// the scanned degrees only; it is not a proof for all larger `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub source: BivarPoly,
    pub parity: OptParity,
    pub d_range: RangeInclusive<u32>,
    /// Sorted by `d`.
    pub certificates: Vec<MajorantCertificate>,
    /// Smallest `d*` such that every scanned `d ≥ d*` passes; `None` when
    /// the last scanned degree fails.
    pub threshold: Option<u32>,
}

impl ThresholdReport {
    pub fn verdicts(&self) -> Vec<(u32, Verdict)> {
        self.certificates.iter().map(|c| (c.d, c.verdict)).collect()
    }

    pub fn failures(&self) -> Vec<u32> {
        self.certificates.iter().filter(|c| !c.verdict.passes()).map(|c| c.d).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "hdensity.threshold/1",
            "scope": "scanned-range",
            "source": self.source.to_json(),
            "poly_text": self.source.to_string(),
            "parity": self.parity.name(),
            "d_range": [self.d_range.start(), self.d_range.end()],
            "threshold": self.threshold,
            "fail": self.failures(),
            "verdicts": self.certificates.iter().map(|c| json!({"d": c.d, "verdict": c.verdict.name()})).collect::<Vec<_>>(),
            "certificates": self.certificates.iter().map(MajorantCertificate::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn check(p: &BivarPoly, parity: OptParity, d: u32) -> Result<MajorantCertificate> {
    match parity {
        OptParity::Even => majorant_check_even(p, d),
        OptParity::Odd => majorant_check_odd(p, d),
    }
}

pub fn certify_threshold(p: &BivarPoly, parity: OptParity, d_range: RangeInclusive<u32>) -> Result<ThresholdReport> {
    if d_range.is_empty() {
        return Err(Error::EmptyInterval {
            lo: d_range.start().to_string(),
            hi: d_range.end().to_string(),
        });
    }
    let mut certificates: Vec<MajorantCertificate> = d_range
        .clone()
        .into_par_iter()
        .map(|d| check(p, parity, d))
        .collect::<Result<_>>()?;
    certificates.sort_by_key(|c| c.d);
    let threshold = match certificates.iter().rposition(|c| !c.verdict.passes()) {
        None => Some(*d_range.start()),
        Some(i) if i + 1 < certificates.len() => Some(certificates[i + 1].d),
        Some(_) => None,
    };
    Ok(ThresholdReport {
        source: p.clone(),
        parity,
        d_range,
        certificates,
        threshold,
    })
}
