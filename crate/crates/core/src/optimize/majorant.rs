use super::sturm::sturm_nonneg_on_interval;
use super::unipoly::UniPoly;
use crate::bounds::{rational_string, BivarPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Which optimization lemma applies: even λ-exponents use `Y = (X/d)^2` and
/// a line majorant, the odd case uses `Y = X/d` and a tangent parabola.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OptParity {
    Even,
    Odd,
}

impl OptParity {
    pub fn name(self) -> &'static str {
        match self {
            OptParity::Even => "even",
            OptParity::Odd => "odd",
        }
    }
}

impl std::str::FromStr for OptParity {
    type Err = Error;
    fn from_str(s: &str) -> Result<OptParity> {
        match s {
            "even" => Ok(OptParity::Even),
            "odd" => Ok(OptParity::Odd),
            other => Err(Error::Invalid(format!("parity must be even or odd, got {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    /// `L ≡ q`: every admissible measure is optimal.
    PassFlat,
    Fail,
}

impl Verdict {
    pub fn passes(self) -> bool {
        self != Verdict::Fail
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::PassFlat => "pass-flat",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// A point of the domain with `q(y) > L(y)`, when one exists.
    pub point: Option<BigRational>,
    /// Isolating interval of the first interior root of the residual.
    pub root_interval: Option<(BigRational, BigRational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorantCertificate {
    pub source: BivarPoly,
    pub d: u32,
    pub parity: OptParity,
    /// The transformed polynomial.
    pub q: UniPoly,
    pub majorant: UniPoly,
    /// Contact points and multiplicities; the product of their factors
    /// (with `1 - y` at the right end) times `residual` is `L - q`.
    pub contacts: Vec<(BigRational, u32)>,
    pub residual: UniPoly,
    pub verdict: Verdict,
    /// The residual vanishes at an end of the domain beyond the designed
    /// contacts.
    pub boundary_contact: bool,
    pub witness: Option<Witness>,
}

impl MajorantCertificate {
    pub fn domain(&self) -> (BigRational, BigRational) {
        domain(self.parity)
    }

    /// `Π (contact factors) · residual`; equals `majorant - q` exactly.
    pub fn contact_product(&self) -> UniPoly {
        let one = BigRational::one();
        let mut out = self.residual.clone();
        for (c, m) in &self.contacts {
            let factor = if *c == one {
                UniPoly::from_ints(&[1, -1])
            } else {
                UniPoly::linear_root(c)
            };
            for _ in 0..*m {
                out = &out * &factor;
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let poly = |p: &UniPoly| p.coeffs().iter().map(rational_string).collect::<Vec<_>>();
        json!({
            "schema": "hdensity.majorant/1",
            "source": self.source.to_json(),
            "d": self.d,
            "parity": self.parity.name(),
            "q": poly(&self.q),
            "majorant": poly(&self.majorant),
            "contacts": self.contacts.iter().map(|(c, m)| json!({"y": rational_string(c), "multiplicity": m})).collect::<Vec<_>>(),
            "residual": poly(&self.residual),
            "residual_text": self.residual.to_string(),
            "verdict": self.verdict.name(),
            "boundary_contact": self.boundary_contact,
            "witness": self.witness.as_ref().map(|w| json!({
                "point": w.point.as_ref().map(rational_string),
                "root_interval": w.root_interval.as_ref().map(|(a, b)| [rational_string(a), rational_string(b)]),
            })),
        })
    }
}

fn domain(parity: OptParity) -> (BigRational, BigRational) {
    match parity {
        OptParity::Even => (BigRational::zero(), BigRational::one()),
        OptParity::Odd => (-BigRational::one(), BigRational::one()),
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn check_degree(d: u32) -> Result<()> {
    if d < 2 {
        Err(Error::DegreeTooSmall(d))
    } else {
        Ok(())
    }
}

/// Substitutes `λ = d·y^(1/2)` or `λ = d·y` and divides by `d^n`, `n` the
/// total degree; `λ^k d^j` lands on `y^(k/2)` or `y^k`.
fn transform(p: &BivarPoly, d: u32, even: bool) -> Result<UniPoly> {
    check_degree(d)?;
    let n = p.total_degree().ok_or(Error::ZeroPolynomial)?;
    let dd = int(d as i64);
    let mut out = UniPoly::zero();
    for (k, j, c) in p.terms() {
        if even && k % 2 == 1 {
            return Err(Error::OddExponent(k));
        }
        let e = if even { k / 2 } else { k };
        let scale = num_traits::pow(dd.clone(), (k + j) as usize) / num_traits::pow(dd.clone(), n as usize);
        out = &out + &UniPoly::monomial(e as usize, c * scale);
    }
    Ok(out)
}

/// `q(y) = p(d√y, d)/d^n`.
pub fn transform_even(p: &BivarPoly, d: u32) -> Result<UniPoly> {
    transform(p, d, true)
}

/// `q(y) = p(d·y, d)/d^n`.
pub fn transform_odd(p: &BivarPoly, d: u32) -> Result<UniPoly> {
    transform(p, d, false)
}

/// Line through `(0, q(0))` and `(1, q(1))`; passes when `L - q > 0` on
/// `(0, 1)`.
pub fn majorant_check_even(p: &BivarPoly, d: u32) -> Result<MajorantCertificate> {
    let q = transform_even(p, d)?;
    let (zero, one) = domain(OptParity::Even);
    let q0 = q.eval(&zero);
    let majorant = UniPoly::new(vec![q0.clone(), q.eval(&one) - q0]);
    let diff = &majorant - &q;
    let contacts = vec![(zero.clone(), 1), (one.clone(), 1)];
    let base = UniPoly::from_ints(&[0, 1, -1]);
    let residual = diff.div_exact(&base).expect("L - q vanishes at 0 and 1");
    finish(p, d, OptParity::Even, q, majorant, contacts, residual)
}

/// Parabola tangent to `q` at `y0 = -1/d` and meeting it at `1`; passes when
/// the residual is positive on `(-1, 1)` away from contacts.
pub fn majorant_check_odd(p: &BivarPoly, d: u32) -> Result<MajorantCertificate> {
    let q = transform_odd(p, d)?;
    let one = BigRational::one();
    let y0 = -int(d as i64).recip();
    let qy0 = q.eval(&y0);
    let slope = q.derivative().eval(&y0);
    let gap = &one - &y0;
    let curvature = (q.eval(&one) - &qy0 - &slope * &gap) / (&gap * &gap);
    let shift = UniPoly::linear_root(&y0);
    let majorant = &(&UniPoly::constant(qy0) + &shift.scale(&slope)) + &(&shift * &shift).scale(&curvature);
    let diff = &majorant - &q;
    let mut contacts = vec![(y0.clone(), 2), (one.clone(), 1)];
    let base = &(&shift * &shift) * &UniPoly::from_ints(&[1, -1]);
    let mut residual = diff.div_exact(&base).expect("L - q has a double zero at y0 and a zero at 1");
    // Higher order contact at y0 is an interior zero of the residual; an
    // even order keeps its sign, an odd order crosses.
    if !residual.is_zero() {
        let extra = residual.root_multiplicity(&y0);
        if extra.is_multiple_of(2) && extra > 0 {
            for _ in 0..extra {
                residual = residual.div_rem(&shift).0;
            }
            contacts[0].1 += extra as u32;
        }
    }
    finish(p, d, OptParity::Odd, q, majorant, contacts, residual)
}

fn finish(
    p: &BivarPoly,
    d: u32,
    parity: OptParity,
    q: UniPoly,
    majorant: UniPoly,
    contacts: Vec<(BigRational, u32)>,
    residual: UniPoly,
) -> Result<MajorantCertificate> {
    let mut cert = MajorantCertificate {
        source: p.clone(),
        d,
        parity,
        q,
        majorant,
        contacts,
        residual,
        verdict: Verdict::PassFlat,
        boundary_contact: false,
        witness: None,
    };
    if cert.residual.is_zero() {
        return Ok(cert);
    }
    let (a, b) = domain(parity);
    let open = sturm_nonneg_on_interval(&cert.residual, &a, &b, true)?;
    let closed = sturm_nonneg_on_interval(&cert.residual, &a, &b, false)?;
    cert.boundary_contact = !closed.boundary_zeros.is_empty();
    if open.holds && closed.holds {
        cert.verdict = Verdict::Pass;
    } else {
        cert.verdict = Verdict::Fail;
        // Contact factors are positive inside the domain except the odd
        // power of y - y0 when the residual crosses there.
        let point = open.negative_at.filter(|y| (&cert.majorant - &cert.q).eval(y).is_negative());
        cert.witness = Some(Witness {
            point,
            root_interval: open.root_interval,
        });
    }
    Ok(cert)
}
