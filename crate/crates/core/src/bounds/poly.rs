use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Polynomial in `λ` and `d` with exact rational coefficients, keyed by
/// `(λ-exponent, d-exponent)`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl BivarPoly {
    pub fn zero() -> BivarPoly {
        BivarPoly::default()
    }

    /// `c · λ^k d^j`
    pub fn monomial(k: u32, j: u32, c: BigRational) -> BivarPoly {
        let mut p = BivarPoly::zero();
        p.add_term(k, j, c);
        p
    }

    /// Integer-coefficient polynomial from `(k, j, c)` triples.
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for &(k, j, c) in terms {
            p.add_term(k, j, rat(c));
        }
        p
    }

    pub fn add_term(&mut self, k: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((k, j)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(k, j));
        }
    }

    pub fn coefficient(&self, k: u32, j: u32) -> BigRational {
        self.terms.get(&(k, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing `(k, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigRational)> {
        self.terms.iter().map(|(&(k, j), c)| (k, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(k, j)| k + j).max()
    }

    pub fn max_lambda_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(k, _)| k).max()
    }

    /// Largest `k + j`, ties broken by larger `k`.
    pub fn leading_monomial(&self) -> Option<(u32, u32)> {
        self.terms.keys().copied().max_by_key(|&(k, j)| (k + j, k))
    }

    /// Monomials attaining the total degree.
    pub fn top_monomials(&self) -> Vec<(u32, u32)> {
        let Some(t) = self.total_degree() else {
            return Vec::new();
        };
        self.terms.keys().copied().filter(|&(k, j)| k + j == t).collect()
    }

    pub fn lambda_exponents_even(&self) -> bool {
        self.terms.keys().all(|&(k, _)| k % 2 == 0)
    }

    pub fn scale(&self, c: &BigRational) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (k, j, v) in self.terms() {
            p.add_term(k, j, v * c);
        }
        p
    }

    pub fn eval(&self, lambda: &BigRational, d: &BigRational) -> BigRational {
        self.terms()
            .map(|(k, j, c)| c * pow(lambda, k) * pow(d, j))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// `{"coefficients": [[k, j, num, den], ...]}`; integers that do not fit
    /// in `i64` are written as decimal strings.
    pub fn to_json(&self) -> Value {
        let coefficients: Vec<Value> = self
            .terms()
            .map(|(k, j, c)| json!([k, j, big_to_json(c.numer()), big_to_json(c.denom())]))
            .collect();
        json!({ "coefficients": coefficients })
    }

    pub fn from_json(v: &Value) -> Result<BivarPoly> {
        let bad = |m: &str| Error::Json(format!("polynomial: {m}"));
        let list = v
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"coefficients\" array"))?;
        let mut p = BivarPoly::zero();
        for entry in list {
            let a = entry
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| bad("each coefficient must be [k, j, num, den]"))?;
            let exp = |x: &Value| {
                x.as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("exponents must be nonnegative integers"))
            };
            let (k, j) = (exp(&a[0])?, exp(&a[1])?);
            let num = json_to_big(&a[2]).ok_or_else(|| bad("numerator must be an integer"))?;
            let den = json_to_big(&a[3]).ok_or_else(|| bad("denominator must be an integer"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            p.add_term(k, j, BigRational::new(num, den));
        }
        Ok(p)
    }
}

pub(crate) fn pow(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

pub(crate) fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn json_to_big(v: &Value) -> Option<BigInt> {
    if let Some(i) = v.as_i64() {
        Some(BigInt::from(i))
    } else if let Some(u) = v.as_u64() {
        Some(BigInt::from(u))
    } else {
        v.as_str()?.parse().ok()
    }
}

/// `p/q` with the denominator always present.
pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut p = self.clone();
        p += rhs;
        p
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut p = self.clone();
        p -= rhs;
        p
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (k, j, c) in rhs.terms() {
            self.add_term(k, j, c.clone());
        }
    }
}

impl SubAssign<&BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &BivarPoly) {
        for (k, j, c) in rhs.terms() {
            self.add_term(k, j, -c.clone());
        }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (k1, j1, a) in self.terms() {
            for (k2, j2, b) in rhs.terms() {
                p.add_term(k1 + k2, j1 + j2, a * b);
            }
        }
        p
    }
}

impl fmt::Display for BivarPoly {
    /// Highest total degree first, e.g. `λ^5 - 5λ^3d + 5λ^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(k, j)| std::cmp::Reverse((k + j, k)));
        for (i, (k, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(k, j)];
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            let monomial = match (k, j) {
                (0, 0) => String::new(),
                _ => {
                    let var = |name: &str, e: u32| match e {
                        0 => String::new(),
                        1 => name.to_string(),
                        e => format!("{name}^{e}"),
                    };
                    format!("{}{}", var("λ", k), var("d", j))
                }
            };
            if monomial.is_empty() || !a.is_one() {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            f.write_str(&monomial)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> BivarPoly {
        BivarPoly::from_terms(&[(5, 0, 1), (3, 0, 5), (3, 1, -5)])
    }

    #[test]
    fn leading_monomial_prefers_lambda() {
        let p = c5();
        assert_eq!(p.total_degree(), Some(5));
        assert_eq!(p.leading_monomial(), Some((5, 0)));
        let q = BivarPoly::from_terms(&[(2, 2, 1), (4, 0, 1)]);
        assert_eq!(q.leading_monomial(), Some((4, 0)));
        assert_eq!(q.top_monomials(), vec![(2, 2), (4, 0)]);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = c5();
        assert!((&p - &p).is_zero());
        let mut q = p.clone();
        q.add_term(3, 1, rat(5));
        assert_eq!(q.coefficient(3, 1), rat(0));
        assert_eq!(q.terms().count(), 2);
    }

    #[test]
    fn display() {
        assert_eq!(c5().to_string(), "λ^5 - 5λ^3d + 5λ^3");
        assert_eq!(BivarPoly::from_terms(&[(4, 0, 1), (0, 2, -2), (0, 1, 1)]).to_string(), "λ^4 - 2d^2 + d");
        assert_eq!(BivarPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let mut p = c5();
        p.add_term(0, 0, BigRational::new(BigInt::from(1), BigInt::from(3)));
        p.add_term(1, 0, BigRational::from_integer(BigInt::from(10).pow(30)));
        let back = BivarPoly::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert!(BivarPoly::from_json(&json!({"coefficients": [[1, 0, 1, 0]]})).is_err());
        assert!(BivarPoly::from_json(&json!({"coeffs": []})).is_err());
    }

    #[test]
    fn evaluation_and_product() {
        let p = c5();
        // λ = 3, d = 3: 243 + (5 - 15)·27 = -27
        assert_eq!(p.eval(&rat(3), &rat(3)), rat(-27));
        let sq = &p * &p;
        assert_eq!(sq.eval(&rat(2), &rat(3)), p.eval(&rat(2), &rat(3)).pow(2));
    }
}
