use super::unipoly::{sign, UniPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Witness intervals are refined below this width.
pub const WITNESS_WIDTH_BITS: u32 = 20;

/// Sturm sequence `p, p', -rem(p, p'), ...`, each member reduced to a
/// primitive integer polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<UniPoly>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> SturmSequence {
        let mut seq = vec![p.primitive()];
        let mut next = p.derivative().primitive();
        while !next.is_zero() {
            let rem = seq.last().unwrap().div_rem(&next).1;
            seq.push(next);
            next = (-&rem).primitive();
        }
        SturmSequence { seq }
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.seq
    }

    /// Sign changes at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut prev = 0;
        let mut count = 0;
        for p in &self.seq {
            let s = sign(&p.eval(x));
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Distinct roots in `(a, b]`, given `p(a) ≠ 0`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Isolating intervals `(lo, hi)` of the distinct real roots of `p` in the
/// open interval `(a, b)`, left to right, each narrower than
/// `2^-WITNESS_WIDTH_BITS`. Interval endpoints are never roots.
pub fn isolate_roots(p: &UniPoly, a: &BigRational, b: &BigRational) -> Vec<(BigRational, BigRational)> {
    let mut s = p.squarefree();
    for end in [a, b] {
        while !s.is_zero() && s.eval(end).is_zero() {
            s = s.div_rem(&UniPoly::linear_root(end)).0;
        }
    }
    let seq = SturmSequence::new(&s);
    let width = BigRational::new(BigInt::one(), BigInt::one() << WITNESS_WIDTH_BITS);
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let c = seq.count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 && &hi - &lo < width {
            out.push((lo, hi));
            continue;
        }
        let m = split_point(&s, &lo, &hi);
        // Right half first so the left half pops next.
        stack.push((m.clone(), hi));
        stack.push((lo, m));
    }
    out
}

/// A non-root of `s` near the midpoint of `(lo, hi)`. A polynomial of degree
/// `k` has at most `k` roots, so one of the first `k + 1` candidates works.
fn split_point(s: &UniPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let two = BigInt::from(2);
    let mut j = 1i64;
    loop {
        // Candidates 1/2, 1/2 + 1/2^(j+1)... stay strictly inside.
        let frac = BigRational::new(BigInt::one(), two.clone())
            + BigRational::new(BigInt::from(j - 1), BigInt::from(4 * j));
        let m = lo + (hi - lo) * frac;
        if !s.eval(&m).is_zero() {
            return m;
        }
        j += 1;
    }
}

/// Outcome of a positivity query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmVerdict {
    pub holds: bool,
    /// Distinct roots strictly inside `(a, b)`.
    pub interior_roots: usize,
    /// Endpoints where `r` vanishes.
    pub boundary_zeros: Vec<BigRational>,
    /// A point where `r < 0`, when one exists.
    pub negative_at: Option<BigRational>,
    /// On failure, an isolating interval of the first interior root.
    pub root_interval: Option<(BigRational, BigRational)>,
}

/// Exact test of `r > 0` on `(a, b)` (`open`) or `r ≥ 0` on `[a, b]`.
pub fn sturm_nonneg_on_interval(r: &UniPoly, a: &BigRational, b: &BigRational, open: bool) -> Result<SturmVerdict> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::EmptyInterval {
            lo: a.to_string(),
            hi: b.to_string(),
        });
    }
    let boundary_zeros: Vec<BigRational> = [a, b]
        .into_iter()
        .filter(|x| r.eval(x).is_zero())
        .cloned()
        .collect();
    let roots = isolate_roots(r, a, b);
    let negative_at = negative_point(r, a, b, &roots);
    let endpoints_ok = open || [a, b].iter().all(|x| !r.eval(x).is_negative());
    let holds = endpoints_ok
        && negative_at.is_none()
        && (!open || roots.is_empty());
    Ok(SturmVerdict {
        holds,
        interior_roots: roots.len(),
        boundary_zeros,
        negative_at,
        root_interval: if holds { None } else { roots.into_iter().next() },
    })
}

/// Samples one point from every sign region of `r` in `(a, b)`.
fn negative_point(
    r: &UniPoly,
    a: &BigRational,
    b: &BigRational,
    roots: &[(BigRational, BigRational)],
) -> Option<BigRational> {
    let two = BigRational::from_integer(BigInt::from(2));
    if roots.is_empty() {
        let mid = (a + b) / &two;
        return r.eval(&mid).is_negative().then_some(mid);
    }
    // Left of the first root.
    let (lo0, hi0) = &roots[0];
    if lo0 > a {
        if r.eval(lo0).is_negative() {
            return Some(lo0.clone());
        }
    } else if r.sign_right_of(a) < 0 {
        return Some(approach(r, a, hi0));
    }
    // Between roots and right of the last.
    for (i, (lo, hi)) in roots.iter().enumerate() {
        if i + 1 < roots.len() || hi < b {
            if r.eval(hi).is_negative() {
                return Some(hi.clone());
            }
        } else if r.sign_left_of(b) < 0 {
            return Some(approach(r, b, lo));
        }
    }
    None
}

/// Halves the distance from `toward` to `from` until `r` is negative; `r`
/// is known to be negative just beside `from`.
fn approach(r: &UniPoly, from: &BigRational, toward: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut x = toward.clone();
    loop {
        x = (from + &x) / &two;
        if r.eval(&x).is_negative() {
            return x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn constant_and_parabola() {
        let one = UniPoly::from_ints(&[1]);
        assert!(sturm_nonneg_on_interval(&one, &q(0, 1), &q(1, 1), true).unwrap().holds);
        let p = UniPoly::from_ints(&[0, 1, -1]);
        let open = sturm_nonneg_on_interval(&p, &q(0, 1), &q(1, 1), true).unwrap();
        assert!(open.holds);
        let closed = sturm_nonneg_on_interval(&p, &q(0, 1), &q(1, 1), false).unwrap();
        assert!(closed.holds);
        assert_eq!(closed.boundary_zeros, vec![q(0, 1), q(1, 1)]);
        let wider = sturm_nonneg_on_interval(&p, &q(-1, 1), &q(1, 1), false).unwrap();
        assert!(!wider.holds);
        assert!(p.eval(wider.negative_at.as_ref().unwrap()).is_negative());
    }

    #[test]
    fn errors() {
        assert_eq!(
            sturm_nonneg_on_interval(&UniPoly::zero(), &q(0, 1), &q(1, 1), true),
            Err(Error::ZeroPolynomial)
        );
        assert!(sturm_nonneg_on_interval(&UniPoly::from_ints(&[1]), &q(1, 1), &q(1, 1), true).is_err());
    }

    #[test]
    fn double_root_touches_without_crossing() {
        // (y - 1/3)^2: nonnegative but not positive on (0, 1).
        let p = &UniPoly::linear_root(&q(1, 3)) * &UniPoly::linear_root(&q(1, 3));
        let open = sturm_nonneg_on_interval(&p, &q(0, 1), &q(1, 1), true).unwrap();
        assert!(!open.holds);
        assert_eq!(open.negative_at, None);
        let (lo, hi) = open.root_interval.unwrap();
        assert!(lo < q(1, 3) && q(1, 3) < hi);
        assert!(&hi - &lo < BigRational::new(BigInt::one(), BigInt::one() << 20));
        assert!(sturm_nonneg_on_interval(&p, &q(0, 1), &q(1, 1), false).unwrap().holds);
    }

    #[test]
    fn negative_just_inside_an_endpoint() {
        // y^2 (y - 1/2) on (0, 1/2): negative throughout, no interior roots.
        let p = UniPoly::new(vec![q(0, 1), q(0, 1), q(-1, 2), q(1, 1)]);
        let v = sturm_nonneg_on_interval(&p, &q(0, 1), &q(1, 2), false).unwrap();
        assert!(!v.holds);
        assert_eq!(v.interior_roots, 0);
        // y (y - 1/4)^2 (y - 3/4) on [0, 1/2]: root interval sits on the left.
        let f = &(&UniPoly::from_ints(&[0, 1]) * &UniPoly::linear_root(&q(1, 4)))
            * &(&UniPoly::linear_root(&q(1, 4)) * &UniPoly::linear_root(&q(3, 4)));
        let v = sturm_nonneg_on_interval(&f, &q(0, 1), &q(1, 2), false).unwrap();
        assert!(!v.holds);
        assert!(f.eval(v.negative_at.as_ref().unwrap()).is_negative());
    }

    /// Brute oracle: sign at many rational sample points.
    fn sampled_min_sign(p: &UniPoly, a: i64, b: i64) -> i32 {
        (0..=400)
            .map(|i| sign(&p.eval(&(q(a, 1) + q((b - a) * i, 400)))))
            .min()
            .unwrap()
    }

    proptest! {
        #[test]
        fn root_count_matches_product_form(roots in prop::collection::btree_set(-30i64..30, 0..5)) {
            let p = roots.iter().fold(UniPoly::from_ints(&[1]), |acc, &r| &acc * &UniPoly::linear_root(&q(r, 7)));
            let found = isolate_roots(&p, &q(-2, 1), &q(2, 1));
            let inside = roots.iter().filter(|&&r| r.abs() < 14).count();
            prop_assert_eq!(found.len(), inside);
            for (lo, hi) in &found {
                prop_assert!(roots.iter().any(|&r| lo < &q(r, 7) && &q(r, 7) < hi));
            }
        }

        #[test]
        fn witness_is_genuine(c in prop::collection::vec(-6i64..6, 1..6)) {
            let p = UniPoly::from_ints(&c);
            prop_assume!(!p.is_zero());
            let v = sturm_nonneg_on_interval(&p, &q(-1, 1), &q(1, 1), false).unwrap();
            if let Some(x) = &v.negative_at {
                prop_assert!(p.eval(x).is_negative());
            }
            if sampled_min_sign(&p, -1, 1) < 0 {
                prop_assert!(!v.holds);
            }
            if v.holds {
                prop_assert!(v.negative_at.is_none());
            }
        }
    }
}
