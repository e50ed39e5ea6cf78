//! Exact real-root counting and isolation via Sturm sequences.
//!
//! All arithmetic is over exact rationals. The chain is built for the
//! squarefree part of the input, so the counts are counts of *distinct*
//! real roots. Isolating intervals are half-open `(lo, hi]` with dyadic
//! rational endpoints refined to width at most 1/1024.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::Polynomial;

/// Isolation stops once an interval is at most this wide.
fn max_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1024))
}

/// Distinct real roots of a polynomial: how many, and where.
#[derive(Clone, Debug)]
pub struct RootReport {
    /// Number of distinct real roots.
    pub count: usize,
    /// Pairwise disjoint intervals `(lo, hi]`, one root each, sorted by
    /// position. A root found exactly appears as a degenerate `(r, r)` pair.
    pub intervals: Vec<(BigRational, BigRational)>,
    /// Roots pinned down as exact rationals.
    pub exact_roots: Vec<BigRational>,
}

/// A polynomial over rationals, dense, trailing zeros trimmed.
type RatPoly = Vec<BigRational>;

fn rat_poly(p: &Polynomial) -> RatPoly {
    p.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rat_eval(p: &RatPoly, t: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

fn rat_derivative(p: &RatPoly) -> RatPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect()
}

/// Remainder of `a` divided by `b` (b nonzero), over rationals.
fn rat_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let q = &r[dr] / &lead;
        for i in 0..=db {
            let t = &q * &b[i];
            r[dr - db + i] -= t;
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Scale by the reciprocal of the leading coefficient's absolute value.
/// A positive scalar, so sign behavior of the chain is untouched and
/// coefficient growth stays bounded.
fn normalize(p: &mut RatPoly) {
    if let Some(lead) = p.last() {
        let s = lead.abs();
        if !s.is_one() {
            for c in p.iter_mut() {
                *c /= &s;
            }
        }
    }
}

/// Exact quotient `a / b`; panics if the division is not exact.
fn rat_div_exact(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] / &lead;
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &c * &b[i];
            r[dr - db + i] -= t;
        }
        r.pop();
        trim(&mut r);
    }
    debug_assert!(r.is_empty() || b.len() == 1, "inexact polynomial division");
    q
}

/// Monic gcd over rationals.
fn rat_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rat_rem(&x, &y);
        x = y;
        y = r;
        trim(&mut y);
    }
    normalize(&mut x);
    x
}

/// Squarefree part `p / gcd(p, p')`.
fn squarefree(p: &RatPoly) -> RatPoly {
    if p.len() <= 1 {
        return p.clone();
    }
    let g = rat_gcd(p, &rat_derivative(p));
    if g.len() <= 1 {
        return p.clone();
    }
    rat_div_exact(p, &g)
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(sf: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![sf.clone()];
    if sf.len() > 1 {
        let mut d = rat_derivative(sf);
        normalize(&mut d);
        chain.push(d);
        loop {
            let k = chain.len();
            let mut r = rat_rem(&chain[k - 2], &chain[k - 1]);
            if r.is_empty() {
                break;
            }
            for c in r.iter_mut() {
                *c = -c.clone();
            }
            normalize(&mut r);
            chain.push(r);
        }
    }
    chain
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in signs {
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

fn variations_at(chain: &[RatPoly], t: &BigRational) -> usize {
    variations(chain.iter().map(|p| sign(&rat_eval(p, t))))
}

struct Sturm {
    chain: Vec<RatPoly>,
}

impl Sturm {
    fn new(sf: &RatPoly) -> Self {
        Sturm { chain: sturm_chain(sf) }
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        variations_at(&self.chain, lo) - variations_at(&self.chain, hi)
    }

    fn poly(&self) -> &RatPoly {
        &self.chain[0]
    }
}

/// Cauchy bound: every real root has absolute value below `1 + max|a_i/a_d|`.
fn root_bound(p: &RatPoly) -> BigRational {
    let lead = p.last().expect("nonzero polynomial").abs();
    let mut max = BigRational::zero();
    for c in &p[..p.len() - 1] {
        let r = c.abs() / &lead;
        if r > max {
            max = r;
        }
    }
    let bound = max + BigRational::one();
    // round up to an integer for tidy dyadic endpoints
    BigRational::from_integer(bound.ceil().to_integer() + BigInt::one())
}

/// Count distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn count_roots_in(p: &Polynomial, lo: &BigRational, hi: &BigRational) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = squarefree(&rat_poly(p));
    Ok(Sturm::new(&sf).count(lo, hi))
}

/// True iff `r` is a root of `p`.
pub fn is_root(p: &Polynomial, r: &BigRational) -> bool {
    p.evaluate(r).is_zero()
}

/// True iff every root of `p` (over the complexes) is real. Equivalent to
/// the squarefree part having as many distinct real roots as its degree.
pub fn all_roots_real(p: &Polynomial) -> Result<bool, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = squarefree(&rat_poly(p));
    if sf.len() <= 1 {
        return Ok(true);
    }
    let sturm = Sturm::new(&sf);
    let bound = root_bound(&sf);
    Ok(sturm.count(&-bound.clone(), &bound) == sf.len() - 1)
}

/// Divisors of `n`, by trial division. Only called for small values.
fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Divisor enumeration is skipped above this, except for linear factors.
const RATIONAL_ROOT_LIMIT: u64 = 10_000_000;

/// Pull exact rational roots out of a squarefree polynomial, deflating it
/// as they are found. Linear polynomials are always solved; otherwise the
/// rational-root candidates p/q (p | constant, q | leading) are tried when
/// both ends are small enough to factor.
fn extract_rational_roots(sf: &mut RatPoly) -> Vec<BigRational> {
    use num_traits::ToPrimitive;

    let mut found = Vec::new();
    if sf.len() > 1 && sf[0].is_zero() {
        found.push(BigRational::zero());
        sf.remove(0);
    }
    loop {
        if sf.len() == 2 {
            found.push(-&sf[0] / &sf[1]);
            *sf = vec![sf[1].clone()];
            break;
        }
        if sf.len() < 2 {
            break;
        }
        // clear denominators to an integer polynomial
        let mut scale = BigInt::one();
        for c in sf.iter() {
            scale *= c.denom();
        }
        let ints: Vec<BigInt> = sf
            .iter()
            .map(|c| (c * BigRational::from_integer(scale.clone())).to_integer())
            .collect();
        let (Some(c0), Some(lead)) = (
            ints[0].abs().to_u64().filter(|&v| v <= RATIONAL_ROOT_LIMIT),
            ints[ints.len() - 1].abs().to_u64().filter(|&v| v <= RATIONAL_ROOT_LIMIT),
        ) else {
            break;
        };
        let mut hit = false;
        'search: for p in divisors(c0) {
            for q in divisors(lead) {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(BigInt::from(sign) * BigInt::from(p), BigInt::from(q));
                    if rat_eval(sf, &cand).is_zero() {
                        found.push(cand.clone());
                        *sf = rat_div_exact(sf, &vec![-cand, BigRational::one()]);
                        hit = true;
                        break 'search;
                    }
                }
            }
        }
        if !hit {
            break;
        }
    }
    found
}

/// Count and isolate all distinct real roots of `p`.
pub fn real_roots(p: &Polynomial) -> Result<RootReport, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = squarefree(&rat_poly(p));
    if sf.len() <= 1 {
        return Ok(RootReport { count: 0, intervals: Vec::new(), exact_roots: Vec::new() });
    }

    let mut remaining = sf;
    let mut exact_roots = extract_rational_roots(&mut remaining);
    let mut intervals: Vec<(BigRational, BigRational)> =
        exact_roots.iter().map(|r| (r.clone(), r.clone())).collect();
    if remaining.len() <= 1 {
        intervals.sort_by(|a, b| a.0.cmp(&b.0));
        exact_roots.sort();
        return Ok(RootReport { count: intervals.len(), intervals, exact_roots });
    }

    let sturm = Sturm::new(&remaining);
    let bound = root_bound(&remaining);
    let lo = -bound.clone();
    let hi = bound;
    let total = sturm.count(&lo, &hi);

    let width_limit = max_width();
    let two = BigRational::from_integer(BigInt::from(2));

    // stack of (lo, hi, roots in (lo, hi]); hi is never a root
    let mut stack = vec![(lo, hi, total)];
    while let Some((lo, hi, cnt)) = stack.pop() {
        if cnt == 0 {
            continue;
        }
        let width = &hi - &lo;
        if cnt == 1 && width <= width_limit {
            intervals.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if rat_eval(sturm.poly(), &mid).is_zero() {
            // exact root at the midpoint; fence it off and recurse outside
            let mut w = (&hi - &lo) / BigRational::from_integer(BigInt::from(4));
            loop {
                let a = &mid - &w;
                let b = &mid + &w;
                if !rat_eval(sturm.poly(), &a).is_zero()
                    && !rat_eval(sturm.poly(), &b).is_zero()
                    && sturm.count(&a, &b) == 1
                {
                    break;
                }
                w /= &two;
            }
            let a = &mid - &w;
            let b = &mid + &w;
            exact_roots.push(mid.clone());
            intervals.push((mid.clone(), mid));
            let left = sturm.count(&lo, &a);
            let right = sturm.count(&b, &hi);
            stack.push((lo, a, left));
            stack.push((b, hi, right));
        } else {
            let left = sturm.count(&lo, &mid);
            stack.push((lo, mid.clone(), left));
            stack.push((mid, hi, cnt - left));
        }
    }

    // shrink any isolating interval that still straddles an already-known
    // exact rational root, so the intervals stay pairwise disjoint
    for iv in intervals.iter_mut() {
        if iv.0 == iv.1 {
            continue;
        }
        while exact_roots.iter().any(|r| &iv.0 < r && r <= &iv.1) {
            let mid = (&iv.0 + &iv.1) / &two;
            if rat_eval(sturm.poly(), &mid).is_zero() {
                exact_roots.push(mid.clone());
                *iv = (mid.clone(), mid);
                break;
            }
            if sturm.count(&iv.0, &mid) == 1 {
                iv.1 = mid;
            } else {
                iv.0 = mid;
            }
        }
    }

    intervals.sort_by(|a, b| a.0.cmp(&b.0));
    exact_roots.sort();
    exact_roots.dedup();
    Ok(RootReport { count: intervals.len(), intervals, exact_roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn linear_exact_root() {
        let p = Polynomial::from_i64(&[1, 2]);
        let r = real_roots(&p).unwrap();
        assert_eq!(r.count, 1);
        assert_eq!(r.exact_roots, vec![rat(-1, 2)]);
    }

    #[test]
    fn no_real_roots() {
        let p = Polynomial::from_i64(&[1, 0, 1]); // x^2 + 1
        assert_eq!(real_roots(&p).unwrap().count, 0);
    }

    #[test]
    fn quadratic_two_roots() {
        let p = Polynomial::from_i64(&[-2, 0, 1]); // x^2 - 2
        let r = real_roots(&p).unwrap();
        assert_eq!(r.count, 2);
        // sqrt(2) in (1, 2), -sqrt(2) in (-2, -1)
        assert_eq!(count_roots_in(&p, &rat(1, 1), &rat(2, 1)).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &rat(-2, 1), &rat(-1, 1)).unwrap(), 1);
        for (lo, hi) in &r.intervals {
            assert!(hi - lo <= rat(1, 1024));
        }
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x - 1)^2 (x + 2)
        let p = Polynomial::from_i64(&[1, -1]);
        let q = Polynomial::from_i64(&[2, 1]);
        let prod = p.mul(&p).mul(&q);
        let r = real_roots(&prod).unwrap();
        assert_eq!(r.count, 2);
    }

    #[test]
    fn interval_endpoints_bracket() {
        // each non-degenerate isolating interval shows a sign change
        let p = Polynomial::from_i64(&[1, 6, 6, 2]); // I(A_6)
        let r = real_roots(&p).unwrap();
        assert_eq!(r.count, 1);
        for (lo, hi) in &r.intervals {
            if lo == hi {
                assert!(is_root(&p, lo));
            } else {
                let a = p.evaluate(lo);
                let b = p.evaluate(hi);
                assert!(sign(&a) * sign(&b) <= 0);
            }
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(real_roots(&Polynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn wilkinson_style_integer_roots() {
        // (x+1)(x+2)(x+3): three exact integer roots
        let p = Polynomial::from_i64(&[1, 1])
            .mul(&Polynomial::from_i64(&[2, 1]))
            .mul(&Polynomial::from_i64(&[3, 1]));
        let r = real_roots(&p).unwrap();
        assert_eq!(r.count, 3);
        for root in [-1i64, -2, -3] {
            assert!(is_root(&p, &rat(root, 1)));
        }
    }
}
