//! Exact univariate polynomials over the rationals, Sturm sequences and real
//! root isolation.
//!
//! Nothing in this module touches floating point. Sturm counts follow the
//! half-open convention: [`sturm_count`] returns the number of distinct real
//! roots in `(lo, hi]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("undefined root count: zero polynomial")]
    ZeroPolynomial,
    #[error("squarefree required")]
    NotSquarefree,
}

/// Polynomial with rational coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    /// `prod (x - r_i)`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); n - dd + 1];
        for i in (dd..=n).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] / &lc;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &f * dc;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = f;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Yun's squarefree decomposition: returns `(multiplicity, factor)` pairs
    /// with pairwise coprime squarefree non-constant factors whose product
    /// (with multiplicities) is the monic associate of `self`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, RatPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let dp = self.derivative();
        let a0 = self.gcd(&dp);
        let mut b = self.div_rem(&a0).0;
        let mut c = dp.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a));
            }
            i += 1;
        }
        out
    }

    /// Largest real root magnitude is strictly below this (Cauchy bound).
    pub fn cauchy_bound(&self) -> Rational {
        let Some(lc) = self.leading() else {
            return Rational::one();
        };
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lc).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = rational::format_rational(&mag);
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coef}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serde_rational_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        rational::serde_rational_vec::deserialize(d).map(RatPoly::new)
    }
}

/// Endpoint of a counting interval on the extended real line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    fn less_than(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::Finite(_), Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        }
    }
}

impl From<Rational> for Bound {
    fn from(q: Rational) -> Self {
        Bound::Finite(q)
    }
}

fn sign_at(p: &RatPoly, at: &Bound) -> i8 {
    let Some(lc) = p.leading() else {
        return 0;
    };
    let lead_sign = rational::sign_of(lc);
    match at {
        Bound::Finite(x) => rational::sign_of(&p.eval(x)),
        Bound::PosInf => lead_sign,
        Bound::NegInf => {
            if p.degree().unwrap_or(0).is_multiple_of(2) {
                lead_sign
            } else {
                -lead_sign
            }
        }
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` down to the last nonzero remainder.
pub fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let r = -&seq.last().unwrap().rem(&next);
        seq.push(next);
        next = r;
    }
    seq
}

fn variations(seq: &[RatPoly], at: &Bound) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in seq.iter().map(|q| sign_at(q, at)).filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn count_with_chain(seq: &[RatPoly], lo: &Bound, hi: &Bound) -> usize {
    if !lo.less_than(hi) {
        return 0;
    }
    variations(seq, lo) - variations(seq, hi)
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(count_with_chain(&sturm_sequence(p), lo, hi))
}

/// Number of distinct real roots of `p`.
pub fn real_root_count(p: &RatPoly) -> Result<usize, PolyError> {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

/// Number of real roots of `p` counted with multiplicity.
pub fn real_root_count_with_multiplicity(p: &RatPoly) -> Result<usize, PolyError> {
    sturm_count_with_multiplicity(p, &Bound::NegInf, &Bound::PosInf)
}

/// Roots in `(lo, hi]` counted with multiplicity.
pub fn sturm_count_with_multiplicity(
    p: &RatPoly,
    lo: &Bound,
    hi: &Bound,
) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    p.squarefree_decomposition()
        .iter()
        .map(|(m, f)| sturm_count(f, lo, hi).map(|c| c * m))
        .sum()
}

pub fn is_squarefree(p: &RatPoly) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(p.gcd(&p.derivative()).degree().unwrap_or(0) == 0)
}

/// True iff `p(x) > 0` for every real `x`.
pub fn is_positive_on_reals(p: &RatPoly) -> Result<bool, PolyError> {
    let deg = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let lc_positive = p.leading().is_some_and(Signed::is_positive);
    if deg % 2 != 0 || !lc_positive {
        return Ok(false);
    }
    if real_root_count(p)? != 0 {
        return Ok(false);
    }
    // No real roots: the sign is constant, so one sample decides it.
    Ok(p.eval(&Rational::zero()).is_positive())
}

/// One isolated real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsolatedRoot {
    Exact(Rational),
    /// Open interval `(lo, hi)` holding exactly one root.
    Interval(Rational, Rational),
}

impl IsolatedRoot {
    /// Left end used for ordering.
    fn key(&self) -> &Rational {
        match self {
            IsolatedRoot::Exact(r) => r,
            IsolatedRoot::Interval(lo, _) => lo,
        }
    }
}

/// Isolating data for the real roots of a squarefree polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootIsolation {
    poly: RatPoly,
    /// Sorted, pairwise disjoint open intervals, one root each.
    pub intervals: Vec<(Rational, Rational)>,
    /// Rational roots, sorted.
    pub exact_roots: Vec<Rational>,
}

impl RootIsolation {
    pub fn root_count(&self) -> usize {
        self.intervals.len() + self.exact_roots.len()
    }

    /// All roots in increasing order.
    pub fn roots(&self) -> Vec<IsolatedRoot> {
        let mut all: Vec<IsolatedRoot> = self
            .exact_roots
            .iter()
            .cloned()
            .map(IsolatedRoot::Exact)
            .chain(
                self.intervals
                    .iter()
                    .cloned()
                    .map(|(a, b)| IsolatedRoot::Interval(a, b)),
            )
            .collect();
        all.sort_by(|a, b| a.key().cmp(b.key()));
        all
    }

    /// Bisects every interval until it is no wider than `width`. Midpoints
    /// that hit a root move that root to `exact_roots`.
    pub fn refine(&self, width: &Rational) -> RootIsolation {
        assert!(width.is_positive(), "refinement width must be positive");
        let chain = sturm_sequence(&self.poly);
        let mut intervals = Vec::new();
        let mut exact = self.exact_roots.clone();
        for (lo, hi) in &self.intervals {
            let (mut lo, mut hi) = (lo.clone(), hi.clone());
            loop {
                if &(&hi - &lo) <= width {
                    intervals.push((lo, hi));
                    break;
                }
                let mid = (&lo + &hi) / rational::int(2);
                if self.poly.eval(&mid).is_zero() {
                    exact.push(mid);
                    break;
                }
                if count_with_chain(&chain, &Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()))
                    == 1
                {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
        exact.sort();
        RootIsolation {
            poly: self.poly.clone(),
            intervals,
            exact_roots: exact,
        }
    }
}

/// Isolates the real roots of a squarefree polynomial by Sturm-driven
/// bisection of the Cauchy interval. Rational roots are reported exactly.
pub fn isolate_roots(p: &RatPoly) -> Result<RootIsolation, PolyError> {
    if !is_squarefree(p)? {
        return Err(PolyError::NotSquarefree);
    }
    let chain = sturm_sequence(p);
    let known = rational_roots(p);
    let b = p.cauchy_bound();
    let mut iso = RootIsolation {
        poly: p.clone(),
        intervals: Vec::new(),
        exact_roots: Vec::new(),
    };
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = count_with_chain(&chain, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        match c {
            0 => {}
            1 => {
                if p.eval(&hi).is_zero() {
                    iso.exact_roots.push(hi);
                } else if let Some(r) = known.iter().find(|r| **r > lo && **r < hi) {
                    iso.exact_roots.push(r.clone());
                } else {
                    iso.intervals.push((lo, hi));
                }
            }
            _ => {
                let mid = (&lo + &hi) / rational::int(2);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    iso.exact_roots.sort();
    iso.intervals.sort();
    Ok(iso)
}

// Magnitude above which divisor enumeration for the rational root test is
// skipped; roots are still isolated, just not necessarily reported exactly.
const RATIONAL_ROOT_SEARCH_CAP: u64 = 1 << 36;

/// Rational roots of `p` found via the rational root theorem. May miss roots
/// when the integer coefficients are too large to factor by trial division.
pub fn rational_roots(p: &RatPoly) -> Vec<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let trimmed = &ints[low..];
    if trimmed.len() > 1 {
        let c0 = trimmed[0].abs().to_u64().filter(|&v| v <= RATIONAL_ROOT_SEARCH_CAP);
        let cn = trimmed
            .last()
            .unwrap()
            .abs()
            .to_u64()
            .filter(|&v| v <= RATIONAL_ROOT_SEARCH_CAP);
        if let (Some(c0), Some(cn)) = (c0, cn) {
            let (nums, dens) = (divisors(c0), divisors(cn));
            for a in &nums {
                for b in &dens {
                    for s in [1i64, -1] {
                        let cand = BigRational::new(BigInt::from(*a) * s, BigInt::from(*b));
                        if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn all() -> (Bound, Bound) {
        (Bound::NegInf, Bound::PosInf)
    }

    #[test]
    fn arithmetic_basics() {
        let p = RatPoly::from_ints(&[-1, 0, 1]);
        let q = RatPoly::from_ints(&[1, 1]);
        let (quo, rem) = p.div_rem(&q);
        assert_eq!(quo, RatPoly::from_ints(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(p.gcd(&q), q);
        assert_eq!(RatPoly::from_ints(&[0, 0, 0]).degree(), None);
        assert_eq!(p.to_string(), "x^2 - 1");
        assert_eq!(RatPoly::from_roots(&[int(1), int(-1)]), p);
    }

    #[test]
    fn sturm_count_examples() {
        let cubic = RatPoly::from_ints(&[0, -1, 0, 1]);
        let c = sturm_count(&cubic, &Bound::Finite(int(-2)), &Bound::Finite(int(2))).unwrap();
        assert_eq!(c, 3);
        let (lo, hi) = all();
        assert_eq!(sturm_count(&RatPoly::from_ints(&[1, 0, 1]), &lo, &hi).unwrap(), 0);
        assert_eq!(
            sturm_count(&RatPoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]), &lo, &hi).unwrap(),
            0
        );
    }

    #[test]
    fn sturm_half_open_convention() {
        // roots -1, 0, 1: (-1, 1] holds 0 and 1
        let cubic = RatPoly::from_ints(&[0, -1, 0, 1]);
        let c = |a: i64, b: i64| {
            sturm_count(&cubic, &Bound::Finite(int(a)), &Bound::Finite(int(b))).unwrap()
        };
        assert_eq!(c(-1, 1), 2);
        assert_eq!(c(-1, 0), 1);
        assert_eq!(c(0, 0), 0);
        assert_eq!(c(1, -1), 0);
        // non-squarefree input still counts distinct roots
        let sq = &cubic * &cubic;
        assert_eq!(real_root_count(&sq).unwrap(), 3);
    }

    #[test]
    fn zero_polynomial_errors() {
        let (lo, hi) = all();
        assert_eq!(
            sturm_count(&RatPoly::zero(), &lo, &hi),
            Err(PolyError::ZeroPolynomial)
        );
        assert!(is_squarefree(&RatPoly::zero()).is_err());
        assert!(is_positive_on_reals(&RatPoly::zero()).is_err());
        assert!(isolate_roots(&RatPoly::zero()).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&RatPoly::from_ints(&[-1, 0, 1])).unwrap());
        assert!(!is_squarefree(&RatPoly::from_ints(&[0, 0, 1])).unwrap());
        let x2p1 = RatPoly::from_ints(&[1, 0, 1]);
        let p = &(&x2p1 * &x2p1) * &RatPoly::from_ints(&[2, 0, 1]);
        assert!(!is_squarefree(&p).unwrap());
        let g = p.gcd(&p.derivative());
        assert_eq!(g, x2p1);
    }

    #[test]
    fn positivity_examples() {
        assert!(is_positive_on_reals(&RatPoly::from_ints(&[1, 0, 0, 0, 0, 0, 1])).unwrap());
        assert!(!is_positive_on_reals(&RatPoly::from_ints(&[-3, 0, 1])).unwrap());
        assert!(is_positive_on_reals(&RatPoly::from_ints(&[1, 0, 1, 0, 2])).unwrap());
        assert!(!is_positive_on_reals(&RatPoly::from_ints(&[1, 1])).unwrap());
        assert!(!is_positive_on_reals(&RatPoly::from_ints(&[-1, 0, -1])).unwrap());
        // double root touches zero
        assert!(!is_positive_on_reals(&RatPoly::from_ints(&[0, 0, 1])).unwrap());
        assert!(is_positive_on_reals(&RatPoly::from_ints(&[5])).unwrap());
    }

    #[test]
    fn isolation_examples() {
        // x(x^2 - 2)
        let p = RatPoly::from_ints(&[0, -2, 0, 1]);
        let iso = isolate_roots(&p).unwrap();
        assert_eq!(iso.exact_roots, vec![int(0)]);
        assert_eq!(iso.intervals.len(), 2);
        let (a, b) = &iso.intervals[0];
        assert!(*a < int(-1) && *b < int(0));
        let two = int(2);
        for (lo, hi) in &iso.intervals {
            // the interval straddles a root of x^2 - 2
            let (l2, h2) = (lo * lo - &two, hi * hi - &two);
            assert!(l2.is_positive() != h2.is_positive() || l2.is_zero() || h2.is_zero());
        }
        assert_eq!(isolate_roots(&RatPoly::from_ints(&[1, 0, 1])).unwrap().root_count(), 0);
        let lin = RatPoly::new(vec![frac(-1, 2), int(1)]);
        let iso = isolate_roots(&lin).unwrap();
        assert_eq!(iso.exact_roots, vec![frac(1, 2)]);
        assert!(iso.intervals.is_empty());
        assert_eq!(
            isolate_roots(&RatPoly::from_ints(&[0, 0, 1])),
            Err(PolyError::NotSquarefree)
        );
    }

    #[test]
    fn refinement_narrows_and_keeps_roots() {
        let p = RatPoly::from_ints(&[0, -2, 0, 1]);
        let iso = isolate_roots(&p).unwrap().refine(&frac(1, 1000));
        assert_eq!(iso.root_count(), 3);
        for (lo, hi) in &iso.intervals {
            assert!(hi - lo <= frac(1, 1000));
            assert_eq!(
                sturm_count(&p, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())).unwrap(),
                1
            );
        }
        let roots = iso.roots();
        assert!(matches!(roots[1], IsolatedRoot::Exact(ref r) if r.is_zero()));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let a = RatPoly::from_ints(&[-1, 1]).pow(3);
        let b = RatPoly::from_ints(&[2, 1]).pow(2);
        let c = RatPoly::from_ints(&[1, 0, 1]);
        let p = &(&a * &b) * &c;
        let dec = p.squarefree_decomposition();
        assert_eq!(
            dec,
            vec![
                (1, c.clone()),
                (2, RatPoly::from_ints(&[2, 1])),
                (3, RatPoly::from_ints(&[-1, 1]))
            ]
        );
        assert_eq!(real_root_count_with_multiplicity(&p).unwrap(), 5);
        assert_eq!(p.squarefree_part().monic(), (&(&RatPoly::from_ints(&[-1, 1]) * &RatPoly::from_ints(&[2, 1])) * &c));
    }

    #[test]
    fn rational_root_test() {
        // (2x - 1)(3x + 4)(x^2 - 2)
        let p = &(&RatPoly::from_ints(&[-1, 2]) * &RatPoly::from_ints(&[4, 3]))
            * &RatPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(rational_roots(&p), vec![frac(-4, 3), frac(1, 2)]);
        let iso = isolate_roots(&p).unwrap();
        assert_eq!(iso.exact_roots, vec![frac(-4, 3), frac(1, 2)]);
        assert_eq!(iso.intervals.len(), 2);
    }

    #[test]
    fn serde_round_trip() {
        let p = RatPoly::new(vec![frac(1, 2), int(0), int(-3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2","0","-3"]"#);
        let back: RatPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
