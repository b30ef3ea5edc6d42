//! Real hyperelliptic curves `y^2 = G(x)` with `G > 0` on the reals.
//!
//! The real locus lies over the whole real line on the two sheets `y > 0` and
//! `y < 0`. For odd genus the two sheets close up into two components (sheet
//! `+` is component 1); for even genus they glue at infinity into one.
//!
//! Two kinds of evidence that a degree vector lies in the separating
//! semigroup are produced here:
//!
//! * a [`FactoredMorphism`] `f1`, an interlacing rational function of the
//!   x-coordinate, giving degrees `(m, m)` or `(2m)`;
//! * a [`MembershipCertificate`]: a fiber of real points with sheets and
//!   weights `h_i` such that `sum_i x_i^k h_i = 0` for `k < g`,
//!   `sign(h_i) = sheet_i`, and at least `g` distinct x-coordinates. The
//!   tangent vectors have `dx(v_i) = h_i y_i`, which is positive exactly when
//!   the weight sign matches the sheet, so the check stays rational.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactpoly::{self, PolyError, RatPoly};
use crate::rational::{self, Rational};
use crate::semigroup::{self, DegreeVector, SemigroupError, SemigroupFamily};
use crate::vandermonde::{
    self, DualVandermondeSystem, RationalVector, Sign, SignSequence, VandermondeError,
};

/// Spot checks per factored morphism.
pub const FIBER_SAMPLES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperellipticError {
    #[error("genus out of range: deg G = {0} must be even and at least 6")]
    GenusOutOfRange(usize),
    #[error("singular curve: G is not squarefree")]
    SingularCurve,
    #[error("wrong real structure: G is not positive on the real line")]
    WrongRealStructure,
    #[error("not in separating semigroup: {0}")]
    NotMember(DegreeVector),
    #[error("no point certificate: sheet pattern has too few sign changes")]
    NoPointCertificate,
    #[error("morphism degree must be positive")]
    ZeroDegree,
    #[error("zeros and poles do not interlace")]
    NotInterlacing,
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Vandermonde(#[from] VandermondeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealHyperellipticCurve {
    g: RatPoly,
    genus: u32,
}

impl RealHyperellipticCurve {
    pub fn new(g: RatPoly) -> Result<Self, HyperellipticError> {
        let deg = g.degree().unwrap_or(0);
        if deg < 6 || !deg.is_multiple_of(2) {
            return Err(HyperellipticError::GenusOutOfRange(deg));
        }
        if !exactpoly::is_squarefree(&g)? {
            return Err(HyperellipticError::SingularCurve);
        }
        if !exactpoly::is_positive_on_reals(&g)? {
            return Err(HyperellipticError::WrongRealStructure);
        }
        Ok(Self {
            genus: (deg / 2 - 1) as u32,
            g,
        })
    }

    /// `y^2 = x^(2g+2) + 1`.
    pub fn standard(genus: u32) -> Result<Self, HyperellipticError> {
        let mut coeffs = vec![0i64; 2 * genus as usize + 3];
        coeffs[0] = 1;
        *coeffs.last_mut().unwrap() = 1;
        Self::new(RatPoly::from_ints(&coeffs))
    }

    pub fn polynomial(&self) -> &RatPoly {
        &self.g
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn component_count(&self) -> usize {
        if self.genus % 2 == 1 {
            2
        } else {
            1
        }
    }

    pub fn family(&self) -> SemigroupFamily {
        SemigroupFamily::Hyperelliptic { genus: self.genus }
    }
}

/// On-disk curve format `{"G": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveFile {
    #[serde(rename = "G")]
    pub g: RatPoly,
}

/// A point on the real projective line.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProjPoint {
    Finite(Rational),
    Infinity,
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ProjPoint::Finite(q) => s.serialize_str(&rational::format_rational(q)),
            ProjPoint::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            return Ok(ProjPoint::Infinity);
        }
        rational::parse_rational(&s)
            .map(ProjPoint::Finite)
            .map_err(serde::de::Error::custom)
    }
}

/// `f1(x) = scale * prod(x - z_i) / prod(x - p_j)`, composed with the
/// projection `(x, y) -> x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredMorphism {
    #[serde(with = "rational::serde_rational_vec")]
    pub zeros: Vec<Rational>,
    pub poles: Vec<ProjPoint>,
    #[serde(with = "rational::serde_rational")]
    pub scale: Rational,
}

impl FactoredMorphism {
    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn numerator(&self) -> RatPoly {
        RatPoly::from_roots(&self.zeros).scale(&self.scale)
    }

    pub fn denominator(&self) -> RatPoly {
        RatPoly::from_roots(self.poles.iter().filter_map(|p| match p {
            ProjPoint::Finite(q) => Some(q),
            ProjPoint::Infinity => None,
        }))
    }

    /// Value of `f1` at infinity, when finite.
    fn value_at_infinity(&self) -> Option<Rational> {
        if self.poles.contains(&ProjPoint::Infinity) {
            None
        } else {
            Some(self.scale.clone())
        }
    }

    /// `numerator - t * denominator`, whose roots are the fiber over `t`.
    pub fn fiber_polynomial(&self, t: &Rational) -> RatPoly {
        &self.numerator() - &self.denominator().scale(t)
    }

    /// The rational values `t` used for fiber spot checks, avoiding the value
    /// at infinity.
    pub fn sample_values(&self) -> Vec<Rational> {
        let at_inf = self.value_at_infinity();
        [
            (-7, 2),
            (-2, 1),
            (-1, 1),
            (-1, 3),
            (0, 1),
            (1, 5),
            (1, 2),
            (3, 2),
            (5, 1),
            (11, 1),
            (13, 7),
            (-19, 5),
        ]
        .into_iter()
        .map(|(n, d)| rational::frac(n, d))
        .filter(|t| Some(t) != at_inf.as_ref())
        .take(FIBER_SAMPLES)
        .collect()
    }

    /// Number of distinct real points in the fiber over each sample value.
    pub fn fiber_real_counts(&self) -> Vec<(Rational, usize)> {
        self.sample_values()
            .into_iter()
            .map(|t| {
                let p = self.fiber_polynomial(&t);
                let c = exactpoly::real_root_count(&p).unwrap_or(0);
                (t, c)
            })
            .collect()
    }
}

/// True iff zeros and poles alternate around the real projective line and
/// every sampled fiber consists of `m` distinct real roots.
pub fn verify_interlacing(f: &FactoredMorphism) -> bool {
    let m = f.zeros.len();
    if m == 0 || f.poles.len() != m || f.scale.is_zero() {
        return false;
    }
    if f.zeros.windows(2).any(|w| w[0] >= w[1]) || f.poles.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    // merge on the line; infinity sorts last, which is a cut of the circle
    let mut merged: Vec<(ProjPoint, bool)> = f
        .zeros
        .iter()
        .map(|z| (ProjPoint::Finite(z.clone()), true))
        .chain(f.poles.iter().map(|p| (p.clone(), false)))
        .collect();
    merged.sort_by(|a, b| a.0.cmp(&b.0));
    if merged.windows(2).any(|w| w[0].0 == w[1].0 || w[0].1 == w[1].1) {
        return false;
    }
    // with equal counts the cyclic wrap-around also alternates
    f.fiber_real_counts().iter().all(|(t, c)| {
        *c == m && f.fiber_polynomial(t).degree() == Some(m)
    })
}

/// Degree-`m` interlacing function with zeros `0, 2, 4, ...` and poles
/// `1, 3, 5, ...`; for `m = 1` it is `f1(x) = x`.
pub fn build_factored_morphism(
    _curve: &RealHyperellipticCurve,
    m: u32,
) -> Result<FactoredMorphism, HyperellipticError> {
    if m == 0 {
        return Err(HyperellipticError::ZeroDegree);
    }
    let f = if m == 1 {
        FactoredMorphism {
            zeros: vec![Rational::zero()],
            poles: vec![ProjPoint::Infinity],
            scale: Rational::one(),
        }
    } else {
        FactoredMorphism {
            zeros: (0..m).map(|i| rational::int(2 * i as i64)).collect(),
            poles: (0..m)
                .map(|i| ProjPoint::Finite(rational::int(2 * i as i64 + 1)))
                .collect(),
            scale: Rational::one(),
        }
    };
    if !verify_interlacing(&f) {
        return Err(HyperellipticError::NotInterlacing);
    }
    Ok(f)
}

/// Degrees of `f1 o pi`: `(m, m)` for odd genus, `(2m)` for even genus.
pub fn factored_degree_vector(
    curve: &RealHyperellipticCurve,
    f: &FactoredMorphism,
) -> Result<DegreeVector, HyperellipticError> {
    if !verify_interlacing(f) {
        return Err(HyperellipticError::NotInterlacing);
    }
    let m = f.degree() as u32;
    let d = if curve.genus % 2 == 1 {
        vec![m, m]
    } else {
        vec![2 * m]
    };
    Ok(DegreeVector::new(d)?)
}

/// The `m` with `d = (m, m)` (odd genus) or `d = (2m)` (even genus).
pub fn factored_form(genus: u32, d: &DegreeVector) -> Option<u32> {
    let v = d.degrees();
    match (genus % 2, v) {
        (1, [a, b]) if a == b => Some(*a),
        (0, [a]) if a % 2 == 0 => Some(a / 2),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sheet {
    /// `y > 0`
    Plus,
    /// `y < 0`
    Minus,
}

impl Sheet {
    pub fn sign(self) -> Sign {
        match self {
            Sheet::Plus => Sign::Pos,
            Sheet::Minus => Sign::Neg,
        }
    }

    fn flip(self) -> Sheet {
        match self {
            Sheet::Plus => Sheet::Minus,
            Sheet::Minus => Sheet::Plus,
        }
    }
}

impl fmt::Display for Sheet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sheet::Plus => "+",
            Sheet::Minus => "-",
        })
    }
}

impl Serialize for Sheet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Sheet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match String::deserialize(d)?.as_str() {
            "+" => Ok(Sheet::Plus),
            "-" => Ok(Sheet::Minus),
            other => Err(serde::de::Error::custom(format!("bad sheet {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePoint {
    #[serde(with = "rational::serde_rational")]
    pub x: Rational,
    pub sheet: Sheet,
}

/// Fiber points with weights solving the moment equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipCertificate {
    pub points: Vec<CertificatePoint>,
    pub h: RationalVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    /// Claimed degree vector, checked against per-sheet counts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreeVector>,
}

impl MembershipCertificate {
    pub fn xs(&self) -> Vec<Rational> {
        self.points.iter().map(|p| p.x.clone()).collect()
    }

    pub fn sheet_signs(&self) -> SignSequence {
        SignSequence::new(self.points.iter().map(|p| p.sheet.sign()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Factored(FactoredMorphism),
    Points(MembershipCertificate),
}

/// Sheet assignment on nodes `0..n-1` for a non-factored member `d`:
/// alternate starting with the sheet owed more points, then append the
/// surplus at the right end. For even genus the pattern alternates fully.
pub fn sheet_pattern(genus: u32, d: &DegreeVector) -> Vec<Sheet> {
    match d.degrees() {
        [n] => {
            let mut s = Sheet::Plus;
            (0..*n)
                .map(|_| {
                    let cur = s;
                    s = s.flip();
                    cur
                })
                .collect()
        }
        [plus, minus] => {
            let (big, small, big_sheet) = if plus >= minus {
                (*plus, *minus, Sheet::Plus)
            } else {
                (*minus, *plus, Sheet::Minus)
            };
            let mut out = Vec::with_capacity((big + small) as usize);
            for _ in 0..small {
                out.push(big_sheet);
                out.push(big_sheet.flip());
            }
            out.extend(std::iter::repeat_n(big_sheet, (big - small) as usize));
            out
        }
        _ => {
            debug_assert!(false, "genus {genus} has at most two components");
            Vec::new()
        }
    }
}

/// Point certificate on the node ladder `0, 1, ..., n-1`.
pub fn construct_point_certificate(
    curve: &RealHyperellipticCurve,
    d: &DegreeVector,
) -> Result<MembershipCertificate, HyperellipticError> {
    let family = curve.family();
    if !semigroup::is_member(&family, d)? {
        return Err(HyperellipticError::NotMember(d.clone()));
    }
    let sheets = sheet_pattern(curve.genus, d);
    let signs = SignSequence::new(sheets.iter().map(|s| s.sign()).collect());
    if signs.sign_changes() < curve.genus as usize {
        return Err(HyperellipticError::NoPointCertificate);
    }
    let nodes: Vec<Rational> = (0..sheets.len() as i64).map(rational::int).collect();
    let sys = DualVandermondeSystem::new(nodes.clone(), curve.genus as usize)?;
    let h = vandermonde::construct_witness(&sys, &signs)?;
    Ok(MembershipCertificate {
        points: nodes
            .into_iter()
            .zip(sheets)
            .map(|(x, sheet)| CertificatePoint { x, sheet })
            .collect(),
        h,
        genus: Some(curve.genus),
        degrees: Some(d.clone()),
    })
}

/// Evidence that `d` is in the separating semigroup: a factored morphism
/// when `d` has factored form, a point certificate otherwise.
pub fn construct_certificate(
    curve: &RealHyperellipticCurve,
    d: &DegreeVector,
) -> Result<Certificate, HyperellipticError> {
    if !semigroup::is_member(&curve.family(), d)? {
        return Err(HyperellipticError::NotMember(d.clone()));
    }
    match factored_form(curve.genus, d) {
        Some(m) => Ok(Certificate::Factored(build_factored_morphism(curve, m)?)),
        None => construct_point_certificate(curve, d).map(Certificate::Points),
    }
}

/// Non-specialty of the fiber divisor: a nonzero polynomial of degree below
/// `g` cannot vanish at `g` distinct x-coordinates, and `y` has no real zeros.
pub fn nonspecial_check(curve: &RealHyperellipticCurve, xs: &[Rational]) -> bool {
    let distinct: BTreeSet<&Rational> = xs.iter().collect();
    distinct.len() >= curve.genus as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RejectReason {
    #[serde(rename = "genus mismatch")]
    GenusMismatch,
    #[serde(rename = "length mismatch")]
    LengthMismatch,
    #[serde(rename = "repeated point")]
    RepeatedPoint,
    #[serde(rename = "moment residual")]
    MomentResidual,
    #[serde(rename = "sign/sheet mismatch")]
    SignSheetMismatch,
    #[serde(rename = "special divisor")]
    SpecialDivisor,
    #[serde(rename = "degree mismatch")]
    DegreeMismatch,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        f.write_str(s.as_str().unwrap())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<RejectReason>,
}

impl Verification {
    fn ok() -> Self {
        Self {
            valid: true,
            reason: None,
        }
    }

    fn reject(reason: RejectReason) -> Self {
        Self {
            valid: false,
            reason: Some(reason),
        }
    }
}

pub fn verify_certificate(
    curve: &RealHyperellipticCurve,
    cert: &MembershipCertificate,
) -> Verification {
    let g = curve.genus;
    if cert.genus.is_some_and(|cg| cg != g) {
        return Verification::reject(RejectReason::GenusMismatch);
    }
    if cert.points.len() != cert.h.len() || cert.points.is_empty() {
        return Verification::reject(RejectReason::LengthMismatch);
    }
    let distinct: BTreeSet<(&Rational, bool)> = cert
        .points
        .iter()
        .map(|p| (&p.x, p.sheet == Sheet::Plus))
        .collect();
    if distinct.len() != cert.points.len() {
        return Verification::reject(RejectReason::RepeatedPoint);
    }
    let xs = cert.xs();
    if !vandermonde::moment_residuals(&xs, &cert.h, g as usize)
        .iter()
        .all(Zero::is_zero)
    {
        return Verification::reject(RejectReason::MomentResidual);
    }
    if cert.h.signs() != cert.sheet_signs() {
        return Verification::reject(RejectReason::SignSheetMismatch);
    }
    if !nonspecial_check(curve, &xs) {
        return Verification::reject(RejectReason::SpecialDivisor);
    }
    if let Some(d) = &cert.degrees {
        let plus = cert.points.iter().filter(|p| p.sheet == Sheet::Plus).count() as u32;
        let minus = cert.points.len() as u32 - plus;
        let matches = match d.degrees() {
            [n] if g.is_multiple_of(2) => *n == plus + minus,
            [a, b] if g % 2 == 1 => *a == plus && *b == minus,
            _ => false,
        };
        if !matches {
            return Verification::reject(RejectReason::DegreeMismatch);
        }
    }
    Verification::ok()
}

/// Exhaustive search over sheet patterns of length `sum(d)` with the right
/// per-sheet counts for one whose sign changes reach the genus. `None` means
/// no point certificate exists for `d` on any distinct nodes.
pub fn search_sheet_patterns(genus: u32, d: &DegreeVector) -> Option<SignSequence> {
    let n = d.total() as usize;
    (0u64..1 << n).find_map(|mask| {
        let signs: Vec<Sign> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Sign::Pos } else { Sign::Neg })
            .collect();
        let plus = signs.iter().filter(|s| **s == Sign::Pos).count() as u32;
        let counts_ok = match d.degrees() {
            [a, b] => plus == *a && n as u32 - plus == *b,
            _ => true,
        };
        let seq = SignSequence::new(signs);
        (counts_ok && seq.sign_changes() >= genus as usize).then_some(seq)
    })
}
