//! Plane quartics and projections from a point.
//!
//! A projection from a center off the curve is separating when every line
//! through the center meets the quartic in four real points (counted with
//! multiplicity). [`projection_profile`] tests this on a finite, deterministic
//! sample of the pencil. A passing profile is evidence, not proof; a failing
//! one carries an exact witness line.
//!
//! Coefficients are stored for the monomials `x^a y^b z^c`, `a + b + c = 4`,
//! in the order of [`MONOMIALS`]: decreasing power of `x`, then of `y`.

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactpoly::{self, Bound, PolyError, RatPoly};
use crate::rational::{self, Rational};
use crate::semigroup::DegreeVector;

pub const MONOMIALS: [(u32, u32, u32); 15] = [
    (4, 0, 0),
    (3, 1, 0),
    (3, 0, 1),
    (2, 2, 0),
    (2, 1, 1),
    (2, 0, 2),
    (1, 3, 0),
    (1, 2, 1),
    (1, 1, 2),
    (1, 0, 3),
    (0, 4, 0),
    (0, 3, 1),
    (0, 2, 2),
    (0, 1, 3),
    (0, 0, 4),
];

pub const MIN_SAMPLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuarticError {
    #[error("expected 15 coefficients, found {0}")]
    CoefficientCount(usize),
    #[error("quartic form is identically zero")]
    ZeroForm,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("base point: center lies on the curve")]
    BasePoint,
    #[error("at least {MIN_SAMPLES} samples required, got {0}")]
    TooFewSamples(usize),
    #[error("line through the center is contained in the curve")]
    LineOnCurve,
    #[error("oval attribution failed: {0}")]
    OvalAttribution(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Ternary quartic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneQuartic {
    coeffs: Vec<Rational>,
}

impl PlaneQuartic {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, QuarticError> {
        if coeffs.len() != MONOMIALS.len() {
            return Err(QuarticError::CoefficientCount(coeffs.len()));
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(QuarticError::ZeroForm);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(a, b, e), c)| c * pow(x, a) * pow(y, b) * pow(z, e))
            .sum()
    }

    /// Value at the affine point `(x, y, 1)`.
    pub fn eval_affine(&self, p: &Point) -> Rational {
        self.eval(&p.0, &p.1, &Rational::one())
    }
}

impl Serialize for PlaneQuartic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serde_rational_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for PlaneQuartic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = rational::serde_rational_vec::deserialize(d)?;
        PlaneQuartic::new(v).map_err(serde::de::Error::custom)
    }
}

fn pow(x: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

/// Affine rational point or direction `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point(
    #[serde(with = "rational::serde_rational")] pub Rational,
    #[serde(with = "rational::serde_rational")] pub Rational,
);

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self(x, y)
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Self(rational::int(x), rational::int(y))
    }
}

/// `(x^2 + y^2 - z^2)(x^2 + y^2 - 4z^2)`: circles of radius 1 and 2 about
/// the origin.
pub fn nested_quartic_example() -> PlaneQuartic {
    let mut c = vec![Rational::zero(); 15];
    let set = |c: &mut Vec<Rational>, mono: (u32, u32, u32), v: i64| {
        let i = MONOMIALS.iter().position(|&m| m == mono).unwrap();
        c[i] = rational::int(v);
    };
    set(&mut c, (4, 0, 0), 1);
    set(&mut c, (2, 2, 0), 2);
    set(&mut c, (0, 4, 0), 1);
    set(&mut c, (2, 0, 2), -5);
    set(&mut c, (0, 2, 2), -5);
    set(&mut c, (0, 0, 4), 4);
    PlaneQuartic::new(c).unwrap()
}

/// `t -> q(center + t * direction, 1)`.
pub fn restrict_to_line(
    q: &PlaneQuartic,
    center: &Point,
    direction: &Point,
) -> Result<RatPoly, QuarticError> {
    if direction.0.is_zero() && direction.1.is_zero() {
        return Err(QuarticError::ZeroDirection);
    }
    let x = RatPoly::new(vec![center.0.clone(), direction.0.clone()]);
    let y = RatPoly::new(vec![center.1.clone(), direction.1.clone()]);
    let x_pows: Vec<RatPoly> = (0..=4).map(|e| x.pow(e)).collect();
    let y_pows: Vec<RatPoly> = (0..=4).map(|e| y.pow(e)).collect();
    let mut out = RatPoly::zero();
    for (&(a, b, _), c) in MONOMIALS.iter().zip(&q.coeffs) {
        if c.is_zero() {
            continue;
        }
        let term = (&x_pows[a as usize] * &y_pows[b as usize]).scale(c);
        out = &out + &term;
    }
    Ok(out)
}

/// Direction for pencil parameter `tau` in `[0, 4)`, a piecewise linear
/// parametrization of the lines through a point: `[0,1)` runs from vertical
/// to slope 1, `[1,3)` from slope 1 to just above slope -1, `[3,4)` from
/// slope -1 back toward vertical.
pub fn pencil_direction(tau: &Rational) -> Point {
    let one = Rational::one();
    let three = rational::int(3);
    if tau < &one {
        Point(tau.clone(), one)
    } else if tau < &three {
        Point(one, rational::int(2) - tau)
    } else {
        Point(tau - rational::int(4), one)
    }
}

/// Sample parameters `offset + 4k/samples (mod 4)`.
pub fn pencil_samples(samples: usize, offset: &Rational) -> Vec<Rational> {
    let four = rational::int(4);
    (0..samples)
        .map(|k| {
            let mut tau = offset + rational::frac(4 * k as i64, samples as i64);
            tau -= (&tau / &four).floor() * &four;
            tau
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineSample {
    #[serde(with = "rational::serde_rational")]
    pub tau: Rational,
    pub direction: Point,
    /// Real intersections with multiplicity, points at infinity included.
    pub real_roots: usize,
    /// Affine roots with `t < 0` and `t > 0`, with multiplicity.
    pub behind: usize,
    pub ahead: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessLine {
    pub direction: Point,
    pub restriction: RatPoly,
    pub real_roots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    SeparatingConsistent,
    NotSeparating { witness: WitnessLine },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionProfile {
    pub center: Point,
    pub sample_count: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// (inner oval, outer oval), present only when the center is inside the
    /// inner oval.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreeVector>,
    #[serde(skip)]
    pub samples: Vec<LineSample>,
}

impl ProjectionProfile {
    pub fn is_separating(&self) -> bool {
        matches!(self.verdict, Verdict::SeparatingConsistent)
    }
}

fn sample_line(
    q: &PlaneQuartic,
    center: &Point,
    tau: Rational,
) -> Result<(LineSample, RatPoly), QuarticError> {
    let direction = pencil_direction(&tau);
    let r = restrict_to_line(q, center, &direction)?;
    let deg = r.degree().ok_or(QuarticError::LineOnCurve)?;
    let at_infinity = 4usize.saturating_sub(deg);
    let zero = Bound::Finite(Rational::zero());
    let behind = exactpoly::sturm_count_with_multiplicity(&r, &Bound::NegInf, &zero)?;
    let ahead = exactpoly::sturm_count_with_multiplicity(&r, &zero, &Bound::PosInf)?;
    Ok((
        LineSample {
            tau,
            direction,
            real_roots: behind + ahead + at_infinity,
            behind,
            ahead,
        },
        r,
    ))
}

/// Counts real intersections on `samples` lines through `center` with the
/// default grid.
pub fn projection_profile(
    q: &PlaneQuartic,
    center: &Point,
    samples: usize,
) -> Result<ProjectionProfile, QuarticError> {
    projection_profile_with_offset(q, center, samples, &Rational::zero())
}

/// As [`projection_profile`], with the sample grid shifted by `offset` in
/// the pencil parameter.
pub fn projection_profile_with_offset(
    q: &PlaneQuartic,
    center: &Point,
    samples: usize,
    offset: &Rational,
) -> Result<ProjectionProfile, QuarticError> {
    if samples < MIN_SAMPLES {
        return Err(QuarticError::TooFewSamples(samples));
    }
    if q.eval_affine(center).is_zero() {
        return Err(QuarticError::BasePoint);
    }
    let mut records = Vec::with_capacity(samples);
    let mut witness = None;
    for tau in pencil_samples(samples, offset) {
        let (rec, r) = sample_line(q, center, tau)?;
        if rec.real_roots < 4 && witness.is_none() {
            witness = Some(WitnessLine {
                direction: rec.direction.clone(),
                restriction: r,
                real_roots: rec.real_roots,
            });
        }
        records.push(rec);
    }
    let (verdict, degrees) = match witness {
        Some(witness) => (Verdict::NotSeparating { witness }, None),
        None => (Verdict::SeparatingConsistent, attribute_ovals(&records)?),
    };
    Ok(ProjectionProfile {
        center: center.clone(),
        sample_count: samples,
        verdict,
        degrees,
        samples: records,
    })
}

/// Nesting rule: when every sampled ray from the center crosses the curve
/// exactly twice, the center is inside the inner oval; the nearest crossing
/// on each side is the inner oval, the rest the outer one.
fn attribute_ovals(records: &[LineSample]) -> Result<Option<DegreeVector>, QuarticError> {
    let inside = |r: &LineSample| r.behind == 2 && r.ahead == 2;
    let count = records.iter().filter(|r| inside(r)).count();
    if count == 0 {
        return Ok(None);
    }
    if count != records.len() {
        return Err(QuarticError::OvalAttribution(format!(
            "{count} of {} lines split 2+2 around the center",
            records.len()
        )));
    }
    let per_line: Vec<(u32, u32)> = records
        .iter()
        .map(|r| {
            let inner = (r.behind.min(1) + r.ahead.min(1)) as u32;
            (inner, r.real_roots as u32 - inner)
        })
        .collect();
    if per_line.windows(2).any(|w| w[0] != w[1]) {
        return Err(QuarticError::OvalAttribution(
            "per-oval counts vary across lines".into(),
        ));
    }
    let (inner, outer) = per_line[0];
    DegreeVector::new(vec![inner, outer])
        .map(Some)
        .map_err(|e| QuarticError::OvalAttribution(e.to_string()))
}

/// Re-checks a witness line exactly.
pub fn verify_witness_line(q: &PlaneQuartic, center: &Point, w: &WitnessLine) -> bool {
    let Ok(r) = restrict_to_line(q, center, &w.direction) else {
        return false;
    };
    let Some(deg) = r.degree() else {
        return false;
    };
    let real = exactpoly::real_root_count_with_multiplicity(&r).unwrap_or(usize::MAX);
    r == w.restriction && real + (4 - deg.min(4)) < 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn nested_example_values() {
        let q = nested_quartic_example();
        assert_eq!(q.eval(&int(1), &int(0), &int(1)), int(0));
        assert_eq!(q.eval(&int(0), &int(2), &int(1)), int(0));
        assert_eq!(q.eval(&int(0), &int(0), &int(1)), int(4));
    }

    #[test]
    fn restriction_examples() {
        let q = nested_quartic_example();
        let expect = &RatPoly::from_ints(&[-1, 0, 1]) * &RatPoly::from_ints(&[-4, 0, 1]);
        assert_eq!(restrict_to_line(&q, &Point::ints(0, 0), &Point::ints(1, 0)).unwrap(), expect);
        assert_eq!(restrict_to_line(&q, &Point::ints(0, 0), &Point::ints(0, 1)).unwrap(), expect);
        let far = &RatPoly::from_ints(&[99, 0, 1]) * &RatPoly::from_ints(&[96, 0, 1]);
        assert_eq!(restrict_to_line(&q, &Point::ints(10, 0), &Point::ints(0, 1)).unwrap(), far);
        assert_eq!(
            restrict_to_line(&q, &Point::ints(0, 0), &Point::ints(0, 0)),
            Err(QuarticError::ZeroDirection)
        );
    }

    #[test]
    fn pencil_covers_each_line_once() {
        let taus = pencil_samples(64, &int(0));
        let dirs: Vec<Point> = taus.iter().map(pencil_direction).collect();
        assert_eq!(dirs[0], Point::ints(0, 1));
        assert_eq!(dirs[32], Point::ints(1, 0));
        // no two directions are parallel
        for i in 0..dirs.len() {
            for j in i + 1..dirs.len() {
                let cross = &dirs[i].0 * &dirs[j].1 - &dirs[i].1 * &dirs[j].0;
                assert!(!cross.is_zero(), "{i} {j}");
            }
        }
        let shifted = pencil_samples(8, &frac(7, 2));
        assert!(shifted.iter().all(|t| *t >= int(0) && *t < int(4)));
    }

    #[test]
    fn profile_examples() {
        let q = nested_quartic_example();
        let p = projection_profile(&q, &Point::ints(0, 0), 64).unwrap();
        assert!(p.is_separating());
        assert_eq!(p.degrees, Some(DegreeVector::new(vec![2, 2]).unwrap()));
        assert!(p.samples.iter().all(|s| s.real_roots == 4));

        let p = projection_profile(&q, &Point::ints(10, 0), 64).unwrap();
        let Verdict::NotSeparating { witness } = &p.verdict else {
            panic!("expected a witness line");
        };
        assert_eq!(witness.direction, Point::ints(0, 1));
        assert_eq!(witness.real_roots, 0);
        assert!(verify_witness_line(&q, &Point::ints(10, 0), witness));
        assert_eq!(p.degrees, None);

        let p = projection_profile(&q, &Point(frac(3, 2), int(0)), 64).unwrap();
        let Verdict::NotSeparating { witness } = &p.verdict else {
            panic!("expected a witness line");
        };
        assert_eq!(witness.real_roots, 2);
    }

    #[test]
    fn profile_errors() {
        let q = nested_quartic_example();
        assert_eq!(
            projection_profile(&q, &Point::ints(1, 0), 64),
            Err(QuarticError::BasePoint)
        );
        assert_eq!(
            projection_profile(&q, &Point::ints(0, 0), 4),
            Err(QuarticError::TooFewSamples(4))
        );
        assert_eq!(
            PlaneQuartic::new(vec![int(0); 15]),
            Err(QuarticError::ZeroForm)
        );
        assert_eq!(PlaneQuartic::new(vec![int(1); 3]), Err(QuarticError::CoefficientCount(3)));
    }

    #[test]
    fn tangent_lines_count_as_real_contact() {
        // y = 1 touches the inner circle at (0, 1)
        let q = nested_quartic_example();
        let center = Point(frac(1, 2), int(1));
        let r = restrict_to_line(&q, &center, &Point::ints(1, 0)).unwrap();
        assert_eq!(exactpoly::real_root_count_with_multiplicity(&r).unwrap(), 4);
        assert_eq!(exactpoly::real_root_count(&r).unwrap(), 3);
    }

    #[test]
    fn json_forms() {
        let q = nested_quartic_example();
        let s = serde_json::to_string(&q).unwrap();
        let back: PlaneQuartic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        let p = projection_profile(&q, &Point::ints(0, 0), 8).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["verdict"], "separating_consistent");
        assert_eq!(v["degrees"], serde_json::json!([2, 2]));
    }
}
