//! Separating semigroups of the curve families with a known answer.
//!
//! Degree vectors list the covering degree of a separating morphism on each
//! real component. Entries are positive, so "N" below means {1, 2, 3, ...}.
//!
//! | family                | components | members                                  |
//! |-----------------------|------------|------------------------------------------|
//! | M-curve, genus g      | g + 1      | all of N^(g+1)                           |
//! | hyperelliptic, g odd  | 2          | d1 = d2, or min(d1, d2) >= (g+1)/2       |
//! | hyperelliptic, g even | 1          | d even, or d >= g                        |
//! | hyperbolic quartic    | 2          | d2 >= 2 (inner oval first)               |

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const ENUMERATION_BOUND_CAP: u32 = 64;
pub const CLOSURE_BOUND_CAP: u32 = 32;
const ENUMERATION_SIZE_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("component count: expected {expected}, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("degree vector entries must be positive")]
    NonPositiveDegree,
    #[error("degree vector is empty")]
    EmptyDegreeVector,
    #[error("hyperelliptic genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("bound {bound} exceeds cap {cap}")]
    BoundExceeded { bound: u32, cap: u32 },
    #[error("enumeration would produce about {0} vectors")]
    TooLarge(u128),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// Covering degrees, one per real component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(degrees: Vec<u32>) -> Result<Self, SemigroupError> {
        if degrees.is_empty() {
            return Err(SemigroupError::EmptyDegreeVector);
        }
        if degrees.contains(&0) {
            return Err(SemigroupError::NonPositiveDegree);
        }
        Ok(Self(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise sum. Panics on length mismatch.
    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        assert_eq!(self.len(), other.len());
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl TryFrom<Vec<u32>> for DegreeVector {
    type Error = SemigroupError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<DegreeVector> for Vec<u32> {
    fn from(d: DegreeVector) -> Self {
        d.0
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemigroupFamily {
    MCurve { genus: u32 },
    Hyperelliptic { genus: u32 },
    /// Two nested ovals, inner oval first.
    HyperbolicQuartic,
}

impl SemigroupFamily {
    pub fn m_curve(genus: u32) -> Self {
        SemigroupFamily::MCurve { genus }
    }

    pub fn hyperelliptic(genus: u32) -> Result<Self, SemigroupError> {
        if genus < 2 {
            return Err(SemigroupError::GenusTooSmall(genus));
        }
        Ok(SemigroupFamily::Hyperelliptic { genus })
    }

    /// Parses `m-curve`, `hyperelliptic` or `quartic` (aliases accepted).
    pub fn parse(name: &str, genus: Option<u32>) -> Result<Self, SemigroupError> {
        match name {
            "m-curve" | "m_curve" | "mcurve" => Ok(Self::m_curve(genus.unwrap_or(0))),
            "hyperelliptic" => Self::hyperelliptic(genus.unwrap_or(0)),
            "quartic" | "hyperbolic-quartic" | "hyperbolic_quartic" => {
                Ok(SemigroupFamily::HyperbolicQuartic)
            }
            other => Err(SemigroupError::UnknownFamily(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SemigroupFamily::MCurve { .. } => "m_curve",
            SemigroupFamily::Hyperelliptic { .. } => "hyperelliptic",
            SemigroupFamily::HyperbolicQuartic => "hyperbolic_quartic",
        }
    }

    pub fn genus(&self) -> u32 {
        match *self {
            SemigroupFamily::MCurve { genus } | SemigroupFamily::Hyperelliptic { genus } => genus,
            SemigroupFamily::HyperbolicQuartic => 3,
        }
    }

    pub fn component_count(&self) -> usize {
        match *self {
            SemigroupFamily::MCurve { genus } => genus as usize + 1,
            SemigroupFamily::Hyperelliptic { genus } if genus % 2 == 1 => 2,
            SemigroupFamily::Hyperelliptic { .. } => 1,
            SemigroupFamily::HyperbolicQuartic => 2,
        }
    }
}

pub fn is_member(family: &SemigroupFamily, d: &DegreeVector) -> Result<bool, SemigroupError> {
    let expected = family.component_count();
    if d.len() != expected {
        return Err(SemigroupError::ComponentCount {
            expected,
            found: d.len(),
        });
    }
    let v = d.degrees();
    Ok(match *family {
        SemigroupFamily::MCurve { .. } => true,
        SemigroupFamily::Hyperelliptic { genus } if genus % 2 == 1 => {
            v[0] == v[1] || v[0].min(v[1]) >= genus.div_ceil(2)
        }
        SemigroupFamily::Hyperelliptic { genus } => v[0].is_multiple_of(2) || v[0] >= genus,
        SemigroupFamily::HyperbolicQuartic => v[1] >= 2,
    })
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Every vector of positive integers of length `len` with entry sum at most
/// `bound`, in lexicographic order.
pub fn vectors_up_to(len: usize, bound: u32) -> Vec<DegreeVector> {
    fn rec(prefix: &mut Vec<u32>, len: usize, budget: u32, out: &mut Vec<DegreeVector>) {
        if prefix.len() == len {
            out.push(DegreeVector(prefix.clone()));
            return;
        }
        let remaining_slots = (len - prefix.len() - 1) as u32;
        if budget < remaining_slots + 1 {
            return;
        }
        for v in 1..=budget - remaining_slots {
            prefix.push(v);
            rec(prefix, len, budget - v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        rec(&mut Vec::with_capacity(len), len, bound, &mut out);
    }
    out
}

/// Members with entry sum at most `total_bound` (at most 64), sorted.
pub fn enumerate_members(
    family: &SemigroupFamily,
    total_bound: u32,
) -> Result<Vec<DegreeVector>, SemigroupError> {
    if total_bound > ENUMERATION_BOUND_CAP {
        return Err(SemigroupError::BoundExceeded {
            bound: total_bound,
            cap: ENUMERATION_BOUND_CAP,
        });
    }
    let len = family.component_count();
    // compositions with `len` positive parts and sum <= bound
    let size = binomial(total_bound as u128, len as u128);
    if size > ENUMERATION_SIZE_CAP {
        return Err(SemigroupError::TooLarge(size));
    }
    let mut out = Vec::new();
    for d in vectors_up_to(len, total_bound) {
        if is_member(family, &d)? {
            out.push(d);
        }
    }
    Ok(out)
}

/// Checks `a + b` is a member for all members `a`, `b` with
/// `sum(a) + sum(b) <= total_bound` (at most 32).
pub fn check_closure(family: &SemigroupFamily, total_bound: u32) -> Result<bool, SemigroupError> {
    if total_bound > CLOSURE_BOUND_CAP {
        return Err(SemigroupError::BoundExceeded {
            bound: total_bound,
            cap: CLOSURE_BOUND_CAP,
        });
    }
    let members = enumerate_members(family, total_bound)?;
    for a in &members {
        for b in &members {
            if a.total() + b.total() > total_bound {
                continue;
            }
            if !is_member(family, &a.add(b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
