//! Sign patterns of solutions to the dual Vandermonde system
//!
//! ```text
//!     sum_i x_i^k h_i = 0,   k = 0, ..., g-1
//! ```
//!
//! A sign pattern `s` over strictly increasing nodes is realized by a nonzero
//! solution exactly when its number of sign changes is at least `g`
//! ([`sign_feasible`]). [`construct_witness`] builds such a solution exactly,
//! and [`brute_force_feasible`] decides the same question by linear
//! feasibility without looking at sign changes, for cross-checking.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::rational::{self, Rational};

/// Largest node count accepted by the exhaustive operations.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

const WITNESS_MAX_HALVINGS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VandermondeError {
    #[error("node list is empty")]
    NoNodes,
    #[error("genus must be positive")]
    ZeroGenus,
    #[error("nodes must be strictly increasing")]
    NodesNotIncreasing,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("ch below genus: {ch} < {genus}")]
    Infeasible { ch: usize, genus: usize },
    #[error("node count {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("not an exact solution of the moment equations")]
    NotASolution,
    #[error("zero entry at index {0}")]
    ZeroEntry(usize),
    #[error("invalid sign character {0:?}")]
    BadSign(char),
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

impl VandermondeError {
    /// True for states the underlying theorems rule out.
    pub fn is_internal(&self) -> bool {
        matches!(self, VandermondeError::Internal(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        match rational::sign_of(q) {
            1 => Sign::Pos,
            -1 => Sign::Neg,
            _ => Sign::Zero,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }

    fn as_rational(self) -> Rational {
        rational::int(self.as_i8() as i64)
    }
}

/// Finite sequence over {-1, 0, +1}. Written as a string over `+`, `0`, `-`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignSequence(Vec<Sign>);

impl SignSequence {
    pub fn new(entries: Vec<Sign>) -> Self {
        Self(entries)
    }

    pub fn of_values(values: &[Rational]) -> Self {
        Self(values.iter().map(Sign::of).collect())
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|s| s.negate()).collect())
    }

    pub fn sign_changes(&self) -> usize {
        count_sign_changes(self.0.iter().copied())
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&s| s != Sign::Zero).count()
    }

    /// Every sequence in {-1, 0, +1}^n, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = SignSequence> {
        let total = 3usize.pow(n as u32);
        (0..total).map(move |mut code| {
            let mut v = vec![Sign::Neg; n];
            for slot in v.iter_mut().rev() {
                *slot = [Sign::Neg, Sign::Zero, Sign::Pos][code % 3];
                code /= 3;
            }
            SignSequence(v)
        })
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for SignSequence {
    type Err = VandermondeError;

    /// Accepts `+-0` as well as comma or space separated forms like `+,-,0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(Sign::Pos),
                '-' => Ok(Sign::Neg),
                '0' => Ok(Sign::Zero),
                other => Err(VandermondeError::BadSign(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignSequence)
    }
}

impl Serialize for SignSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The weights `h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(pub Vec<Rational>);

impl Deref for RationalVector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl RationalVector {
    pub fn signs(&self) -> SignSequence {
        SignSequence::of_values(&self.0)
    }

    pub fn scaled(&self, c: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|h| h * c).collect())
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serde_rational_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        rational::serde_rational_vec::deserialize(d).map(RationalVector)
    }
}

/// Number of sign changes; zeros are skipped.
pub fn count_sign_changes(signs: impl IntoIterator<Item = Sign>) -> usize {
    let mut prev = Sign::Zero;
    let mut changes = 0;
    for s in signs.into_iter().filter(|&s| s != Sign::Zero) {
        if prev != Sign::Zero && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

/// Moment sums `sum_i x_i^k h_i` for `k = 0..genus`.
pub fn moment_residuals(nodes: &[Rational], h: &[Rational], genus: usize) -> Vec<Rational> {
    Matrix::vandermonde(nodes, genus).mul_vec(h)
}

/// Strictly increasing nodes together with a genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualVandermondeSystem {
    nodes: Vec<Rational>,
    genus: usize,
}

impl DualVandermondeSystem {
    pub fn new(nodes: Vec<Rational>, genus: usize) -> Result<Self, VandermondeError> {
        if nodes.is_empty() {
            return Err(VandermondeError::NoNodes);
        }
        if genus == 0 {
            return Err(VandermondeError::ZeroGenus);
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(VandermondeError::NodesNotIncreasing);
        }
        Ok(Self { nodes, genus })
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.nodes
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn residuals(&self, h: &[Rational]) -> Vec<Rational> {
        moment_residuals(&self.nodes, h, self.genus)
    }

    pub fn is_solution(&self, h: &[Rational]) -> bool {
        h.len() == self.len() && self.residuals(h).iter().all(Zero::is_zero)
    }

    fn check_len(&self, found: usize) -> Result<(), VandermondeError> {
        if found != self.len() {
            return Err(VandermondeError::LengthMismatch {
                expected: self.len(),
                found,
            });
        }
        Ok(())
    }

    /// `x -> alpha*x + beta` applied to every node (`alpha > 0`).
    pub fn reparametrized(&self, alpha: &Rational, beta: &Rational) -> Self {
        assert!(alpha.is_positive());
        Self {
            nodes: self.nodes.iter().map(|x| alpha * x + beta).collect(),
            genus: self.genus,
        }
    }
}

/// Exact basis of the solution space; it has `max(0, n - g)` vectors.
pub fn nullspace_basis(sys: &DualVandermondeSystem) -> Vec<RationalVector> {
    Matrix::vandermonde(&sys.nodes, sys.genus)
        .nullspace()
        .into_iter()
        .map(|v| RationalVector(rational::primitive_integer_scaling(&v)))
        .collect()
}

/// Decides whether `s` is the sign pattern of a nonzero solution: this is
/// the case iff `s` has at least `g` sign changes.
pub fn sign_feasible(
    sys: &DualVandermondeSystem,
    s: &SignSequence,
) -> Result<bool, VandermondeError> {
    sys.check_len(s.len())?;
    Ok(s.sign_changes() >= sys.genus)
}

/// Leftmost index of every maximal block of equal nonzero signs.
fn block_representatives(s: &SignSequence) -> Vec<usize> {
    let mut reps = Vec::new();
    let mut prev = Sign::Zero;
    for (i, &si) in s.entries().iter().enumerate() {
        if si != Sign::Zero && si != prev {
            reps.push(i);
            prev = si;
        }
    }
    reps
}

/// Builds an exact solution `h` with `sign(h_i) = s_i` for every `i`.
///
/// One index per alternating block (the leftmost) is chosen for the first
/// `g + 1` blocks; the null vector of that `g x (g+1)` subsystem alternates
/// strictly. Remaining nonzero entries get `s_i * eps`, the first chosen index
/// keeps its value, and the other `g` chosen entries are recomputed from the
/// invertible `g x g` Vandermonde block. `eps` is halved until all signs agree.
/// The result is rescaled to coprime integers.
pub fn construct_witness(
    sys: &DualVandermondeSystem,
    s: &SignSequence,
) -> Result<RationalVector, VandermondeError> {
    sys.check_len(s.len())?;
    let g = sys.genus;
    let ch = s.sign_changes();
    if ch < g {
        return Err(VandermondeError::Infeasible { ch, genus: g });
    }
    let n = sys.len();
    let chosen: Vec<usize> = block_representatives(s).into_iter().take(g + 1).collect();
    let sub_nodes: Vec<Rational> = chosen.iter().map(|&i| sys.nodes[i].clone()).collect();
    let kernel = Matrix::vandermonde(&sub_nodes, g).nullspace();
    let [mut core] = <[Vec<Rational>; 1]>::try_from(kernel).map_err(|k| {
        VandermondeError::Internal(format!(
            "{}-node subsystem has kernel dimension {}",
            g + 1,
            k.len()
        ))
    })?;
    if Sign::of(&core[0]) != s.entries()[chosen[0]] {
        core.iter_mut().for_each(|c| *c = -c.clone());
    }
    if chosen
        .iter()
        .zip(&core)
        .any(|(&i, c)| Sign::of(c) != s.entries()[i])
    {
        return Err(VandermondeError::Internal(
            "null vector of a (g+1)-node subsystem does not alternate".into(),
        ));
    }

    let others: Vec<usize> = (0..n)
        .filter(|i| !chosen.contains(i) && s.entries()[*i] != Sign::Zero)
        .collect();
    let mut h = vec![Rational::zero(); n];
    for (&i, c) in chosen.iter().zip(&core) {
        h[i] = c.clone();
    }
    if others.is_empty() {
        return Ok(RationalVector(rational::primitive_integer_scaling(&h)));
    }

    let min_core = core.iter().map(|c| c.abs()).min().unwrap();
    let max_node = sys.nodes.iter().map(|x| x.abs()).max().unwrap();
    let mut growth = Rational::one();
    for _ in 0..g {
        growth *= &max_node + Rational::one();
    }
    let mut eps = min_core / (rational::int(2 * n as i64) * growth);

    let anchor = chosen[0];
    let solved = &chosen[1..];
    let block = Matrix::vandermonde(
        &solved.iter().map(|&i| sys.nodes[i].clone()).collect::<Vec<_>>(),
        g,
    );
    for _ in 0..WITNESS_MAX_HALVINGS {
        let mut trial = vec![Rational::zero(); n];
        trial[anchor] = core[0].clone();
        for &i in &others {
            trial[i] = s.entries()[i].as_rational() * &eps;
        }
        let rhs: Vec<Rational> = sys.residuals(&trial).into_iter().map(|r| -r).collect();
        let sol = block.solve(&rhs).ok_or_else(|| {
            VandermondeError::Internal("Vandermonde block on distinct nodes is singular".into())
        })?;
        for (&i, v) in solved.iter().zip(sol) {
            trial[i] = v;
        }
        if SignSequence::of_values(&trial) == *s {
            debug_assert!(sys.is_solution(&trial));
            return Ok(RationalVector(rational::primitive_integer_scaling(&trial)));
        }
        eps /= rational::int(2);
    }
    Err(VandermondeError::Internal(format!(
        "witness did not converge after {WITNESS_MAX_HALVINGS} halvings"
    )))
}

/// Exact check that `h` solves the system and carries the signs `s`.
pub fn verify_witness(sys: &DualVandermondeSystem, s: &SignSequence, h: &[Rational]) -> bool {
    h.len() == sys.len() && sys.is_solution(h) && SignSequence::of_values(h) == *s
}

/// All feasible patterns, sorted. Fails when the node count exceeds `cap`.
pub fn enumerate_feasible_patterns(
    sys: &DualVandermondeSystem,
    cap: usize,
) -> Result<BTreeSet<SignSequence>, VandermondeError> {
    if sys.len() > cap {
        return Err(VandermondeError::CapExceeded { n: sys.len(), cap });
    }
    Ok(SignSequence::all(sys.len())
        .filter(|s| s.sign_changes() >= sys.genus)
        .collect())
}

/// Linear-feasibility decision procedure that ignores sign changes.
///
/// For a pattern `s`, the solutions vanishing where `s_i = 0` form a linear
/// space with basis `B`; the pattern is realized iff the open cone
/// `{ lambda : s_i (B lambda)_i > 0 for every i with s_i != 0 }` is nonempty,
/// which Fourier-Motzkin elimination decides exactly. Kernels are cached per
/// zero mask, so deciding many patterns over one node set is cheap.
pub struct FeasibilityOracle<'a> {
    sys: &'a DualVandermondeSystem,
    kernels: HashMap<Vec<bool>, Vec<Vec<Rational>>>,
}

impl<'a> FeasibilityOracle<'a> {
    pub fn new(sys: &'a DualVandermondeSystem, cap: usize) -> Result<Self, VandermondeError> {
        if sys.len() > cap {
            return Err(VandermondeError::CapExceeded { n: sys.len(), cap });
        }
        Ok(Self {
            sys,
            kernels: HashMap::new(),
        })
    }

    fn kernel(&mut self, zero_mask: Vec<bool>) -> &Vec<Vec<Rational>> {
        let sys = self.sys;
        self.kernels.entry(zero_mask).or_insert_with_key(|mask| {
            let n = sys.len();
            let mut rows: Vec<Vec<Rational>> = (0..sys.genus)
                .map(|k| {
                    sys.nodes
                        .iter()
                        .map(|x| pow(x, k))
                        .collect()
                })
                .collect();
            for (i, _) in mask.iter().enumerate().filter(|(_, z)| **z) {
                let mut e = vec![Rational::zero(); n];
                e[i] = Rational::one();
                rows.push(e);
            }
            Matrix::from_rows(rows, n).nullspace()
        })
    }

    pub fn decide(&mut self, s: &SignSequence) -> Result<bool, VandermondeError> {
        self.sys.check_len(s.len())?;
        if s.support_size() == 0 {
            return Ok(false);
        }
        let mask: Vec<bool> = s.entries().iter().map(|&e| e == Sign::Zero).collect();
        let basis = self.kernel(mask).clone();
        if basis.is_empty() {
            return Ok(false);
        }
        // one strict inequality per support index, in the coordinates lambda
        let constraints: Vec<Vec<Rational>> = s
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != Sign::Zero)
            .map(|(i, e)| {
                basis
                    .iter()
                    .map(|b| &b[i] * e.as_rational())
                    .collect()
            })
            .collect();
        Ok(strict_cone_nonempty(constraints, basis.len()))
    }
}

fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

/// Decides `exists lambda: a_j . lambda > 0 for all j` by Fourier-Motzkin.
fn strict_cone_nonempty(mut constraints: Vec<Vec<Rational>>, dim: usize) -> bool {
    for var in 0..dim {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut rest = Vec::new();
        for c in constraints {
            match Sign::of(&c[var]) {
                Sign::Pos => pos.push(c),
                Sign::Neg => neg.push(c),
                Sign::Zero => rest.push(c),
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p[var].clone(), -q[var].clone());
                let combo: Vec<Rational> =
                    p.iter().zip(q).map(|(pi, qi)| &b * pi + &a * qi).collect();
                rest.push(rational::primitive_integer_scaling(&combo));
            }
        }
        rest.sort();
        rest.dedup();
        constraints = rest;
    }
    // every surviving constraint reads 0 > 0
    constraints.is_empty()
}

/// One-shot form of [`FeasibilityOracle::decide`].
pub fn brute_force_feasible(
    sys: &DualVandermondeSystem,
    s: &SignSequence,
) -> Result<bool, VandermondeError> {
    FeasibilityOracle::new(sys, DEFAULT_ENUMERATION_CAP)?.decide(s)
}

/// Which of the two alternatives for a nowhere-zero solution over possibly
/// repeated nodes holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorollaryCase {
    /// Weights cancel node by node.
    CaseI,
    /// At least `floor((g+1)/2)` positive and as many negative weights.
    CaseII,
    Both,
}

impl CorollaryCase {
    pub fn case_i(self) -> bool {
        matches!(self, CorollaryCase::CaseI | CorollaryCase::Both)
    }

    pub fn case_ii(self) -> bool {
        matches!(self, CorollaryCase::CaseII | CorollaryCase::Both)
    }
}

/// Classifies a nowhere-zero exact solution over nodes that may repeat.
///
/// At least one alternative always holds; if neither does, an
/// [`VandermondeError::Internal`] error is returned.
pub fn classify_corollary(
    nodes: &[Rational],
    h: &[Rational],
    genus: usize,
) -> Result<CorollaryCase, VandermondeError> {
    if nodes.len() != h.len() {
        return Err(VandermondeError::LengthMismatch {
            expected: nodes.len(),
            found: h.len(),
        });
    }
    if genus == 0 {
        return Err(VandermondeError::ZeroGenus);
    }
    if let Some(i) = h.iter().position(Zero::is_zero) {
        return Err(VandermondeError::ZeroEntry(i));
    }
    if !moment_residuals(nodes, h, genus).iter().all(Zero::is_zero) {
        return Err(VandermondeError::NotASolution);
    }
    let mut per_node: BTreeMap<&Rational, Rational> = BTreeMap::new();
    for (x, hi) in nodes.iter().zip(h) {
        *per_node.entry(x).or_insert_with(Rational::zero) += hi;
    }
    let case_i = per_node.values().all(Zero::is_zero);
    let positives = h.iter().filter(|v| v.is_positive()).count();
    let negatives = h.len() - positives;
    let need = genus.div_ceil(2);
    let case_ii = positives >= need && negatives >= need;
    match (case_i, case_ii) {
        (true, true) => Ok(CorollaryCase::Both),
        (true, false) => Ok(CorollaryCase::CaseI),
        (false, true) => Ok(CorollaryCase::CaseII),
        (false, false) => Err(VandermondeError::Internal(format!(
            "solution with {positives} positive and {negatives} negative weights \
             neither cancels per node nor reaches {need} of each sign"
        ))),
    }
}
