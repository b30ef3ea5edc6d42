//! Exhaustive cross-checks over seeded random node sets and small degree
//! vectors. Work is spread over threads with rayon; results are merged in
//! job order so reports are reproducible for a fixed seed.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::hyperelliptic::{self, Certificate, HyperellipticError, RealHyperellipticCurve};
use crate::rational::{self, Rational};
use crate::semigroup::{self, DegreeVector};
use crate::vandermonde::{
    self, DualVandermondeSystem, FeasibilityOracle, SignSequence, VandermondeError,
    DEFAULT_ENUMERATION_CAP,
};

pub const MAX_SWEEP_NODES: usize = DEFAULT_ENUMERATION_CAP;
pub const MAX_SWEEP_TOTAL: u32 = 16;

/// Strictly increasing rationals `p/q` with `|p| <= 24`, `1 <= q <= 6`.
pub fn random_node_set<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < n {
        let p = rng.random_range(-24i64..=24);
        let q = rng.random_range(1i64..=6);
        set.insert(rational::frac(p, q));
    }
    set.into_iter().collect()
}

#[derive(Debug, Clone)]
pub struct SignSweepConfig {
    pub genera: Vec<usize>,
    pub max_nodes: usize,
    /// Node sets drawn for every (genus, node count) pair.
    pub node_sets: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub genus: usize,
    pub nodes: Vec<String>,
    pub signs: SignSequence,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SignSweepReport {
    pub node_sets: usize,
    pub checked: usize,
    pub feasible: usize,
    pub mismatches: usize,
    pub witnesses_verified: usize,
    pub witness_failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
}

impl SignSweepReport {
    fn merge(&mut self, other: SignSweepReport) {
        self.node_sets += other.node_sets;
        self.checked += other.checked;
        self.feasible += other.feasible;
        self.mismatches += other.mismatches;
        self.witnesses_verified += other.witnesses_verified;
        self.witness_failures += other.witness_failures;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample;
        }
    }
}

fn sweep_one(
    nodes: Vec<Rational>,
    genus: usize,
) -> Result<SignSweepReport, VandermondeError> {
    let sys = DualVandermondeSystem::new(nodes, genus)?;
    let mut oracle = FeasibilityOracle::new(&sys, DEFAULT_ENUMERATION_CAP)?;
    let mut rep = SignSweepReport {
        node_sets: 1,
        ..Default::default()
    };
    let note = |rep: &mut SignSweepReport, s: &SignSequence, detail: String| {
        if rep.first_counterexample.is_none() {
            rep.first_counterexample = Some(Counterexample {
                genus,
                nodes: sys.nodes().iter().map(rational::format_rational).collect(),
                signs: s.clone(),
                detail,
            });
        }
    };
    for s in SignSequence::all(sys.len()) {
        rep.checked += 1;
        let by_changes = vandermonde::sign_feasible(&sys, &s)?;
        let by_cone = oracle.decide(&s)?;
        if by_changes != by_cone {
            rep.mismatches += 1;
            note(&mut rep, &s, format!("criterion {by_changes}, oracle {by_cone}"));
        }
        if by_changes {
            rep.feasible += 1;
            match vandermonde::construct_witness(&sys, &s) {
                Ok(h) if vandermonde::verify_witness(&sys, &s, &h) => rep.witnesses_verified += 1,
                Ok(_) => {
                    rep.witness_failures += 1;
                    note(&mut rep, &s, "witness failed verification".into());
                }
                Err(e) => {
                    rep.witness_failures += 1;
                    note(&mut rep, &s, format!("witness construction failed: {e}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Compares the sign-change criterion with the cone oracle on every sign
/// pattern, and verifies a constructed witness for every feasible one.
pub fn sign_pattern_sweep(cfg: &SignSweepConfig) -> Result<SignSweepReport, VandermondeError> {
    if cfg.max_nodes > MAX_SWEEP_NODES {
        return Err(VandermondeError::CapExceeded {
            n: cfg.max_nodes,
            cap: MAX_SWEEP_NODES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut jobs = Vec::new();
    for &g in &cfg.genera {
        for n in 1..=cfg.max_nodes {
            for _ in 0..cfg.node_sets {
                jobs.push((g, random_node_set(&mut rng, n)));
            }
        }
    }
    let parts: Vec<Result<SignSweepReport, VandermondeError>> = jobs
        .into_par_iter()
        .map(|(g, nodes)| sweep_one(nodes, g))
        .collect();
    let mut total = SignSweepReport::default();
    for p in parts {
        total.merge(p?);
    }
    Ok(total)
}

#[derive(Debug, Clone)]
pub struct MembershipSweepConfig {
    pub genera: Vec<u32>,
    pub max_total: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub genus: u32,
    pub degrees: DegreeVector,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MembershipSweepReport {
    pub checked: usize,
    pub members: usize,
    pub members_certified: usize,
    pub nonmembers: usize,
    pub nonmembers_refuted: usize,
    pub discrepancies: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
}

/// Outcome for one degree vector: `Ok(member)` when the oracle, the certificate
/// machinery and the exhaustive search agree.
pub fn check_degree_vector(
    curve: &RealHyperellipticCurve,
    d: &DegreeVector,
) -> Result<bool, String> {
    let g = curve.genus();
    let member = semigroup::is_member(&curve.family(), d).map_err(|e| e.to_string())?;
    let built = hyperelliptic::construct_certificate(curve, d);
    let pattern = hyperelliptic::search_sheet_patterns(g, d);
    let factored = hyperelliptic::factored_form(g, d);
    if member {
        let verified = match &built {
            Ok(Certificate::Points(c)) => hyperelliptic::verify_certificate(curve, c).valid,
            Ok(Certificate::Factored(f)) => {
                hyperelliptic::factored_degree_vector(curve, f).as_ref() == Ok(d)
            }
            Err(e) => return Err(format!("member but construction failed: {e}")),
        };
        if !verified {
            return Err("member but certificate does not verify".into());
        }
        if factored.is_none() && pattern.is_none() {
            return Err("non-factored member without a feasible sheet pattern".into());
        }
        Ok(true)
    } else {
        if !matches!(built, Err(HyperellipticError::NotMember(_))) {
            return Err("non-member but construction did not refuse".into());
        }
        if let Some(p) = pattern {
            return Err(format!("non-member admits sheet pattern {p}"));
        }
        if factored.is_some() {
            return Err("non-member has factored form".into());
        }
        Ok(false)
    }
}

/// Every degree vector with entry sum up to `max_total` on the standard
/// curve `y^2 = x^(2g+2) + 1` of each genus.
pub fn membership_sweep(
    cfg: &MembershipSweepConfig,
) -> Result<MembershipSweepReport, HyperellipticError> {
    if cfg.max_total > MAX_SWEEP_TOTAL {
        return Err(HyperellipticError::Semigroup(
            semigroup::SemigroupError::BoundExceeded {
                bound: cfg.max_total,
                cap: MAX_SWEEP_TOTAL,
            },
        ));
    }
    let mut jobs = Vec::new();
    for &g in &cfg.genera {
        let curve = RealHyperellipticCurve::standard(g)?;
        for d in semigroup::vectors_up_to(curve.component_count(), cfg.max_total) {
            jobs.push((curve.clone(), d));
        }
    }
    let outcomes: Vec<(u32, DegreeVector, Result<bool, String>)> = jobs
        .into_par_iter()
        .map(|(c, d)| {
            let r = check_degree_vector(&c, &d);
            (c.genus(), d, r)
        })
        .collect();
    let mut rep = MembershipSweepReport::default();
    for (genus, degrees, r) in outcomes {
        rep.checked += 1;
        match r {
            Ok(true) => {
                rep.members += 1;
                rep.members_certified += 1;
            }
            Ok(false) => {
                rep.nonmembers += 1;
                rep.nonmembers_refuted += 1;
            }
            Err(detail) => {
                rep.discrepancies += 1;
                if rep.first_discrepancy.is_none() {
                    rep.first_discrepancy = Some(Discrepancy {
                        genus,
                        degrees,
                        detail,
                    });
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sweeps() {
        let rep = sign_pattern_sweep(&SignSweepConfig {
            genera: vec![],
            max_nodes: 5,
            node_sets: 20,
            seed: 1,
        })
        .unwrap();
        assert_eq!((rep.checked, rep.mismatches), (0, 0));
        let rep = membership_sweep(&MembershipSweepConfig {
            genera: vec![],
            max_total: 8,
        })
        .unwrap();
        assert_eq!(rep.checked, 0);
    }

    #[test]
    fn small_sign_sweep_is_clean_and_reproducible() {
        let cfg = SignSweepConfig {
            genera: vec![1, 2, 3],
            max_nodes: 4,
            node_sets: 3,
            seed: 7,
        };
        let a = sign_pattern_sweep(&cfg).unwrap();
        assert_eq!(a.mismatches, 0);
        assert_eq!(a.witness_failures, 0);
        assert_eq!(a.checked, 3 * 3 * (3 + 9 + 27 + 81));
        assert_eq!(a, sign_pattern_sweep(&cfg).unwrap());
    }

    #[test]
    fn node_sets_are_strictly_increasing() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=8 {
            let v = random_node_set(&mut rng, n);
            assert_eq!(v.len(), n);
            assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn small_membership_sweep() {
        let rep = membership_sweep(&MembershipSweepConfig {
            genera: vec![2, 3],
            max_total: 8,
        })
        .unwrap();
        assert_eq!(rep.discrepancies, 0, "{:?}", rep.first_discrepancy);
        assert_eq!(rep.members, rep.members_certified);
        assert_eq!(rep.nonmembers, rep.nonmembers_refuted);
        assert_eq!(rep.checked, 8 + 28);
    }
}
