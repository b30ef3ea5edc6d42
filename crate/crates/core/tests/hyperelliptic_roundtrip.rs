use num_traits::Zero;
use realsep::exactpoly::{self, RatPoly};
use realsep::hyperelliptic::{
    self, Certificate, CertificatePoint, FactoredMorphism, HyperellipticError,
    MembershipCertificate, ProjPoint, RealHyperellipticCurve, RejectReason, Sheet,
};
use realsep::rational::{frac, int};
use realsep::semigroup::{self, DegreeVector};
use realsep::vandermonde::RationalVector;
use realsep::Rational;

fn dv(v: &[u32]) -> DegreeVector {
    DegreeVector::new(v.to_vec()).unwrap()
}

/// `prod (x^2 + k)` for `k = 1..=g+1`: positive, squarefree, degree `2g+2`.
fn shifted_curve(genus: u32) -> RealHyperellipticCurve {
    let mut p = RatPoly::one();
    for k in 1..=genus as i64 + 1 {
        p = &p * &RatPoly::from_ints(&[k, 0, 1]);
    }
    RealHyperellipticCurve::new(p).unwrap()
}

fn curves(genus: u32) -> Vec<RealHyperellipticCurve> {
    vec![RealHyperellipticCurve::standard(genus).unwrap(), shifted_curve(genus)]
}

fn sheet_counts(c: &MembershipCertificate) -> (u32, u32) {
    let plus = c.points.iter().filter(|p| p.sheet == Sheet::Plus).count() as u32;
    (plus, c.points.len() as u32 - plus)
}

#[test]
fn round_trip_for_small_degree_vectors() {
    for genus in 2..=5u32 {
        for curve in curves(genus) {
            for d in semigroup::vectors_up_to(curve.component_count(), 10) {
                let member = semigroup::is_member(&curve.family(), &d).unwrap();
                let built = hyperelliptic::construct_certificate(&curve, &d);
                match (member, built) {
                    (true, Ok(Certificate::Points(c))) => {
                        let v = hyperelliptic::verify_certificate(&curve, &c);
                        assert!(v.valid, "g={genus} d={d}: {:?}", v.reason);
                        assert_eq!(c.points.len() as u32, d.total());
                        if let [a, b] = d.degrees() {
                            assert_eq!(sheet_counts(&c), (*a, *b), "g={genus} d={d}");
                        }
                    }
                    (true, Ok(Certificate::Factored(f))) => {
                        assert_eq!(
                            hyperelliptic::factored_degree_vector(&curve, &f).unwrap(),
                            d
                        );
                    }
                    (false, Err(HyperellipticError::NotMember(e))) => assert_eq!(e, d),
                    (m, other) => panic!("g={genus} d={d} member={m}: {other:?}"),
                }
            }
        }
    }
}

#[test]
fn non_members_admit_no_sheet_pattern() {
    // Completeness: outside the semigroup no sign pattern with the right
    // sheet counts has enough sign changes, and no factored form applies.
    for genus in 2..=5u32 {
        let family = semigroup::SemigroupFamily::hyperelliptic(genus).unwrap();
        for d in semigroup::vectors_up_to(family.component_count(), 10) {
            let member = semigroup::is_member(&family, &d).unwrap();
            let evidence = hyperelliptic::search_sheet_patterns(genus, &d).is_some()
                || hyperelliptic::factored_form(genus, &d).is_some();
            assert_eq!(member, evidence, "g={genus} d={d}");
        }
    }
}

#[test]
fn point_certificates_survive_translation_and_scaling() {
    for genus in 2..=5u32 {
        let curve = RealHyperellipticCurve::standard(genus).unwrap();
        for d in semigroup::vectors_up_to(curve.component_count(), 9) {
            let Ok(c) = hyperelliptic::construct_point_certificate(&curve, &d) else {
                continue;
            };
            for (alpha, beta) in [(frac(1, 1), frac(-7, 3)), (frac(5, 2), int(4)), (frac(1, 9), frac(1, 2))] {
                let moved = MembershipCertificate {
                    points: c
                        .points
                        .iter()
                        .map(|p| CertificatePoint { x: &alpha * &p.x + &beta, sheet: p.sheet })
                        .collect(),
                    ..c.clone()
                };
                assert!(hyperelliptic::verify_certificate(&curve, &moved).valid, "g={genus} d={d}");
            }
        }
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let curve = RealHyperellipticCurve::standard(3).unwrap();
    let c = hyperelliptic::construct_point_certificate(&curve, &dv(&[2, 2])).unwrap();
    assert_eq!(c.h, RationalVector(vec![int(1), int(-3), int(3), int(-1)]));

    let mut bad = c.clone();
    bad.h.0[0] = int(2);
    assert_eq!(
        hyperelliptic::verify_certificate(&curve, &bad).reason,
        Some(RejectReason::MomentResidual)
    );

    let mut bad = c.clone();
    bad.points[0].sheet = Sheet::Minus;
    assert_eq!(
        hyperelliptic::verify_certificate(&curve, &bad).reason,
        Some(RejectReason::SignSheetMismatch)
    );

    let mut bad = c.clone();
    bad.h.0.pop();
    assert_eq!(
        hyperelliptic::verify_certificate(&curve, &bad).reason,
        Some(RejectReason::LengthMismatch)
    );

    let mut bad = c.clone();
    bad.degrees = Some(dv(&[3, 1]));
    assert_eq!(
        hyperelliptic::verify_certificate(&curve, &bad).reason,
        Some(RejectReason::DegreeMismatch)
    );

    let mut bad = c;
    bad.genus = Some(5);
    assert_eq!(
        hyperelliptic::verify_certificate(&curve, &bad).reason,
        Some(RejectReason::GenusMismatch)
    );
}

#[test]
fn factored_morphisms_have_totally_real_fibers() {
    for genus in 2..=5u32 {
        let curve = RealHyperellipticCurve::standard(genus).unwrap();
        for m in 1..=4u32 {
            let f = hyperelliptic::build_factored_morphism(&curve, m).unwrap();
            assert!(hyperelliptic::verify_interlacing(&f));
            let values = f.sample_values();
            assert_eq!(values.len(), hyperelliptic::FIBER_SAMPLES);
            for t in values {
                let fiber = f.fiber_polynomial(&t);
                assert_eq!(exactpoly::real_root_count(&fiber).unwrap(), m as usize, "m={m} t={t}");
                assert!(exactpoly::is_squarefree(&fiber).unwrap());
            }
            let want = if genus % 2 == 1 { vec![m, m] } else { vec![2 * m] };
            assert_eq!(hyperelliptic::factored_degree_vector(&curve, &f).unwrap(), dv(&want));
        }
    }
}

#[test]
fn non_interlacing_morphism_is_rejected() {
    let f = FactoredMorphism {
        zeros: vec![int(0), int(1)],
        poles: vec![ProjPoint::Finite(int(2)), ProjPoint::Finite(int(3))],
        scale: int(1),
    };
    assert!(!hyperelliptic::verify_interlacing(&f));
    let curve = RealHyperellipticCurve::standard(2).unwrap();
    assert!(hyperelliptic::factored_degree_vector(&curve, &f).is_err());
}

#[test]
fn curve_validation() {
    let err = |c: &[i64]| RealHyperellipticCurve::new(RatPoly::from_ints(c)).unwrap_err();
    assert!(matches!(err(&[1, 0, 0, 0, 1]), HyperellipticError::GenusOutOfRange(4)));
    assert!(matches!(err(&[1, 0, 0, 0, 0, 0, 0, 1]), HyperellipticError::GenusOutOfRange(7)));
    // (x^2 - 1)(x^4 + 1) has real roots.
    assert!(matches!(err(&[-1, 0, 1, 0, -1, 0, 1]), HyperellipticError::WrongRealStructure));
    // (x^2 + 1)^3 is not squarefree.
    assert!(matches!(err(&[1, 0, 3, 0, 3, 0, 1]), HyperellipticError::SingularCurve));
    let ok = shifted_curve(4);
    assert_eq!((ok.genus(), ok.component_count()), (4, 1));
    assert!(!ok.polynomial().eval(&Rational::zero()).is_zero());
}

#[test]
fn certificate_json_round_trip() {
    let curve = RealHyperellipticCurve::standard(3).unwrap();
    let c = hyperelliptic::construct_certificate(&curve, &dv(&[2, 3])).unwrap();
    let text = serde_json::to_string(&c).unwrap();
    let back: Certificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
    let Certificate::Points(p) = back else { panic!("expected points") };
    assert!(hyperelliptic::verify_certificate(&curve, &p).valid);

    let bare: MembershipCertificate = serde_json::from_str(
        r#"{"points":[{"x":"0","sheet":"+"},{"x":"1","sheet":"-"},{"x":"2","sheet":"+"},{"x":"3","sheet":"-"}],
            "h":["1","-3","3","-1"]}"#,
    )
    .unwrap();
    assert!(hyperelliptic::verify_certificate(&curve, &bare).valid);
}
