use std::time::Instant;

use jones::KnotSpec;
use qtorus::*;

#[test]
fn standard_suite_has_zero_residuals() {
    let start = Instant::now();
    for rel in standard_suite() {
        let (lo, hi) = rel.default_range();
        let r = verify_recurrence(rel.as_ref(), lo, hi);
        assert!(r.all_zero, "{} failed at {:?}: {:?}", r.relation, r.first_failure, r.witness);
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn aliases_resolve_to_the_same_relation() {
    for (alias, name) in [
        ("prop4.2:3,4", "torus-two-step:3,4"),
        ("prop4.3:5", "torus-one-step:5"),
        ("prop4.4:x", "habiro-bracket:x"),
        ("PROP4.5", "fig8-inhomogeneous"),
        ("prop4.6", "fig8-system"),
    ] {
        assert_eq!(relation_from_id(alias).unwrap().id(), name);
        assert_eq!(relation_from_id(name).unwrap().id(), name);
    }
    assert_eq!(relation_from_id("prop4.2").unwrap().id(), "torus-two-step:2,3");
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(matches!(relation_from_id("prop4.9"), Err(QTorusError::UnknownRelation(_))));
    assert!(relation_from_id("torus-two-step:2,4").is_err());
    assert!(relation_from_id("torus-one-step:4").is_err());
    assert!(relation_from_id("habiro-bracket:x^2").is_err());
    assert!(relation_from_id("torus-two-step:a,b").is_err());
}

#[test]
fn wrong_relation_reports_a_witness() {
    // the (2,3) relation applied to the (2,5) sequence through a mislabelled system
    let mut sys = TorusTwoStep { a: 2, b: 3 }.system();
    sys.sequences[0] = PolySequence::jones(KnotSpec::torus(2, 5).unwrap());
    assert!(sys.residuals(4).iter().any(|r| !r.is_zero()));

    struct Broken;
    impl Relation for Broken {
        fn id(&self) -> String {
            "broken".into()
        }
        fn anchor(&self) -> &'static str {
            "none"
        }
        fn default_range(&self) -> (i64, i64) {
            (1, 5)
        }
        fn system(&self) -> LinearSystem {
            let mut s = Fig8Inhomogeneous.system();
            s.rows[0].affine = QTorusOp::m();
            s
        }
    }
    let r = verify_recurrence(&Broken, 1, 5);
    assert!(!r.all_zero);
    assert_eq!(r.first_failure, Some(1));
    assert!(r.witness.is_some());
}

#[test]
fn fig8_inhomogeneous_output_is_r() {
    let j = PolySequence::jones(KnotSpec::FigureEight);
    let qj = apply(&Fig8Inhomogeneous::operator(), &j);
    let one = laurent::quantum_bracket(1);
    for n in 1..=40 {
        let r = Fig8Inhomogeneous::affine().eval_m(n).inflate(2);
        assert_eq!(&qj.get(n) * &one, r, "n = {n}");
    }
}

#[test]
fn bracket_of_x_is_periodic_at_roots() {
    let i = PolySequence::bracket_of(HabiroPoly::x());
    for k in [3u32, 4, 5, 7] {
        for n in 1..=8 {
            assert!(i.periodic_at(n, k, 1e-9), "n = {n}, k = {k}");
        }
    }
    let j = PolySequence::jones(KnotSpec::trefoil());
    for n in 1..=6 {
        assert!(j.periodic_at(n, 5, 1e-9));
    }
}

#[test]
fn report_serializes() {
    let r = verify_recurrence(relation_from_id("prop4.5").unwrap().as_ref(), 1, 5);
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["all_zero"], true);
    assert!(v["first_failure"].is_null());
}
