use onecrit_core::classify::{bounded_grid, classify_factors, emit_polynomial, recognize, recognize_detailed, Evidence, Outcome};
use onecrit_core::rational::int;
use onecrit_core::upoly::UnivariatePoly;

#[test]
fn recognizer_round_trip_on_the_grid() {
    let start = std::time::Instant::now();
    for inst in bounded_grid() {
        emit_polynomial(&inst).unwrap();
        let got = recognize(&inst.factors().unwrap()).unwrap().unwrap_or_else(|| panic!("{inst} not recognized"));
        assert_eq!(got.tag, inst.tag, "{inst}");
        assert_eq!(got.class_key(), inst.class_key(), "{inst}");
    }
    eprintln!("round trip in {:?}", start.elapsed());
}

#[test]
fn perturbed_coefficients_are_recognized_by_the_table() {
    for inst in bounded_grid().into_iter().filter(|i| i.n >= 1 && i.tag.name() != "BothEmpty") {
        let mut moved = inst.clone().with_alpha((1..=inst.n as i64).map(|i| int(i + 10)).collect());
        if matches!(inst.tag.name(), "SigmaAnnuli" | "SigmaStar") && inst.s >= 2 {
            moved = moved.with_ell(UnivariatePoly::from_i64s(&[2, -1]));
        }
        let r = recognize_detailed(&moved.factors().unwrap()).unwrap().unwrap();
        assert_eq!(r.instance.class_key(), inst.class_key(), "{moved}");
        assert_eq!(r.evidence, Evidence::TheoremTable, "{moved}");
    }
}

#[test]
fn classification_claims_carry_evidence() {
    for inst in bounded_grid().into_iter().filter(|i| i.n <= 2 && i.p <= 2 && i.q <= 3 && i.s <= 2) {
        let report = classify_factors(&inst.to_string(), &inst.factors().unwrap()).unwrap();
        match &report.outcome {
            Outcome::Matched(r) => {
                assert_eq!(r.instance.class_key(), inst.class_key());
                assert!(report.b_infinity.is_some());
                assert_eq!(report.b_infinity.unwrap().0, inst.tag.irregular_at_infinity());
            }
            Outcome::Unknown(reason) => panic!("{inst}: {reason}"),
        }
        assert_eq!(report.graph_check, Some(Ok(true)), "{inst}");
    }
}
