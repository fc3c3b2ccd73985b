use numdup::classify::{
    classify_max_ideal_dup, dup_type_formula, is_ag_conditions, is_ag_ring_route, is_ci_dup,
    is_ci_semigroup, is_gorenstein_dup,
};
use numdup::construct::{ag_family, ideal_from_overring, intermediate_semigroups};
use numdup::duplication::{DuplicationSpec, TranslatePolicy};
use numdup::oracle::{sweep, verify_duplication, SweepParams, Verdict};
use numdup::{
    duplicate, enumerate_by_genus, full_report, Error, NumericalSemigroup, RelativeIdeal,
};

fn sg(text: &str) -> NumericalSemigroup {
    NumericalSemigroup::parse(text).unwrap()
}

#[test]
fn type_trichotomy_on_four_five_eleven() {
    let s = sg("4,5,11");
    for (ideal, ty, gor) in [("4,5", 1, true), ("5,8", 3, false), ("4,5,6", 5, false)] {
        let e = RelativeIdeal::parse(&s, ideal).unwrap();
        let r = full_report(&e).unwrap();
        assert_eq!((r.type_formula, r.gorenstein), (ty, gor), "{ideal}");
        assert!(r.almost_gorenstein);
        assert_eq!(r.type_ag, Some(ty));
        let spec = DuplicationSpec::new(&e, None, TranslatePolicy::Auto).unwrap();
        let report = verify_duplication(&spec).unwrap();
        assert_eq!(report.verdict, Verdict::Agree, "{ideal}");
    }
}

#[test]
fn maximal_ideal_proposition() {
    assert_eq!(
        classify_max_ideal_dup(&sg("3,5,7")).unwrap(),
        (true, Some(5))
    );
    assert_eq!(
        classify_max_ideal_dup(&sg("4,5,11")).unwrap(),
        (false, None)
    );
    assert_eq!(classify_max_ideal_dup(&sg("2,3")).unwrap(), (true, Some(3)));
    assert_eq!(
        classify_max_ideal_dup(&NumericalSemigroup::naturals()),
        Err(Error::ImproperSemigroup)
    );
    for s in enumerate_by_genus(7).unwrap().skip(1) {
        let (ag, ty) = classify_max_ideal_dup(&s).unwrap();
        assert_eq!(ag, s.is_almost_symmetric());
        if ag {
            assert_eq!(ty, Some(2 * s.cm_type() + 1));
            assert_eq!(
                dup_type_formula(&RelativeIdeal::maximal(&s)),
                2 * s.cm_type() + 1
            );
        }
    }
}

#[test]
fn family_entries_classify_as_promised() {
    for s in enumerate_by_genus(7).unwrap() {
        for entry in ag_family(&s) {
            let e = &entry.ideal;
            assert!(e.is_integral());
            assert!(is_ag_conditions(e), "{e} over {s:?}");
            assert_eq!(dup_type_formula(e), entry.expected_type);
            assert_eq!(is_ag_ring_route(e).1.as_ref(), Some(&entry.overring));
        }
    }
}

#[test]
fn symmetric_semigroups_have_two_overrings() {
    for s in enumerate_by_genus(7)
        .unwrap()
        .filter(|s| s.is_symmetric() && !s.is_naturals())
    {
        let mids = intermediate_semigroups(&s);
        assert_eq!(mids, vec![s.clone(), s.m_minus_m()]);
        let family = ag_family(&s);
        assert!(family[0].ideal.is_translate_of(&RelativeIdeal::unit(&s)));
        assert!(family[1].ideal.is_translate_of(&RelativeIdeal::maximal(&s)));
    }
}

#[test]
fn ci_chain_and_ci_of_duplication() {
    for s in enumerate_by_genus(6).unwrap() {
        for e in numdup::enumerate_normalized_ideals(&s) {
            if is_ci_dup(&e) {
                assert!(is_gorenstein_dup(&e));
            }
            if is_gorenstein_dup(&e) {
                assert!(is_ag_conditions(&e));
            }
            let spec = DuplicationSpec::new(&e, None, TranslatePolicy::Auto).unwrap();
            assert_eq!(is_ci_dup(&e), is_ci_semigroup(&duplicate(&spec).unwrap()));
        }
    }
}

#[test]
fn ci_semigroups() {
    assert!(is_ci_semigroup(&sg("2,3")));
    assert!(is_ci_semigroup(&sg("4,6,7")));
    assert!(is_ci_semigroup(&sg("8,10,15")));
    assert!(!is_ci_semigroup(&sg("5,6,7,8")));
    assert!(!is_ci_semigroup(&sg("4,5,11")));
    assert!(is_ci_semigroup(&NumericalSemigroup::naturals()));
}

#[test]
fn overring_errors() {
    let s = sg("4,5,11");
    assert!(matches!(
        ideal_from_overring(&s, &sg("2,3"), None),
        Err(Error::NotIntermediate(_))
    ));
    assert_eq!(
        ideal_from_overring(&s, &sg("4,5,6,7"), Some(1)),
        Err(Error::NotIntegralShift(1))
    );
}

#[test]
fn small_sweep_agrees_and_is_deterministic() {
    let params = SweepParams {
        genus_max: 5,
        b_count: 2,
        ideal_limit: None,
    };
    let a = sweep(params, Some(1)).unwrap();
    let b = sweep(params, Some(4)).unwrap();
    assert!(a.mismatches.is_empty());
    assert_eq!(a.semigroups, 1 + 1 + 2 + 4 + 7 + 12);
    assert_eq!(
        (a.ideals, a.duplications, a.checks),
        (b.ideals, b.duplications, b.checks)
    );
    assert_eq!(a.type_histogram, b.type_histogram);
    assert_eq!(
        sweep(
            SweepParams {
                genus_max: 11,
                ..params
            },
            None
        )
        .unwrap_err(),
        Error::BudgetExceeded {
            what: "sweep genus",
            limit: 10,
            requested: 11
        }
    );
}
