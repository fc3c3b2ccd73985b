mod support;

use numdup::classify::is_ci_semigroup;
use numdup::duplication::{valid_b_values, DuplicationSpec, TranslatePolicy};
use numdup::oracle::{direct_almost_symmetric, direct_symmetric, direct_type};
use numdup::{
    duplicate, enumerate_by_genus, enumerate_normalized_ideals, full_report, DuplicationReport,
    Error, NumericalSemigroup, RelativeIdeal,
};
use proptest::prelude::*;
use support::{duplication_invariants, Tally};

fn sg(text: &str) -> NumericalSemigroup {
    NumericalSemigroup::parse(text).unwrap()
}

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..25, 1..5)
        .prop_filter_map("gcd 1", |g| NumericalSemigroup::from_generators(&g).ok())
}

fn pair() -> impl Strategy<Value = (RelativeIdeal, usize)> {
    semigroup().prop_flat_map(|s| {
        (prop::collection::vec(-5i64..20, 1..4), 0usize..3)
            .prop_map(move |(g, bi)| (RelativeIdeal::from_generators(&s, &g).unwrap(), bi))
    })
}

/// Everything in a report that is not a function of `b` by construction.
fn b_free(r: &DuplicationReport) -> impl PartialEq + std::fmt::Debug {
    (
        (
            r.semigroup.clone(),
            r.ideal.clone(),
            r.translate,
            r.shift,
            r.cm_type,
        ),
        (r.gorenstein, r.almost_gorenstein, r.complete_intersection),
        (
            r.type_routes.clone(),
            r.z,
            r.ring_witness.clone(),
            r.bounds_ok,
        ),
    )
}

fn direct_view(t: &NumericalSemigroup) -> (usize, bool, bool, bool) {
    (
        direct_type(t),
        direct_symmetric(t),
        direct_almost_symmetric(t),
        is_ci_semigroup(t),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_duplications((e, bi) in pair()) {
        let b = valid_b_values(e.ambient(), 3)[bi];
        let mut t = Tally::default();
        duplication_invariants(&e, b, &mut t);
        prop_assert!(t.ok(), "{:#?}", t.failures);
    }

    #[test]
    fn translation_stability((e, _) in pair(), c in -6i64..6) {
        let moved = e.translate(c);
        let a = full_report(&e).unwrap();
        let b = full_report(&moved).unwrap();
        prop_assert_eq!(b.z, a.z - c);
        prop_assert_eq!(
            numdup::ClassificationReport { z: 0, ..a },
            numdup::ClassificationReport { z: 0, ..b }
        );
        let spec_a = DuplicationSpec::new(&e, None, TranslatePolicy::Auto).unwrap();
        let spec_b = DuplicationSpec::new(&moved, None, TranslatePolicy::Auto).unwrap();
        prop_assert_eq!(
            direct_view(&duplicate(&spec_a).unwrap()),
            direct_view(&duplicate(&spec_b).unwrap())
        );
    }

    #[test]
    fn duplication_over_naturals_is_symmetric(r in 0i64..40, k in 0i64..20) {
        let n = NumericalSemigroup::naturals();
        let e = RelativeIdeal::principal(&n, r);
        let b = 2 * k + 1;
        let spec = DuplicationSpec::new(&e, Some(b), TranslatePolicy::None).unwrap();
        let t = duplicate(&spec).unwrap();
        prop_assert!(direct_symmetric(&t));
        prop_assert_eq!(direct_type(&t), 1);
        prop_assert!(full_report(&e).unwrap().gorenstein);
    }
}

#[test]
fn b_independence_to_genus_five() {
    for s in enumerate_by_genus(5).unwrap() {
        let bs = valid_b_values(&s, 3);
        for e in enumerate_normalized_ideals(&s) {
            let reports: Vec<(DuplicationReport, NumericalSemigroup)> = bs
                .iter()
                .map(|&b| {
                    let spec = DuplicationSpec::new(&e, Some(b), TranslatePolicy::Auto).unwrap();
                    (
                        DuplicationReport::build(&spec).unwrap(),
                        duplicate(&spec).unwrap(),
                    )
                })
                .collect();
            let (first, t0) = &reports[0];
            for (r, t) in &reports[1..] {
                assert_eq!(b_free(r), b_free(first), "{e} over {s:?}");
                assert_eq!(direct_view(t), direct_view(t0), "{e} over {s:?}");
            }
        }
    }
}

#[test]
fn worked_duplications() {
    let s = sg("4,5,11");
    let t = |ideal: &str, b: i64| {
        let e = RelativeIdeal::parse(&s, ideal).unwrap();
        let spec = DuplicationSpec::new(&e, Some(b), TranslatePolicy::Auto).unwrap();
        duplicate(&spec).unwrap().min_gens().to_vec()
    };
    assert_eq!(t("5,8", 5), vec![8, 10, 15, 21, 22]);
    assert_eq!(t("8,11", 5), vec![8, 10, 21, 22, 27]);
    assert_ne!(t("5,8", 5), t("8,11", 5));
}

#[test]
fn spec_validation() {
    let s = sg("4,5,11");
    let e = RelativeIdeal::parse(&s, "5,8").unwrap();
    assert_eq!(
        DuplicationSpec::new(&e, Some(4), TranslatePolicy::Auto).unwrap_err(),
        Error::EvenB(4)
    );
    assert_eq!(
        DuplicationSpec::new(&e, Some(7), TranslatePolicy::Auto).unwrap_err(),
        Error::BNotInS(7)
    );
    let low = RelativeIdeal::parse(&s, "1,4").unwrap();
    assert_eq!(
        DuplicationSpec::new(&low, Some(5), TranslatePolicy::None).unwrap_err(),
        Error::IdealNotIntegral
    );
    let spec = DuplicationSpec::new(&low, None, TranslatePolicy::Auto).unwrap();
    assert_eq!(spec.ideal().gens(), &[5, 8]);
    assert_eq!((spec.b(), spec.shift()), (5, 4));
    assert_eq!(valid_b_values(&s, 3), vec![5, 9, 11]);
}
