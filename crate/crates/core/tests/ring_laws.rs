use lmc_core::fpring::{BigradedPoly, GradedPoly, Prime, RingElement, RingSpec};
use lmc_core::manifolds::{dual_total_class, ClassFamily, TotalClass};
use proptest::prelude::*;

fn spec_strategy() -> impl Strategy<Value = RingSpec> {
    (
        prop::sample::select(vec![2u64, 3, 5, 7]),
        1u32..=2,
        0u32..=30,
    )
        .prop_map(|(p, gd, t)| RingSpec::new(p, gd, t).unwrap())
}

fn element(spec: RingSpec) -> impl Strategy<Value = GradedPoly> {
    let p = spec.prime().get();
    prop::collection::vec(0..p, spec.truncation() as usize + 1)
        .prop_map(move |dense| GradedPoly::from_dense(spec, &dense))
}

fn unit(spec: RingSpec) -> impl Strategy<Value = GradedPoly> {
    let p = spec.prime().get();
    (1..p, element(spec)).prop_map(move |(c0, rest)| {
        let mut dense = rest.to_dense();
        dense.resize(spec.truncation() as usize + 1, 0);
        dense[0] = c0;
        GradedPoly::from_dense(spec, &dense)
    })
}

fn triple() -> impl Strategy<Value = (GradedPoly, GradedPoly, GradedPoly)> {
    spec_strategy().prop_flat_map(|s| (element(s), element(s), element(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn commutative_ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.plus(&a.zero_like()), a.clone());
        prop_assert_eq!(a.times(&a.one_like()), a.clone());
        prop_assert!(a.plus(&a.negated()).is_zero());
        prop_assert_eq!(a.minus(&b), a.plus(&b.negated()));
    }

    #[test]
    fn units_invert(u in spec_strategy().prop_flat_map(unit)) {
        let inv = u.inverse().unwrap();
        prop_assert!(u.times(&inv).is_one());
        prop_assert_eq!(inv.inverse().unwrap(), u);
    }

    #[test]
    fn nilpotents_do_not_invert(a in spec_strategy().prop_flat_map(element)) {
        let shifted = a.minus(&GradedPoly::constant(*a.spec(), a.coeff(0).value()));
        prop_assert!(shifted.inverse().is_err());
    }

    #[test]
    fn powers_add_exponents(a in spec_strategy().prop_flat_map(element), i in 0u64..12, j in 0u64..12) {
        prop_assert_eq!(a.pow(i).times(&a.pow(j)), a.pow(i + j));
        let naive = (0..i).fold(a.one_like(), |acc, _| acc.times(&a));
        prop_assert_eq!(a.pow(i), naive);
    }

    #[test]
    fn render_parse_round_trip(a in spec_strategy().prop_flat_map(element)) {
        let back = GradedPoly::parse(*a.spec(), &a.render()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn bigraded_with_trivial_right_factor_round_trips((a, b, _) in triple()) {
        let right = RingSpec::new(a.spec().prime().get(), 1, 0).unwrap();
        let ta = BigradedPoly::from_left(&a, right).unwrap();
        let tb = BigradedPoly::from_left(&b, right).unwrap();
        prop_assert_eq!(ta.to_left().unwrap(), a.clone());
        prop_assert_eq!(ta.times(&tb).to_left().unwrap(), a.times(&b));
        prop_assert_eq!(ta.plus(&tb).to_left().unwrap(), a.plus(&b));
    }

    #[test]
    fn dual_classes(t in 0u32..=20, p in prop::sample::select(vec![3u64, 5, 7]), seed in prop::collection::vec(0u64..7, 21)) {
        // a random total class in degree-2 indexing: 1 + c_1 x + c_2 x^2 + ...
        let spec = RingSpec::new(p, 2, t).unwrap();
        let mut dense: Vec<u64> = seed.into_iter().take(t as usize + 1).map(|c| c % p).collect();
        dense[0] = 1;
        let c = TotalClass::new(GradedPoly::from_dense(spec, &dense), ClassFamily::Chern).unwrap();
        let dual = dual_total_class(&c).unwrap();
        prop_assert!(c.product(&dual).unwrap().is_trivial());
        prop_assert_eq!(dual_total_class(&dual).unwrap(), c);
    }
}

#[test]
fn sw_dual_over_f2() {
    for t in 0..=40u32 {
        let spec = RingSpec::new(2, 1, t).unwrap();
        for bits in [0b1u64, 0b11, 0b101, 0b1011, 0b110111] {
            let dense: Vec<u64> = (0..=t).map(|e| (bits >> e) & 1).collect();
            let w = TotalClass::new(
                GradedPoly::from_dense(spec, &dense),
                ClassFamily::StiefelWhitney,
            )
            .unwrap();
            let dual = dual_total_class(&w).unwrap();
            assert!(w.product(&dual).unwrap().is_trivial());
        }
    }
}

#[test]
fn frobenius_in_characteristic_p() {
    for p in [2u64, 3, 5, 7] {
        let spec = RingSpec::new(p, 1, 30).unwrap();
        let one_plus_t = GradedPoly::parse(spec, "1 + t").unwrap();
        let expected = GradedPoly::from_terms(spec, [(0, 1), (p as u32, 1)]).unwrap();
        assert_eq!(one_plus_t.pow(p), expected, "p = {p}");
    }
    assert!(Prime::new(4).is_err());
}
