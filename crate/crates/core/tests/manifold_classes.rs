use lmc_core::fpring::{binom_mod_p, GradedPoly, Prime, RingSpec};
use lmc_core::manifolds::{
    dual_total_class, parse_manifold_spec, total_chern_cp, total_sw_rp, ClassFamily, ManifoldKind,
    ManifoldRef,
};

#[test]
fn rp_tangent_class_is_trivial_exactly_when_m_plus_one_is_a_power_of_two() {
    for m in 1..=64u32 {
        let w = total_sw_rp(m).unwrap();
        assert_eq!(w.is_trivial(), (m + 1).is_power_of_two(), "RP^{m}");
    }
}

#[test]
fn rp_total_class_is_binomial() {
    for m in 1..=40u32 {
        let w = total_sw_rp(m).unwrap();
        for i in 0..=m {
            let expected = binom_mod_p(m as u64 + 1, i as u64, Prime::TWO).value();
            assert_eq!(w.total().coeff(i).value(), expected, "w_{i}(RP^{m})");
        }
    }
}

#[test]
fn dual_of_rp_below_a_power_of_two() {
    // m = 2^l - 2 - a, so (1+t)^(m+1) (1+t)^(a+1) = (1+t)^(2^l) = 1 below degree 2^l
    for ell in 2..=7u32 {
        let top = (1u32 << ell) - 2;
        for a in 0..top {
            let m = top - a;
            let dual = dual_total_class(&total_sw_rp(m).unwrap()).unwrap();
            let spec = RingSpec::new(2, 1, m).unwrap();
            let expected = GradedPoly::parse(spec, "1 + t").unwrap().pow(a as u64 + 1);
            assert_eq!(dual.total(), &expected, "l = {ell}, a = {a}");
        }
    }
}

#[test]
fn cp_chern_class_and_dual() {
    for p in [3u64, 5, 7] {
        for m in 1..=12u32 {
            let c = total_chern_cp(m, p).unwrap();
            assert_eq!(c.spec().generator_degree(), 2);
            let dual = dual_total_class(&c).unwrap();
            let spec = *c.spec();
            // c̄ = (1+x)^-(m+1): coefficient of x^i is (-1)^i C(m+i, i)
            for i in 0..=m {
                let b = binom_mod_p((m + i) as u64, i as u64, Prime::new(p).unwrap()).value();
                let expected = if i % 2 == 0 || b == 0 { b } else { p - b };
                assert_eq!(
                    dual.total().coeff(i).value(),
                    expected,
                    "p = {p}, m = {m}, i = {i}"
                );
            }
            assert!(c.product(&dual).unwrap().total().is_one());
            assert_eq!(
                dual.component(1),
                GradedPoly::monomial(spec, 1, dual.total().coeff(1).value()).unwrap()
            );
        }
    }
}

#[test]
fn shorthand_round_trip() {
    for text in [
        "rp:13",
        "cp:6",
        "sphere:14",
        "euclidean:7",
        "parallelizable:3",
    ] {
        let kind: ManifoldKind = text.parse().unwrap();
        assert_eq!(kind.to_string(), text);
        assert_eq!(
            parse_manifold_spec(text).unwrap(),
            ManifoldRef::Builtin(kind)
        );
    }
    for bad in ["rp:0", "torus:2", "cp:-1", "rp:x", ""] {
        assert!(bad.parse::<ManifoldKind>().is_err(), "{bad}");
    }
}

#[test]
fn builtin_instances() {
    let cp = ManifoldKind::ComplexProjective(4)
        .instantiate(ClassFamily::StiefelWhitney, Prime::TWO)
        .unwrap();
    assert_eq!(cp.real_dimension, 8);
    assert_eq!(cp.total_class.total().render(), "1 + x + x^4");
    let sphere = ManifoldKind::Sphere(6)
        .instantiate(ClassFamily::Chern, Prime::new(3).unwrap())
        .unwrap();
    assert!(sphere.total_class.is_trivial());
    assert!(ManifoldKind::RealProjective(3)
        .instantiate(ClassFamily::Chern, Prime::new(3).unwrap())
        .is_err());
}
