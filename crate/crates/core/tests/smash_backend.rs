use hact_core::bialgebroid::*;
use hact_core::ncalg::*;
use hact_core::smash_backend::*;
use proptest::prelude::*;
use std::sync::OnceLock;

fn desk() -> &'static SmashAlgebroid {
    static X: OnceLock<SmashAlgebroid> = OnceLock::new();
    X.get_or_init(|| SmashAlgebroid::load(&mut Library::with_dir(None), "smash_desk").unwrap())
}

fn surj() -> &'static SmashSurjection {
    static X: OnceLock<SmashSurjection> = OnceLock::new();
    X.get_or_init(|| SmashSurjection::load(&mut Library::with_dir(None), "smash_slq2").unwrap())
}

fn failures(rep: &hact_core::report::Report) -> Vec<String> {
    rep.failures().map(|e| format!("{} {} {:?}", e.id, e.element, e.witness)).collect()
}

#[test]
fn desk_is_yetter_drinfeld() {
    let rep = yd_check(&desk().yd);
    assert!(rep.passed(), "{:?}", failures(&rep));
    assert!(rep.with_id("braided_commutative").count() >= 1);
}

#[test]
fn trivial_algebra_is_yetter_drinfeld() {
    let mut lib = Library::with_dir(None);
    lib.add_text("[algebra point]\ngenerators = e\nrelations = e*e = e\n[bialgebroid pt]\nkind = smash\nbase = point\nhopf = o_u1\n", "inline")
        .unwrap();
    let alg = SmashAlgebroid::load(&mut lib, "pt").unwrap();
    assert!(yd_check(&alg.yd).passed());
}

#[test]
fn corrupted_desk_fails_braided_commutativity() {
    let mut lib = Library::with_dir(None);
    lib.add_text("[algebra free1]\ngenerators = x\n", "inline").unwrap();
    let free = lib.algebra("free1").unwrap();
    let yd = desk().yd.with_algebra(free);
    let rep = yd_check(&yd);
    let bad: Vec<_> = rep.failures().map(|e| (e.id.as_str(), e.element.as_str())).collect();
    assert!(bad.contains(&("braided_commutative", "x, x")), "{bad:?}");
    // q x² ≠ x²
    let w = rep.failures().find(|e| e.element == "x, x").unwrap().witness.clone().unwrap();
    assert!(w.contains("x^2"), "{w}");
}

#[test]
fn desk_structure_maps() {
    let d = desk();
    let x = NCPoly::letter(0);
    assert_eq!(d.target(&x), d.parse("x*t"));
    assert_eq!(d.source(&NCPoly::one()), Tensor::unit(1));
    assert_eq!(d.target(&NCPoly::one()), Tensor::unit(1));
    // (1#t)(x#1) = q x#t
    assert_eq!(d.mul(&d.parse("t"), &d.parse("x")), d.parse("q*x*t"));
    assert_eq!(d.delta(&d.parse("x*t")), d.parse2("x*t@t"));
    assert_eq!(d.counit(&d.parse("x*t")), x);
    // (x#t)₊⊗(x#t)₋ = (x#t)⊗(1#t⁻¹t)
    assert_eq!(d.translation(&d.parse("x*t")), d.parse2("x*t@1"));
    assert_eq!(d.translation(&d.parse("t")), d.parse2("t@ti"));
    assert_eq!(d.translation(&Tensor::unit(1)), Tensor::unit(2));
}

#[test]
fn desk_tch2_tch3_chains() {
    let d = desk();
    for h in ["x*t", "x*ti", "t^2", "x"] {
        let h = d.parse(h);
        let mut rep = hact_core::report::Report::new("");
        tch_single(d, "h", &h, &mut rep);
        assert!(rep.passed(), "{:?}", failures(&rep));
    }
}

#[test]
fn desk_structure_tch_galois() {
    let d = desk();
    let rep = verify_structure(d);
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = verify_tch(d, 2, 8, 5);
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = verify_counit(d, 2, 8, 1);
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = check_galois_roundtrips(d, 3);
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = verify_regular_comodule(d);
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn desk_linearizer_balanced() {
    let d = desk();
    let x = NCPoly::letter(0);
    for (_, h) in generator_products(d) {
        for (_, y) in d.generators() {
            let l = otimes(&[&d.mul(&h, &d.source(&x)), &y]);
            let r = otimes(&[&h, &d.mul(&d.source(&x), &y)]);
            assert!(compare(d, &l, &r, &Pattern::blk2()).is_none());
            let l = otimes(&[&d.mul(&d.target(&x), &h), &y]);
            assert!(compare(d, &l, &r, &Pattern::tri2()).is_none());
        }
    }
}

#[test]
fn slq2_pair_is_consistent() {
    let s = surj();
    for alg in [&s.domain, &s.codomain] {
        let rep = yd_check(&alg.yd);
        assert!(rep.passed(), "{:?}", failures(&rep));
        let rep = verify_structure(alg);
        assert!(rep.passed(), "{:?}", failures(&rep));
    }
    let rep = verify_tch(&s.domain, 1, 4, 2);
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = s.verify();
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn slq2_pi_hash_values() {
    let s = surj();
    let x_a = s.domain.parse("x*a");
    assert_eq!(s.pi_hash(&x_a), s.codomain.parse("x*t"));
    assert_eq!(s.pi_hash(&Tensor::unit(1)), Tensor::unit(1));
    assert_eq!(s.pi_hash(&s.domain.parse("x*b")), Tensor::zero(1));
    let l = s.codomain.delta(&s.pi_hash(&x_a));
    let r = s.pi_hash(&s.domain.delta(&x_a));
    assert!(compare(&s.codomain, &l, &r, &Pattern::tri2()).is_none());
    // a acts on x by -1: (1#a)(x#1) = -x#a
    assert_eq!(s.domain.mul(&s.domain.parse("a"), &s.domain.parse("x")), s.domain.parse("-x*a"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn desk_smash_associative(i in 0usize..200, j in 0usize..200, k in 0usize..200) {
        let d = desk();
        let b = d.basis(2);
        let (x, y, z) = (&b[i % b.len()], &b[j % b.len()], &b[k % b.len()]);
        let l = d.mul(&d.mul(x, y), z);
        let r = d.mul(x, &d.mul(y, z));
        prop_assert_eq!(l, r);
    }
}
