use hact_core::bialgebroid::*;
use hact_core::calculus::*;
use hact_core::es_backend::EsAlgebroid;
use hact_core::homogeneous::Homogeneous;
use hact_core::ncalg::*;
use hact_core::smash_backend::{SmashAlgebroid, SmashSurjection};
use std::sync::OnceLock;

fn es() -> &'static EsAlgebroid {
    static X: OnceLock<EsAlgebroid> = OnceLock::new();
    X.get_or_init(|| EsAlgebroid::load(&mut Library::with_dir(None), "es_fibration").unwrap())
}

fn desk() -> &'static SmashAlgebroid {
    static X: OnceLock<SmashAlgebroid> = OnceLock::new();
    X.get_or_init(|| SmashAlgebroid::load(&mut Library::with_dir(None), "smash_desk").unwrap())
}

fn hs() -> &'static Homogeneous {
    static X: OnceLock<Homogeneous> = OnceLock::new();
    X.get_or_init(|| Homogeneous::new(SmashSurjection::load(&mut Library::with_dir(None), "smash_slq2").unwrap()))
}

fn failures(rep: &hact_core::report::Report) -> Vec<String> {
    rep.failures().take(5).map(|e| format!("{} {} {:?}", e.id, e.element, e.witness)).collect()
}

fn golden() -> Vec<(String, String, String)> {
    include_str!("fixtures/es_calculus.golden")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (lhs, rhs) = l.split_once(" = ").unwrap();
            let (kind, key) = lhs.split_once(' ').unwrap();
            (kind.to_string(), key.to_string(), rhs.to_string())
        })
        .collect()
}

/// x(t − 1) in A#H
fn desk_proper() -> Vec<Tensor> {
    vec![desk().parse("x*t - x")]
}

#[test]
fn universal_calculus_of_dual_numbers() {
    let b = desk().base();
    let u = universal_calculus(b, 2);
    assert_eq!(u.dim(), 2);
    let x = parse_poly("x", b).unwrap();
    assert!(u.contains(&u.d(&x)));
    assert!(u.contains(&parse_tensor("x@x", &[b, b]).unwrap()));
    assert!(u.d(&NCPoly::one()).is_zero());
    assert!(!u.contains(&parse_tensor("1@x", &[b, b]).unwrap()));
}

#[test]
fn es_differentials_and_maurer_cartan_match_golden() {
    let e = es();
    let w = Woronowicz::new(e, &[], 1).unwrap();
    let rows = golden();
    assert_eq!(rows.iter().filter(|r| r.0 == "d").count(), 8);
    assert_eq!(rows.iter().filter(|r| r.0 == "mc").count(), 4);
    for (kind, key, value) in rows {
        let h = e.gen(&key);
        let got = match kind.as_str() {
            "d" => w.d(&h),
            _ => w.maurer_cartan(&pi_eps(e, &h)).unwrap(),
        };
        assert!(w.differs(&got, &e.eval(&value)).is_none(), "{kind} {key}");
    }
    assert!(w.d(&e.one()).is_zero());
}

#[test]
fn mc_of_gamma_pairs_gammat_beta_with_alphat() {
    let e = es();
    let w = Woronowicz::new(e, &[], 1).unwrap();
    let got = w.maurer_cartan(&pi_eps(e, &e.gen("gamma"))).unwrap();
    let with_gammat = e.eval(
        "q^2*gamma*beta@gamma - q^2*gamma*beta@1 + alphat*betat@gamma - alphat*betat@1 + q^2*gammat*beta@gammat + alpha*betat@alphat",
    );
    assert!(w.differs(&got, &with_gammat).is_some());
    let dg = e.eval("gamma@gamma - gamma@1 + gammat@gammat");
    assert!(w.differs(&w.d(&e.gen("gamma")), &dg).is_some());
}

#[test]
fn mc_of_delta_uses_the_translation_not_the_coproduct() {
    let e = es();
    let w = Woronowicz::new(e, &[], 1).unwrap();
    let h = e.gen("delta");
    let via_delta = expand(e, &e.delta(&h), 4, |b| w.right(&w.d(&b[0]), &b[1]));
    let literal = e.eval(
        "delta*delta@delta - delta*delta@1 + q^4*betat*deltat@beta - q^2*betat*deltat@1 + q^2*betat*delta@deltat + q^2*delta*deltat@betat",
    );
    assert!(w.differs(&via_delta, &literal).is_none());
    let mc = w.maurer_cartan(&pi_eps(e, &h)).unwrap();
    assert!(w.differs(&mc, &literal).is_some());
}

#[test]
fn maurer_cartan_rejects_non_plus() {
    let e = es();
    let w = Woronowicz::new(e, &[], 1).unwrap();
    assert!(matches!(w.maurer_cartan(&e.gen("alpha")), Err(CalculusError::NotInPlus(_))));
    assert!(matches!(Woronowicz::new(e, &[e.gen("beta")], 1), Err(CalculusError::NotInPlus(_))));
}

#[test]
fn es_maurer_cartan_and_xi() {
    let e = es();
    let w = Woronowicz::new(e, &[], 1).unwrap();
    let rep = w.check_maurer_cartan(&e.generators());
    assert!(rep.passed(), "{:?}", failures(&rep));
    assert_eq!(rep.with_id("xi.intertwines").count(), 8);
    let rep = w.check_covariance(&e.generators());
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn es_recovery() {
    let e = es();
    let w = Woronowicz::new(e, &[], 1).unwrap();
    let gs: Vec<Tensor> = ["alpha", "betat"].iter().map(|k| pi_eps(e, &e.gen(k))).collect();
    let hs = vec![e.one(), e.gen("gamma")];
    let rep = w.check_recovery(&hs, &gs);
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn es_plus_is_coinvariant_forms() {
    let rep = es_hplus_is_coinvariant_forms(es(), 2);
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn es_correspondence_extremes() {
    let e = es();
    let rep = es_correspondence(e, &[], 1);
    assert!(rep.passed());
    let plus = hplus(e, 1);
    let rep = es_correspondence(e, &plus, 1);
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn desk_classification_roundtrips() {
    let d = desk();
    let top = hplus(d, 3);
    for gens in [vec![], top, desk_proper()] {
        let rep = classify_roundtrip(d, &gens, 3).unwrap();
        assert!(rep.passed(), "{:?} {:?}", failures(&rep), rep.notes);
    }
}

#[test]
fn desk_proper_ideal_is_x_times_augmentation() {
    let d = desk();
    let w = Woronowicz::new(d, &desk_proper(), 3).unwrap();
    let span = w.ideal_span();
    for t in ["x*t^2 - x", "x*ti - x", "x*t^2 - x*t"] {
        assert!(span.contains(d.parse(t).as_map()), "{t}");
    }
    assert!(!span.contains(d.parse("t - 1").as_map()));
    let ker = w.ker_mc();
    assert_eq!(ker.len(), w.ideal.len());
}

#[test]
fn desk_zero_calculus() {
    let d = desk();
    let w = Woronowicz::new(d, &hplus(d, 2), 2).unwrap();
    for (_, h) in d.generators() {
        assert!(w.differs(&w.d(&h), &Tensor::zero(2)).is_none());
    }
}

#[test]
fn desk_covariance_and_mc_with_proper_ideal() {
    let d = desk();
    let w = Woronowicz::new(d, &desk_proper(), 2).unwrap().with_coaction_quotient();
    let rep = w.check_covariance(&generator_products(d));
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = w.check_maurer_cartan(&d.generators());
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn homogeneous_calculus_universal_case() {
    let c = HomogeneousCalculus::new(hs(), &[], 2).unwrap();
    let rep = c.check_xi();
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = c.check_fodc();
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = c.hermisson_roundtrip();
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn homogeneous_calculus_full_ideal_is_zero() {
    let h = hs();
    let k = h.hopf_kernel(2);
    let c = HomogeneousCalculus::new(h, &k.plus, 2).unwrap();
    let rep = c.hermisson_roundtrip();
    assert!(rep.passed(), "{:?}", failures(&rep));
    for b in &k.basis {
        assert!(c.differs(&c.d(b), &Tensor::zero(2)).is_none());
    }
}

#[test]
fn homogeneous_calculus_product_ideal() {
    let h = hs();
    let d = h.dom();
    let gens: Vec<NCPoly> = ["x*a*b", "x*b*c", "x*c*d"].iter().map(|s| d.parse(s).to_poly()).collect();
    let c = HomogeneousCalculus::new(h, &gens, 3).unwrap();
    let rep = c.check_closure();
    assert!(rep.passed(), "{:?}", failures(&rep));
    let rep = c.check_fodc();
    assert!(rep.passed(), "{:?}", failures(&rep));
    // d(x b c) vanishes, d(b c) does not
    assert!(c.differs(&c.d(&gens[1]), &Tensor::zero(2)).is_none());
    assert!(c.differs(&c.d(&d.parse("b*c").to_poly()), &Tensor::zero(2)).is_some());
}

#[test]
fn homogeneous_calculus_rejects_non_plus() {
    let d = hs().dom();
    assert!(HomogeneousCalculus::new(hs(), &[d.parse("x*b").to_poly()], 2).is_err());
}
