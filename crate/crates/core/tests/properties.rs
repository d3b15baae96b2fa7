use hact_core::bialgebroid::*;
use hact_core::calculus::*;
use hact_core::es_backend::EsAlgebroid;
use hact_core::ncalg::*;
use hact_core::smash_backend::{SmashAlgebroid, SmashSurjection};
use proptest::prelude::*;
use std::sync::OnceLock;

fn es() -> &'static EsAlgebroid {
    static X: OnceLock<EsAlgebroid> = OnceLock::new();
    X.get_or_init(|| EsAlgebroid::load(&mut Library::with_dir(None), "es_fibration").unwrap())
}

fn desk() -> &'static SmashAlgebroid {
    static X: OnceLock<SmashAlgebroid> = OnceLock::new();
    X.get_or_init(|| SmashAlgebroid::load(&mut Library::with_dir(None), "smash_desk").unwrap())
}

fn slq2() -> &'static SmashSurjection {
    static X: OnceLock<SmashSurjection> = OnceLock::new();
    X.get_or_init(|| SmashSurjection::load(&mut Library::with_dir(None), "smash_slq2").unwrap())
}

fn es_calc() -> &'static Woronowicz<'static, EsAlgebroid> {
    static X: OnceLock<Woronowicz<'static, EsAlgebroid>> = OnceLock::new();
    X.get_or_init(|| Woronowicz::new(es(), &[], 2).unwrap().with_coaction_quotient())
}

fn desk_calc() -> &'static Woronowicz<'static, SmashAlgebroid> {
    static X: OnceLock<Woronowicz<'static, SmashAlgebroid>> = OnceLock::new();
    X.get_or_init(|| Woronowicz::new(desk(), &[desk().parse("x*t - x")], 3).unwrap().with_coaction_quotient())
}

fn desk_calc_t() -> &'static Woronowicz<'static, SmashAlgebroid> {
    static X: OnceLock<Woronowicz<'static, SmashAlgebroid>> = OnceLock::new();
    X.get_or_init(|| Woronowicz::new(desk(), &[desk().parse("t - 1")], 3).unwrap().with_coaction_quotient())
}

fn slq2_calc() -> &'static Woronowicz<'static, SmashAlgebroid> {
    static X: OnceLock<Woronowicz<'static, SmashAlgebroid>> = OnceLock::new();
    X.get_or_init(|| {
        let d = &slq2().domain;
        Woronowicz::new(d, &[d.parse("b")], 2).unwrap().with_coaction_quotient()
    })
}

fn slq2_h_calc() -> &'static Woronowicz<'static, SmashAlgebroid> {
    static X: OnceLock<Woronowicz<'static, SmashAlgebroid>> = OnceLock::new();
    X.get_or_init(|| Woronowicz::new(&slq2().codomain, &[], 2).unwrap().with_coaction_quotient())
}

fn pair<A: Algebroid + ?Sized>(alg: &A, seed: u64) -> (Tensor, Tensor) {
    let mut v = random_elements(alg, 1, 2, seed);
    let g = v.pop().unwrap();
    (v.pop().unwrap(), g)
}

fn failures(rep: &hact_core::report::Report) -> Vec<String> {
    rep.failures().take(3).map(|e| format!("{} {} {:?}", e.id, e.element, e.witness)).collect()
}

fn generators<A: Algebroid + ?Sized>(alg: &A) -> Vec<(String, Tensor)> {
    let mut g = alg.generators();
    g.push(("1".into(), alg.one()));
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn leibniz_es(seed in any::<u64>()) {
        let rep = es_calc().check_leibniz(&[pair(es(), seed)]);
        prop_assert!(rep.passed(), "{:?}", failures(&rep));
    }

    #[test]
    fn leibniz_desk(seed in any::<u64>()) {
        let p = pair(desk(), seed);
        for w in [desk_calc(), desk_calc_t()] {
            let rep = w.check_leibniz(&[p.clone()]);
            prop_assert!(rep.passed(), "{:?}", failures(&rep));
        }
    }

    #[test]
    fn leibniz_slq2(seed in any::<u64>()) {
        let rep = slq2_calc().check_leibniz(&[pair(&slq2().domain, seed)]);
        prop_assert!(rep.passed(), "{:?}", failures(&rep));
        let rep = slq2_h_calc().check_leibniz(&[pair(&slq2().codomain, seed)]);
        prop_assert!(rep.passed(), "{:?}", failures(&rep));
    }

    #[test]
    fn ker_mc_is_left_ideal_desk(seed in any::<u64>()) {
        let hs = random_elements(desk(), 2, 2, seed);
        for w in [desk_calc(), desk_calc_t()] {
            let rep = w.check_ker_mc_left_ideal(&hs);
            prop_assert!(rep.passed(), "{:?}", failures(&rep));
        }
    }
}

#[test]
fn covariance_on_generators() {
    let rep = es_calc().check_covariance(&generators(es()));
    assert!(rep.passed(), "{:?}", failures(&rep));
    for w in [desk_calc(), desk_calc_t(), slq2_calc(), slq2_h_calc()] {
        let rep = w.check_covariance(&generators(w.alg));
        assert!(rep.passed(), "{} {:?}", w.alg.name(), failures(&rep));
        assert_eq!(rep.entries.len(), w.alg.generators().len() + 1);
    }
}

#[test]
fn ker_mc_is_nonzero_for_proper_ideals() {
    assert!(!desk_calc().ker_mc().is_empty());
    assert!(!desk_calc_t().ker_mc().is_empty());
}
