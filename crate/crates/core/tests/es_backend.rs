use hact_core::bialgebroid::*;
use hact_core::es_backend::*;
use hact_core::ncalg::*;
use std::sync::OnceLock;

fn es() -> &'static EsAlgebroid {
    static X: OnceLock<EsAlgebroid> = OnceLock::new();
    X.get_or_init(|| EsAlgebroid::load(&mut Library::with_dir(None), "es_fibration").unwrap())
}

fn amb(text: &str) -> Tensor {
    let s = es().sys();
    parse_tensor(text, &[s, s, s, s][..text.split('@').count()]).unwrap()
}

fn base(text: &str) -> NCPoly {
    parse_poly(text, es().base()).unwrap()
}

fn same(lhs: &Tensor, rhs: &Tensor, pat: &Pattern) -> bool {
    compare(es(), lhs, rhs, pat).is_none()
}

const KEYS: [&str; 8] = ["alpha", "alphat", "beta", "betat", "gamma", "gammat", "delta", "deltat"];

#[test]
fn generator_table() {
    let e = es();
    assert_eq!(e.gen("alphat"), amb("-q^-1*a@b"));
    assert_eq!(e.gen("α"), amb("a@d"));
    assert_eq!(e.source(&NCPoly::one()), Tensor::unit(2));
    assert_eq!(e.target(&NCPoly::one()), Tensor::unit(2));
    for k in KEYS {
        assert_eq!(e.diagonal_weight(&e.gen(k)), Some(0), "{k}");
    }
}

#[test]
fn counit_table() {
    let e = es();
    let table = [
        ("alpha", "1 - q^2*B0"),
        ("beta", "B0"),
        ("gamma", "B0"),
        ("delta", "1 - B0"),
        ("alphat", "Bm"),
        ("betat", "q^-1*Bp"),
        ("gammat", "Bp"),
        ("deltat", "q^-1*Bm"),
    ];
    for (k, v) in table {
        assert_eq!(e.counit(&e.gen(k)), base(v), "{k}");
    }
    assert_eq!(e.counit(&e.one()), NCPoly::one());
    // ad = 1 + q bc and B0 = -q^-1 bc
    let s = e.sys();
    let ad = s.normalize(&parse_poly("a*d", s).unwrap());
    assert_eq!(ad, parse_poly("1 + q*b*c", s).unwrap());
    assert_eq!(e.ext.base.apply(&base("1 - q^2*B0")), ad);
}

#[test]
fn counit_rejects_non_coinvariant() {
    assert!(matches!(es().es_counit(&amb("a@1")), Err(EsError::NotInBase(_))));
}

#[test]
fn coproduct_table() {
    let e = es();
    let table = [
        ("alpha", "alpha@alpha + alphat@gammat"),
        ("beta", "q^2*beta@beta + deltat@betat"),
        ("gamma", "gamma@gamma + gammat@alphat"),
        ("delta", "delta@delta + q^2*betat@deltat"),
        ("alphat", "alpha@alphat + alphat@gamma"),
        ("betat", "q^2*betat@beta + delta@betat"),
        ("gammat", "gamma@gammat + gammat@alpha"),
        ("deltat", "deltat@delta + q^2*beta@deltat"),
    ];
    for (k, v) in table {
        assert!(same(&e.delta(&e.gen(k)), &e.eval(v), &Pattern::tri2()), "{k}");
    }
    assert_eq!(e.delta(&e.one()), Tensor::unit(4));
}

#[test]
fn translation_table() {
    let e = es();
    let table = [
        ("alpha", "alpha@delta + q^2*gammat@deltat"),
        ("alphat", "alphat@delta + q^2*gamma@deltat"),
        ("beta", "beta@gamma + betat@alphat"),
        ("betat", "beta@gammat + betat@alpha"),
        ("gamma", "q^2*gamma@beta + alphat@betat"),
        ("gammat", "q^2*gammat@beta + alpha@betat"),
        ("delta", "delta@alpha + deltat@gammat"),
        ("deltat", "delta@alphat + deltat@gamma"),
    ];
    for (k, v) in table {
        assert!(same(&e.translation(&e.gen(k)), &e.eval(v), &Pattern::blk2()), "{k}");
    }
    assert_eq!(e.translation(&e.one()), Tensor::unit(4));
}

#[test]
fn linearizer_is_balanced() {
    let e = es();
    for (_, r) in base_generators(e) {
        for k in KEYS {
            let h = e.gen(k);
            let g = e.gen("beta");
            let tri_l = otimes(&[&e.mul(&e.target(&r), &h), &g]);
            let tri_r = otimes(&[&h, &e.mul(&e.source(&r), &g)]);
            assert!(same(&tri_l, &tri_r, &Pattern::tri2()));
            let blk_l = otimes(&[&e.mul(&h, &e.source(&r)), &g]);
            assert!(same(&blk_l, &tri_r, &Pattern::blk2()));
            // the two balancings differ
            assert!(!same(&blk_l, &tri_r, &Pattern::tri2()) || !same(&tri_l, &tri_r, &Pattern::blk2()));
        }
    }
}

#[test]
fn structure_and_tch() {
    let e = es();
    let rep = verify_structure(e);
    assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    let rep = verify_tch(e, 2, 6, 11);
    assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    for id in ["Tch1", "Tch2", "Tch3", "Tch4", "Tch5", "Tch6", "Tch7", "Tch8", "Tch9"] {
        assert!(rep.with_id(id).count() > 0, "{id}");
    }
}

#[test]
fn counit_laws() {
    let rep = verify_counit(es(), 2, 4, 3);
    assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn galois_roundtrips() {
    let rep = check_galois_roundtrips(es(), 2);
    assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    assert!(rep.entries.len() > 20);
}

#[test]
fn regular_comodule() {
    let rep = verify_regular_comodule(es());
    assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn express_recovers_rows() {
    let e = es();
    for k in KEYS {
        let d = e.delta(&e.gen(k));
        let sym = e.express(&d, &Pattern::tri2(), &[1, 1]).unwrap();
        assert!(same(&e.eval_symbolic(&sym), &d, &Pattern::tri2()), "{k}");
        assert!(sym.len() <= 2, "{}", e.symbol_text(&sym));
    }
    let x = e.express(&amb("a@1@1@1"), &Pattern::tri2(), &[1, 1]);
    assert!(x.is_none());
}
