use hact_core::ncalg::*;
use hact_core::smash_backend::*;
use std::sync::OnceLock;

fn desk() -> &'static SmashAlgebroid {
    static X: OnceLock<SmashAlgebroid> = OnceLock::new();
    X.get_or_init(|| SmashAlgebroid::load(&mut Library::with_dir(None), "smash_desk").unwrap())
}

// V = A ⊕ A/(x)
fn module() -> FreeHopfModule<'static> {
    FreeHopfModule::new(desk(), vec![vec![], vec![NCPoly::letter(0)]])
}

fn elem(m: &FreeHopfModule, parts: &[&str]) -> Vec<NCPoly> {
    parts.iter().map(|p| m.alg.parse(p).to_poly()).collect()
}

fn failures(rep: &hact_core::report::Report) -> Vec<String> {
    rep.failures().map(|e| format!("{} {} {:?}", e.id, e.element, e.witness)).collect()
}

#[test]
fn balancing_through_the_target() {
    let m = module();
    // x#1 = t(x)(1#ti), so x ⊗ e1 = ti ⊗ x e1 = 0
    assert!(m.linearize(&elem(&m, &["0", "x"])).is_zero());
    assert!(!m.linearize(&elem(&m, &["x", "0"])).is_zero());
    assert_eq!(m.linearize(&elem(&m, &["x*t", "0"])), m.linearize(&m.coinvariant_basis(1)[1]));
}

#[test]
fn xi_inverse_values() {
    let m = module();
    let inv = m.xi_inverse(&elem(&m, &["x*t", "t^2"]));
    assert_eq!(inv[0], m.alg.parse2("x*t@1"));
    assert_eq!(inv[1], m.alg.parse2("t^2@1"));
    let inv = m.xi_inverse(&elem(&m, &["x", "0"]));
    assert_eq!(m.linearize_xi_domain(&inv).unwrap(), m.linearize(&elem(&m, &["x", "0"])));
}

#[test]
fn source_image_is_not_coinvariant() {
    let m = module();
    assert!(!m.coinvariance_defect(&elem(&m, &["x", "0"])).is_zero());
    assert!(m.coinvariance_defect(&elem(&m, &["x*t", "0"])).is_zero());
    assert!(m.coinvariance_defect(&elem(&m, &["1", "1"])).is_zero());
    assert!(!m.coinvariance_defect(&elem(&m, &["t", "0"])).is_zero());
}

#[test]
fn coinvariants_are_one_tensor_v() {
    let m = module();
    // dim of 1⊗V truncated: {1 e0, 1 e1} then {x e0} added
    for (d, want) in [(0, 2), (1, 3), (2, 3), (3, 3)] {
        let mut span = Span::new();
        for c in m.coinvariants(d) {
            span.insert(m.linearize(&c).as_map().clone());
        }
        assert_eq!(span.dim(), want, "degree {d}");
    }
}

#[test]
fn fundamental_theorem_on_desk() {
    let rep = module().check_fundamental(3);
    assert!(rep.passed(), "{:?}", failures(&rep));
    for id in [
        "fundamental.xi_after_inverse",
        "fundamental.inverse_after_xi",
        "fundamental.inverse_leg",
        "fundamental.plus_minus",
        "fundamental.coinvariants",
        "adjoint.coinvariant",
    ] {
        assert!(rep.with_id(id).count() > 0, "{id}");
    }
}

#[test]
fn fundamental_theorem_on_slq2_codomain() {
    let s = SmashSurjection::load(&mut Library::with_dir(None), "smash_slq2").unwrap();
    let m = FreeHopfModule::new(&s.codomain, vec![vec![]]);
    let rep = m.check_fundamental(2);
    assert!(rep.passed(), "{:?}", failures(&rep));
}
