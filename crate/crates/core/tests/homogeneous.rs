use hact_core::bialgebroid::Algebroid;
use hact_core::homogeneous::*;
use hact_core::ncalg::*;
use hact_core::smash_backend::SmashSurjection;
use std::sync::OnceLock;

fn load() -> SmashSurjection {
    SmashSurjection::load(&mut Library::with_dir(None), "smash_slq2").unwrap()
}

fn hs() -> &'static Homogeneous {
    static X: OnceLock<Homogeneous> = OnceLock::new();
    X.get_or_init(|| Homogeneous::new(load()))
}

fn failures(rep: &hact_core::report::Report) -> Vec<String> {
    rep.failures().take(5).map(|e| format!("{} {} {:?}", e.id, e.element, e.witness)).collect()
}

/// Words `a#g` of `A#O_q(SL2)` whose `G`-part has weight zero.
fn weight_zero_oracle(degree: usize) -> Vec<Word> {
    let h = hs();
    let d = h.dom();
    let g = h.s.g();
    d.sys
        .graded_basis(degree)
        .into_iter()
        .filter(|w| g.alg.word_weight(&d.split(w).1) == 0)
        .collect()
}

#[test]
fn kernel_degree_zero_is_scalars() {
    let k = hs().hopf_kernel(0);
    assert_eq!(k.basis, vec![NCPoly::one()]);
    assert!(k.plus.is_empty());
}

#[test]
fn kernel_matches_weight_zero_part() {
    let h = hs();
    let k = h.hopf_kernel(3);
    let oracle = weight_zero_oracle(3);
    assert_eq!(k.basis.len(), oracle.len());
    let mut span = Span::new();
    for w in &oracle {
        span.insert(NCPoly::word(w.clone()).as_map().clone());
    }
    for b in &k.basis {
        assert!(span.contains(b.as_map()), "{}", b.to_text(h.dom().alphabet()));
    }
    // degree ≤ 2: 1, x, ab, bc, cd and x times each
    let dims: Vec<usize> = k.dims().iter().map(|d| d.1).collect();
    assert_eq!(dims, vec![1, 2, 5, 8]);
    let x_bc = h.dom().parse("x*b*c").to_poly();
    let ks = {
        let mut s = Span::new();
        for b in &k.basis {
            s.insert(b.as_map().clone());
        }
        s
    };
    assert!(ks.contains(x_bc.as_map()));
    assert!(!ks.contains(h.dom().parse("x*b").to_poly().as_map()));
}

#[test]
fn kernel_invariants() {
    let h = hs();
    let k = h.hopf_kernel(2);
    let rep = h.check_kernel(&k);
    assert!(rep.passed(), "{:?}", failures(&rep));
    assert!(rep.with_id("kernel.counit_multiplicative").count() >= 9);
    // ab, bc, cd
    let dims: Vec<usize> = k.dims().iter().map(|d| d.2).collect();
    assert_eq!(dims, vec![0, 0, 3]);
}

#[test]
fn gb_plus_equals_ker_pi() {
    let rep = hs().check_hg_equivalence(3);
    assert!(rep.passed(), "{:?} {:?}", failures(&rep), rep.notes);
    assert_eq!(rep.with_id("hg.equal").count(), 4);
    assert!(!rep.assumptions.is_empty());
}

#[test]
fn corrupted_pi_is_flagged() {
    let mut s = load();
    // drop the image of d
    s.pi[3] = NCPoly::zero();
    let h = Homogeneous::new(s);
    let rep = h.check_hg_equivalence(2);
    assert!(!rep.passed());
}

#[test]
fn gb_plus_is_a_coideal() {
    let rep = hs().check_coideal(2);
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn chi_unit() {
    let h = hs();
    let one = Tensor::unit(2);
    assert_eq!(h.lin_gh(&h.chi(&one)), Tensor::unit(2));
}

#[test]
fn chi_roundtrips() {
    let h = hs();
    let rep = h.check_chi_roundtrips(2);
    assert!(rep.passed(), "{:?}", failures(&rep));
    assert!(rep.with_id("chi.explicit_after_map").count() > 20);
    assert!(rep.with_id("gbg.balanced").count() > 0);
}

#[test]
fn chi_on_a_d() {
    let h = hs();
    let d = h.dom();
    let t = d.parse2("a@d");
    let back = h.chi_inverse_explicit(&h.chi(&t));
    assert_eq!(h.lin_gbg(&back), h.lin_gbg(&t));
}

#[test]
fn explicit_inverse_on_x_t() {
    let h = hs();
    let t = Tensor::from_polys(&[NCPoly::one(), h.cod().parse("x*t").to_poly()]);
    let inv = h.chi_inverse_explicit(&t);
    // S⁻¹(t) = ti and τ(ti) = a⊗d − q c⊗b
    let expect = h.dom().parse2("x*a@d - q*x*c@b");
    assert_eq!(h.lin_gbg(&inv), h.lin_gbg(&expect));
    assert_eq!(h.lin_gh(&h.chi(&inv)), h.lin_gh(&t));
}

#[test]
fn xi_roundtrips() {
    let rep = hs().check_xi(2);
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn phi_of_g_is_h() {
    let rep = hs().takeuchi_phi(3);
    assert!(rep.passed(), "{:?}", failures(&rep));
}

#[test]
fn psi_contains_differentials() {
    let h = hs();
    let d = h.dom();
    let k = h.hopf_kernel(2);
    let psi = h.takeuchi_psi(&k, 2);
    assert!(!psi.is_empty());
    let mut span = Span::new();
    for t in &psi {
        span.insert(d.linearize(t, &hact_core::bialgebroid::Pattern::tri2()).as_map().clone());
    }
    // Δb − b⊗1 for b ∈ B
    for b in &k.basis {
        let bt = Tensor::from_poly(b);
        let db = d.delta(&bt).minus(&Tensor::from_polys(&[b.clone(), NCPoly::one()]));
        let lin = d.linearize(&db, &hact_core::bialgebroid::Pattern::tri2());
        assert!(span.contains(lin.as_map()), "{}", b.to_text(d.alphabet()));
    }
}
