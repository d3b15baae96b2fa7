use hact_core::ncalg::linalg::SparseVec;
use hact_core::ncalg::presentation::builtin_presets;
use hact_core::ncalg::rewrite::{mono, rule};
use hact_core::ncalg::*;
use proptest::prelude::*;
use std::sync::Arc;

fn sl2() -> Arc<RewriteSystem> {
    Library::with_dir(None).algebra("oq_sl2").unwrap().system
}

fn p(s: &RewriteSystem, text: &str) -> NCPoly {
    parse_poly(text, s).unwrap()
}

#[test]
fn sl2_normal_forms() {
    let s = sl2();
    assert_eq!(s.normalize(&p(&s, "b*a")).to_text(s.alphabet()), "q^-1*a*b");
    assert_eq!(s.normalize(&NCPoly::one()), NCPoly::one());
    assert_eq!(s.normalize(&p(&s, "d*a")), p(&s, "1 + q^-1*b*c"));
    assert_eq!(s.mul(&p(&s, "a"), &p(&s, "d")), p(&s, "1 + q*b*c"));
    assert_eq!(s.mul(&p(&s, "c"), &p(&s, "b")), p(&s, "b*c"));
    let x = p(&s, "a*b - 2*c*d");
    assert_eq!(s.mul(&x, &NCPoly::one()), s.normalize(&x));
}

#[test]
fn ad_minus_da_is_q_difference_of_bc() {
    let s = sl2();
    let ad = s.mul(&p(&s, "a"), &p(&s, "d"));
    let da = s.mul(&p(&s, "d"), &p(&s, "a"));
    assert_eq!(&ad - &da, p(&s, "(q - q^-1) * b * c"));
}

#[test]
fn sl2_graded_basis() {
    let s = sl2();
    let by_len = |n: usize| s.graded_basis(n).into_iter().filter(|w| w.len() == n).collect::<Vec<_>>();
    assert_eq!(by_len(0), vec![Word::empty()]);
    assert_eq!(by_len(1).len(), 4);
    let two: Vec<String> = by_len(2).iter().map(|w| NCPoly::word(w.clone()).to_text(s.alphabet())).collect();
    assert_eq!(two, ["b^2", "b*c", "c^2", "a*b", "a*c", "b*d", "c*d", "a^2", "d^2"]);
    // PBW count: a^i b^j c^k plus b^j c^k d^l with l > 0
    let pbw3 = 10 + 6;
    assert_eq!(by_len(3).len(), pbw3);
}

#[test]
fn graded_words_are_irreducible() {
    let s = sl2();
    for w in s.graded_basis(4) {
        assert_eq!(s.normalize_word(&w), NCPoly::word(w.clone()));
    }
}

#[test]
fn overlap_examples() {
    let s = sl2();
    let rep = s.check_overlaps(4);
    assert!(rep.checked > 0);
    assert!(rep.is_confluent(), "{:?}", rep.failures);

    let xy = RewriteSystem::new(vec!["x".into(), "y".into()], vec![rule(&[0, 1], NCPoly::one())]).unwrap();
    assert!(xy.check_overlaps(3).is_confluent());

    let bad = RewriteSystem::new(
        vec!["x".into()],
        vec![rule(&[0, 0], NCPoly::letter(0)), rule(&[0, 0, 0], NCPoly::one())],
    )
    .unwrap();
    assert!(!bad.check_overlaps(3).is_confluent());
}

#[test]
fn every_shipped_system_is_confluent() {
    let mut lib = Library::with_dir(None);
    for name in builtin_presets() {
        lib.load_preset(name).unwrap();
    }
    let names = lib.names("algebra");
    assert!(names.len() >= 4);
    for n in names {
        let a = lib.algebra(&n).unwrap();
        let rep = a.system.check_overlaps(4);
        assert!(rep.is_confluent(), "{n}: {:?}", rep.failures);
    }
}

#[test]
fn increasing_rule_rejected() {
    let r = RewriteSystem::new(vec!["a".into(), "b".into()], vec![rule(&[0, 1], mono(Scalar::q(), &[1, 0]))]);
    assert!(matches!(r, Err(RewriteError::NotDecreasing { .. })));
}

fn sv(entries: &[(usize, Scalar)]) -> SparseVec<usize> {
    entries.iter().cloned().collect()
}

#[test]
fn solve_examples() {
    let one = Scalar::one();
    let id = vec![sv(&[(0, one.clone())]), sv(&[(1, one.clone())])];
    let s = solve(&id, &sv(&[(0, one.clone())]));
    assert_eq!(s.particular, Some(vec![one.clone(), Scalar::zero()]));
    assert!(s.kernel.is_empty());

    // [q, -1] x = 0
    let cols = vec![sv(&[(0, Scalar::q())]), sv(&[(0, -Scalar::one())])];
    let s = solve(&cols, &SparseVec::new());
    assert_eq!(s.kernel, vec![vec![one.clone(), Scalar::q()]]);
}

#[test]
fn weight_kernel_matches_weight_filter() {
    let lib_alg = Library::with_dir(None).algebra("oq_sl2").unwrap();
    let s = &lib_alg.system;
    let words: Vec<Word> = s.graded_basis(2).into_iter().filter(|w| w.len() == 2).collect();
    // coinvariance defect w ↦ w⊗t^wt − w⊗1, rows keyed by (word, weight)
    let cols: Vec<SparseVec<(usize, i64)>> = words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut c = SparseVec::new();
            linalg::axpy(&mut c, &Scalar::one(), &[((i, lib_alg.word_weight(w)), Scalar::one())].into_iter().collect());
            linalg::axpy(&mut c, &-Scalar::one(), &[((i, 0), Scalar::one())].into_iter().collect());
            c
        })
        .collect();
    let k = solve(&cols, &SparseVec::new()).kernel;
    let brute = words.iter().filter(|w| lib_alg.word_weight(w) == 0).count();
    assert_eq!(k.len(), brute);
    assert_eq!(brute, 3);
}

#[test]
fn parser_examples() {
    let s = sl2();
    let t = p(&s, "q^-1 * a * b");
    assert_eq!(t.len(), 1);
    assert_eq!(t.coeff(&Word(vec![0, 1])), Scalar::q_pow(-1));
    let free = RewriteSystem::free(vec!["a".into(), "c".into(), "d".into(), "d'".into()]);
    let t = parse_tensor("a@d + q^2 * c@d'", &[&free]).unwrap();
    assert_eq!(t.arity(), 2);
    assert_eq!(t.len(), 2);
    let bc = p(&s, "(q - q^-1) * b * c");
    assert_eq!(bc.coeff(&Word(vec![1, 2])), &Scalar::q() - &Scalar::q_pow(-1));
    assert!(parse_poly("a + * b", &s).is_err());
    assert!(parse_poly("a*e", &s).is_err());
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -2i64..=2, prop::bool::ANY).prop_map(|(c, k, plus_one)| {
        let m = &Scalar::from_int(c) * &Scalar::q_pow(k);
        if plus_one { &m + &Scalar::one() } else { m }
    })
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0u16..4, 0..=max_len), arb_scalar()), 0..4).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(Word(w), c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalize_is_idempotent(x in arb_poly(4)) {
        let s = sl2();
        let n = s.normalize(&x);
        prop_assert_eq!(s.normalize(&n), n);
    }

    #[test]
    fn normalize_is_additive(x in arb_poly(3), y in arb_poly(3)) {
        let s = sl2();
        prop_assert_eq!(s.normalize(&(&x + &y)), s.normalize(&(&s.normalize(&x) + &s.normalize(&y))));
    }

    #[test]
    fn mul_is_congruent(x in arb_poly(3), y in arb_poly(3)) {
        let s = sl2();
        prop_assert_eq!(s.mul(&x, &y), s.mul(&s.normalize(&x), &s.normalize(&y)));
    }

    #[test]
    fn mul_is_associative(x in arb_poly(2), y in arb_poly(2), z in arb_poly(2)) {
        let s = sl2();
        prop_assert_eq!(s.mul(&s.mul(&x, &y), &z), s.mul(&x, &s.mul(&y, &z)));
    }

    #[test]
    fn parser_inverts_printer(x in arb_poly(4)) {
        let s = sl2();
        let n = s.normalize(&x);
        prop_assert_eq!(parse_poly(&n.to_text(s.alphabet()), &s).unwrap(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mul_congruence_wide(x in arb_poly(3), y in arb_poly(3)) {
        let s = sl2();
        prop_assert_eq!(s.normalize(&s.mul(&x, &y)), s.mul(&s.normalize(&x), &s.normalize(&y)));
    }
}
