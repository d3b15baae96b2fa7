use super::{Embedding, HopfAlgebra};
use crate::ncalg::presentation::{AlgebraDef, Library, PresentationError};
use crate::ncalg::rewrite::mul_tensors;
use crate::ncalg::{parse_tensor, NCPoly, RewriteSystem, Scalar, Tensor, Word};
use crate::report::Report;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranslationError {
    #[error("weight {0} outside the configured range ±{1}")]
    WeightOutOfRange(i64, i64),
}

/// A Hopf-Galois extension `B ⊆ A` for a ℤ-graded algebra `A`, viewed as a
/// comodule algebra over the group algebra of ℤ (a Laurent polynomial Hopf
/// algebra on one grouplike). Balanced tensors over `B` are decided through
/// the Galois map `x⊗y ↦ xy ⊗ g^{|y|}`.
#[derive(Debug)]
pub struct GradedExtension {
    pub total: AlgebraDef,
    pub hopf: Arc<HopfAlgebra>,
    pub base: Embedding,
    pub bound: i64,
    tau_pos: Tensor,
    tau_neg: Tensor,
    cache: RwLock<HashMap<i64, Tensor>>,
}

impl Clone for GradedExtension {
    fn clone(&self) -> Self {
        GradedExtension::new(
            self.total.clone(),
            self.hopf.clone(),
            self.base.clone(),
            self.tau_pos.clone(),
            self.tau_neg.clone(),
        )
        .with_bound(self.bound)
    }
}

impl GradedExtension {
    /// `tau_pos` and `tau_neg` are the translations of the weight one and
    /// weight minus one grouplikes, as representatives in `A⊗A`.
    pub fn new(total: AlgebraDef, hopf: Arc<HopfAlgebra>, base: Embedding, tau_pos: Tensor, tau_neg: Tensor) -> Self {
        assert!(total.weights.is_some(), "graded total algebra");
        GradedExtension {
            total,
            hopf,
            base,
            bound: 3,
            tau_pos,
            tau_neg,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_bound(mut self, bound: i64) -> Self {
        self.bound = bound;
        self
    }

    /// Reads `total`, `hopf`, `base` and `translation.<g>` keys from a section.
    pub fn load(lib: &mut Library, kind: &str, name: &str) -> Result<Self, PresentationError> {
        let sec = lib.section(kind, name)?;
        let total = lib.algebra(sec.require("total")?)?;
        let hopf = Arc::new(HopfAlgebra::load(lib, sec.require("hopf")?)?);
        let base = Embedding::load(lib, sec.require("base")?)?;
        let sys = total.system.clone();
        let ws = hopf.alg.weights.clone().ok_or_else(|| sec.invalid("Hopf algebra has no grading"))?;
        let mut taus = [None, None];
        for (g, w) in hopf.sys().alphabet().iter().zip(ws) {
            let key = format!("translation.{g}");
            let t = parse_tensor(sec.require(&key)?, &[&sys, &sys]).map_err(|e| sec.expr_err(&key, e))?;
            match w {
                1 => taus[0] = Some(t),
                -1 => taus[1] = Some(t),
                _ => return Err(sec.invalid(format!("{g} is not a grouplike of weight ±1"))),
            }
        }
        let [Some(p), Some(n)] = taus else {
            return Err(sec.invalid("translations for both grouplikes are required"));
        };
        Ok(GradedExtension::new(total, hopf, base, p, n))
    }

    pub fn sys(&self) -> &RewriteSystem {
        &self.total.system
    }

    /// Copy with the translation of weight `±1` replaced.
    pub fn with_translation(&self, weight: i64, t: Tensor) -> Self {
        let (p, n) = match weight {
            1 => (t, self.tau_neg.clone()),
            -1 => (self.tau_pos.clone(), t),
            _ => panic!("only weights ±1 carry data"),
        };
        GradedExtension::new(self.total.clone(), self.hopf.clone(), self.base.clone(), p, n).with_bound(self.bound)
    }

    pub fn weight(&self, w: &Word) -> i64 {
        self.total.word_weight(w)
    }

    fn mul2(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let s = self.sys();
        mul_tensors(a, b, &[s, s])
    }

    /// `τ(gⁿ)`, extended from `τ(g^{±1})` by `(hg)⁽¹⁾⊗(hg)⁽²⁾ = g⁽¹⁾h⁽¹⁾⊗h⁽²⁾g⁽²⁾`.
    pub fn tau(&self, n: i64) -> Result<Tensor, TranslationError> {
        if n.abs() > self.bound {
            return Err(TranslationError::WeightOutOfRange(n, self.bound));
        }
        if let Some(t) = self.cache.read().unwrap().get(&n) {
            return Ok(t.clone());
        }
        let t = match n {
            0 => Tensor::unit(2),
            1 => self.tau_pos.clone(),
            -1 => self.tau_neg.clone(),
            _ => {
                let step = n.signum();
                let h = self.tau(n - step)?;
                let g = self.tau(step)?;
                self.tau_product(&h, &g)
            }
        };
        self.cache.write().unwrap().insert(n, t.clone());
        Ok(t)
    }

    /// `g⁽¹⁾h⁽¹⁾ ⊗ h⁽²⁾g⁽²⁾` from representatives of `τ(h)` and `τ(g)`.
    pub fn tau_product(&self, th: &Tensor, tg: &Tensor) -> Tensor {
        let s = self.sys();
        let mut acc = Tensor::zero(2);
        for (kh, ch) in th.terms() {
            for (kg, cg) in tg.terms() {
                let l = s.normalize_word(&kg[0].concat(&kh[0]));
                let r = s.normalize_word(&kh[1].concat(&kg[1]));
                let c = ch * cg;
                for (wl, cl) in l.terms() {
                    for (wr, cr) in r.terms() {
                        acc.add_term(vec![wl.clone(), wr.clone()], &c * &(cl * cr));
                    }
                }
            }
        }
        acc
    }

    /// `τ'(gⁿ) = τ(S⁻¹(gⁿ)) = τ(g⁻ⁿ)`.
    pub fn tau_prime(&self, n: i64) -> Result<Tensor, TranslationError> {
        self.tau(-n)
    }

    fn g(&self, n: i64) -> Word {
        self.hopf.grouplike_power(n)
    }

    /// `x⊗y ↦ xy ⊗ g^{|y|}`, the Galois map; injective on `A⊗_B A`.
    pub fn lin2(&self, t: &Tensor) -> Tensor {
        let s = self.sys();
        let mut acc = Tensor::zero(2);
        for (k, c) in t.terms() {
            let g = self.g(self.weight(&k[1]));
            for (w, cw) in s.normalize_word(&k[0].concat(&k[1])).terms() {
                acc.add_term(vec![w.clone(), g.clone()], c * cw);
            }
        }
        acc
    }

    /// `x⊗y⊗z ↦ xyz ⊗ g^{|y|+|z|} ⊗ g^{|z|}` on `A⊗_B A⊗_B A`.
    pub fn lin3(&self, t: &Tensor) -> Tensor {
        let s = self.sys();
        let mut acc = Tensor::zero(3);
        for (k, c) in t.terms() {
            let wz = self.weight(&k[2]);
            let g1 = self.g(self.weight(&k[1]) + wz);
            let g2 = self.g(wz);
            let xyz = k[0].concat(&k[1]).concat(&k[2]);
            for (w, cw) in s.normalize_word(&xyz).terms() {
                acc.add_term(vec![w.clone(), g1.clone(), g2.clone()], c * cw);
            }
        }
        acc
    }

    /// `χ(x⊗y) = x y₍₀₎ ⊗ y₍₁₎`.
    pub fn chi(&self, t: &Tensor) -> Tensor {
        self.lin2(t)
    }

    /// `χ̃(x⊗y) = x₍₀₎ y ⊗ x₍₁₎`.
    pub fn chi_tilde(&self, t: &Tensor) -> Tensor {
        let s = self.sys();
        let mut acc = Tensor::zero(2);
        for (k, c) in t.terms() {
            let g = self.g(self.weight(&k[0]));
            for (w, cw) in s.normalize_word(&k[0].concat(&k[1])).terms() {
                acc.add_term(vec![w.clone(), g.clone()], c * cw);
            }
        }
        acc
    }

    fn grouplike_weight(&self, h: &Word) -> i64 {
        self.hopf.alg.word_weight(h)
    }

    /// `χ⁻¹(a⊗h) = a h⁽¹⁾ ⊗ h⁽²⁾` on an `A⊗H` tensor.
    pub fn chi_inverse(&self, t: &Tensor) -> Result<Tensor, TranslationError> {
        let mut acc = Tensor::zero(2);
        for (k, c) in t.terms() {
            let tau = self.tau(self.grouplike_weight(&k[1]))?;
            let a = Tensor::simple(vec![k[0].clone(), Word::empty()], c.clone());
            acc.add(&self.mul2(&a, &tau));
        }
        Ok(acc)
    }

    /// `χ̃⁻¹(a⊗h) = τ'(h) a`.
    pub fn chi_tilde_inverse(&self, t: &Tensor) -> Result<Tensor, TranslationError> {
        let mut acc = Tensor::zero(2);
        for (k, c) in t.terms() {
            let tau = self.tau_prime(self.grouplike_weight(&k[1]))?;
            let a = Tensor::simple(vec![Word::empty(), k[0].clone()], c.clone());
            acc.add(&self.mul2(&tau, &a));
        }
        Ok(acc)
    }

    fn text2(&self, t: &Tensor) -> String {
        t.to_text(&[self.sys().alphabet(), self.hopf.sys().alphabet()])
    }

    fn check_eq(&self, rep: &mut Report, id: &str, elem: String, l: &Tensor, r: &Tensor) {
        let w = (l != r).then(|| self.text2(&l.minus(r)));
        rep.check(id, elem, w);
    }

    fn basis_words(&self, degree: usize) -> Vec<Word> {
        self.sys().graded_basis(degree)
    }

    /// The identity block for translation maps on `gⁿ`, `|n| ≤ weights`, and
    /// on basis words of `A` up to `degree`.
    pub fn check_translation_identities(&self, weights: i64, degree: usize) -> Result<Report, TranslationError> {
        let mut rep = Report::new("hopf-galois translation");
        let s = self.sys();
        let one = Word::empty();
        for n in -weights..=weights {
            let h = format!("g^{n}");
            let tau = self.tau(n)?;
            let gn = self.g(n);

            let unit = Tensor::simple(vec![one.clone(), gn.clone()], Scalar::one());
            self.check_eq(&mut rep, "chi_tau", h.clone(), &self.chi(&tau), &unit);

            let mut prod = NCPoly::zero();
            for (k, c) in tau.terms() {
                prod.add_scaled(&s.normalize_word(&k[0].concat(&k[1])), c);
            }
            let eps = NCPoly::one();
            rep.check("counit", h.clone(), (prod != eps).then(|| (&prod - &eps).to_text(s.alphabet())));

            let lt = self.lin2(&tau);
            let mut right = Tensor::zero(3);
            let mut left = Tensor::zero(3);
            for (k, c) in tau.terms() {
                let l2 = self.lin2(&Tensor::simple(k.clone(), c.clone()));
                right.add(&l2.otimes(&Tensor::simple(vec![self.g(self.weight(&k[1]))], Scalar::one())));
                left.add(&l2.otimes(&Tensor::simple(vec![self.g(self.weight(&k[0]))], Scalar::one())));
            }
            let expect_right = lt.otimes(&Tensor::simple(vec![gn.clone()], Scalar::one()));
            let expect_left = lt.otimes(&Tensor::simple(vec![self.g(-n)], Scalar::one()));
            self.check_eq(&mut rep, "coaction.right", h.clone(), &right, &expect_right);
            self.check_eq(&mut rep, "coaction.left", h.clone(), &expect_left, &left);

            let mut triple = Tensor::zero(3);
            let mut flat = Tensor::zero(3);
            for (k1, c1) in tau.terms() {
                flat.add_term(vec![k1[0].clone(), one.clone(), k1[1].clone()], c1.clone());
                for (k2, c2) in tau.terms() {
                    triple.add_term(vec![k1[0].clone(), k1[1].concat(&k2[0]), k2[1].clone()], c1 * c2);
                }
            }
            self.check_eq(&mut rep, "coproduct", h.clone(), &self.lin3(&triple), &self.lin3(&flat));

            for (bi, img) in self.base.images.iter().enumerate() {
                let bname = &self.base.base.system.alphabet()[bi];
                let bl = self.mul2(&Tensor::from_polys(&[img.clone(), NCPoly::one()]), &tau);
                let br = self.mul2(&tau, &Tensor::from_polys(&[NCPoly::one(), img.clone()]));
                self.check_eq(&mut rep, "central", format!("{bname}, {h}"), &self.lin2(&bl), &self.lin2(&br));
            }

            for m in -weights..=weights {
                if (m + n).abs() > self.bound {
                    continue;
                }
                let lhs = self.tau(m + n)?;
                let rhs = self.tau_product(&self.tau(m)?, &tau);
                self.check_eq(&mut rep, "multiplicative", format!("g^{m}, g^{n}"), &self.lin2(&lhs), &self.lin2(&rhs));
            }
        }
        for w in self.basis_words(degree) {
            let n = self.weight(&w);
            if n.abs() > self.bound {
                continue;
            }
            let a = Tensor::simple(vec![w.clone(), one.clone()], Scalar::one());
            let lhs = self.mul2(&a, &self.tau(n)?);
            let rhs = Tensor::simple(vec![one.clone(), w.clone()], Scalar::one());
            let name = NCPoly::word(w.clone()).to_text(s.alphabet());
            self.check_eq(&mut rep, "unit", name, &self.lin2(&lhs), &self.lin2(&rhs));
        }
        Ok(rep)
    }

    /// Both Galois maps composed with their translation-built inverses, on
    /// `A⊗H` and `A⊗_B A` spanning sets up to `degree`.
    pub fn check_galois_roundtrips(&self, weights: i64, degree: usize) -> Result<Report, TranslationError> {
        let mut rep = Report::new("hopf-galois roundtrip");
        let s = self.sys();
        let basis = self.basis_words(degree);
        for w in &basis {
            for n in -weights..=weights {
                let x = Tensor::simple(vec![w.clone(), self.g(n)], Scalar::one());
                let name = format!("{} @ g^{n}", NCPoly::word(w.clone()).to_text(s.alphabet()));
                self.check_eq(&mut rep, "chi.right_inverse", name.clone(), &self.chi(&self.chi_inverse(&x)?), &x);
                let back = self.chi_tilde(&self.chi_tilde_inverse(&x)?);
                self.check_eq(&mut rep, "chi_tilde.right_inverse", name, &back, &x);
            }
        }
        for u in &basis {
            for v in &basis {
                if u.len() + v.len() > degree {
                    continue;
                }
                let x = Tensor::simple(vec![u.clone(), v.clone()], Scalar::one());
                let name = x.to_text(&[s.alphabet()]);
                let back = self.chi_inverse(&self.chi(&x))?;
                self.check_eq(&mut rep, "chi.left_inverse", name.clone(), &self.lin2(&back), &self.lin2(&x));
                let back = self.chi_tilde_inverse(&self.chi_tilde(&x))?;
                self.check_eq(&mut rep, "chi_tilde.left_inverse", name, &self.lin2(&back), &self.lin2(&x));
            }
        }
        Ok(rep)
    }
}
