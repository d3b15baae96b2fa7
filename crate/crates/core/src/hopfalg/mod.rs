//! Hopf algebras by presentation, graded coinvariants, subalgebras given by
//! generator images, and Hopf-Galois translation maps for gradings.

mod extension;

pub use extension::{GradedExtension, TranslationError};

use crate::ncalg::linalg::{kernel, solve, SparseVec};
use crate::ncalg::presentation::{AlgebraDef, Library, PresentationError, Section};
use crate::ncalg::rewrite::mul_tensors;
use crate::ncalg::{parse_poly, parse_tensor, NCPoly, RewriteSystem, Scalar, Tensor, Word};
use crate::report::Report;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// A Hopf algebra with invertible antipode, given on generators.
#[derive(Debug)]
pub struct HopfAlgebra {
    pub name: String,
    pub alg: AlgebraDef,
    delta: Vec<Tensor>,
    counit: Vec<Scalar>,
    antipode: Vec<NCPoly>,
    antipode_inv: Vec<NCPoly>,
    delta_cache: RwLock<HashMap<Word, Tensor>>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra::new(
            &self.name,
            self.alg.clone(),
            self.delta.clone(),
            self.counit.clone(),
            self.antipode.clone(),
            self.antipode_inv.clone(),
        )
    }
}

impl HopfAlgebra {
    pub fn new(
        name: &str,
        alg: AlgebraDef,
        delta: Vec<Tensor>,
        counit: Vec<Scalar>,
        antipode: Vec<NCPoly>,
        antipode_inv: Vec<NCPoly>,
    ) -> Self {
        let n = alg.system.alphabet().len();
        assert!(delta.len() == n && counit.len() == n && antipode.len() == n && antipode_inv.len() == n);
        HopfAlgebra {
            name: name.to_string(),
            alg,
            delta,
            counit,
            antipode,
            antipode_inv,
            delta_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn load(lib: &mut Library, name: &str) -> Result<Self, PresentationError> {
        let sec = lib.section("hopf", name)?;
        let alg = lib.algebra(sec.require("algebra")?)?;
        Self::from_section(&sec, alg)
    }

    pub fn from_section(sec: &Section, alg: AlgebraDef) -> Result<Self, PresentationError> {
        let sys = alg.system.clone();
        let gens: Vec<String> = sys.alphabet().to_vec();
        let mut delta = Vec::new();
        let mut counit = Vec::new();
        let mut antipode = Vec::new();
        let mut antipode_inv = Vec::new();
        for g in &gens {
            let key = format!("delta.{g}");
            let d = parse_tensor(sec.require(&key)?, &[&sys, &sys]).map_err(|e| sec.expr_err(&key, e))?;
            if d.arity() != 2 {
                return Err(sec.invalid(format!("{key} must have two tensor slots")));
            }
            delta.push(d);
            let key = format!("counit.{g}");
            let c = parse_poly(sec.require(&key)?, &sys).map_err(|e| sec.expr_err(&key, e))?;
            counit.push(c.as_scalar().ok_or_else(|| sec.invalid(format!("{key} is not a scalar")))?);
            for (pre, out) in [("antipode", &mut antipode), ("antipode_inv", &mut antipode_inv)] {
                let key = format!("{pre}.{g}");
                out.push(parse_poly(sec.require(&key)?, &sys).map_err(|e| sec.expr_err(&key, e))?);
            }
        }
        Ok(Self::new(&sec.name, alg, delta, counit, antipode, antipode_inv))
    }

    pub fn sys(&self) -> &RewriteSystem {
        &self.alg.system
    }

    pub fn gen(&self, name: &str) -> NCPoly {
        self.sys().gen(name)
    }

    pub fn parse(&self, text: &str) -> NCPoly {
        parse_poly(text, self.sys()).unwrap_or_else(|e| panic!("{text}: {e}"))
    }

    /// Copy with one generator's counit replaced.
    pub fn with_counit(&self, gen: &str, value: Scalar) -> Self {
        let mut c = self.counit.clone();
        c[self.sys().letter(gen).expect("generator") as usize] = value;
        HopfAlgebra::new(&self.name, self.alg.clone(), self.delta.clone(), c, self.antipode.clone(), self.antipode_inv.clone())
    }

    /// Copy with one generator's coproduct replaced.
    pub fn with_delta(&self, gen: &str, value: Tensor) -> Self {
        let mut d = self.delta.clone();
        d[self.sys().letter(gen).expect("generator") as usize] = value;
        HopfAlgebra::new(&self.name, self.alg.clone(), d, self.counit.clone(), self.antipode.clone(), self.antipode_inv.clone())
    }

    /// Multiplicative extension of the generator coproducts along a word,
    /// without first reducing the word.
    pub fn delta_word(&self, w: &Word) -> Tensor {
        if let Some(t) = self.delta_cache.read().unwrap().get(w) {
            return t.clone();
        }
        let s = self.sys();
        let mut acc = Tensor::unit(2);
        for &l in &w.0 {
            acc = mul_tensors(&acc, &self.delta[l as usize], &[s, s]);
        }
        self.delta_cache.write().unwrap().insert(w.clone(), acc.clone());
        acc
    }

    pub fn delta(&self, h: &NCPoly) -> Tensor {
        let mut acc = Tensor::zero(2);
        for (w, c) in h.terms() {
            acc.add_scaled(&self.delta_word(w), c);
        }
        acc
    }

    /// Iterated coproduct into `k` slots.
    pub fn delta_k(&self, h: &NCPoly, k: usize) -> Tensor {
        assert!(k >= 1);
        let mut t = Tensor::from_poly(h);
        for i in 1..k {
            t = t.map_block(i - 1, 1, 2, |w| self.delta_word(&w[0]));
        }
        t
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        let mut acc = Scalar::one();
        for &l in &w.0 {
            acc = &acc * &self.counit[l as usize];
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn counit(&self, h: &NCPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in h.terms() {
            acc = &acc + &(c * &self.counit_word(w));
        }
        acc
    }

    fn anti(&self, table: &[NCPoly], w: &Word) -> NCPoly {
        let mut acc = NCPoly::one();
        for &l in w.0.iter().rev() {
            acc = self.sys().mul(&acc, &table[l as usize]);
        }
        acc
    }

    pub fn antipode_word(&self, w: &Word) -> NCPoly {
        self.anti(&self.antipode, w)
    }

    pub fn antipode(&self, h: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in h.terms() {
            acc.add_scaled(&self.antipode_word(w), c);
        }
        acc
    }

    pub fn antipode_inv(&self, h: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in h.terms() {
            acc.add_scaled(&self.anti(&self.antipode_inv, w), c);
        }
        acc
    }

    /// Applies `f` to slot `i` of a tensor whose slots lie in this algebra.
    pub fn map_slot<F: FnMut(&Word) -> NCPoly>(&self, t: &Tensor, i: usize, mut f: F) -> Tensor {
        t.map_block(i, 1, 1, |w| Tensor::from_poly(&f(&w[0])))
    }

    /// Multiplies the slots of a tensor together in order.
    pub fn multiply_out(&self, t: &Tensor) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (k, c) in t.terms() {
            let mut w = Word::empty();
            for s in k {
                w = w.concat(s);
            }
            acc.add_scaled(&self.sys().normalize_word(&w), c);
        }
        acc
    }

    /// Word of the grouplike `g^n` when the algebra is generated by a grouplike
    /// of weight one and its inverse.
    pub fn grouplike_power(&self, n: i64) -> Word {
        let ws = self.alg.weights.as_ref().expect("graded Hopf algebra");
        let pos = ws.iter().position(|&w| w == 1).expect("weight-one generator") as u16;
        let neg = ws.iter().position(|&w| w == -1).expect("weight minus one generator") as u16;
        Word(vec![if n >= 0 { pos } else { neg }; n.unsigned_abs() as usize])
    }

    pub fn text(&self, p: &NCPoly) -> String {
        p.to_text(self.sys().alphabet())
    }

    pub fn tensor_text(&self, t: &Tensor) -> String {
        t.to_text(&[self.sys().alphabet()])
    }
}

fn diff_witness<T: PartialEq>(a: &T, b: &T, show: impl FnOnce() -> String) -> Option<String> {
    (a != b).then(show)
}

/// Checks coassociativity, counit and antipode axioms and `S∘S⁻¹ = id` on
/// generators, and that all structure maps respect the relations.
pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    let mut rep = Report::new(format!("hopf {}", h.name));
    let s = h.sys();
    for (i, g) in s.alphabet().iter().enumerate() {
        let gw = Word(vec![i as u16]);
        let gp = NCPoly::word(gw.clone());
        let d = h.delta_word(&gw);
        let left = d.map_block(0, 1, 2, |w| h.delta_word(&w[0]));
        let right = d.map_block(1, 1, 2, |w| h.delta_word(&w[0]));
        rep.check("coassociativity", g, diff_witness(&left, &right, || h.tensor_text(&left.minus(&right))));

        let mut l = NCPoly::zero();
        let mut r = NCPoly::zero();
        let mut sl = NCPoly::zero();
        let mut sr = NCPoly::zero();
        let mut il = NCPoly::zero();
        for (k, c) in d.terms() {
            l.add_scaled(&NCPoly::word(k[1].clone()), &(c * &h.counit_word(&k[0])));
            r.add_scaled(&NCPoly::word(k[0].clone()), &(c * &h.counit_word(&k[1])));
            sl.add_scaled(&s.mul(&h.antipode_word(&k[0]), &NCPoly::word(k[1].clone())), c);
            sr.add_scaled(&s.mul(&NCPoly::word(k[0].clone()), &h.antipode_word(&k[1])), c);
            il.add_scaled(&s.mul(&h.antipode_inv(&NCPoly::word(k[1].clone())), &NCPoly::word(k[0].clone())), c);
        }
        rep.check("counit.left", g, diff_witness(&l, &gp, || h.text(&(&l - &gp))));
        rep.check("counit.right", g, diff_witness(&r, &gp, || h.text(&(&r - &gp))));
        let eps = NCPoly::constant(h.counit_word(&gw));
        rep.check("antipode.left", g, diff_witness(&sl, &eps, || h.text(&(&sl - &eps))));
        rep.check("antipode.right", g, diff_witness(&sr, &eps, || h.text(&(&sr - &eps))));
        rep.check("antipode_inv.left", g, diff_witness(&il, &eps, || h.text(&(&il - &eps))));
        let ss = h.antipode(&h.antipode_inv(&gp));
        let ss2 = h.antipode_inv(&h.antipode(&gp));
        rep.check("antipode.inverse", g, diff_witness(&ss, &gp, || h.text(&(&ss - &gp))));
        rep.check("antipode_inv.inverse", g, diff_witness(&ss2, &gp, || h.text(&(&ss2 - &gp))));
    }
    for r in s.rules() {
        let name = NCPoly::word(r.lhs.clone()).to_text(s.alphabet());
        let dl = h.delta_word(&r.lhs);
        let dr = h.delta(&r.rhs);
        rep.check("relation.delta", &name, diff_witness(&dl, &dr, || h.tensor_text(&dl.minus(&dr))));
        let el = h.counit_word(&r.lhs);
        let er = h.counit(&r.rhs);
        rep.check("relation.counit", &name, diff_witness(&el, &er, || format!("{}", &el - &er)));
        let sl = h.antipode_word(&r.lhs);
        let sr = h.antipode(&r.rhs);
        rep.check("relation.antipode", &name, diff_witness(&sl, &sr, || h.text(&(&sl - &sr))));
        let il = h.anti(&h.antipode_inv, &r.lhs);
        let ir = h.antipode_inv(&r.rhs);
        rep.check("relation.antipode_inv", &name, diff_witness(&il, &ir, || h.text(&(&il - &ir))));
    }
    rep
}

/// Weight-zero part of the degree-≤`degree` truncation of a graded algebra.
pub fn coinvariants(alg: &AlgebraDef, degree: usize) -> Vec<NCPoly> {
    alg.system
        .graded_basis(degree)
        .into_iter()
        .filter(|w| alg.word_weight(w) == 0)
        .map(NCPoly::word)
        .collect()
}

/// Coinvariants for a general right coaction `rho` (word ↦ A⊗H tensor),
/// computed as the kernel of `ρ − id⊗1` on the degree-≤`degree` basis.
pub fn coinvariants_by_coaction<F>(alg: &AlgebraDef, degree: usize, rho: F) -> Vec<NCPoly>
where
    F: Fn(&Word) -> Tensor,
{
    let basis = alg.system.graded_basis(degree);
    let images: Vec<SparseVec<Vec<Word>>> = basis
        .iter()
        .map(|w| {
            let mut t = rho(w);
            t.sub(&Tensor::simple(vec![w.clone(), Word::empty()], Scalar::one()));
            t.as_map().clone()
        })
        .collect();
    kernel(&images)
        .into_iter()
        .map(|v| {
            let mut p = NCPoly::zero();
            for (i, c) in v {
                p.add_term(basis[i].clone(), c);
            }
            p
        })
        .collect()
}

/// The grading coaction `w ↦ w ⊗ g^{weight(w)}` of a graded algebra.
pub fn weight_coaction<'a>(alg: &'a AlgebraDef, hopf: &'a HopfAlgebra) -> impl Fn(&Word) -> Tensor + 'a {
    move |w| Tensor::simple(vec![w.clone(), hopf.grouplike_power(alg.word_weight(w))], Scalar::one())
}

/// A subalgebra given by generators of a presented algebra and their images
/// in an ambient algebra.
#[derive(Debug)]
pub struct Embedding {
    pub base: AlgebraDef,
    pub ambient: AlgebraDef,
    pub images: Vec<NCPoly>,
    preimage_cache: RwLock<HashMap<usize, Vec<(Word, SparseVec<Word>)>>>,
}

impl Clone for Embedding {
    fn clone(&self) -> Self {
        Embedding::new(self.base.clone(), self.ambient.clone(), self.images.clone())
    }
}

impl Embedding {
    pub fn new(base: AlgebraDef, ambient: AlgebraDef, images: Vec<NCPoly>) -> Self {
        Embedding {
            base,
            ambient,
            images,
            preimage_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn load(lib: &mut Library, name: &str) -> Result<Self, PresentationError> {
        let sec = lib.section("embedding", name)?;
        let base = lib.algebra(name)?;
        let ambient = lib.algebra(sec.require("ambient")?)?;
        let mut images = Vec::new();
        for g in base.system.alphabet() {
            let key = format!("image.{g}");
            images.push(parse_poly(sec.require(&key)?, &ambient.system).map_err(|e| sec.expr_err(&key, e))?);
        }
        Ok(Embedding::new(base, ambient, images))
    }

    pub fn apply_word(&self, w: &Word) -> NCPoly {
        let mut acc = NCPoly::one();
        for &l in &w.0 {
            acc = self.ambient.system.mul(&acc, &self.images[l as usize]);
        }
        acc
    }

    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in p.terms() {
            acc.add_scaled(&self.apply_word(w), c);
        }
        acc
    }

    pub fn gen_image(&self, name: &str) -> NCPoly {
        self.images[self.base.system.letter(name).expect("base generator") as usize].clone()
    }

    /// Each base relation holds for the images.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new(format!("embedding {}", self.base.name));
        for r in self.base.system.rules() {
            let name = NCPoly::word(r.lhs.clone()).to_text(self.base.system.alphabet());
            let l = self.apply_word(&r.lhs);
            let rr = self.apply(&r.rhs);
            rep.check(
                "relation",
                name,
                (l != rr).then(|| (&l - &rr).to_text(self.ambient.system.alphabet())),
            );
        }
        rep
    }

    fn basis_images(&self, len: usize) -> Vec<(Word, SparseVec<Word>)> {
        if let Some(v) = self.preimage_cache.read().unwrap().get(&len) {
            return v.clone();
        }
        let v: Vec<(Word, SparseVec<Word>)> = self
            .base
            .system
            .graded_basis(len)
            .into_iter()
            .map(|w| {
                let img = self.apply_word(&w).as_map().clone();
                (w, img)
            })
            .collect();
        self.preimage_cache.write().unwrap().insert(len, v.clone());
        v
    }

    /// Expresses an ambient element in the base generators, if it lies in the
    /// image of the degree-truncated base.
    pub fn preimage(&self, p: &NCPoly) -> Option<NCPoly> {
        if p.is_zero() {
            return Some(NCPoly::zero());
        }
        let min_deg = self.images.iter().map(|i| i.terms().map(|(w, _)| w.len()).min().unwrap_or(0)).min().unwrap_or(1).max(1);
        let len = p.degree().div_ceil(min_deg);
        let basis = self.basis_images(len);
        let cols: Vec<SparseVec<Word>> = basis.iter().map(|(_, v)| v.clone()).collect();
        let sol = solve(&cols, p.as_map());
        let x = sol.particular?;
        let mut out = NCPoly::zero();
        for ((w, _), c) in basis.iter().zip(x) {
            out.add_term(w.clone(), c);
        }
        Some(out)
    }
}

/// Shared handles used by the backends.
pub type HopfRef = Arc<HopfAlgebra>;
