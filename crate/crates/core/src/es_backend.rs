//! The Ehresmann-Schauenburg algebroid `(A⊗A)^{coH}` of a graded Hopf-Galois
//! extension, realized inside the pair algebra `A⊗A`.

use crate::bialgebroid::{expand, Act, Algebroid, Pattern};
use crate::hopfalg::{GradedExtension, TranslationError};
use crate::ncalg::rewrite::mul_tensors;
use crate::ncalg::{normalize_tensor, parse_tensor, solve, Library, NCPoly, PresentationError, RewriteSystem, Scalar, SparseVec, Tensor, Word};
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EsError {
    #[error(transparent)]
    Translation(#[from] TranslationError),
    #[error("{0} is not in the base algebra")]
    NotInBase(String),
}

#[derive(Debug)]
pub struct EsAlgebroid {
    pub name: String,
    pub ext: GradedExtension,
    /// (key, printed symbol, element)
    pub gens: Vec<(String, String, Tensor)>,
    /// Free algebra on the generator keys, for writing table entries.
    pub symbols: RewriteSystem,
    counit_cache: RwLock<HashMap<Word, NCPoly>>,
}

impl EsAlgebroid {
    pub fn load(lib: &mut Library, name: &str) -> Result<Self, PresentationError> {
        let sec = lib.section("bialgebroid", name)?;
        if sec.get("kind") != Some("es") {
            return Err(sec.invalid("not an Ehresmann-Schauenburg presentation"));
        }
        let ext = GradedExtension::load(lib, "bialgebroid", name)?.with_bound(8);
        let sys = ext.total.system.clone();
        let mut gens = Vec::new();
        for (key, text) in sec.with_prefix("generator") {
            let t = parse_tensor(text, &[&sys, &sys]).map_err(|e| sec.expr_err(&format!("generator.{key}"), e))?;
            let sym = sec.get(&format!("symbol.{key}")).unwrap_or(key).to_string();
            gens.push((key.to_string(), sym, t));
        }
        let symbols = RewriteSystem::free(gens.iter().map(|g| g.0.clone()).collect());
        Ok(EsAlgebroid {
            name: name.to_string(),
            ext,
            gens,
            symbols,
            counit_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn sys(&self) -> &RewriteSystem {
        &self.ext.total.system
    }

    pub fn weight(&self, w: &Word) -> i64 {
        self.ext.weight(w)
    }

    /// Generator by key or printed symbol.
    pub fn gen(&self, name: &str) -> Tensor {
        self.gens
            .iter()
            .find(|g| g.0 == name || g.1 == name)
            .map(|g| g.2.clone())
            .unwrap_or_else(|| panic!("unknown generator {name}"))
    }

    /// Diagonal weight of every term, if homogeneous.
    pub fn diagonal_weight(&self, h: &Tensor) -> Option<i64> {
        let mut ws = h.terms().map(|(k, _)| k.iter().map(|w| self.weight(w)).sum::<i64>());
        let first = ws.next().unwrap_or(0);
        ws.all(|w| w == first).then_some(first)
    }

    /// `ε(a⊗a') = aa'` in B, or an error when the product leaves B.
    pub fn es_counit(&self, h: &Tensor) -> Result<NCPoly, EsError> {
        let s = self.sys();
        let mut amb = NCPoly::zero();
        for (k, c) in h.terms() {
            let mut w = Vec::new();
            for x in k {
                w.extend_from_slice(&x.0);
            }
            amb.add_scaled(&s.normalize_word(&Word(w)), c);
        }
        let mut out = NCPoly::zero();
        for (w, c) in amb.terms() {
            let p = self.base_preimage(w).ok_or_else(|| EsError::NotInBase(amb.to_text(s.alphabet())))?;
            out.add_scaled(&p, c);
        }
        Ok(self.ext.base.base.system.normalize(&out))
    }

    fn base_preimage(&self, w: &Word) -> Option<NCPoly> {
        if let Some(p) = self.counit_cache.read().unwrap().get(w) {
            return Some(p.clone());
        }
        if self.weight(w) != 0 {
            return None;
        }
        let p = self.ext.base.preimage(&NCPoly::word(w.clone()))?;
        self.counit_cache.write().unwrap().insert(w.clone(), p.clone());
        Some(p)
    }

    /// `Δ(a⊗a') = (a⊗u)⊗(v⊗a')` with `τ(t^{w(a)}) = Σu⊗v`.
    pub fn es_delta(&self, h: &Tensor) -> Result<Tensor, EsError> {
        let mut acc = Tensor::zero(4);
        for (k, c) in h.terms() {
            let tau = self.ext.tau(self.weight(&k[0]))?;
            for (uv, cu) in tau.terms() {
                acc.add_term(vec![k[0].clone(), uv[0].clone(), uv[1].clone(), k[1].clone()], c * cu);
            }
        }
        Ok(self.normalize(&acc))
    }

    /// `(a⊗a')₊⊗(a⊗a')₋ = (u⊗a')⊗(v⊗a)` with `τ(t^{w(a')}) = Σu⊗v`.
    pub fn es_translation(&self, h: &Tensor) -> Result<Tensor, EsError> {
        let mut acc = Tensor::zero(4);
        for (k, c) in h.terms() {
            let tau = self.ext.tau(self.weight(&k[1]))?;
            for (uv, cu) in tau.terms() {
                acc.add_term(vec![uv[0].clone(), k[1].clone(), uv[1].clone(), k[0].clone()], c * cu);
            }
        }
        Ok(self.normalize(&acc))
    }

    /// Element of the n-fold tensor power from a table expression in the
    /// generator keys, e.g. `q^2*beta@beta + deltat@betat - 1@beta`.
    pub fn eval(&self, text: &str) -> Tensor {
        let slots = text.split('@').count().max(1);
        let sys: Vec<&RewriteSystem> = vec![&self.symbols; slots];
        let t = parse_tensor(text, &sys).unwrap_or_else(|e| panic!("{text}: {e}"));
        self.eval_symbolic(&t)
    }

    /// Substitutes generator products for words in the symbol alphabet.
    pub fn eval_symbolic(&self, t: &Tensor) -> Tensor {
        let mut acc = Tensor::zero(2 * t.arity());
        for (k, c) in t.terms() {
            let mut term = Tensor::unit(0);
            for w in k {
                let mut e = self.one();
                for &l in &w.0 {
                    e = self.mul(&e, &self.gens[l as usize].2);
                }
                term = term.otimes(&e);
            }
            acc.add_scaled(&term, c);
        }
        acc
    }

    /// Writes an n-fold tensor in the generators, using monomials of length
    /// up to `lens[i]` in slot `i`, when possible. The result is over the
    /// symbol alphabet.
    pub fn express(&self, t: &Tensor, pat: &Pattern, lens: &[usize]) -> Option<Tensor> {
        let n = lens.len();
        let mut monos: Vec<Vec<Word>> = vec![vec![Word::empty()]];
        let g = self.gens.len() as u16;
        for len in 1..=lens.iter().copied().max().unwrap_or(0) {
            let prev: Vec<Word> = monos[len - 1].clone();
            monos.push(prev.iter().flat_map(|w| (0..g).map(move |l| w.concat(&Word::letter(l)))).collect());
        }
        let slot_monos: Vec<Vec<Word>> = lens.iter().map(|&l| monos[..=l].concat()).collect();
        let mut keys: Vec<Vec<Word>> = vec![vec![]];
        for sm in &slot_monos {
            keys = keys.iter().flat_map(|k| sm.iter().map(move |m| [k.clone(), vec![m.clone()]].concat())).collect();
        }
        let cols: Vec<SparseVec<Vec<Word>>> = keys
            .iter()
            .map(|k| {
                let e = self.eval_symbolic(&Tensor::simple(k.clone(), Scalar::one()));
                self.linearize(&e, pat).as_map().clone()
            })
            .collect();
        let rhs: SparseVec<Vec<Word>> = self.linearize(t, pat).as_map().clone();
        let x = solve(&cols, &rhs).particular?;
        let mut out: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
        for (k, c) in keys.into_iter().zip(x) {
            if !c.is_zero() {
                out.insert(k, c);
            }
        }
        Some(Tensor::from_map(n, out))
    }

    /// Prints a tensor over the symbol alphabet with the generator symbols.
    pub fn symbol_text(&self, t: &Tensor) -> String {
        let sym: Vec<String> = self.gens.iter().map(|g| g.1.clone()).collect();
        t.to_text(&vec![&sym[..]; t.arity()])
    }

    /// Sum of words of the n-fold representative, components multiplied
    /// along the chains of `pat`.
    fn chains(&self, pat: &Pattern) -> Vec<Vec<usize>> {
        let n = pat.slots;
        let mut next: Vec<Option<usize>> = vec![None; 2 * n];
        let mut has_prev = vec![false; 2 * n];
        for &(i, act, j) in &pat.pairs {
            let from = match act {
                Act::Tri => 2 * i + 1,
                Act::Blk => 2 * i,
            };
            assert!(next[from].is_none(), "component {from} balanced twice");
            next[from] = Some(2 * j);
            has_prev[2 * j] = true;
        }
        let mut out = Vec::new();
        for head in 0..2 * n {
            if has_prev[head] {
                continue;
            }
            let mut c = vec![head];
            while let Some(nx) = next[*c.last().unwrap()] {
                c.push(nx);
            }
            out.push(c);
        }
        out
    }
}

impl Algebroid for EsAlgebroid {
    fn name(&self) -> &str {
        &self.name
    }

    fn width(&self) -> usize {
        2
    }

    fn base(&self) -> &RewriteSystem {
        &self.ext.base.base.system
    }

    fn alphabet(&self) -> &[String] {
        self.sys().alphabet()
    }

    fn normalize(&self, h: &Tensor) -> Tensor {
        let s = self.sys();
        let systems = vec![s; h.arity()];
        normalize_tensor(h, &systems)
    }

    fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let s = self.sys();
        let mut acc = Tensor::zero(2);
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let l = Tensor::simple(vec![ka[0].concat(&kb[0]), kb[1].concat(&ka[1])], ca * cb);
                acc.add(&l);
            }
        }
        normalize_tensor(&acc, &[s, s])
    }

    fn source(&self, r: &NCPoly) -> Tensor {
        Tensor::from_polys(&[self.ext.base.apply(r), NCPoly::one()])
    }

    fn target(&self, r: &NCPoly) -> Tensor {
        Tensor::from_polys(&[NCPoly::one(), self.ext.base.apply(r)])
    }

    fn delta(&self, h: &Tensor) -> Tensor {
        self.es_delta(h).expect("weight within translation range")
    }

    fn counit(&self, h: &Tensor) -> NCPoly {
        self.es_counit(h).expect("coinvariant element")
    }

    fn translation(&self, h: &Tensor) -> Tensor {
        self.es_translation(h).expect("weight within translation range")
    }

    fn generators(&self) -> Vec<(String, Tensor)> {
        self.gens.iter().map(|g| (g.1.clone(), g.2.clone())).collect()
    }

    /// Weight-zero pairs of normal words, each of length ≤ `degree`.
    fn basis(&self, degree: usize) -> Vec<Tensor> {
        let words = self.sys().graded_basis(degree);
        let mut out = Vec::new();
        for u in &words {
            for v in &words {
                if self.weight(u) + self.weight(v) == 0 {
                    out.push(Tensor::simple(vec![u.clone(), v.clone()], Scalar::one()));
                }
            }
        }
        out.sort_by_key(|t| self.degree(t));
        out
    }

    fn degree(&self, h: &Tensor) -> usize {
        h.terms().map(|(k, _)| k[0].len().max(k[1].len())).max().unwrap_or(0)
    }

    /// `x⊗x' ⊗ y⊗y' ↦ x ⊗ x'y ⊗ y'` for ◁⊗▷ and `xy ⊗ x' ⊗ y'` for ◂⊗▷,
    /// composed along the pattern.
    fn linearize(&self, t: &Tensor, pat: &Pattern) -> Tensor {
        assert_eq!(t.arity(), 2 * pat.slots);
        let s = self.sys();
        let chains = self.chains(pat);
        let mut acc = Tensor::zero(chains.len());
        for (k, c) in t.terms() {
            let key: Vec<Word> = chains
                .iter()
                .map(|ch| {
                    let mut w = Vec::new();
                    for &i in ch {
                        w.extend_from_slice(&k[i].0);
                    }
                    Word(w)
                })
                .collect();
            acc.add_term(key, c.clone());
        }
        let systems = vec![s; chains.len()];
        normalize_tensor(&acc, &systems)
    }

    fn text(&self, h: &Tensor) -> String {
        let a = self.alphabet();
        h.to_text(&vec![a; h.arity()])
    }
}

/// `h₁·h₂` for each simple term of a two-fold representative.
pub fn contract<A: Algebroid + ?Sized>(alg: &A, t: &Tensor) -> Tensor {
    expand(alg, t, alg.width(), |e| alg.mul(&e[0], &e[1]))
}

/// Ambient product of two-slot tensors, slotwise.
pub fn ambient_mul(es: &EsAlgebroid, a: &Tensor, b: &Tensor) -> Tensor {
    let s = es.sys();
    mul_tensors(a, b, &[s, s])
}
