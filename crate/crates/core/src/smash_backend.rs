//! Scalar extension algebroids `A#H` for braided commutative Yetter-Drinfel'd
//! algebras, and surjections `A#G → A#H`.

use crate::bialgebroid::{delta_at, translation_at, Act, Algebroid, Pattern};
use crate::hopfalg::HopfAlgebra;
use crate::ncalg::rewrite::mul_tensors;
use crate::ncalg::{
    normalize_tensor, parse_poly, parse_tensor, AlgebraDef, Letter, Library, NCPoly, PresentationError, RewriteSystem, Rule,
    Scalar, Span, Tensor, Word,
};
use crate::report::Report;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// An algebra `A` with a left `H`-action and right `H`-coaction on generators.
#[derive(Debug)]
pub struct YdAlgebra {
    pub algebra: AlgebraDef,
    pub hopf: Arc<HopfAlgebra>,
    /// `action[h][y] = h·y`
    pub action: Vec<Vec<NCPoly>>,
    /// `coaction[y] = y₍₀₎ ⊗ y₍₁₎`
    pub coaction: Vec<Tensor>,
    act_cache: RwLock<HashMap<(Word, Word), NCPoly>>,
}

impl Clone for YdAlgebra {
    fn clone(&self) -> Self {
        YdAlgebra::new(self.algebra.clone(), self.hopf.clone(), self.action.clone(), self.coaction.clone())
    }
}

impl YdAlgebra {
    pub fn new(algebra: AlgebraDef, hopf: Arc<HopfAlgebra>, action: Vec<Vec<NCPoly>>, coaction: Vec<Tensor>) -> Self {
        YdAlgebra {
            algebra,
            hopf,
            action,
            coaction,
            act_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Reads `base`, `hopf`, `action.<h>.<y>` and `coaction.<y>`; missing
    /// actions default to `ε(h)y`.
    pub fn load(lib: &mut Library, kind: &str, name: &str) -> Result<Self, PresentationError> {
        let sec = lib.section(kind, name)?;
        let algebra = lib.algebra(sec.require("base")?)?;
        let hopf = Arc::new(HopfAlgebra::load(lib, sec.require("hopf")?)?);
        let a = algebra.system.clone();
        let h = hopf.sys();
        let mut action = Vec::new();
        for (hi, hn) in h.alphabet().iter().enumerate() {
            let eps = hopf.counit(&NCPoly::letter(hi as Letter));
            let mut row = Vec::new();
            for (yi, yn) in a.alphabet().iter().enumerate() {
                let key = format!("action.{hn}.{yn}");
                row.push(match sec.get(&key) {
                    Some(v) => parse_poly(v, &a).map_err(|e| sec.expr_err(&key, e))?,
                    None => NCPoly::letter(yi as Letter).scale(&eps),
                });
            }
            action.push(row);
        }
        let mut coaction = Vec::new();
        for (yi, yn) in a.alphabet().iter().enumerate() {
            let key = format!("coaction.{yn}");
            coaction.push(match sec.get(&key) {
                Some(v) => parse_tensor(v, &[&a, h]).map_err(|e| sec.expr_err(&key, e))?,
                None => Tensor::simple(vec![Word::letter(yi as Letter), Word::empty()], Scalar::one()),
            });
        }
        Ok(YdAlgebra::new(algebra, hopf, action, coaction))
    }

    pub fn a(&self) -> &RewriteSystem {
        &self.algebra.system
    }

    pub fn h(&self) -> &RewriteSystem {
        self.hopf.sys()
    }

    /// Copy with `A` replaced by a different presentation on the same letters.
    pub fn with_algebra(&self, algebra: AlgebraDef) -> Self {
        YdAlgebra::new(algebra, self.hopf.clone(), self.action.clone(), self.coaction.clone())
    }

    /// `h·a` for words, extended by `h·(ab) = (h₍₁₎·a)(h₍₂₎·b)`.
    pub fn act_word(&self, hw: &Word, aw: &Word) -> NCPoly {
        if hw.is_empty() {
            return self.a().normalize_word(aw);
        }
        if aw.is_empty() {
            return NCPoly::constant(self.hopf.counit(&NCPoly::word(hw.clone())));
        }
        let key = (hw.clone(), aw.clone());
        if let Some(p) = self.act_cache.read().unwrap().get(&key) {
            return p.clone();
        }
        let a = self.a();
        let res = if hw.len() > 1 {
            let (first, last) = hw.0.split_at(hw.len() - 1);
            let inner = self.act_word(&Word(last.to_vec()), aw);
            self.act(&NCPoly::word(Word(first.to_vec())), &inner)
        } else if aw.len() == 1 {
            self.action[hw.0[0] as usize][aw.0[0] as usize].clone()
        } else {
            let d = self.hopf.delta(&NCPoly::word(hw.clone()));
            let head = Word(aw.0[..1].to_vec());
            let rest = Word(aw.0[1..].to_vec());
            let mut acc = NCPoly::zero();
            for (k, c) in d.terms() {
                let l = self.act_word(&k[0], &head);
                let r = self.act_word(&k[1], &rest);
                acc.add_scaled(&a.mul(&l, &r), c);
            }
            acc
        };
        let res = a.normalize(&res);
        self.act_cache.write().unwrap().insert(key, res.clone());
        res
    }

    pub fn act(&self, h: &NCPoly, p: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (hw, hc) in h.terms() {
            for (aw, ac) in p.terms() {
                acc.add_scaled(&self.act_word(hw, aw), &(hc * ac));
            }
        }
        acc
    }

    /// `ρ(a) = a₍₀₎ ⊗ a₍₁₎` in `A⊗H`.
    pub fn coact(&self, p: &NCPoly) -> Tensor {
        let (a, h) = (self.a(), self.h());
        let mut acc = Tensor::zero(2);
        for (w, c) in p.terms() {
            let mut t = Tensor::unit(2);
            for &l in &w.0 {
                t = mul_tensors(&t, &self.coaction[l as usize], &[a, h]);
            }
            acc.add_scaled(&t, c);
        }
        acc
    }
}

/// Module, comodule, Yetter-Drinfel'd and braided commutativity laws on
/// generators, words of length ≤ 2 and the defining relations.
pub fn yd_check(yd: &YdAlgebra) -> Report {
    let mut rep = Report::new(format!("yd {}", yd.algebra.name));
    let (a, h) = (yd.a(), yd.h());
    let hn = |w: &Word| NCPoly::word(w.clone()).to_text(h.alphabet());
    let an = |w: &Word| NCPoly::word(w.clone()).to_text(a.alphabet());
    let diff_a = |l: &NCPoly, r: &NCPoly| {
        let d = a.normalize(&(l - r));
        (!d.is_zero()).then(|| d.to_text(a.alphabet()))
    };
    let diff_t = |l: &Tensor, r: &Tensor, sys: &[&RewriteSystem]| {
        let d = normalize_tensor(&l.minus(r), sys);
        (!d.is_zero()).then(|| d.to_text(&sys.iter().map(|s| s.alphabet()).collect::<Vec<_>>()))
    };
    let hl: Vec<Word> = (0..h.alphabet().len()).map(|i| Word::letter(i as Letter)).collect();
    let al: Vec<Word> = (0..a.alphabet().len()).map(|i| Word::letter(i as Letter)).collect();
    let awords: Vec<Word> = a.graded_basis(2).into_iter().filter(|w| !w.is_empty()).collect();

    // H relations act trivially
    for r in h.rules() {
        for y in &al {
            let l = yd.act_word(&r.lhs, y);
            let rr = yd.act(&r.rhs, &NCPoly::word(y.clone()));
            rep.check("module.relation", format!("{}; {}", hn(&r.lhs), an(y)), diff_a(&l, &rr));
        }
    }
    // A relations are preserved by the action and the coaction
    for r in a.rules() {
        for g in &hl {
            let l = yd.act_word(g, &r.lhs);
            let rr = yd.act(&NCPoly::word(g.clone()), &r.rhs);
            rep.check("module_algebra.relation", format!("{}; {}", hn(g), an(&r.lhs)), diff_a(&l, &rr));
        }
        let l = yd.coact(&NCPoly::word(r.lhs.clone()));
        let rr = yd.coact(&r.rhs);
        rep.check("comodule_algebra.relation", an(&r.lhs), diff_t(&l, &rr, &[a, h]));
    }
    for y in &al {
        let rho = yd.coact(&NCPoly::word(y.clone()));
        let lhs = rho.map_block(0, 1, 2, |w| yd.coact(&NCPoly::word(w[0].clone())));
        let rhs = rho.map_block(1, 1, 2, |w| yd.hopf.delta(&NCPoly::word(w[0].clone())));
        rep.check("comodule.coassociative", an(y), diff_t(&lhs, &rhs, &[a, h, h]));
        let mut back = NCPoly::zero();
        for (k, c) in rho.terms() {
            back.add_scaled(&NCPoly::word(k[0].clone()), &(c * &yd.hopf.counit(&NCPoly::word(k[1].clone()))));
        }
        rep.check("comodule.counit", an(y), diff_a(&back, &NCPoly::word(y.clone())));
    }
    // h₍₁₎·m₍₀₎ ⊗ h₍₂₎m₍₁₎ = (h₍₂₎·m)₍₀₎ ⊗ (h₍₂₎·m)₍₁₎h₍₁₎
    for g in &hl {
        let dg = yd.hopf.delta(&NCPoly::word(g.clone()));
        for m in &awords {
            let rho = yd.coact(&NCPoly::word(m.clone()));
            let mut lhs = Tensor::zero(2);
            let mut rhs = Tensor::zero(2);
            for (k, c) in dg.terms() {
                for (km, cm) in rho.terms() {
                    let x = yd.act_word(&k[0], &km[0]);
                    let y = h.normalize_word(&k[1].concat(&km[1]));
                    lhs.add_scaled(&Tensor::from_polys(&[x, y]), &(c * cm));
                }
                let moved = yd.coact(&yd.act_word(&k[1], m));
                for (km, cm) in moved.terms() {
                    let y = h.normalize_word(&km[1].concat(&k[0]));
                    rhs.add_scaled(&Tensor::from_polys(&[NCPoly::word(km[0].clone()), y]), &(c * cm));
                }
            }
            rep.check("yd.compatibility", format!("{}; {}", hn(g), an(m)), diff_t(&lhs, &rhs, &[a, h]));
        }
    }
    // b₍₀₎(b₍₁₎·a) = ab
    for x in &awords {
        for y in &awords {
            let rho = yd.coact(&NCPoly::word(y.clone()));
            let mut lhs = NCPoly::zero();
            for (k, c) in rho.terms() {
                let moved = yd.act_word(&k[1], x);
                lhs.add_scaled(&a.mul(&NCPoly::word(k[0].clone()), &moved), c);
            }
            let rhs = a.normalize_word(&x.concat(y));
            rep.check("braided_commutative", format!("{}, {}", an(x), an(y)), diff_a(&lhs, &rhs));
        }
    }
    rep
}

/// The smash product `A#H` as one rewrite system on the letters of `A`
/// followed by those of `H`, with `h y → (h₍₁₎·y) h₍₂₎`.
#[derive(Debug)]
pub struct SmashAlgebroid {
    pub name: String,
    pub yd: YdAlgebra,
    pub sys: RewriteSystem,
    na: usize,
}

impl SmashAlgebroid {
    pub fn load(lib: &mut Library, name: &str) -> Result<Self, PresentationError> {
        let sec = lib.section("bialgebroid", name)?;
        if sec.get("kind") != Some("smash") {
            return Err(sec.invalid("not a smash presentation"));
        }
        let yd = YdAlgebra::load(lib, "bialgebroid", name)?;
        Self::build(name, yd).map_err(|e| sec.invalid(e))
    }

    /// Builds the smash rewrite system; fails when the commutation rules are
    /// not order-decreasing.
    pub fn build(name: &str, yd: YdAlgebra) -> Result<Self, String> {
        let (a, h) = (yd.a(), yd.h());
        let na = a.alphabet().len();
        let mut alphabet: Vec<String> = a.alphabet().to_vec();
        alphabet.extend(h.alphabet().iter().cloned());
        let mut weights: Vec<u32> = a.order_weights().to_vec();
        weights.extend(h.order_weights().iter().copied());
        let shift = |p: &NCPoly| {
            let mut out = NCPoly::zero();
            for (w, c) in p.terms() {
                out.add_term(Word(w.0.iter().map(|&l| l + na as Letter).collect()), c.clone());
            }
            out
        };
        let mut rules: Vec<Rule> = a.rules().to_vec();
        for r in h.rules() {
            rules.push(Rule {
                lhs: Word(r.lhs.0.iter().map(|&l| l + na as Letter).collect()),
                rhs: shift(&r.rhs),
            });
        }
        for hi in 0..h.alphabet().len() {
            let d = yd.hopf.delta(&NCPoly::letter(hi as Letter));
            for yi in 0..na {
                let mut rhs = NCPoly::zero();
                for (k, c) in d.terms() {
                    let moved = yd.act_word(&k[0], &Word::letter(yi as Letter));
                    for (w, cw) in moved.terms() {
                        let g = shift(&NCPoly::word(k[1].clone()));
                        for (gw, cg) in g.terms() {
                            rhs.add_term(w.concat(gw), &(c * cw) * cg);
                        }
                    }
                }
                rules.push(Rule {
                    lhs: Word(vec![(na + hi) as Letter, yi as Letter]),
                    rhs,
                });
            }
        }
        let sys = RewriteSystem::with_order(alphabet, weights, rules).map_err(|e| e.to_string())?;
        let sys = match h.max_len() {
            Some(m) => sys.with_max_len(m + a.max_len().unwrap_or(4)),
            None => sys,
        };
        Ok(SmashAlgebroid {
            name: name.to_string(),
            yd,
            sys,
            na,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.yd.hopf
    }

    /// Number of letters of `A`; letters of `H` follow.
    pub fn base_letters(&self) -> usize {
        self.na
    }

    pub fn parse(&self, text: &str) -> Tensor {
        Tensor::from_poly(&parse_poly(text, &self.sys).unwrap_or_else(|e| panic!("{text}: {e}")))
    }

    pub fn parse2(&self, text: &str) -> Tensor {
        let n = text.split('@').count();
        let systems = vec![&self.sys; n];
        parse_tensor(text, &systems).unwrap_or_else(|e| panic!("{text}: {e}"))
    }

    pub fn embed_a(&self, p: &NCPoly) -> NCPoly {
        p.clone()
    }

    pub fn embed_h(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_term(self.h_word(w), c.clone());
        }
        out
    }

    fn h_word(&self, w: &Word) -> Word {
        Word(w.0.iter().map(|&l| l + self.na as Letter).collect())
    }

    /// Splits a normal word `a g` into its `A` and `H` parts (in their own
    /// alphabets).
    pub fn split(&self, w: &Word) -> (Word, Word) {
        let k = w.0.iter().position(|&l| l as usize >= self.na).unwrap_or(w.len());
        debug_assert!(w.0[k..].iter().all(|&l| l as usize >= self.na), "normal words are a#g");
        (
            Word(w.0[..k].to_vec()),
            Word(w.0[k..].iter().map(|&l| l - self.na as Letter).collect()),
        )
    }

    /// `a#g` from words in `A` and `H`.
    pub fn join(&self, a: &Word, g: &Word) -> Word {
        a.concat(&self.h_word(g))
    }

    /// `1#S(g)` on an `H` polynomial.
    pub fn antipode(&self, g: &NCPoly) -> NCPoly {
        self.embed_h(&self.hopf().antipode(g))
    }

    fn one_term<F: FnMut(&Word, &Word) -> Tensor>(&self, h: &Tensor, out: usize, mut f: F) -> Tensor {
        let mut acc = Tensor::zero(out);
        for (k, c) in h.terms() {
            let (a, g) = self.split(&k[0]);
            acc.add_scaled(&f(&a, &g), c);
        }
        acc
    }

    /// Moves the `A`-part of slot `j` into slot `i`, for each balanced pair
    /// from the last slot to the first; slot 0 keeps its full element.
    fn push_left(&self, t: &Tensor, pat: &Pattern) -> Tensor {
        let mut cur = t.clone();
        for j in (1..pat.slots).rev() {
            let Some((i, act)) = pat.partner(j) else { continue };
            let mut next = Tensor::zero(pat.slots);
            for (k, c) in cur.terms() {
                let (b, g) = self.split(&k[j]);
                let b = NCPoly::word(b);
                let hi = NCPoly::word(k[i].clone());
                let moved = match act {
                    Act::Tri => self.sys.mul(&self.target(&b).to_poly(), &hi),
                    Act::Blk => self.sys.mul(&hi, &self.source(&b).to_poly()),
                };
                for (w, cw) in moved.terms() {
                    let mut key = k.clone();
                    key[i] = w.clone();
                    key[j] = self.h_word(&g);
                    next.add_term(key, c * cw);
                }
            }
            cur = next;
        }
        cur
    }
}

impl Algebroid for SmashAlgebroid {
    fn name(&self) -> &str {
        &self.name
    }

    fn width(&self) -> usize {
        1
    }

    fn base(&self) -> &RewriteSystem {
        self.yd.a()
    }

    fn alphabet(&self) -> &[String] {
        self.sys.alphabet()
    }

    fn normalize(&self, h: &Tensor) -> Tensor {
        let systems = vec![&self.sys; h.arity()];
        normalize_tensor(h, &systems)
    }

    fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        Tensor::from_poly(&self.sys.mul(&a.to_poly(), &b.to_poly()))
    }

    fn source(&self, r: &NCPoly) -> Tensor {
        Tensor::from_poly(&self.sys.normalize(&self.embed_a(r)))
    }

    /// `t(a) = a₍₀₎ # a₍₁₎`
    fn target(&self, r: &NCPoly) -> Tensor {
        let rho = self.yd.coact(r);
        let mut acc = NCPoly::zero();
        for (k, c) in rho.terms() {
            acc.add_term(self.join(&k[0], &k[1]), c.clone());
        }
        Tensor::from_poly(&self.sys.normalize(&acc))
    }

    /// `Δ(a#g) = (a#g₍₁₎) ⊗ (1#g₍₂₎)`
    fn delta(&self, h: &Tensor) -> Tensor {
        self.one_term(h, 2, |a, g| {
            let d = self.hopf().delta(&NCPoly::word(g.clone()));
            let mut out = Tensor::zero(2);
            for (k, c) in d.terms() {
                out.add_term(vec![self.join(a, &k[0]), self.h_word(&k[1])], c.clone());
            }
            out
        })
    }

    /// `ε(a#g) = ε_H(g)a`
    fn counit(&self, h: &Tensor) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (k, c) in h.terms() {
            let (a, g) = self.split(&k[0]);
            let e = self.hopf().counit(&NCPoly::word(g));
            acc.add_term(a, c * &e);
        }
        self.yd.a().normalize(&acc)
    }

    /// `(a₍₀₎#g₍₂₎) ⊗ (1#S⁻¹(g₍₁₎)a₍₁₎)`
    fn translation(&self, h: &Tensor) -> Tensor {
        let hs = self.yd.h();
        let t = self.one_term(h, 2, |a, g| {
            let d = self.hopf().delta(&NCPoly::word(g.clone()));
            let rho = self.yd.coact(&NCPoly::word(a.clone()));
            let mut out = Tensor::zero(2);
            for (k, c) in d.terms() {
                let sinv = self.hopf().antipode_inv(&NCPoly::word(k[0].clone()));
                for (ka, ca) in rho.terms() {
                    let right = hs.mul(&sinv, &NCPoly::word(ka[1].clone()));
                    let left = NCPoly::word(self.join(&ka[0], &k[1]));
                    out.add_scaled(&Tensor::from_polys(&[left, self.embed_h(&right)]), &(c * ca));
                }
            }
            out
        });
        self.normalize(&t)
    }

    fn generators(&self) -> Vec<(String, Tensor)> {
        (0..self.sys.alphabet().len())
            .map(|i| (self.sys.alphabet()[i].clone(), Tensor::from_poly(&NCPoly::letter(i as Letter))))
            .collect()
    }

    fn basis(&self, degree: usize) -> Vec<Tensor> {
        self.sys
            .graded_basis(degree)
            .into_iter()
            .map(|w| Tensor::simple(vec![w], Scalar::one()))
            .collect()
    }

    fn degree(&self, h: &Tensor) -> usize {
        h.terms().map(|(k, _)| k[0].len()).max().unwrap_or(0)
    }

    /// Slot 0 in `A#H`, later slots reduced to `1#H` by moving their
    /// `A`-parts into their balancing partners.
    fn linearize(&self, t: &Tensor, pat: &Pattern) -> Tensor {
        assert_eq!(t.arity(), pat.slots);
        let t = self.normalize(t);
        self.push_left(&t, pat)
    }

    fn text(&self, h: &Tensor) -> String {
        let a = self.alphabet();
        h.to_text(&vec![a; h.arity()])
    }
}

/// A Hopf algebra surjection `π: G → H` on generators, lifted to
/// `π_#: A#G → A#H`.
#[derive(Debug)]
pub struct SmashSurjection {
    pub domain: SmashAlgebroid,
    pub codomain: SmashAlgebroid,
    /// `π` on the letters of `G`, in `H`.
    pub pi: Vec<NCPoly>,
    /// `τ(h) = h⁽¹⁾ ⊗ h⁽²⁾` for the letters of `H`, as `G⊗G` tensors.
    pub tau: Vec<Tensor>,
}

impl SmashSurjection {
    pub fn load(lib: &mut Library, name: &str) -> Result<Self, PresentationError> {
        let sec = lib.section("surjection", name)?;
        let domain = SmashAlgebroid::load(lib, sec.require("domain")?)?;
        let codomain = SmashAlgebroid::load(lib, sec.require("codomain")?)?;
        let (g, h) = (domain.yd.h(), codomain.yd.h());
        let mut pi = Vec::new();
        for gn in g.alphabet() {
            let key = format!("pi.{gn}");
            pi.push(parse_poly(sec.require(&key)?, h).map_err(|e| sec.expr_err(&key, e))?);
        }
        let mut tau = Vec::new();
        for hn in h.alphabet() {
            let key = format!("translation.{hn}");
            tau.push(parse_tensor(sec.require(&key)?, &[g, g]).map_err(|e| sec.expr_err(&key, e))?);
        }
        Ok(SmashSurjection {
            domain,
            codomain,
            pi,
            tau,
        })
    }

    pub fn g(&self) -> &HopfAlgebra {
        self.domain.hopf()
    }

    pub fn h(&self) -> &HopfAlgebra {
        self.codomain.hopf()
    }

    /// `π` on a `G` polynomial.
    pub fn pi(&self, p: &NCPoly) -> NCPoly {
        let h = self.h().sys();
        let mut acc = NCPoly::zero();
        for (w, c) in p.terms() {
            let img: Vec<NCPoly> = w.0.iter().map(|&l| self.pi[l as usize].clone()).collect();
            acc.add_scaled(&h.product(&img), c);
        }
        acc
    }

    /// `π_#(a#g) = a#π(g)` on each slot of a tensor over `A#G`.
    pub fn pi_hash(&self, t: &Tensor) -> Tensor {
        let n = t.arity();
        let mut acc = Tensor::zero(n);
        for (k, c) in t.terms() {
            let mut term = Tensor::unit(0);
            for w in k {
                let (a, g) = self.domain.split(w);
                let img = self.pi(&NCPoly::word(g));
                let mut p = NCPoly::zero();
                for (hw, hc) in img.terms() {
                    p.add_term(self.codomain.join(&a, hw), hc.clone());
                }
                term = term.otimes(&Tensor::from_poly(&self.codomain.sys.normalize(&p)));
            }
            acc.add_scaled(&term, c);
        }
        acc
    }

    /// `π` is a Hopf map, `π_#` commutes with s, t, Δ, ε, and every letter of
    /// `H` has a preimage.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new("surjection");
        let (g, h) = (self.g(), self.h());
        let hs = h.sys();
        let gname = |w: &Word| NCPoly::word(w.clone()).to_text(g.sys().alphabet());
        let dh = |l: &NCPoly, r: &NCPoly| {
            let d = hs.normalize(&(l - r));
            (!d.is_zero()).then(|| d.to_text(hs.alphabet()))
        };
        for r in g.sys().rules() {
            let l = self.pi(&NCPoly::word(r.lhs.clone()));
            let rr = self.pi(&r.rhs);
            rep.check("pi.relation", gname(&r.lhs), dh(&l, &rr));
        }
        for l in 0..g.sys().alphabet().len() {
            let x = NCPoly::letter(l as Letter);
            let w = Word::letter(l as Letter);
            let lhs = h.delta(&self.pi(&x));
            let gd = g.delta(&x);
            let mut rhs = Tensor::zero(2);
            for (k, c) in gd.terms() {
                let p = Tensor::from_polys(&[self.pi(&NCPoly::word(k[0].clone())), self.pi(&NCPoly::word(k[1].clone()))]);
                rhs.add_scaled(&normalize_tensor(&p, &[hs, hs]), c);
            }
            let d = lhs.minus(&rhs);
            rep.check("pi.delta", gname(&w), (!d.is_zero()).then(|| h.tensor_text(&d)));
            let e = h.counit(&self.pi(&x)) - g.counit(&x);
            rep.check("pi.counit", gname(&w), (!e.is_zero()).then(|| e.to_text()));
        }
        let (dom, cod) = (&self.domain, &self.codomain);
        for (yn, y) in crate::bialgebroid::base_generators(dom) {
            let d = self.pi_hash(&dom.source(&y)).minus(&cod.source(&y));
            rep.check("pi_hash.source", yn.as_str(), (!d.is_zero()).then(|| cod.text(&d)));
            let d = self.pi_hash(&dom.target(&y)).minus(&cod.target(&y));
            rep.check("pi_hash.target", yn.as_str(), (!d.is_zero()).then(|| cod.text(&d)));
        }
        for (n, x) in dom.generators() {
            let l = cod.delta(&self.pi_hash(&x));
            let r = self.pi_hash(&dom.delta(&x));
            rep.check("pi_hash.delta", n.as_str(), crate::bialgebroid::compare(cod, &l, &r, &Pattern::tri2()));
            let e = &cod.counit(&self.pi_hash(&x)) - &dom.counit(&x);
            rep.check("pi_hash.counit", n.as_str(), (!e.is_zero()).then(|| e.to_text(dom.base().alphabet())));
            for (m, y) in dom.generators() {
                let l = self.pi_hash(&dom.mul(&x, &y));
                let r = cod.mul(&self.pi_hash(&x), &self.pi_hash(&y));
                let d = l.minus(&r);
                rep.check("pi_hash.multiplicative", format!("{n}, {m}"), (!d.is_zero()).then(|| cod.text(&d)));
            }
        }
        for (hi, hn) in hs.alphabet().iter().enumerate() {
            let target = NCPoly::letter(hi as Letter);
            let pre = (0..g.sys().alphabet().len()).find(|&l| self.pi(&NCPoly::letter(l as Letter)) == target);
            rep.check(
                "pi.surjective",
                hn.as_str(),
                pre.is_none().then(|| format!("no generator maps to {hn}")),
            );
        }
        rep
    }
}

/// The free Hopf module `𝓗 ⊗_A V` for `V = A^{⊕n} / (relations per summand)`,
/// elements stored as `𝓗`-valued vectors `Σ h_k ⊗ e_k`.
#[derive(Debug)]
pub struct FreeHopfModule<'a> {
    pub alg: &'a SmashAlgebroid,
    /// Per summand, left ideal generators of `A` it is divided by.
    pub relations: Vec<Vec<NCPoly>>,
}

/// An element `Σ h_k ⊗ e_k` of a free module, `h_k` in `A#H`.
pub type ModElem = Vec<NCPoly>;

impl<'a> FreeHopfModule<'a> {
    pub fn new(alg: &'a SmashAlgebroid, relations: Vec<Vec<NCPoly>>) -> Self {
        FreeHopfModule { alg, relations }
    }

    pub fn rank(&self) -> usize {
        self.relations.len()
    }

    /// Reduces `h ⊗ e_k` to `Σ g ⊗ a e_k` with `g ∈ 1#H`, `a` in `A` modulo
    /// the summand relations; output keyed by (H word, summand, A word).
    pub fn linearize(&self, m: &[NCPoly]) -> Tensor {
        let alg = self.alg;
        let mut acc = Tensor::zero(2);
        for (k, p) in m.iter().enumerate() {
            for (w, c) in alg.sys.normalize(p).terms() {
                // a#g = t(a₍₀₎)(1#S(a₍₁₎)g) and t(b) ⊗ e = 1 ⊗ b e
                let (a, g) = alg.split(w);
                let rho = alg.yd.coact(&NCPoly::word(a));
                for (ka, ca) in rho.terms() {
                    let sg = alg.yd.h().mul(&alg.hopf().antipode(&NCPoly::word(ka[1].clone())), &NCPoly::word(g.clone()));
                    let av = self.reduce(k, &NCPoly::word(ka[0].clone()));
                    for (hw, hc) in sg.terms() {
                        for (aw, ac) in av.terms() {
                            let mut key_a = vec![k as Letter];
                            key_a.extend_from_slice(&aw.0);
                            acc.add_term(vec![hw.clone(), Word(key_a)], &(c * ca) * &(hc * ac));
                        }
                    }
                }
            }
        }
        acc
    }

    /// `a` modulo the left ideal of summand `k`, as a normal form.
    pub fn reduce(&self, k: usize, a: &NCPoly) -> NCPoly {
        let asys = self.alg.yd.a();
        let a = asys.normalize(a);
        let rels = &self.relations[k];
        if rels.is_empty() || a.is_zero() {
            return a;
        }
        let deg = a.degree() + rels.iter().map(|r| r.degree()).max().unwrap_or(0);
        let mut span = crate::ncalg::Span::new();
        for w in asys.graded_basis(deg) {
            for r in rels {
                let v = asys.mul(&NCPoly::word(w.clone()), r);
                span.insert(v.as_map().clone());
            }
        }
        NCPoly::from_map(span.reduce(a.as_map()))
    }

    /// `a#g = Σ t(a₍₀₎)(1#S(a₍₁₎)g)`, as pairs `(a₍₀₎, S(a₍₁₎)g)` with `H` in its own alphabet.
    fn detarget(&self, w: &Word) -> Vec<(NCPoly, NCPoly)> {
        let alg = self.alg;
        let (a, g) = alg.split(w);
        alg.yd
            .coact(&NCPoly::word(a))
            .terms()
            .map(|(ka, ca)| {
                let sg = alg.yd.h().mul(&alg.hopf().antipode(&NCPoly::word(ka[1].clone())), &NCPoly::word(g.clone()));
                (NCPoly::word(ka[0].clone()).scale(ca), sg)
            })
            .collect()
    }

    fn single(&self, k: usize, p: NCPoly) -> ModElem {
        let mut v = vec![NCPoly::zero(); self.rank()];
        v[k] = p;
        v
    }

    /// Basis `t(a)(1#g) ⊗ e_k` with `|a| + |g| ≤ degree`, labelled.
    pub fn basis(&self, degree: usize) -> Vec<(String, ModElem)> {
        let alg = self.alg;
        let mut out = Vec::new();
        for k in 0..self.rank() {
            for g in alg.yd.h().graded_basis(degree) {
                for a in alg.yd.a().graded_basis(degree - g.len()) {
                    if self.reduce(k, &NCPoly::word(a.clone())).is_zero() {
                        continue;
                    }
                    let p = alg.sys.mul(&alg.target(&NCPoly::word(a.clone())).to_poly(), &alg.embed_h(&NCPoly::word(g.clone())));
                    let name = format!("{} e{k}", alg.text(&Tensor::from_poly(&p)));
                    out.push((name, self.single(k, p)));
                }
            }
        }
        out
    }

    /// `λ(h⊗v) = h₍₁₎ ⊗ (h₍₂₎⊗v)` as a two-slot `𝓗 ⊗ M` tensor per summand.
    pub fn coaction(&self, m: &[NCPoly]) -> Vec<Tensor> {
        m.iter().map(|p| self.alg.delta(&Tensor::from_poly(p))).collect()
    }

    /// Normal form in `𝓗 ⊗_A M` of `Σ h ⊗ (h'⊗e_k)` given per summand as
    /// two-slot tensors. The first slot becomes `1#H` by passing `t(a₍₀₎)`
    /// into `M` as `s(a₍₀₎)`.
    pub fn linearize_comodule(&self, t: &[Tensor]) -> Tensor {
        let alg = self.alg;
        let mut acc = Tensor::zero(3);
        for (k, tk) in t.iter().enumerate() {
            for (key, c) in alg.normalize(tk).terms() {
                for (a0, sg) in self.detarget(&key[0]) {
                    let inner = alg.sys.mul(&alg.source(&a0).to_poly(), &NCPoly::word(key[1].clone()));
                    let lin = self.linearize(&self.single(k, inner));
                    for (hw, hc) in sg.terms() {
                        for (lk, lc) in lin.terms() {
                            acc.add_term(vec![hw.clone(), lk[0].clone(), lk[1].clone()], &(c * hc) * lc);
                        }
                    }
                }
            }
        }
        acc
    }

    /// `λ(m) − 1⊗m`, linearized.
    pub fn coinvariance_defect(&self, m: &[NCPoly]) -> Tensor {
        let mut lam = self.coaction(m);
        for (k, p) in m.iter().enumerate() {
            lam[k].add_scaled(&Tensor::from_polys(&[NCPoly::one(), p.clone()]), &-Scalar::one());
        }
        self.linearize_comodule(&lam)
    }

    /// `m₊m₋` for `m₊⊗m₋ = ε(m₍₋₁₎₊)m₍₀₎ ⊗ m₍₋₁₎₋`.
    pub fn plus_minus(&self, m: &[NCPoly]) -> ModElem {
        let alg = self.alg;
        m.iter()
            .map(|p| {
                let t = translation_at(alg, &alg.delta(&Tensor::from_poly(p)), 0);
                let mut acc = NCPoly::zero();
                for (k, c) in t.terms() {
                    let s = alg.source(&alg.counit(&Tensor::simple(vec![k[0].clone()], Scalar::one()))).to_poly();
                    let v = alg.sys.mul(&alg.sys.mul(&s, &NCPoly::word(k[2].clone())), &NCPoly::word(k[1].clone()));
                    acc.add_scaled(&v, c);
                }
                acc
            })
            .collect()
    }

    /// `ξ(h⊗c) = c h` on `𝓗_◁ ⊗_A ᶜᵒM`, input per summand as `[h, c_k]`.
    pub fn xi(&self, x: &[Tensor]) -> ModElem {
        let alg = self.alg;
        x.iter()
            .map(|t| {
                let mut acc = NCPoly::zero();
                for (k, c) in t.terms() {
                    acc.add_scaled(&alg.sys.mul(&NCPoly::word(k[1].clone()), &NCPoly::word(k[0].clone())), c);
                }
                acc
            })
            .collect()
    }

    /// `ξ⁻¹(m) = m₍₋₁₎ ⊗ m₍₀₎₊m₍₀₎₋`, per summand as `[h, c_k]`.
    pub fn xi_inverse(&self, m: &[NCPoly]) -> Vec<Tensor> {
        let alg = self.alg;
        m.iter()
            .map(|p| {
                let t = translation_at(alg, &delta_at(alg, &alg.delta(&Tensor::from_poly(p)), 1), 1);
                let mut out = Tensor::zero(2);
                for (k, c) in t.terms() {
                    let s = alg.source(&alg.counit(&Tensor::simple(vec![k[1].clone()], Scalar::one()))).to_poly();
                    let v = alg.sys.mul(&alg.sys.mul(&s, &NCPoly::word(k[3].clone())), &NCPoly::word(k[2].clone()));
                    out.add_scaled(&Tensor::from_polys(&[NCPoly::word(k[0].clone()), v]), c);
                }
                out
            })
            .collect()
    }

    /// Normal form of `h ⊗ c` in `𝓗_◁ ⊗_A ᶜᵒM` through `ᶜᵒM ≅ V`,
    /// `1⊗a e_k ↦ a e_k`; fails on a non-coinvariant leg.
    pub fn linearize_xi_domain(&self, x: &[Tensor]) -> Result<Tensor, String> {
        let alg = self.alg;
        let mut acc = Tensor::zero(2);
        for (k, t) in x.iter().enumerate() {
            for (key, c) in t.terms() {
                let leg = self.linearize(&self.single(k, NCPoly::word(key[1].clone())));
                for (lk, lc) in leg.terms() {
                    if !lk[0].0.is_empty() {
                        return Err(alg.text(&Tensor::from_poly(&NCPoly::word(key[1].clone()))));
                    }
                    let j = lk[1].0[0] as usize;
                    let a = NCPoly::word(Word(lk[1].0[1..].to_vec()));
                    let h = alg.sys.mul(&alg.target(&a).to_poly(), &NCPoly::word(key[0].clone()));
                    acc.add_scaled(&self.linearize(&self.single(j, h)), &(c * lc));
                }
            }
        }
        Ok(acc)
    }

    /// Coinvariant basis elements `1⊗a e_k = t(a)⊗e_k` for `a` in a basis of
    /// `A` modulo the summand relations, up to `degree`.
    pub fn coinvariant_basis(&self, degree: usize) -> Vec<ModElem> {
        let asys = self.alg.yd.a();
        let mut out = Vec::new();
        for k in 0..self.rank() {
            for w in asys.graded_basis(degree) {
                let r = self.reduce(k, &NCPoly::word(w.clone()));
                if r.is_zero() {
                    continue;
                }
                out.push(self.single(k, self.alg.target(&r).to_poly()));
            }
        }
        out
    }

    /// Coinvariants computed as `ker(λ − 1⊗·)` on the degree-truncated basis.
    pub fn coinvariants(&self, degree: usize) -> Vec<ModElem> {
        let basis = self.basis(degree);
        let images: Vec<_> = basis.iter().map(|(_, m)| self.coinvariance_defect(m).as_map().clone()).collect();
        crate::ncalg::kernel(&images)
            .into_iter()
            .map(|k| {
                let mut v = vec![NCPoly::zero(); self.rank()];
                for (i, c) in k {
                    for (j, p) in basis[i].1.iter().enumerate() {
                        v[j].add_scaled(p, &c);
                    }
                }
                v
            })
            .collect()
    }

    /// Fundamental-theorem checks up to `degree`: both composites of `ξ` and
    /// `ξ⁻¹`, `m₊m₋ ∈ ᶜᵒM`, coinvariants equal to `1⊗V`, and the adjoint
    /// action `h₊ c h₋` preserving coinvariants.
    pub fn check_fundamental(&self, degree: usize) -> Report {
        let alg = self.alg;
        let mut rep = Report::new(format!("fundamental {}", alg.name));
        rep.assume("𝓗_◁ is flat over A (free with basis 1#H)");
        let basis = self.basis(degree);
        for (name, m) in &basis {
            let lin = self.linearize(m);
            let inv = self.xi_inverse(m);
            let back = self.linearize(&self.xi(&inv));
            rep.check("fundamental.xi_after_inverse", name, (back != lin).then(|| format!("{back:?}")));
            rep.check("fundamental.inverse_leg", name, self.linearize_xi_domain(&inv).err());
            let pm = self.plus_minus(m);
            let defect = self.coinvariance_defect(&pm);
            rep.check("fundamental.plus_minus", name, (!defect.is_zero()).then(|| format!("{defect:?}")));
        }
        let co = self.coinvariant_basis(degree);
        for h in alg.basis(degree) {
            for c in &co {
                let x: Vec<Tensor> = c.iter().map(|p| Tensor::from_polys(&[h.to_poly(), p.clone()])).collect();
                let name = format!("{} ⊗ {}", alg.text(&h), self.text(c));
                let want = self.linearize_xi_domain(&x).expect("coinvariant legs");
                let got = self.linearize_xi_domain(&self.xi_inverse(&self.xi(&x)));
                rep.check("fundamental.inverse_after_xi", &name, match got {
                    Ok(g) if g == want => None,
                    Ok(g) => Some(format!("{g:?}")),
                    Err(e) => Some(e),
                });
                let mut adj = vec![NCPoly::zero(); self.rank()];
                for (tk, tc) in alg.translation(&h).terms() {
                    for (j, p) in c.iter().enumerate() {
                        let v = alg.sys.mul(&alg.sys.mul(&NCPoly::word(tk[0].clone()), p), &NCPoly::word(tk[1].clone()));
                        adj[j].add_scaled(&v, tc);
                    }
                }
                let defect = self.coinvariance_defect(&adj);
                rep.check("adjoint.coinvariant", &name, (!defect.is_zero()).then(|| self.text(&adj)));
            }
        }
        for d in 0..=degree {
            let mut expected = Span::new();
            for c in self.coinvariant_basis(d) {
                expected.insert(self.linearize(&c).as_map().clone());
            }
            let mut found = Span::new();
            for c in self.coinvariants(d) {
                found.insert(self.linearize(&c).as_map().clone());
            }
            let same = found.dim() == expected.dim() && found.rows().all(|r| expected.contains(r));
            rep.check(
                "fundamental.coinvariants",
                format!("degree {d}"),
                (!same).then(|| format!("dim ker = {}, dim 1⊗V = {}", found.dim(), expected.dim())),
            );
            rep.note(format!("degree {d}: dim coinvariants {}", found.dim()));
        }
        rep
    }

    pub fn text(&self, m: &[NCPoly]) -> String {
        let parts: Vec<_> = m
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| format!("({})⊗e{k}", self.alg.text(&Tensor::from_poly(p))))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
