//! First order differential calculi: the universal calculus of an algebra,
//! the calculus `𝓗⊗_R(𝓗⁺/I)` of a left ideal with its Maurer-Cartan form,
//! the correspondence with calculi on the total space of an
//! Ehresmann-Schauenburg algebroid, and calculi on homogeneous spaces.

use crate::bialgebroid::{delta_at, expand, otimes, translation_at, Algebroid, Pattern};
use crate::es_backend::EsAlgebroid;
use crate::homogeneous::{Homogeneous, HopfKernel, Side};
use crate::ncalg::{kernel, NCPoly, RewriteSystem, Scalar, Span, Tensor, Word};
use crate::report::Report;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CalculusError {
    #[error("{0} does not lie in the kernel of the counit")]
    NotInPlus(String),
}

type Key = Vec<Word>;

fn span_of<'a>(vs: impl IntoIterator<Item = &'a Tensor>) -> Span<Key> {
    let mut s = Span::new();
    for v in vs {
        s.insert(v.as_map().clone());
    }
    s
}

fn echelon(arity: usize, vs: impl IntoIterator<Item = Tensor>) -> Vec<Tensor> {
    let mut s = Span::new();
    for v in vs {
        s.insert(v.as_map().clone());
    }
    s.reduced_basis().into_iter().map(|m| Tensor::from_map(arity, m)).collect()
}

/// `Ω^u = ker(m: B⊗B → B)` on pairs of words of total length ≤ `degree`.
#[derive(Debug)]
pub struct UniversalCalculus<'a> {
    pub sys: &'a RewriteSystem,
    pub degree: usize,
    pub basis: Vec<Tensor>,
}

pub fn universal_calculus(sys: &RewriteSystem, degree: usize) -> UniversalCalculus<'_> {
    let words = sys.graded_basis(degree);
    let mut pairs = Vec::new();
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= degree) {
            pairs.push((u.clone(), v.clone()));
        }
    }
    let images: Vec<_> = pairs
        .iter()
        .map(|(u, v)| sys.normalize_word(&u.concat(v)).as_map().clone())
        .collect();
    let basis = echelon(
        2,
        kernel(&images).into_iter().map(|k| {
            let mut t = Tensor::zero(2);
            for (i, c) in k {
                t.add_term(vec![pairs[i].0.clone(), pairs[i].1.clone()], c);
            }
            t
        }),
    );
    UniversalCalculus { sys, degree, basis }
}

impl UniversalCalculus<'_> {
    /// `d_u b = 1⊗b − b⊗1`
    pub fn d(&self, b: &NCPoly) -> Tensor {
        let b = self.sys.normalize(b);
        Tensor::from_polys(&[NCPoly::one(), b.clone()]).minus(&Tensor::from_polys(&[b, NCPoly::one()]))
    }

    pub fn contains(&self, t: &Tensor) -> bool {
        span_of(&self.basis).contains(t.as_map())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `b·ω·b'`
    pub fn act(&self, b: &NCPoly, w: &Tensor, b2: &NCPoly) -> Tensor {
        let mut out = Tensor::zero(2);
        for (k, c) in w.terms() {
            let l = self.sys.mul(b, &NCPoly::word(k[0].clone()));
            let r = self.sys.mul(&NCPoly::word(k[1].clone()), b2);
            out.add_scaled(&Tensor::from_polys(&[l, r]), c);
        }
        out
    }
}

/// Basis of `𝓗⁺ = ker ε` among elements of degree ≤ `degree`.
pub fn hplus<A: Algebroid + ?Sized>(alg: &A, degree: usize) -> Vec<Tensor> {
    let basis = alg.basis(degree);
    let images: Vec<_> = basis.iter().map(|b| alg.counit(b).as_map().clone()).collect();
    echelon(
        alg.width(),
        kernel(&images).into_iter().map(|k| {
            let mut t = Tensor::zero(alg.width());
            for (i, c) in k {
                t.add_scaled(&basis[i], &c);
            }
            alg.normalize(&t)
        }),
    )
}

/// `π_ε(h) = h − s(ε(h))`
pub fn pi_eps<A: Algebroid + ?Sized>(alg: &A, h: &Tensor) -> Tensor {
    h.minus(&alg.source(&alg.counit(h)))
}

/// Left ideal generated by `gens`, truncated at `degree`.
pub fn left_ideal<A: Algebroid + ?Sized>(alg: &A, gens: &[Tensor], degree: usize) -> Vec<Tensor> {
    let basis = alg.basis(degree);
    let mut out = Vec::new();
    for g in gens {
        for b in &basis {
            let p = alg.mul(b, g);
            if !p.is_zero() && alg.degree(&p) <= degree {
                out.push(p);
            }
        }
    }
    echelon(alg.width(), out)
}

/// The left covariant calculus `Ω = 𝓗_◁⊗_R(𝓗⁺/I)` of a left ideal `I`.
/// One-forms are `𝓗⊗𝓗` representatives compared modulo `𝓗⊗I`.
pub struct Woronowicz<'a, A: Algebroid + ?Sized> {
    pub alg: &'a A,
    pub degree: usize,
    pub ideal: Vec<Tensor>,
    quotient: Span<Key>,
    quotient3: Option<Span<Key>>,
}

impl<'a, A: Algebroid + ?Sized> Woronowicz<'a, A> {
    /// Closes `gens` to a left ideal up to `degree`; every generator must
    /// lie in `𝓗⁺`.
    pub fn new(alg: &'a A, gens: &[Tensor], degree: usize) -> Result<Self, CalculusError> {
        for g in gens {
            if !alg.counit(g).is_zero() {
                return Err(CalculusError::NotInPlus(alg.text(g)));
            }
        }
        let ideal = left_ideal(alg, gens, degree);
        let mut quotient = Span::new();
        if !ideal.is_empty() {
            for g in alg.basis(degree) {
                for i in &ideal {
                    quotient.insert(alg.linearize(&otimes(&[&g, i]), &Pattern::tri2()).as_map().clone());
                }
            }
        }
        Ok(Woronowicz {
            alg,
            degree,
            ideal,
            quotient,
            quotient3: None,
        })
    }

    /// The span of `𝓗⊗𝓗⊗I`, needed to compare coactions.
    pub fn with_coaction_quotient(mut self) -> Self {
        let mut q = Span::new();
        if !self.ideal.is_empty() {
            let basis = self.alg.basis(self.degree);
            for g in &basis {
                for h in &basis {
                    for i in &self.ideal {
                        q.insert(self.alg.linearize(&otimes(&[g, h, i]), &Pattern::chain(3)).as_map().clone());
                    }
                }
            }
        }
        self.quotient3 = Some(q);
        self
    }

    pub fn ideal_span(&self) -> Span<Key> {
        span_of(&self.ideal)
    }

    /// Canonical form of a one-form.
    pub fn reduce(&self, w: &Tensor) -> Tensor {
        let lin = self.alg.linearize(w, &Pattern::tri2());
        Tensor::from_map(lin.arity(), self.quotient.reduce(lin.as_map()))
    }

    /// Difference of two one-forms, printed, or `None`.
    pub fn differs(&self, l: &Tensor, r: &Tensor) -> Option<String> {
        let d = self.reduce(&l.minus(r));
        (!d.is_zero()).then(|| d.to_text(&[self.alg.alphabet()]))
    }

    fn differs3(&self, l: &Tensor, r: &Tensor) -> Option<String> {
        let lin = self.alg.linearize(&l.minus(r), &Pattern::chain(3));
        let d = match &self.quotient3 {
            Some(q) => q.reduce(lin.as_map()),
            None => lin.as_map().clone(),
        };
        (!d.is_empty()).then(|| Tensor::from_map(lin.arity(), d).to_text(&[self.alg.alphabet()]))
    }

    /// `dh = Δh − h⊗1`
    pub fn d(&self, h: &Tensor) -> Tensor {
        self.alg.delta(h).minus(&otimes(&[h, &self.alg.one()]))
    }

    /// `h·(g⊗[g']) = h₍₁₎g ⊗ [h₍₂₎g']`
    pub fn left(&self, h: &Tensor, w: &Tensor) -> Tensor {
        let a = self.alg;
        let k = a.width();
        expand(a, &otimes(&[&a.delta(h), w]), 2 * k, |e| otimes(&[&a.mul(&e[0], &e[2]), &a.mul(&e[1], &e[3])]))
    }

    /// `(g⊗[g'])·h = gh ⊗ [g']`
    pub fn right(&self, w: &Tensor, h: &Tensor) -> Tensor {
        let a = self.alg;
        expand(a, w, 2 * a.width(), |e| otimes(&[&a.mul(&e[0], h), &e[1]]))
    }

    /// `λ_Ω = Δ⊗id`
    pub fn coaction(&self, w: &Tensor) -> Tensor {
        delta_at(self.alg, w, 0)
    }

    /// `ϖ(h) = d(h₊)·h₋`
    pub fn maurer_cartan(&self, h: &Tensor) -> Result<Tensor, CalculusError> {
        let a = self.alg;
        if !a.counit(h).is_zero() {
            return Err(CalculusError::NotInPlus(a.text(h)));
        }
        Ok(expand(a, &a.translation(h), 2 * a.width(), |e| self.right(&self.d(&e[0]), &e[1])))
    }

    /// `Ξ(ω) = ω₍₋₁₎ ⊗ ω₍₀₎₊·ω₍₀₎₋`, with the translation of the comodule `Ω`
    /// taken as `ε(ω₍₋₁₎₊)ω₍₀₎ ⊗ ω₍₋₁₎₋`.
    pub fn xi(&self, w: &Tensor) -> Tensor {
        let a = self.alg;
        let t2 = delta_at(a, &delta_at(a, w, 0), 1);
        let t3 = translation_at(a, &t2, 1);
        expand(a, &t3, 3 * a.width(), |e| {
            let mid = a.mul(&a.mul(&a.source(&a.counit(&e[1])), &e[3]), &e[2]);
            otimes(&[&e[0], &mid, &e[4]])
        })
    }

    /// `d'h = (𝓗⊗ϖ)(Δh − h⊗1)` with `ϖ` taken on `π_ε` of the second leg.
    pub fn d_prime(&self, h: &Tensor) -> Tensor {
        let a = self.alg;
        expand(a, &a.delta(h), 3 * a.width(), |e| {
            let mc = self.maurer_cartan(&pi_eps(a, &e[1])).expect("projected into the counit kernel");
            otimes(&[&e[0], &mc])
        })
    }

    /// Basis of `ker ϖ` on `𝓗⁺` up to the truncation degree.
    pub fn ker_mc(&self) -> Vec<Tensor> {
        let plus = hplus(self.alg, self.degree);
        let images: Vec<_> = plus
            .iter()
            .map(|p| self.reduce(&self.maurer_cartan(p).expect("in the counit kernel")).as_map().clone())
            .collect();
        echelon(
            self.alg.width(),
            kernel(&images).into_iter().map(|k| {
                let mut t = Tensor::zero(self.alg.width());
                for (i, c) in k {
                    t.add_scaled(&plus[i], &c);
                }
                t
            }),
        )
    }

    pub fn check_leibniz(&self, pairs: &[(Tensor, Tensor)]) -> Report {
        let mut rep = Report::new("leibniz");
        let a = self.alg;
        for (h, g) in pairs {
            let l = self.d(&a.mul(h, g));
            let r = self.right(&self.d(h), g).plus(&self.left(h, &self.d(g)));
            rep.check("leibniz", format!("{} ; {}", a.text(h), a.text(g)), self.differs(&l, &r));
        }
        rep
    }

    /// `λ_Ω∘d = (𝓗⊗d)∘Δ`
    pub fn check_covariance(&self, elems: &[(String, Tensor)]) -> Report {
        let mut rep = Report::new("covariance");
        let a = self.alg;
        for (name, h) in elems {
            let l = self.coaction(&self.d(h));
            let r = expand(a, &a.delta(h), 3 * a.width(), |e| otimes(&[&e[0], &self.d(&e[1])]));
            rep.check("covariance", name.as_str(), self.differs3(&l, &r));
        }
        rep
    }

    /// `ϖ(h) = 1⊗[h]`, `λ(ϖ(h)) = 1⊗ϖ(h)`, and `Ξ(dh) = d'h` on elements
    /// `π_ε(h)`.
    pub fn check_maurer_cartan(&self, elems: &[(String, Tensor)]) -> Report {
        let mut rep = Report::new("maurer-cartan");
        let a = self.alg;
        for (name, h) in elems {
            let p = pi_eps(a, h);
            let mc = self.maurer_cartan(&p).expect("projected");
            rep.check("mc.unit", name.as_str(), self.differs(&mc, &otimes(&[&a.one(), &p])));
            rep.check(
                "mc.coinvariant",
                name.as_str(),
                self.differs3(&self.coaction(&mc), &otimes(&[&a.one(), &mc])),
            );
            rep.check("xi.intertwines", name.as_str(), self.differs3(&self.xi(&self.d(h)), &self.d_prime(h)));
        }
        rep
    }

    /// `d(g₊g₋h) − g₊d(g₋h) = h⊗[g]` for `g ∈ 𝓗⁺`.
    pub fn check_recovery(&self, hs: &[Tensor], gs: &[Tensor]) -> Report {
        let mut rep = Report::new("recovery");
        let a = self.alg;
        let k = a.width();
        for h in hs {
            for g in gs {
                let tr = a.translation(g);
                let l = expand(a, &tr, 2 * k, |e| {
                    let inner = a.mul(&e[1], h);
                    self.d(&a.mul(&e[0], &inner)).minus(&self.left(&e[0], &self.d(&inner)))
                });
                rep.check(
                    "calculus.recovery",
                    format!("{} ; {}", a.text(h), a.text(g)),
                    self.differs(&l, &otimes(&[h, g])),
                );
            }
        }
        rep
    }

    /// `ϖ(hk) = 0` for `k ∈ ker ϖ` and the given `h`, inside the truncation.
    pub fn check_ker_mc_left_ideal(&self, hs: &[Tensor]) -> Report {
        let mut rep = Report::new("ker-mc");
        let a = self.alg;
        for k in self.ker_mc() {
            for h in hs {
                let p = a.mul(h, &k);
                if a.degree(&p) > self.degree {
                    continue;
                }
                let mc = self.maurer_cartan(&p).expect("left ideal of the counit kernel");
                rep.check(
                    "ker_mc.left_ideal",
                    format!("{} ; {}", a.text(h), a.text(&k)),
                    self.differs(&mc, &Tensor::zero(2 * a.width())),
                );
            }
        }
        rep
    }
}

/// Ideal → calculus → ideal, per degree `d ≤ degree`: `ker ϖ` of the
/// calculus of `I` equals `I`; and the differentials of the calculus built
/// from `ker ϖ` agree with the original ones.
pub fn classify_roundtrip<A: Algebroid + ?Sized>(alg: &A, gens: &[Tensor], degree: usize) -> Result<Report, CalculusError> {
    let mut rep = Report::new(format!("classify {}", alg.name()));
    for d in 0..=degree {
        let w = Woronowicz::new(alg, gens, d)?;
        let ker = w.ker_mc();
        let ispan = w.ideal_span();
        let kspan = span_of(&ker);
        let el = format!("degree {d}");
        let missing = w.ideal.iter().find(|i| !kspan.contains(i.as_map()));
        let extra = ker.iter().find(|k| !ispan.contains(k.as_map()));
        rep.check("classify.ideal_in_kernel", el.clone(), missing.map(|i| alg.text(i)));
        rep.check("classify.kernel_in_ideal", el.clone(), extra.map(|k| alg.text(k)));
        rep.note(format!("degree {d}: dim I = {}, dim ker mc = {}", w.ideal.len(), ker.len()));
        if d == degree {
            let w2 = Woronowicz::new(alg, &ker, d)?;
            for (name, h) in alg.generators() {
                let dh = w.d(&h);
                rep.check("classify.differential", name.as_str(), w2.differs(&dh, &w2.d(&h)));
            }
        }
    }
    Ok(rep)
}

/// `𝓗⁺ = (Ω^u_A)^coH` on weight-zero pairs of length ≤ `degree`: the kernel
/// of ε and the kernel of the multiplication of `A` agree.
pub fn es_hplus_is_coinvariant_forms(es: &EsAlgebroid, degree: usize) -> Report {
    let mut rep = Report::new("es-correspondence");
    let plus = hplus(es, degree);
    let sys = es.sys();
    let words = sys.graded_basis(degree);
    let mut pairs = Vec::new();
    for u in &words {
        for v in &words {
            if es.weight(u) + es.weight(v) == 0 {
                pairs.push(Tensor::simple(vec![u.clone(), v.clone()], Scalar::one()));
            }
        }
    }
    let images: Vec<_> = pairs
        .iter()
        .map(|t| {
            let k = t.terms().next().unwrap().0;
            sys.normalize_word(&k[0].concat(&k[1])).as_map().clone()
        })
        .collect();
    let forms = echelon(
        2,
        kernel(&images).into_iter().map(|k| {
            let mut t = Tensor::zero(2);
            for (i, c) in k {
                t.add_scaled(&pairs[i], &c);
            }
            t
        }),
    );
    let (ps, fs) = (span_of(&plus), span_of(&forms));
    rep.check(
        "es.dimension",
        format!("degree {degree}"),
        (plus.len() != forms.len()).then(|| format!("dim H+ = {}, dim forms = {}", plus.len(), forms.len())),
    );
    rep.check(
        "es.plus_in_forms",
        format!("degree {degree}"),
        plus.iter().find(|p| !fs.contains(p.as_map())).map(|p| es.text(p)),
    );
    rep.check(
        "es.forms_in_plus",
        format!("degree {degree}"),
        forms.iter().find(|f| !ps.contains(f.as_map())).map(|f| es.text(f)),
    );
    rep.assume("faithful flatness of A over B is assumed, not checked");
    rep
}

/// `J = A·I` inside `A⊗A` and `J^coH` compared with `I`.
pub fn es_correspondence(es: &EsAlgebroid, ideal: &[Tensor], degree: usize) -> Report {
    let mut rep = Report::new("es-correspondence");
    let sys = es.sys();
    let mut j = Vec::new();
    for a in sys.graded_basis(degree) {
        for i in ideal {
            let mut t = Tensor::zero(2);
            for (k, c) in i.terms() {
                let l = sys.mul(&NCPoly::word(a.clone()), &NCPoly::word(k[0].clone()));
                t.add_scaled(&Tensor::from_polys(&[l, NCPoly::word(k[1].clone())]), c);
            }
            j.push(t);
        }
    }
    let j = echelon(2, j);
    let coinv: Vec<Tensor> = j.iter().filter(|t| es.diagonal_weight(t) == Some(0)).cloned().collect();
    let mixed = j.iter().filter(|t| es.diagonal_weight(t).is_none()).count();
    rep.check("es.homogeneous", "J", (mixed > 0).then(|| format!("{mixed} inhomogeneous rows")));
    let (is, cs) = (span_of(ideal), span_of(&coinv));
    rep.check(
        "es.coinvariants_in_ideal",
        format!("degree {degree}"),
        coinv
            .iter()
            .filter(|t| es.degree(t) <= degree)
            .find(|t| !is.contains(t.as_map()))
            .map(|t| es.text(t)),
    );
    rep.check(
        "es.ideal_in_coinvariants",
        format!("degree {degree}"),
        ideal.iter().find(|i| !cs.contains(i.as_map())).map(|i| es.text(i)),
    );
    rep.note(format!("dim J = {}, dim J^coH = {}, dim I = {}", j.len(), coinv.len(), ideal.len()));
    rep
}

/// The calculus `𝓖□_𝓗(B⁺/I)` on the Hopf kernel `B` of a smash surjection,
/// with one-forms `Σ g⊗b̃` compared modulo `𝓖⊗I`.
pub struct HomogeneousCalculus<'a> {
    pub hs: &'a Homogeneous,
    pub kernel: HopfKernel,
    pub degree: usize,
    pub ideal: Vec<NCPoly>,
    quotient: Span<Key>,
}

impl<'a> HomogeneousCalculus<'a> {
    /// Closes `gens` under the left action of `B`; generators must lie in `B⁺`.
    pub fn new(hs: &'a Homogeneous, gens: &[NCPoly], degree: usize) -> Result<Self, CalculusError> {
        let d = hs.dom();
        let kernel = hs.hopf_kernel(degree);
        let plus: Span<Word> = {
            let mut s = Span::new();
            for p in &kernel.plus {
                s.insert(p.as_map().clone());
            }
            s
        };
        for g in gens {
            if !plus.contains(d.sys.normalize(g).as_map()) {
                return Err(CalculusError::NotInPlus(g.to_text(d.alphabet())));
            }
        }
        let mut span: Span<Word> = Span::new();
        for g in gens {
            for b in &kernel.basis {
                let p = d.sys.mul(b, g);
                if p.degree() <= degree {
                    span.insert(p.as_map().clone());
                }
            }
        }
        let ideal: Vec<NCPoly> = span.reduced_basis().into_iter().map(NCPoly::from_map).collect();
        let mut quotient = Span::new();
        for w in d.sys.graded_basis(degree) {
            for i in &ideal {
                let t = Tensor::from_polys(&[NCPoly::word(w.clone()), i.clone()]);
                quotient.insert(d.linearize(&t, &Pattern::tri2()).as_map().clone());
            }
        }
        Ok(HomogeneousCalculus {
            hs,
            kernel,
            degree,
            ideal,
            quotient,
        })
    }

    /// `λ(I) ⊆ 𝓗⊗I` on the truncation.
    pub fn check_closure(&self) -> Report {
        let mut rep = Report::new("ideal-closure");
        let hs = self.hs;
        let sides = [Side::H, Side::G];
        let mut span = Span::new();
        for h in hs.cod().sys.graded_basis(self.degree) {
            for i in &self.ideal {
                let t = Tensor::from_polys(&[NCPoly::word(h.clone()), i.clone()]);
                span.insert(hs.lin_chain(&t, &sides).as_map().clone());
            }
        }
        for i in &self.ideal {
            let lam = hs.lin_chain(&hs.lambda(&Tensor::from_poly(i)), &sides);
            let rest = span.reduce(lam.as_map());
            rep.check("ideal.coaction", i.to_text(hs.dom().alphabet()), (!rest.is_empty()).then(|| format!("{} terms", rest.len())));
        }
        rep
    }

    /// `db = Δb − b⊗1`
    pub fn d(&self, b: &NCPoly) -> Tensor {
        let d = self.hs.dom();
        let bt = Tensor::from_poly(b);
        d.delta(&bt).minus(&Tensor::from_polys(&[b.clone(), NCPoly::one()]))
    }

    /// `b(g⊗b̃)b' = b₍₁₎gb' ⊗ b₍₂₎b̃`
    pub fn act(&self, b: &NCPoly, w: &Tensor, b2: &NCPoly) -> Tensor {
        let d = self.hs.dom();
        let mut out = Tensor::zero(2);
        for (bk, bc) in d.delta(&Tensor::from_poly(b)).terms() {
            for (k, c) in w.terms() {
                let l = d.sys.product(&[NCPoly::word(bk[0].clone()), NCPoly::word(k[0].clone()), b2.clone()]);
                let r = d.sys.mul(&NCPoly::word(bk[1].clone()), &NCPoly::word(k[1].clone()));
                out.add_scaled(&Tensor::from_polys(&[l, r]), &(bc * c));
            }
        }
        out
    }

    pub fn differs(&self, l: &Tensor, r: &Tensor) -> Option<String> {
        let d = self.hs.dom();
        let lin = d.linearize(&l.minus(r), &Pattern::tri2());
        let rest = self.quotient.reduce(lin.as_map());
        (!rest.is_empty()).then(|| d.text(&Tensor::from_map(2, rest)))
    }

    /// Leibniz and covariance on pairs of kernel basis elements.
    pub fn check_fodc(&self) -> Report {
        let mut rep = Report::new("homogeneous-calculus");
        let d = self.hs.dom();
        let text = |p: &NCPoly| p.to_text(d.alphabet());
        let one = NCPoly::one();
        for b in &self.kernel.basis {
            for c in &self.kernel.basis {
                if b.degree() + c.degree() > self.degree {
                    continue;
                }
                let l = self.d(&d.sys.mul(b, c));
                let r = self.act(&one, &self.d(b), c).plus(&self.act(b, &self.d(c), &one));
                rep.check("leibniz", format!("{} ; {}", text(b), text(c)), self.differs(&l, &r));
            }
            // λ(db) = (𝓖⊗d)Δb, compared slotwise after the first leg
            let l = delta_at(d, &self.d(b), 0);
            let r = expand(d, &d.delta(&Tensor::from_poly(b)), 3, |e| otimes(&[&e[0], &self.d(&e[1].to_poly())]));
            let x = d.linearize(&l.minus(&r), &Pattern::chain(3));
            rep.check("covariance", text(b), (!x.is_zero() && !self.ideal_absorbs3(&x)).then(|| d.text(&x)));
        }
        rep
    }

    fn ideal_absorbs3(&self, x: &Tensor) -> bool {
        let d = self.hs.dom();
        let mut span = Span::new();
        for g in d.sys.graded_basis(self.degree) {
            for h in d.sys.graded_basis(self.degree) {
                for i in &self.ideal {
                    let t = Tensor::from_polys(&[NCPoly::word(g.clone()), NCPoly::word(h.clone()), i.clone()]);
                    span.insert(d.linearize(&t, &Pattern::chain(3)).as_map().clone());
                }
            }
        }
        span.contains(x.as_map())
    }

    /// `ξ(g⊗b) = b₊⊗b₋g`, into `B_◂⊗▷B`.
    pub fn xi(&self, w: &Tensor) -> Tensor {
        let d = self.hs.dom();
        let mut out = Tensor::zero(2);
        for (k, c) in w.terms() {
            for (tk, tc) in d.translation(&Tensor::simple(vec![k[1].clone()], Scalar::one())).terms() {
                let r = d.sys.mul(&NCPoly::word(tk[1].clone()), &NCPoly::word(k[0].clone()));
                out.add_scaled(&Tensor::from_polys(&[NCPoly::word(tk[0].clone()), r]), &(c * tc));
            }
        }
        out
    }

    /// `ξ(db) = −d_u b` for every kernel basis element, and `m∘ξ = 0` on `dB`.
    pub fn check_xi(&self) -> Report {
        let mut rep = Report::new("homogeneous-xi");
        let d = self.hs.dom();
        for b in &self.kernel.basis {
            let x = self.xi(&self.d(b));
            let du = Tensor::from_polys(&[b.clone(), NCPoly::one()]).minus(&Tensor::from_polys(&[NCPoly::one(), b.clone()]));
            rep.check(
                "xi.intertwines",
                b.to_text(d.alphabet()),
                crate::bialgebroid::compare(d, &x, &du, &Pattern::blk2()),
            );
            let mut m = NCPoly::zero();
            for (k, c) in x.terms() {
                m.add_scaled(&d.sys.mul(&NCPoly::word(k[0].clone()), &NCPoly::word(k[1].clone())), c);
            }
            rep.check("xi.in_kernel_of_m", b.to_text(d.alphabet()), (!m.is_zero()).then(|| m.to_text(d.alphabet())));
        }
        rep
    }

    /// `ζ(Σ x⊗y) = Σ x·π_ε(y)`; on `b·d_u b'` this is `bb' − b◂ε(b')`.
    pub fn zeta(&self, w: &Tensor) -> NCPoly {
        let d = self.hs.dom();
        let mut out = NCPoly::zero();
        for (k, c) in w.terms() {
            let y = Tensor::simple(vec![k[1].clone()], Scalar::one());
            let p = pi_eps(d, &y).to_poly();
            out.add_scaled(&d.sys.mul(&NCPoly::word(k[0].clone()), &p), c);
        }
        out
    }

    /// `ζ(d_u b) = b` on `B⁺`, `ζ(b·d_u b') = bb' − b◂ε(b')` on kernel pairs,
    /// and `d ≡ 0` exactly when `I = B⁺`.
    pub fn hermisson_roundtrip(&self) -> Report {
        let mut rep = Report::new("hermisson");
        let d = self.hs.dom();
        let text = |p: &NCPoly| p.to_text(d.alphabet());
        for b in &self.kernel.plus {
            let du = Tensor::from_polys(&[NCPoly::one(), b.clone()]).minus(&Tensor::from_polys(&[b.clone(), NCPoly::one()]));
            let z = &self.zeta(&du) - b;
            rep.check("zeta.inverse", text(b), (!z.is_zero()).then(|| text(&z)));
        }
        for b in &self.kernel.basis {
            for c in &self.kernel.basis {
                if b.degree() + c.degree() > self.degree {
                    continue;
                }
                let bc = d.sys.mul(b, c);
                let w = Tensor::from_polys(&[b.clone(), c.clone()]).minus(&Tensor::from_polys(&[bc.clone(), NCPoly::one()]));
                let e = d.counit(&Tensor::from_poly(c));
                let expect = &bc - &d.sys.mul(b, &d.source(&e).to_poly());
                let z = &self.zeta(&w) - &expect;
                rep.check("zeta.formula", format!("{} ; {}", text(b), text(c)), (!z.is_zero()).then(|| text(&z)));
            }
        }
        let zero = self.kernel.basis.iter().all(|b| self.differs(&self.d(b), &Tensor::zero(2)).is_none());
        let full = self.ideal.len() == self.kernel.plus.len();
        rep.check(
            "hermisson.zero_calculus",
            format!("dim I = {}", self.ideal.len()),
            (zero != full).then(|| format!("d vanishes: {zero}, I = B+: {full}")),
        );
        rep
    }
}
