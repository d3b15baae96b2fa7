//! Homogeneous spaces of smash algebroids: the Hopf kernel of a surjection
//! `π_#: A#G → A#H`, the Galois map `χ_#` with both inverses, the quotient
//! `𝓖/𝓖B⁺` and the cotensor `𝓖□_𝓗B⁺`, all on degree truncations.

use crate::bialgebroid::{Algebroid, Pattern};
use crate::hopfalg::HopfAlgebra;
use crate::ncalg::{kernel, Letter, NCPoly, Scalar, Span, SparseVec, Tensor, Word};
use crate::report::Report;
use crate::smash_backend::{SmashAlgebroid, SmashSurjection};

/// Which algebroid a tensor slot lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    G,
    H,
}

/// Hopf kernel `B = 𝓖^co𝓗` up to a degree, in echelon form (leading word
/// maximal), together with `B⁺ = B ∩ ker ε`.
#[derive(Clone, Debug)]
pub struct HopfKernel {
    pub degree: usize,
    pub basis: Vec<NCPoly>,
    pub plus: Vec<NCPoly>,
}

impl HopfKernel {
    /// `(d, dim B_{≤d}, dim B⁺_{≤d})` for `d ≤ degree`.
    pub fn dims(&self) -> Vec<(usize, usize, usize)> {
        let upto = |v: &[NCPoly], d: usize| v.iter().filter(|p| p.degree() <= d).count();
        (0..=self.degree)
            .map(|d| (d, upto(&self.basis, d), upto(&self.plus, d)))
            .collect()
    }
}

fn echelon(polys: impl IntoIterator<Item = NCPoly>) -> Vec<NCPoly> {
    let mut span = Span::new();
    for p in polys {
        span.insert(p.as_map().clone());
    }
    span.reduced_basis().into_iter().map(NCPoly::from_map).collect()
}

fn combine(words: &[Word], v: &SparseVec<usize>) -> NCPoly {
    let mut p = NCPoly::zero();
    for (&i, c) in v {
        p.add_term(words[i].clone(), c.clone());
    }
    p
}

fn span_of(polys: &[NCPoly]) -> Span<Word> {
    let mut s = Span::new();
    for p in polys {
        s.insert(p.as_map().clone());
    }
    s
}

fn word_t(w: &Word) -> Tensor {
    Tensor::simple(vec![w.clone()], Scalar::one())
}

#[derive(Debug)]
pub struct Homogeneous {
    pub s: SmashSurjection,
}

impl Homogeneous {
    pub fn new(s: SmashSurjection) -> Self {
        Homogeneous { s }
    }

    pub fn dom(&self) -> &SmashAlgebroid {
        &self.s.domain
    }

    pub fn cod(&self) -> &SmashAlgebroid {
        &self.s.codomain
    }

    fn side(&self, s: Side) -> &SmashAlgebroid {
        match s {
            Side::G => self.dom(),
            Side::H => self.cod(),
        }
    }

    fn g(&self) -> &HopfAlgebra {
        self.s.g()
    }

    /// `π_#` on one word of `𝓖`.
    pub fn pi_word(&self, w: &Word) -> NCPoly {
        self.s.pi_hash(&word_t(w)).to_poly()
    }

    /// `ρ(g) = g₍₁₎ ⊗ π_#(g₍₂₎)` as a `𝓖⊗𝓗` tensor.
    pub fn rho(&self, g: &Tensor) -> Tensor {
        let mut out = Tensor::zero(2);
        for (k, c) in self.dom().delta(g).terms() {
            for (w, cw) in self.pi_word(&k[1]).terms() {
                out.add_term(vec![k[0].clone(), w.clone()], c * cw);
            }
        }
        out
    }

    /// `λ(n) = π_#(n₍₁₎) ⊗ n₍₂₎` as a `𝓗⊗𝓖` tensor.
    pub fn lambda(&self, n: &Tensor) -> Tensor {
        let mut out = Tensor::zero(2);
        for (k, c) in self.dom().delta(n).terms() {
            for (w, cw) in self.pi_word(&k[0]).terms() {
                out.add_term(vec![w.clone(), k[1].clone()], c * cw);
            }
        }
        out
    }

    /// Straightens a chain of `◁⊗▷`-balanced slots: from the last slot back,
    /// the `A`-part `b` of slot `j` leaves as `t(b)` on the left of slot `j-1`.
    pub fn lin_chain(&self, t: &Tensor, sides: &[Side]) -> Tensor {
        assert_eq!(t.arity(), sides.len());
        let mut cur = Tensor::zero(sides.len());
        for (k, c) in t.terms() {
            let mut term = Tensor::unit(0);
            for (w, &s) in k.iter().zip(sides) {
                let alg = self.side(s);
                term = term.otimes(&Tensor::from_poly(&alg.sys.normalize(&NCPoly::word(w.clone()))));
            }
            cur.add_scaled(&term, c);
        }
        for j in (1..sides.len()).rev() {
            let (left, right) = (self.side(sides[j - 1]), self.side(sides[j]));
            let mut next = Tensor::zero(sides.len());
            for (k, c) in cur.terms() {
                let (b, h) = right.split(&k[j]);
                let moved = left.sys.mul(&left.target(&NCPoly::word(b)).to_poly(), &NCPoly::word(k[j - 1].clone()));
                for (w, cw) in moved.terms() {
                    let mut key = k.clone();
                    key[j - 1] = w.clone();
                    key[j] = right.join(&Word::empty(), &h);
                    next.add_term(key, c * cw);
                }
            }
            cur = next;
        }
        cur
    }

    /// Straightening of `𝓖 ◁⊗▷ 𝓗`.
    pub fn lin_gh(&self, t: &Tensor) -> Tensor {
        self.lin_chain(t, &[Side::G, Side::H])
    }

    /// Straightening of `𝓖 ⊗_B 𝓖` for `B = A⊗G^{coH}`: move `s(a')` left, then
    /// `(a#h)⊗(1#h') ↦ (a, hh', t^{w(h')})`.
    pub fn lin_gbg(&self, t: &Tensor) -> Tensor {
        let d = self.dom();
        let g = self.g();
        let mut out = Tensor::zero(3);
        for (k, c) in t.terms() {
            let (a2, h2) = d.split(&k[1]);
            let m = d.sys.mul(&NCPoly::word(k[0].clone()), &NCPoly::word(a2));
            let u1 = self.s.h().grouplike_power(g.alg.word_weight(&h2));
            for (w, cw) in m.terms() {
                let (aj, hj) = d.split(w);
                let prod = g.sys().mul(&NCPoly::word(hj), &NCPoly::word(h2.clone()));
                for (u, cu) in prod.terms() {
                    out.add_term(vec![aj.clone(), u.clone(), u1.clone()], &(c * cw) * cu);
                }
            }
        }
        out
    }

    /// Kernel of `ρ − (·⊗1)` on the words of `𝓖` up to `degree`.
    pub fn hopf_kernel(&self, degree: usize) -> HopfKernel {
        let d = self.dom();
        let words = d.sys.graded_basis(degree);
        let images: Vec<_> = words
            .iter()
            .map(|w| {
                let g = word_t(w);
                let one = Tensor::simple(vec![w.clone(), Word::empty()], Scalar::one());
                self.lin_gh(&self.rho(&g)).minus(&self.lin_gh(&one)).as_map().clone()
            })
            .collect();
        let basis = echelon(kernel(&images).iter().map(|v| combine(&words, v)));
        let counits: Vec<_> = basis.iter().map(|b| d.counit(&Tensor::from_poly(b)).as_map().clone()).collect();
        let plus = echelon(kernel(&counits).iter().map(|v| {
            let mut p = NCPoly::zero();
            for (&i, c) in v {
                p.add_scaled(&basis[i], c);
            }
            p
        }));
        HopfKernel { degree, basis, plus }
    }

    /// Coinvariance, closure, `s(A) ⊆ B`, `[B, t(A)] = 0` and multiplicativity
    /// of `ε|_B`, all inside the truncation.
    pub fn check_kernel(&self, k: &HopfKernel) -> Report {
        let mut rep = Report::new("kernel");
        let d = self.dom();
        let span = span_of(&k.basis);
        let text = |p: &NCPoly| p.to_text(d.sys.alphabet());
        for b in &k.basis {
            let bt = Tensor::from_poly(b);
            let one = Tensor::from_polys(&[b.clone(), NCPoly::one()]);
            let diff = self.lin_gh(&self.rho(&bt)).minus(&self.lin_gh(&one));
            rep.check("kernel.coinvariant", text(b), (!diff.is_zero()).then(|| d.text(&diff)));
            for (rn, r) in crate::bialgebroid::base_generators(d) {
                let tr = d.target(&r);
                let diff = d.mul(&bt, &tr).minus(&d.mul(&tr, &bt));
                rep.check("kernel.target_commute", format!("{}, {rn}", text(b)), (!diff.is_zero()).then(|| d.text(&diff)));
            }
        }
        rep.check("kernel.unit", "1", (!span.contains(NCPoly::one().as_map())).then(|| "1 not in B".to_string()));
        for (rn, r) in crate::bialgebroid::base_generators(d) {
            let sr = d.source(&r).to_poly();
            rep.check("kernel.source", rn.as_str(), (!span.contains(sr.as_map())).then(|| text(&sr)));
        }
        let a = d.base();
        for b in &k.basis {
            for c in &k.basis {
                if b.degree() + c.degree() > k.degree {
                    continue;
                }
                let p = d.sys.mul(b, c);
                let el = format!("{}, {}", text(b), text(c));
                rep.check("kernel.product", el.clone(), (!span.contains(p.as_map())).then(|| text(&p)));
                let l = d.counit(&Tensor::from_poly(&p));
                let r = a.mul(&d.counit(&Tensor::from_poly(b)), &d.counit(&Tensor::from_poly(c)));
                let diff = &l - &r;
                rep.check("kernel.counit_multiplicative", el, (!diff.is_zero()).then(|| diff.to_text(a.alphabet())));
            }
        }
        for (deg, nb, np) in k.dims() {
            rep.note(format!("degree {deg}: dim B = {nb}, dim B+ = {np}"));
        }
        rep
    }

    /// `ker π_#` on the words of `𝓖` up to `degree`, in echelon form.
    pub fn ker_pi(&self, degree: usize) -> Vec<NCPoly> {
        let words = self.dom().sys.graded_basis(degree);
        let images: Vec<_> = words.iter().map(|w| self.pi_word(w).as_map().clone()).collect();
        echelon(kernel(&images).iter().map(|v| combine(&words, v)))
    }

    /// `𝓖B⁺ ∩ 𝓖_{≤degree}` from the products `g·b` with `|g| + deg b ≤ budget`.
    pub fn g_b_plus(&self, k: &HopfKernel, degree: usize, budget: usize) -> Vec<NCPoly> {
        let d = self.dom();
        let mut span = Span::new();
        for b in &k.plus {
            if b.degree() > budget {
                continue;
            }
            for w in d.sys.graded_basis(budget - b.degree()) {
                span.insert(d.sys.mul(&NCPoly::word(w), b).as_map().clone());
            }
        }
        span.reduced_basis()
            .into_iter()
            .map(NCPoly::from_map)
            .filter(|p| p.degree() <= degree)
            .collect()
    }

    /// Per degree: `𝓖B⁺ ⊆ ker π_#` and equality of dimensions. The kernel is
    /// taken two degrees past `degree` to generate `𝓖B⁺`.
    pub fn check_hg_equivalence(&self, degree: usize) -> Report {
        let mut rep = Report::new("homogeneous");
        let budget = degree + 2;
        let k = self.hopf_kernel(budget);
        let gb = self.g_b_plus(&k, degree, budget);
        let ker = self.ker_pi(degree);
        let kspan = span_of(&ker);
        let text = |p: &NCPoly| p.to_text(self.dom().sys.alphabet());
        for d in 0..=degree {
            let gb_d: Vec<_> = gb.iter().filter(|p| p.degree() <= d).collect();
            let ker_d = ker.iter().filter(|p| p.degree() <= d).count();
            let outside = gb_d.iter().find(|p| !kspan.contains(p.as_map()));
            rep.check("hg.contained", format!("degree {d}"), outside.map(|p| text(p)));
            rep.check(
                "hg.equal",
                format!("degree {d}"),
                (gb_d.len() != ker_d).then(|| format!("dim GB+ = {}, dim ker pi = {ker_d}", gb_d.len())),
            );
            rep.note(format!("degree {d}: dim GB+ = {}, dim ker pi = {ker_d}", gb_d.len()));
        }
        rep.assume("faithful flatness of the extension is assumed, not checked");
        rep
    }

    /// `Δ(𝓖B⁺) ⊆ 𝓖B⁺⊗𝓖 + 𝓖⊗𝓖B⁺` on the degree-`degree` part.
    pub fn check_coideal(&self, degree: usize) -> Report {
        let mut rep = Report::new("coideal");
        let d = self.dom();
        let budget = degree + 2;
        let k = self.hopf_kernel(budget);
        let gb = self.g_b_plus(&k, degree, budget);
        let words = d.sys.graded_basis(degree);
        let mut span = Span::new();
        let tri = Pattern::tri2();
        for u in &gb {
            for w in &words {
                let w = NCPoly::word(w.clone());
                for t in [Tensor::from_polys(&[u.clone(), w.clone()]), Tensor::from_polys(&[w, u.clone()])] {
                    span.insert(d.linearize(&t, &tri).as_map().clone());
                }
            }
        }
        for u in &gb {
            let img = d.linearize(&d.delta(&Tensor::from_poly(u)), &tri);
            let rest = span.reduce(img.as_map());
            rep.check(
                "coideal.delta",
                u.to_text(d.sys.alphabet()),
                (!rest.is_empty()).then(|| d.text(&Tensor::from_map(2, rest))),
            );
        }
        rep
    }

    /// `χ_#(g⊗g') = g₍₁₎g' ⊗ π_#(g₍₂₎)`, unstraightened.
    pub fn chi(&self, t: &Tensor) -> Tensor {
        let d = self.dom();
        let mut out = Tensor::zero(2);
        for (k, c) in t.terms() {
            for (dk, dc) in d.delta(&word_t(&k[0])).terms() {
                let left = d.sys.mul(&NCPoly::word(dk[0].clone()), &NCPoly::word(k[1].clone()));
                let right = self.pi_word(&dk[1]);
                out.add_scaled(&Tensor::from_polys(&[left, right]), &(c * dc));
            }
        }
        out
    }

    /// A preimage under `π_#` of a word of `𝓗`, letter by letter.
    pub fn lift(&self, w: &Word) -> NCPoly {
        let (a, h) = self.cod().split(w);
        let pre: Vec<Letter> = h
            .0
            .iter()
            .map(|&l| {
                let target = NCPoly::letter(l);
                (0..self.s.pi.len())
                    .find(|&g| self.s.pi[g] == target)
                    .expect("surjective on letters") as Letter
            })
            .collect();
        self.dom().sys.normalize(&NCPoly::word(self.dom().join(&a, &Word(pre))))
    }

    /// `g ⊗ π(g') ↦ g'₊ ⊗ g'₋g` on `𝓖⊗𝓗` tensors, using [`Self::lift`].
    pub fn chi_inverse(&self, t: &Tensor) -> Tensor {
        let d = self.dom();
        let mut out = Tensor::zero(2);
        for (k, c) in t.terms() {
            let tr = d.translation(&Tensor::from_poly(&self.lift(&k[1])));
            for (tk, tc) in tr.terms() {
                let right = d.sys.mul(&NCPoly::word(tk[1].clone()), &NCPoly::word(k[0].clone()));
                out.add_scaled(&Tensor::from_polys(&[NCPoly::word(tk[0].clone()), right]), &(c * tc));
            }
        }
        out
    }

    /// `τ(h) = h⁽¹⁾⊗h⁽²⁾` on a word of `H`, from the letters by
    /// `(hk)⁽¹⁾⊗(hk)⁽²⁾ = k⁽¹⁾h⁽¹⁾ ⊗ h⁽²⁾k⁽²⁾`.
    pub fn tau_word(&self, w: &Word) -> Tensor {
        let gs = self.g().sys();
        let mut acc = Tensor::unit(2);
        for &l in &w.0 {
            let step = &self.s.tau[l as usize];
            let mut next = Tensor::zero(2);
            for (hk, hc) in acc.terms() {
                for (kk, kc) in step.terms() {
                    let left = gs.mul(&NCPoly::word(kk[0].clone()), &NCPoly::word(hk[0].clone()));
                    let right = gs.mul(&NCPoly::word(hk[1].clone()), &NCPoly::word(kk[1].clone()));
                    next.add_scaled(&Tensor::from_polys(&[left, right]), &(hc * kc));
                }
            }
            acc = next;
        }
        acc
    }

    /// `(a'#g') ⊗ (a#h) ↦ (a₍₀₎ # S⁻¹(h)⁽¹⁾) ⊗ (1 # S⁻¹(h)⁽²⁾a₍₁₎)(a'#g')`.
    pub fn chi_inverse_explicit(&self, t: &Tensor) -> Tensor {
        let (d, c) = (self.dom(), self.cod());
        let gs = self.g().sys();
        let mut out = Tensor::zero(2);
        for (k, coef) in t.terms() {
            let (a, h) = c.split(&k[1]);
            let sinv = self.s.h().antipode_inv(&NCPoly::word(h));
            let rho = d.yd.coact(&NCPoly::word(a));
            for (sw, sc) in sinv.terms() {
                for (tk, tc) in self.tau_word(sw).terms() {
                    for (ak, ac) in rho.terms() {
                        let left = NCPoly::word(d.join(&ak[0], &tk[0]));
                        let g = gs.mul(&NCPoly::word(tk[1].clone()), &NCPoly::word(ak[1].clone()));
                        let right = d.sys.mul(&d.embed_h(&g), &NCPoly::word(k[0].clone()));
                        let left = d.sys.normalize(&left);
                        out.add_scaled(&Tensor::from_polys(&[left, right]), &(&(coef * sc) * &(tc * ac)));
                    }
                }
            }
        }
        out
    }

    /// Word pairs `(u, v)` with `|u| + |v| ≤ degree`, `u` in `sides.0`, `v` in `sides.1`.
    pub fn spanning(&self, sides: (Side, Side), degree: usize) -> Vec<Tensor> {
        let (l, r) = (self.side(sides.0), self.side(sides.1));
        let mut out = Vec::new();
        for u in l.sys.graded_basis(degree) {
            for v in r.sys.graded_basis(degree - u.len()) {
                out.push(Tensor::simple(vec![u.clone(), v], Scalar::one()));
            }
        }
        out
    }

    /// Roundtrips of `χ_#` with both inverses, and `B`-balancing of `χ_#`.
    pub fn check_chi_roundtrips(&self, degree: usize) -> Report {
        let mut rep = Report::new("chi");
        let d = self.dom();
        let cod = self.cod();
        let gg = |t: &Tensor| t.to_text(&[d.alphabet(), d.alphabet()]);
        let gh = |t: &Tensor| t.to_text(&[d.alphabet(), cod.alphabet()]);
        let diff3 = |l: &Tensor, r: &Tensor| {
            let x = l.minus(r);
            (!x.is_zero()).then(|| format!("{} terms differ", x.len()))
        };
        for t in self.spanning((Side::G, Side::G), degree) {
            let base = self.lin_gbg(&t);
            let c = self.chi(&t);
            rep.check("chi.inverse_after_map", gg(&t), diff3(&self.lin_gbg(&self.chi_inverse(&c)), &base));
            rep.check("chi.explicit_after_map", gg(&t), diff3(&self.lin_gbg(&self.chi_inverse_explicit(&c)), &base));
        }
        for t in self.spanning((Side::G, Side::H), degree) {
            let base = self.lin_gh(&t);
            let i = self.chi_inverse(&t);
            let e = self.chi_inverse_explicit(&t);
            rep.check("chi.map_after_inverse", gh(&t), diff3(&self.lin_gh(&self.chi(&i)), &base));
            rep.check("chi.map_after_explicit", gh(&t), diff3(&self.lin_gh(&self.chi(&e)), &base));
            rep.check("chi.inverses_agree", gh(&t), diff3(&self.lin_gbg(&i), &self.lin_gbg(&e)));
        }
        let k = self.hopf_kernel(1);
        for b in &k.basis {
            for t in self.spanning((Side::G, Side::G), 1) {
                let key: Vec<Word> = t.terms().next().unwrap().0.clone();
                let (u, v) = (NCPoly::word(key[0].clone()), NCPoly::word(key[1].clone()));
                let l = Tensor::from_polys(&[d.sys.mul(&u, b), v.clone()]);
                let r = Tensor::from_polys(&[u, d.sys.mul(b, &v)]);
                let el = format!("{} | {}", gg(&t), b.to_text(d.alphabet()));
                rep.check("gbg.balanced", el.clone(), diff3(&self.lin_gbg(&l), &self.lin_gbg(&r)));
                rep.check("chi.balanced", el, diff3(&self.lin_gh(&self.chi(&l)), &self.lin_gh(&self.chi(&r))));
            }
        }
        rep
    }

    /// `ξ((g⊗n)⊗g') = gg'⊗n` on `(𝓖□𝓗)⊗_B𝓖`, as three-slot `𝓖⊗𝓗⊗𝓖` tensors.
    pub fn xi(&self, t: &Tensor) -> Tensor {
        let d = self.dom();
        let mut out = Tensor::zero(2);
        for (k, c) in t.terms() {
            let g = d.sys.mul(&NCPoly::word(k[0].clone()), &NCPoly::word(k[2].clone()));
            out.add_scaled(&Tensor::from_polys(&[g, NCPoly::word(k[1].clone())]), c);
        }
        out
    }

    /// `ξ⁻¹ = (ρ⊗𝓖)∘χ_#⁻¹`.
    pub fn xi_inverse(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::zero(3);
        for (k, c) in self.chi_inverse(t).terms() {
            let r = self.rho(&word_t(&k[0]));
            out.add_scaled(&r.otimes(&word_t(&k[1])), c);
        }
        out
    }

    /// `ξ∘ξ⁻¹ = id` on `𝓖⊗𝓗` and `ξ(ρ(g)⊗g') = χ_#(g⊗g')`.
    pub fn check_xi(&self, degree: usize) -> Report {
        let mut rep = Report::new("xi");
        let d = self.dom();
        let gh = |t: &Tensor| t.to_text(&[d.alphabet(), self.cod().alphabet()]);
        let differs = |l: Tensor, r: Tensor| {
            let x = self.lin_gh(&l).minus(&self.lin_gh(&r));
            (!x.is_zero()).then(|| gh(&x))
        };
        for t in self.spanning((Side::G, Side::H), degree) {
            rep.check("xi.map_after_inverse", gh(&t), differs(self.xi(&self.xi_inverse(&t)), t.clone()));
        }
        for t in self.spanning((Side::G, Side::G), degree) {
            let key = t.terms().next().unwrap().0.clone();
            let r = self.rho(&word_t(&key[0])).otimes(&word_t(&key[1]));
            rep.check("xi.on_coaction", t.to_text(&[d.alphabet(), d.alphabet()]), differs(self.xi(&r), self.chi(&t)));
        }
        rep
    }

    /// `Φ(𝓖) = 𝓖/𝓖B⁺`: representatives are the words that are not leading
    /// words of `𝓖B⁺`; compares with `𝓗` through `π_#` degreewise.
    pub fn takeuchi_phi(&self, degree: usize) -> Report {
        let mut rep = Report::new("phi");
        let d = self.dom();
        let budget = degree + 2;
        let k = self.hopf_kernel(budget);
        let gb = self.g_b_plus(&k, degree, budget);
        let lead: std::collections::BTreeSet<Word> = gb.iter().map(|p| p.leading().unwrap().0.clone()).collect();
        for p in &gb {
            let img = self.s.pi_hash(&Tensor::from_poly(p));
            rep.check("phi.kills", p.to_text(d.alphabet()), (!img.is_zero()).then(|| self.cod().text(&img)));
        }
        for deg in 0..=degree {
            let reps: Vec<Word> = d.sys.graded_basis(deg).into_iter().filter(|w| !lead.contains(w)).collect();
            let hdim = self.cod().sys.graded_basis(deg).len();
            let images: Vec<_> = reps.iter().map(|w| self.pi_word(w).as_map().clone()).collect();
            let rank = crate::ncalg::linalg::rank(&images);
            rep.check(
                "phi.dimension",
                format!("degree {deg}"),
                (reps.len() != hdim).then(|| format!("{} representatives, dim H = {hdim}", reps.len())),
            );
            rep.check(
                "phi.map",
                format!("degree {deg}"),
                (rank != hdim).then(|| format!("rank {rank}, dim H = {hdim}")),
            );
        }
        rep
    }

    /// `Ψ(B⁺) = 𝓖□_𝓗B⁺` on the span of `g⊗b` with `|g|, deg b ≤ degree`:
    /// the kernel of `ρ⊗B⁺ − 𝓖⊗λ`. Returns representatives in echelon
    /// order of their straightening.
    pub fn takeuchi_psi(&self, k: &HopfKernel, degree: usize) -> Vec<Tensor> {
        let d = self.dom();
        let mut gens = Vec::new();
        for w in d.sys.graded_basis(degree) {
            for b in k.plus.iter().filter(|b| b.degree() <= degree) {
                gens.push(Tensor::from_polys(&[NCPoly::word(w.clone()), b.clone()]));
            }
        }
        let sides = [Side::G, Side::H, Side::G];
        let images: Vec<_> = gens
            .iter()
            .map(|t| {
                let mut l = Tensor::zero(3);
                let mut r = Tensor::zero(3);
                for (key, c) in t.terms() {
                    l.add_scaled(&self.rho(&word_t(&key[0])).otimes(&word_t(&key[1])), c);
                    r.add_scaled(&word_t(&key[0]).otimes(&self.lambda(&word_t(&key[1]))), c);
                }
                self.lin_chain(&l.minus(&r), &sides).as_map().clone()
            })
            .collect();
        let mut span: Span<Vec<Word>> = Span::new();
        let mut out = Vec::new();
        for v in kernel(&images) {
            let mut t = Tensor::zero(2);
            for (&i, c) in &v {
                t.add_scaled(&gens[i], c);
            }
            if span.insert(d.linearize(&t, &Pattern::tri2()).as_map().clone()) {
                out.push(t);
            }
        }
        out
    }
}
