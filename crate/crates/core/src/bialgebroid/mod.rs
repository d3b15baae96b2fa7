//! Left bialgebroids with a right Hopf structure, handled through a backend
//! that decides equality in balanced tensor powers by linearization.
//!
//! An element of 𝓗 is a [`Tensor`] with `width()` ambient slots; an n-fold
//! tensor representative is the flat concatenation of n such blocks.

use crate::ncalg::{NCPoly, RewriteSystem, Scalar, Tensor, Word};
use crate::report::Report;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// How the left slot of a balanced pair absorbs base elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Act {
    /// `h◁r = t(r)h`, the coproduct side.
    Tri,
    /// `h◂r = h s(r)`, the translation side.
    Blk,
}

/// Which balancings hold between the slots of an n-fold tensor. Each pair
/// `(i, act, j)` with `i < j` identifies `h_i act r ⊗ h_j` with `h_i ⊗ s(r)h_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub slots: usize,
    pub pairs: Vec<(usize, Act, usize)>,
}

impl Pattern {
    pub fn new(slots: usize, pairs: Vec<(usize, Act, usize)>) -> Self {
        for &(i, _, j) in &pairs {
            assert!(i < j && j < slots, "bad pair ({i}, {j}) for {slots} slots");
        }
        Pattern { slots, pairs }
    }

    /// `𝓗_◁ ⊗_R ▷𝓗`
    pub fn tri2() -> Self {
        Self::new(2, vec![(0, Act::Tri, 1)])
    }

    /// `𝓗_◂ ⊗_R ▷𝓗`
    pub fn blk2() -> Self {
        Self::new(2, vec![(0, Act::Blk, 1)])
    }

    /// Iterated coproduct shape `𝓗_◁⊗▷𝓗_◁⊗▷…`.
    pub fn chain(n: usize) -> Self {
        Self::new(n, (1..n).map(|j| (j - 1, Act::Tri, j)).collect())
    }

    /// Shape of both sides of Tch4.
    pub fn tch4() -> Self {
        Self::new(3, vec![(0, Act::Blk, 1), (0, Act::Tri, 2)])
    }

    /// Shape of both sides of Tch5.
    pub fn tch5() -> Self {
        Self::new(3, vec![(0, Act::Blk, 1), (1, Act::Tri, 2)])
    }

    /// Left partner of slot `j`, if any.
    pub fn partner(&self, j: usize) -> Option<(usize, Act)> {
        self.pairs.iter().find(|p| p.2 == j).map(|&(i, a, _)| (i, a))
    }
}

/// Backend contract for a left bialgebroid with translation map.
pub trait Algebroid: Send + Sync {
    fn name(&self) -> &str;
    /// Number of ambient slots of one element.
    fn width(&self) -> usize;
    /// Rewrite system of the base ring R.
    fn base(&self) -> &RewriteSystem;
    /// Alphabet used to print ambient and linearized slots.
    fn alphabet(&self) -> &[String];
    fn normalize(&self, h: &Tensor) -> Tensor;
    fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor;
    fn one(&self) -> Tensor {
        Tensor::unit(self.width())
    }
    fn source(&self, r: &NCPoly) -> Tensor;
    fn target(&self, r: &NCPoly) -> Tensor;
    /// Representative of Δh in `𝓗_◁ ⊗_R ▷𝓗`.
    fn delta(&self, h: &Tensor) -> Tensor;
    /// ε(h) in the base ring.
    fn counit(&self, h: &Tensor) -> NCPoly;
    /// Representative of `h₊ ⊗ h₋` in `𝓗_◂ ⊗_R ▷𝓗`.
    fn translation(&self, h: &Tensor) -> Tensor;
    fn generators(&self) -> Vec<(String, Tensor)>;
    /// Spanning set of the degree-≤`degree` part, lowest degree first.
    fn basis(&self, degree: usize) -> Vec<Tensor>;
    fn degree(&self, h: &Tensor) -> usize;
    /// Injective image of an n-fold balanced tensor in a free tensor power.
    fn linearize(&self, t: &Tensor, pat: &Pattern) -> Tensor;
    fn text(&self, h: &Tensor) -> String;
}

/// Splits each simple term of an n-fold representative into its n element
/// blocks, calls `f` and sums the results scaled by the coefficient.
pub fn expand<A, F>(alg: &A, t: &Tensor, out_arity: usize, mut f: F) -> Tensor
where
    A: Algebroid + ?Sized,
    F: FnMut(&[Tensor]) -> Tensor,
{
    let k = alg.width();
    assert_eq!(t.arity() % k, 0);
    let mut acc = Tensor::zero(out_arity);
    for (key, c) in t.terms() {
        let elems: Vec<Tensor> = key.chunks(k).map(|ws| Tensor::simple(ws.to_vec(), Scalar::one())).collect();
        let img = f(&elems);
        acc.add_scaled(&img, c);
    }
    acc
}

/// `h_1 ⊗ … ⊗ h_n` as a flat representative.
pub fn otimes(elems: &[&Tensor]) -> Tensor {
    let mut t = Tensor::unit(0);
    for e in elems {
        t = t.otimes(e);
    }
    t
}

/// Product of several elements, left to right.
pub fn product<A: Algebroid + ?Sized>(alg: &A, elems: &[&Tensor]) -> Tensor {
    let mut acc = alg.one();
    for e in elems {
        acc = alg.mul(&acc, e);
    }
    acc
}

/// The base generators as polynomials, named.
pub fn base_generators<A: Algebroid + ?Sized>(alg: &A) -> Vec<(String, NCPoly)> {
    let b = alg.base();
    (0..b.alphabet().len())
        .map(|i| (b.alphabet()[i].clone(), NCPoly::letter(i as u16)))
        .collect()
}

/// Generators and all products of two generators, with printable names.
pub fn generator_products<A: Algebroid + ?Sized>(alg: &A) -> Vec<(String, Tensor)> {
    let gens = alg.generators();
    let mut out = gens.clone();
    for (n1, g1) in &gens {
        for (n2, g2) in &gens {
            out.push((format!("{n1}*{n2}"), alg.mul(g1, g2)));
        }
    }
    out
}

/// Random combinations of spanning elements of degree ≤ `degree`, with small
/// integer multiples of powers of q as coefficients.
pub fn random_elements<A: Algebroid + ?Sized>(alg: &A, degree: usize, count: usize, seed: u64) -> Vec<Tensor> {
    let basis = alg.basis(degree);
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut h = Tensor::zero(alg.width());
            for _ in 0..rng.gen_range(1..=3) {
                let b = &basis[rng.gen_range(0..basis.len())];
                let c = Scalar::from_int(rng.gen_range(1..=3)) * Scalar::q_pow(rng.gen_range(-1..=1));
                let c = if rng.gen_bool(0.5) { -c } else { c };
                h.add_scaled(b, &c);
            }
            h
        })
        .collect()
}

/// Difference of two n-fold tensors after linearization, printed, or `None`.
pub fn compare<A: Algebroid + ?Sized>(alg: &A, lhs: &Tensor, rhs: &Tensor, pat: &Pattern) -> Option<String> {
    let d = alg.linearize(lhs, pat).minus(&alg.linearize(rhs, pat));
    if d.is_zero() {
        None
    } else {
        Some(d.to_text(&[alg.alphabet()]))
    }
}

fn compare_base(b: &RewriteSystem, lhs: &NCPoly, rhs: &NCPoly) -> Option<String> {
    let d = b.normalize(&(lhs - rhs));
    (!d.is_zero()).then(|| d.to_text(b.alphabet()))
}

fn compare_elem<A: Algebroid + ?Sized>(alg: &A, lhs: &Tensor, rhs: &Tensor) -> Option<String> {
    let d = alg.normalize(&lhs.minus(rhs));
    (!d.is_zero()).then(|| alg.text(&d))
}

/// Δ applied to block `i` of an n-fold representative.
pub fn delta_at<A: Algebroid + ?Sized>(alg: &A, t: &Tensor, i: usize) -> Tensor {
    let n = t.arity() / alg.width();
    expand(alg, t, (n + 1) * alg.width(), |e| {
        let mut parts: Vec<Tensor> = Vec::with_capacity(n);
        for (j, x) in e.iter().enumerate() {
            parts.push(if j == i { alg.delta(x) } else { x.clone() });
        }
        otimes(&parts.iter().collect::<Vec<_>>())
    })
}

/// Translation applied to block `i` of an n-fold representative.
pub fn translation_at<A: Algebroid + ?Sized>(alg: &A, t: &Tensor, i: usize) -> Tensor {
    let n = t.arity() / alg.width();
    expand(alg, t, (n + 1) * alg.width(), |e| {
        let parts: Vec<Tensor> = e
            .iter()
            .enumerate()
            .map(|(j, x)| if j == i { alg.translation(x) } else { x.clone() })
            .collect();
        otimes(&parts.iter().collect::<Vec<_>>())
    })
}

/// Reorders the blocks of an n-fold representative: block `i` of the result
/// is block `perm[i]` of the input.
pub fn permute_blocks<A: Algebroid + ?Sized>(alg: &A, t: &Tensor, perm: &[usize]) -> Tensor {
    let k = alg.width();
    let slots: Vec<usize> = perm.iter().flat_map(|&b| (b * k)..(b * k + k)).collect();
    t.permute(&slots)
}

/// True iff Δh lies in the Takeuchi subspace, tested on the base generators.
pub fn verify_takeuchi<A: Algebroid + ?Sized>(alg: &A, h: &Tensor) -> bool {
    takeuchi_defect(alg, h).is_none()
}

/// First base generator violating `r▸h⁽¹⁾ ⊗ h⁽²⁾ = h⁽¹⁾ ⊗ h⁽²⁾◂r`, with the
/// printed difference.
pub fn takeuchi_defect<A: Algebroid + ?Sized>(alg: &A, h: &Tensor) -> Option<(String, String)> {
    let d = alg.delta(h);
    let k = alg.width();
    for (name, r) in base_generators(alg) {
        let tr = alg.target(&r);
        let sr = alg.source(&r);
        let lhs = expand(alg, &d, 2 * k, |e| otimes(&[&alg.mul(&e[0], &tr), &e[1]]));
        let rhs = expand(alg, &d, 2 * k, |e| otimes(&[&e[0], &alg.mul(&e[1], &sr)]));
        if let Some(w) = compare(alg, &lhs, &rhs, &Pattern::tri2()) {
            return Some((name, w));
        }
    }
    None
}

/// Character laws and R-bilinearity of the counit on the given pairs.
pub fn verify_counit_pairs<A: Algebroid + ?Sized>(alg: &A, pairs: &[(String, Tensor, Tensor)]) -> Report {
    let mut rep = Report::new("counit");
    let b = alg.base();
    rep.check("counit.unit", "1", compare_base(b, &alg.counit(&alg.one()), &NCPoly::one()));
    for (name, h, g) in pairs {
        let e_hg = alg.counit(&alg.mul(h, g));
        let eg = alg.counit(g);
        let left = alg.counit(&alg.mul(h, &alg.source(&eg)));
        let right = alg.counit(&alg.mul(h, &alg.target(&eg)));
        rep.check("counit.character.bract", name.as_str(), compare_base(b, &e_hg, &left));
        rep.check("counit.character.blact", name.as_str(), compare_base(b, &e_hg, &right));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (_, h, _) in pairs {
        if !seen.insert(h.clone()) {
            continue;
        }
        let eh = alg.counit(h);
        for (rn, r) in base_generators(alg) {
            for (sn, s) in base_generators(alg) {
                let moved = alg.mul(&alg.mul(&alg.source(&r), &alg.target(&s)), h);
                let expect = b.mul(&b.mul(&r, &eh), &s);
                rep.check(
                    "counit.bilinear",
                    format!("{rn}, {}, {sn}", alg.text(h)),
                    compare_base(b, &alg.counit(&moved), &expect),
                );
            }
        }
    }
    rep
}

/// Counit checks on all generator pairs and `random` random pairs of degree
/// ≤ `degree`.
pub fn verify_counit<A: Algebroid + ?Sized>(alg: &A, degree: usize, random: usize, seed: u64) -> Report {
    let gens = alg.generators();
    let mut pairs = Vec::new();
    for (n1, g1) in &gens {
        for (n2, g2) in &gens {
            pairs.push((format!("{n1}, {n2}"), g1.clone(), g2.clone()));
        }
    }
    let xs = random_elements(alg, degree, random, seed);
    let ys = random_elements(alg, degree, random, seed.wrapping_add(1));
    for (i, (x, y)) in xs.into_iter().zip(ys).enumerate() {
        pairs.push((format!("random#{i}"), x, y));
    }
    verify_counit_pairs(alg, &pairs)
}

/// Tch1–Tch5, Tch7, Tch8 on a single element.
pub fn tch_single<A: Algebroid + ?Sized>(alg: &A, name: &str, h: &Tensor, rep: &mut Report) {
    let k = alg.width();
    let tr = alg.translation(h);
    let dh = alg.delta(h);

    for (rn, r) in base_generators(alg) {
        let sr = alg.source(&r);
        let lhs = expand(alg, &tr, 2 * k, |e| otimes(&[&alg.mul(&sr, &e[0]), &e[1]]));
        let rhs = expand(alg, &tr, 2 * k, |e| otimes(&[&e[0], &alg.mul(&e[1], &sr)]));
        rep.check("Tch1", format!("{name}; {rn}"), compare(alg, &lhs, &rhs, &Pattern::blk2()));
    }

    // h₊₍₁₎h₋ ⊗ h₊₍₂₎ = 1 ⊗ h
    let d_plus = delta_at(alg, &tr, 0);
    let lhs = expand(alg, &d_plus, 2 * k, |e| otimes(&[&alg.mul(&e[0], &e[2]), &e[1]]));
    rep.check("Tch2", name, compare(alg, &lhs, &otimes(&[&alg.one(), h]), &Pattern::tri2()));

    // h₍₂₎₊ ⊗ h₍₂₎₋h₍₁₎ = h ⊗ 1
    let t_two = translation_at(alg, &dh, 1);
    let lhs = expand(alg, &t_two, 2 * k, |e| otimes(&[&e[1], &alg.mul(&e[2], &e[0])]));
    rep.check("Tch3", name, compare(alg, &lhs, &otimes(&[h, &alg.one()]), &Pattern::blk2()));

    // h₊₍₁₎ ⊗ h₋ ⊗ h₊₍₂₎ = h₍₁₎₊ ⊗ h₍₁₎₋ ⊗ h₍₂₎
    let lhs = permute_blocks(alg, &d_plus, &[0, 2, 1]);
    let rhs = translation_at(alg, &dh, 0);
    rep.check("Tch4", name, compare(alg, &lhs, &rhs, &Pattern::tch4()));

    // h₊₊ ⊗ h₊₋ ⊗ h₋ = h₊ ⊗ h₋₍₁₎ ⊗ h₋₍₂₎
    let lhs = translation_at(alg, &tr, 0);
    let rhs = delta_at(alg, &tr, 1);
    rep.check("Tch5", name, compare(alg, &lhs, &rhs, &Pattern::tch5()));

    // h₊h₋ = tε(h)
    let prod = expand(alg, &tr, k, |e| alg.mul(&e[0], &e[1]));
    let teh = alg.target(&alg.counit(h));
    rep.check("Tch7", name, compare_elem(alg, &prod, &teh));

    // h₊◂ε(h₋) = h
    let back = expand(alg, &tr, k, |e| alg.mul(&e[0], &alg.source(&alg.counit(&e[1]))));
    rep.check("Tch8", name, compare_elem(alg, &back, h));
}

/// Tch6 on a pair: `(hg)₊ ⊗ (hg)₋ = h₊g₊ ⊗ g₋h₋`.
pub fn tch_pair<A: Algebroid + ?Sized>(alg: &A, name: &str, h: &Tensor, g: &Tensor, rep: &mut Report) {
    let k = alg.width();
    let lhs = alg.translation(&alg.mul(h, g));
    let th = alg.translation(h);
    let tg = alg.translation(g);
    let both = otimes(&[&th, &tg]);
    let rhs = expand(alg, &both, 2 * k, |e| otimes(&[&alg.mul(&e[0], &e[2]), &alg.mul(&e[3], &e[1])]));
    rep.check("Tch6", name, compare(alg, &lhs, &rhs, &Pattern::blk2()));
}

/// Tch9 on base generators and the unit.
pub fn tch_base<A: Algebroid + ?Sized>(alg: &A, rep: &mut Report) {
    let mut rs = vec![("1".to_string(), NCPoly::one())];
    rs.extend(base_generators(alg));
    for (rn, r) in &rs {
        for (sn, s) in &rs {
            let x = alg.mul(&alg.source(r), &alg.target(s));
            let lhs = alg.translation(&x);
            let rhs = otimes(&[&alg.target(s), &alg.target(r)]);
            rep.check("Tch9", format!("s({rn})t({sn})"), compare(alg, &lhs, &rhs, &Pattern::blk2()));
        }
    }
}

/// All nine translation-map identity families: single-element identities on
/// every generator and every product of two generators, Tch6 on all pairs of
/// generators, Tch9 on base generators, and Tch2/Tch3 on `random` random
/// elements of degree ≤ `degree`.
pub fn verify_tch<A: Algebroid + ?Sized>(alg: &A, degree: usize, random: usize, seed: u64) -> Report {
    let mut rep = Report::new(format!("tch {}", alg.name()));
    rep.check("Tch7", "1", compare_elem(alg, &{
        let t = alg.translation(&alg.one());
        expand(alg, &t, alg.width(), |e| alg.mul(&e[0], &e[1]))
    }, &alg.one()));
    for (name, h) in generator_products(alg) {
        tch_single(alg, &name, &h, &mut rep);
    }
    let gens = alg.generators();
    for (n1, g1) in &gens {
        for (n2, g2) in &gens {
            tch_pair(alg, &format!("{n1}, {n2}"), g1, g2, &mut rep);
        }
    }
    tch_base(alg, &mut rep);
    for (i, h) in random_elements(alg, degree, random, seed).iter().enumerate() {
        let mut sub = Report::new("");
        tch_single(alg, &format!("random#{i}"), h, &mut sub);
        rep.entries.extend(sub.entries.into_iter().filter(|e| e.id == "Tch2" || e.id == "Tch3"));
    }
    rep
}

/// The canonical map `h ⊗ h' ↦ h₍₁₎h' ⊗ h₍₂₎` from `𝓗_◂⊗▷𝓗` to `𝓗_◁⊗▷𝓗`.
pub fn galois_map<A: Algebroid + ?Sized>(alg: &A, x: &Tensor) -> Tensor {
    let k = alg.width();
    expand(alg, x, 2 * k, |e| {
        let d = alg.delta(&e[0]);
        expand(alg, &d, 2 * k, |f| otimes(&[&alg.mul(&f[0], &e[1]), &f[1]]))
    })
}

/// Its inverse `h ⊗ h' ↦ h'₊ ⊗ h'₋h`.
pub fn galois_inverse<A: Algebroid + ?Sized>(alg: &A, x: &Tensor) -> Tensor {
    let k = alg.width();
    expand(alg, x, 2 * k, |e| {
        let t = alg.translation(&e[1]);
        expand(alg, &t, 2 * k, |f| otimes(&[&f[0], &alg.mul(&f[1], &e[0])]))
    })
}

/// Simple tensors `h ⊗ h'` of spanning elements with total degree ≤ `degree`.
pub fn spanning_pairs<A: Algebroid + ?Sized>(alg: &A, degree: usize) -> Vec<Tensor> {
    let basis = alg.basis(degree);
    let mut out = Vec::new();
    for x in &basis {
        for y in &basis {
            if alg.degree(x) + alg.degree(y) <= degree {
                out.push(otimes(&[x, y]));
            }
        }
    }
    out
}

/// Both composites of the Galois map and its inverse on spanning tensors.
pub fn check_galois_roundtrips<A: Algebroid + ?Sized>(alg: &A, degree: usize) -> Report {
    let mut rep = Report::new(format!("galois {}", alg.name()));
    let k = alg.width();
    for x in spanning_pairs(alg, degree) {
        let label = x.to_text(&[alg.alphabet()]);
        let back = galois_inverse(alg, &galois_map(alg, &x));
        rep.check("galois.inverse_after_map", label.clone(), compare(alg, &back, &x, &Pattern::blk2()));
        let fwd = galois_map(alg, &galois_inverse(alg, &x));
        rep.check("galois.map_after_inverse", label, compare(alg, &fwd, &x, &Pattern::tri2()));
    }
    let unit = Tensor::unit(2 * k);
    rep.check("galois.unit", "1@1", compare(alg, &galois_map(alg, &unit), &unit, &Pattern::tri2()));
    rep
}

/// Translation of `m` in the regular comodule `M = 𝓗`, `λ = Δ`:
/// `m₊ ⊗ m₋ = ε(m₍₋₁₎₊)m₍₀₎ ⊗ m₍₋₁₎₋`.
pub fn regular_comodule_translation<A: Algebroid + ?Sized>(alg: &A, m: &Tensor) -> Tensor {
    let k = alg.width();
    let d = alg.delta(m);
    let t = translation_at(alg, &d, 0);
    expand(alg, &t, 2 * k, |e| {
        let r = alg.counit(&e[0]);
        otimes(&[&alg.mul(&alg.source(&r), &e[2]), &e[1]])
    })
}

/// Regular-comodule translation against the bialgebroid translation, plus
/// Mch6 `m₊◂ε(m₋) = m` and Mch2 `m₊₍₋₁₎m₋ ⊗ m₊₍₀₎ = 1 ⊗ m`.
pub fn verify_regular_comodule<A: Algebroid + ?Sized>(alg: &A) -> Report {
    let mut rep = Report::new(format!("comodule {}", alg.name()));
    let k = alg.width();
    let mut elems = vec![("1".to_string(), alg.one())];
    elems.extend(alg.generators());
    for (name, m) in &elems {
        let ct = regular_comodule_translation(alg, m);
        rep.check("comodule.regular", name.as_str(), compare(alg, &ct, &alg.translation(m), &Pattern::blk2()));
        let back = expand(alg, &ct, k, |e| alg.mul(&e[0], &alg.source(&alg.counit(&e[1]))));
        rep.check("Mch6", name.as_str(), compare_elem(alg, &back, m));
        let lam = delta_at(alg, &ct, 0);
        let lhs = expand(alg, &lam, 2 * k, |e| otimes(&[&alg.mul(&e[0], &e[2]), &e[1]]));
        rep.check("Mch2", name.as_str(), compare(alg, &lhs, &otimes(&[&alg.one(), m]), &Pattern::tri2()));
    }
    rep
}

/// Coassociativity, counitality and multiplicativity of Δ, and the s/t laws,
/// on generators and products of two generators.
pub fn verify_structure<A: Algebroid + ?Sized>(alg: &A) -> Report {
    let mut rep = Report::new(format!("structure {}", alg.name()));
    let k = alg.width();
    let b = base_generators(alg);
    for (rn, r) in &b {
        for (sn, s) in &b {
            let st = alg.mul(&alg.source(r), &alg.target(s));
            let ts = alg.mul(&alg.target(s), &alg.source(r));
            rep.check("source_target.commute", format!("{rn}, {sn}"), compare_elem(alg, &st, &ts));
            let rs = alg.base().mul(r, s);
            rep.check(
                "source.multiplicative",
                format!("{rn}, {sn}"),
                compare_elem(alg, &alg.source(&rs), &alg.mul(&alg.source(r), &alg.source(s))),
            );
            rep.check(
                "target.antimultiplicative",
                format!("{rn}, {sn}"),
                compare_elem(alg, &alg.target(&rs), &alg.mul(&alg.target(s), &alg.target(r))),
            );
        }
    }
    let gens = alg.generators();
    for (name, h) in generator_products(alg) {
        let d = alg.delta(&h);
        let l = delta_at(alg, &d, 0);
        let r = delta_at(alg, &d, 1);
        rep.check("delta.coassociative", name.as_str(), compare(alg, &l, &r, &Pattern::chain(3)));
        let cl = expand(alg, &d, k, |e| alg.mul(&alg.source(&alg.counit(&e[0])), &e[1]));
        rep.check("delta.counit.left", name.as_str(), compare_elem(alg, &cl, &h));
        let cr = expand(alg, &d, k, |e| alg.mul(&alg.target(&alg.counit(&e[1])), &e[0]));
        rep.check("delta.counit.right", name.as_str(), compare_elem(alg, &cr, &h));
        rep.check(
            "takeuchi",
            name.as_str(),
            takeuchi_defect(alg, &h).map(|(r, w)| format!("{r}: {w}")),
        );
    }
    for (n1, g1) in &gens {
        for (n2, g2) in &gens {
            let lhs = alg.delta(&alg.mul(g1, g2));
            let both = otimes(&[&alg.delta(g1), &alg.delta(g2)]);
            let rhs = expand(alg, &both, 2 * k, |e| otimes(&[&alg.mul(&e[0], &e[2]), &alg.mul(&e[1], &e[3])]));
            rep.check("delta.multiplicative", format!("{n1}, {n2}"), compare(alg, &lhs, &rhs, &Pattern::tri2()));
        }
    }
    rep
}

/// Words of a tensor printed with one alphabet, for labels.
pub fn label(t: &Tensor, alphabet: &[String]) -> String {
    t.to_text(&[alphabet])
}

/// Convenience: a one-word element.
pub fn word_elem(words: Vec<Word>) -> Tensor {
    Tensor::simple(words, Scalar::one())
}
