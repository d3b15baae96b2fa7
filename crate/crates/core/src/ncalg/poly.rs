//! Words, noncommutative polynomials and multi-slot tensors of words.

use super::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;

pub type Letter = u16;

/// A monomial: a finite sequence of generator indices. Ordered
/// degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Finite linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug, Hash, PartialOrd, Ord)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::letter(l))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn as_map(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn from_map(terms: BTreeMap<Word, Scalar>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Leading word under the degree-lexicographic order.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &o.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_scaled(self, c);
        p
    }

    /// Product by concatenation, without any reduction.
    pub fn concat_mul(&self, o: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }

    /// Constant term when the polynomial is a scalar multiple of the unit.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max()
    }

    /// Canonical text over the given alphabet, readable by the parser.
    pub fn to_text(&self, alphabet: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.split_sign();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term_text(w, &mag, alphabet));
        }
        out
    }
}

fn word_text(w: &Word, alphabet: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.0.len() {
        let l = w.0[i];
        let mut j = i;
        while j < w.0.len() && w.0[j] == l {
            j += 1;
        }
        let name = &alphabet[l as usize];
        if j - i == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

/// `mag` carries no leading minus sign when it is a single term.
fn term_text(w: &Word, mag: &Scalar, alphabet: &[String]) -> String {
    if w.is_empty() {
        return mag.to_text();
    }
    let wt = word_text(w, alphabet);
    if mag.is_one() {
        wt
    } else {
        format!("{}*{wt}", mag.to_text())
    }
}

impl std::ops::Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, o: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(o, &Scalar::one());
        p
    }
}

impl std::ops::Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, o: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(o, &-Scalar::one());
        p
    }
}

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Scalar::one())
    }
}

/// Finite sum of simple tensors `w_1 ⊗ … ⊗ w_n` of words. Each slot is a
/// word over its own alphabet; the tensor itself does not know which.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// The tensor `1 ⊗ … ⊗ 1`.
    pub fn unit(arity: usize) -> Self {
        Self::simple(vec![Word::empty(); arity], Scalar::one())
    }

    pub fn simple(slots: Vec<Word>, c: Scalar) -> Self {
        let mut t = Tensor::zero(slots.len());
        t.add_term(slots, c);
        t
    }

    /// One-slot tensor from a polynomial.
    pub fn from_poly(p: &NCPoly) -> Self {
        let mut t = Tensor::zero(1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    /// Tensor product of one polynomial per slot.
    pub fn from_polys(ps: &[NCPoly]) -> Self {
        let mut t = Tensor::unit(0);
        for p in ps {
            t = t.otimes(&Tensor::from_poly(p));
        }
        t
    }

    /// Reads a one-slot tensor back as a polynomial.
    pub fn to_poly(&self) -> NCPoly {
        assert_eq!(self.arity, 1, "to_poly on a tensor of arity {}", self.arity);
        let mut p = NCPoly::zero();
        for (k, c) in &self.terms {
            p.add_term(k[0].clone(), c.clone());
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn as_map(&self) -> &BTreeMap<Vec<Word>, Scalar> {
        &self.terms
    }

    pub fn from_map(arity: usize, terms: BTreeMap<Vec<Word>, Scalar>) -> Self {
        let mut t = Tensor::zero(arity);
        for (k, c) in terms {
            t.add_term(k, c);
        }
        t
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Vec<Word>, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, k: &[Word]) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, slots: Vec<Word>, c: Scalar) {
        assert_eq!(slots.len(), self.arity, "slot count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Tensor, c: &Scalar) {
        assert_eq!(o.arity, self.arity, "arity mismatch in tensor sum");
        if c.is_zero() {
            return;
        }
        for (k, d) in &o.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn add(&mut self, o: &Tensor) {
        self.add_scaled(o, &Scalar::one());
    }

    pub fn sub(&mut self, o: &Tensor) {
        self.add_scaled(o, &-Scalar::one());
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut t = Tensor::zero(self.arity);
        t.add_scaled(self, c);
        t
    }

    pub fn plus(&self, o: &Tensor) -> Tensor {
        let mut t = self.clone();
        t.add(o);
        t
    }

    pub fn minus(&self, o: &Tensor) -> Tensor {
        let mut t = self.clone();
        t.sub(o);
        t
    }

    /// Outer tensor product: arities add.
    pub fn otimes(&self, o: &Tensor) -> Tensor {
        let mut t = Tensor::zero(self.arity + o.arity);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                t.add_term(k, c1 * c2);
            }
        }
        t
    }

    /// Reorders slots: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        let mut t = Tensor::zero(perm.len());
        for (k, c) in &self.terms {
            t.add_term(perm.iter().map(|&i| k[i].clone()).collect(), c.clone());
        }
        t
    }

    /// Replaces the slot range `[at, at+width)` of every simple tensor by the
    /// output of `f` on that block, which has arity `out`.
    pub fn map_block<F>(&self, at: usize, width: usize, out: usize, mut f: F) -> Tensor
    where
        F: FnMut(&[Word]) -> Tensor,
    {
        let mut t = Tensor::zero(self.arity - width + out);
        for (k, c) in &self.terms {
            let img = f(&k[at..at + width]);
            assert_eq!(img.arity, out, "block map returned wrong arity");
            for (k2, c2) in &img.terms {
                let mut nk = Vec::with_capacity(t.arity);
                nk.extend(k[..at].iter().cloned());
                nk.extend(k2.iter().cloned());
                nk.extend(k[at + width..].iter().cloned());
                t.add_term(nk, c * c2);
            }
        }
        t
    }

    /// Applies a multilinear map to each simple tensor as a whole.
    pub fn map_terms<F>(&self, out: usize, mut f: F) -> Tensor
    where
        F: FnMut(&[Word]) -> Tensor,
    {
        let mut t = Tensor::zero(out);
        for (k, c) in &self.terms {
            let img = f(k);
            t.add_scaled(&img, c);
        }
        t
    }

    /// Text form with `@` between slots, one alphabet per slot.
    pub fn to_text(&self, alphabets: &[&[String]]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.split_sign();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut slots: Vec<String> = Vec::with_capacity(k.len());
            for (j, w) in k.iter().enumerate() {
                let alpha = alphabets[j.min(alphabets.len() - 1)];
                slots.push(if w.is_empty() { "1".into() } else { word_text(w, alpha) });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_text());
                out.push('*');
            }
            out.push_str(&slots.join("@"));
        }
        out
    }
}
