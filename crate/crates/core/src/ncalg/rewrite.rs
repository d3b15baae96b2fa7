//! Order-decreasing rewriting systems on words, normal forms and
//! ambiguity (critical pair) resolution.

use super::poly::{Letter, NCPoly, Tensor, Word};
use super::scalar::Scalar;
use std::collections::HashMap;
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RewriteError {
    #[error("rule {lhs} is not order-decreasing: right-hand side contains {bad}")]
    NotDecreasing { lhs: String, bad: String },
    #[error("rule with empty left-hand side")]
    EmptyLhs,
    #[error("letter index {0} outside the alphabet")]
    UnknownLetter(Letter),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// A failing ambiguity: two one-step reductions of `word` whose normal
/// forms differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Ambiguity {
    pub word: Word,
    pub rules: (usize, usize),
    pub left: NCPoly,
    pub right: NCPoly,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OverlapReport {
    pub checked: usize,
    pub failures: Vec<Ambiguity>,
}

impl OverlapReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

pub struct RewriteSystem {
    alphabet: Vec<String>,
    // per-letter weights refining the degree order before lex comparison
    order_weights: Vec<u32>,
    // longest word whose normal form the rule set is known to determine
    max_len: Option<usize>,
    rules: Vec<Rule>,
    // rules indexed by last letter of their lhs
    by_last: HashMap<Letter, Vec<usize>>,
    cache: RwLock<HashMap<Word, NCPoly>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        RewriteSystem {
            alphabet: self.alphabet.clone(),
            order_weights: self.order_weights.clone(),
            max_len: self.max_len,
            rules: self.rules.clone(),
            by_last: self.by_last.clone(),
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("alphabet", &self.alphabet)
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl RewriteSystem {
    pub fn new(alphabet: Vec<String>, rules: Vec<Rule>) -> Result<Self, RewriteError> {
        let n = alphabet.len();
        Self::with_order(alphabet, vec![0; n], rules)
    }

    /// Words are compared by length, then by the sum of `order_weights` over
    /// their letters, then lexicographically in alphabet order.
    pub fn with_order(
        alphabet: Vec<String>,
        order_weights: Vec<u32>,
        rules: Vec<Rule>,
    ) -> Result<Self, RewriteError> {
        let n = alphabet.len();
        assert_eq!(order_weights.len(), n, "one order weight per letter");
        let mut by_last: HashMap<Letter, Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            let Some(&last) = r.lhs.0.last() else {
                return Err(RewriteError::EmptyLhs);
            };
            for &l in r.lhs.0.iter() {
                if l as usize >= n {
                    return Err(RewriteError::UnknownLetter(l));
                }
            }
            if let Some(l) = r.rhs.max_letter() {
                if l as usize >= n {
                    return Err(RewriteError::UnknownLetter(l));
                }
            }
            for (w, _) in r.rhs.terms() {
                if cmp_weighted(&order_weights, w, &r.lhs) != std::cmp::Ordering::Less {
                    return Err(RewriteError::NotDecreasing {
                        lhs: NCPoly::word(r.lhs.clone()).to_text(&alphabet),
                        bad: NCPoly::word(w.clone()).to_text(&alphabet),
                    });
                }
            }
            by_last.entry(last).or_default().push(i);
        }
        Ok(RewriteSystem {
            alphabet,
            order_weights,
            max_len: None,
            rules,
            by_last,
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// System with no relations: the free algebra.
    pub fn free(alphabet: Vec<String>) -> Self {
        RewriteSystem::new(alphabet, Vec::new()).expect("free system")
    }

    /// Declares that normal forms are only certified for words up to `n`
    /// letters; normalizing a longer word panics.
    pub fn with_max_len(mut self, n: usize) -> Self {
        self.max_len = Some(n);
        self
    }

    pub fn max_len(&self) -> Option<usize> {
        self.max_len
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn order_weights(&self) -> &[u32] {
        &self.order_weights
    }

    /// The monomial order of this system.
    pub fn cmp_words(&self, a: &Word, b: &Word) -> std::cmp::Ordering {
        cmp_weighted(&self.order_weights, a, b)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.alphabet.iter().position(|a| a == name).map(|i| i as Letter)
    }

    pub fn gen(&self, name: &str) -> NCPoly {
        NCPoly::letter(self.letter(name).unwrap_or_else(|| panic!("no generator {name}")))
    }

    /// Rule matching a suffix of `w`, preferring the longest left-hand side.
    fn suffix_rule(&self, w: &[Letter]) -> Option<usize> {
        let last = *w.last()?;
        let cands = self.by_last.get(&last)?;
        let mut best: Option<usize> = None;
        for &i in cands {
            let l = &self.rules[i].lhs.0;
            if l.len() <= w.len() && w[w.len() - l.len()..] == l[..] {
                match best {
                    Some(b) if self.rules[b].lhs.len() >= l.len() => {}
                    _ => best = Some(i),
                }
            }
        }
        best
    }

    /// Leftmost occurrence of a left-hand side, as (start, rule).
    fn find_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for end in 1..=w.len() {
            if let Some(i) = self.suffix_rule(&w[..end]) {
                return Some((end - self.rules[i].lhs.len(), i));
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(&w.0).is_none()
    }

    /// Normal form of a single word.
    pub fn normalize_word(&self, w: &Word) -> NCPoly {
        if w.len() <= 1 && self.find_redex(&w.0).is_none() {
            return NCPoly::word(w.clone());
        }
        if let Some(p) = self.cache.read().unwrap().get(w) {
            return p.clone();
        }
        if let Some(m) = self.max_len {
            assert!(
                w.len() <= m,
                "word of length {} exceeds the certified length {m} of this rewrite system",
                w.len()
            );
        }
        let res = match self.find_redex(&w.0) {
            None => NCPoly::word(w.clone()),
            Some((start, i)) => {
                let r = &self.rules[i];
                let pre = Word(w.0[..start].to_vec());
                let post = Word(w.0[start + r.lhs.len()..].to_vec());
                let mut acc = NCPoly::zero();
                for (m, c) in r.rhs.terms() {
                    let nw = pre.concat(m).concat(&post);
                    acc.add_scaled(&self.normalize_word(&nw), c);
                }
                acc
            }
        };
        self.cache.write().unwrap().insert(w.clone(), res.clone());
        res
    }

    pub fn normalize(&self, p: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in p.terms() {
            acc.add_scaled(&self.normalize_word(w), c);
        }
        acc
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                acc.add_scaled(&self.normalize_word(&u.concat(v)), &(x * y));
            }
        }
        acc
    }

    pub fn product(&self, fs: &[NCPoly]) -> NCPoly {
        let mut acc = NCPoly::one();
        for f in fs {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &NCPoly, n: usize) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Irreducible words of length at most `max_len`, ascending.
    pub fn graded_basis(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for u in &layer {
                for l in 0..self.alphabet.len() as Letter {
                    let mut v = u.0.clone();
                    v.push(l);
                    if self.suffix_rule(&v).is_none() {
                        next.push(Word(v));
                    }
                }
            }
            next.sort_by(|a, b| self.cmp_words(a, b));
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Resolves every overlap and inclusion ambiguity among left-hand sides
    /// whose ambiguous word has length at most `max_len`.
    pub fn check_overlaps(&self, max_len: usize) -> OverlapReport {
        let mut rep = OverlapReport::default();
        for (i, ri) in self.rules.iter().enumerate() {
            let li = &ri.lhs.0;
            for (j, rj) in self.rules.iter().enumerate() {
                let lj = &rj.lhs.0;
                // overlaps: suffix of li equal to prefix of lj
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] != lj[..k] {
                        continue;
                    }
                    let total = li.len() + lj.len() - k;
                    if total > max_len {
                        continue;
                    }
                    let mut w = li.clone();
                    w.extend_from_slice(&lj[k..]);
                    let tail = NCPoly::word(Word(lj[k..].to_vec()));
                    let head = NCPoly::word(Word(li[..li.len() - k].to_vec()));
                    let left = self.normalize(&ri.rhs.concat_mul(&tail));
                    let right = self.normalize(&head.concat_mul(&rj.rhs));
                    rep.checked += 1;
                    if left != right {
                        rep.failures.push(Ambiguity {
                            word: Word(w),
                            rules: (i, j),
                            left,
                            right,
                        });
                    }
                }
                // inclusions: lj inside li
                if i != j && lj.len() <= li.len() && li.len() <= max_len {
                    for p in 0..=li.len() - lj.len() {
                        if li[p..p + lj.len()] != lj[..] {
                            continue;
                        }
                        let head = NCPoly::word(Word(li[..p].to_vec()));
                        let tail = NCPoly::word(Word(li[p + lj.len()..].to_vec()));
                        let left = self.normalize(&ri.rhs);
                        let right = self.normalize(&head.concat_mul(&rj.rhs).concat_mul(&tail));
                        rep.checked += 1;
                        if left != right {
                            rep.failures.push(Ambiguity {
                                word: ri.lhs.clone(),
                                rules: (i, j),
                                left,
                                right,
                            });
                        }
                    }
                }
            }
        }
        rep
    }
}

fn cmp_weighted(weights: &[u32], a: &Word, b: &Word) -> std::cmp::Ordering {
    let w = |x: &Word| x.0.iter().map(|&l| weights[l as usize] as u64).sum::<u64>();
    a.len()
        .cmp(&b.len())
        .then_with(|| w(a).cmp(&w(b)))
        .then_with(|| a.0.cmp(&b.0))
}

/// Brings every slot of a tensor to normal form, slot `i` using `systems[i]`.
pub fn normalize_tensor(t: &Tensor, systems: &[&RewriteSystem]) -> Tensor {
    assert_eq!(t.arity(), systems.len(), "one rewrite system per slot");
    let n = t.arity();
    t.map_terms(n, |k| {
        let polys: Vec<NCPoly> = k
            .iter()
            .zip(systems)
            .map(|(w, s)| s.normalize_word(w))
            .collect();
        Tensor::from_polys(&polys)
    })
}

/// Slotwise product `(x_1⊗…⊗x_n)(y_1⊗…⊗y_n) = x_1y_1⊗…⊗x_ny_n`.
pub fn mul_tensors(a: &Tensor, b: &Tensor, systems: &[&RewriteSystem]) -> Tensor {
    assert_eq!(a.arity(), b.arity());
    let n = a.arity();
    let mut acc = Tensor::zero(n);
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let polys: Vec<NCPoly> = ka
                .iter()
                .zip(kb)
                .zip(systems)
                .map(|((u, v), s)| s.normalize_word(&u.concat(v)))
                .collect();
            acc.add_scaled(&Tensor::from_polys(&polys), &(ca * cb));
        }
    }
    acc
}

/// Normal form of a tensor written with polynomial coefficients per slot.
pub fn tensor_of(polys: &[NCPoly], systems: &[&RewriteSystem]) -> Tensor {
    let p: Vec<NCPoly> = polys.iter().zip(systems).map(|(x, s)| s.normalize(x)).collect();
    Tensor::from_polys(&p)
}

/// Convenience for building a rule from a word and a right-hand side.
pub fn rule(lhs: &[Letter], rhs: NCPoly) -> Rule {
    Rule {
        lhs: Word(lhs.to_vec()),
        rhs,
    }
}

/// `c · w` as a polynomial.
pub fn mono(c: Scalar, w: &[Letter]) -> NCPoly {
    NCPoly::term(Word(w.to_vec()), c)
}
