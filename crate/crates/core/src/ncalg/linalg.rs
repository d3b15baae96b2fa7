//! Exact linear algebra over ℚ(q): dense reduced row echelon solves and a
//! sparse incremental echelon basis for spans, membership and kernels.

use super::scalar::Scalar;
use std::collections::{BTreeMap, BTreeSet};

pub type SparseVec<K> = BTreeMap<K, Scalar>;

pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Scalar, x: &SparseVec<K>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let e = y.entry(k.clone()).or_default();
        *e = &*e + &(a * v);
        if e.is_zero() {
            y.remove(k);
        }
    }
}

pub fn scaled<K: Ord + Clone>(x: &SparseVec<K>, a: &Scalar) -> SparseVec<K> {
    let mut y = SparseVec::new();
    axpy(&mut y, a, x);
    y
}

/// Result of solving `Σ x_i · columns[i] = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    /// A particular solution, absent when the system is inconsistent.
    pub particular: Option<Vec<Scalar>>,
    /// Basis of the space of homogeneous solutions.
    pub kernel: Vec<Vec<Scalar>>,
}

impl Solution {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

/// Dense reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn solve<K: Ord + Clone>(columns: &[SparseVec<K>], rhs: &SparseVec<K>) -> Solution {
    let n = columns.len();
    let keys: BTreeSet<K> = columns
        .iter()
        .flat_map(|c| c.keys().cloned())
        .chain(rhs.keys().cloned())
        .collect();
    let idx: BTreeMap<K, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = vec![vec![Scalar::zero(); n + 1]; idx.len()];
    for (j, col) in columns.iter().enumerate() {
        for (k, v) in col {
            m[idx[k]][j] = v.clone();
        }
    }
    for (k, v) in rhs {
        m[idx[k]][n] = v.clone();
    }
    let pivots = rref(&mut m, n + 1);
    let consistent = !pivots.contains(&n);
    let particular = consistent.then(|| {
        let mut x = vec![Scalar::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = m[r][n].clone();
        }
        x
    });
    let pivset: BTreeSet<usize> = pivots.iter().copied().filter(|&c| c < n).collect();
    let mut kernel = Vec::new();
    for f in (0..n).filter(|c| !pivset.contains(c)) {
        let mut v = vec![Scalar::zero(); n];
        v[f] = Scalar::one();
        for (r, &c) in pivots.iter().enumerate() {
            if c < n {
                v[c] = -&m[r][f];
            }
        }
        // first nonzero entry scaled to one
        let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero kernel vector");
        let inv = lead.inv().expect("nonzero");
        kernel.push(v.iter().map(|x| x * &inv).collect());
    }
    Solution { particular, kernel }
}

pub fn rank<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> usize {
    let mut s = Span::new();
    for v in vectors {
        s.insert(v.clone());
    }
    s.dim()
}

/// Incremental echelon basis. Each stored row has leading (maximal) key equal
/// to its pivot, with coefficient one there.
#[derive(Clone, Debug, Default)]
pub struct Span<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Span<K> {
    pub fn new() -> Self {
        Span {
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    /// Full reduction: the result has no pivot keys in its support, so it is
    /// a canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut bound: Option<K> = None;
        loop {
            let next = v
                .iter()
                .rev()
                .filter(|(k, _)| bound.as_ref().is_none_or(|b| *k < b))
                .find(|(k, _)| self.rows.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else { break };
            axpy(&mut v, &-c, &self.rows[&k]);
            bound = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let r = self.reduce(&v);
        let Some((k, c)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let r = scaled(&r, &c.inv().expect("nonzero"));
        self.rows.insert(k, r);
        true
    }

    /// Rows re-reduced against each other, giving a basis independent of the
    /// insertion order.
    pub fn reduced_basis(&self) -> Vec<SparseVec<K>> {
        let mut out = Vec::new();
        for (k, row) in &self.rows {
            let mut rest = row.clone();
            rest.remove(k);
            let mut red = self.reduce(&rest);
            red.insert(k.clone(), Scalar::one());
            out.push(red);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Aug<K> {
    Src(usize),
    Img(K),
}

/// Kernel of the linear map sending the `i`-th source basis vector to
/// `images[i]`, as combinations of source indices.
pub fn kernel<K: Ord + Clone>(images: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut span: Span<Aug<K>> = Span::new();
    for (i, img) in images.iter().enumerate() {
        let mut v: SparseVec<Aug<K>> = SparseVec::new();
        v.insert(Aug::Src(i), Scalar::one());
        for (k, c) in img {
            v.insert(Aug::Img(k.clone()), c.clone());
        }
        span.insert(v);
    }
    let mut out = Vec::new();
    for row in span.reduced_basis() {
        if matches!(row.keys().next_back(), Some(Aug::Src(_))) {
            out.push(
                row.into_iter()
                    .map(|(k, c)| match k {
                        Aug::Src(i) => (i, c),
                        Aug::Img(_) => unreachable!(),
                    })
                    .collect(),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, Scalar::from_int(c))).collect()
    }

    #[test]
    fn solve_finds_particular_and_kernel() {
        let cols = vec![v(&[(0, 1), (1, 1)]), v(&[(0, 2), (1, 2)]), v(&[(1, 1)])];
        let s = solve(&cols, &v(&[(0, 1), (1, 3)]));
        let x = s.particular.clone().unwrap();
        let mut acc = SparseVec::new();
        for (c, xi) in cols.iter().zip(&x) {
            axpy(&mut acc, xi, c);
        }
        assert_eq!(acc, v(&[(0, 1), (1, 3)]));
        assert_eq!(s.kernel.len(), 1);
        assert!(!solve(&cols, &v(&[(2, 1)])).is_consistent());
    }

    #[test]
    fn span_reduction_is_canonical() {
        let mut a = Span::new();
        a.insert(v(&[(2, 1), (0, 1)]));
        a.insert(v(&[(1, 1), (0, -1)]));
        let mut b = Span::new();
        b.insert(v(&[(1, 1), (2, 1)]));
        b.insert(v(&[(2, 1), (0, 1)]));
        let x = v(&[(2, 5), (1, 3), (0, 7)]);
        assert_eq!(a.reduce(&x), b.reduce(&x));
        assert!(a.contains(&v(&[(2, 1), (1, 1)])));
    }

    #[test]
    fn kernel_of_projection() {
        let imgs = vec![v(&[(0, 1)]), v(&[(0, 1)]), v(&[(1, 1)])];
        let k = kernel(&imgs);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].len(), 2);
    }
}
