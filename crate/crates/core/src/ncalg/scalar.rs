//! Exact elements of the rational function field Q(q).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense integer polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
/// Always trimmed: no trailing zeros, the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IPoly {
    coeffs: Vec<BigInt>,
}

impl IPoly {
    pub fn zero() -> Self {
        IPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IPoly { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn ord(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn scale(&self, c: &BigInt) -> IPoly {
        if c.is_zero() {
            return IPoly::zero();
        }
        IPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn div_scalar(&self, c: &BigInt) -> IPoly {
        IPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    fn shift_down(&self, k: usize) -> IPoly {
        IPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    fn shift_up(&self, k: usize) -> IPoly {
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IPoly { coeffs }
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> IPoly {
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Pseudo-remainder of `a` by `b`.
    fn prem(a: &IPoly, b: &IPoly) -> IPoly {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lc();
        let mut r = a.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc();
            let shifted = b.shift_up(dr - db).scale(&lr);
            r = &r.scale(&lb) - &shifted;
        }
        r
    }

    /// Exact quotient; panics if `b` does not divide `a` in Z[q].
    fn exact_div(a: &IPoly, b: &IPoly) -> IPoly {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lc();
        let mut r = a.clone();
        let Some(da) = a.degree() else {
            return IPoly::zero();
        };
        if da < db {
            panic!("inexact polynomial division");
        }
        let mut quot = vec![BigInt::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let (qc, rem) = r.lc().div_rem(&lb);
            assert!(rem.is_zero(), "inexact polynomial division");
            quot[dr - db] = qc.clone();
            r = &r - &b.shift_up(dr - db).scale(&qc);
        }
        assert!(r.is_zero(), "inexact polynomial division");
        IPoly::from_coeffs(quot)
    }

    /// Greatest common divisor, content included, with positive leading coefficient.
    pub fn gcd(a: &IPoly, b: &IPoly) -> IPoly {
        if a.is_zero() {
            return b.primitive().scale(&b.content());
        }
        if b.is_zero() {
            return a.primitive().scale(&a.content());
        }
        let c = a.content().gcd(&b.content());
        let k = a.ord().min(b.ord());
        if a.nonzero_terms() == 1 || b.nonzero_terms() == 1 {
            return IPoly::monomial(c, k);
        }
        let mut x = a.shift_down(a.ord()).primitive();
        let mut y = b.shift_down(b.ord()).primitive();
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.degree() == Some(0) {
                x = IPoly::constant(BigInt::one());
                break;
            }
            let r = IPoly::prem(&x, &y);
            x = y;
            y = r.primitive();
        }
        x.primitive().shift_up(k).scale(&c)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, shift: i64, den: &BigInt) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = i as i64 - shift;
            let neg = c.is_negative();
            let mag = c.abs();
            let g = mag.gcd(den);
            let (n, d) = (&mag / &g, den / &g);
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if d.is_one() {
                format!("{n}")
            } else {
                format!("{n}/{d}")
            };
            match exp {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !(n.is_one() && d.is_one()) {
                        write!(f, "{coeff}*")?;
                    }
                    if exp == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{exp}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &IPoly {
    type Output = IPoly;
    fn add(self, o: &IPoly) -> IPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = o.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IPoly::from_coeffs(v)
    }
}

impl Sub for &IPoly {
    type Output = IPoly;
    fn sub(self, o: &IPoly) -> IPoly {
        self + &(-o)
    }
}

impl Neg for &IPoly {
    type Output = IPoly;
    fn neg(self) -> IPoly {
        IPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IPoly {
    type Output = IPoly;
    fn mul(self, o: &IPoly) -> IPoly {
        if self.is_zero() || o.is_zero() {
            return IPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        IPoly::from_coeffs(v)
    }
}

/// An element `num/den` of Q(q) in lowest terms with positive leading
/// coefficient in the denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IPoly,
    den: IPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: IPoly::zero(),
            den: IPoly::constant(BigInt::one()),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: IPoly::constant(BigInt::from(n)),
            den: IPoly::constant(BigInt::one()),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::new(
            IPoly::constant(BigInt::from(n)),
            IPoly::constant(BigInt::from(d)),
        )
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar {
            num: IPoly::constant(n),
            den: IPoly::constant(BigInt::one()),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Scalar {
                num: IPoly::monomial(BigInt::one(), k as usize),
                den: IPoly::constant(BigInt::one()),
            }
        } else {
            Scalar {
                num: IPoly::constant(BigInt::one()),
                den: IPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Builds and reduces `num/den`. Panics on a zero denominator.
    pub fn new(num: IPoly, den: IPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut s = Scalar { num, den };
        s.reduce();
        s
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = IPoly::constant(BigInt::one());
            return;
        }
        if !self.den.is_one() {
            let g = IPoly::gcd(&self.num, &self.den);
            if !g.is_one() {
                self.num = IPoly::exact_div(&self.num, &g);
                self.den = IPoly::exact_div(&self.den, &g);
            }
        }
        if self.den.lc().is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn numerator(&self) -> &IPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(Scalar::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Scalar {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Sign of a single-term value `c*q^k`, `None` for anything longer.
    fn monomial_sign(&self) -> Option<bool> {
        if self.num.nonzero_terms() == 1 && self.den.nonzero_terms() == 1 {
            return Some(self.num.lc().is_negative() != self.den.lc().is_negative());
        }
        None
    }

    /// True when printing needs no enclosing parentheses after a sign.
    fn is_atomic(&self) -> bool {
        self.monomial_sign().is_some()
    }

    /// Splits off a leading minus sign for display.
    pub fn split_sign(&self) -> (bool, Scalar) {
        if let Some(neg) = self.monomial_sign() {
            if neg {
                return (true, -self);
            }
        }
        (false, self.clone())
    }

    /// Denominator of the form `c*q^k`.
    fn laurent_den(&self) -> Option<(BigInt, usize)> {
        if self.den.nonzero_terms() == 1 {
            Some((self.den.lc(), self.den.ord()))
        } else {
            None
        }
    }

    /// Canonical text that the expression parser reads back.
    pub fn to_text(&self) -> String {
        let body = format!("{self}");
        if self.is_atomic() || self.is_zero() {
            body
        } else {
            format!("({body})")
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((c, k)) = self.laurent_den() {
            return self.num.fmt_with(f, k as i64, &c);
        }
        write!(f, "(")?;
        self.num.fmt_with(f, 0, &BigInt::one())?;
        write!(f, ")/(")?;
        self.den.fmt_with(f, 0, &BigInt::one())?;
        write!(f, ")")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Scalar::new(&self.num + &o.num, self.den.clone());
        }
        Scalar::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar {
                num: &self.num * &o.num,
                den: self.den.clone(),
            };
        }
        Scalar::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// A total order used only to make sorted output deterministic.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.coeffs(), self.den.coeffs()).cmp(&(other.num.coeffs(), other.den.coeffs()))
    }
}
