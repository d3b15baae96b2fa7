//! Text syntax for polynomials and tensors.
//!
//! ```text
//! texpr  := tterm (('+' | '-') tterm)*
//! tterm  := sign? slot ('@' slot)*
//! slot   := factor (('*' | '/')? factor)*
//! factor := NUMBER | IDENT ('^' '-'? INT)? | '(' texpr ')'
//! ```
//!
//! Juxtaposition multiplies. `@` separates tensor slots and binds tighter
//! than `+`, so `a@d + c@d'` has two slots. The identifier `q`
//! is the deformation parameter; every other identifier is looked up in the
//! alphabet of the slot it appears in.

use super::poly::{NCPoly, Tensor};
use super::rewrite::RewriteSystem;
use super::scalar::Scalar;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    At,
    LParen,
    RParen,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_cont(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || ('\u{300}'..='\u{36f}').contains(&c)
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut j = i;
            while let Some(&(k, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                j = k + d.len_utf8();
                it.next();
            }
            out.push((i, Tok::Num(s[i..j].parse().expect("digits"))));
            continue;
        }
        if is_ident_start(c) {
            let mut j = i;
            while let Some(&(k, d)) = it.peek() {
                if !is_ident_cont(d) {
                    break;
                }
                j = k + d.len_utf8();
                it.next();
            }
            out.push((i, Tok::Ident(s[i..j].to_string())));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '@' | '⊗' => Tok::At,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(ParseError {
                    pos: i,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        };
        out.push((i, t));
        it.next();
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    systems: &'a [&'a RewriteSystem],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn system(&self, slot: usize) -> &'a RewriteSystem {
        self.systems[slot.min(self.systems.len() - 1)]
    }

    fn texpr(&mut self, slot0: usize, nested: bool) -> Result<Tensor, ParseError> {
        let mut acc = self.tterm(slot0, nested)?;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.tterm(slot0, nested)?;
            if t.arity() != acc.arity() {
                return self.err(format!(
                    "summands with {} and {} tensor slots",
                    acc.arity(),
                    t.arity()
                ));
            }
            if neg {
                acc.sub(&t);
            } else {
                acc.add(&t);
            }
        }
        Ok(acc)
    }

    fn tterm(&mut self, slot0: usize, nested: bool) -> Result<Tensor, ParseError> {
        let mut neg = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Minus => neg = !neg,
                Tok::Plus => {}
                _ => break,
            }
            self.pos += 1;
        }
        let mut polys = vec![self.slot(slot0)?];
        while self.peek() == Some(&Tok::At) {
            if nested {
                return self.err("'@' inside a parenthesized slot factor");
            }
            self.pos += 1;
            polys.push(self.slot(polys.len())?);
        }
        let t = Tensor::from_polys(&polys);
        Ok(if neg { t.scale(&-Scalar::one()) } else { t })
    }

    fn slot(&mut self, slot: usize) -> Result<NCPoly, ParseError> {
        let sys = self.system(slot);
        let mut acc = self.factor(slot)?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor(slot)?;
                    acc = sys.mul(&acc, &f);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let f = self.factor(slot)?;
                    let Some(c) = f.as_scalar() else {
                        return Err(ParseError {
                            pos: at,
                            msg: "division by a non-scalar".into(),
                        });
                    };
                    let Some(inv) = c.inv() else {
                        return Err(ParseError {
                            pos: at,
                            msg: "division by zero".into(),
                        });
                    };
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    let f = self.factor(slot)?;
                    acc = sys.mul(&acc, &f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<i64>, ParseError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(None);
        }
        self.pos += 1;
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            neg = true;
            self.pos += 1;
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let Ok(k) = i64::try_from(n) else {
                    return self.err("exponent too large");
                };
                Ok(Some(if neg { -k } else { k }))
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn factor(&mut self, slot: usize) -> Result<NCPoly, ParseError> {
        let sys = self.system(slot);
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(NCPoly::constant(Scalar::from_bigint(n)))
            }
            Some(Tok::Ident(name)) => {
                let at = self.here();
                self.pos += 1;
                let e = self.exponent()?.unwrap_or(1);
                if name == "q" {
                    return Ok(NCPoly::constant(Scalar::q_pow(e)));
                }
                let Some(l) = sys.letter(&name) else {
                    return Err(ParseError {
                        pos: at,
                        msg: format!("unknown generator {name:?}"),
                    });
                };
                if e < 0 {
                    return Err(ParseError {
                        pos: at,
                        msg: format!("negative power of generator {name:?}"),
                    });
                }
                Ok(sys.pow(&NCPoly::letter(l), e as usize))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.texpr(slot, true)?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                let inner = t.to_poly();
                match self.exponent()? {
                    None => Ok(inner),
                    Some(e) if e >= 0 => Ok(sys.pow(&inner, e as usize)),
                    Some(e) => {
                        let Some(c) = inner.as_scalar().and_then(|c| c.inv()) else {
                            return self.err("negative power of a non-scalar");
                        };
                        Ok(NCPoly::constant(c.pow(-e)))
                    }
                }
            }
            _ => self.err("expected a number, identifier or '('"),
        }
    }
}

/// Parses a tensor expression. Slot `i` uses `systems[i]`; extra slots reuse
/// the last system. The result is in normal form.
pub fn parse_tensor(text: &str, systems: &[&RewriteSystem]) -> Result<Tensor, ParseError> {
    assert!(!systems.is_empty(), "at least one alphabet");
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        systems,
    };
    let t = p.texpr(0, false)?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(t)
}

/// Parses a single-slot expression in normal form.
pub fn parse_poly(text: &str, system: &RewriteSystem) -> Result<NCPoly, ParseError> {
    let t = parse_tensor(text, &[system])?;
    if t.arity() != 1 {
        return Err(ParseError {
            pos: 0,
            msg: format!("expected one tensor slot, found {}", t.arity()),
        });
    }
    Ok(t.to_poly())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(names: &[&str]) -> RewriteSystem {
        RewriteSystem::free(names.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn at_binds_tighter_than_plus() {
        let s = free(&["a", "b"]);
        let t = parse_tensor("a@b + b@a", &[&s]).unwrap();
        assert_eq!(t.arity(), 2);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn roundtrip_through_printer() {
        let s = free(&["a", "b", "c"]);
        let src = "q^-1*a*b - (q - q^-1)*b*c + 1/2*c^2 - 3";
        let p = parse_poly(src, &s).unwrap();
        let back = parse_poly(&p.to_text(s.alphabet()), &s).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn juxtaposition_multiplies() {
        let s = free(&["a", "b"]);
        assert_eq!(parse_poly("2 a b", &s).unwrap(), parse_poly("2*a*b", &s).unwrap());
    }

    #[test]
    fn unknown_generator_is_reported() {
        let s = free(&["a"]);
        let e = parse_poly("a*z", &s).unwrap_err();
        assert_eq!(e.pos, 2);
    }

    #[test]
    fn unicode_identifiers() {
        let s = free(&["α", "β̃"]);
        let p = parse_poly("α*β̃", &s).unwrap();
        assert_eq!(p.degree(), 2);
    }
}
