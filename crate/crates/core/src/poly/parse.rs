use num_bigint::BigInt;

use super::{Coeff, Polynomial, VarSet};
use crate::error::{Error, Result};

/// Parses a polynomial in the variables of `vars`.
///
/// Accepts `+`, `-` (also U+2212), `*` (optional), `/` by a nonzero
/// constant, `^` with a nonnegative integer exponent, and parentheses.
/// Identifiers are split into the known variable names, so `xy` reads as
/// `x*y` when `xy` itself is not a variable.
pub fn parse_polynomial(input: &str, vars: &VarSet) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        vars,
        len: input.len(),
    };
    let out = p.expr()?;
    if let Some((pos, tok)) = p.tokens.get(p.pos) {
        return Err(Error::Parse {
            pos: *pos,
            msg: format!("unexpected {tok:?}"),
        });
    }
    Ok(out)
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
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Num(s.parse().expect("digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(s)));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((pos, tok));
        chars.next();
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a VarSet,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.vars);
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let f = self.power()?;
                    if !f.is_constant() || f.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division only by a nonzero constant".into(),
                        });
                    }
                    acc = acc.scale(&f.constant_term().recip());
                }
                _ if self.starts_factor() => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.clone(),
                _ => return self.err("expected exponent"),
            };
            self.pos += 1;
            let e: u32 = match u32::try_from(&e) {
                Ok(e) => e,
                Err(_) => return Err(Error::ExponentOverflow),
            };
            if let Some(d) = base.total_degree() {
                if (d as u64) * (e as u64) > u32::MAX as u64 {
                    return Err(Error::ExponentOverflow);
                }
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.vars, Coeff::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                let parts = split_ident(&s, self.vars)
                    .ok_or_else(|| Error::UnknownVariable(s.clone()))?;
                let mut acc = Polynomial::one(self.vars);
                for i in parts {
                    acc = &acc * &Polynomial::var(self.vars, i);
                }
                Ok(acc)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(t) => Err(Error::Parse {
                pos: at,
                msg: format!("unexpected {t:?}"),
            }),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Splits an identifier into variable indices, preferring longer names.
fn split_ident(s: &str, vars: &VarSet) -> Option<Vec<usize>> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    let mut candidates: Vec<(usize, &String)> = vars
        .names()
        .iter()
        .enumerate()
        .filter(|(_, n)| s.starts_with(n.as_str()))
        .collect();
    candidates.sort_by(|a, b| b.1.len().cmp(&a.1.len()));
    for (i, name) in candidates {
        if let Some(mut rest) = split_ident(&s[name.len()..], vars) {
            rest.insert(0, i);
            return Some(rest);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio, Monomial};

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn parses_rational_coefficients() {
        let r = vs(&["x", "y"]);
        let f = parse_polynomial("3/4*x^2*y - x + 1", &r).unwrap();
        assert_eq!(f.coeff(&Monomial::new(vec![2, 1])), ratio(3, 4));
        assert_eq!(f.coeff(&Monomial::new(vec![1, 0])), rat(-1));
        assert_eq!(f.constant_term(), rat(1));
    }

    #[test]
    fn implicit_multiplication_and_unicode_minus() {
        let r = vs(&["x", "y", "u", "v"]);
        let a = parse_polynomial("xv \u{2212} yu \u{2212} 1", &r).unwrap();
        let b = parse_polynomial("x*v - y*u - 1", &r).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn multi_character_names() {
        let r = vs(&["X0", "X1", "Y0", "Y1", "Y10"]);
        let f = parse_polynomial("X0Y1 - X1Y10", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&Monomial::new(vec![1, 0, 0, 1, 0])), rat(1));
        assert_eq!(f.coeff(&Monomial::new(vec![0, 1, 0, 0, 1])), rat(-1));
    }

    #[test]
    fn parentheses_and_powers() {
        let r = vs(&["t", "v", "u"]);
        let f = parse_polynomial("(u*t^3 - v*t^2)^2", &r).unwrap();
        let g = parse_polynomial("u^2 t^6 - 2 u v t^5 + v^2 t^4", &r).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn zero_prints_and_parses() {
        let r = vs(&["x"]);
        let z = parse_polynomial("0", &r).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn errors_are_reported() {
        let r = vs(&["x", "y"]);
        assert!(matches!(
            parse_polynomial("x + z", &r),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(parse_polynomial("x +", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("(x", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x / y", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x # y", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn printer_output_is_stable() {
        let r = vs(&["x", "y"]);
        let f = parse_polynomial("1 - x + 3/4 x^2 y", &r).unwrap();
        assert_eq!(f.to_string(), "3/4*x^2*y - x + 1");
    }
}
