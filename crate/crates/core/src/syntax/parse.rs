use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Generator and constant symbols of the expression language.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sym {
    A,
    AStar,
    C,
    CStar,
    E,
    F,
    K,
    Q,
    S,
    /// Tangent vector X_i.
    X(u8),
    /// Functional f_ij.
    Fij(u8, u8),
    /// Left-invariant form ω_i.
    Omega(u8),
    /// Right-invariant form η_i.
    Eta(u8),
    Xi(u8),
    Del,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    Sym(Sym),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Wedge(Box<Expr>, Box<Expr>),
    D(Box<Expr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Sym(Sym),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    LParen,
    RParen,
    D,
}

pub fn index_of(c: char) -> Option<u8> {
    match c {
        '-' => Some(0),
        '+' => Some(1),
        'z' => Some(2),
        '0' => Some(3),
        _ => None,
    }
}

pub const INDEX_CHARS: [char; 4] = ['-', '+', 'z', '0'];

fn is_operand_start(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '('
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let peek = |j: usize| chars.get(j).copied();
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let indexed = |j: usize| -> Result<u8> {
            peek(j)
                .and_then(index_of)
                .ok_or_else(|| syntax(j, "expected index -, +, z or 0"))
        };
        let tok = match c {
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                i = j;
                out.push((start, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '/' => {
                if peek(i + 1) == Some('\\') {
                    i += 1;
                    Tok::Wedge
                } else {
                    Tok::Slash
                }
            }
            'a' | 'c' => {
                let starred = match peek(i + 1) {
                    Some('!') => true,
                    Some('*') => !peek(i + 2).is_some_and(is_operand_start),
                    _ => false,
                };
                if starred {
                    i += 1;
                }
                Tok::Sym(match (c, starred) {
                    ('a', false) => Sym::A,
                    ('a', true) => Sym::AStar,
                    ('c', false) => Sym::C,
                    _ => Sym::CStar,
                })
            }
            'E' => Tok::Sym(Sym::E),
            'F' => Tok::Sym(Sym::F),
            'K' => Tok::Sym(Sym::K),
            'q' => Tok::Sym(Sym::Q),
            's' => Tok::Sym(Sym::S),
            'X' => {
                i += 1;
                Tok::Sym(Sym::X(indexed(i)?))
            }
            'w' => {
                i += 1;
                Tok::Sym(Sym::Omega(indexed(i)?))
            }
            'e' => {
                i += 1;
                Tok::Sym(Sym::Eta(indexed(i)?))
            }
            'x' if peek(i + 1) == Some('i') => {
                i += 2;
                Tok::Sym(Sym::Xi(indexed(i)?))
            }
            'd' if chars[i..].iter().collect::<String>().starts_with("del") => {
                i += 2;
                Tok::Sym(Sym::Del)
            }
            'd' => Tok::D,
            'f' => {
                let mut idx = [0u8; 2];
                for slot in idx.iter_mut() {
                    if peek(i + 1) != Some('[') {
                        return Err(syntax(i + 1, "expected f[i][j]"));
                    }
                    *slot = indexed(i + 2)?;
                    if peek(i + 3) != Some(']') {
                        return Err(syntax(i + 3, "expected ]"));
                    }
                    i += 3;
                }
                Tok::Sym(Sym::Fij(idx[0], idx[1]))
            }
            _ => return Err(syntax(i, format!("unexpected character `{}`", c))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat(&Tok::Minus) {
            Expr::Neg(Box::new(self.wedge()?))
        } else {
            self.wedge()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.wedge()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.wedge()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn wedge(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        while self.eat(&Tok::Wedge) {
            lhs = Expr::Wedge(Box::new(lhs), Box::new(self.product()?));
        }
        Ok(lhs)
    }

    fn starts_operand(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Sym(_) | Tok::LParen | Tok::D)
        )
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_operand() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let neg = self.eat(&Tok::Minus);
        let at = self.here();
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Err(syntax(at, "expected integer exponent"));
        };
        self.pos += 1;
        let n: i64 = n.try_into().map_err(|_| syntax(at, "exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Sym(s)) => {
                self.pos += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.here(), "expected )"));
                }
                Ok(e)
            }
            Some(Tok::D) => {
                self.pos += 1;
                if !self.eat(&Tok::LParen) {
                    return Err(syntax(self.here(), "expected ( after d"));
                }
                let e = self.sum()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.here(), "expected )"));
                }
                Ok(Expr::D(Box::new(e)))
            }
            Some(_) => Err(syntax(at, "expected operand")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses an expression. Precedence from tightest: `^`, then `*`, `/` and
/// juxtaposition, then `/\`, then `+` and `-`.
pub fn parse(input: &str) -> Result<Expr> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: input.chars().count(),
    };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: Sym) -> Box<Expr> {
        Box::new(Expr::Sym(s))
    }

    #[test]
    fn product_of_a_and_a_star() {
        assert_eq!(
            parse("a * a!").unwrap(),
            Expr::Mul(sym(Sym::A), sym(Sym::AStar))
        );
        assert_eq!(
            parse("a* a").unwrap(),
            Expr::Mul(sym(Sym::AStar), sym(Sym::A))
        );
        assert_eq!(parse("a*c").unwrap(), Expr::Mul(sym(Sym::A), sym(Sym::C)));
    }

    #[test]
    fn wedge_binds_looser_than_product() {
        let e = parse("q^-1 * (wz /\\ w+)").unwrap();
        let w = Expr::Wedge(sym(Sym::Omega(2)), sym(Sym::Omega(1)));
        assert_eq!(
            e,
            Expr::Mul(Box::new(Expr::Pow(sym(Sym::Q), -1)), Box::new(w))
        );
        let e = parse("a * w- /\\ w+").unwrap();
        assert!(matches!(e, Expr::Wedge(..)));
    }

    #[test]
    fn indexed_symbols() {
        assert_eq!(parse("f[z][-]").unwrap(), Expr::Sym(Sym::Fij(2, 0)));
        assert_eq!(
            parse("xi0 del").unwrap(),
            Expr::Mul(sym(Sym::Xi(3)), sym(Sym::Del))
        );
        assert_eq!(
            parse("w- - w+").unwrap(),
            Expr::Sub(sym(Sym::Omega(0)), sym(Sym::Omega(1)))
        );
        assert!(matches!(parse("d(a)").unwrap(), Expr::D(_)));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse("a + ").unwrap_err(),
            Error::Syntax {
                pos: 4,
                msg: "unexpected end of input".into()
            }
        );
        assert!(matches!(parse("a ) c"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("wq"), Err(Error::Syntax { pos: 1, .. })));
    }
}
