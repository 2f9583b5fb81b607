//! The expression grammar shared by `eval` and `dot`:
//!
//! ```text
//! combination := ['+'|'-'] term (('+'|'-') term)*
//! term        := rational ['*'] [factor] | factor
//! factor      := primary (('∘'|'o'|'*'|'⊗'|'(x)') primary)*
//! primary     := 'Δ'('coprod') '(' combination ')'
//!              | 'ckΔ'('ckcoprod') '(' combination ')'
//!              | 'fΔ'('fcoprod') '(' combination ')'
//!              | 'S' '(' combination ')'
//!              | 'brace' '(' combination ';' forest ')'
//!              | 'B+' '(' color ';' forest ')'
//!              | '(' combination ')'
//!              | forest literal | '1'
//! ```
//!
//! `o` is reserved for the circle product and cannot be used as a color
//! inside expressions. Function names are only reserved when immediately
//! followed by `(`.

use std::fmt;

use prelie_hopf_core::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum ProductOp {
    Circle,
    Star,
    Tensor,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Func {
    Unshuffle,
    CkCoproduct,
    FoissyCoproduct,
    Antipode,
}

#[derive(Clone, Debug)]
pub enum Expr {
    /// Signed, optionally scaled terms of a sum.
    Sum(Vec<(Scalar, Expr)>),
    Product(Box<Expr>, ProductOp, Box<Expr>),
    Call(Func, Box<Expr>),
    /// `brace(X; forest)` — the forest text is re-read per mode.
    Brace(Box<Expr>, String),
    /// `B+(color; forest)`.
    BPlus(String, String),
    /// A forest/word literal, kept as written.
    Literal(String),
    /// The empty monomial.
    Unit,
}

#[derive(Clone, Debug)]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

impl ExprError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ExprError { position, message: message.into() }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ExprError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(String),
    TreeLit(String),
    Plus,
    Minus,
    Star,
    Slash,
    Circle,
    Tensor,
    LParen,
    RParen,
    Semi,
    Delta,
    CkDelta,
    FDelta,
    SFun,
    BraceFun,
    BPlusFun,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        // multi-character operators and function heads first
        if rest.starts_with("(x)") {
            out.push((Token::Tensor, i));
            i += 3;
            continue;
        }
        if rest.starts_with('⊗') {
            out.push((Token::Tensor, i));
            i += '⊗'.len_utf8();
            continue;
        }
        if rest.starts_with('∘') {
            out.push((Token::Circle, i));
            i += '∘'.len_utf8();
            continue;
        }
        if rest.starts_with("ckΔ") {
            out.push((Token::CkDelta, i));
            i += "ckΔ".len();
            continue;
        }
        if rest.starts_with("fΔ") {
            out.push((Token::FDelta, i));
            i += "fΔ".len();
            continue;
        }
        if rest.starts_with('Δ') {
            out.push((Token::Delta, i));
            i += 'Δ'.len_utf8();
            continue;
        }
        if rest.starts_with("B+(") {
            out.push((Token::BPlusFun, i));
            i += 2; // leave the paren for the parser
            continue;
        }
        match c {
            '+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, i));
                i += 1;
            }
            '(' => {
                out.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, i));
                i += 1;
            }
            ';' => {
                out.push((Token::Semi, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Token::Number(text[start..i].to_string()), start));
            }
            'A'..='Z' | 'a'..='z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let next_is_paren = bytes.get(i) == Some(&b'(');
                match word {
                    "o" => out.push((Token::Circle, start)),
                    "S" if next_is_paren => out.push((Token::SFun, start)),
                    "brace" if next_is_paren => out.push((Token::BraceFun, start)),
                    "coprod" if next_is_paren => out.push((Token::Delta, start)),
                    "ckcoprod" if next_is_paren => out.push((Token::CkDelta, start)),
                    "fcoprod" if next_is_paren => out.push((Token::FDelta, start)),
                    _ => {
                        // a color: if a bracket follows immediately, the
                        // whole balanced group belongs to this tree
                        let mut end = i;
                        if bytes.get(i) == Some(&b'[') {
                            let mut depth = 0usize;
                            let mut j = i;
                            loop {
                                match bytes.get(j) {
                                    Some(b'[') => depth += 1,
                                    Some(b']') => {
                                        depth -= 1;
                                        if depth == 0 {
                                            j += 1;
                                            break;
                                        }
                                    }
                                    Some(_) => {}
                                    None => {
                                        return Err(ExprError::new(
                                            j,
                                            "unclosed bracket in tree literal",
                                        ))
                                    }
                                }
                                j += 1;
                            }
                            end = j;
                        }
                        out.push((Token::TreeLit(text[start..end].to_string()), start));
                        i = end;
                    }
                }
            }
            _ => return Err(ExprError::new(i, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ExprError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ExprError::new(self.here(), format!("expected {what}")))
        }
    }

    fn combination(&mut self) -> Result<Expr, ExprError> {
        let mut terms = Vec::new();
        let mut sign = Scalar::one();
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                sign = Scalar::int(-1);
            }
            Some(Token::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let (coef, expr) = self.term()?;
        terms.push((&sign * &coef, expr));
        loop {
            let sign = match self.peek() {
                Some(Token::Plus) => Scalar::one(),
                Some(Token::Minus) => Scalar::int(-1),
                _ => break,
            };
            self.pos += 1;
            let (coef, expr) = self.term()?;
            terms.push((&sign * &coef, expr));
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<(Scalar, Expr), ExprError> {
        if let Some(Token::Number(n)) = self.peek().cloned() {
            // "1" right before ∘ or ⊗ is the unit monomial in factor
            // position, not a coefficient
            let next = self.tokens.get(self.pos + 1).map(|(t, _)| t.clone());
            let unit_factor =
                n == "1" && matches!(next, Some(Token::Circle) | Some(Token::Tensor));
            if !unit_factor {
                let coef = self.rational()?;
                if self.peek() == Some(&Token::Star) {
                    self.pos += 1;
                    let f = self.factor()?;
                    return Ok((coef, f));
                }
                return match self.peek() {
                    Some(Token::TreeLit(_))
                    | Some(Token::LParen)
                    | Some(Token::Delta)
                    | Some(Token::CkDelta)
                    | Some(Token::FDelta)
                    | Some(Token::SFun)
                    | Some(Token::BraceFun)
                    | Some(Token::BPlusFun) => {
                        let f = self.factor()?;
                        Ok((coef, f))
                    }
                    Some(Token::Number(n)) if n == "1" => {
                        let f = self.factor()?;
                        Ok((coef, f))
                    }
                    // a bare rational is that multiple of the unit
                    _ => Ok((coef, Expr::Unit)),
                };
            }
        }
        let f = self.factor()?;
        Ok((Scalar::one(), f))
    }

    fn rational(&mut self) -> Result<Scalar, ExprError> {
        let at = self.here();
        let num = match self.bump() {
            Some(Token::Number(n)) => n,
            _ => return Err(ExprError::new(at, "expected a number")),
        };
        if self.peek() == Some(&Token::Slash) {
            self.pos += 1;
            let at = self.here();
            match self.bump() {
                Some(Token::Number(d)) => format!("{num}/{d}")
                    .parse::<Scalar>()
                    .map_err(|e| ExprError::new(at, e)),
                _ => Err(ExprError::new(at, "expected a denominator")),
            }
        } else {
            num.parse::<Scalar>().map_err(|e| ExprError::new(at, e))
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.primary()?;
        loop {
            let op = match self.peek() {
                Some(Token::Circle) => ProductOp::Circle,
                Some(Token::Star) => ProductOp::Star,
                Some(Token::Tensor) => ProductOp::Tensor,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.primary()?;
            lhs = Expr::Product(Box::new(lhs), op, Box::new(rhs));
        }
        Ok(lhs)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let at = self.here();
        match self.peek() {
            Some(Token::Delta) | Some(Token::CkDelta) | Some(Token::FDelta)
            | Some(Token::SFun) => {
                let func = match self.bump().unwrap() {
                    Token::Delta => Func::Unshuffle,
                    Token::CkDelta => Func::CkCoproduct,
                    Token::FDelta => Func::FoissyCoproduct,
                    Token::SFun => Func::Antipode,
                    _ => unreachable!(),
                };
                self.expect(Token::LParen, "'('")?;
                let inner = self.combination()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::Call(func, Box::new(inner)))
            }
            Some(Token::BraceFun) => {
                self.pos += 1;
                self.expect(Token::LParen, "'('")?;
                let inner = self.combination()?;
                self.expect(Token::Semi, "';'")?;
                let forest = self.forest_text()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::Brace(Box::new(inner), forest))
            }
            Some(Token::BPlusFun) => {
                self.pos += 1;
                self.expect(Token::LParen, "'('")?;
                let at = self.here();
                let color = match self.bump() {
                    Some(Token::TreeLit(c)) if !c.contains('[') => c,
                    _ => return Err(ExprError::new(at, "expected a color")),
                };
                self.expect(Token::Semi, "';'")?;
                let forest = self.forest_text()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::BPlus(color, forest))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.combination()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::TreeLit(_)) => {
                let mut trees = Vec::new();
                while let Some(Token::TreeLit(t)) = self.peek() {
                    trees.push(t.clone());
                    self.pos += 1;
                }
                Ok(Expr::Literal(trees.join(" ")))
            }
            Some(Token::Number(n)) if n == "1" => {
                self.pos += 1;
                Ok(Expr::Unit)
            }
            _ => Err(ExprError::new(at, "expected a forest, a call, or '('")),
        }
    }

    /// The raw text of a forest argument: consecutive tree literals, or
    /// `1` for the empty forest.
    fn forest_text(&mut self) -> Result<String, ExprError> {
        if let Some(Token::Number(n)) = self.peek() {
            if n == "1" {
                self.pos += 1;
                return Ok(String::new());
            }
        }
        let mut trees = Vec::new();
        while let Some(Token::TreeLit(t)) = self.peek() {
            trees.push(t.clone());
            self.pos += 1;
        }
        Ok(trees.join(" "))
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ExprError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0, end: text.len() };
    let expr = parser.combination()?;
    if parser.pos < parser.tokens.len() {
        return Err(ExprError::new(parser.here(), "unexpected trailing input"));
    }
    Ok(expr)
}
