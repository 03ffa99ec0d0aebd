use crate::ast::{BinOp, Expr, Func, Symbol};
use crate::lexer::{tokenize, Token, TokenKind};
use crate::DslError;

/// expr   := term (('+'|'-') term)*
/// term   := unary (('*'|'/') unary)*
/// unary  := '-' unary | power
/// power  := atom ['^' ('-' atom | atom)]
/// atom   := number | symbol | 'k' | func '(' expr ')' | '(' expr ')'
pub fn parse_expr(src: &str) -> Result<Expr, DslError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, i: 0, end: src.len() };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(DslError::Syntax { pos: t.pos, msg: "unexpected trailing input".into() });
    }
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.i)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, k: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(k) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, k: TokenKind, what: &str) -> Result<(), DslError> {
        if self.eat(&k) {
            Ok(())
        } else {
            Err(DslError::Syntax { pos: self.pos(), msg: format!("expected {what}") })
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat(&TokenKind::Plus) {
                BinOp::Add
            } else if self.eat(&TokenKind::Minus) {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat(&TokenKind::Star) {
                BinOp::Mul
            } else if self.eat(&TokenKind::Slash) {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        if self.eat(&TokenKind::Minus) {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if !self.eat(&TokenKind::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        let exp = if self.eat(&TokenKind::Minus) {
            Expr::Neg(Box::new(self.atom()?))
        } else {
            self.atom()?
        };
        if exp.uses_symbols() {
            return Err(DslError::NonConstantExponent { pos });
        }
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Caret)) {
            return Err(DslError::Syntax { pos: self.pos(), msg: "chained `^` needs parentheses".into() });
        }
        Ok(Expr::Pow(Box::new(base), Box::new(exp)))
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(DslError::Syntax { pos, msg: "unexpected end of input".into() });
        };
        self.i += 1;
        match tok.kind {
            TokenKind::Num(v) => Ok(Expr::Num(v)),
            TokenKind::LParen => {
                let e = self.expr()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(e)
            }
            TokenKind::Ident(name) => {
                if let Some(f) = Func::from_name(&name) {
                    self.expect(TokenKind::LParen, "`(` after function name")?;
                    let e = self.expr()?;
                    self.expect(TokenKind::RParen, "`)`")?;
                    return Ok(Expr::Call(f, Box::new(e)));
                }
                if name == "k" {
                    return Ok(Expr::Param);
                }
                let sym = Symbol::from_name(&name).ok_or(DslError::UnknownSymbol { pos, name })?;
                // Reject implicit multiplication like `a b` or `a(b)`.
                if let Some(t) = self.peek() {
                    if matches!(t.kind, TokenKind::LParen | TokenKind::Ident(_) | TokenKind::Num(_)) {
                        return Err(DslError::Syntax { pos: t.pos, msg: "implicit multiplication".into() });
                    }
                }
                Ok(Expr::Sym(sym))
            }
            _ => Err(DslError::Syntax { pos, msg: "expected a number, symbol or `(`".into() }),
        }
    }
}
