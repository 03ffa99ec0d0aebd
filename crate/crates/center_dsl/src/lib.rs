//! Center-function language: `f(a,b,c)` over side lengths, angles, twice the
//! area `S` and the Conway symbols `SA, SB, SC`, with one optional parameter `k`.

// `!(x > 0)` is deliberate: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod ast;
mod eval;
mod function;
mod lexer;
mod parser;

pub use ast::{BinOp, Expr, Func, Symbol};
pub use eval::{eval_expr, TriangleContext};
pub use function::{CenterFunction, CoordKind};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse_expr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DslError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{name}` at {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("exponent at {pos} must be constant")]
    NonConstantExponent { pos: usize },
    #[error("not symmetric in b and c")]
    NotSymmetric,
    #[error("not homogeneous in a, b, c")]
    NotHomogeneous,
    #[error("center function vanishes or is undefined on every probe triangle")]
    Degenerate,
    #[error("parameter k is not bound")]
    UnboundParameter,
    #[error("center undefined at this triangle: {0}")]
    Undefined(&'static str),
}

/// Parse and validate a center function.
pub fn parse(src: &str, kind: CoordKind) -> Result<CenterFunction, DslError> {
    CenterFunction::new(parse_expr(src)?, kind)
}
