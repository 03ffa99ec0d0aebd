use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    A,
    B,
    C,
    S,
    SA,
    SB,
    SC,
    AngA,
    AngB,
    AngC,
}

impl Symbol {
    pub fn from_name(s: &str) -> Option<Symbol> {
        Some(match s {
            "a" => Symbol::A,
            "b" => Symbol::B,
            "c" => Symbol::C,
            "S" => Symbol::S,
            "SA" => Symbol::SA,
            "SB" => Symbol::SB,
            "SC" => Symbol::SC,
            "A" => Symbol::AngA,
            "B" => Symbol::AngB,
            "C" => Symbol::AngC,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::C => "c",
            Symbol::S => "S",
            Symbol::SA => "SA",
            Symbol::SB => "SB",
            Symbol::SC => "SC",
            Symbol::AngA => "A",
            Symbol::AngB => "B",
            Symbol::AngC => "C",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sqrt,
    Cos,
    Sin,
    Tan,
    Sec,
    Csc,
    Cot,
    Abs,
}

impl Func {
    pub fn from_name(s: &str) -> Option<Func> {
        Some(match s {
            "sqrt" => Func::Sqrt,
            "cos" => Func::Cos,
            "sin" => Func::Sin,
            "tan" => Func::Tan,
            "sec" => Func::Sec,
            "csc" => Func::Csc,
            "cot" => Func::Cot,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Cos => "cos",
            Func::Sin => "sin",
            Func::Tan => "tan",
            Func::Sec => "sec",
            Func::Csc => "csc",
            Func::Cot => "cot",
            Func::Abs => "abs",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Sym(Symbol),
    /// The free family parameter `k`.
    Param,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    /// Exponent contains no triangle symbols.
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn uses_param(&self) -> bool {
        match self {
            Expr::Param => true,
            Expr::Num(_) | Expr::Sym(_) => false,
            Expr::Neg(e) | Expr::Call(_, e) => e.uses_param(),
            Expr::Bin(_, l, r) | Expr::Pow(l, r) => l.uses_param() || r.uses_param(),
        }
    }

    pub fn uses_symbols(&self) -> bool {
        match self {
            Expr::Sym(_) => true,
            Expr::Num(_) | Expr::Param => false,
            Expr::Neg(e) | Expr::Call(_, e) => e.uses_symbols(),
            Expr::Bin(_, l, r) | Expr::Pow(l, r) => l.uses_symbols() || r.uses_symbols(),
        }
    }

    /// Binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5.
    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Canonical text; reparses to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "{x}"),
            Expr::Sym(s) => f.write_str(s.name()),
            Expr::Param => f.write_str("k"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                wrap(f, e, e.prec() < 3)
            }
            Expr::Bin(op, l, r) => {
                let (p, sym) = match op {
                    BinOp::Add => (1, "+"),
                    BinOp::Sub => (1, "-"),
                    BinOp::Mul => (2, "*"),
                    BinOp::Div => (2, "/"),
                };
                wrap(f, l, l.prec() < p)?;
                f.write_str(sym)?;
                // Left-associative: an equal-precedence right child needs parentheses.
                wrap(f, r, r.prec() <= p)
            }
            Expr::Pow(b, e) => {
                wrap(f, b, b.prec() < 5)?;
                f.write_str("^")?;
                wrap(f, e, e.prec() < 5)
            }
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}
