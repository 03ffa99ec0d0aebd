use crate::ast::{BinOp, Expr, Func, Symbol};
use crate::DslError;
use cqe_geom::Triangle;
use cqe_numerics::Real;

/// Values of every symbol for one labelling of a triangle.
#[derive(Debug, Clone, Copy)]
pub struct TriangleContext<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub s: T,
    pub sa: T,
    pub sb: T,
    pub sc: T,
    pub ang_a: T,
    pub ang_b: T,
    pub ang_c: T,
}

impl<T: Real> TriangleContext<T> {
    /// From side lengths; `None` unless the strict triangle inequality holds.
    pub fn from_sides(a: T, b: T, c: T) -> Option<Self> {
        if !(a > T::zero() && b > T::zero() && c > T::zero()) || a + b <= c || b + c <= a || c + a <= b {
            return None;
        }
        let h = T::half();
        let (a2, b2, c2) = (a * a, b * b, c * c);
        let (sa, sb, sc) = ((b2 + c2 - a2) * h, (c2 + a2 - b2) * h, (a2 + b2 - c2) * h);
        // S² = SA·SB + SB·SC + SC·SA
        let s2 = sa * sb + sb * sc + sc * sa;
        if !(s2 > T::zero()) {
            return None;
        }
        let s = s2.sqrt();
        Some(TriangleContext { a, b, c, s, sa, sb, sc, ang_a: s.atan2(sa), ang_b: s.atan2(sb), ang_c: s.atan2(sc) })
    }

    pub fn from_triangle(t: &Triangle<T>) -> Self {
        let (a, b, c) = t.sides();
        let (sa, sb, sc) = t.conway();
        let s = t.s();
        TriangleContext { a, b, c, s, sa, sb, sc, ang_a: s.atan2(sa), ang_b: s.atan2(sb), ang_c: s.atan2(sc) }
    }

    /// (a,b,c,A,B,C) → (b,c,a,B,C,A).
    pub fn rotated(&self) -> Self {
        TriangleContext {
            a: self.b,
            b: self.c,
            c: self.a,
            s: self.s,
            sa: self.sb,
            sb: self.sc,
            sc: self.sa,
            ang_a: self.ang_b,
            ang_b: self.ang_c,
            ang_c: self.ang_a,
        }
    }

    /// b ↔ c.
    pub fn swapped_bc(&self) -> Self {
        TriangleContext {
            b: self.c,
            c: self.b,
            sb: self.sc,
            sc: self.sb,
            ang_b: self.ang_c,
            ang_c: self.ang_b,
            ..*self
        }
    }

    pub fn scaled(&self, t: T) -> Self {
        TriangleContext {
            a: self.a * t,
            b: self.b * t,
            c: self.c * t,
            s: self.s * t * t,
            sa: self.sa * t * t,
            sb: self.sb * t * t,
            sc: self.sc * t * t,
            ..*self
        }
    }

    fn get(&self, s: Symbol) -> T {
        match s {
            Symbol::A => self.a,
            Symbol::B => self.b,
            Symbol::C => self.c,
            Symbol::S => self.s,
            Symbol::SA => self.sa,
            Symbol::SB => self.sb,
            Symbol::SC => self.sc,
            Symbol::AngA => self.ang_a,
            Symbol::AngB => self.ang_b,
            Symbol::AngC => self.ang_c,
        }
    }
}

fn checked<T: Real>(x: T, what: &'static str) -> Result<T, DslError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(DslError::Undefined(what))
    }
}

fn recip<T: Real>(x: T, what: &'static str) -> Result<T, DslError> {
    if x == T::zero() {
        return Err(DslError::Undefined(what));
    }
    checked(T::one() / x, what)
}

/// Reciprocal of a sine or cosine; values within rounding of a pole count as
/// the pole itself.
fn trig_recip<T: Real>(x: T, what: &'static str) -> Result<T, DslError> {
    if x.abs() <= T::lit(1e-12) {
        return Err(DslError::Undefined(what));
    }
    checked(T::one() / x, what)
}

pub fn eval_expr<T: Real>(e: &Expr, ctx: &TriangleContext<T>, k: Option<T>) -> Result<T, DslError> {
    match e {
        Expr::Num(v) => Ok(T::lit(*v)),
        Expr::Sym(s) => Ok(ctx.get(*s)),
        Expr::Param => k.ok_or(DslError::UnboundParameter),
        Expr::Neg(x) => Ok(-eval_expr(x, ctx, k)?),
        Expr::Bin(op, l, r) => {
            let (l, r) = (eval_expr(l, ctx, k)?, eval_expr(r, ctx, k)?);
            match op {
                BinOp::Add => Ok(l + r),
                BinOp::Sub => Ok(l - r),
                BinOp::Mul => Ok(l * r),
                BinOp::Div => Ok(l * recip(r, "division by zero")?),
            }
        }
        Expr::Pow(b, x) => {
            let (b, x) = (eval_expr(b, ctx, k)?, eval_expr(x, ctx, k)?);
            let xf = x.as_f64();
            if xf.fract() == 0.0 && xf.abs() <= 64.0 {
                let n = xf as i32;
                if n < 0 && b == T::zero() {
                    return Err(DslError::Undefined("zero to a negative power"));
                }
                checked(b.powi(n), "power overflow")
            } else if b < T::zero() {
                Err(DslError::Undefined("negative base to a fractional power"))
            } else {
                checked(b.powf(x), "power overflow")
            }
        }
        Expr::Call(f, x) => {
            let x = eval_expr(x, ctx, k)?;
            match f {
                Func::Sqrt if x < T::zero() => Err(DslError::Undefined("square root of a negative")),
                Func::Sqrt => Ok(x.sqrt()),
                Func::Cos => Ok(x.cos()),
                Func::Sin => Ok(x.sin()),
                Func::Tan => trig_recip(x.cos(), "tan pole").map(|r| x.sin() * r),
                Func::Sec => trig_recip(x.cos(), "sec pole"),
                Func::Csc => trig_recip(x.sin(), "csc pole"),
                Func::Cot => trig_recip(x.sin(), "cot pole").map(|r| x.cos() * r),
                Func::Abs => Ok(x.abs()),
            }
        }
    }
}
