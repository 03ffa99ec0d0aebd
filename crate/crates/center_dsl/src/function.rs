use crate::ast::Expr;
use crate::eval::{eval_expr, TriangleContext};
use crate::DslError;
use cqe_geom::{BaryPoint, Point, Triangle};
use cqe_numerics::Real;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordKind {
    Trilinear,
    Barycentric,
}

impl CoordKind {
    pub fn from_tag(s: &str) -> Option<CoordKind> {
        match s {
            "bary" | "barycentric" => Some(CoordKind::Barycentric),
            "tri" | "trilinear" => Some(CoordKind::Trilinear),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            CoordKind::Trilinear => "trilinear",
            CoordKind::Barycentric => "bary",
        }
    }
}

/// A validated center function. Symmetric in b, c up to a global sign and
/// homogeneous; the degree is kept only when it is an integer.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterFunction {
    pub expr: Expr,
    pub kind: CoordKind,
    pub homogeneity_degree: Option<i32>,
    /// Value of `k` when the expression is a family member.
    pub k: Option<f64>,
}

const PROBES: usize = 32;
const PROBE_SEED: u64 = 0x5eed_ce17;
/// Value used to validate an expression whose `k` is still free.
const PROBE_K: f64 = 0.618_033_988_7;

fn probe_triangles() -> Vec<TriangleContext<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let mut out = Vec::with_capacity(PROBES);
    while out.len() < PROBES {
        let a: f64 = rng.gen_range(0.5..1.5);
        let b: f64 = rng.gen_range(0.5..1.5);
        let c: f64 = rng.gen_range(0.5..1.5);
        if let Some(ctx) = TriangleContext::from_sides(a, b, c) {
            let m = ctx.ang_a.min(ctx.ang_b).min(ctx.ang_c);
            let near_special = [ctx.ang_a, ctx.ang_b, ctx.ang_c]
                .iter()
                .any(|t| (t - std::f64::consts::FRAC_PI_2).abs() < 0.05);
            if m > 0.2 && !near_special && (a - b).abs() > 0.02 && (b - c).abs() > 0.02 && (c - a).abs() > 0.02 {
                out.push(ctx);
            }
        }
    }
    out
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-8 * x.abs().max(y.abs()).max(1e-300)
}

impl CenterFunction {
    pub fn new(expr: Expr, kind: CoordKind) -> Result<Self, DslError> {
        let mut f = CenterFunction { expr, kind, homogeneity_degree: None, k: None };
        f.homogeneity_degree = f.validate()?;
        Ok(f)
    }

    pub fn has_param(&self) -> bool {
        self.expr.uses_param()
    }

    /// Copy with `k` bound, revalidated at that value.
    pub fn bind(&self, k: f64) -> Result<Self, DslError> {
        let mut f = CenterFunction { k: Some(k), ..self.clone() };
        f.homogeneity_degree = f.validate()?;
        Ok(f)
    }

    fn k_for_validation(&self) -> Option<f64> {
        self.k.or(self.has_param().then_some(PROBE_K))
    }

    /// Symmetry and homogeneity on seeded probe triangles. Probes where `f`
    /// is undefined or vanishes are skipped.
    fn validate(&self) -> Result<Option<i32>, DslError> {
        let k = self.k_for_validation();
        let mut sign: Option<bool> = None;
        let mut degree: Option<f64> = None;
        let mut used = 0;
        for ctx in probe_triangles() {
            let Ok(f0) = eval_expr(&self.expr, &ctx, k) else { continue };
            let Ok(f1) = eval_expr(&self.expr, &ctx.swapped_bc(), k) else { continue };
            if f0.abs() < 1e-12 {
                continue;
            }
            let same = close(f0, f1);
            let opposite = close(f0, -f1);
            match (sign, same, opposite) {
                (_, false, false) => return Err(DslError::NotSymmetric),
                (None, s, _) => sign = Some(s),
                (Some(prev), s, o) if (prev && !s) || (!prev && !o) => return Err(DslError::NotSymmetric),
                _ => {}
            }
            for t in [0.5, 3.0] {
                let Ok(ft) = eval_expr(&self.expr, &ctx.scaled(t), k) else { continue };
                let r = ft / f0;
                if !(r > 0.0) {
                    return Err(DslError::NotHomogeneous);
                }
                let d = r.ln() / f64::ln(t);
                match degree {
                    None => degree = Some(d),
                    Some(d0) if (d - d0).abs() > 1e-7 * (1.0 + d0.abs()) => {
                        return Err(DslError::NotHomogeneous)
                    }
                    _ => {}
                }
            }
            used += 1;
        }
        if used == 0 {
            return Err(DslError::Degenerate);
        }
        Ok(degree.and_then(|d| ((d - d.round()).abs() < 1e-7).then_some(d.round() as i32)))
    }

    /// Barycentric weights under the three cyclic substitutions.
    pub fn evaluate_context<T: Real>(&self, ctx: &TriangleContext<T>) -> Result<BaryPoint<T>, DslError> {
        let k = match (self.k, self.has_param()) {
            (Some(k), _) => Some(T::lit(k)),
            (None, true) => return Err(DslError::UnboundParameter),
            (None, false) => None,
        };
        let c1 = ctx.rotated();
        let c2 = c1.rotated();
        let mut w = [
            eval_expr(&self.expr, ctx, k)?,
            eval_expr(&self.expr, &c1, k)?,
            eval_expr(&self.expr, &c2, k)?,
        ];
        if self.kind == CoordKind::Trilinear {
            w = [w[0] * ctx.a, w[1] * ctx.b, w[2] * ctx.c];
        }
        let p = BaryPoint::new(w[0], w[1], w[2]);
        if p.is_zero() || !w.iter().all(|x| x.is_finite()) {
            return Err(DslError::Undefined("zero or non-finite triple"));
        }
        Ok(p)
    }

    pub fn evaluate<T: Real>(&self, tri: &Triangle<T>) -> Result<BaryPoint<T>, DslError> {
        self.evaluate_context(&TriangleContext::from_triangle(tri))
    }

    /// Cartesian location; points at infinity are reported as undefined.
    pub fn point<T: Real>(&self, tri: &Triangle<T>) -> Result<Point<T>, DslError> {
        let b = self.evaluate(tri)?;
        tri.bary_to_cartesian(&b).map_err(|_| DslError::Undefined("point at infinity"))
    }
}

impl fmt::Display for CenterFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind.tag(), self.expr)?;
        if let Some(k) = self.k {
            write!(f, " [k={k}]")?;
        }
        Ok(())
    }
}
