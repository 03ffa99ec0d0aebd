use crate::Shape;
use cqe_geom::{BaryPoint, Quad, Triangle};
use cqe_numerics::Real;

/// Primitive conditions. Each yields a dimensionless side-length/angle
/// residual and, where a valid one exists, a barycentric residual with D
/// expressed relative to triangle ABC.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Cyclic,
    Tangential,
    Extangential,
    Parallelogram,
    EqualProdOpp,
    EqualProdAdj,
    Orthodiagonal,
    Equidiagonal,
    Pythagorean,
    Kite,
    Trapezoid,
    Rhombus,
    Rectangle,
    Hjelmslev,
    IsoscelesTrapezoid,
    Ap,
    Harmonic,
    Orthoptic,
    Orthocentric,
}

impl Constraint {
    pub fn label(self) -> &'static str {
        match self {
            Constraint::Cyclic => "A+C=B+D",
            Constraint::Tangential => "a+c=b+d",
            Constraint::Extangential => "a+b=c+d",
            Constraint::Parallelogram => "a=c, b=d",
            Constraint::EqualProdOpp => "ac=bd",
            Constraint::EqualProdAdj => "ab=cd",
            Constraint::Orthodiagonal => "a^2+c^2=b^2+d^2",
            Constraint::Equidiagonal => "p=q",
            Constraint::Pythagorean => "a^2+b^2=c^2+d^2",
            Constraint::Kite => "AB=AD, CB=CD",
            Constraint::Trapezoid => "A+B=C+D",
            Constraint::Rhombus => "a=b=c=d",
            Constraint::Rectangle => "A=B=C=D",
            Constraint::Hjelmslev => "A=C=90",
            Constraint::IsoscelesTrapezoid => "A=D, B=C",
            Constraint::Ap => "d-c=c-b=b-a",
            Constraint::Harmonic => "cyclic, ac=bd",
            Constraint::Orthoptic => "AB perp CD, BC perp AD",
            Constraint::Orthocentric => "D=orthocenter(ABC)",
        }
    }
}

impl Shape {
    /// Defining conditions; combination shapes use the conjunction.
    pub fn constraints(self) -> &'static [Constraint] {
        use Constraint as C;
        match self {
            Shape::General => &[],
            Shape::Cyclic => &[C::Cyclic],
            Shape::Tangential => &[C::Tangential],
            Shape::Extangential => &[C::Extangential],
            Shape::Parallelogram => &[C::Parallelogram],
            Shape::EqualProdOpp => &[C::EqualProdOpp],
            Shape::EqualProdAdj => &[C::EqualProdAdj],
            Shape::Orthodiagonal => &[C::Orthodiagonal],
            Shape::Equidiagonal => &[C::Equidiagonal],
            Shape::Pythagorean => &[C::Pythagorean],
            Shape::Kite => &[C::Kite],
            Shape::Trapezoid => &[C::Trapezoid],
            Shape::Rhombus => &[C::Rhombus],
            Shape::Rectangle => &[C::Rectangle],
            Shape::Hjelmslev => &[C::Hjelmslev],
            Shape::IsoscelesTrapezoid => &[C::IsoscelesTrapezoid],
            Shape::Ap => &[C::Ap],
            Shape::Bicentric => &[C::Cyclic, C::Tangential],
            Shape::Exbicentric => &[C::Cyclic, C::Extangential],
            Shape::BicentricTrapezoid => &[C::IsoscelesTrapezoid, C::Tangential],
            Shape::CyclicOrthodiagonal => &[C::Cyclic, C::Orthodiagonal],
            Shape::EquidiagonalKite => &[C::Kite, C::Equidiagonal],
            Shape::EqOrtho => &[C::Equidiagonal, C::Orthodiagonal],
            Shape::EqOrthoTrapezoid => &[C::Trapezoid, C::Equidiagonal, C::Orthodiagonal],
            Shape::Harmonic => &[C::Harmonic],
            Shape::OrthodiagonalTrapezoid => &[C::Trapezoid, C::Orthodiagonal],
            Shape::TangentialTrapezoid => &[C::Trapezoid, C::Tangential],
            Shape::Square => &[C::Rhombus, C::Rectangle],
            Shape::Orthoptic => &[C::Orthoptic],
            Shape::Orthocentric => &[C::Orthocentric],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub constraint: Constraint,
    pub side_form: f64,
    pub bary_form: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeReport {
    pub shape: Shape,
    pub residuals: Vec<Residual>,
}

impl ShapeReport {
    pub fn max_side(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, r| m.max(r.side_form))
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_side() <= tol
    }

    /// The two forms agree on vanishing. Barycentric forms are polynomial of
    /// higher degree, so they get their own tolerance.
    pub fn forms_agree(&self, side_tol: f64, bary_tol: f64) -> bool {
        self.residuals
            .iter()
            .all(|r| r.bary_form.is_none_or(|b| (r.side_form <= side_tol) == (b <= bary_tol)))
    }
}

struct Ctx<T> {
    s: [T; 4],
    ang: [T; 4],
    diag: (T, T),
    len: T,
    q: Quad<T>,
    tri: Option<Triangle<T>>,
    // D = (p:q:r) relative to ABC with p+q+r = 1.
    bary: Option<BaryPoint<T>>,
}

fn maxabs<T: Real>(v: &[T]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs().as_f64()))
}

pub fn verify_shape<T: Real>(q: &Quad<T>, shape: Shape) -> ShapeReport {
    let tri = Triangle::new(q.a(), q.b(), q.c()).ok();
    let bary = tri.map(|t| t.cartesian_to_bary(q.d()));
    let ctx = Ctx { s: q.sides(), ang: q.angles(), diag: q.diagonals(), len: q.diameter(), q: *q, tri, bary };
    let residuals = shape.constraints().iter().map(|c| eval(*c, &ctx)).collect();
    ShapeReport { shape, residuals }
}

fn eval<T: Real>(c: Constraint, x: &Ctx<T>) -> Residual {
    let [a, b, cc, d] = x.s;
    let [aa, ab, ac, ad] = x.ang;
    let (p, q) = x.diag;
    let l = x.len;
    let l2 = l * l;
    let pi2 = T::pi() * T::two();
    let right = T::pi() * T::half();
    let (side, bary): (f64, Option<f64>) = match c {
        Constraint::Cyclic => (((aa + ac - ab - ad) / pi2).abs().as_f64(), bary_form(x, BaryForm::Cyclic)),
        Constraint::Tangential => (((a + cc - b - d) / l).abs().as_f64(), bary_form(x, BaryForm::Tangential)),
        Constraint::Extangential => (((a + b - cc - d) / l).abs().as_f64(), bary_form(x, BaryForm::Extangential)),
        Constraint::Parallelogram => (maxabs(&[(a - cc) / l, (b - d) / l]), bary_form(x, BaryForm::Parallelogram)),
        Constraint::EqualProdOpp => (((a * cc - b * d) / l2).abs().as_f64(), None),
        Constraint::EqualProdAdj => (((a * b - cc * d) / l2).abs().as_f64(), None),
        Constraint::Orthodiagonal => {
            (((a * a + cc * cc - b * b - d * d) / l2).abs().as_f64(), bary_form(x, BaryForm::Orthodiagonal))
        }
        Constraint::Equidiagonal => (((p - q) / l).abs().as_f64(), bary_form(x, BaryForm::Equidiagonal)),
        Constraint::Pythagorean => (((a * a + b * b - cc * cc - d * d) / l2).abs().as_f64(), None),
        Constraint::Kite => (maxabs(&[(a - d) / l, (b - cc) / l]), bary_form(x, BaryForm::Kite)),
        Constraint::Trapezoid => (((aa + ab - ac - ad) / pi2).abs().as_f64(), bary_form(x, BaryForm::AdParallelBc)),
        Constraint::Rhombus => (maxabs(&[(a - b) / l, (b - cc) / l, (cc - d) / l]), bary_form(x, BaryForm::Rhombus)),
        Constraint::Rectangle => {
            (maxabs(&[(aa - ab) / pi2, (ab - ac) / pi2, (ac - ad) / pi2]), bary_form(x, BaryForm::Rectangle))
        }
        Constraint::Hjelmslev => (maxabs(&[(aa - right) / pi2, (ac - right) / pi2]), None),
        Constraint::IsoscelesTrapezoid => (maxabs(&[(aa - ad) / pi2, (ab - ac) / pi2]), None),
        Constraint::Ap => (maxabs(&[(d - cc - (cc - b)) / l, (cc - b - (b - a)) / l]), None),
        Constraint::Harmonic => (
            maxabs(&[(aa + ac - ab - ad) / pi2, (a * cc - b * d) / l2]),
            bary_form(x, BaryForm::Harmonic),
        ),
        Constraint::Orthoptic => {
            let v = x.q.v;
            let e = |i: usize, j: usize| v[j] - v[i];
            (maxabs(&[e(0, 1).dot(e(2, 3)) / l2, e(1, 2).dot(e(0, 3)) / l2]), None)
        }
        Constraint::Orthocentric => {
            let r = match x.tri {
                Some(t) => (cqe_geom::distance(t.orthocenter(), x.q.d()) / l).as_f64(),
                None => f64::INFINITY,
            };
            (r, None)
        }
    };
    Residual { constraint: c, side_form: side, bary_form: bary }
}

enum BaryForm {
    Cyclic,
    Tangential,
    Extangential,
    Parallelogram,
    Orthodiagonal,
    Equidiagonal,
    Kite,
    AdParallelBc,
    Rhombus,
    Rectangle,
    Harmonic,
}

/// Analytic conditions on D = (p:q:r) over triangle ABC with a = |BC|,
/// b = |CA|, c = |AB|. Each is divided by its natural scale.
fn bary_form<T: Real>(x: &Ctx<T>, f: BaryForm) -> Option<f64> {
    let (t, d) = (x.tri?, x.bary?);
    let (a, b, c) = t.sides();
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let l2 = a2 + b2 + c2;
    let (p, q, r) = (d.u, d.v, d.w);
    let n = d.norm();
    let n2 = n * n;
    let two = T::two();
    let four = T::lit(4.0);
    let v = match f {
        BaryForm::Cyclic => ((a2 * q * r + b2 * p * r + c2 * p * q) / (l2 * n2)).abs().as_f64(),
        BaryForm::Tangential => {
            let e = two * p * r * (a2 - two * a * c + b2 + c2) + p * p * (a - b - c) * (a + b - c)
                + r * r * (a - b - c) * (a + b - c)
                - four * c * p * q * (a - c)
                + four * a * q * r * (a - c);
            (e / (l2 * n2)).abs().as_f64()
        }
        BaryForm::Extangential => {
            let k = a2 + two * a * c - b2 + c2;
            let e = p * p * k + p * r * (two * a2 + four * a * c + two * b2 + two * c2) + r * r * k
                + q * r * (four * a2 + four * a * c)
                + p * q * (four * a * c + four * c2);
            (e / (l2 * n2)).abs().as_f64()
        }
        BaryForm::Parallelogram => maxabs(&[(q + r) / n, (p + q) / n]),
        BaryForm::Orthodiagonal => ((b2 * (p - r) - (a2 - c2) * (p + r)) / (l2 * n)).abs().as_f64(),
        BaryForm::Equidiagonal => {
            let e = b2 * (p * p + (q + r) * (q + r) + p * (two * q + T::lit(3.0) * r)) - (p + r) * (c2 * p + a2 * r);
            (e / (l2 * n2)).abs().as_f64()
        }
        BaryForm::Kite => {
            // Scaled so that p + q + r = b².
            let (p, q, r) = (p * b2, q * b2, r * b2);
            maxabs(&[(p + two * q + r) / l2, (b2 + q) / l2, (c2 - a2 - q - r) / l2])
        }
        BaryForm::AdParallelBc => ((q + r) / n).abs().as_f64(),
        BaryForm::Rhombus => maxabs(&[(q + r) / n, (p + q) / n, (a - c) / l2.sqrt()]),
        BaryForm::Rectangle => maxabs(&[(q + r) / n, (p + q) / n, (b2 - a2 - c2) / l2]),
        BaryForm::Harmonic => maxabs(&[(r * a2 - p * c2) / (l2 * n), (p * b2 + two * q * a2) / (l2 * n)]),
    };
    Some(v)
}
