use crate::Tolerance;
use std::fmt;

/// Reduced fraction `num/den`; `is_square_of` holds `(p, q)` when the value
/// equals `(p/q)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallRational {
    pub num: i64,
    pub den: u64,
    pub is_square_of: Option<(i64, u64)>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn isqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r * r == n).then_some(r)
}

impl SmallRational {
    /// Reduces `num/den`; panics on `den == 0`.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den).max(1);
        let (num, den) = (num / g as i64, den / g);
        let is_square_of = match (num >= 0).then(|| isqrt(num as u64)).flatten() {
            Some(p) => isqrt(den).map(|q| (p as i64, q)),
            None => None,
        };
        SmallRational { num, den, is_square_of }
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn recip(&self) -> Option<Self> {
        match self.num {
            0 => None,
            n if n > 0 => Some(SmallRational::new(self.den as i64, n as u64)),
            n => Some(SmallRational::new(-(self.den as i64), n.unsigned_abs())),
        }
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl fmt::Display for SmallRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Best rational with denominator at most `max_den` whose distance to `x` is
/// within `eps * x`. Convergents suffice: any p/q with |x - p/q| < 1/(2q^2)
/// is a convergent (Legendre), and `eps * x` is far below that bound for the
/// denominators and magnitudes accepted here.
fn plain(x: f64, max_den: u64, eps: f64) -> Option<(i64, u64)> {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e12 {
            return None;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 as u64 > max_den {
            return None;
        }
        if (x - h2 as f64 / k2 as f64).abs() <= eps * x.abs() {
            return Some((h2, k2 as u64));
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a as f64;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

/// Recognizes `x` as `p/q` (q ≤ `max_den`) or `(p/q)^2` (q ≤ `max_sqrt_den`)
/// at the default `confirm_eps`.
pub fn recognize_ratio(x: f64, max_den: u64, max_sqrt_den: u64) -> Option<SmallRational> {
    recognize_ratio_eps(x, max_den, max_sqrt_den, Tolerance::default().confirm_eps)
}

/// As [`recognize_ratio`] with an explicit relative tolerance.
pub fn recognize_ratio_eps(
    x: f64,
    max_den: u64,
    max_sqrt_den: u64,
    eps: f64,
) -> Option<SmallRational> {
    if !(x.is_finite() && x > 0.0) || x > 1e9 {
        return None;
    }
    if let Some((p, q)) = plain(x, max_den, eps) {
        return Some(SmallRational::new(p, q));
    }
    let (p, q) = plain(x.sqrt(), max_sqrt_den, eps / 2.0)?;
    let r = SmallRational::new(p * p, q * q);
    if (r.value() - x).abs() > eps * x {
        return None;
    }
    Some(SmallRational { is_square_of: Some((p, q)), ..r })
}
