use crate::NumericsError;

/// Comparison tolerances. `abs_eps` is in scene units; detectors scale it with
/// the scene diameter through [`Tolerance::dist`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel_eps: f64,
    pub abs_eps: f64,
    pub confirm_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rel_eps: 1e-9, abs_eps: 1e-11, confirm_eps: 1e-10 }
    }
}

impl Tolerance {
    /// Validated constructor: `0 < confirm_eps <= rel_eps < 1`, `abs_eps > 0`.
    pub fn new(rel_eps: f64, abs_eps: f64, confirm_eps: f64) -> Result<Self, NumericsError> {
        let t = Tolerance { rel_eps, abs_eps, confirm_eps };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), NumericsError> {
        let ok = self.confirm_eps > 0.0
            && self.confirm_eps <= self.rel_eps
            && self.rel_eps < 1.0
            && self.abs_eps > 0.0;
        if ok {
            Ok(())
        } else {
            Err(NumericsError::InvalidTolerance(format!(
                "need 0 < confirm_eps <= rel_eps < 1 and abs_eps > 0, got {self:?}"
            )))
        }
    }

    /// Tolerance for the extended-precision confirmation pass.
    pub fn high_precision() -> Self {
        Tolerance { rel_eps: 1e-20, abs_eps: 1e-22, confirm_eps: 1e-20 }
    }

    /// Copy with `rel_eps` replaced, keeping the invariants by clamping
    /// `confirm_eps`.
    pub fn with_rel(&self, rel_eps: f64) -> Result<Self, NumericsError> {
        Tolerance::new(rel_eps, self.abs_eps, self.confirm_eps.min(rel_eps))
    }

    /// Distance tolerance for a scene of the given size.
    pub fn dist(&self, scale: f64) -> f64 {
        self.abs_eps.max(self.rel_eps * scale)
    }
}

/// `|x - y| <= max(abs_eps, rel_eps * max(|x|, |y|))`.
pub fn approx_eq(x: f64, y: f64, tol: &Tolerance) -> Result<bool, NumericsError> {
    for v in [x, y] {
        if !v.is_finite() {
            return Err(NumericsError::NonFinite(v));
        }
    }
    Ok((x - y).abs() <= tol.abs_eps.max(tol.rel_eps * x.abs().max(y.abs())))
}
