//! Extended-real arithmetic, strictly monotone functions with pseudo-inverses,
//! and the tolerance policy shared by every checker in the crate.
//!
//! Infinities are symbolic. A generator such as `h(x) = ln(2x)` evaluates to
//! [`ExtendedReal::NegInf`] at `x = 0`, and the undefined sum `-inf + +inf` is
//! reported as [`NumericsError::UndefinedSum`] instead of producing a NaN.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::sync::Arc;

use thiserror::Error;

/// Errors raised by the numeric substrate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("undefined extended sum (-inf) + (+inf)")]
    UndefinedSum,
    #[error("evaluator produced NaN at x = {x}")]
    NotANumber { x: f64 },
    #[error("monotonicity violation detected near x = {x}")]
    MonotonicityViolation { x: f64 },
    #[error("a grid needs at least 2 points, got {0}")]
    InvalidGrid(usize),
    #[error("tolerance `{name}` must be strictly positive, got {value}")]
    InvalidTolerance { name: &'static str, value: f64 },
    #[error("invalid domain [{lo}, {hi}]: must be a non-degenerate subinterval of [0, 1]")]
    InvalidDomain { lo: f64, hi: f64 },
}

/// A real number or one of the two symbolic infinities.
///
/// The derived ordering places `NegInf` below every finite value and `PosInf`
/// above, which is the usual order on the extended real line.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum ExtendedReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtendedReal {
    pub const ZERO: ExtendedReal = ExtendedReal::Finite(0.0);

    /// Maps IEEE infinities to the symbolic ones. `None` for NaN.
    pub fn from_f64(v: f64) -> Option<Self> {
        if v.is_nan() {
            None
        } else if v == f64::INFINITY {
            Some(ExtendedReal::PosInf)
        } else if v == f64::NEG_INFINITY {
            Some(ExtendedReal::NegInf)
        } else {
            Some(ExtendedReal::Finite(v))
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::NegInf => f64::NEG_INFINITY,
            ExtendedReal::Finite(v) => v,
            ExtendedReal::PosInf => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Total addition except for `(-inf) + (+inf)`.
    pub fn checked_add(self, rhs: ExtendedReal) -> Result<ExtendedReal, NumericsError> {
        use ExtendedReal::*;
        match (self, rhs) {
            (NegInf, PosInf) | (PosInf, NegInf) => Err(NumericsError::UndefinedSum),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (Finite(a), Finite(b)) => Ok(ExtendedReal::from_f64(a + b).unwrap_or(Finite(a + b))),
        }
    }

    pub fn total_cmp(&self, other: &ExtendedReal) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

impl Neg for ExtendedReal {
    type Output = ExtendedReal;

    fn neg(self) -> ExtendedReal {
        match self {
            ExtendedReal::NegInf => ExtendedReal::PosInf,
            ExtendedReal::Finite(v) => ExtendedReal::Finite(-v),
            ExtendedReal::PosInf => ExtendedReal::NegInf,
        }
    }
}

impl From<f64> for ExtendedReal {
    /// NaN is mapped to `Finite(NaN)`; prefer [`ExtendedReal::from_f64`] when the
    /// input is not known to be a number.
    fn from(v: f64) -> Self {
        ExtendedReal::from_f64(v).unwrap_or(ExtendedReal::Finite(v))
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInf => write!(f, "-inf"),
            ExtendedReal::Finite(v) => write!(f, "{v}"),
            ExtendedReal::PosInf => write!(f, "+inf"),
        }
    }
}

/// Tolerances used by every comparison in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TolerancePolicy {
    pub eps_eq: f64,
    pub eps_leq: f64,
    pub bisect_tol: f64,
    pub bisect_max_iter: u32,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy {
            eps_eq: 1e-9,
            eps_leq: 1e-9,
            bisect_tol: 1e-12,
            bisect_max_iter: 200,
        }
    }
}

impl TolerancePolicy {
    pub fn new(
        eps_eq: f64,
        eps_leq: f64,
        bisect_tol: f64,
        bisect_max_iter: u32,
    ) -> Result<Self, NumericsError> {
        for (name, value) in [("eps_eq", eps_eq), ("eps_leq", eps_leq), ("bisect_tol", bisect_tol)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(NumericsError::InvalidTolerance { name, value });
            }
        }
        if bisect_max_iter == 0 {
            return Err(NumericsError::InvalidTolerance {
                name: "bisect_max_iter",
                value: 0.0,
            });
        }
        Ok(TolerancePolicy {
            eps_eq,
            eps_leq,
            bisect_tol,
            bisect_max_iter,
        })
    }

    /// Default policy with both comparison epsilons replaced by `eps`.
    pub fn with_eps(eps: f64) -> Result<Self, NumericsError> {
        let d = TolerancePolicy::default();
        TolerancePolicy::new(eps, eps, d.bisect_tol, d.bisect_max_iter)
    }

    /// `a <= b + eps_leq`.
    pub fn leq(&self, a: f64, b: f64) -> bool {
        a <= b + self.eps_leq
    }

    /// `|a - b| <= eps_eq`.
    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.eps_eq
    }

    /// `leq` lifted to extended reals: infinities compare exactly.
    pub fn leq_ext(&self, a: ExtendedReal, b: ExtendedReal) -> bool {
        use ExtendedReal::*;
        match (a, b) {
            (NegInf, _) | (_, PosInf) => true,
            (PosInf, _) | (_, NegInf) => false,
            (Finite(x), Finite(y)) => self.leq(x, y),
        }
    }

    pub fn eq_ext(&self, a: ExtendedReal, b: ExtendedReal) -> bool {
        match (a, b) {
            (ExtendedReal::Finite(x), ExtendedReal::Finite(y)) => self.eq(x, y),
            _ => a == b,
        }
    }
}

/// `a <= b + eps_leq` under `pol`.
pub fn leq(a: f64, b: f64, pol: &TolerancePolicy) -> bool {
    pol.leq(a, b)
}

/// `{0, 1/(n-1), ..., 1}`; both endpoints are exact.
pub fn uniform_grid(n: usize) -> Result<Vec<f64>, NumericsError> {
    if n < 2 {
        return Err(NumericsError::InvalidGrid(n));
    }
    let denom = (n - 1) as f64;
    Ok((0..n).map(|i| i as f64 / denom).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

/// Where the pseudo-inverse sends values outside the image of the function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutOfRange {
    /// Always the lower domain endpoint (t-norm generators).
    ToLower,
    /// Always the upper domain endpoint (t-conorm generators).
    ToUpper,
    /// The domain endpoint whose image is closest (uninorm generators).
    NearestEndpoint,
}

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A strictly monotone function on a closed subinterval of `[0, 1]` with
/// values in the extended reals, together with its pseudo-inverse.
#[derive(Clone)]
pub struct ExtendedMonotoneFunction {
    name: String,
    direction: Monotonicity,
    domain: (f64, f64),
    evaluator: RealFn,
    inverse: Option<RealFn>,
    out_of_range: OutOfRange,
    endpoints: (ExtendedReal, ExtendedReal),
    policy: TolerancePolicy,
}

impl fmt::Debug for ExtendedMonotoneFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtendedMonotoneFunction")
            .field("name", &self.name)
            .field("direction", &self.direction)
            .field("domain", &self.domain)
            .field("endpoints", &self.endpoints)
            .field("analytic_inverse", &self.inverse.is_some())
            .finish()
    }
}

impl ExtendedMonotoneFunction {
    /// Wraps `evaluator` on the domain `[0, 1]`. IEEE infinities returned by the
    /// evaluator become symbolic infinities.
    pub fn new<F>(
        name: impl Into<String>,
        direction: Monotonicity,
        evaluator: F,
        policy: TolerancePolicy,
    ) -> Result<Self, NumericsError>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::from_arc(name, direction, Arc::new(evaluator), policy)
    }

    pub fn from_arc(
        name: impl Into<String>,
        direction: Monotonicity,
        evaluator: RealFn,
        policy: TolerancePolicy,
    ) -> Result<Self, NumericsError> {
        let mut f = ExtendedMonotoneFunction {
            name: name.into(),
            direction,
            domain: (0.0, 1.0),
            evaluator,
            inverse: None,
            out_of_range: OutOfRange::NearestEndpoint,
            endpoints: (ExtendedReal::ZERO, ExtendedReal::ZERO),
            policy,
        };
        f.endpoints = (f.eval(0.0)?, f.eval(1.0)?);
        Ok(f)
    }

    pub fn with_domain(mut self, lo: f64, hi: f64) -> Result<Self, NumericsError> {
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo >= hi {
            return Err(NumericsError::InvalidDomain { lo, hi });
        }
        self.domain = (lo, hi);
        self.endpoints = (self.eval(lo)?, self.eval(hi)?);
        Ok(self)
    }

    /// Supplies a closed-form inverse for finite arguments inside the image.
    pub fn with_inverse<F>(mut self, inverse: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.inverse = Some(Arc::new(inverse));
        self
    }

    pub fn with_out_of_range(mut self, rule: OutOfRange) -> Self {
        self.out_of_range = rule;
        self
    }

    pub fn with_policy(mut self, policy: TolerancePolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn direction(&self) -> Monotonicity {
        self.direction
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn endpoint_values(&self) -> (ExtendedReal, ExtendedReal) {
        self.endpoints
    }

    pub fn out_of_range(&self) -> OutOfRange {
        self.out_of_range
    }

    pub fn has_analytic_inverse(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn policy(&self) -> &TolerancePolicy {
        &self.policy
    }

    pub fn eval(&self, x: f64) -> Result<ExtendedReal, NumericsError> {
        let v = (self.evaluator)(x);
        ExtendedReal::from_f64(v).ok_or(NumericsError::NotANumber { x })
    }

    /// The function `x -> -f(x)`, with the opposite direction. Its inverse is
    /// `y -> f^{-1}(-y)`.
    pub fn negated(&self) -> ExtendedMonotoneFunction {
        let inner = Arc::clone(&self.evaluator);
        let inverse = self.inverse.as_ref().map(|inv| {
            let inv = Arc::clone(inv);
            Arc::new(move |y: f64| inv(-y)) as RealFn
        });
        ExtendedMonotoneFunction {
            name: format!("-({})", self.name),
            direction: match self.direction {
                Monotonicity::Increasing => Monotonicity::Decreasing,
                Monotonicity::Decreasing => Monotonicity::Increasing,
            },
            domain: self.domain,
            evaluator: Arc::new(move |x| -inner(x)),
            inverse,
            out_of_range: self.out_of_range,
            endpoints: (-self.endpoints.0, -self.endpoints.1),
            policy: self.policy,
        }
    }

    /// Checks strict monotonicity in the declared direction at the given points
    /// (which must lie in the domain and be sorted ascending).
    pub fn verify_strictly_monotone(&self, points: &[f64]) -> Result<(), NumericsError> {
        let mut prev: Option<ExtendedReal> = None;
        for &x in points {
            let v = self.eval(x)?;
            if let Some(p) = prev {
                let ok = match self.direction {
                    Monotonicity::Increasing => p < v,
                    Monotonicity::Decreasing => p > v,
                };
                if !ok {
                    return Err(NumericsError::MonotonicityViolation { x });
                }
            }
            prev = Some(v);
        }
        Ok(())
    }

    /// Image endpoints in ascending order, paired with the domain point that
    /// attains each.
    fn ordered_image(&self) -> ((ExtendedReal, f64), (ExtendedReal, f64)) {
        let (lo, hi) = self.domain;
        let (f_lo, f_hi) = self.endpoints;
        match self.direction {
            Monotonicity::Increasing => ((f_lo, lo), (f_hi, hi)),
            Monotonicity::Decreasing => ((f_hi, hi), (f_lo, lo)),
        }
    }

    fn clamp_outside(&self, below: bool) -> f64 {
        let ((_, x_min), (_, x_max)) = self.ordered_image();
        match self.out_of_range {
            OutOfRange::ToLower => self.domain.0,
            OutOfRange::ToUpper => self.domain.1,
            OutOfRange::NearestEndpoint => {
                if below {
                    x_min
                } else {
                    x_max
                }
            }
        }
    }

    /// The pseudo-inverse: the inverse on the image, clamped to a domain
    /// endpoint (per [`OutOfRange`]) outside it.
    pub fn pseudo_inverse(&self, y: ExtendedReal) -> Result<f64, NumericsError> {
        let ((img_min, x_min), (img_max, x_max)) = self.ordered_image();
        if y < img_min {
            return Ok(self.clamp_outside(true));
        }
        if y > img_max {
            return Ok(self.clamp_outside(false));
        }
        if y == img_min {
            return Ok(x_min);
        }
        if y == img_max {
            return Ok(x_max);
        }
        let target = match y.finite() {
            Some(v) => v,
            // strictly inside an image bounded by the same infinity is impossible
            None => return Err(NumericsError::MonotonicityViolation { x: x_min }),
        };
        match &self.inverse {
            Some(inv) => {
                let x = inv(target);
                if x.is_nan() {
                    return Err(NumericsError::NotANumber { x: target });
                }
                Ok(x.clamp(self.domain.0, self.domain.1))
            }
            None => self.bisect(target),
        }
    }

    /// Solves `f(x) = y` by bisection, ignoring any analytic inverse. `y` must lie
    /// inside the image.
    pub fn bisect_inverse(&self, y: f64) -> Result<f64, NumericsError> {
        let ((img_min, x_min), (img_max, x_max)) = self.ordered_image();
        let y_ext = ExtendedReal::Finite(y);
        if y_ext <= img_min {
            return Ok(x_min);
        }
        if y_ext >= img_max {
            return Ok(x_max);
        }
        self.bisect(y)
    }

    fn bisect(&self, y: f64) -> Result<f64, NumericsError> {
        // Work with an increasing key so one loop covers both directions.
        let sign = match self.direction {
            Monotonicity::Increasing => 1.0,
            Monotonicity::Decreasing => -1.0,
        };
        let key = |x: f64| -> Result<ExtendedReal, NumericsError> {
            let v = self.eval(x)?;
            Ok(if sign > 0.0 { v } else { -v })
        };
        let target = ExtendedReal::Finite(sign * y);
        let (mut a, mut b) = self.domain;
        let mut fa = key(a)?;
        let mut fb = key(b)?;
        if !(self.policy.leq_ext(fa, target) && self.policy.leq_ext(target, fb)) {
            return Err(NumericsError::MonotonicityViolation { x: a });
        }
        for _ in 0..self.policy.bisect_max_iter {
            if b - a <= self.policy.bisect_tol {
                break;
            }
            let m = 0.5 * (a + b);
            let fm = key(m)?;
            if !(self.policy.leq_ext(fa, fm) && self.policy.leq_ext(fm, fb)) {
                return Err(NumericsError::MonotonicityViolation { x: m });
            }
            match fm.partial_cmp(&target) {
                Some(Ordering::Equal) => return Ok(m),
                Some(Ordering::Less) => {
                    a = m;
                    fa = fm;
                }
                _ => {
                    b = m;
                    fb = fm;
                }
            }
        }
        Ok(0.5 * (a + b))
    }
}

/// Free-function form of [`ExtendedMonotoneFunction::pseudo_inverse`].
pub fn pseudo_inverse(f: &ExtendedMonotoneFunction, y: ExtendedReal) -> Result<f64, NumericsError> {
    f.pseudo_inverse(y)
}
