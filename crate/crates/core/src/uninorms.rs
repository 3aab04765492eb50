//! Uninorms: the min/max structural families, idempotent uninorms,
//! representable (generator-built) uninorms, and the two families that are
//! continuous on the open unit square.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::connectives::{TConorm, TNorm};
use crate::numerics::{
    uniform_grid, ExtendedMonotoneFunction, ExtendedReal, Monotonicity, NumericsError, OutOfRange,
    RealFn, TolerancePolicy,
};
use crate::operator::{check_associative, check_commutative, check_identity, check_monotone, BinaryOp};
use crate::par::{first_tuple_match, TupleSpace};
use crate::report::{CheckReport, ConditionResult, Witness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UninormError {
    #[error("identity e = {0} is degenerate; use a t-norm (e = 1) or a t-conorm (e = 0) instead")]
    DegenerateIdentity(f64),
    #[error("parameter `{name}` = {value} is outside the unit interval")]
    OutOfUnitInterval { name: &'static str, value: f64 },
    #[error("generator violates `{constraint}`: {detail}")]
    GeneratorConstraint { constraint: &'static str, detail: String },
    #[error("parameters must satisfy {0}")]
    ParameterOrder(String),
    #[error("inner uninorm must be representable")]
    NotRepresentable,
    #[error("component `{0}` must be continuous")]
    NotContinuous(String),
    #[error("internal invariant violated at ({x}, {y}): {detail}")]
    InternalInvariantViolation { x: f64, y: f64, detail: String },
    #[error("U(1, 0) = {0} is neither 0 nor 1")]
    NotLocallyClassifiable(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Conjunctive,
    Disjunctive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tie {
    #[default]
    TakeMin,
    TakeMax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CosMinCorner {
    #[default]
    TakeLambda,
    TakeOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CosMaxCorner {
    TakeZero,
    #[default]
    TakeOmega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    LowerSquare,
    UpperSquare,
    AOfE,
}

/// Which block of the unit square `(x, y)` falls in for identity `e`.
/// `(e, e)` belongs to both squares and is reported as the lower one.
pub fn region_of(e: f64, x: f64, y: f64) -> Region {
    if x <= e && y <= e {
        Region::LowerSquare
    } else if x >= e && y >= e {
        Region::UpperSquare
    } else {
        Region::AOfE
    }
}

#[derive(Clone)]
enum Kind {
    Min { t: TNorm, s: TConorm },
    Max { t: TNorm, s: TConorm },
    Idempotent { g: RealFn, tie: Tie, tol: f64 },
    Representable { h: ExtendedMonotoneFunction, boundary: Boundary },
    CosMin { t1: TNorm, lambda: f64, t2: TNorm, u: f64, r: Box<Uninorm>, corner: CosMinCorner },
    CosMax { r: Box<Uninorm>, v: f64, s1: TConorm, omega: f64, s2: TConorm, corner: CosMaxCorner },
}

#[derive(Clone)]
pub struct Uninorm {
    kind: Kind,
    e: f64,
}

fn check_identity_param(e: f64) -> Result<(), UninormError> {
    if !(0.0..=1.0).contains(&e) {
        return Err(UninormError::OutOfUnitInterval { name: "e", value: e });
    }
    if e == 0.0 || e == 1.0 {
        return Err(UninormError::DegenerateIdentity(e));
    }
    Ok(())
}

fn unit(name: &'static str, value: f64) -> Result<(), UninormError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(UninormError::OutOfUnitInterval { name, value })
    }
}

impl Uninorm {
    /// Conjunctive block uninorm: `T` rescaled on `[0,e]^2`, `S` on `[e,1]^2`, min elsewhere.
    pub fn u_min(t: TNorm, s: TConorm, e: f64) -> Result<Self, UninormError> {
        check_identity_param(e)?;
        Ok(Uninorm { kind: Kind::Min { t, s }, e })
    }

    /// Disjunctive block uninorm: as [`Uninorm::u_min`] with max elsewhere.
    pub fn u_max(t: TNorm, s: TConorm, e: f64) -> Result<Self, UninormError> {
        check_identity_param(e)?;
        Ok(Uninorm { kind: Kind::Max { t, s }, e })
    }

    /// Idempotent uninorm from a non-increasing `g` with `g(e) = e`. Ties
    /// `y = g(x)` are detected within the policy's `eps_eq`.
    pub fn idempotent<F>(g: F, e: f64, tie: Tie, pol: &TolerancePolicy) -> Result<Self, UninormError>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::idempotent_arc(Arc::new(g), e, tie, pol)
    }

    pub fn idempotent_arc(g: RealFn, e: f64, tie: Tie, pol: &TolerancePolicy) -> Result<Self, UninormError> {
        check_identity_param(e)?;
        if !pol.eq(g(e), e) {
            return Err(UninormError::GeneratorConstraint {
                constraint: "g(e) = e",
                detail: format!("g({e}) = {}", g(e)),
            });
        }
        let grid = uniform_grid(101).expect("valid grid");
        let mut prev = f64::INFINITY;
        for &x in &grid {
            let v = g(x);
            if !(0.0..=1.0).contains(&v) {
                return Err(UninormError::GeneratorConstraint {
                    constraint: "g maps [0,1] into [0,1]",
                    detail: format!("g({x}) = {v}"),
                });
            }
            if v > prev + pol.eps_leq {
                return Err(UninormError::GeneratorConstraint {
                    constraint: "g non-increasing",
                    detail: format!("g increases at x = {x}"),
                });
            }
            prev = v;
        }
        Ok(Uninorm {
            kind: Kind::Idempotent { g, tie, tol: pol.eps_eq },
            e,
        })
    }

    /// `U(x, y) = h^{-1}(h(x) + h(y))` for a strictly increasing `h` with
    /// `h(0) = -inf`, `h(e) = 0`, `h(1) = +inf`; the `(0,1)` corner follows `boundary`.
    pub fn representable(
        h: ExtendedMonotoneFunction,
        e: f64,
        boundary: Boundary,
        pol: &TolerancePolicy,
    ) -> Result<Self, UninormError> {
        check_identity_param(e)?;
        let constraint_err = |constraint: &'static str, detail: String| UninormError::GeneratorConstraint { constraint, detail };
        if h.direction() != Monotonicity::Increasing {
            return Err(constraint_err("h strictly increasing", "declared decreasing".into()));
        }
        let (h0, h1) = h.endpoint_values();
        if h0 != ExtendedReal::NegInf {
            return Err(constraint_err("h(0) = -inf", format!("h(0) = {h0}")));
        }
        if h1 != ExtendedReal::PosInf {
            return Err(constraint_err("h(1) = +inf", format!("h(1) = {h1}")));
        }
        let he = h.eval(e).map_err(|err| constraint_err("h(e) = 0", err.to_string()))?;
        if !pol.eq_ext(he, ExtendedReal::ZERO) {
            return Err(constraint_err("h(e) = 0", format!("h({e}) = {he}")));
        }
        h.verify_strictly_monotone(&uniform_grid(101).expect("valid grid"))
            .map_err(|err| constraint_err("h strictly increasing", err.to_string()))?;
        Ok(Uninorm {
            kind: Kind::Representable {
                h: h.with_out_of_range(OutOfRange::NearestEndpoint),
                boundary,
            },
            e,
        })
    }

    /// Continuous-on-the-open-square family with a t-norm part on `[0, u]`
    /// (itself split at `lambda` into `T1` and `T2`) and a representable block
    /// `R` rescaled onto `[u, 1]^2`. The overall identity is `u + (1-u) e_R`.
    #[allow(clippy::too_many_arguments)]
    pub fn cos_min(
        t1: TNorm,
        lambda: f64,
        t2: TNorm,
        u: f64,
        r: Uninorm,
        e: f64,
        corner: CosMinCorner,
        pol: &TolerancePolicy,
    ) -> Result<Self, UninormError> {
        check_identity_param(e)?;
        unit("lambda", lambda)?;
        unit("u", u)?;
        if !(lambda <= u && u < e) {
            return Err(UninormError::ParameterOrder(format!(
                "0 <= lambda <= u < e (got lambda = {lambda}, u = {u}, e = {e})"
            )));
        }
        if !r.is_representable() {
            return Err(UninormError::NotRepresentable);
        }
        for t in [&t1, &t2] {
            if !t.is_continuous() {
                return Err(UninormError::NotContinuous(t.name()));
            }
        }
        let implied = u + (1.0 - u) * r.e;
        if !pol.eq(implied, e) {
            return Err(UninormError::ParameterOrder(format!(
                "e = u + (1 - u) * e_R (got e = {e}, implied {implied})"
            )));
        }
        Ok(Uninorm {
            kind: Kind::CosMin { t1, lambda, t2, u, r: Box::new(r), corner },
            e,
        })
    }

    /// Dual of [`Uninorm::cos_min`]: representable block on `[0, v]^2` with
    /// identity `v e_R`, t-conorm part on `[v, 1]` split at `omega`.
    #[allow(clippy::too_many_arguments)]
    pub fn cos_max(
        r: Uninorm,
        e: f64,
        v: f64,
        s1: TConorm,
        omega: f64,
        s2: TConorm,
        corner: CosMaxCorner,
        pol: &TolerancePolicy,
    ) -> Result<Self, UninormError> {
        check_identity_param(e)?;
        unit("v", v)?;
        unit("omega", omega)?;
        if !(e < v && v <= omega) {
            return Err(UninormError::ParameterOrder(format!(
                "e < v <= omega <= 1 (got e = {e}, v = {v}, omega = {omega})"
            )));
        }
        if !r.is_representable() {
            return Err(UninormError::NotRepresentable);
        }
        for s in [&s1, &s2] {
            if !s.is_continuous() {
                return Err(UninormError::NotContinuous(s.name()));
            }
        }
        let implied = v * r.e;
        if !pol.eq(implied, e) {
            return Err(UninormError::ParameterOrder(format!(
                "e = v * e_R (got e = {e}, implied {implied})"
            )));
        }
        Ok(Uninorm {
            kind: Kind::CosMax { r: Box::new(r), v, s1, omega, s2, corner },
            e,
        })
    }

    pub fn identity(&self) -> f64 {
        self.e
    }

    pub fn is_representable(&self) -> bool {
        matches!(self.kind, Kind::Representable { .. })
    }

    /// The additive generator of a representable uninorm.
    pub fn generator(&self) -> Option<&ExtendedMonotoneFunction> {
        match &self.kind {
            Kind::Representable { h, .. } => Some(h),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        let e = self.e;
        match &self.kind {
            Kind::Min { t, s } => format!("umin({}, {}, {e})", t.name(), s.name()),
            Kind::Max { t, s } => format!("umax({}, {}, {e})", t.name(), s.name()),
            Kind::Idempotent { tie, .. } => format!("idem(g, {e}, {tie:?})"),
            Kind::Representable { h, boundary } => format!("rep({}, {e}, {boundary:?})", h.name()),
            Kind::CosMin { t1, lambda, t2, u, r, .. } => {
                format!("cosmin({}, {lambda}, {}, {u}, {}, {e})", t1.name(), t2.name(), r.name())
            }
            Kind::CosMax { r, v, s1, omega, s2, .. } => {
                format!("cosmax({}, {e}, {v}, {}, {omega}, {})", r.name(), s1.name(), s2.name())
            }
        }
    }

    pub fn try_eval(&self, x: f64, y: f64) -> Result<f64, UninormError> {
        let e = self.e;
        match &self.kind {
            Kind::Min { t, s } => Ok(block(e, x, y, t, s).unwrap_or_else(|| x.min(y))),
            Kind::Max { t, s } => Ok(block(e, x, y, t, s).unwrap_or_else(|| x.max(y))),
            Kind::Idempotent { g, tie, tol } => {
                let gx = g(x);
                let ggx = g(gx);
                let on_curve = (y - gx).abs() <= *tol;
                if y < gx - tol || (on_curve && x < ggx - tol) {
                    Ok(x.min(y))
                } else if y > gx + tol || (on_curve && x > ggx + tol) {
                    Ok(x.max(y))
                } else {
                    Ok(match tie {
                        Tie::TakeMin => x.min(y),
                        Tie::TakeMax => x.max(y),
                    })
                }
            }
            Kind::Representable { h, boundary } => {
                if (x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0) {
                    return Ok(match boundary {
                        Boundary::Conjunctive => 0.0,
                        Boundary::Disjunctive => 1.0,
                    });
                }
                let wrap = |err: NumericsError| UninormError::InternalInvariantViolation {
                    x,
                    y,
                    detail: err.to_string(),
                };
                let sum = h.eval(x).map_err(wrap)?.checked_add(h.eval(y).map_err(wrap)?).map_err(wrap)?;
                h.pseudo_inverse(sum).map_err(wrap)
            }
            Kind::CosMin { t1, lambda, t2, u, r, corner } => {
                let (l, u) = (*lambda, *u);
                if (x == l && y == 1.0) || (x == 1.0 && y == l) {
                    return Ok(match corner {
                        CosMinCorner::TakeLambda => l,
                        CosMinCorner::TakeOne => 1.0,
                    });
                }
                let (lo, hi) = (x.min(y), x.max(y));
                if lo > l && hi == 1.0 {
                    return Ok(1.0);
                }
                if hi <= l {
                    return Ok(if l > 0.0 { l * t1.apply(x / l, y / l) } else { 0.0 });
                }
                if lo >= l && hi <= u {
                    return Ok(if u > l {
                        l + (u - l) * t2.apply((x - l) / (u - l), (y - l) / (u - l))
                    } else {
                        l
                    });
                }
                if lo >= u {
                    let w = 1.0 - u;
                    return Ok(u + w * r.try_eval((x - u) / w, (y - u) / w)?);
                }
                Ok(lo)
            }
            Kind::CosMax { r, v, s1, omega, s2, corner } => {
                let (v, w) = (*v, *omega);
                if (x == 0.0 && y == w) || (x == w && y == 0.0) {
                    return Ok(match corner {
                        CosMaxCorner::TakeZero => 0.0,
                        CosMaxCorner::TakeOmega => w,
                    });
                }
                let (lo, hi) = (x.min(y), x.max(y));
                if hi < w && lo == 0.0 {
                    return Ok(0.0);
                }
                if hi <= v {
                    return Ok(v * r.try_eval(x / v, y / v)?);
                }
                if lo >= v && hi <= w {
                    return Ok(if w > v {
                        v + (w - v) * s1.apply((x - v) / (w - v), (y - v) / (w - v))
                    } else {
                        v
                    });
                }
                if lo >= w {
                    return Ok(if w < 1.0 {
                        w + (1.0 - w) * s2.apply((x - w) / (1.0 - w), (y - w) / (1.0 - w))
                    } else {
                        1.0
                    });
                }
                Ok(hi)
            }
        }
    }
}

/// The two rescaled squares shared by the min/max families.
fn block(e: f64, x: f64, y: f64, t: &TNorm, s: &TConorm) -> Option<f64> {
    if x <= e && y <= e {
        Some(e * t.apply(x / e, y / e))
    } else if x >= e && y >= e {
        let w = 1.0 - e;
        Some(e + w * s.apply((x - e) / w, (y - e) / w))
    } else {
        None
    }
}

impl BinaryOp for Uninorm {
    fn apply(&self, x: f64, y: f64) -> f64 {
        self.try_eval(x, y).unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for Uninorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Uninorm({})", self.name())
    }
}

/// Conjunctive iff `U(1, 0) = 0`, disjunctive iff `U(1, 0) = 1`.
pub fn classify_boundary(u: &dyn BinaryOp, pol: &TolerancePolicy) -> Result<Boundary, UninormError> {
    let v = u.apply(1.0, 0.0);
    if pol.eq(v, 0.0) {
        Ok(Boundary::Conjunctive)
    } else if pol.eq(v, 1.0) {
        Ok(Boundary::Disjunctive)
    } else {
        Err(UninormError::NotLocallyClassifiable(v))
    }
}

/// Exhaustive uninorm axioms on a grid, plus the `min <= U <= max` bound on
/// the mixed region.
pub fn check_uninorm_axioms(op: &dyn BinaryOp, e: f64, grid: &[f64], pol: &TolerancePolicy) -> CheckReport {
    let mut report = CheckReport::new(format!("uninorm axioms (e = {e})"));
    report.push(check_commutative(op, grid, pol, "U1 commutativity"));
    report.push(check_associative(op, grid, pol, "U2 associativity"));
    report.push(check_monotone(op, grid, pol, "U3 monotonicity"));
    report.push(check_identity(op, e, grid, pol, "U4 identity"));
    report.push(check_mixed_region_bounds(op, e, grid, pol));
    report
}

fn check_mixed_region_bounds(op: &dyn BinaryOp, e: f64, grid: &[f64], pol: &TolerancePolicy) -> ConditionResult {
    let space = TupleSpace::new(grid.len(), 2);
    let w = first_tuple_match(space, |t| {
        let (x, y) = (grid[t[0]], grid[t[1]]);
        if region_of(e, x, y) != Region::AOfE {
            return None;
        }
        let v = op.apply(x, y);
        let ok = pol.leq(x.min(y), v) && pol.leq(v, x.max(y));
        (!ok).then(|| Witness::new(vec![x, y], Some((v, x.min(y))), "value outside [min, max] on A(e)"))
    });
    ConditionResult::from_search("mixed-region bounds", space.len(), w)
}

/// The generator `ln(2x)` on `[0, 1/2)`, `-ln(2 - 2x)` on `[1/2, 1]`.
pub fn log_generator(pol: &TolerancePolicy) -> ExtendedMonotoneFunction {
    ExtendedMonotoneFunction::new(
        "ln-split",
        Monotonicity::Increasing,
        |x| if x < 0.5 { (2.0 * x).ln() } else { -(2.0 - 2.0 * x).ln() },
        *pol,
    )
    .expect("finite or infinite on [0, 1]")
    .with_inverse(|y| if y < 0.0 { 0.5 * y.exp() } else { 1.0 - 0.5 * (-y).exp() })
}

/// The generator `1 - 1/(2x)` on `[0, 1/2]`, `1/(2(1-x)) - 1` on `(1/2, 1]`.
pub fn rational_generator(pol: &TolerancePolicy) -> ExtendedMonotoneFunction {
    ExtendedMonotoneFunction::new(
        "rational-split",
        Monotonicity::Increasing,
        |x| {
            if x <= 0.5 {
                if x == 0.0 {
                    f64::NEG_INFINITY
                } else {
                    1.0 - 1.0 / (2.0 * x)
                }
            } else if x == 1.0 {
                f64::INFINITY
            } else {
                1.0 / (2.0 * (1.0 - x)) - 1.0
            }
        },
        *pol,
    )
    .expect("finite or infinite on [0, 1]")
    .with_inverse(|y| if y <= 0.0 { 1.0 / (2.0 * (1.0 - y)) } else { 1.0 - 1.0 / (2.0 * (y + 1.0)) })
}

/// The representable uninorm with identity 1/2 built from [`log_generator`].
pub fn log_uninorm(boundary: Boundary, pol: &TolerancePolicy) -> Uninorm {
    Uninorm::representable(log_generator(pol), 0.5, boundary, pol).expect("valid generator")
}

/// The representable uninorm with identity 1/2 built from [`rational_generator`].
pub fn rational_uninorm(boundary: Boundary, pol: &TolerancePolicy) -> Uninorm {
    Uninorm::representable(rational_generator(pol), 0.5, boundary, pol).expect("valid generator")
}

/// The conjunctive uninorm with `T` on `[0,e]^2`, `max` on `[e,1]^2` and `min`
/// elsewhere. Its fuzzy t-subnorms of `([0,1], min)` are exactly the `sigma`
/// that decrease on `{sigma >= e}` with `sigma(1) = 1`; its fuzzy t-subconorms
/// of `([0,1], max)` are the `sigma` that increase there with `sigma(0) = 1`.
pub fn decreasing_structure(t: TNorm, e: f64) -> Result<Uninorm, UninormError> {
    Uninorm::u_min(t, TConorm::Maximum, e)
}

/// A small set of uninorms covering every construction, identity 1/2 where possible.
pub fn shipped_uninorms(pol: &TolerancePolicy) -> Vec<Uninorm> {
    let mut out = vec![
        Uninorm::u_min(TNorm::Lukasiewicz, TConorm::Lukasiewicz, 0.5).unwrap(),
        Uninorm::u_max(TNorm::Lukasiewicz, TConorm::Lukasiewicz, 0.5).unwrap(),
        Uninorm::u_min(TNorm::Product, TConorm::ProbabilisticSum, 0.5).unwrap(),
        Uninorm::idempotent(|x| 1.0 - x, 0.5, Tie::TakeMin, pol).unwrap(),
        log_uninorm(Boundary::Conjunctive, pol),
        log_uninorm(Boundary::Disjunctive, pol),
        rational_uninorm(Boundary::Conjunctive, pol),
    ];
    out.push(
        Uninorm::cos_min(
            TNorm::Lukasiewicz,
            0.25,
            TNorm::Product,
            0.5,
            log_uninorm(Boundary::Conjunctive, pol),
            0.75,
            CosMinCorner::TakeLambda,
            pol,
        )
        .unwrap(),
    );
    out.push(
        Uninorm::cos_max(
            log_uninorm(Boundary::Disjunctive, pol),
            0.25,
            0.5,
            TConorm::ProbabilisticSum,
            0.75,
            TConorm::Lukasiewicz,
            CosMaxCorner::TakeOmega,
            pol,
        )
        .unwrap(),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    #[test]
    fn log_uninorm_values() {
        let u = log_uninorm(Boundary::Conjunctive, &pol());
        assert!((u.apply(0.25, 0.25) - 0.125).abs() < 1e-12);
        assert!((u.apply(0.75, 0.75) - 0.875).abs() < 1e-12);
        assert_eq!(u.apply(0.0, 1.0), 0.0);
        assert_eq!(log_uninorm(Boundary::Disjunctive, &pol()).apply(1.0, 0.0), 1.0);
        for y in uniform_grid(101).unwrap() {
            assert!((u.apply(0.5, y) - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn regions() {
        assert_eq!(region_of(0.5, 0.2, 0.3), Region::LowerSquare);
        assert_eq!(region_of(0.5, 0.2, 0.8), Region::AOfE);
        assert_eq!(region_of(0.5, 0.5, 0.8), Region::UpperSquare);
    }

    #[test]
    fn block_values_and_classification() {
        let u = Uninorm::u_min(TNorm::Lukasiewicz, TConorm::Lukasiewicz, 0.5).unwrap();
        assert_eq!(u.apply(0.2, 0.8), 0.2);
        assert_eq!(classify_boundary(&u, &pol()).unwrap(), Boundary::Conjunctive);
        let d = Uninorm::u_max(TNorm::Lukasiewicz, TConorm::Lukasiewicz, 0.5).unwrap();
        assert_eq!(classify_boundary(&d, &pol()).unwrap(), Boundary::Disjunctive);
        let mean = crate::operator::ArithmeticMean { arity: 2 };
        assert!(matches!(classify_boundary(&mean, &pol()), Err(UninormError::NotLocallyClassifiable(_))));
    }

    #[test]
    fn degenerate_identity_rejected() {
        assert_eq!(
            Uninorm::u_min(TNorm::Minimum, TConorm::Maximum, 1.0).unwrap_err(),
            UninormError::DegenerateIdentity(1.0)
        );
        assert!(Uninorm::u_max(TNorm::Minimum, TConorm::Maximum, 0.0).is_err());
    }

    #[test]
    fn representable_constraints_are_named() {
        let p = pol();
        let shifted = ExtendedMonotoneFunction::new(
            "shifted",
            Monotonicity::Increasing,
            |x| if x < 0.5 { (2.0 * x).ln() + 0.3 } else { -(2.0 - 2.0 * x).ln() + 0.3 },
            p,
        )
        .unwrap();
        match Uninorm::representable(shifted, 0.5, Boundary::Conjunctive, &p) {
            Err(UninormError::GeneratorConstraint { constraint, .. }) => assert_eq!(constraint, "h(e) = 0"),
            other => panic!("unexpected {other:?}"),
        }
        let bounded = ExtendedMonotoneFunction::new("lin", Monotonicity::Increasing, |x| x - 0.5, p).unwrap();
        match Uninorm::representable(bounded, 0.5, Boundary::Conjunctive, &p) {
            Err(UninormError::GeneratorConstraint { constraint, .. }) => assert_eq!(constraint, "h(0) = -inf"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn idempotent_diagonal_exact() {
        let u = Uninorm::idempotent(|x| 1.0 - x, 0.5, Tie::TakeMin, &pol()).unwrap();
        for x in uniform_grid(101).unwrap() {
            assert_eq!(u.apply(x, x), x);
        }
        assert!(Uninorm::idempotent(|x| x, 0.5, Tie::TakeMin, &pol()).is_err());
    }

    #[test]
    fn shipped_uninorms_satisfy_axioms() {
        let p = pol();
        let g = uniform_grid(21).unwrap();
        for u in shipped_uninorms(&p) {
            let r = check_uninorm_axioms(&u, u.identity(), &g, &p);
            assert!(r.passed(), "{}\n{}", u.name(), r);
        }
    }

    #[test]
    fn projection_fails_commutativity_at_corner() {
        let proj = crate::operator::CustomOp::new("proj", |x, _| x);
        let r = check_uninorm_axioms(&proj, 0.5, &uniform_grid(2).unwrap(), &pol());
        let c = r.condition("U1 commutativity").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_ref().unwrap().point, vec![0.0, 1.0]);
    }

    #[test]
    fn omega_corner_needs_positive_s1() {
        // with a nilpotent S1, 0 * (y * z) reaches the corner while (0 * y) * z stays at 0
        let p = pol();
        let g = uniform_grid(21).unwrap();
        let build = |corner| {
            Uninorm::cos_max(
                log_uninorm(Boundary::Disjunctive, &p),
                0.25,
                0.5,
                TConorm::Lukasiewicz,
                0.75,
                TConorm::ProbabilisticSum,
                corner,
                &p,
            )
            .unwrap()
        };
        let omega = build(CosMaxCorner::TakeOmega);
        let r = check_uninorm_axioms(&omega, 0.25, &g, &p);
        assert!(!r.condition("U2 associativity").unwrap().passed);
        let zero = build(CosMaxCorner::TakeZero);
        assert!(check_uninorm_axioms(&zero, 0.25, &g, &p).passed());
    }

    #[test]
    fn lambda_corner_needs_positive_t2() {
        let p = pol();
        let g = uniform_grid(21).unwrap();
        let build = |corner| {
            Uninorm::cos_min(
                TNorm::Product,
                0.25,
                TNorm::Lukasiewicz,
                0.5,
                log_uninorm(Boundary::Conjunctive, &p),
                0.75,
                corner,
                &p,
            )
            .unwrap()
        };
        assert!(!check_uninorm_axioms(&build(CosMinCorner::TakeLambda), 0.75, &g, &p).passed());
        assert!(check_uninorm_axioms(&build(CosMinCorner::TakeOne), 0.75, &g, &p).passed());
    }

    #[test]
    fn cos_parameters_are_validated() {
        let p = pol();
        let r = log_uninorm(Boundary::Conjunctive, &p);
        assert!(Uninorm::cos_min(TNorm::Minimum, 0.25, TNorm::Minimum, 0.5, r.clone(), 0.6, CosMinCorner::TakeLambda, &p).is_err());
        assert!(Uninorm::cos_min(TNorm::Drastic, 0.25, TNorm::Minimum, 0.5, r.clone(), 0.75, CosMinCorner::TakeLambda, &p).is_err());
        let plain = Uninorm::u_min(TNorm::Minimum, TConorm::Maximum, 0.5).unwrap();
        assert_eq!(
            Uninorm::cos_max(plain, 0.25, 0.5, TConorm::Maximum, 0.75, TConorm::Maximum, CosMaxCorner::TakeOmega, &p).unwrap_err(),
            UninormError::NotRepresentable
        );
    }
}
