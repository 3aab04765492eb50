//! t-norms and t-conorms: the four named families of each plus
//! generator-built operators.

use std::fmt;

use thiserror::Error;

use crate::numerics::{
    uniform_grid, ExtendedMonotoneFunction, ExtendedReal, Monotonicity, NumericsError, OutOfRange,
    TolerancePolicy,
};
use crate::operator::BinaryOp;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConnectiveError {
    #[error("generator violates `{constraint}`: {detail}")]
    GeneratorConstraint { constraint: &'static str, detail: String },
    #[error("operator `{0}` is not continuous")]
    NotContinuous(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Points used to validate generators at construction.
const VALIDATION_POINTS: usize = 101;

fn validate_generator(
    f: &ExtendedMonotoneFunction,
    direction: Monotonicity,
    anchor: f64,
    anchor_label: &'static str,
    pol: &TolerancePolicy,
) -> Result<(), ConnectiveError> {
    if f.direction() != direction {
        return Err(ConnectiveError::GeneratorConstraint {
            constraint: match direction {
                Monotonicity::Decreasing => "strictly decreasing",
                Monotonicity::Increasing => "strictly increasing",
            },
            detail: format!("declared {:?}", f.direction()),
        });
    }
    let grid = uniform_grid(VALIDATION_POINTS)?;
    f.verify_strictly_monotone(&grid).map_err(|e| ConnectiveError::GeneratorConstraint {
        constraint: match direction {
            Monotonicity::Decreasing => "strictly decreasing",
            Monotonicity::Increasing => "strictly increasing",
        },
        detail: e.to_string(),
    })?;
    let v = f.eval(anchor)?;
    if !pol.eq_ext(v, ExtendedReal::ZERO) {
        return Err(ConnectiveError::GeneratorConstraint {
            constraint: anchor_label,
            detail: format!("got {v}"),
        });
    }
    Ok(())
}

#[derive(Clone)]
pub enum TNorm {
    Minimum,
    Product,
    Lukasiewicz,
    Drastic,
    Generated(ExtendedMonotoneFunction),
}

impl TNorm {
    /// `T(x, y) = f^{[-1]}(f(x) + f(y))` for a strictly decreasing `f` with `f(1) = 0`.
    pub fn from_generator(f: ExtendedMonotoneFunction, pol: &TolerancePolicy) -> Result<Self, ConnectiveError> {
        validate_generator(&f, Monotonicity::Decreasing, 1.0, "f(1) = 0", pol)?;
        Ok(TNorm::Generated(f.with_out_of_range(OutOfRange::ToLower)))
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "min" | "minimum" => Some(TNorm::Minimum),
            "product" => Some(TNorm::Product),
            "lukasiewicz" => Some(TNorm::Lukasiewicz),
            "drastic" => Some(TNorm::Drastic),
            _ => None,
        }
    }

    pub fn builtins() -> [TNorm; 4] {
        [TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz, TNorm::Drastic]
    }

    pub fn name(&self) -> String {
        match self {
            TNorm::Minimum => "min".into(),
            TNorm::Product => "product".into(),
            TNorm::Lukasiewicz => "lukasiewicz".into(),
            TNorm::Drastic => "drastic".into(),
            TNorm::Generated(f) => format!("gen({})", f.name()),
        }
    }

    pub fn is_continuous(&self) -> bool {
        !matches!(self, TNorm::Drastic)
    }

    pub fn generator(&self) -> Option<&ExtendedMonotoneFunction> {
        match self {
            TNorm::Generated(f) => Some(f),
            _ => None,
        }
    }

    pub fn try_eval(&self, x: f64, y: f64) -> Result<f64, NumericsError> {
        Ok(match self {
            TNorm::Minimum => x.min(y),
            TNorm::Product => x * y,
            TNorm::Lukasiewicz => {
                if x == 1.0 {
                    y
                } else if y == 1.0 {
                    x
                } else {
                    (x + y - 1.0).max(0.0)
                }
            }
            TNorm::Drastic => {
                if x < 1.0 && y < 1.0 {
                    0.0
                } else {
                    x.min(y)
                }
            }
            TNorm::Generated(f) => {
                let s = f.eval(x)?.checked_add(f.eval(y)?)?;
                f.pseudo_inverse(s)?
            }
        })
    }
}

impl BinaryOp for TNorm {
    fn apply(&self, x: f64, y: f64) -> f64 {
        self.try_eval(x, y).unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TNorm({})", self.name())
    }
}

#[derive(Clone)]
pub enum TConorm {
    Maximum,
    ProbabilisticSum,
    Lukasiewicz,
    Drastic,
    Generated(ExtendedMonotoneFunction),
}

impl TConorm {
    /// `S(x, y) = g^{[-1]}(g(x) + g(y))` for a strictly increasing `g` with `g(0) = 0`.
    pub fn from_generator(g: ExtendedMonotoneFunction, pol: &TolerancePolicy) -> Result<Self, ConnectiveError> {
        validate_generator(&g, Monotonicity::Increasing, 0.0, "g(0) = 0", pol)?;
        Ok(TConorm::Generated(g.with_out_of_range(OutOfRange::ToUpper)))
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "max" | "maximum" => Some(TConorm::Maximum),
            "probsum" => Some(TConorm::ProbabilisticSum),
            "lukasiewicz" => Some(TConorm::Lukasiewicz),
            "drastic" => Some(TConorm::Drastic),
            _ => None,
        }
    }

    pub fn builtins() -> [TConorm; 4] {
        [
            TConorm::Maximum,
            TConorm::ProbabilisticSum,
            TConorm::Lukasiewicz,
            TConorm::Drastic,
        ]
    }

    pub fn name(&self) -> String {
        match self {
            TConorm::Maximum => "max".into(),
            TConorm::ProbabilisticSum => "probsum".into(),
            TConorm::Lukasiewicz => "lukasiewicz".into(),
            TConorm::Drastic => "drastic".into(),
            TConorm::Generated(g) => format!("gen({})", g.name()),
        }
    }

    pub fn is_continuous(&self) -> bool {
        !matches!(self, TConorm::Drastic)
    }

    pub fn generator(&self) -> Option<&ExtendedMonotoneFunction> {
        match self {
            TConorm::Generated(g) => Some(g),
            _ => None,
        }
    }

    pub fn try_eval(&self, x: f64, y: f64) -> Result<f64, NumericsError> {
        Ok(match self {
            TConorm::Maximum => x.max(y),
            TConorm::ProbabilisticSum => x + y - x * y,
            TConorm::Lukasiewicz => (x + y).min(1.0),
            TConorm::Drastic => {
                if x > 0.0 && y > 0.0 {
                    1.0
                } else {
                    x.max(y)
                }
            }
            TConorm::Generated(g) => {
                let s = g.eval(x)?.checked_add(g.eval(y)?)?;
                g.pseudo_inverse(s)?
            }
        })
    }
}

impl BinaryOp for TConorm {
    fn apply(&self, x: f64, y: f64) -> f64 {
        self.try_eval(x, y).unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for TConorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TConorm({})", self.name())
    }
}

/// Either kind of connective, for the diagnostics below.
pub trait Connective: BinaryOp {
    fn is_continuous(&self) -> bool;
    fn label(&self) -> String;
}

impl Connective for TNorm {
    fn is_continuous(&self) -> bool {
        TNorm::is_continuous(self)
    }
    fn label(&self) -> String {
        self.name()
    }
}

impl Connective for TConorm {
    fn is_continuous(&self) -> bool {
        TConorm::is_continuous(self)
    }
    fn label(&self) -> String {
        self.name()
    }
}

/// Grid points with `op(x, x) = x` within `eps_eq`.
pub fn idempotents(op: &dyn BinaryOp, grid: &[f64], pol: &TolerancePolicy) -> Vec<f64> {
    grid.iter().copied().filter(|&x| pol.eq(op.apply(x, x), x)).collect()
}

/// True iff the only grid idempotents are 0 and 1.
pub fn is_archimedean_on_grid<C: Connective>(
    op: &C,
    grid: &[f64],
    pol: &TolerancePolicy,
) -> Result<bool, ConnectiveError> {
    if !op.is_continuous() {
        return Err(ConnectiveError::NotContinuous(op.label()));
    }
    let ide = idempotents(op, grid, pol);
    Ok(ide.len() == 2 && ide[0] == 0.0 && ide[1] == 1.0)
}

/// The Lukasiewicz t-norm as built from its additive generator `1 - x`.
pub fn lukasiewicz_tnorm_generator(pol: &TolerancePolicy) -> ExtendedMonotoneFunction {
    ExtendedMonotoneFunction::new("1-x", Monotonicity::Decreasing, |x| 1.0 - x, *pol)
        .expect("1 - x is finite on [0, 1]")
        .with_inverse(|y| 1.0 - y)
}

/// The Lukasiewicz t-conorm generator `x`.
pub fn lukasiewicz_tconorm_generator(pol: &TolerancePolicy) -> ExtendedMonotoneFunction {
    ExtendedMonotoneFunction::new("x", Monotonicity::Increasing, |x| x, *pol)
        .expect("identity is finite on [0, 1]")
        .with_inverse(|y| y)
}

/// The product t-norm generator `-ln x`.
pub fn product_tnorm_generator(pol: &TolerancePolicy) -> ExtendedMonotoneFunction {
    ExtendedMonotoneFunction::new("-ln(x)", Monotonicity::Decreasing, |x| -x.ln(), *pol)
        .expect("-ln x is defined on [0, 1]")
        .with_inverse(|y| (-y).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert!((TNorm::Lukasiewicz.apply(0.7, 0.6) - 0.3).abs() < 1e-12);
        assert_eq!(TNorm::Drastic.apply(0.3, 0.9), 0.0);
        assert_eq!(TNorm::Drastic.apply(1.0, 0.9), 0.9);
        assert_eq!(TConorm::ProbabilisticSum.apply(0.5, 0.5), 0.75);
        assert_eq!(TConorm::Drastic.apply(0.3, 0.9), 1.0);
        assert_eq!(TConorm::Drastic.apply(0.0, 0.9), 0.9);
    }

    #[test]
    fn neutral_elements_are_exact() {
        for x in uniform_grid(101).unwrap() {
            for t in TNorm::builtins() {
                assert_eq!(t.apply(x, 1.0), x, "{}", t.name());
                assert_eq!(t.apply(1.0, x), x, "{}", t.name());
            }
            for s in TConorm::builtins() {
                assert_eq!(s.apply(x, 0.0), x, "{}", s.name());
                assert_eq!(s.apply(0.0, x), x, "{}", s.name());
            }
        }
    }

    #[test]
    fn idempotent_sets() {
        let pol = TolerancePolicy::default();
        let g5 = uniform_grid(5).unwrap();
        assert_eq!(idempotents(&TNorm::Minimum, &g5, &pol), g5);
        assert_eq!(idempotents(&TNorm::Lukasiewicz, &g5, &pol), vec![0.0, 1.0]);
        let g101 = uniform_grid(101).unwrap();
        assert_eq!(idempotents(&TNorm::Product, &g101, &pol), vec![0.0, 1.0]);
    }

    #[test]
    fn archimedean() {
        let pol = TolerancePolicy::default();
        let g = uniform_grid(101).unwrap();
        assert!(is_archimedean_on_grid(&TNorm::Lukasiewicz, &g, &pol).unwrap());
        assert!(is_archimedean_on_grid(&TNorm::Product, &g, &pol).unwrap());
        assert!(!is_archimedean_on_grid(&TNorm::Minimum, &g, &pol).unwrap());
        assert!(matches!(
            is_archimedean_on_grid(&TNorm::Drastic, &g, &pol),
            Err(ConnectiveError::NotContinuous(_))
        ));
    }

    #[test]
    fn generator_validation() {
        let pol = TolerancePolicy::default();
        let bad = ExtendedMonotoneFunction::new("2-x", Monotonicity::Decreasing, |x| 2.0 - x, pol).unwrap();
        match TNorm::from_generator(bad, &pol) {
            Err(ConnectiveError::GeneratorConstraint { constraint, .. }) => assert_eq!(constraint, "f(1) = 0"),
            _ => panic!("expected a constraint violation"),
        }
        let wrong_dir = lukasiewicz_tconorm_generator(&pol);
        assert!(TNorm::from_generator(wrong_dir, &pol).is_err());
        let flat = ExtendedMonotoneFunction::new("flat", Monotonicity::Increasing, |x| (x - 0.5).max(0.0), pol).unwrap();
        assert!(TConorm::from_generator(flat, &pol).is_err());
    }

    #[test]
    fn product_from_generator() {
        let pol = TolerancePolicy::default();
        let t = TNorm::from_generator(product_tnorm_generator(&pol), &pol).unwrap();
        for x in uniform_grid(21).unwrap() {
            for y in uniform_grid(21).unwrap() {
                assert!((t.apply(x, y) - x * y).abs() < 1e-12);
            }
        }
    }
}
