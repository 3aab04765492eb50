//! Nullnorms `<S, k, T>`: a t-conorm rescaled below the absorbing element `k`,
//! a t-norm rescaled above it, and `k` everywhere else.

use std::fmt;

use thiserror::Error;

use crate::connectives::{TConorm, TNorm};
use crate::numerics::TolerancePolicy;
use crate::operator::{check_associative, check_commutative, check_monotone, BinaryOp};
use crate::report::{CheckReport, ConditionResult, Witness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NullnormError {
    #[error("absorbing element k = {0} is outside the unit interval")]
    OutOfUnitInterval(f64),
}

#[derive(Clone)]
pub struct Nullnorm {
    s: TConorm,
    k: f64,
    t: TNorm,
}

impl Nullnorm {
    pub fn new(s: TConorm, k: f64, t: TNorm) -> Result<Self, NullnormError> {
        if !(0.0..=1.0).contains(&k) {
            return Err(NullnormError::OutOfUnitInterval(k));
        }
        Ok(Nullnorm { s, k, t })
    }

    pub fn absorbing(&self) -> f64 {
        self.k
    }

    pub fn tconorm(&self) -> &TConorm {
        &self.s
    }

    pub fn tnorm(&self) -> &TNorm {
        &self.t
    }

    pub fn name(&self) -> String {
        format!("<{}, {}, {}>", self.s.name(), self.k, self.t.name())
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let k = self.k;
        if k == 0.0 {
            return self.t.apply(x, y);
        }
        if k == 1.0 {
            return self.s.apply(x, y);
        }
        if x <= k && y <= k {
            k * self.s.apply(x / k, y / k)
        } else if x > k && y > k {
            let w = 1.0 - k;
            k + w * self.t.apply((x - k) / w, (y - k) / w)
        } else {
            k
        }
    }
}

impl BinaryOp for Nullnorm {
    fn apply(&self, x: f64, y: f64) -> f64 {
        self.eval(x, y)
    }
}

impl fmt::Debug for Nullnorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nullnorm({})", self.name())
    }
}

/// Commutativity, associativity, monotonicity, absorption at `k`, and the two
/// boundary identities `F(0, x) = x` for `x <= k`, `F(1, x) = x` for `x >= k`.
pub fn check_nullnorm_axioms(op: &dyn BinaryOp, k: f64, grid: &[f64], pol: &TolerancePolicy) -> CheckReport {
    let mut report = CheckReport::new(format!("nullnorm axioms (k = {k})"));
    report.push(check_commutative(op, grid, pol, "F1 commutativity"));
    report.push(check_associative(op, grid, pol, "F2 associativity"));
    report.push(check_monotone(op, grid, pol, "F3 monotonicity"));

    let absorb = grid.iter().find_map(|&x| {
        let v = op.apply(k, x);
        (!pol.eq(v, k)).then(|| Witness::new(vec![k, x], Some((v, k)), "F(k,x) != k"))
    });
    report.push(ConditionResult::from_search("F4 absorbing", grid.len() as u64, absorb));

    let lower = grid.iter().filter(|&&x| x <= k).find_map(|&x| {
        let v = op.apply(0.0, x);
        (!pol.eq(v, x)).then(|| Witness::new(vec![0.0, x], Some((v, x)), "F(0,x) != x"))
    });
    report.push(ConditionResult::from_search("F4-i lower identity", grid.len() as u64, lower));

    let upper = grid.iter().filter(|&&x| x >= k).find_map(|&x| {
        let v = op.apply(1.0, x);
        (!pol.eq(v, x)).then(|| Witness::new(vec![1.0, x], Some((v, x)), "F(1,x) != x"))
    });
    report.push(ConditionResult::from_search("F4-ii upper identity", grid.len() as u64, upper));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::uniform_grid;
    use crate::operator::CustomOp;

    #[test]
    fn block_values() {
        let f = Nullnorm::new(TConorm::Lukasiewicz, 0.5, TNorm::Lukasiewicz).unwrap();
        assert_eq!(f.eval(0.25, 0.25), 0.5);
        assert_eq!(f.eval(0.75, 0.75), 0.5);
        assert_eq!(f.eval(0.5, 0.9), 0.5);
        assert_eq!(f.eval(0.0, 1.0), 0.5);
    }

    #[test]
    fn degenerate_k() {
        let f0 = Nullnorm::new(TConorm::Maximum, 0.0, TNorm::Product).unwrap();
        assert_eq!(f0.eval(0.5, 0.5), 0.25);
        let f1 = Nullnorm::new(TConorm::Maximum, 1.0, TNorm::Product).unwrap();
        assert_eq!(f1.eval(0.5, 0.25), 0.5);
        assert!(Nullnorm::new(TConorm::Maximum, 1.5, TNorm::Product).is_err());
    }

    #[test]
    fn axioms_on_grid() {
        let pol = TolerancePolicy::default();
        let g = uniform_grid(21).unwrap();
        let f = Nullnorm::new(TConorm::Lukasiewicz, 0.5, TNorm::Lukasiewicz).unwrap();
        assert!(check_nullnorm_axioms(&f, 0.5, &g, &pol).passed());
        let m = Nullnorm::new(TConorm::Maximum, 0.25, TNorm::Minimum).unwrap();
        assert!(check_nullnorm_axioms(&m, 0.25, &g, &pol).passed());
    }

    #[test]
    fn constant_map_fails_boundary_identity() {
        let c = CustomOp::new("const", |_, _| 0.5);
        let r = check_nullnorm_axioms(&c, 0.5, &uniform_grid(21).unwrap(), &TolerancePolicy::default());
        let lower = r.condition("F4-i lower identity").unwrap();
        assert!(!lower.passed);
        assert_eq!(lower.witness.as_ref().unwrap().point, vec![0.0, 0.0]);
    }
}
