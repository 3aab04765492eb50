//! Binary operations, n-ary aggregations, and the exhaustive law checks shared
//! by t-norms, uninorms, nullnorms and raw user operators.

use std::fmt;
use std::sync::Arc;

use crate::connectives::{TConorm, TNorm};
use crate::numerics::TolerancePolicy;
use crate::nullnorms::Nullnorm;
use crate::par::{first_tuple_match, TupleSpace};
use crate::report::{ConditionResult, Witness};
use crate::uninorms::Uninorm;

/// A binary operation on `[0, 1]`. Internal failures surface as NaN, which
/// every checker treats as a violation.
pub trait BinaryOp: Send + Sync {
    fn apply(&self, x: f64, y: f64) -> f64;

    /// Left fold `(((x1 * x2) * x3) ...)`. NaN for an empty slice.
    fn fold(&self, xs: &[f64]) -> f64 {
        match xs.split_first() {
            None => f64::NAN,
            Some((first, rest)) => rest.iter().fold(*first, |acc, &x| self.apply(acc, x)),
        }
    }
}

impl<T: BinaryOp + ?Sized> BinaryOp for &T {
    fn apply(&self, x: f64, y: f64) -> f64 {
        (**self).apply(x, y)
    }
}

impl<T: BinaryOp + ?Sized> BinaryOp for Arc<T> {
    fn apply(&self, x: f64, y: f64) -> f64 {
        (**self).apply(x, y)
    }
}

/// An aggregation with a fixed declared arity.
pub trait Aggregation: Send + Sync {
    fn arity(&self) -> usize;
    fn aggregate(&self, xs: &[f64]) -> f64;
    fn name(&self) -> String;
}

/// A binary operation applied left-iteratively at a fixed arity.
#[derive(Clone)]
pub struct Iterated<O> {
    op: O,
    arity: usize,
    name: String,
}

impl<O: BinaryOp> Iterated<O> {
    pub fn new(op: O, arity: usize, name: impl Into<String>) -> Self {
        Iterated {
            op,
            arity,
            name: name.into(),
        }
    }

    pub fn inner(&self) -> &O {
        &self.op
    }
}

impl Iterated<TNorm> {
    /// `A_min` at the given arity.
    pub fn min(arity: usize) -> Self {
        Iterated::new(TNorm::Minimum, arity, format!("min/{arity}"))
    }
}

impl<O: BinaryOp> Aggregation for Iterated<O> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn aggregate(&self, xs: &[f64]) -> f64 {
        self.op.fold(xs)
    }

    fn name(&self) -> String {
        self.name.clone()
    }
}

/// The arithmetic mean: an aggregation that is not an iterated associative
/// operation, so its 4-ary form must be supplied explicitly.
#[derive(Debug, Clone, Copy)]
pub struct ArithmeticMean {
    pub arity: usize,
}

impl Aggregation for ArithmeticMean {
    fn arity(&self) -> usize {
        self.arity
    }

    fn aggregate(&self, xs: &[f64]) -> f64 {
        xs.iter().sum::<f64>() / xs.len() as f64
    }

    fn name(&self) -> String {
        format!("mean/{}", self.arity)
    }
}

impl BinaryOp for ArithmeticMean {
    fn apply(&self, x: f64, y: f64) -> f64 {
        0.5 * (x + y)
    }
}

/// A user-supplied binary operation.
#[derive(Clone)]
pub struct CustomOp {
    name: String,
    f: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
}

impl CustomOp {
    pub fn new<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        CustomOp {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl BinaryOp for CustomOp {
    fn apply(&self, x: f64, y: f64) -> f64 {
        (self.f)(x, y)
    }
}

impl fmt::Debug for CustomOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CustomOp({})", self.name)
    }
}

/// Any operator the crate knows how to evaluate.
#[derive(Clone)]
pub enum Operator {
    TNorm(TNorm),
    TConorm(TConorm),
    Uninorm(Uninorm),
    Nullnorm(Nullnorm),
    Custom(CustomOp),
}

impl Operator {
    pub fn name(&self) -> String {
        match self {
            Operator::TNorm(t) => t.name(),
            Operator::TConorm(s) => s.name(),
            Operator::Uninorm(u) => u.name(),
            Operator::Nullnorm(f) => f.name(),
            Operator::Custom(c) => c.name.clone(),
        }
    }

    /// The neutral element, if the operator has one by construction.
    pub fn neutral(&self) -> Option<f64> {
        match self {
            Operator::TNorm(_) => Some(1.0),
            Operator::TConorm(_) => Some(0.0),
            Operator::Uninorm(u) => Some(u.identity()),
            Operator::Nullnorm(_) | Operator::Custom(_) => None,
        }
    }
}

impl BinaryOp for Operator {
    fn apply(&self, x: f64, y: f64) -> f64 {
        match self {
            Operator::TNorm(t) => t.apply(x, y),
            Operator::TConorm(s) => s.apply(x, y),
            Operator::Uninorm(u) => u.apply(x, y),
            Operator::Nullnorm(f) => f.apply(x, y),
            Operator::Custom(c) => c.apply(x, y),
        }
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({})", self.name())
    }
}

impl From<TNorm> for Operator {
    fn from(t: TNorm) -> Self {
        Operator::TNorm(t)
    }
}

impl From<TConorm> for Operator {
    fn from(s: TConorm) -> Self {
        Operator::TConorm(s)
    }
}

impl From<Uninorm> for Operator {
    fn from(u: Uninorm) -> Self {
        Operator::Uninorm(u)
    }
}

impl From<Nullnorm> for Operator {
    fn from(f: Nullnorm) -> Self {
        Operator::Nullnorm(f)
    }
}

fn two(space: &[usize], grid: &[f64]) -> (f64, f64) {
    (grid[space[0]], grid[space[1]])
}

/// `op(x, y) = op(y, x)` within `eps_eq` on all grid pairs.
pub fn check_commutative(op: &dyn BinaryOp, grid: &[f64], pol: &TolerancePolicy, name: &str) -> ConditionResult {
    let space = TupleSpace::new(grid.len(), 2);
    let w = first_tuple_match(space, |t| {
        let (x, y) = two(t, grid);
        let (a, b) = (op.apply(x, y), op.apply(y, x));
        (!pol.eq(a, b)).then(|| Witness::new(vec![x, y], Some((a, b)), "op(x,y) != op(y,x)"))
    });
    ConditionResult::from_search(name, space.len(), w)
}

/// `op(op(x, y), z) = op(x, op(y, z))` within `eps_eq` on all grid triples.
pub fn check_associative(op: &dyn BinaryOp, grid: &[f64], pol: &TolerancePolicy, name: &str) -> ConditionResult {
    let space = TupleSpace::new(grid.len(), 3);
    let w = first_tuple_match(space, |t| {
        let (x, y, z) = (grid[t[0]], grid[t[1]], grid[t[2]]);
        let a = op.apply(op.apply(x, y), z);
        let b = op.apply(x, op.apply(y, z));
        (!pol.eq(a, b)).then(|| Witness::new(vec![x, y, z], Some((a, b)), "(xy)z != x(yz)"))
    });
    ConditionResult::from_search(name, space.len(), w)
}

/// Non-decreasing in each argument, checked between consecutive grid points.
/// Witness `(x, y1, y2)` means `op(x, y1) > op(x, y2)` with `y1 < y2`; a fourth
/// coordinate of 1 marks a failure in the first slot, `op(y1, x) > op(y2, x)`.
pub fn check_monotone(op: &dyn BinaryOp, grid: &[f64], pol: &TolerancePolicy, name: &str) -> ConditionResult {
    let n = grid.len();
    if n < 2 {
        return ConditionResult::pass(name, 0);
    }
    let space = TupleSpace::new(n, 2);
    let w = first_tuple_match(space, |t| {
        if t[1] + 1 >= n {
            return None;
        }
        let x = grid[t[0]];
        let (y1, y2) = (grid[t[1]], grid[t[1] + 1]);
        let (a, b) = (op.apply(x, y1), op.apply(x, y2));
        if !pol.leq(a, b) || a.is_nan() || b.is_nan() {
            return Some(Witness::new(vec![x, y1, y2], Some((a, b)), "second slot decreases"));
        }
        let (c, d) = (op.apply(y1, x), op.apply(y2, x));
        if !pol.leq(c, d) || c.is_nan() || d.is_nan() {
            return Some(Witness::new(vec![x, y1, y2, 1.0], Some((c, d)), "first slot decreases"));
        }
        None
    });
    ConditionResult::from_search(name, space.len(), w)
}

/// `op(x, e) = x` and `op(e, x) = x` within `eps_eq` for all grid x.
pub fn check_identity(op: &dyn BinaryOp, e: f64, grid: &[f64], pol: &TolerancePolicy, name: &str) -> ConditionResult {
    let w = grid.iter().find_map(|&x| {
        let a = op.apply(x, e);
        if !pol.eq(a, x) {
            return Some(Witness::new(vec![x, e], Some((a, x)), "op(x,e) != x"));
        }
        let b = op.apply(e, x);
        (!pol.eq(b, x)).then(|| Witness::new(vec![e, x], Some((b, x)), "op(e,x) != x"))
    });
    ConditionResult::from_search(name, grid.len() as u64, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::uniform_grid;

    #[test]
    fn projection_is_not_commutative() {
        let p = CustomOp::new("proj", |x, _| x);
        let g = uniform_grid(2).unwrap();
        let r = check_commutative(&p, &g, &TolerancePolicy::default(), "U1");
        assert!(!r.passed);
        assert_eq!(r.witness.unwrap().point, vec![0.0, 1.0]);
    }

    #[test]
    fn min_passes_laws() {
        let g = uniform_grid(11).unwrap();
        let pol = TolerancePolicy::default();
        let t = TNorm::Minimum;
        assert!(check_commutative(&t, &g, &pol, "c").passed);
        assert!(check_associative(&t, &g, &pol, "a").passed);
        assert!(check_monotone(&t, &g, &pol, "m").passed);
        assert!(check_identity(&t, 1.0, &g, &pol, "i").passed);
    }

    #[test]
    fn mean_is_not_associative() {
        let g = uniform_grid(3).unwrap();
        let r = check_associative(&ArithmeticMean { arity: 2 }, &g, &TolerancePolicy::default(), "a");
        assert!(!r.passed);
        assert_eq!(r.witness.unwrap().point, vec![0.0, 0.0, 0.5]);
    }

    #[test]
    fn iterated_fold() {
        let a = Iterated::min(4);
        assert_eq!(a.arity(), 4);
        assert_eq!(a.aggregate(&[0.3, 0.9, 0.2, 0.5]), 0.2);
        assert!(TNorm::Product.fold(&[]).is_nan());
    }
}
