//! Fuzzy subsets of monoids and the submonoid conditions built on an
//! aggregation: `A(sigma(x1), .., sigma(xn)) <= sigma(x1 * .. * xn)` together
//! with `sigma(e) = 1`, reported as two separate conditions.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{BoundedLattice, Carrier, Monoid, Product};
use crate::connectives::{ConnectiveError, TConorm, TNorm};
use crate::numerics::{ExtendedMonotoneFunction, ExtendedReal, NumericsError, RealFn, TolerancePolicy};
use crate::nullnorms::Nullnorm;
use crate::operator::{Aggregation, BinaryOp, Iterated};
use crate::par::{first_tuple_match, TupleSpace};
use crate::report::{fmt_num, CheckReport, ConditionResult, Witness};
use crate::uninorms::Uninorm;

/// Default cap on the number of tuples an exhaustive check may enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("membership value {value} at x = {x} is outside [0, 1]")]
    OutOfRange { x: f64, value: f64 },
    #[error("membership table has {got} entries, carrier has {want}")]
    TableLength { got: usize, want: usize },
    #[error("aggregation arity must be at least 2, got {0}")]
    InvalidArity(usize),
    #[error("exhaustive check needs {needed} tuples, budget is {budget}; use sampled mode")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("tabulated fuzzy subset needs a closed monoid on the same carrier")]
    CarrierMismatch,
    #[error("uninorm is not representable")]
    NotRepresentable,
    #[error("lattice value index {0} is out of range")]
    NotALatticeElement(usize),
    #[error(transparent)]
    Connective(#[from] ConnectiveError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// How `sigma` is composed from generators `h`, `f`, `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseConvention {
    /// `sigma = h^{-1} . f . t`
    GeneratorInverse,
    /// `sigma = (-h)^{[-1]} . f . t`
    NegatedPseudoInverse,
}

#[derive(Clone)]
enum Membership {
    Function(RealFn),
    Table(Vec<f64>),
}

/// A fuzzy subset of a carrier.
#[derive(Clone)]
pub struct FuzzySubset {
    name: String,
    carrier: Carrier,
    membership: Membership,
    convention: Option<InverseConvention>,
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FuzzySubset({}, |X| = {})", self.name, self.carrier.len())
    }
}

impl FuzzySubset {
    pub fn from_fn<F>(name: impl Into<String>, carrier: Carrier, f: F, pol: &TolerancePolicy) -> Result<Self, FuzzyError>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::from_arc(name, carrier, Arc::new(f), pol)
    }

    /// Membership given by a function; values at carrier points must lie in
    /// `[0, 1]` within `eps_eq` and are clamped on evaluation.
    pub fn from_arc(name: impl Into<String>, carrier: Carrier, f: RealFn, pol: &TolerancePolicy) -> Result<Self, FuzzyError> {
        for x in carrier.values() {
            let v = f(x);
            if v.is_nan() || v < -pol.eps_eq || v > 1.0 + pol.eps_eq {
                return Err(FuzzyError::OutOfRange { x, value: v });
            }
        }
        Ok(FuzzySubset {
            name: name.into(),
            carrier,
            membership: Membership::Function(f),
            convention: None,
        })
    }

    pub fn from_table(name: impl Into<String>, carrier: Carrier, values: Vec<f64>, pol: &TolerancePolicy) -> Result<Self, FuzzyError> {
        if values.len() != carrier.len() {
            return Err(FuzzyError::TableLength { got: values.len(), want: carrier.len() });
        }
        let mut clamped = Vec::with_capacity(values.len());
        for (i, &v) in values.iter().enumerate() {
            if v.is_nan() || v < -pol.eps_eq || v > 1.0 + pol.eps_eq {
                return Err(FuzzyError::OutOfRange { x: carrier.value(i), value: v });
            }
            clamped.push(v.clamp(0.0, 1.0));
        }
        Ok(FuzzySubset {
            name: name.into(),
            carrier,
            membership: Membership::Table(clamped),
            convention: None,
        })
    }

    pub fn constant(carrier: Carrier, c: f64) -> Self {
        let c = c.clamp(0.0, 1.0);
        FuzzySubset {
            name: format!("const {}", fmt_num(c)),
            carrier,
            membership: Membership::Function(Arc::new(move |_| c)),
            convention: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_convention(mut self, convention: InverseConvention) -> Self {
        self.convention = Some(convention);
        self
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn convention(&self) -> Option<InverseConvention> {
        self.convention
    }

    pub fn is_tabulated(&self) -> bool {
        matches!(self.membership, Membership::Table(_))
    }

    pub fn at_index(&self, i: usize) -> f64 {
        match &self.membership {
            Membership::Table(t) => t[i],
            Membership::Function(f) => f(self.carrier.value(i)).clamp(0.0, 1.0),
        }
    }

    /// Membership at an arbitrary point; tables answer only at carrier values
    /// (NaN elsewhere).
    pub fn at_value(&self, x: f64) -> f64 {
        match &self.membership {
            Membership::Function(f) => f(x).clamp(0.0, 1.0),
            Membership::Table(t) => self
                .carrier
                .index_of_value(x, &TolerancePolicy::default())
                .map_or(f64::NAN, |i| t[i]),
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.carrier.len()).map(|i| self.at_index(i)).collect()
    }

    fn at_product(&self, p: Product, cached: &[f64]) -> f64 {
        match p.index {
            Some(k) => cached[k],
            None => self.at_value(p.value),
        }
    }
}

fn compatible(m: &Monoid, sigma: &FuzzySubset) -> Result<(), FuzzyError> {
    if sigma.is_tabulated() && (!m.is_closed() || sigma.carrier().len() != m.len()) {
        return Err(FuzzyError::CarrierMismatch);
    }
    Ok(())
}

/// Membership of each monoid carrier element.
fn cached_membership(m: &Monoid, sigma: &FuzzySubset) -> Vec<f64> {
    if sigma.is_tabulated() {
        sigma.values()
    } else {
        m.carrier().values().into_iter().map(|x| sigma.at_value(x)).collect()
    }
}

/// Aggregation condition over all carrier n-tuples plus `sigma(e) = 1`.
pub fn check_a_fuzzy_submonoid(
    a: &dyn Aggregation,
    m: &Monoid,
    sigma: &FuzzySubset,
    pol: &TolerancePolicy,
    budget: u64,
) -> Result<CheckReport, FuzzyError> {
    let n = a.arity();
    if n < 2 {
        return Err(FuzzyError::InvalidArity(n));
    }
    compatible(m, sigma)?;
    let space = TupleSpace::new(m.len(), n);
    let needed = space.checked_len().unwrap_or(u64::MAX);
    if needed > budget {
        return Err(FuzzyError::BudgetExceeded { needed, budget });
    }
    let sig = cached_membership(m, sigma);
    let carrier = m.carrier();
    let w = first_tuple_match(space, |t| {
        let mut args = [0.0; crate::par::MAX_ARITY];
        for (slot, &i) in args.iter_mut().zip(t) {
            *slot = sig[i];
        }
        let lhs = a.aggregate(&args[..n]);
        let rhs = sigma.at_product(m.fold(t), &sig);
        let bad = lhs.is_nan() || rhs.is_nan() || !pol.leq(lhs, rhs);
        bad.then(|| Witness::new(t.iter().map(|&i| carrier.value(i)).collect(), Some((lhs, rhs)), ""))
    });
    let mut report = CheckReport::new(format!("{}-fuzzy submonoid {} of {}", a.name(), sigma.name(), m.name()));
    report.push(ConditionResult::from_search("inequality", needed, w));
    report.push(identity_condition(m, &sig, pol));
    Ok(report)
}

fn identity_condition(m: &Monoid, sig: &[f64], pol: &TolerancePolicy) -> ConditionResult {
    let e = m.identity_index();
    let v = sig[e];
    let w = (!pol.eq(v, 1.0)).then(|| {
        Witness::new(
            vec![m.identity_value()],
            Some((v, 1.0)),
            format!("sigma({})={}", fmt_num(m.identity_value()), fmt_num(v)),
        )
    });
    ConditionResult::from_search("identity-condition", 1, w)
}

/// The binary instance used for uninorms, nullnorms and any other operation.
pub fn check_binary_fuzzy_submonoid(
    op: &dyn BinaryOp,
    name: &str,
    m: &Monoid,
    sigma: &FuzzySubset,
    pol: &TolerancePolicy,
) -> Result<CheckReport, FuzzyError> {
    let agg = Iterated::new(op, 2, name);
    check_a_fuzzy_submonoid(&agg, m, sigma, pol, DEFAULT_BUDGET)
}

pub fn check_u_fuzzy_submonoid(u: &Uninorm, m: &Monoid, sigma: &FuzzySubset, pol: &TolerancePolicy) -> Result<CheckReport, FuzzyError> {
    check_binary_fuzzy_submonoid(u, &u.name(), m, sigma, pol)
}

/// As the binary check, with an observation recording whether `min sigma >= k`.
pub fn check_f_fuzzy_submonoid(f: &Nullnorm, m: &Monoid, sigma: &FuzzySubset, pol: &TolerancePolicy) -> Result<CheckReport, FuzzyError> {
    let mut report = check_binary_fuzzy_submonoid(f, &f.name(), m, sigma, pol)?;
    let min = cached_membership(m, sigma).into_iter().fold(f64::INFINITY, f64::min);
    let k = f.absorbing();
    report.observe(
        "min-sigma-bound",
        min >= k - pol.eps_leq,
        format!("min sigma = {}, k = {}", fmt_num(min), fmt_num(k)),
    );
    Ok(report)
}

/// Carrier values with `sigma = 1` within `eps_eq`.
pub fn core_of(sigma: &FuzzySubset, pol: &TolerancePolicy) -> Vec<f64> {
    let c = sigma.carrier();
    (0..c.len())
        .filter(|&i| pol.eq(sigma.at_index(i), 1.0))
        .map(|i| c.value(i))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Decreasing,
    Increasing,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneOnB {
    pub holds: bool,
    pub monotone: bool,
    pub endpoint: bool,
    /// Carrier values with `sigma >= e`.
    pub b: Vec<f64>,
    /// `(x, y)` with `x < y` in `B` breaking the monotonicity.
    pub witness: Option<(f64, f64)>,
}

/// Monotonicity of `sigma` on `B = {x : sigma(x) >= e}` plus `sigma(1) = 1`
/// (decreasing) or `sigma(0) = 1` (increasing). The carrier must be sorted.
pub fn monotone_on_b(sigma: &FuzzySubset, e: f64, direction: Direction, pol: &TolerancePolicy) -> MonotoneOnB {
    let c = sigma.carrier();
    let vals = sigma.values();
    let b_idx: Vec<usize> = (0..c.len()).filter(|&i| pol.leq(e, vals[i])).collect();
    let mut witness = None;
    'outer: for (p, &i) in b_idx.iter().enumerate() {
        for &j in &b_idx[p + 1..] {
            let ok = match direction {
                Direction::Decreasing => pol.leq(vals[j], vals[i]),
                Direction::Increasing => pol.leq(vals[i], vals[j]),
            };
            if !ok {
                witness = Some((c.value(i), c.value(j)));
                break 'outer;
            }
        }
    }
    let end = match direction {
        Direction::Decreasing => vals[c.len() - 1],
        Direction::Increasing => vals[0],
    };
    let endpoint = pol.eq(end, 1.0);
    MonotoneOnB {
        holds: witness.is_none() && endpoint,
        monotone: witness.is_none(),
        endpoint,
        b: b_idx.iter().map(|&i| c.value(i)).collect(),
        witness,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubadditiveWitness {
    pub a: ExtendedReal,
    pub b: ExtendedReal,
    pub lhs: ExtendedReal,
    pub rhs: ExtendedReal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubadditivityReport {
    pub holds: bool,
    pub witness: Option<SubadditiveWitness>,
    pub checked: u64,
    pub skipped: u64,
    pub violations: u64,
}

/// `f(a + b) <= f(a) + f(b)` over all ordered sample pairs. Pairs whose sums
/// are undefined are skipped and counted.
pub fn subadditive_on<F>(f: F, samples: &[ExtendedReal], pol: &TolerancePolicy) -> Result<SubadditivityReport, NumericsError>
where
    F: Fn(ExtendedReal) -> Result<ExtendedReal, NumericsError>,
{
    let fv = samples.iter().map(|&s| f(s)).collect::<Result<Vec<_>, _>>()?;
    let mut report = SubadditivityReport { holds: true, witness: None, checked: 0, skipped: 0, violations: 0 };
    for (i, &a) in samples.iter().enumerate() {
        for (j, &b) in samples.iter().enumerate() {
            let (Ok(s), Ok(rhs)) = (a.checked_add(b), fv[i].checked_add(fv[j])) else {
                report.skipped += 1;
                continue;
            };
            let lhs = f(s)?;
            report.checked += 1;
            if !pol.leq_ext(lhs, rhs) {
                report.violations += 1;
                if report.witness.is_none() {
                    report.witness = Some(SubadditiveWitness { a, b, lhs, rhs });
                }
            }
        }
    }
    report.holds = report.violations == 0;
    Ok(report)
}

/// Convenience form for finite real maps.
pub fn subadditive_on_reals<F>(f: F, samples: &[f64], pol: &TolerancePolicy) -> SubadditivityReport
where
    F: Fn(f64) -> f64,
{
    let ext: Vec<ExtendedReal> = samples.iter().map(|&s| ExtendedReal::from(s)).collect();
    subadditive_on(|x| Ok(ExtendedReal::from(f(x.to_f64()))), &ext, pol).expect("real maps do not fail")
}

/// The membership map `h^{-1} . f . t` or `(-h)^{[-1]} . f . t`, NaN where a
/// stage fails.
pub fn generator_membership(h: &ExtendedMonotoneFunction, f: RealFn, t: &ExtendedMonotoneFunction, convention: InverseConvention) -> RealFn {
    let inv = match convention {
        InverseConvention::GeneratorInverse => h.clone(),
        InverseConvention::NegatedPseudoInverse => h.negated(),
    };
    let t = t.clone();
    Arc::new(move |x| {
        let tx = match t.eval(x) {
            Ok(v) => v.to_f64(),
            Err(_) => return f64::NAN,
        };
        match ExtendedReal::from_f64(f(tx)) {
            Some(y) => inv.pseudo_inverse(y).unwrap_or(f64::NAN),
            None => f64::NAN,
        }
    })
}

/// [`generator_membership`] as a fuzzy subset of `carrier`.
pub fn sigma_from_generators(
    name: impl Into<String>,
    carrier: Carrier,
    h: &ExtendedMonotoneFunction,
    f: RealFn,
    t: &ExtendedMonotoneFunction,
    convention: InverseConvention,
    pol: &TolerancePolicy,
) -> Result<FuzzySubset, FuzzyError> {
    let map = generator_membership(h, f, t, convention);
    Ok(FuzzySubset::from_arc(name, carrier, map, pol)?.with_convention(convention))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Characterization {
    pub direct: ConditionResult,
    pub subadditive: SubadditivityReport,
    pub f_samples: Vec<(ExtendedReal, ExtendedReal)>,
}

impl Characterization {
    pub fn agree(&self) -> bool {
        self.direct.passed == self.subadditive.holds
    }
}

/// Runs both sides of the subadditivity characterization: the direct
/// inequality `U(sigma x, sigma y) <= sigma(T(x, y))` on grid pairs, and
/// subadditivity of `f = (-h) . sigma . t^{[-1]}` on `t(grid) + {0, t(0)}`.
pub fn characterize_subnorm_via_f(
    u: &Uninorm,
    t_generator: &ExtendedMonotoneFunction,
    sigma: &FuzzySubset,
    grid: &[f64],
    pol: &TolerancePolicy,
) -> Result<Characterization, FuzzyError> {
    let h = u.generator().ok_or(FuzzyError::NotRepresentable)?.clone();
    let t = TNorm::from_generator(t_generator.clone(), pol)?;
    let tg = t.generator().expect("generated t-norm").clone();

    let sig: Vec<f64> = grid.iter().map(|&x| sigma.at_value(x)).collect();
    let space = TupleSpace::new(grid.len(), 2);
    let w = first_tuple_match(space, |p| {
        let (x, y) = (grid[p[0]], grid[p[1]]);
        let lhs = u.apply(sig[p[0]], sig[p[1]]);
        let rhs = sigma.at_value(t.apply(x, y));
        (lhs.is_nan() || rhs.is_nan() || !pol.leq(lhs, rhs)).then(|| Witness::new(vec![x, y], Some((lhs, rhs)), ""))
    });
    let direct = ConditionResult::from_search("inequality", space.len(), w);

    let mut samples = Vec::with_capacity(grid.len() + 2);
    for &x in grid {
        samples.push(tg.eval(x)?);
    }
    samples.push(ExtendedReal::ZERO);
    samples.push(tg.eval(0.0)?);
    samples.sort_by(|a, b| a.total_cmp(b));
    samples.dedup();

    let f = |a: ExtendedReal| -> Result<ExtendedReal, NumericsError> {
        let x = tg.pseudo_inverse(a)?;
        Ok(-h.eval(sigma.at_value(x))?)
    };
    let f_samples = samples.iter().map(|&a| Ok((a, f(a)?))).collect::<Result<Vec<_>, NumericsError>>()?;
    let subadditive = subadditive_on(f, &samples, pol)?;
    Ok(Characterization { direct, subadditive, f_samples })
}

/// A fuzzy subset valued in a bounded lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeFuzzySubset {
    values: Vec<usize>,
}

impl LatticeFuzzySubset {
    pub fn new(lat: &BoundedLattice, values: Vec<usize>) -> Result<Self, FuzzyError> {
        if let Some(&bad) = values.iter().find(|&&v| v >= lat.len()) {
            return Err(FuzzyError::NotALatticeElement(bad));
        }
        Ok(LatticeFuzzySubset { values })
    }

    pub fn at(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeConnective {
    Meet,
    Join,
}

/// `(sigma x) op (sigma y) <= sigma(x * y)` in the lattice order, and `sigma(e) = top`.
pub fn check_lattice_fuzzy_submonoid(
    lat: &BoundedLattice,
    m: &Monoid,
    sigma: &LatticeFuzzySubset,
    connective: LatticeConnective,
) -> Result<CheckReport, FuzzyError> {
    if !m.is_closed() || sigma.len() != m.len() {
        return Err(FuzzyError::CarrierMismatch);
    }
    let c = m.carrier();
    let space = TupleSpace::new(m.len(), 2);
    let w = first_tuple_match(space, |t| {
        let (a, b) = (sigma.at(t[0]), sigma.at(t[1]));
        let lhs = match connective {
            LatticeConnective::Meet => lat.meet(a, b),
            LatticeConnective::Join => lat.join(a, b),
        };
        let rhs = sigma.at(m.product_index(t[0], t[1]).expect("closed monoid"));
        (!lat.leq(lhs, rhs)).then(|| {
            Witness::new(
                vec![c.value(t[0]), c.value(t[1])],
                None,
                format!("{} !<= {}", lat.label(lhs), lat.label(rhs)),
            )
        })
    });
    let mut report = CheckReport::new(format!("{connective:?}-fuzzy submonoid of {}", m.name()));
    report.push(ConditionResult::from_search("inequality", space.len(), w));
    let e = m.identity_index();
    let se = sigma.at(e);
    report.push(ConditionResult::from_search(
        "identity-condition",
        1,
        (se != lat.top()).then(|| Witness::new(vec![c.value(e)], None, format!("sigma(e)={}", lat.label(se)))),
    ));
    Ok(report)
}

/// The two membership functions for which no uninorm works.
#[derive(Debug, Clone)]
pub enum ProbeFamily {
    /// `sigma(x) = x` against `([0,1], T)`.
    IdentitySigma(TNorm),
    /// `sigma(x) = 1 - x` against `([0,1], S)`.
    ComplementSigma(TConorm),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeOutcome {
    pub candidate: String,
    pub fails: bool,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub outcomes: Vec<ProbeOutcome>,
}

impl ProbeReport {
    pub fn all_fail(&self) -> bool {
        self.outcomes.iter().all(|o| o.fails)
    }
}

/// Evaluates each candidate at the pair used in the nonexistence argument:
/// `x = e` and the next grid point above `e`, or `x = 1 - e` and the grid point
/// just below it for the complement family.
pub fn nonexistence_probe(family: &ProbeFamily, candidates: &[Uninorm], grid: &[f64], pol: &TolerancePolicy) -> ProbeReport {
    let outcomes = candidates
        .iter()
        .map(|u| {
            let e = u.identity();
            let (x, y, lhs, rhs) = match family {
                ProbeFamily::IdentitySigma(t) => {
                    let y = grid.iter().copied().find(|&g| g > e).unwrap_or(1.0);
                    (e, y, u.apply(e, y), t.apply(e, y))
                }
                ProbeFamily::ComplementSigma(s) => {
                    let x = 1.0 - e;
                    let y = grid.iter().copied().rev().find(|&g| g < x).unwrap_or(0.0);
                    (x, y, u.apply(1.0 - x, 1.0 - y), 1.0 - s.apply(x, y))
                }
            };
            ProbeOutcome {
                candidate: u.name(),
                fails: !pol.leq(lhs, rhs),
                witness: Witness::new(vec![x, y], Some((lhs, rhs)), ""),
            }
        })
        .collect();
    ProbeReport { outcomes }
}

/// Which probe family (if any) `sigma` belongs to, judged on its carrier.
pub fn probe_family_of(sigma: &FuzzySubset, pol: &TolerancePolicy) -> Option<&'static str> {
    let c = sigma.carrier();
    let vals = sigma.values();
    let xs = c.values();
    if xs.iter().zip(&vals).all(|(&x, &v)| pol.eq(v, x)) {
        Some("identity")
    } else if xs.iter().zip(&vals).all(|(&x, &v)| pol.eq(v, 1.0 - x)) {
        Some("complement")
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monoid;
    use crate::connectives::{TConorm, TNorm};
    use crate::uninorms::{decreasing_structure, log_uninorm, Boundary};

    fn pol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    fn grid_sigma<F: Fn(f64) -> f64 + Send + Sync + 'static>(n: usize, f: F) -> FuzzySubset {
        FuzzySubset::from_fn("s", Carrier::grid(n).unwrap(), f, &pol()).unwrap()
    }

    #[test]
    fn min_examples() {
        let p = pol();
        let tm = Monoid::grid(11, TNorm::Minimum, 1.0, &p).unwrap();
        let sm = Monoid::grid(11, TConorm::Maximum, 0.0, &p).unwrap();
        let a = Iterated::min(2);
        assert!(check_a_fuzzy_submonoid(&a, &tm, &grid_sigma(11, |x| x), &p, DEFAULT_BUDGET).unwrap().passed());
        assert!(check_a_fuzzy_submonoid(&a, &sm, &grid_sigma(11, |x| 1.0 - x), &p, DEFAULT_BUDGET).unwrap().passed());
        let r = check_a_fuzzy_submonoid(&a, &tm, &grid_sigma(11, |x| 1.0 - x), &p, DEFAULT_BUDGET).unwrap();
        let id = r.condition("identity-condition").unwrap();
        assert!(!id.passed);
        assert_eq!(id.witness.as_ref().unwrap().sides, Some((0.0, 1.0)));
    }

    #[test]
    fn budget_and_arity() {
        let p = pol();
        let tm = Monoid::grid(11, TNorm::Minimum, 1.0, &p).unwrap();
        let s = grid_sigma(11, |x| x);
        assert!(matches!(
            check_a_fuzzy_submonoid(&Iterated::min(3), &tm, &s, &p, 100),
            Err(FuzzyError::BudgetExceeded { needed: 1331, budget: 100 })
        ));
        assert!(matches!(check_a_fuzzy_submonoid(&Iterated::min(1), &tm, &s, &p, 100), Err(FuzzyError::InvalidArity(1))));
    }

    #[test]
    fn decreasing_structure_example() {
        let p = pol();
        let u = decreasing_structure(TNorm::Lukasiewicz, 0.5).unwrap();
        let tm = Monoid::grid(21, TNorm::Minimum, 1.0, &p).unwrap();
        let s = grid_sigma(21, |x| if x < 0.5 { x } else { 1.0 });
        assert!(check_u_fuzzy_submonoid(&u, &tm, &s, &p).unwrap().passed());
        assert!(monotone_on_b(&s, 0.5, Direction::Decreasing, &p).holds);
        let id = grid_sigma(21, |x| x);
        let mb = monotone_on_b(&id, 0.5, Direction::Decreasing, &p);
        assert!(!mb.holds);
        assert_eq!(mb.witness, Some((0.5, 0.55)));
        let one = grid_sigma(21, |_| 1.0);
        assert!(monotone_on_b(&one, 0.3, Direction::Decreasing, &p).holds);
        assert!(monotone_on_b(&one, 0.3, Direction::Increasing, &p).holds);
    }

    #[test]
    fn disjunctive_example_fails() {
        let p = pol();
        let u = Uninorm::u_max(TNorm::Lukasiewicz, TConorm::Lukasiewicz, 0.5).unwrap();
        let tm = Monoid::grid(11, TNorm::Minimum, 1.0, &p).unwrap();
        let r = check_u_fuzzy_submonoid(&u, &tm, &grid_sigma(11, |x| x), &p).unwrap();
        let w = r.condition("inequality").unwrap().witness.clone().unwrap();
        assert_eq!(w.point, vec![0.0, 0.6]);
        let ones = check_u_fuzzy_submonoid(&u, &tm, &FuzzySubset::constant(Carrier::grid(11).unwrap(), 1.0), &p).unwrap();
        assert!(ones.passed());
    }

    #[test]
    fn nullnorm_bound() {
        let p = pol();
        let tm = Monoid::grid(11, TNorm::Minimum, 1.0, &p).unwrap();
        let f = Nullnorm::new(TConorm::Lukasiewicz, 0.25, TNorm::Minimum).unwrap();
        let one = FuzzySubset::constant(Carrier::grid(11).unwrap(), 1.0);
        let r = check_f_fuzzy_submonoid(&f, &tm, &one, &p).unwrap();
        assert!(r.passed());
        assert!(r.observation("min-sigma-bound").unwrap().holds);
        let fl = Nullnorm::new(TConorm::Lukasiewicz, 0.5, TNorm::Lukasiewicz).unwrap();
        let r = check_f_fuzzy_submonoid(&fl, &tm, &grid_sigma(11, |x| x), &p).unwrap();
        assert!(!r.passed());
        let w = r.condition("inequality").unwrap().witness.clone().unwrap();
        assert!(w.point.iter().any(|&x| x < 0.5));
    }

    #[test]
    fn cores() {
        let p = pol();
        assert_eq!(core_of(&FuzzySubset::constant(Carrier::grid(5).unwrap(), 1.0), &p).len(), 5);
        assert_eq!(core_of(&grid_sigma(5, |x| x), &p), vec![1.0]);
        assert_eq!(core_of(&grid_sigma(5, |x| if x < 0.5 { x } else { 1.0 }), &p), vec![0.5, 0.75, 1.0]);
    }

    #[test]
    fn subadditivity_examples() {
        let p = pol();
        assert!(subadditive_on_reals(f64::sqrt, &[0.0, 0.5, 1.0, 2.0, 4.0], &p).holds);
        let sq = subadditive_on_reals(|x| x * x, &[1.0, 1.0], &p);
        assert!(!sq.holds);
        let w = sq.witness.unwrap();
        assert_eq!((w.lhs, w.rhs), (ExtendedReal::Finite(4.0), ExtendedReal::Finite(2.0)));
        assert!(subadditive_on_reals(|x| 3.0 * x, &[0.0, 0.25, 1.0, 7.0], &p).holds);
        let r = subadditive_on(Ok, &[ExtendedReal::NegInf, ExtendedReal::PosInf], &p).unwrap();
        assert_eq!(r.skipped, 2);
    }

    #[test]
    fn generator_built_sigma() {
        let p = pol();
        let h = crate::uninorms::log_generator(&p);
        let t = crate::connectives::lukasiewicz_tnorm_generator(&p);
        let s = sigma_from_generators("u", Carrier::grid(201).unwrap(), &h, Arc::new(f64::sqrt), &t, InverseConvention::GeneratorInverse, &p).unwrap();
        assert!((s.at_value(1.0) - 0.5).abs() < 1e-12);
        assert!((s.at_value(0.0) - (1.0 - (-1.0f64).exp() / 2.0)).abs() < 1e-12);
        let r = crate::uninorms::rational_generator(&p);
        let s2 = sigma_from_generators("u2", Carrier::grid(11).unwrap(), &r, Arc::new(f64::sqrt), &t, InverseConvention::GeneratorInverse, &p).unwrap();
        assert!((s2.at_value(1.0) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn characterization_of_constant_one() {
        let p = pol();
        let u = log_uninorm(Boundary::Conjunctive, &p);
        let t = crate::connectives::lukasiewicz_tnorm_generator(&p);
        let g = crate::numerics::uniform_grid(21).unwrap();
        let c = characterize_subnorm_via_f(&u, &t, &FuzzySubset::constant(Carrier::grid(21).unwrap(), 1.0), &g, &p).unwrap();
        assert!(c.direct.passed);
    }

    #[test]
    fn lattice_examples() {
        let lat = BoundedLattice::chain(4);
        let m = Monoid::from_index_fn(Carrier::range(4).unwrap(), 0, "max", |a, b| a.max(b)).unwrap();
        let top = LatticeFuzzySubset::new(&lat, vec![3; 4]).unwrap();
        assert!(check_lattice_fuzzy_submonoid(&lat, &m, &top, LatticeConnective::Meet).unwrap().passed());
        let dec = LatticeFuzzySubset::new(&lat, vec![3, 2, 2, 0]).unwrap();
        assert!(check_lattice_fuzzy_submonoid(&lat, &m, &dec, LatticeConnective::Meet).unwrap().passed());
        let bad = LatticeFuzzySubset::new(&lat, vec![2, 2, 1, 0]).unwrap();
        let r = check_lattice_fuzzy_submonoid(&lat, &m, &bad, LatticeConnective::Meet).unwrap();
        assert!(r.condition("inequality").unwrap().passed);
        assert!(!r.condition("identity-condition").unwrap().passed);
        assert!(LatticeFuzzySubset::new(&lat, vec![4]).is_err());
    }

    #[test]
    fn probes() {
        let p = pol();
        let cands = vec![
            Uninorm::u_min(TNorm::Lukasiewicz, TConorm::Lukasiewicz, 0.5).unwrap(),
            log_uninorm(Boundary::Conjunctive, &p),
            Uninorm::idempotent(|x| 1.0 - x, 0.5, Default::default(), &p).unwrap(),
        ];
        let g = crate::numerics::uniform_grid(21).unwrap();
        let r = nonexistence_probe(&ProbeFamily::IdentitySigma(TNorm::Lukasiewicz), &cands, &g, &p);
        assert!(r.all_fail());
        assert_eq!(r.outcomes[0].witness.point, vec![0.5, 0.55]);
        let r = nonexistence_probe(&ProbeFamily::ComplementSigma(TConorm::Lukasiewicz), &cands, &g, &p);
        assert!(r.all_fail());
        assert_eq!(r.outcomes[0].witness.point, vec![0.5, 0.45]);
        assert_eq!(probe_family_of(&FuzzySubset::constant(Carrier::grid(5).unwrap(), 1.0), &p), None);
        assert_eq!(probe_family_of(&grid_sigma(5, |x| x), &p), Some("identity"));
    }
}
