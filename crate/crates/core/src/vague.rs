//! Indistinguishability operators, vague binary operations and vague monoids,
//! parameterised by any binary aggregation (t-norms, uninorms, nullnorms).

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::algebra::{AlgebraError, Carrier, Monoid};
use crate::fuzzy_monoids::{FuzzyError, FuzzySubset};
use crate::numerics::TolerancePolicy;
use crate::operator::{Aggregation, BinaryOp};
use crate::par::{first_match, first_tuple_match, TupleSpace};
use crate::report::{CheckReport, ConditionResult, Coverage, Witness};
use crate::sampling::seeded;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VagueError {
    #[error("table must be {n}x{n}")]
    Shape { n: usize },
    #[error("value {value} at ({i}, {j}) is outside [0, 1]")]
    OutOfRange { i: usize, j: usize, value: f64 },
    #[error("E({i}, {i}) = {value}, expected 1")]
    NotReflexive { i: usize, value: f64 },
    #[error("E({i}, {j}) != E({j}, {i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("monoid must be closed on a carrier of the same size")]
    CarrierMismatch,
    #[error("E is not regular with respect to the operation: {0}")]
    RegularityRequired(Witness),
    #[error("no z with value 1 for the pair ({x}, {y})")]
    MissingProduct { x: String, y: String },
    #[error("both {z1} and {z2} have value 1 for the pair ({x}, {y})")]
    SeparationViolated { x: String, y: String, z1: String, z2: String },
    #[error("E does not separate points")]
    NotSeparating,
    #[error("the vague operation has no identity element")]
    NoIdentity,
    #[error("map is not total from a carrier of size {src} into one of size {dst}")]
    MapNotTotal { src: usize, dst: usize },
    #[error("four-ary aggregation has arity {0}")]
    InvalidArity(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// The aggregation a vague structure is built over: a binary operation, and
/// the 4-ary form used by substitutivity and associativity. Left iteration of
/// the binary operation is used unless a 4-ary aggregation is supplied.
#[derive(Clone)]
pub struct VagueAggregation {
    name: String,
    binary: Arc<dyn BinaryOp>,
    four_ary: Option<Arc<dyn Aggregation>>,
}

impl fmt::Debug for VagueAggregation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VagueAggregation({})", self.name)
    }
}

impl VagueAggregation {
    pub fn new(name: impl Into<String>, op: impl BinaryOp + 'static) -> Self {
        Self::from_arc(name, Arc::new(op))
    }

    pub fn from_arc(name: impl Into<String>, op: Arc<dyn BinaryOp>) -> Self {
        VagueAggregation { name: name.into(), binary: op, four_ary: None }
    }

    pub fn with_four_ary(mut self, agg: Arc<dyn Aggregation>) -> Result<Self, VagueError> {
        if agg.arity() != 4 {
            return Err(VagueError::InvalidArity(agg.arity()));
        }
        self.four_ary = Some(agg);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn binary(&self, a: f64, b: f64) -> f64 {
        self.binary.apply(a, b)
    }

    pub fn four(&self, xs: [f64; 4]) -> f64 {
        match &self.four_ary {
            Some(agg) => agg.aggregate(&xs),
            None => self.binary.fold(&xs),
        }
    }
}

/// A reflexive, symmetric fuzzy relation on a finite carrier.
#[derive(Debug, Clone, PartialEq)]
pub struct IndistinguishabilityOp {
    carrier: Carrier,
    values: Vec<f64>,
}

impl IndistinguishabilityOp {
    /// Entries within `eps_eq` of `[0, 1]` are clamped; the diagonal must be 1
    /// and the table symmetric, both within `eps_eq`.
    pub fn new(carrier: Carrier, table: Vec<Vec<f64>>, pol: &TolerancePolicy) -> Result<Self, VagueError> {
        let n = carrier.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(VagueError::Shape { n });
        }
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = table[i][j];
                if v.is_nan() || v < -pol.eps_eq || v > 1.0 + pol.eps_eq {
                    return Err(VagueError::OutOfRange { i, j, value: v });
                }
                if i == j && !pol.eq(v, 1.0) {
                    return Err(VagueError::NotReflexive { i, value: v });
                }
                if !pol.eq(v, table[j][i]) {
                    return Err(VagueError::NotSymmetric { i, j });
                }
                let v = if i == j { 1.0 } else { table[i.min(j)][i.max(j)].clamp(0.0, 1.0) };
                values[i * n + j] = v;
            }
        }
        Ok(IndistinguishabilityOp { carrier, values })
    }

    /// Off-diagonal values from `f(i, j)` for `i < j`.
    pub fn from_fn<F>(carrier: Carrier, f: F, pol: &TolerancePolicy) -> Result<Self, VagueError>
    where
        F: Fn(usize, usize) -> f64,
    {
        let n = carrier.len();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Equal => 1.0,
                        std::cmp::Ordering::Less => f(i, j),
                        std::cmp::Ordering::Greater => f(j, i),
                    })
                    .collect()
            })
            .collect();
        Self::new(carrier, table, pol)
    }

    pub fn crisp(carrier: Carrier) -> Self {
        Self::constant(carrier, 0.0)
    }

    /// `E(x, y) = c` for `x != y`.
    pub fn constant(carrier: Carrier, c: f64) -> Self {
        let n = carrier.len();
        let c = c.clamp(0.0, 1.0);
        let values = (0..n * n).map(|k| if k / n == k % n { 1.0 } else { c }).collect();
        IndistinguishabilityOp { carrier, values }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }

    pub fn separates_points(&self, pol: &TolerancePolicy) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j) < 1.0 - pol.eps_eq))
    }

    /// `self <= other` pointwise, within `eps_leq`.
    pub fn leq_pointwise(&self, other: &IndistinguishabilityOp, pol: &TolerancePolicy) -> bool {
        self.len() == other.len() && self.values.iter().zip(&other.values).all(|(&a, &b)| pol.leq(a, b))
    }
}

/// A fuzzy binary operation: `v(x, y, z)` is the degree to which `z = x * y`.
#[derive(Debug, Clone, PartialEq)]
pub struct VagueOp {
    carrier: Carrier,
    values: Vec<f64>,
}

impl VagueOp {
    pub fn from_fn<F>(carrier: Carrier, f: F, pol: &TolerancePolicy) -> Result<Self, VagueError>
    where
        F: Fn(usize, usize, usize) -> f64,
    {
        let n = carrier.len();
        let mut values = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = f(x, y, z);
                    if v.is_nan() || v < -pol.eps_eq || v > 1.0 + pol.eps_eq {
                        return Err(VagueError::OutOfRange { i: x * n + y, j: z, value: v });
                    }
                    values.push(v.clamp(0.0, 1.0));
                }
            }
        }
        Ok(VagueOp { carrier, values })
    }

    /// The crisp operation of a closed monoid: 1 on `z = x * y`, 0 elsewhere.
    pub fn crisp(m: &Monoid) -> Result<Self, VagueError> {
        if !m.is_closed() {
            return Err(VagueError::CarrierMismatch);
        }
        let n = m.len();
        let mut values = vec![0.0; n * n * n];
        for x in 0..n {
            for y in 0..n {
                let z = m.product_index(x, y).expect("closed monoid");
                values[(x * n + y) * n + z] = 1.0;
            }
        }
        Ok(VagueOp { carrier: m.carrier().clone(), values })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> f64 {
        let n = self.len();
        self.values[(x * n + y) * n + z]
    }

    /// All `z` with `v(x, y, z) >= 1 - eps_eq`.
    pub fn ones(&self, x: usize, y: usize, pol: &TolerancePolicy) -> Vec<usize> {
        (0..self.len()).filter(|&z| is_one(self.get(x, y, z), pol)).collect()
    }
}

fn is_one(v: f64, pol: &TolerancePolicy) -> bool {
    v >= 1.0 - pol.eps_eq
}

/// Exhaustive enumeration up to `exhaustive_max` carrier elements; seeded
/// uniform sampling of tuples beyond that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchPlan {
    pub exhaustive_max: usize,
    pub samples: u64,
    pub seed: u64,
}

impl Default for SearchPlan {
    fn default() -> Self {
        SearchPlan { exhaustive_max: 8, samples: 200_000, seed: 0 }
    }
}

fn search<F>(name: &str, n: usize, arity: usize, plan: &SearchPlan, carrier: &Carrier, f: F) -> ConditionResult
where
    F: Fn(&[usize]) -> Option<(f64, f64)> + Sync + Send,
{
    let space = TupleSpace::new(n, arity);
    let to_witness = |t: &[usize], sides: (f64, f64)| Witness::new(t.iter().map(|&i| carrier.value(i)).collect(), Some(sides), "");
    if n <= plan.exhaustive_max {
        let w = first_tuple_match(space, |t| f(t).map(|s| to_witness(t, s)));
        return ConditionResult::from_search(name, space.len(), w);
    }
    let mut rng = seeded(plan.seed);
    let idx: Vec<u64> = (0..plan.samples).map(|_| rng.gen_range(0..space.len())).collect();
    let w = first_match(idx.len() as u64, |k| {
        let mut buf = [0usize; crate::par::MAX_ARITY];
        space.decode(idx[k as usize], &mut buf);
        let t = &buf[..arity];
        f(t).map(|s| to_witness(t, s))
    });
    ConditionResult::from_search(name, plan.samples, w).with_coverage(Coverage::Sampled { seed: plan.seed, samples: plan.samples })
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndistinguishabilityReport {
    pub report: CheckReport,
    pub separates_points: bool,
}

/// Reflexivity, symmetry and `A(E(x,y), E(y,z)) <= E(x,z)` over all triples.
pub fn check_indistinguishability(a: &VagueAggregation, e: &IndistinguishabilityOp, pol: &TolerancePolicy) -> IndistinguishabilityReport {
    let n = e.len();
    let c = e.carrier();
    let mut report = CheckReport::new(format!("{}-indistinguishability", a.name()));
    let refl = (0..n).find(|&i| !pol.eq(e.get(i, i), 1.0)).map(|i| Witness::new(vec![c.value(i)], Some((e.get(i, i), 1.0)), ""));
    report.push(ConditionResult::from_search("reflexivity", n as u64, refl));
    let sym = first_tuple_match(TupleSpace::new(n, 2), |t| {
        let (l, r) = (e.get(t[0], t[1]), e.get(t[1], t[0]));
        (l != r).then(|| Witness::new(vec![c.value(t[0]), c.value(t[1])], Some((l, r)), ""))
    });
    report.push(ConditionResult::from_search("symmetry", (n * n) as u64, sym));
    let plan = SearchPlan { exhaustive_max: usize::MAX, ..Default::default() };
    report.push(search("transitivity", n, 3, &plan, c, |t| {
        let lhs = a.binary(e.get(t[0], t[1]), e.get(t[1], t[2]));
        let rhs = e.get(t[0], t[2]);
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    }));
    IndistinguishabilityReport { report, separates_points: e.separates_points(pol) }
}

fn require_shared(e: &IndistinguishabilityOp, m: &Monoid) -> Result<(), VagueError> {
    if m.is_closed() && m.len() == e.len() {
        Ok(())
    } else {
        Err(VagueError::CarrierMismatch)
    }
}

/// `E(x,y) <= E(x*z, y*z)` and `E(x,y) <= E(z*x, z*y)` over all triples.
pub fn check_regular(e: &IndistinguishabilityOp, m: &Monoid, pol: &TolerancePolicy) -> Result<CheckReport, VagueError> {
    require_shared(e, m)?;
    let n = m.len();
    let p = |i, j| m.product_index(i, j).expect("closed monoid");
    let plan = SearchPlan { exhaustive_max: usize::MAX, ..Default::default() };
    let mut report = CheckReport::new(format!("regularity w.r.t. {}", m.name()));
    report.push(search("right-regularity", n, 3, &plan, m.carrier(), |t| {
        let (lhs, rhs) = (e.get(t[0], t[1]), e.get(p(t[0], t[2]), p(t[1], t[2])));
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    }));
    report.push(search("left-regularity", n, 3, &plan, m.carrier(), |t| {
        let (lhs, rhs) = (e.get(t[0], t[1]), e.get(p(t[2], t[0]), p(t[2], t[1])));
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    }));
    Ok(report)
}

/// `v(x, y, z) = E(x * y, z)` for `E` regular with respect to `*`.
pub fn vague_from_monoid(e: &IndistinguishabilityOp, m: &Monoid, pol: &TolerancePolicy) -> Result<VagueOp, VagueError> {
    let reg = check_regular(e, m, pol)?;
    if let Some(w) = reg.first_witness() {
        return Err(VagueError::RegularityRequired(w.clone()));
    }
    VagueOp::from_fn(
        m.carrier().clone(),
        |x, y, z| e.get(m.product_index(x, y).expect("closed monoid"), z),
        pol,
    )
}

fn check_binary_into(report: &mut CheckReport, a: &VagueAggregation, e: &IndistinguishabilityOp, v: &VagueOp, pol: &TolerancePolicy, plan: &SearchPlan) {
    let n = v.len();
    let c = v.carrier();
    report.push(search("substitutivity", n, 6, plan, c, |t| {
        let lhs = a.four([v.get(t[0], t[1], t[2]), e.get(t[0], t[3]), e.get(t[1], t[4]), e.get(t[2], t[5])]);
        let rhs = v.get(t[3], t[4], t[5]);
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    }));
    report.push(search("functionality", n, 4, plan, c, |t| {
        let lhs = a.binary(v.get(t[0], t[1], t[2]), v.get(t[0], t[1], t[3]));
        let rhs = e.get(t[2], t[3]);
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    }));
    let total = first_tuple_match(TupleSpace::new(n, 2), |t| {
        v.ones(t[0], t[1], pol)
            .is_empty()
            .then(|| Witness::new(vec![c.value(t[0]), c.value(t[1])], None, "no z with value 1"))
    });
    report.push(ConditionResult::from_search("totality", (n * n) as u64, total));
}

fn require_same_size(e: &IndistinguishabilityOp, v: &VagueOp) -> Result<(), VagueError> {
    if e.len() == v.len() {
        Ok(())
    } else {
        Err(VagueError::Shape { n: e.len() })
    }
}

/// Substitutivity over 6-tuples, functionality over 4-tuples and totality.
pub fn check_vague_binary(
    a: &VagueAggregation,
    e: &IndistinguishabilityOp,
    v: &VagueOp,
    pol: &TolerancePolicy,
    plan: &SearchPlan,
) -> Result<CheckReport, VagueError> {
    require_same_size(e, v)?;
    let mut report = CheckReport::new(format!("{}-vague binary operation", a.name()));
    check_binary_into(&mut report, a, e, v, pol, plan);
    Ok(report)
}

/// Carrier indices `e` with `v(e,x,x) = v(x,e,x) = 1` for every `x`.
pub fn vague_identities(v: &VagueOp, pol: &TolerancePolicy) -> Vec<usize> {
    let n = v.len();
    (0..n)
        .filter(|&e| (0..n).all(|x| is_one(v.get(e, x, x), pol) && is_one(v.get(x, e, x), pol)))
        .collect()
}

/// The vague binary conditions plus associativity over 7-tuples and the
/// identity search.
pub fn check_vague_monoid(
    a: &VagueAggregation,
    e: &IndistinguishabilityOp,
    v: &VagueOp,
    pol: &TolerancePolicy,
    plan: &SearchPlan,
) -> Result<CheckReport, VagueError> {
    require_same_size(e, v)?;
    let mut report = CheckReport::new(format!("{}-vague monoid", a.name()));
    check_binary_into(&mut report, a, e, v, pol, plan);
    // (x, y, z, d, m, q, w)
    report.push(search("associativity", v.len(), 7, plan, v.carrier(), |t| {
        let (x, y, z, d, m, q, w) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
        let lhs = a.four([v.get(y, z, d), v.get(x, d, m), v.get(x, y, q), v.get(q, z, w)]);
        let rhs = e.get(m, w);
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    }));
    let ids = vague_identities(v, pol);
    let w = ids.is_empty().then(|| Witness::new(vec![], None, "no identity element"));
    report.push(ConditionResult::from_search("identity", v.len() as u64, w));
    let labels: Vec<String> = ids.iter().map(|&i| v.carrier().label(i)).collect();
    report.observe("identity-count", ids.len() <= 1, format!("identities: {{{}}}", labels.join(", ")));
    Ok(report)
}

/// The crisp monoid read off the unique 1-entries of `v`.
pub fn associated_monoid(v: &VagueOp, e: &IndistinguishabilityOp, pol: &TolerancePolicy) -> Result<Monoid, VagueError> {
    require_same_size(e, v)?;
    if !e.separates_points(pol) {
        return Err(VagueError::NotSeparating);
    }
    let n = v.len();
    let c = v.carrier();
    let mut table = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            match v.ones(x, y, pol)[..] {
                [] => return Err(VagueError::MissingProduct { x: c.label(x), y: c.label(y) }),
                [z] => table[x][y] = z,
                [z1, z2, ..] => {
                    return Err(VagueError::SeparationViolated { x: c.label(x), y: c.label(y), z1: c.label(z1), z2: c.label(z2) })
                }
            }
        }
    }
    let id = *vague_identities(v, pol).first().ok_or(VagueError::NoIdentity)?;
    Ok(Monoid::from_table(c.clone(), table, id)?.with_name("associated"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutativityReport {
    pub vague: ConditionResult,
    pub monoid_commutative: bool,
}

impl CommutativityReport {
    pub fn vague_commutative(&self) -> bool {
        self.vague.passed
    }

    pub fn agree(&self) -> bool {
        self.vague.passed == self.monoid_commutative
    }
}

/// Vague commutativity `A(v(x,y,m), v(y,x,w)) <= E(m,w)` next to commutativity
/// of the associated monoid `m`.
pub fn check_commutativity_correspondence(
    a: &VagueAggregation,
    e: &IndistinguishabilityOp,
    v: &VagueOp,
    m: &Monoid,
    pol: &TolerancePolicy,
) -> Result<CommutativityReport, VagueError> {
    require_same_size(e, v)?;
    let plan = SearchPlan { exhaustive_max: usize::MAX, ..Default::default() };
    let vague = search("vague-commutativity", v.len(), 4, &plan, v.carrier(), |t| {
        let lhs = a.binary(v.get(t[0], t[1], t[2]), v.get(t[1], t[0], t[3]));
        let rhs = e.get(t[2], t[3]);
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    });
    Ok(CommutativityReport { vague, monoid_commutative: m.is_commutative(pol) })
}

/// `v(x,y,z) <= w(f x, f y, f z)` over all triples; when that holds, also checks
/// that every identity of the source maps to an identity on the image of `f`.
pub fn check_homomorphism(
    f: &[usize],
    src: (&VagueOp, &IndistinguishabilityOp),
    dst: (&VagueOp, &IndistinguishabilityOp),
    pol: &TolerancePolicy,
) -> Result<CheckReport, VagueError> {
    let (v, _) = src;
    let (w, _) = dst;
    if f.len() != v.len() || f.iter().any(|&y| y >= w.len()) {
        return Err(VagueError::MapNotTotal { src: v.len(), dst: w.len() });
    }
    let plan = SearchPlan { exhaustive_max: usize::MAX, ..Default::default() };
    let mut report = CheckReport::new("homomorphism");
    let hom = search("homomorphism", v.len(), 3, &plan, v.carrier(), |t| {
        let lhs = v.get(t[0], t[1], t[2]);
        let rhs = w.get(f[t[0]], f[t[1]], f[t[2]]);
        (!pol.leq(lhs, rhs)).then_some((lhs, rhs))
    });
    let passed = hom.passed;
    report.push(hom);
    let mut image: Vec<usize> = f.to_vec();
    image.sort_unstable();
    image.dedup();
    report.observe("onto", image.len() == w.len(), format!("image has {} of {} elements", image.len(), w.len()));
    if passed {
        let bad = vague_identities(v, pol).into_iter().find_map(|e| {
            let fe = f[e];
            image
                .iter()
                .find(|&&y| !(is_one(w.get(fe, y, y), pol) && is_one(w.get(y, fe, y), pol)))
                .map(|&y| Witness::new(vec![w.carrier().value(fe), w.carrier().value(y)], None, "f(e) is not an identity"))
        });
        report.push(ConditionResult::from_search("identity-preservation", image.len() as u64, bad));
    }
    Ok(report)
}

/// `sigma(x) = F(f(x), e')`, with `F` the indistinguishability operator of the
/// target.
pub fn kernel(src: &Carrier, f: &[usize], dst_e: &IndistinguishabilityOp, e_prime: usize, pol: &TolerancePolicy) -> Result<FuzzySubset, VagueError> {
    if f.len() != src.len() || f.iter().any(|&y| y >= dst_e.len()) || e_prime >= dst_e.len() {
        return Err(VagueError::MapNotTotal { src: src.len(), dst: dst_e.len() });
    }
    let values = f.iter().map(|&y| dst_e.get(y, e_prime)).collect();
    let name = format!("ker (e' = {})", dst_e.carrier().label(e_prime));
    Ok(FuzzySubset::from_table(name, src.clone(), values, pol)?)
}

/// Small finite monoids and indistinguishability operators used to exercise the
/// vague constructions.
pub mod corpus {
    use super::*;
    use crate::algebra::Element;

    /// `({0..n}, max)` with identity 0.
    pub fn max_monoid(n: usize) -> Monoid {
        Monoid::from_index_fn(Carrier::range(n + 1).unwrap(), 0, "max", |a, b| a.max(b)).unwrap()
    }

    /// `({0..n}, min)` with identity `n`.
    pub fn min_monoid(n: usize) -> Monoid {
        Monoid::from_index_fn(Carrier::range(n + 1).unwrap(), n, "min", |a, b| a.min(b)).unwrap()
    }

    /// `({0..n}, (a, b) -> min(a + b, n))` with identity 0.
    pub fn truncated_add(n: usize) -> Monoid {
        Monoid::from_index_fn(Carrier::range(n + 1).unwrap(), 0, "truncated-add", |a, b| (a + b).min(n)).unwrap()
    }

    /// Left-zero semigroup `{a1..ak}` (`x * y = x`) with an adjoined identity `e`.
    pub fn left_zero_with_identity(k: usize) -> Monoid {
        let mut elems = vec![Element { label: "e".into(), value: 0.0 }];
        elems.extend((1..=k).map(|i| Element { label: format!("a{i}"), value: i as f64 }));
        let carrier = Carrier::finite(elems).unwrap();
        Monoid::from_index_fn(carrier, 0, "left-zero+e", |a, b| if a == 0 { b } else { a }).unwrap()
    }

    pub fn monoids() -> Vec<Monoid> {
        vec![
            max_monoid(2),
            max_monoid(4),
            min_monoid(3),
            min_monoid(5),
            truncated_add(2),
            truncated_add(5),
            left_zero_with_identity(2),
            left_zero_with_identity(4),
        ]
    }

    /// `E(x, y) = psi[min(x, y)]` for `x != y`; regular for max and truncated
    /// addition when `psi` is non-decreasing.
    pub fn min_based(carrier: Carrier, psi: &[f64], pol: &TolerancePolicy) -> Result<IndistinguishabilityOp, VagueError> {
        IndistinguishabilityOp::from_fn(carrier, |i, j| psi[i.min(j)], pol)
    }

    /// `E(x, y) = phi[max(x, y)]` for `x != y`; regular for min when `phi` is
    /// non-increasing.
    pub fn max_based(carrier: Carrier, phi: &[f64], pol: &TolerancePolicy) -> Result<IndistinguishabilityOp, VagueError> {
        IndistinguishabilityOp::from_fn(carrier, |i, j| phi[i.max(j)], pol)
    }

    /// Crisp, constant, min-based and max-based candidates with off-diagonal
    /// values drawn from `[lo, hi)`. Callers filter them through the checks.
    pub fn candidates<R: Rng>(carrier: &Carrier, lo: f64, hi: f64, rng: &mut R, pol: &TolerancePolicy) -> Vec<IndistinguishabilityOp> {
        let n = carrier.len();
        let draw = |rng: &mut R| -> Vec<f64> {
            let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..hi)).collect();
            v.sort_by(|a, b| a.total_cmp(b));
            v
        };
        let mut out = vec![IndistinguishabilityOp::crisp(carrier.clone())];
        out.push(IndistinguishabilityOp::constant(carrier.clone(), rng.gen_range(lo..hi)));
        let up = draw(rng);
        out.extend(min_based(carrier.clone(), &up, pol));
        let mut down = draw(rng);
        down.reverse();
        out.extend(max_based(carrier.clone(), &down, pol));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::corpus::*;
    use super::*;
    use crate::connectives::{TConorm, TNorm};
    use crate::fuzzy_monoids::{check_a_fuzzy_submonoid, DEFAULT_BUDGET};
    use crate::operator::Iterated;

    fn pol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    fn min_agg() -> VagueAggregation {
        VagueAggregation::new("min", TNorm::Minimum)
    }

    #[test]
    fn indistinguishability_examples() {
        let p = pol();
        let c = Carrier::range(3).unwrap();
        let r = check_indistinguishability(&min_agg(), &IndistinguishabilityOp::crisp(c.clone()), &p);
        assert!(r.report.passed() && r.separates_points);
        let one = IndistinguishabilityOp::constant(c.clone(), 1.0);
        let r = check_indistinguishability(&VagueAggregation::new("max", TConorm::Maximum), &one, &p);
        assert!(r.report.passed() && !r.separates_points);
        let e = IndistinguishabilityOp::new(c, vec![vec![1.0, 0.9, 0.5], vec![0.9, 1.0, 0.9], vec![0.5, 0.9, 1.0]], &p).unwrap();
        let r = check_indistinguishability(&min_agg(), &e, &p);
        let w = r.report.condition("transitivity").unwrap().witness.clone().unwrap();
        assert_eq!(w.point, vec![0.0, 1.0, 2.0]);
        assert_eq!(w.sides, Some((0.9, 0.5)));
    }

    #[test]
    fn construction_rejects_bad_tables() {
        let p = pol();
        let c = Carrier::range(2).unwrap();
        assert!(matches!(
            IndistinguishabilityOp::new(c.clone(), vec![vec![1.0, 0.2], vec![0.3, 1.0]], &p),
            Err(VagueError::NotSymmetric { .. })
        ));
        assert!(matches!(
            IndistinguishabilityOp::new(c, vec![vec![0.9, 0.2], vec![0.2, 1.0]], &p),
            Err(VagueError::NotReflexive { .. })
        ));
    }

    #[test]
    fn crisp_vague_operation() {
        let p = pol();
        let m = max_monoid(3);
        let e = IndistinguishabilityOp::crisp(m.carrier().clone());
        let v = vague_from_monoid(&e, &m, &p).unwrap();
        assert_eq!(v, VagueOp::crisp(&m).unwrap());
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    assert_eq!(v.get(x, y, z), if z == x.max(y) { 1.0 } else { 0.0 });
                }
            }
        }
        let plan = SearchPlan::default();
        assert!(check_vague_monoid(&min_agg(), &e, &v, &p, &plan).unwrap().passed());
        let back = associated_monoid(&v, &e, &p).unwrap();
        assert_eq!(back.table(), m.table());
    }

    #[test]
    fn all_ones() {
        let p = pol();
        let m = max_monoid(2);
        let e = IndistinguishabilityOp::constant(m.carrier().clone(), 1.0);
        let v = vague_from_monoid(&e, &m, &p).unwrap();
        assert!((0..27).all(|k| v.get(k / 9, (k / 3) % 3, k % 3) == 1.0));
        assert!(check_vague_monoid(&min_agg(), &e, &v, &p, &SearchPlan::default()).unwrap().passed());
        let c = check_commutativity_correspondence(&min_agg(), &e, &v, &m, &p).unwrap();
        assert!(c.vague_commutative());
    }

    #[test]
    fn graded_regular_table() {
        let p = pol();
        let m = max_monoid(2);
        let e = min_based(m.carrier().clone(), &[0.3, 0.6, 0.9], &p).unwrap();
        assert!(check_regular(&e, &m, &p).unwrap().passed());
        let v = vague_from_monoid(&e, &m, &p).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    assert_eq!(v.get(x, y, z), e.get(x.max(y), z));
                }
            }
        }
        assert!(check_vague_monoid(&VagueAggregation::new("prod", TNorm::Product), &e, &v, &p, &SearchPlan::default())
            .unwrap()
            .passed());
    }

    #[test]
    fn regularity_required() {
        let p = pol();
        let m = max_monoid(2);
        let e = min_based(m.carrier().clone(), &[0.9, 0.1, 0.0], &p).unwrap();
        assert!(matches!(vague_from_monoid(&e, &m, &p), Err(VagueError::RegularityRequired(_))));
    }

    #[test]
    fn functionality_breaks_with_two_ones() {
        let p = pol();
        let m = max_monoid(2);
        let e = IndistinguishabilityOp::crisp(m.carrier().clone());
        let mut v = VagueOp::crisp(&m).unwrap();
        v.values[2] = 1.0; // v(0, 0, 2)
        let r = check_vague_binary(&min_agg(), &e, &v, &p, &SearchPlan::default()).unwrap();
        let f = r.condition("functionality").unwrap();
        assert!(!f.passed);
        assert_eq!(f.witness.as_ref().unwrap().point, vec![0.0, 0.0, 0.0, 2.0]);
        assert!(matches!(associated_monoid(&v, &e, &p), Err(VagueError::SeparationViolated { .. })));
        v.values[0] = 0.0;
        v.values[2] = 0.0;
        assert!(matches!(associated_monoid(&v, &e, &p), Err(VagueError::MissingProduct { .. })));
    }

    #[test]
    fn missing_identity() {
        let p = pol();
        let e = IndistinguishabilityOp::crisp(Carrier::range(2).unwrap());
        let v = VagueOp::from_fn(Carrier::range(2).unwrap(), |_, _, z| if z == 1 { 1.0 } else { 0.0 }, &p).unwrap();
        let r = check_vague_monoid(&min_agg(), &e, &v, &p, &SearchPlan::default()).unwrap();
        assert!(!r.condition("identity").unwrap().passed);
    }

    #[test]
    fn commutativity_correspondence() {
        let p = pol();
        for m in [max_monoid(3), left_zero_with_identity(2)] {
            let e = IndistinguishabilityOp::crisp(m.carrier().clone());
            let v = vague_from_monoid(&e, &m, &p).unwrap();
            let c = check_commutativity_correspondence(&min_agg(), &e, &v, &m, &p).unwrap();
            assert!(c.agree());
            assert_eq!(c.monoid_commutative, m.name() == "max");
        }
    }

    #[test]
    fn homomorphisms_and_kernels() {
        let p = pol();
        let m = max_monoid(2);
        let crisp = IndistinguishabilityOp::crisp(m.carrier().clone());
        let graded = min_based(m.carrier().clone(), &[0.3, 0.6, 0.9], &p).unwrap();
        let vc = vague_from_monoid(&crisp, &m, &p).unwrap();
        let vg = vague_from_monoid(&graded, &m, &p).unwrap();
        let id = [0, 1, 2];
        assert!(crisp.leq_pointwise(&graded, &p));
        assert!(check_homomorphism(&id, (&vc, &crisp), (&vg, &graded), &p).unwrap().passed());
        let bad = check_homomorphism(&[2, 1, 0], (&vc, &crisp), (&vc, &crisp), &p).unwrap();
        assert!(!bad.passed());
        assert_eq!(bad.condition("homomorphism").unwrap().witness.as_ref().unwrap().point, vec![0.0, 1.0, 1.0]);

        let k = kernel(m.carrier(), &id, &crisp, 0, &p).unwrap();
        assert_eq!(k.values(), vec![1.0, 0.0, 0.0]);
        let k = kernel(m.carrier(), &id, &graded, 0, &p).unwrap();
        assert_eq!(k.values(), vec![1.0, 0.3, 0.3]);
        let k = kernel(m.carrier(), &[0, 0, 0], &graded, 0, &p).unwrap();
        assert_eq!(k.values(), vec![1.0; 3]);
        let r = check_a_fuzzy_submonoid(&Iterated::new(TNorm::Minimum, 2, "min"), &m, &kernel(m.carrier(), &id, &graded, 0, &p).unwrap(), &p, DEFAULT_BUDGET).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn sampled_mode_records_seed() {
        let p = pol();
        let m = max_monoid(9);
        let e = IndistinguishabilityOp::crisp(m.carrier().clone());
        let v = vague_from_monoid(&e, &m, &p).unwrap();
        let plan = SearchPlan { samples: 1000, seed: 5, ..Default::default() };
        let r = check_vague_binary(&min_agg(), &e, &v, &p, &plan).unwrap();
        assert!(r.passed());
        assert_eq!(r.condition("substitutivity").unwrap().coverage, Coverage::Sampled { seed: 5, samples: 1000 });
    }
}
