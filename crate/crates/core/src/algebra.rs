//! Finite monoids, monoids on uniform grids, bounded lattices and submonoid tests.

use std::fmt;

use thiserror::Error;

use crate::numerics::{uniform_grid, TolerancePolicy};
use crate::operator::{BinaryOp, Operator};
use crate::par::{first_tuple_match, TupleSpace};
use crate::report::{fmt_num, CheckReport, ConditionResult, Witness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("carrier elements must be distinct (duplicate `{0}`)")]
    DuplicateElement(String),
    #[error("carrier must not be empty")]
    EmptyCarrier,
    #[error("grid carrier needs at least 2 points, got {0}")]
    InvalidGrid(usize),
    #[error("operation table must be {n}x{n} with entries below {n}")]
    MalformedTable { n: usize },
    #[error("{x} * {y} = {value} is not a carrier element")]
    NotClosed { x: f64, y: f64, value: f64 },
    #[error("identity {0} is not a carrier element")]
    IdentityNotInCarrier(f64),
    #[error("monoid axioms fail: {0}")]
    NotAMonoid(String),
    #[error("lattice axioms fail: {0}")]
    NotALattice(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Carrier {
    Finite(Vec<Element>),
    Grid(usize),
}

impl Carrier {
    pub fn finite(elements: Vec<Element>) -> Result<Self, AlgebraError> {
        if elements.is_empty() {
            return Err(AlgebraError::EmptyCarrier);
        }
        for (i, a) in elements.iter().enumerate() {
            for b in &elements[..i] {
                if a.label == b.label || a.value == b.value {
                    return Err(AlgebraError::DuplicateElement(a.label.clone()));
                }
            }
        }
        Ok(Carrier::Finite(elements))
    }

    /// A finite carrier labelled by the compact decimal form of each value.
    pub fn from_values(values: &[f64]) -> Result<Self, AlgebraError> {
        Carrier::finite(
            values
                .iter()
                .map(|&v| Element { label: fmt_num(v), value: v })
                .collect(),
        )
    }

    /// `{0, 1, .., n-1}` as numbers.
    pub fn range(n: usize) -> Result<Self, AlgebraError> {
        Carrier::from_values(&(0..n).map(|i| i as f64).collect::<Vec<_>>())
    }

    pub fn grid(n: usize) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::InvalidGrid(n));
        }
        Ok(Carrier::Grid(n))
    }

    pub fn len(&self) -> usize {
        match self {
            Carrier::Finite(els) => els.len(),
            Carrier::Grid(n) => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, i: usize) -> f64 {
        match self {
            Carrier::Finite(els) => els[i].value,
            Carrier::Grid(n) => i as f64 / (*n - 1) as f64,
        }
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            Carrier::Finite(els) => els[i].label.clone(),
            Carrier::Grid(_) => fmt_num(self.value(i)),
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match self {
            Carrier::Finite(els) => els.iter().map(|e| e.value).collect(),
            Carrier::Grid(n) => uniform_grid(*n).expect("grid carriers have n >= 2"),
        }
    }

    pub fn index_of_value(&self, v: f64, pol: &TolerancePolicy) -> Option<usize> {
        match self {
            Carrier::Finite(els) => els.iter().position(|e| pol.eq(e.value, v)),
            Carrier::Grid(n) => {
                let scaled = v * (*n - 1) as f64;
                let i = scaled.round();
                if i < 0.0 || i > (*n - 1) as f64 {
                    return None;
                }
                let i = i as usize;
                pol.eq(self.value(i), v).then_some(i)
            }
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        match self {
            Carrier::Finite(els) => els.iter().position(|e| e.label == label),
            Carrier::Grid(_) => label.parse::<f64>().ok().and_then(|v| self.index_of_value(v, &TolerancePolicy::default())),
        }
    }
}

/// `{0, a/n, .., a, a + (1-a)/m, .., 1}`.
pub fn discrete_carrier(anchor: f64, n: usize, m: usize) -> Result<Carrier, AlgebraError> {
    if !(anchor > 0.0 && anchor < 1.0) || n == 0 || m == 0 {
        return Err(AlgebraError::InvalidParameters(format!(
            "need anchor in (0,1) and n, m >= 1 (got {anchor}, {n}, {m})"
        )));
    }
    let mut values = Vec::with_capacity(n + m + 1);
    for i in 0..n {
        values.push(i as f64 * anchor / n as f64);
    }
    values.push(anchor);
    for j in 1..m {
        values.push(anchor + j as f64 * (1.0 - anchor) / m as f64);
    }
    values.push(1.0);
    Carrier::from_values(&values)
}

#[derive(Clone)]
enum MonoidOp {
    Table(Vec<usize>),
    Operator { op: Operator, closed: Option<Vec<usize>> },
}

/// A monoid on a finite carrier or a uniform grid.
#[derive(Clone)]
pub struct Monoid {
    carrier: Carrier,
    op: MonoidOp,
    identity: usize,
    name: String,
}

/// The result of multiplying carrier elements: the carrier index when the
/// product lands on the carrier, and its numeric value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Product {
    pub index: Option<usize>,
    pub value: f64,
}

impl Monoid {
    /// From a Cayley table of carrier indices; verifies the monoid axioms.
    pub fn from_table(carrier: Carrier, table: Vec<Vec<usize>>, identity: usize) -> Result<Self, AlgebraError> {
        let m = Self::from_table_unchecked(carrier, table, identity)?;
        m.require_axioms()?;
        Ok(m)
    }

    /// As [`Monoid::from_table`] but only checks the table's shape. Use
    /// [`check_monoid`] to inspect the axioms.
    pub fn from_table_unchecked(carrier: Carrier, table: Vec<Vec<usize>>, identity: usize) -> Result<Self, AlgebraError> {
        let n = carrier.len();
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) || identity >= n {
            return Err(AlgebraError::MalformedTable { n });
        }
        Ok(Monoid {
            carrier,
            op: MonoidOp::Table(table.into_iter().flatten().collect()),
            identity,
            name: "table".into(),
        })
    }

    /// Builds the table of a binary function on carrier indices.
    pub fn from_index_fn<F>(carrier: Carrier, identity: usize, name: &str, f: F) -> Result<Self, AlgebraError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let n = carrier.len();
        let table = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        let mut m = Self::from_table(carrier, table, identity)?;
        m.name = name.to_string();
        Ok(m)
    }

    /// `op` restricted to `carrier`: every product must land on the carrier
    /// within `eps_eq` and the monoid axioms must hold.
    pub fn from_operator(carrier: Carrier, op: Operator, identity: f64, pol: &TolerancePolicy) -> Result<Self, AlgebraError> {
        let id = carrier
            .index_of_value(identity, pol)
            .ok_or(AlgebraError::IdentityNotInCarrier(identity))?;
        let n = carrier.len();
        let values = carrier.values();
        let mut table = Vec::with_capacity(n * n);
        for &x in &values {
            for &y in &values {
                let v = op.apply(x, y);
                match carrier.index_of_value(v, pol) {
                    Some(i) => table.push(i),
                    None => return Err(AlgebraError::NotClosed { x, y, value: v }),
                }
            }
        }
        let name = op.name();
        let m = Monoid {
            carrier,
            op: MonoidOp::Operator { op, closed: Some(table) },
            identity: id,
            name,
        };
        m.require_axioms_with(pol)?;
        Ok(m)
    }

    /// `([0,1], op)` on the grid `grid(n)` for an operator that is closed on
    /// `[0,1]` but not on the grid (products are evaluated, not snapped).
    pub fn sampled(n: usize, op: Operator, identity: f64, pol: &TolerancePolicy) -> Result<Self, AlgebraError> {
        let carrier = Carrier::grid(n)?;
        let id = carrier
            .index_of_value(identity, pol)
            .ok_or(AlgebraError::IdentityNotInCarrier(identity))?;
        let name = op.name();
        let m = Monoid {
            carrier,
            op: MonoidOp::Operator { op, closed: None },
            identity: id,
            name,
        };
        m.require_axioms_with(pol)?;
        Ok(m)
    }

    /// `op` sampled on `carrier` without verifying the axioms. For operators
    /// that are monoid operations on `[0, 1]` by construction (t-norms,
    /// t-conorms, uninorms); products are evaluated, not snapped.
    pub fn assumed(carrier: Carrier, op: Operator, identity: f64, pol: &TolerancePolicy) -> Result<Self, AlgebraError> {
        let id = carrier
            .index_of_value(identity, pol)
            .ok_or(AlgebraError::IdentityNotInCarrier(identity))?;
        let name = op.name();
        Ok(Monoid {
            carrier,
            op: MonoidOp::Operator { op, closed: None },
            identity: id,
            name,
        })
    }

    /// `([0,1], op)` on `grid(n)`, closed on the grid.
    pub fn grid(n: usize, op: impl Into<Operator>, identity: f64, pol: &TolerancePolicy) -> Result<Self, AlgebraError> {
        Self::from_operator(Carrier::grid(n)?, op.into(), identity, pol)
    }

    fn require_axioms(&self) -> Result<(), AlgebraError> {
        self.require_axioms_with(&TolerancePolicy::default())
    }

    fn require_axioms_with(&self, pol: &TolerancePolicy) -> Result<(), AlgebraError> {
        let r = check_monoid(self, pol);
        if r.passed() {
            Ok(())
        } else {
            let c = r.failing().next().expect("failed report has a failing condition");
            Err(AlgebraError::NotAMonoid(format!(
                "{} @ {}",
                c.name,
                c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
            )))
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
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

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn identity_value(&self) -> f64 {
        self.carrier.value(self.identity)
    }

    pub fn operator(&self) -> Option<&Operator> {
        match &self.op {
            MonoidOp::Operator { op, .. } => Some(op),
            MonoidOp::Table(_) => None,
        }
    }

    /// True when every product is a carrier element (always for tables).
    pub fn is_closed(&self) -> bool {
        match &self.op {
            MonoidOp::Table(_) => true,
            MonoidOp::Operator { closed, .. } => closed.is_some(),
        }
    }

    fn index_table(&self) -> Option<&[usize]> {
        match &self.op {
            MonoidOp::Table(t) => Some(t),
            MonoidOp::Operator { closed, .. } => closed.as_deref(),
        }
    }

    /// The Cayley table as rows of indices, for closed monoids.
    pub fn table(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.len();
        self.index_table().map(|t| t.chunks(n).map(|r| r.to_vec()).collect())
    }

    /// Index of `i * j` for closed monoids.
    pub fn product_index(&self, i: usize, j: usize) -> Option<usize> {
        self.index_table().map(|t| t[i * self.len() + j])
    }

    /// `i * j`, evaluated through the operator when the monoid is not closed.
    pub fn product(&self, i: usize, j: usize) -> Product {
        match self.product_index(i, j) {
            Some(k) => Product { index: Some(k), value: self.carrier.value(k) },
            None => {
                let op = self.operator().expect("unclosed monoids carry an operator");
                Product { index: None, value: op.apply(self.carrier.value(i), self.carrier.value(j)) }
            }
        }
    }

    /// Left-folded product of a tuple of carrier indices.
    pub fn fold(&self, tuple: &[usize]) -> Product {
        if let Some(t) = self.index_table() {
            let n = self.len();
            let k = tuple[1..].iter().fold(tuple[0], |acc, &j| t[acc * n + j]);
            return Product { index: Some(k), value: self.carrier.value(k) };
        }
        let op = self.operator().expect("unclosed monoids carry an operator");
        let v = tuple[1..]
            .iter()
            .fold(self.carrier.value(tuple[0]), |acc, &j| op.apply(acc, self.carrier.value(j)));
        Product { index: None, value: v }
    }

    /// Product of two values; `None` when a value is off the carrier of a table monoid.
    pub fn combine_values(&self, x: f64, y: f64, pol: &TolerancePolicy) -> Option<f64> {
        match &self.op {
            MonoidOp::Operator { op, .. } => Some(op.apply(x, y)),
            MonoidOp::Table(t) => {
                let i = self.carrier.index_of_value(x, pol)?;
                let j = self.carrier.index_of_value(y, pol)?;
                Some(self.carrier.value(t[i * self.len() + j]))
            }
        }
    }

    pub fn is_commutative(&self, pol: &TolerancePolicy) -> bool {
        let n = self.len();
        (0..n).all(|i| (i..n).all(|j| pol.eq(self.product(i, j).value, self.product(j, i).value)))
    }
}

impl fmt::Debug for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monoid({}, |M| = {}, e = {})", self.name, self.len(), self.carrier.label(self.identity))
    }
}

/// Identity and associativity over all carrier pairs and triples.
pub fn check_monoid(m: &Monoid, pol: &TolerancePolicy) -> CheckReport {
    let mut report = CheckReport::new(format!("monoid {}", m.name()));
    let n = m.len();
    let e = m.identity;
    let c = &m.carrier;
    let ident = (0..n).find_map(|i| {
        let x = c.value(i);
        let l = m.product(e, i).value;
        let r = m.product(i, e).value;
        if !pol.eq(l, x) {
            Some(Witness::new(vec![c.value(e), x], Some((l, x)), "e*x != x"))
        } else if !pol.eq(r, x) {
            Some(Witness::new(vec![x, c.value(e)], Some((r, x)), "x*e != x"))
        } else {
            None
        }
    });
    report.push(ConditionResult::from_search("identity", n as u64, ident));

    let space = TupleSpace::new(n, 3);
    let assoc = first_tuple_match(space, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let (l, r) = match m.index_table() {
            Some(tab) => {
                let l = tab[tab[i * n + j] * n + k];
                let r = tab[i * n + tab[j * n + k]];
                (c.value(l), c.value(r))
            }
            None => {
                let op = m.operator().expect("operator present");
                let (x, y, z) = (c.value(i), c.value(j), c.value(k));
                (op.apply(op.apply(x, y), z), op.apply(x, op.apply(y, z)))
            }
        };
        (!pol.eq(l, r)).then(|| Witness::new(vec![c.value(i), c.value(j), c.value(k)], Some((l, r)), "(xy)z != x(yz)"))
    });
    report.push(ConditionResult::from_search("associativity", space.len(), assoc));

    report.push(ConditionResult::pass("closure", (n * n) as u64));
    if !m.is_closed() {
        report.observe("closure", false, "products evaluated on [0,1], not snapped to the grid");
    }
    report
}

/// Is `subset` (given by values) a submonoid: contains the identity and is closed?
pub fn is_submonoid(m: &Monoid, subset: &[f64], pol: &TolerancePolicy) -> CheckReport {
    let mut report = CheckReport::new("submonoid");
    let e = m.identity_value();
    let has_e = subset.iter().any(|&s| pol.eq(s, e));
    report.push(ConditionResult::from_search(
        "contains-identity",
        subset.len() as u64,
        (!has_e).then(|| Witness::new(vec![e], None, "identity missing")),
    ));
    report.push(subset_closure(subset, pol, |x, y| m.combine_values(x, y, pol)));
    report
}

/// Closure of `subset` under a bare operation (no identity required), as used
/// for discrete nullnorms.
pub fn closed_under(op: &dyn BinaryOp, subset: &[f64], pol: &TolerancePolicy) -> ConditionResult {
    subset_closure(subset, pol, |x, y| Some(op.apply(x, y)))
}

fn subset_closure<F>(subset: &[f64], pol: &TolerancePolicy, product: F) -> ConditionResult
where
    F: Fn(f64, f64) -> Option<f64> + Sync + Send,
{
    let space = TupleSpace::new(subset.len(), 2);
    let w = first_tuple_match(space, |t| {
        let (x, y) = (subset[t[0]], subset[t[1]]);
        match product(x, y) {
            None => Some(Witness::new(vec![x, y], None, "argument not in carrier")),
            Some(p) => (!subset.iter().any(|&s| pol.eq(s, p)))
                .then(|| Witness::new(vec![x, y], Some((p, p)), format!("product {} not in subset", fmt_num(p)))),
        }
    });
    ConditionResult::from_search("closure", space.len(), w)
}

/// A finite bounded lattice given by meet and join tables.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedLattice {
    labels: Vec<String>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl BoundedLattice {
    pub fn new(labels: Vec<String>, meet: Vec<Vec<usize>>, join: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let ok = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&c| c < n));
        if !ok(&meet) || !ok(&join) {
            return Err(AlgebraError::MalformedTable { n });
        }
        let meet: Vec<usize> = meet.into_iter().flatten().collect();
        let join: Vec<usize> = join.into_iter().flatten().collect();
        let top = (0..n)
            .find(|&t| (0..n).all(|x| meet[t * n + x] == x && meet[x * n + t] == x))
            .ok_or_else(|| AlgebraError::NotALattice("no meet identity (top)".into()))?;
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| join[b * n + x] == x && join[x * n + b] == x))
            .ok_or_else(|| AlgebraError::NotALattice("no join identity (bottom)".into()))?;
        let lat = BoundedLattice { labels, meet, join, bottom, top };
        let r = lat.check_laws();
        if let Some(c) = r.failing().next() {
            return Err(AlgebraError::NotALattice(c.name.clone()));
        }
        Ok(lat)
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let meet = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
        let join = (0..n).map(|i| (0..n).map(|j| i.max(j)).collect()).collect();
        BoundedLattice::new(labels, meet, join).expect("chains are lattices")
    }

    /// `{0, a, b, 1}` with `a`, `b` incomparable.
    pub fn boolean_square() -> Self {
        let labels = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
        let meet = vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]];
        let join = vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]];
        BoundedLattice::new(labels, meet, join).expect("2x2 boolean lattice")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// `a <= b` iff `a /\ b = a`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn check_laws(&self) -> CheckReport {
        let n = self.len();
        let mut r = CheckReport::new("bounded lattice");
        let p = |i: usize| i as f64;
        for (name, op) in [("meet", &self.meet), ("join", &self.join)] {
            let comm = TupleSpace::new(n, 2);
            let w = first_tuple_match(comm, |t| {
                (op[t[0] * n + t[1]] != op[t[1] * n + t[0]]).then(|| Witness::at(vec![p(t[0]), p(t[1])]))
            });
            r.push(ConditionResult::from_search(format!("{name} commutativity"), comm.len(), w));
            let assoc = TupleSpace::new(n, 3);
            let w = first_tuple_match(assoc, |t| {
                let l = op[op[t[0] * n + t[1]] * n + t[2]];
                let rr = op[t[0] * n + op[t[1] * n + t[2]]];
                (l != rr).then(|| Witness::at(vec![p(t[0]), p(t[1]), p(t[2])]))
            });
            r.push(ConditionResult::from_search(format!("{name} associativity"), assoc.len(), w));
            let w = (0..n).find_map(|i| (op[i * n + i] != i).then(|| Witness::at(vec![p(i)])));
            r.push(ConditionResult::from_search(format!("{name} idempotence"), n as u64, w));
        }
        let abs = TupleSpace::new(n, 2);
        let w = first_tuple_match(abs, |t| {
            let (x, y) = (t[0], t[1]);
            let a = self.meet[x * n + self.join[x * n + y]];
            let b = self.join[x * n + self.meet[x * n + y]];
            (a != x || b != x).then(|| Witness::at(vec![p(x), p(y)]))
        });
        r.push(ConditionResult::from_search("absorption", abs.len(), w));
        r
    }
}
