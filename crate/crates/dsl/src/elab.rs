use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fuzzalg::algebra::{discrete_carrier, AlgebraError, BoundedLattice, Carrier, Monoid};
use fuzzalg::connectives::{ConnectiveError, TConorm, TNorm};
use fuzzalg::fuzzy_monoids::{generator_membership, FuzzyError, FuzzySubset, InverseConvention, LatticeConnective, Direction};
use fuzzalg::numerics::{ExtendedMonotoneFunction, Monotonicity, RealFn, TolerancePolicy};
use fuzzalg::nullnorms::Nullnorm;
use fuzzalg::operator::Operator;
use fuzzalg::uninorms::{decreasing_structure, log_generator, rational_generator, Boundary, Tie, Uninorm, UninormError};
use fuzzalg::vague::{corpus, vague_from_monoid, IndistinguishabilityOp, VagueError, VagueOp};

use crate::ast::*;
use crate::error::{DslError, Span};

/// A real function of one variable defined in a script.
#[derive(Clone)]
pub struct Func {
    pub name: String,
    pub f: RealFn,
}

impl Func {
    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }
}

impl fmt::Debug for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Func({})", self.name)
    }
}

/// A fuzzy subset before it is placed on a carrier.
#[derive(Clone, Debug)]
pub enum FuzzyDef {
    Function { func: Func, convention: Option<InverseConvention> },
    Table { name: String, values: Vec<f64> },
}

impl FuzzyDef {
    pub fn realize(&self, carrier: Carrier, pol: &TolerancePolicy) -> Result<FuzzySubset, FuzzyError> {
        match self {
            FuzzyDef::Function { func, convention } => {
                let s = FuzzySubset::from_arc(func.name.clone(), carrier, func.f.clone(), pol)?;
                Ok(match convention {
                    Some(c) => s.with_convention(*c),
                    None => s,
                })
            }
            FuzzyDef::Table { name, values } => FuzzySubset::from_table(name.clone(), carrier, values.clone(), pol),
        }
    }
}

#[derive(Clone)]
pub enum Val {
    Num(f64),
    Func(Func),
    TNorm(TNorm),
    TConorm(TConorm),
    Uninorm(Uninorm),
    Nullnorm(Nullnorm),
    Monoid(Monoid),
    Carrier(Carrier),
    Lattice(BoundedLattice),
    Indist(IndistinguishabilityOp),
    Vague(VagueOp),
    Fuzzy(FuzzyDef),
    Symbol(String),
    Tuple(Vec<(Val, Span)>),
    Table(Vec<Vec<f64>>),
}

impl Val {
    pub fn type_name(&self) -> &'static str {
        match self {
            Val::Num(_) => "number",
            Val::Func(_) => "function",
            Val::TNorm(_) => "t-norm",
            Val::TConorm(_) => "t-conorm",
            Val::Uninorm(_) => "uninorm",
            Val::Nullnorm(_) => "nullnorm",
            Val::Monoid(_) => "monoid",
            Val::Carrier(_) => "carrier",
            Val::Lattice(_) => "lattice",
            Val::Indist(_) => "indistinguishability operator",
            Val::Vague(_) => "vague operation",
            Val::Fuzzy(_) => "fuzzy set",
            Val::Symbol(_) => "name",
            Val::Tuple(_) => "tuple",
            Val::Table(_) => "table",
        }
    }
}

impl fmt::Debug for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Num(v) => write!(f, "Num({v})"),
            Val::Symbol(s) => write!(f, "Symbol({s})"),
            other => write!(f, "<{}>", other.type_name()),
        }
    }
}

/// The monoid a submonoid check runs over.
#[derive(Clone, Debug)]
pub enum MonoidSpec {
    Finite(Monoid),
    /// `([0, 1], op)` sampled on the check's domain.
    Interval { op: Operator, identity: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum DomainSpec {
    Grid(usize),
    Samples(Vec<f64>),
}

impl DomainSpec {
    pub fn carrier(&self) -> Result<Carrier, AlgebraError> {
        match self {
            DomainSpec::Grid(n) => Carrier::grid(*n),
            DomainSpec::Samples(v) => Carrier::from_values(v),
        }
    }
}

pub const DEFAULT_GRID: usize = 101;

#[derive(Clone, Debug)]
pub enum CheckKind {
    Submonoid { agg: Operator, monoid: MonoidSpec, sigma: FuzzyDef },
    Subadditive { u: Uninorm, t: ExtendedMonotoneFunction, sigma: FuzzyDef },
    UninormAxioms(Uninorm),
    NullnormAxioms(Nullnorm),
    OperatorAxioms { op: Operator, identity: f64 },
    MonoidAxioms(Monoid),
    Closed { op: Operator, subset: Vec<f64> },
    MonotoneB { e: f64, sigma: FuzzyDef, direction: Direction },
    Probe(FuzzyDef),
    Indist { agg: Operator, e: IndistinguishabilityOp },
    Regular { e: IndistinguishabilityOp, m: Monoid },
    VagueBinary { agg: Operator, e: IndistinguishabilityOp, v: VagueOp },
    VagueMonoid { agg: Operator, e: IndistinguishabilityOp, v: VagueOp },
    Commutative { agg: Operator, e: IndistinguishabilityOp, v: VagueOp, m: Monoid },
    Hom { f: Vec<usize>, src: (VagueOp, IndistinguishabilityOp), dst: (VagueOp, IndistinguishabilityOp) },
    LatticeSubmonoid { lat: BoundedLattice, m: Monoid, sigma: Vec<usize>, connective: LatticeConnective },
}

#[derive(Clone, Debug)]
pub struct CheckSpec {
    pub name: String,
    pub span: Span,
    pub domain: DomainSpec,
    pub kind: CheckKind,
}

pub const CHECK_NAMES: &[&str] = &[
    "usubnorm",
    "subnorm",
    "usubconorm",
    "usubmonoid",
    "fsubmonoid",
    "asubmonoid",
    "subadditive",
    "uninorm",
    "nullnorm",
    "tnorm",
    "tconorm",
    "monoid",
    "closed",
    "monotoneb",
    "probe",
    "indist",
    "regular",
    "vaguebinary",
    "vaguemonoid",
    "commutative",
    "hom",
    "lsubmonoid",
];

/// A program whose definitions all constructed and whose checks are typed.
#[derive(Clone, Debug, Default)]
pub struct Checked {
    pub definitions: Vec<String>,
    env: HashMap<String, (Val, Span)>,
    pub checks: Vec<CheckSpec>,
}

impl Checked {
    pub fn get(&self, name: &str) -> Option<&Val> {
        self.env.get(name).map(|(v, _)| v)
    }

    pub fn func(&self, name: &str) -> Option<&Func> {
        match self.get(name) {
            Some(Val::Func(f)) => Some(f),
            _ => None,
        }
    }
}

pub fn elaborate(program: &Program, pol: &TolerancePolicy) -> Result<Checked, DslError> {
    let mut cx = Elab { env: HashMap::new(), pol: *pol };
    let mut definitions = Vec::new();
    let mut checks = Vec::new();
    for stmt in &program.stmts {
        match stmt {
            Stmt::Let { name, value, .. } => {
                if let Some((_, prev)) = cx.env.get(&name.name) {
                    return Err(DslError::Name {
                        span: name.span,
                        message: format!("`{}` is already defined at {prev}", name.name),
                    });
                }
                let val = match value {
                    Value::Piecewise { param, pieces, .. } => Val::Func(cx.piecewise(&name.name, param, pieces)?),
                    Value::Expr(e) => cx.value_named(e, Some(&name.name))?,
                };
                definitions.push(name.name.clone());
                cx.env.insert(name.name.clone(), (val, name.span));
            }
            Stmt::Check { name, args, domain, span } => checks.push(cx.check(name, args, domain.as_ref(), *span)?),
        }
    }
    Ok(Checked { definitions, env: cx.env, checks })
}

#[derive(Clone)]
enum Math1 {
    Ln,
    Exp,
    Sqrt,
    Abs,
}

fn math1(name: &str) -> Option<Math1> {
    match name {
        "ln" => Some(Math1::Ln),
        "exp" => Some(Math1::Exp),
        "sqrt" => Some(Math1::Sqrt),
        "abs" => Some(Math1::Abs),
        _ => None,
    }
}

/// A compiled numeric expression in at most one variable.
#[derive(Clone)]
enum Code {
    Const(f64),
    X,
    Neg(Box<Code>),
    Bin(BinOp, Box<Code>, Box<Code>),
    Math(Math1, Box<Code>),
    Min(Vec<Code>),
    Max(Vec<Code>),
    Apply(RealFn, Box<Code>),
}

impl Code {
    fn eval(&self, x: f64) -> f64 {
        match self {
            Code::Const(c) => *c,
            Code::X => x,
            Code::Neg(a) => -a.eval(x),
            Code::Bin(op, a, b) => {
                let (a, b) = (a.eval(x), b.eval(x));
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a / b,
                    BinOp::Pow => a.powf(b),
                }
            }
            Code::Math(m, a) => {
                let a = a.eval(x);
                match m {
                    Math1::Ln => a.ln(),
                    Math1::Exp => a.exp(),
                    Math1::Sqrt => a.sqrt(),
                    Math1::Abs => a.abs(),
                }
            }
            Code::Min(xs) => xs.iter().map(|c| c.eval(x)).fold(f64::INFINITY, f64::min),
            Code::Max(xs) => xs.iter().map(|c| c.eval(x)).fold(f64::NEG_INFINITY, f64::max),
            Code::Apply(f, a) => f(a.eval(x)),
        }
    }
}

struct PieceCode {
    lo: f64,
    hi: f64,
    lo_closed: bool,
    hi_closed: bool,
    code: Code,
}

impl PieceCode {
    fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }
}

/// Replaces a non-finite value at 0 or 1 by the infinity approached from the
/// interior, so that `-1/(2(x-1)) - 1` reads `+inf` at `x = 1`.
pub fn with_pole_limits(f: RealFn) -> RealFn {
    Arc::new(move |x| {
        let v = f(x);
        if v.is_finite() || !(x == 0.0 || x == 1.0) {
            return v;
        }
        let inner = if x == 0.0 { f64::from_bits(1) } else { 1.0 - f64::EPSILON / 2.0 };
        let w = f(inner);
        if w.is_nan() {
            v
        } else if w > 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

struct Elab {
    env: HashMap<String, (Val, Span)>,
    pol: TolerancePolicy,
}

fn mismatch(span: Span, expected: &str, found: &Val) -> DslError {
    DslError::TypeMismatch { span, expected: expected.into(), found: found.type_name().into() }
}

fn unknown(span: Span, what: &str, name: &str) -> DslError {
    DslError::Name { span, message: format!("unknown {what} `{name}`") }
}

fn expr_kind(e: &Expr) -> &'static str {
    match e {
        Expr::Tuple { .. } => "tuple",
        Expr::Table(_) => "table",
        Expr::Lambda { .. } => "function",
        Expr::Ctor { .. } => "constructor",
        _ => "expression",
    }
}

fn uninorm_err(span: Span, e: UninormError) -> DslError {
    match e {
        UninormError::GeneratorConstraint { constraint, detail } => DslError::constraint(span, constraint, detail),
        UninormError::DegenerateIdentity(_) | UninormError::OutOfUnitInterval { .. } => {
            DslError::constraint(span, "0 < e < 1", e)
        }
        UninormError::ParameterOrder(order) => DslError::constraint(span, order, "parameters out of order"),
        other => DslError::constraint(span, "uninorm construction", other),
    }
}

fn connective_err(span: Span, e: ConnectiveError) -> DslError {
    match e {
        ConnectiveError::GeneratorConstraint { constraint, detail } => DslError::constraint(span, constraint, detail),
        other => DslError::constraint(span, "generator", other),
    }
}

fn algebra_err(span: Span, e: AlgebraError) -> DslError {
    let constraint = match &e {
        AlgebraError::NotClosed { .. } => "closed under the operation",
        AlgebraError::NotAMonoid(_) => "monoid axioms",
        AlgebraError::IdentityNotInCarrier(_) => "identity in carrier",
        AlgebraError::MalformedTable { .. } => "square table over the carrier",
        _ => "carrier",
    };
    DslError::constraint(span, constraint, e)
}

fn vague_err(span: Span, e: VagueError) -> DslError {
    let constraint = match &e {
        VagueError::NotReflexive { .. } => "E(x, x) = 1",
        VagueError::NotSymmetric { .. } => "E(x, y) = E(y, x)",
        VagueError::RegularityRequired(_) => "E regular",
        VagueError::Shape { .. } => "square table",
        VagueError::OutOfRange { .. } => "values in [0, 1]",
        VagueError::CarrierMismatch => "same carrier",
        _ => "vague construction",
    };
    DslError::constraint(span, constraint, e)
}

impl Elab {
    fn lookup(&self, id: &Ident) -> Option<&Val> {
        self.env.get(&id.name).map(|(v, _)| v)
    }

    fn compile(&self, e: &Expr, param: Option<&str>) -> Result<Code, DslError> {
        Ok(match e {
            Expr::Num { value, .. } => Code::Const(*value),
            Expr::Inf { .. } => Code::Const(f64::INFINITY),
            Expr::Var(id) => {
                if Some(id.name.as_str()) == param {
                    Code::X
                } else {
                    match self.lookup(id) {
                        Some(Val::Num(v)) => Code::Const(*v),
                        Some(other) => return Err(mismatch(id.span, "number", other)),
                        None => return Err(unknown(id.span, "name", &id.name)),
                    }
                }
            }
            Expr::Neg { expr, .. } => Code::Neg(Box::new(self.compile(expr, param)?)),
            Expr::Bin { op, lhs, rhs, .. } => {
                Code::Bin(*op, Box::new(self.compile(lhs, param)?), Box::new(self.compile(rhs, param)?))
            }
            Expr::Paren { expr, .. } => self.compile(expr, param)?,
            Expr::Call { name, args, span } => {
                let mut code = args.iter().map(|a| self.compile(a, param)).collect::<Result<Vec<_>, _>>()?;
                let one = |code: &mut Vec<Code>| -> Result<Box<Code>, DslError> {
                    if code.len() == 1 {
                        Ok(Box::new(code.pop().unwrap()))
                    } else {
                        Err(DslError::TypeMismatch {
                            span: *span,
                            expected: "1 argument".into(),
                            found: format!("{} arguments", code.len()),
                        })
                    }
                };
                if let Some(m) = math1(&name.name) {
                    Code::Math(m, one(&mut code)?)
                } else if name.name == "min" || name.name == "max" {
                    if code.is_empty() {
                        return Err(DslError::TypeMismatch { span: *span, expected: "at least 1 argument".into(), found: "0 arguments".into() });
                    }
                    if name.name == "min" {
                        Code::Min(code)
                    } else {
                        Code::Max(code)
                    }
                } else {
                    match self.lookup(name) {
                        Some(Val::Func(f)) => Code::Apply(f.f.clone(), one(&mut code)?),
                        Some(other) => return Err(mismatch(name.span, "function", other)),
                        None => return Err(unknown(name.span, "function", &name.name)),
                    }
                }
            }
            other => {
                return Err(DslError::TypeMismatch { span: other.span(), expected: "number".into(), found: expr_kind(other).into() })
            }
        })
    }

    fn number(&self, e: &Expr) -> Result<f64, DslError> {
        Ok(self.compile(e, None)?.eval(f64::NAN))
    }

    fn lambda(&self, name: &str, param: &Ident, body: &Expr) -> Result<Func, DslError> {
        let code = self.compile(body, Some(&param.name))?;
        Ok(Func { name: name.to_string(), f: Arc::new(move |x| code.eval(x)) })
    }

    fn piecewise(&self, name: &str, param: &Ident, pieces: &[Piece]) -> Result<Func, DslError> {
        let mut compiled: Vec<PieceCode> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            let iv = &piece.interval;
            if iv.lo.value > iv.hi.value || (iv.lo.value == iv.hi.value && !(iv.lo_closed && iv.hi_closed)) {
                return Err(DslError::constraint(iv.span, "lo <= hi", "empty interval"));
            }
            if let Some(prev) = compiled.last() {
                let (lo, hi) = (iv.lo.value, prev.hi);
                if lo > hi || (lo == hi && !prev.hi_closed && !iv.lo_closed) {
                    return Err(DslError::DomainGap { span: iv.span });
                }
                if lo < hi || (lo == hi && prev.hi_closed && iv.lo_closed) {
                    return Err(DslError::DomainOverlap { span: iv.span });
                }
            }
            compiled.push(PieceCode {
                lo: iv.lo.value,
                hi: iv.hi.value,
                lo_closed: iv.lo_closed,
                hi_closed: iv.hi_closed,
                code: self.compile(&piece.body, Some(&param.name))?,
            });
        }
        let f: RealFn = Arc::new(move |x| match compiled.iter().find(|p| p.contains(x)) {
            Some(p) => p.code.eval(x),
            None => f64::NAN,
        });
        Ok(Func { name: name.to_string(), f })
    }

    fn value(&self, e: &Expr) -> Result<Val, DslError> {
        self.value_named(e, None)
    }

    fn value_named(&self, e: &Expr, name: Option<&str>) -> Result<Val, DslError> {
        match e {
            Expr::Var(id) => Ok(match self.lookup(id) {
                Some(v) => v.clone(),
                None => match math1(&id.name) {
                    Some(m) => Val::Func(Func {
                        name: id.name.clone(),
                        f: Arc::new(move |x| Code::Math(m.clone(), Box::new(Code::X)).eval(x)),
                    }),
                    None => Val::Symbol(id.name.clone()),
                },
            }),
            Expr::Paren { expr, .. } => self.value_named(expr, name),
            Expr::Lambda { param, body, .. } => Ok(Val::Func(self.lambda(name.unwrap_or("fn"), param, body)?)),
            Expr::Tuple { items, .. } => Ok(Val::Tuple(
                items.iter().map(|i| Ok((self.value(i)?, i.span()))).collect::<Result<_, DslError>>()?,
            )),
            Expr::Table(t) => Ok(Val::Table(self.table(t)?)),
            Expr::Ctor { kind, ctor, span } => self.ctor(kind, ctor, *span, name),
            Expr::Call { name: callee, .. } if self.lookup(callee).is_none() && math1(&callee.name).is_none() && callee.name != "min" && callee.name != "max" => {
                Err(unknown(callee.span, "function", &callee.name))
            }
            _ => Ok(Val::Num(self.number(e)?)),
        }
    }

    fn table(&self, t: &Table) -> Result<Vec<Vec<f64>>, DslError> {
        t.rows.iter().map(|row| row.iter().map(|e| self.number(e)).collect()).collect()
    }

    fn args(&self, args: &[Expr]) -> Result<Vec<(Val, Span)>, DslError> {
        args.iter().map(|a| Ok((self.value(a)?, a.span()))).collect()
    }

    fn ctor(&self, kind: &Ident, ctor: &Ctor, span: Span, bound: Option<&str>) -> Result<Val, DslError> {
        let pol = &self.pol;
        let label = bound.unwrap_or(kind.name.as_str()).to_string();
        let (cname, cspan, args): (&str, Span, Vec<(Val, Span)>) = match ctor {
            Ctor::Named { name, args } => (name.name.as_str(), name.span, match args {
                Some(a) => self.args(a)?,
                None => Vec::new(),
            }),
            Ctor::Args(a) => ("", span, self.args(a)?),
            Ctor::Table(t) => ("table", t.span, vec![(Val::Table(self.table(t)?), t.span)]),
        };
        let a = Args { args: &args, span, what: if cname.is_empty() { kind.name.clone() } else { format!("{} {}", kind.name, cname) } };
        match (kind.name.as_str(), cname) {
            ("tnorm", "gen") => {
                a.arity(1)?;
                let g = generator(&label, a.func(0)?, Monotonicity::Decreasing, pol, a.span_of(0))?;
                TNorm::from_generator(g, pol).map(Val::TNorm).map_err(|e| connective_err(span, e))
            }
            ("tnorm", n) if a.is_empty() => TNorm::builtin(n).map(Val::TNorm).ok_or_else(|| unknown(cspan, "t-norm", n)),
            ("tconorm", "gen") => {
                a.arity(1)?;
                let g = generator(&label, a.func(0)?, Monotonicity::Increasing, pol, a.span_of(0))?;
                TConorm::from_generator(g, pol).map(Val::TConorm).map_err(|e| connective_err(span, e))
            }
            ("tconorm", n) if a.is_empty() => TConorm::builtin(n).map(Val::TConorm).ok_or_else(|| unknown(cspan, "t-conorm", n)),
            ("uninorm", "umin" | "umax") => {
                a.arity(3)?;
                let (t, s, e) = (a.tnorm(0)?, a.tconorm(1)?, a.num(2)?);
                let u = if cname == "umin" { Uninorm::u_min(t, s, e) } else { Uninorm::u_max(t, s, e) };
                u.map(Val::Uninorm).map_err(|e| uninorm_err(span, e))
            }
            ("uninorm", "rep") => {
                a.arity_range(2, 3)?;
                let h = generator(&label, a.func(0)?, Monotonicity::Increasing, pol, a.span_of(0))?;
                let boundary = if a.len() == 3 { a.boundary(2)? } else { Boundary::Conjunctive };
                Uninorm::representable(h, a.num(1)?, boundary, pol).map(Val::Uninorm).map_err(|e| uninorm_err(span, e))
            }
            ("uninorm", "idem") => {
                a.arity_range(2, 3)?;
                let tie = if a.len() == 3 {
                    match a.symbol(2, &["takemin", "takemax"])? {
                        "takemin" => Tie::TakeMin,
                        _ => Tie::TakeMax,
                    }
                } else {
                    Tie::TakeMin
                };
                Uninorm::idempotent_arc(a.func(0)?.f.clone(), a.num(1)?, tie, pol).map(Val::Uninorm).map_err(|e| uninorm_err(span, e))
            }
            ("uninorm", "decreasing") => {
                a.arity(2)?;
                decreasing_structure(a.tnorm(0)?, a.num(1)?).map(Val::Uninorm).map_err(|e| uninorm_err(span, e))
            }
            ("uninorm", "uln" | "urational") => {
                a.arity_range(0, 1)?;
                let boundary = if a.len() == 1 { a.boundary(0)? } else { Boundary::Conjunctive };
                let h = if cname == "uln" { log_generator(pol) } else { rational_generator(pol) };
                Uninorm::representable(h, 0.5, boundary, pol).map(Val::Uninorm).map_err(|e| uninorm_err(span, e))
            }
            ("nullnorm", "") => {
                a.arity(3)?;
                Nullnorm::new(a.tconorm(0)?, a.num(1)?, a.tnorm(2)?)
                    .map(Val::Nullnorm)
                    .map_err(|e| DslError::constraint(span, "0 <= k <= 1", e))
            }
            ("monoid", "grid") => {
                a.arity(3)?;
                let n = a.count(1, 2)?;
                Monoid::grid(n, a.operator(0)?, a.num(2)?, pol).map(Val::Monoid).map_err(|e| algebra_err(span, e))
            }
            ("monoid", "on") => {
                a.arity(3)?;
                Monoid::from_operator(a.carrier(0)?, a.operator(1)?, a.num(2)?, pol)
                    .map(Val::Monoid)
                    .map_err(|e| algebra_err(span, e))
            }
            ("monoid", "max" | "min" | "add" | "leftzero") => {
                a.arity(1)?;
                let n = a.count(0, 1)?;
                Ok(Val::Monoid(match cname {
                    "max" => corpus::max_monoid(n),
                    "min" => corpus::min_monoid(n),
                    "add" => corpus::truncated_add(n),
                    _ => corpus::left_zero_with_identity(n),
                }))
            }
            ("monoid", "table") => {
                let rows = a.index_table(0)?;
                let n = rows.len();
                let carrier = Carrier::range(n).map_err(|e| algebra_err(span, e))?;
                let identity = (0..n)
                    .find(|&e| rows.get(e).is_some_and(|r| r.len() == n) && (0..n).all(|x| rows[e][x] == x && rows.get(x).and_then(|r| r.get(e)) == Some(&x)))
                    .ok_or_else(|| DslError::constraint(span, "identity element", "no row and column act as the identity"))?;
                Monoid::from_table(carrier, rows, identity).map(Val::Monoid).map_err(|e| algebra_err(span, e))
            }
            ("carrier", "grid" | "range") => {
                a.arity(1)?;
                let n = a.count(0, if cname == "grid" { 2 } else { 1 })?;
                let c = if cname == "grid" { Carrier::grid(n) } else { Carrier::range(n) };
                c.map(Val::Carrier).map_err(|e| algebra_err(span, e))
            }
            ("carrier", "discrete") => {
                a.arity(3)?;
                discrete_carrier(a.num(0)?, a.count(1, 1)?, a.count(2, 1)?).map(Val::Carrier).map_err(|e| algebra_err(span, e))
            }
            ("carrier", "table") => Carrier::from_values(&a.numbers(0)?).map(Val::Carrier).map_err(|e| algebra_err(span, e)),
            ("lattice", "chain") => {
                a.arity(1)?;
                Ok(Val::Lattice(BoundedLattice::chain(a.count(0, 1)?)))
            }
            ("lattice", "square") => {
                a.arity(0)?;
                Ok(Val::Lattice(BoundedLattice::boolean_square()))
            }
            ("indist", "table") => {
                let rows = match &args[0].0 {
                    Val::Table(t) => t.clone(),
                    _ => unreachable!("table constructor"),
                };
                let carrier = Carrier::range(rows.len()).map_err(|e| algebra_err(span, e))?;
                IndistinguishabilityOp::new(carrier, rows, pol).map(Val::Indist).map_err(|e| vague_err(span, e))
            }
            ("indist", "crisp") => {
                a.arity(1)?;
                Ok(Val::Indist(IndistinguishabilityOp::crisp(a.carrier(0)?)))
            }
            ("indist", "const") => {
                a.arity(2)?;
                let c = a.num(1)?;
                if !(0.0..=1.0).contains(&c) {
                    return Err(DslError::constraint(a.span_of(1), "values in [0, 1]", format!("got {c}")));
                }
                Ok(Val::Indist(IndistinguishabilityOp::constant(a.carrier(0)?, c)))
            }
            ("indist", "minbased" | "maxbased") => {
                a.arity(2)?;
                let (c, v) = (a.carrier(0)?, a.numbers(1)?);
                if v.len() != c.len() {
                    return Err(DslError::constraint(a.span_of(1), "one value per carrier element", format!("{} values for {} elements", v.len(), c.len())));
                }
                let e = if cname == "minbased" { corpus::min_based(c, &v, pol) } else { corpus::max_based(c, &v, pol) };
                e.map(Val::Indist).map_err(|e| vague_err(span, e))
            }
            ("vague", "from") => {
                a.arity(2)?;
                vague_from_monoid(&a.indist(0)?, &a.monoid(1)?, pol).map(Val::Vague).map_err(|e| vague_err(span, e))
            }
            ("vague", "crisp") => {
                a.arity(1)?;
                VagueOp::crisp(&a.monoid(0)?).map(Val::Vague).map_err(|e| vague_err(span, e))
            }
            ("fuzzyset", "compose") => {
                a.arity_range(3, 4)?;
                let convention = if a.len() == 4 {
                    match a.symbol(3, &["inverse", "negated"])? {
                        "negated" => InverseConvention::NegatedPseudoInverse,
                        _ => InverseConvention::GeneratorInverse,
                    }
                } else {
                    InverseConvention::GeneratorInverse
                };
                let h = generator("h", a.func(0)?, Monotonicity::Increasing, pol, a.span_of(0))?;
                let t = generator("t", a.func(2)?, Monotonicity::Decreasing, pol, a.span_of(2))?;
                let f = generator_membership(&h, a.func(1)?.f.clone(), &t, convention);
                Ok(Val::Fuzzy(FuzzyDef::Function { func: Func { name: label, f }, convention: Some(convention) }))
            }
            ("fuzzyset", "member") => {
                a.arity(1)?;
                Ok(Val::Fuzzy(FuzzyDef::Function { func: Func { name: label, f: a.func(0)?.f.clone() }, convention: None }))
            }
            ("fuzzyset", "table") => Ok(Val::Fuzzy(FuzzyDef::Table { name: label, values: a.numbers(0)? })),
            ("fuzzyset", "kernel") => {
                a.arity(3)?;
                let (f, target, e_prime) = (a.indices(0)?, a.indist(1)?, a.count(2, 0)?);
                if e_prime >= target.len() || f.iter().any(|&y| y >= target.len()) {
                    return Err(DslError::constraint(span, "f maps into the carrier of F", format!("F has {} elements", target.len())));
                }
                let values = f.iter().map(|&y| target.get(y, e_prime)).collect();
                Ok(Val::Fuzzy(FuzzyDef::Table { name: label, values }))
            }
            (k, n) => Err(unknown(cspan, &format!("{k} constructor"), if n.is_empty() { "(..)" } else { n })),
        }
    }

    fn check(&self, name: &Ident, args: &[Expr], domain: Option<&Domain>, span: Span) -> Result<CheckSpec, DslError> {
        let vals = self.args(args)?;
        let a = Args { args: &vals, span, what: name.name.clone() };
        let domain = match domain {
            None => DomainSpec::Grid(DEFAULT_GRID),
            Some(Domain::Grid { n, span }) => {
                if n.negative || n.value.fract() != 0.0 || n.value < 2.0 || !n.value.is_finite() {
                    return Err(DslError::constraint(*span, "grid size is an integer >= 2", format!("got {}", n.value)));
                }
                DomainSpec::Grid(n.value as usize)
            }
            Some(Domain::Samples { values, span }) => {
                let v: Vec<f64> = values.iter().map(|n| n.value).collect();
                if let Some(bad) = v.iter().find(|x| !(0.0..=1.0).contains(*x)) {
                    return Err(DslError::constraint(*span, "samples in [0, 1]", format!("got {bad}")));
                }
                Carrier::from_values(&v).map_err(|e| algebra_err(*span, e))?;
                DomainSpec::Samples(v)
            }
        };
        let kind = match name.name.as_str() {
            "usubnorm" | "subnorm" => {
                a.arity(3)?;
                CheckKind::Submonoid {
                    agg: Operator::Uninorm(a.uninorm(0)?),
                    monoid: MonoidSpec::Interval { op: Operator::TNorm(a.tnorm(1)?), identity: 1.0 },
                    sigma: a.fuzzy(2)?,
                }
            }
            "usubconorm" => {
                a.arity(3)?;
                CheckKind::Submonoid {
                    agg: Operator::Uninorm(a.uninorm(0)?),
                    monoid: MonoidSpec::Interval { op: Operator::TConorm(a.tconorm(1)?), identity: 0.0 },
                    sigma: a.fuzzy(2)?,
                }
            }
            "usubmonoid" => {
                a.arity(3)?;
                CheckKind::Submonoid { agg: Operator::Uninorm(a.uninorm(0)?), monoid: a.monoid_spec(1)?, sigma: a.fuzzy(2)? }
            }
            "fsubmonoid" => {
                a.arity(3)?;
                CheckKind::Submonoid { agg: Operator::Nullnorm(a.nullnorm(0)?), monoid: a.monoid_spec(1)?, sigma: a.fuzzy(2)? }
            }
            "asubmonoid" => {
                a.arity(3)?;
                CheckKind::Submonoid { agg: a.operator(0)?, monoid: a.monoid_spec(1)?, sigma: a.fuzzy(2)? }
            }
            "subadditive" => {
                a.arity(3)?;
                let u = a.uninorm(0)?;
                if !u.is_representable() {
                    return Err(DslError::constraint(a.span_of(0), "U representable", u.name()));
                }
                let t = a.tnorm(1)?;
                let t = t.generator().cloned().ok_or_else(|| DslError::constraint(a.span_of(1), "T has an additive generator", t.name()))?;
                CheckKind::Subadditive { u, t, sigma: a.fuzzy(2)? }
            }
            "uninorm" => {
                a.arity(1)?;
                CheckKind::UninormAxioms(a.uninorm(0)?)
            }
            "nullnorm" => {
                a.arity(1)?;
                CheckKind::NullnormAxioms(a.nullnorm(0)?)
            }
            "tnorm" => {
                a.arity(1)?;
                CheckKind::OperatorAxioms { op: Operator::TNorm(a.tnorm(0)?), identity: 1.0 }
            }
            "tconorm" => {
                a.arity(1)?;
                CheckKind::OperatorAxioms { op: Operator::TConorm(a.tconorm(0)?), identity: 0.0 }
            }
            "monoid" => {
                a.arity(1)?;
                CheckKind::MonoidAxioms(a.monoid(0)?)
            }
            "closed" => {
                a.arity(2)?;
                CheckKind::Closed { op: a.operator(0)?, subset: a.carrier(1)?.values() }
            }
            "monotoneb" => {
                a.arity(3)?;
                let direction = match a.symbol(2, &["decreasing", "increasing"])? {
                    "decreasing" => Direction::Decreasing,
                    _ => Direction::Increasing,
                };
                CheckKind::MonotoneB { e: a.uninorm(0)?.identity(), sigma: a.fuzzy(1)?, direction }
            }
            "probe" => {
                a.arity(1)?;
                CheckKind::Probe(a.fuzzy(0)?)
            }
            "indist" => {
                a.arity(2)?;
                CheckKind::Indist { agg: a.operator(0)?, e: a.indist(1)? }
            }
            "regular" => {
                a.arity(2)?;
                CheckKind::Regular { e: a.indist(0)?, m: a.monoid(1)? }
            }
            "vaguebinary" | "vaguemonoid" => {
                a.arity(3)?;
                let (agg, e, v) = (a.operator(0)?, a.indist(1)?, a.vague(2)?);
                if name.name == "vaguebinary" {
                    CheckKind::VagueBinary { agg, e, v }
                } else {
                    CheckKind::VagueMonoid { agg, e, v }
                }
            }
            "commutative" => {
                a.arity(4)?;
                CheckKind::Commutative { agg: a.operator(0)?, e: a.indist(1)?, v: a.vague(2)?, m: a.monoid(3)? }
            }
            "hom" => {
                a.arity(3)?;
                CheckKind::Hom { f: a.indices(0)?, src: a.pair(1)?, dst: a.pair(2)? }
            }
            "lsubmonoid" => {
                a.arity(4)?;
                let connective = match a.symbol(3, &["meet", "join"])? {
                    "meet" => LatticeConnective::Meet,
                    _ => LatticeConnective::Join,
                };
                CheckKind::LatticeSubmonoid { lat: a.lattice(0)?, m: a.monoid(1)?, sigma: a.indices(2)?, connective }
            }
            other => return Err(unknown(name.span, "check", other)),
        };
        Ok(CheckSpec { name: name.name.clone(), span, domain, kind })
    }
}

/// Wraps a script function as a generator on `[0, 1]`.
fn generator(name: &str, func: &Func, direction: Monotonicity, pol: &TolerancePolicy, span: Span) -> Result<ExtendedMonotoneFunction, DslError> {
    let constraint = match direction {
        Monotonicity::Increasing => "strictly increasing",
        Monotonicity::Decreasing => "strictly decreasing",
    };
    ExtendedMonotoneFunction::from_arc(name, direction, with_pole_limits(func.f.clone()), *pol)
        .map_err(|e| DslError::constraint(span, "defined on [0, 1]", e))
        .and_then(|g| {
            g.verify_strictly_monotone(&fuzzalg::numerics::uniform_grid(101).expect("valid grid"))
                .map_err(|e| DslError::constraint(span, constraint, e))?;
            Ok(g)
        })
}

struct Args<'a> {
    args: &'a [(Val, Span)],
    span: Span,
    what: String,
}

impl Args<'_> {
    fn len(&self) -> usize {
        self.args.len()
    }

    fn is_empty(&self) -> bool {
        self.args.is_empty()
    }

    fn span_of(&self, i: usize) -> Span {
        self.args.get(i).map(|a| a.1).unwrap_or(self.span)
    }

    fn arity(&self, n: usize) -> Result<(), DslError> {
        self.arity_range(n, n)
    }

    fn arity_range(&self, lo: usize, hi: usize) -> Result<(), DslError> {
        let n = self.args.len();
        if n < lo || n > hi {
            let expected = if lo == hi { format!("{lo} argument(s) for `{}`", self.what) } else { format!("{lo} to {hi} arguments for `{}`", self.what) };
            return Err(DslError::TypeMismatch { span: self.span, expected, found: format!("{n}") });
        }
        Ok(())
    }

    fn get(&self, i: usize) -> (&Val, Span) {
        let (v, s) = &self.args[i];
        (v, *s)
    }

    fn num(&self, i: usize) -> Result<f64, DslError> {
        match self.get(i) {
            (Val::Num(v), _) => Ok(*v),
            (Val::Symbol(s), span) => Err(unknown(span, "name", s)),
            (other, span) => Err(mismatch(span, "number", other)),
        }
    }

    /// A non-negative integer no smaller than `min`.
    fn count(&self, i: usize, min: usize) -> Result<usize, DslError> {
        let v = self.num(i)?;
        if v.fract() != 0.0 || v < min as f64 || !v.is_finite() {
            return Err(DslError::constraint(self.span_of(i), format!("integer >= {min}"), format!("got {v}")));
        }
        Ok(v as usize)
    }

    fn func(&self, i: usize) -> Result<&Func, DslError> {
        match self.get(i) {
            (Val::Func(f), _) => Ok(f),
            (Val::Symbol(s), span) => Err(unknown(span, "function", s)),
            (other, span) => Err(mismatch(span, "function", other)),
        }
    }

    fn symbol(&self, i: usize, allowed: &[&'static str]) -> Result<&'static str, DslError> {
        match self.get(i) {
            (Val::Symbol(s), span) => allowed
                .iter()
                .copied()
                .find(|a| a == s)
                .ok_or_else(|| DslError::Name { span, message: format!("unknown option `{s}`, expected one of {}", allowed.join(", ")) }),
            (other, span) => Err(mismatch(span, &allowed.join(" or "), other)),
        }
    }

    fn boundary(&self, i: usize) -> Result<Boundary, DslError> {
        Ok(match self.symbol(i, &["conjunctive", "disjunctive"])? {
            "conjunctive" => Boundary::Conjunctive,
            _ => Boundary::Disjunctive,
        })
    }

    fn tnorm(&self, i: usize) -> Result<TNorm, DslError> {
        match self.get(i) {
            (Val::TNorm(t), _) => Ok(t.clone()),
            (Val::Symbol(s), span) => TNorm::builtin(s).ok_or_else(|| unknown(span, "t-norm", s)),
            (other, span) => Err(mismatch(span, "t-norm", other)),
        }
    }

    fn tconorm(&self, i: usize) -> Result<TConorm, DslError> {
        match self.get(i) {
            (Val::TConorm(s), _) => Ok(s.clone()),
            (Val::Symbol(s), span) => TConorm::builtin(s).ok_or_else(|| unknown(span, "t-conorm", s)),
            (other, span) => Err(mismatch(span, "t-conorm", other)),
        }
    }

    fn uninorm(&self, i: usize) -> Result<Uninorm, DslError> {
        match self.get(i) {
            (Val::Uninorm(u), _) => Ok(u.clone()),
            (Val::Symbol(s), span) => Err(unknown(span, "uninorm", s)),
            (other, span) => Err(mismatch(span, "uninorm", other)),
        }
    }

    fn nullnorm(&self, i: usize) -> Result<Nullnorm, DslError> {
        match self.get(i) {
            (Val::Nullnorm(f), _) => Ok(f.clone()),
            (Val::Symbol(s), span) => Err(unknown(span, "nullnorm", s)),
            (other, span) => Err(mismatch(span, "nullnorm", other)),
        }
    }

    fn operator(&self, i: usize) -> Result<Operator, DslError> {
        match self.get(i) {
            (Val::TNorm(t), _) => Ok(Operator::TNorm(t.clone())),
            (Val::TConorm(s), _) => Ok(Operator::TConorm(s.clone())),
            (Val::Uninorm(u), _) => Ok(Operator::Uninorm(u.clone())),
            (Val::Nullnorm(f), _) => Ok(Operator::Nullnorm(f.clone())),
            (Val::Symbol(s), span) => TNorm::builtin(s)
                .map(Operator::TNorm)
                .or_else(|| TConorm::builtin(s).map(Operator::TConorm))
                .ok_or_else(|| unknown(span, "operator", s)),
            (other, span) => Err(mismatch(span, "operator", other)),
        }
    }

    fn monoid(&self, i: usize) -> Result<Monoid, DslError> {
        match self.get(i) {
            (Val::Monoid(m), _) => Ok(m.clone()),
            (Val::Symbol(s), span) => Err(unknown(span, "monoid", s)),
            (other, span) => Err(mismatch(span, "monoid", other)),
        }
    }

    fn monoid_spec(&self, i: usize) -> Result<MonoidSpec, DslError> {
        if let (Val::Monoid(m), _) = self.get(i) {
            return Ok(MonoidSpec::Finite(m.clone()));
        }
        let op = self.operator(i)?;
        match op.neutral() {
            Some(identity) => Ok(MonoidSpec::Interval { op, identity }),
            None => Err(DslError::constraint(self.span_of(i), "operation with an identity", op.name())),
        }
    }

    fn carrier(&self, i: usize) -> Result<Carrier, DslError> {
        match self.get(i) {
            (Val::Carrier(c), _) => Ok(c.clone()),
            (Val::Monoid(m), _) => Ok(m.carrier().clone()),
            (Val::Table(_) | Val::Tuple(_), span) => Carrier::from_values(&self.numbers(i)?).map_err(|e| algebra_err(span, e)),
            (Val::Symbol(s), span) => Err(unknown(span, "carrier", s)),
            (other, span) => Err(mismatch(span, "carrier", other)),
        }
    }

    fn numbers(&self, i: usize) -> Result<Vec<f64>, DslError> {
        match self.get(i) {
            (Val::Table(rows), span) => {
                if rows.len() == 1 || rows.iter().all(|r| r.len() == 1) {
                    Ok(rows.iter().flatten().copied().collect())
                } else {
                    Err(DslError::constraint(span, "a single row of numbers", format!("{} rows", rows.len())))
                }
            }
            (Val::Tuple(items), _) => items
                .iter()
                .map(|(v, s)| match v {
                    Val::Num(x) => Ok(*x),
                    other => Err(mismatch(*s, "number", other)),
                })
                .collect(),
            (Val::Symbol(s), span) => Err(unknown(span, "name", s)),
            (other, span) => Err(mismatch(span, "list of numbers", other)),
        }
    }

    fn indices(&self, i: usize) -> Result<Vec<usize>, DslError> {
        let span = self.span_of(i);
        self.numbers(i)?
            .into_iter()
            .map(|v| {
                if v >= 0.0 && v.fract() == 0.0 && v.is_finite() {
                    Ok(v as usize)
                } else {
                    Err(DslError::constraint(span, "element indices", format!("got {v}")))
                }
            })
            .collect()
    }

    fn index_table(&self, i: usize) -> Result<Vec<Vec<usize>>, DslError> {
        match self.get(i) {
            (Val::Table(rows), span) => rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| {
                            if v >= 0.0 && v.fract() == 0.0 && v.is_finite() {
                                Ok(v as usize)
                            } else {
                                Err(DslError::constraint(span, "element indices", format!("got {v}")))
                            }
                        })
                        .collect()
                })
                .collect(),
            (other, span) => Err(mismatch(span, "table", other)),
        }
    }

    fn lattice(&self, i: usize) -> Result<BoundedLattice, DslError> {
        match self.get(i) {
            (Val::Lattice(l), _) => Ok(l.clone()),
            (Val::Symbol(s), span) => Err(unknown(span, "lattice", s)),
            (other, span) => Err(mismatch(span, "lattice", other)),
        }
    }

    fn indist(&self, i: usize) -> Result<IndistinguishabilityOp, DslError> {
        match self.get(i) {
            (Val::Indist(e), _) => Ok(e.clone()),
            (Val::Symbol(s), span) => Err(unknown(span, "indistinguishability operator", s)),
            (other, span) => Err(mismatch(span, "indistinguishability operator", other)),
        }
    }

    fn vague(&self, i: usize) -> Result<VagueOp, DslError> {
        match self.get(i) {
            (Val::Vague(v), _) => Ok(v.clone()),
            (Val::Symbol(s), span) => Err(unknown(span, "vague operation", s)),
            (other, span) => Err(mismatch(span, "vague operation", other)),
        }
    }

    fn pair(&self, i: usize) -> Result<(VagueOp, IndistinguishabilityOp), DslError> {
        match self.get(i) {
            (Val::Tuple(items), span) if items.len() == 2 => {
                let inner = Args { args: items, span, what: self.what.clone() };
                Ok((inner.vague(0)?, inner.indist(1)?))
            }
            (other, span) => Err(mismatch(span, "pair (V, E)", other)),
        }
    }

    fn fuzzy(&self, i: usize) -> Result<FuzzyDef, DslError> {
        match self.get(i) {
            (Val::Fuzzy(f), _) => Ok(f.clone()),
            (Val::Func(f), _) => Ok(FuzzyDef::Function { func: f.clone(), convention: None }),
            (Val::Table(_), _) => Ok(FuzzyDef::Table { name: "table".into(), values: self.numbers(i)? }),
            (Val::Symbol(s), span) => Err(unknown(span, "fuzzy set", s)),
            (other, span) => Err(mismatch(span, "fuzzy set", other)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_str;

    fn elab(src: &str) -> Result<Checked, DslError> {
        elaborate(&parse_str(src)?, &TolerancePolicy::default())
    }

    #[test]
    fn arithmetic_and_functions() {
        let c = elab("let k = 1/2; let g = fn(x) max(x, k)^2 + ln(exp(1)); let s = sqrt;").unwrap();
        assert_eq!(c.get("k").map(|v| v.type_name()), Some("number"));
        assert!((c.func("g").unwrap().eval(0.25) - 1.25).abs() < 1e-15);
        assert_eq!(c.func("s").unwrap().eval(0.25), 0.5);
    }

    #[test]
    fn piecewise_brackets() {
        let c = elab("let p = piecewise(x) { [0, 0.5) -> 1; [0.5, 1] -> 2; };").unwrap();
        let p = c.func("p").unwrap();
        assert_eq!((p.eval(0.0), p.eval(0.5), p.eval(1.0)), (1.0, 2.0, 2.0));
        assert!(p.eval(1.5).is_nan());
    }

    #[test]
    fn gap_and_overlap() {
        let gap = elab("let p = piecewise(x) { [0, 0.4) -> 1;\n [0.5, 1] -> 2; };").unwrap_err();
        assert!(matches!(gap, DslError::DomainGap { span } if (span.line, span.column) == (2, 2)));
        let touch = elab("let p = piecewise(x) { [0, 0.5) -> 1; (0.5, 1] -> 2; };").unwrap_err();
        assert!(matches!(touch, DslError::DomainGap { .. }));
        let over = elab("let p = piecewise(x) { [0, 0.5] -> 1; [0.5, 1] -> 2; };").unwrap_err();
        assert!(matches!(over, DslError::DomainOverlap { .. }));
    }

    #[test]
    fn representable_needs_h_of_e_zero() {
        let err = elab(
            "let h = piecewise(x) { [0, 0.5) -> ln(2*x); [0.5, 1] -> -ln(2 - 2*x); };\nlet u = uninorm rep(h, 0.4, conjunctive);",
        )
        .unwrap_err();
        match err {
            DslError::ConstraintViolation { constraint, span, .. } => {
                assert_eq!(constraint, "h(e) = 0");
                assert_eq!(span.line, 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rational_pole_at_one() {
        let c = elab(
            "let h = piecewise(x) { [0, 0.5] -> 1 - 1/(2*x); (0.5, 1] -> -1/(2*(x - 1)) - 1; };\nlet u = uninorm rep(h, 0.5);",
        )
        .unwrap();
        let Some(Val::Uninorm(u)) = c.get("u") else { panic!() };
        assert!((fuzzalg::operator::BinaryOp::apply(u, 0.75, 0.5) - 0.75).abs() < 1e-9);
    }

    #[test]
    fn names_and_types() {
        assert!(matches!(elab("let a = b + 1;"), Err(DslError::Name { .. })));
        assert!(matches!(elab("let a = 1; let a = 2;"), Err(DslError::Name { .. })));
        assert!(matches!(elab("let u = uninorm umin(prod, max, 0.5);"), Err(DslError::Name { .. })));
        assert!(matches!(elab("let u = uninorm umin(1, max, 0.5);"), Err(DslError::TypeMismatch { .. })));
        assert!(matches!(elab("check frobnicate(1);"), Err(DslError::Name { .. })));
        assert!(elab("let u = uninorm umin(lukasiewicz, max, 0.5); check uninorm(u) on grid(11);").is_ok());
    }

    #[test]
    fn vague_declarations() {
        let c = elab(
            "let M = monoid max(2); let E = indist table { 1, 0.5, 0.5; 0.5, 1, 0.5; 0.5, 0.5, 1 };\n\
             let V = vague from(E, M); check vaguemonoid(min, E, V); check hom(table { 0, 1, 2 }, (V, E), (V, E));",
        )
        .unwrap();
        assert_eq!(c.checks.len(), 2);
        let err = elab("let E = indist table { 1, 0.5; 0.4, 1 };").unwrap_err();
        assert!(matches!(err, DslError::ConstraintViolation { ref constraint, .. } if constraint == "E(x, y) = E(y, x)"));
    }
}
