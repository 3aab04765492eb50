use std::fmt;
use std::time::{Duration, Instant};

use fuzzalg::algebra::{check_monoid, closed_under, Monoid};
use fuzzalg::connectives::{TConorm, TNorm};
use fuzzalg::fuzzy_monoids::{
    check_binary_fuzzy_submonoid, check_f_fuzzy_submonoid, check_lattice_fuzzy_submonoid, characterize_subnorm_via_f,
    monotone_on_b, nonexistence_probe, probe_family_of, FuzzySubset, LatticeFuzzySubset, ProbeFamily,
};
use fuzzalg::numerics::TolerancePolicy;
use fuzzalg::nullnorms::check_nullnorm_axioms;
use fuzzalg::operator::{check_associative, check_commutative, check_identity, check_monotone, Operator};
use fuzzalg::report::{fmt_num, CheckReport, ConditionResult, Witness};
use fuzzalg::uninorms::{check_uninorm_axioms, shipped_uninorms};
use fuzzalg::vague::{
    check_commutativity_correspondence, check_homomorphism, check_indistinguishability, check_regular, check_vague_binary,
    check_vague_monoid, SearchPlan, VagueAggregation,
};

use crate::elab::{elaborate, CheckKind, CheckSpec, Checked, FuzzyDef, MonoidSpec};
use crate::error::{DslError, Span};

#[derive(Debug, Clone, Copy, Default)]
pub struct ExecOptions {
    pub pol: TolerancePolicy,
    /// Make a failed `sigma(e) = 1` fail the run.
    pub strict_identity: bool,
    pub plan: SearchPlan,
}


#[derive(Debug, Clone, PartialEq)]
pub enum LineKind {
    Condition { passed: bool, witness: Option<String>, fatal: bool },
    Note { holds: bool, detail: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub name: String,
    pub kind: LineKind,
}

impl Line {
    pub fn is_failure(&self) -> bool {
        matches!(self.kind, LineKind::Condition { passed: false, fatal: true, .. })
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            LineKind::Condition { passed: true, .. } => write!(f, "PASS {}", self.name),
            LineKind::Condition { passed: false, witness: Some(w), .. } => write!(f, "FAIL {} @ {w}", self.name),
            LineKind::Condition { passed: false, witness: None, .. } => write!(f, "FAIL {}", self.name),
            LineKind::Note { detail, .. } => write!(f, "NOTE {}: {detail}", self.name),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub span: Span,
    pub lines: Vec<Line>,
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        !self.lines.iter().any(Line::is_failure)
    }

    pub fn line(&self, name: &str) -> Option<&Line> {
        self.lines.iter().find(|l| l.name == name)
    }
}

/// Parses, elaborates and runs a script.
pub fn run_source(text: &str, opts: &ExecOptions) -> Result<Vec<CheckOutcome>, DslError> {
    let program = crate::parse_str(text)?;
    let checked = elaborate(&program, &opts.pol)?;
    execute(&checked, opts)
}

pub fn execute(checked: &Checked, opts: &ExecOptions) -> Result<Vec<CheckOutcome>, DslError> {
    checked.checks.iter().map(|c| execute_one(c, opts)).collect()
}

/// The text shown after `@`: the note alone for single-point witnesses that
/// carry one, the full witness otherwise.
pub fn witness_text(w: &Witness) -> String {
    if w.point.len() <= 1 && !w.detail.is_empty() {
        w.detail.clone()
    } else {
        w.to_string()
    }
}

fn slug(s: &str) -> String {
    s.to_lowercase().split_whitespace().collect::<Vec<_>>().join("-")
}

struct Out<'a> {
    check: &'a str,
    strict: bool,
    lines: Vec<Line>,
}

impl Out<'_> {
    fn condition(&mut self, c: &ConditionResult) {
        let (name, fatal) = match c.name.as_str() {
            "identity-condition" => ("identity-condition".to_string(), self.strict),
            "" => (self.check.to_string(), true),
            other => (format!("{}-{}", self.check, slug(other)), true),
        };
        self.lines.push(Line {
            name,
            kind: LineKind::Condition { passed: c.passed, witness: c.witness.as_ref().map(witness_text), fatal },
        });
    }

    fn verdict(&mut self, name: &str, passed: bool, witness: Option<String>) {
        let name = if name.is_empty() { self.check.to_string() } else { format!("{}-{name}", self.check) };
        self.lines.push(Line { name, kind: LineKind::Condition { passed, witness, fatal: true } });
    }

    fn note(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.lines.push(Line { name: format!("{}-{}", self.check, slug(name)), kind: LineKind::Note { holds, detail: detail.into() } });
    }

    fn report(&mut self, r: &CheckReport) {
        for c in &r.conditions {
            self.condition(c);
        }
        for o in &r.observations {
            self.note(&o.name, o.holds, o.detail.clone());
        }
    }
}

fn execute_one(spec: &CheckSpec, opts: &ExecOptions) -> Result<CheckOutcome, DslError> {
    let started = Instant::now();
    let pol = &opts.pol;
    let span = spec.span;
    let fail = |constraint: &str, e: &dyn fmt::Display| DslError::constraint(span, constraint, e);
    let mut out = Out { check: &spec.name, strict: opts.strict_identity, lines: Vec::new() };
    let domain = || spec.domain.carrier().map_err(|e| fail("domain", &e));
    let on_domain = |sigma: &FuzzyDef| -> Result<FuzzySubset, DslError> {
        sigma.realize(domain()?, pol).map_err(|e| fail("membership in [0, 1]", &e))
    };
    match &spec.kind {
        CheckKind::Submonoid { agg, monoid, sigma } => {
            let m = match monoid {
                MonoidSpec::Finite(m) => m.clone(),
                MonoidSpec::Interval { op, identity } => {
                    Monoid::assumed(domain()?, op.clone(), *identity, pol).map_err(|e| fail("identity in domain", &e))?
                }
            };
            let sigma = sigma.realize(m.carrier().clone(), pol).map_err(|e| fail("membership in [0, 1]", &e))?;
            let report = match agg {
                Operator::Nullnorm(f) => check_f_fuzzy_submonoid(f, &m, &sigma, pol),
                op => check_binary_fuzzy_submonoid(op, &op.name(), &m, &sigma, pol),
            }
            .map_err(|e| fail("submonoid check", &e))?;
            out.report(&report);
        }
        CheckKind::Subadditive { u, t, sigma } => {
            let sigma = on_domain(sigma)?;
            let grid = sigma.carrier().values();
            let c = characterize_subnorm_via_f(u, t, &sigma, &grid, pol).map_err(|e| fail("subadditivity check", &e))?;
            let mut direct = c.direct.clone();
            direct.name = "direct".into();
            out.condition(&direct);
            let w = c.subadditive.witness.as_ref().map(|w| {
                format!("a={} b={} f(a+b)={} f(a)+f(b)={}", w.a, w.b, w.lhs, w.rhs)
            });
            out.verdict("subadditivity", c.subadditive.holds, w);
            out.verdict(
                "agreement",
                c.agree(),
                (!c.agree()).then(|| format!("direct={} subadditive={}", c.direct.passed, c.subadditive.holds)),
            );
        }
        CheckKind::UninormAxioms(u) => {
            let grid = domain()?.values();
            out.report(&check_uninorm_axioms(u, u.identity(), &grid, pol));
        }
        CheckKind::NullnormAxioms(f) => {
            let grid = domain()?.values();
            out.report(&check_nullnorm_axioms(f, f.absorbing(), &grid, pol));
        }
        CheckKind::OperatorAxioms { op, identity } => {
            let grid = domain()?.values();
            out.condition(&check_commutative(op, &grid, pol, "commutativity"));
            out.condition(&check_associative(op, &grid, pol, "associativity"));
            out.condition(&check_monotone(op, &grid, pol, "monotonicity"));
            out.condition(&check_identity(op, *identity, &grid, pol, "identity"));
        }
        CheckKind::MonoidAxioms(m) => out.report(&check_monoid(m, pol)),
        CheckKind::Closed { op, subset } => {
            let mut c = closed_under(op, subset, pol);
            c.name.clear();
            out.condition(&c);
        }
        CheckKind::MonotoneB { e, sigma, direction } => {
            let sigma = on_domain(sigma)?;
            let mb = monotone_on_b(&sigma, *e, *direction, pol);
            let w = match (mb.witness, mb.endpoint) {
                (Some((x, y)), _) => Some(format!("({}, {}) breaks {direction:?} on B", fmt_num(x), fmt_num(y)).to_lowercase()),
                (None, false) => Some("endpoint value is not 1".into()),
                _ => None,
            };
            out.verdict("", mb.holds, w);
            out.note("b", true, format!("|B| = {}", mb.b.len()));
        }
        CheckKind::Probe(sigma) => {
            let sigma = on_domain(sigma)?;
            let family = match probe_family_of(&sigma, pol) {
                Some("identity") => ProbeFamily::IdentitySigma(TNorm::Minimum),
                Some(_) => ProbeFamily::ComplementSigma(TConorm::Maximum),
                None => return Err(fail("sigma(x) = x or sigma(x) = 1 - x", &sigma.name())),
            };
            let grid = sigma.carrier().values();
            let report = nonexistence_probe(&family, &shipped_uninorms(pol), &grid, pol);
            let survivor = report.outcomes.iter().find(|o| !o.fails).map(|o| format!("{} satisfies the inequality", o.candidate));
            out.verdict("", report.all_fail(), survivor);
            for o in &report.outcomes {
                out.note("candidate", o.fails, format!("{} fails={} at {}", o.candidate, o.fails, o.witness));
            }
        }
        CheckKind::Indist { agg, e } => {
            let a = VagueAggregation::new(agg.name(), agg.clone());
            let r = check_indistinguishability(&a, e, pol);
            out.report(&r.report);
            out.note("separates-points", r.separates_points, if r.separates_points { "E(x, y) < 1 for x != y" } else { "some E(x, y) = 1 with x != y" });
        }
        CheckKind::Regular { e, m } => out.report(&check_regular(e, m, pol).map_err(|err| fail("same carrier", &err))?),
        CheckKind::VagueBinary { agg, e, v } => {
            let a = VagueAggregation::new(agg.name(), agg.clone());
            out.report(&check_vague_binary(&a, e, v, pol, &opts.plan).map_err(|err| fail("same carrier", &err))?);
        }
        CheckKind::VagueMonoid { agg, e, v } => {
            let a = VagueAggregation::new(agg.name(), agg.clone());
            out.report(&check_vague_monoid(&a, e, v, pol, &opts.plan).map_err(|err| fail("same carrier", &err))?);
        }
        CheckKind::Commutative { agg, e, v, m } => {
            let a = VagueAggregation::new(agg.name(), agg.clone());
            let r = check_commutativity_correspondence(&a, e, v, m, pol).map_err(|err| fail("same carrier", &err))?;
            let mut vague = r.vague.clone();
            vague.name = "vague".into();
            out.condition(&vague);
            out.note("monoid", r.monoid_commutative, format!("monoid commutative: {}", r.monoid_commutative));
            out.verdict(
                "correspondence",
                r.agree(),
                (!r.agree()).then(|| format!("vague={} monoid={}", r.vague_commutative(), r.monoid_commutative)),
            );
        }
        CheckKind::Hom { f, src, dst } => {
            let r = check_homomorphism(f, (&src.0, &src.1), (&dst.0, &dst.1), pol).map_err(|err| fail("total map", &err))?;
            out.report(&r);
        }
        CheckKind::LatticeSubmonoid { lat, m, sigma, connective } => {
            let s = LatticeFuzzySubset::new(lat, sigma.clone()).map_err(|err| fail("lattice elements", &err))?;
            let r = check_lattice_fuzzy_submonoid(lat, m, &s, *connective).map_err(|err| fail("same carrier", &err))?;
            out.report(&r);
        }
    }
    Ok(CheckOutcome { name: spec.name.clone(), span, lines: out.lines, elapsed: started.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(src: &str) -> Vec<String> {
        run_source(src, &ExecOptions::default())
            .unwrap()
            .iter()
            .flat_map(|o| o.lines.iter().map(|l| l.to_string()))
            .collect()
    }

    #[test]
    fn tnorm_and_uninorm_axioms() {
        let out = lines("check tnorm(lukasiewicz) on grid(11); check uninorm(uninorm umin(product, probsum, 0.5)) on grid(11);");
        assert!(out.iter().all(|l| l.starts_with("PASS")), "{out:?}");
        assert!(out.contains(&"PASS tnorm-associativity".to_string()));
    }

    #[test]
    fn identity_condition_is_advisory() {
        let src = "let s = fn(x) 0.5*x; check asubmonoid(min, min, s) on grid(11);";
        let run = run_source(src, &ExecOptions::default()).unwrap();
        assert!(run[0].passed());
        assert_eq!(run[0].lines[0].to_string(), "PASS asubmonoid-inequality");
        assert_eq!(run[0].lines[1].to_string(), "FAIL identity-condition @ sigma(1)=0.5");
        let strict = run_source(src, &ExecOptions { strict_identity: true, ..Default::default() }).unwrap();
        assert!(!strict[0].passed());
    }

    #[test]
    fn closure_on_discrete_carrier() {
        let out = lines("let F = nullnorm(lukasiewicz, 0.5, lukasiewicz); check closed(F, carrier discrete(0.5, 2, 5));");
        assert_eq!(out, ["PASS closed"]);
        let out = lines("check closed(product, carrier table { 0, 0.5, 1 });");
        assert_eq!(out.len(), 1);
        assert!(out[0].starts_with("FAIL closed @ (0.5, 0.5)"));
    }

    #[test]
    fn vague_round() {
        let out = lines(
            "let M = monoid max(2); let E = indist crisp(M); let V = vague from(E, M);\n\
             check vaguemonoid(min, E, V); check commutative(min, E, V, M);",
        );
        assert!(out.iter().filter(|l| !l.starts_with("NOTE")).all(|l| l.starts_with("PASS")), "{out:?}");
    }
}
