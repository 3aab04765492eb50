use fuzzalg::connectives::{TConorm, TNorm};
use fuzzalg::fuzzy_monoids::{check_a_fuzzy_submonoid, DEFAULT_BUDGET};
use fuzzalg::numerics::TolerancePolicy;
use fuzzalg::nullnorms::Nullnorm;
use fuzzalg::operator::Iterated;
use fuzzalg::sampling::seeded;
use fuzzalg::uninorms::{log_uninorm, Boundary, Uninorm};
use fuzzalg::vague::corpus::{candidates, monoids};
use fuzzalg::vague::*;

fn pol() -> TolerancePolicy {
    TolerancePolicy::default()
}

/// Aggregations paired with the band of off-diagonal values that can make an
/// indistinguishability operator for them.
fn aggregations() -> Vec<(VagueAggregation, f64, f64)> {
    let p = pol();
    vec![
        (VagueAggregation::new("min", TNorm::Minimum), 0.0, 1.0),
        (VagueAggregation::new("prod", TNorm::Product), 0.0, 1.0),
        (VagueAggregation::new("luk", TNorm::Lukasiewicz), 0.0, 1.0),
        (
            VagueAggregation::new("umin", Uninorm::u_min(TNorm::Lukasiewicz, TConorm::Lukasiewicz, 0.5).unwrap()),
            0.0,
            0.5,
        ),
        (VagueAggregation::new("up", log_uninorm(Boundary::Conjunctive, &p)), 0.0, 0.5),
        (
            VagueAggregation::new("null", Nullnorm::new(TConorm::Maximum, 0.3, TNorm::Product).unwrap()),
            0.3,
            1.0,
        ),
    ]
}

#[test]
fn corpus_properties() {
    let p = pol();
    let plan = SearchPlan::default();
    let mut instances = 0;
    let mut separating = 0;
    for (mi, m) in monoids().into_iter().enumerate() {
        for (a, lo, hi) in aggregations() {
            for seed in 0..2u64 {
                let mut rng = seeded(seed * 31 + mi as u64);
                for e in candidates(m.carrier(), lo, hi, &mut rng, &p) {
                    let ind = check_indistinguishability(&a, &e, &p);
                    if !ind.report.passed() || !check_regular(&e, &m, &p).unwrap().passed() {
                        continue;
                    }
                    instances += 1;
                    let v = vague_from_monoid(&e, &m, &p).unwrap();
                    let vm = check_vague_monoid(&a, &e, &v, &p, &plan).unwrap();
                    assert!(vm.passed(), "{} / {}:\n{vm}", a.name(), m.name());

                    let id = m.identity_index();
                    for x in 0..m.len() {
                        for y in 0..m.len() {
                            assert_eq!(v.get(x, id, y), e.get(x, y));
                        }
                    }

                    if !ind.separates_points {
                        continue;
                    }
                    separating += 1;
                    for x in 0..m.len() {
                        for y in 0..m.len() {
                            assert!(v.ones(x, y, &p).len() <= 1);
                        }
                    }
                    assert_eq!(vague_identities(&v, &p), vec![id]);
                    let back = associated_monoid(&v, &e, &p).unwrap();
                    assert_eq!(back.table(), m.table());

                    let c = check_commutativity_correspondence(&a, &e, &v, &back, &p).unwrap();
                    assert!(c.agree(), "{} / {}", a.name(), m.name());

                    let ident: Vec<usize> = (0..m.len()).collect();
                    let k = kernel(m.carrier(), &ident, &e, id, &p).unwrap();
                    let binary = Iterated::new(fuzzalg::operator::CustomOp::new(a.name(), {
                        let a = a.clone();
                        move |x, y| a.binary(x, y)
                    }), 2, a.name());
                    let r = check_a_fuzzy_submonoid(&binary, &back, &k, &p, DEFAULT_BUDGET).unwrap();
                    assert!(r.passed(), "kernel of id, {} / {}:\n{r}", a.name(), m.name());

                    let crisp = IndistinguishabilityOp::crisp(m.carrier().clone());
                    let vc = VagueOp::crisp(&m).unwrap();
                    assert!(check_homomorphism(&ident, (&vc, &crisp), (&v, &e), &p).unwrap().passed());
                }
            }
        }
    }
    assert!(instances >= 100, "only {instances} instances");
    assert!(separating >= 50, "only {separating} separating instances");
}

#[test]
fn identity_map_under_pointwise_order() {
    let p = pol();
    let m = fuzzalg::vague::corpus::max_monoid(3);
    let small = fuzzalg::vague::corpus::min_based(m.carrier().clone(), &[0.1, 0.2, 0.4, 0.4], &p).unwrap();
    let big = fuzzalg::vague::corpus::min_based(m.carrier().clone(), &[0.3, 0.5, 0.6, 0.6], &p).unwrap();
    assert!(small.leq_pointwise(&big, &p));
    let vs = vague_from_monoid(&small, &m, &p).unwrap();
    let vb = vague_from_monoid(&big, &m, &p).unwrap();
    let r = check_homomorphism(&[0, 1, 2, 3], (&vs, &small), (&vb, &big), &p).unwrap();
    assert!(r.passed());
    assert!(!check_homomorphism(&[0, 1, 2, 3], (&vb, &big), (&vs, &small), &p).unwrap().passed());
}
