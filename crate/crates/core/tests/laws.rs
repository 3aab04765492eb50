use fuzzalg::algebra::{check_monoid, discrete_carrier, BoundedLattice, Carrier, Monoid};
use fuzzalg::connectives::{
    lukasiewicz_tconorm_generator, lukasiewicz_tnorm_generator, product_tnorm_generator, TConorm, TNorm,
};
use fuzzalg::numerics::{uniform_grid, ExtendedMonotoneFunction, ExtendedReal, TolerancePolicy};
use fuzzalg::nullnorms::{check_nullnorm_axioms, Nullnorm};
use fuzzalg::operator::{check_associative, check_commutative, check_monotone, BinaryOp};
use fuzzalg::uninorms::{
    check_uninorm_axioms, log_generator, rational_generator, region_of, shipped_uninorms, Region, Tie, Uninorm,
};
use proptest::prelude::*;

fn pol() -> TolerancePolicy {
    TolerancePolicy::default()
}

fn generators() -> Vec<ExtendedMonotoneFunction> {
    let p = pol();
    vec![
        lukasiewicz_tnorm_generator(&p),
        lukasiewicz_tconorm_generator(&p),
        product_tnorm_generator(&p),
        log_generator(&p),
        rational_generator(&p),
    ]
}

#[test]
fn pseudo_inverse_round_trip() {
    let grid = uniform_grid(101).unwrap();
    for g in generators() {
        for &x in &grid {
            let y = g.eval(x).unwrap();
            let back = g.pseudo_inverse(y).unwrap();
            assert!((back - x).abs() <= 1e-6, "{} at {x}: {back}", g.name());
        }
    }
}

#[test]
fn bisection_matches_analytic_inverse() {
    let grid = uniform_grid(101).unwrap();
    for g in generators().into_iter().filter(|g| g.has_analytic_inverse()) {
        for &x in &grid {
            if let Some(y) = g.eval(x).unwrap().finite() {
                let a = g.pseudo_inverse(ExtendedReal::Finite(y)).unwrap();
                let b = g.bisect_inverse(y).unwrap();
                assert!((a - b).abs() <= 1e-9, "{} at y = {y}: {a} vs {b}", g.name());
            }
        }
    }
}

#[test]
fn extended_addition_laws() {
    use ExtendedReal::*;
    let vals = [NegInf, Finite(-1.0), Finite(0.0), Finite(1.0), PosInf];
    for &a in &vals {
        for &b in &vals {
            assert_eq!(a.checked_add(b).ok(), b.checked_add(a).ok());
            for &c in &vals {
                let l = a.checked_add(b).and_then(|ab| ab.checked_add(c));
                let r = b.checked_add(c).and_then(|bc| a.checked_add(bc));
                if let (Ok(l), Ok(r)) = (l, r) {
                    assert_eq!(l, r);
                }
            }
        }
    }
}

#[test]
fn builtin_tnorm_laws() {
    let p = pol();
    let g = uniform_grid(51).unwrap();
    for t in TNorm::builtins() {
        let n = t.name();
        assert!(check_commutative(&t, &g, &p, &n).passed, "{n}");
        assert!(check_monotone(&t, &g, &p, &n).passed, "{n}");
        assert!(check_associative(&t, &g, &p, &n).passed, "{n}");
    }
    for s in TConorm::builtins() {
        let n = s.name();
        assert!(check_commutative(&s, &g, &p, &n).passed, "{n}");
        assert!(check_monotone(&s, &g, &p, &n).passed, "{n}");
        assert!(check_associative(&s, &g, &p, &n).passed, "{n}");
    }
}

#[test]
fn generated_lukasiewicz_matches_closed_form() {
    let p = pol();
    let t = TNorm::from_generator(lukasiewicz_tnorm_generator(&p), &p).unwrap();
    let s = TConorm::from_generator(lukasiewicz_tconorm_generator(&p), &p).unwrap();
    let g = uniform_grid(101).unwrap();
    for &x in &g {
        for &y in &g {
            assert!((t.apply(x, y) - TNorm::Lukasiewicz.apply(x, y)).abs() <= 1e-9);
            assert!((s.apply(x, y) - TConorm::Lukasiewicz.apply(x, y)).abs() <= 1e-9);
        }
    }
}

#[test]
fn pointwise_chains() {
    let p = pol();
    let g = uniform_grid(51).unwrap();
    let ts = [TNorm::Drastic, TNorm::Lukasiewicz, TNorm::Product, TNorm::Minimum];
    let ss = [TConorm::Maximum, TConorm::ProbabilisticSum, TConorm::Lukasiewicz, TConorm::Drastic];
    for &x in &g {
        for &y in &g {
            for w in ts.windows(2) {
                assert!(p.leq(w[0].apply(x, y), w[1].apply(x, y)));
            }
            for w in ss.windows(2) {
                assert!(p.leq(w[0].apply(x, y), w[1].apply(x, y)));
            }
        }
    }
}

#[test]
fn shipped_uninorms_satisfy_axioms() {
    let p = pol();
    let g = uniform_grid(21).unwrap();
    for u in shipped_uninorms(&p) {
        let r = check_uninorm_axioms(&u, u.identity(), &g, &p);
        assert!(r.passed(), "{}\n{r}", u.name());
    }
}

#[test]
fn mixed_region_between_min_and_max() {
    let p = pol();
    let g = uniform_grid(21).unwrap();
    for u in shipped_uninorms(&p) {
        let e = u.identity();
        for &x in &g {
            for &y in &g {
                if matches!(region_of(e, x, y), Region::AOfE) {
                    let v = u.apply(x, y);
                    assert!(p.leq(x.min(y), v) && p.leq(v, x.max(y)), "{} at ({x}, {y})", u.name());
                }
            }
        }
    }
}

#[test]
fn representable_round_trip() {
    let p = pol();
    let g = uniform_grid(21).unwrap();
    for u in shipped_uninorms(&p).into_iter().filter(Uninorm::is_representable) {
        let h = u.generator().unwrap();
        for &x in &g {
            for &y in &g {
                let corner = (x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0);
                if corner {
                    continue;
                }
                let lhs = h.eval(u.apply(x, y)).unwrap();
                let rhs = h.eval(x).unwrap().checked_add(h.eval(y).unwrap()).unwrap();
                match (lhs.finite(), rhs.finite()) {
                    (Some(a), Some(b)) => assert!((a - b).abs() <= 1e-6 * (1.0 + b.abs()), "{} at ({x}, {y})", u.name()),
                    _ => assert_eq!(lhs, rhs),
                }
            }
        }
    }
}

#[test]
fn idempotent_uninorm_is_idempotent() {
    let p = pol();
    let u = Uninorm::idempotent(|x| 1.0 - x, 0.5, Tie::TakeMin, &p).unwrap();
    for x in uniform_grid(101).unwrap() {
        assert_eq!(u.apply(x, x), x);
    }
}

#[test]
fn nullnorm_family_axioms() {
    let p = pol();
    let g = uniform_grid(21).unwrap();
    for s in TConorm::builtins() {
        for t in TNorm::builtins() {
            for k in [0.25, 0.5, 0.75] {
                let f = Nullnorm::new(s.clone(), k, t.clone()).unwrap();
                let r = check_nullnorm_axioms(&f, k, &g, &p);
                assert!(r.passed(), "{}\n{r}", f.name());
                assert!(p.eq(f.apply(0.0, 1.0), k));
            }
        }
    }
}

#[test]
fn lattices_satisfy_laws() {
    assert!(BoundedLattice::chain(4).check_laws().passed());
    assert!(BoundedLattice::boolean_square().check_laws().passed());
}

#[test]
fn grid_monoids_pass_check() {
    let p = pol();
    for n in [2, 5, 11, 21] {
        assert!(check_monoid(&Monoid::grid(n, TNorm::Minimum, 1.0, &p).unwrap(), &p).passed());
        assert!(check_monoid(&Monoid::grid(n, TConorm::Maximum, 0.0, &p).unwrap(), &p).passed());
        assert!(check_monoid(&Monoid::grid(n, TNorm::Lukasiewicz, 1.0, &p).unwrap(), &p).passed());
    }
}

proptest! {
    #[test]
    fn discrete_carrier_shape(anchor in 0.01f64..0.99, n in 1usize..12, m in 1usize..12) {
        let c = discrete_carrier(anchor, n, m).unwrap();
        let v = c.values();
        prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(v[0], 0.0);
        prop_assert_eq!(*v.last().unwrap(), 1.0);
        prop_assert!(v.contains(&anchor));
    }

    #[test]
    fn table_monoids_pass_check(n in 2usize..7, modular in any::<bool>()) {
        let p = pol();
        let m = if modular {
            Monoid::from_index_fn(Carrier::range(n).unwrap(), 0, "cyclic", |a, b| (a + b) % n).unwrap()
        } else {
            Monoid::from_index_fn(Carrier::range(n).unwrap(), 0, "truncated", |a, b| (a + b).min(n - 1)).unwrap()
        };
        prop_assert!(check_monoid(&m, &p).passed());
    }

    #[test]
    fn uninorm_identity_law(e in 0.05f64..0.95, x in 0.0f64..=1.0) {
        let u = Uninorm::u_min(TNorm::Product, TConorm::ProbabilisticSum, e).unwrap();
        prop_assert!((u.apply(x, e) - x).abs() <= 1e-9);
        let v = Uninorm::u_max(TNorm::Lukasiewicz, TConorm::Maximum, e).unwrap();
        prop_assert!((v.apply(e, x) - x).abs() <= 1e-9);
    }

    #[test]
    fn nullnorm_absorbs(k in 0.0f64..=1.0, x in 0.0f64..=1.0) {
        let f = Nullnorm::new(TConorm::ProbabilisticSum, k, TNorm::Product).unwrap();
        prop_assert!((f.apply(x, k) - k).abs() <= 1e-9);
    }
}
