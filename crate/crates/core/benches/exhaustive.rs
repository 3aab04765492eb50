use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fuzzalg::connectives::TNorm;
use fuzzalg::numerics::{uniform_grid, TolerancePolicy};
use fuzzalg::operator::BinaryOp;
use fuzzalg::par::{first_tuple_match_seq, TupleSpace};
use fuzzalg::vague::corpus::{max_monoid, min_based};
use fuzzalg::vague::{vague_from_monoid, VagueOp};

fn associativity_witness(g: &[f64], t: &TNorm, pol: &TolerancePolicy, s: TupleSpace, par: bool) -> Option<[usize; 3]> {
    let probe = |c: &[usize]| {
        let (x, y, z) = (g[c[0]], g[c[1]], g[c[2]]);
        (!pol.eq(t.apply(t.apply(x, y), z), t.apply(x, t.apply(y, z)))).then(|| [c[0], c[1], c[2]])
    };
    #[cfg(feature = "parallel")]
    if par {
        return fuzzalg::par::first_tuple_match_par(s, probe);
    }
    let _ = par;
    first_tuple_match_seq(s, probe)
}

fn vague_associativity(v: &VagueOp, s: TupleSpace, par: bool) -> Option<u64> {
    let probe = |c: &[usize]| {
        let lhs = [v.get(c[1], c[2], c[3]), v.get(c[0], c[3], c[4]), v.get(c[0], c[1], c[5]), v.get(c[5], c[2], c[6])]
            .into_iter()
            .fold(1.0, f64::min);
        (lhs > 1.0).then(|| s.encode(c))
    };
    #[cfg(feature = "parallel")]
    if par {
        return fuzzalg::par::first_tuple_match_par(s, probe);
    }
    let _ = par;
    first_tuple_match_seq(s, probe)
}

fn bench(c: &mut Criterion) {
    let pol = TolerancePolicy::default();
    let g = uniform_grid(81).unwrap();
    let space = TupleSpace::new(g.len(), 3);
    let mut group = c.benchmark_group("tnorm-associativity-81");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| black_box(associativity_witness(&g, &TNorm::Product, &pol, space, false))));
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| b.iter(|| black_box(associativity_witness(&g, &TNorm::Product, &pol, space, true))));
    group.finish();

    let m = max_monoid(7);
    let e = min_based(m.carrier().clone(), &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8], &pol).unwrap();
    let v = vague_from_monoid(&e, &m, &pol).unwrap();
    let space = TupleSpace::new(m.len(), 7);
    let mut group = c.benchmark_group("vague-associativity-8");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| black_box(vague_associativity(&v, space, false))));
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| b.iter(|| black_box(vague_associativity(&v, space, true))));
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
