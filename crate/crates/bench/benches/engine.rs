use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qalg_core::presentations::{rel_10, rel_4};
use qalg_core::{graph_presentation, parse_polynomial, qf_presentation, Graph, NodeSet, TruncatedIdealBasis};

fn engine(c: &mut Criterion) {
    let k3 = qf_presentation(&Graph::complete(3).unwrap().to_complex()).unwrap();
    c.bench_function("truncated ideal, Q(K_3), degree 3", |b| {
        b.iter(|| TruncatedIdealBasis::new(black_box(&k3), 3).unwrap())
    });
    let c4 = graph_presentation(&Graph::cycle(4).unwrap()).unwrap();
    c.bench_function("truncated ideal, graph C_4, degree 3", |b| {
        b.iter(|| TruncatedIdealBasis::new(black_box(&c4), 3).unwrap())
    });
    let basis = TruncatedIdealBasis::new(&c4, 3).unwrap();
    let q = parse_polynomial("[u({1,2}),u({3,4})]*u({2}) - u({1})*[u({1}),u({2})]", 4).unwrap();
    c.bench_function("normal form, graph C_4, degree 3", |b| b.iter(|| basis.normal_form(black_box(&q)).unwrap()));
}

fn builders(c: &mut Criterion) {
    let a = NodeSet::from_elems(5, &[3, 4, 5]).unwrap();
    c.bench_function("rel_4, |A|=3", |b| b.iter(|| rel_4(black_box(a), 1, 2).unwrap()));
    c.bench_function("rel_10, |A|=3", |b| b.iter(|| rel_10(black_box(a), 1, 2).unwrap()));
    let p = rel_4(a, 1, 2).unwrap();
    c.bench_function("polynomial product", |b| b.iter(|| black_box(&p) * black_box(&p)));
}

criterion_group!(benches, engine, builders);
criterion_main!(benches);
