use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use colorful_assoc::verify::{check_diamond, check_strong_flag_connectivity};
use colorful_assoc::{poset, Graph, Palette};

fn cases() -> Vec<(&'static str, Graph)> {
    vec![
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
        ("P5", Graph::path(5)),
    ]
}

/// Runs `f` on the global pool and on a one-thread pool.
fn compare<F: Fn(&Graph) + Sync>(c: &mut Criterion, name: &str, f: F) {
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    for (label, g) in cases() {
        group.bench_with_input(BenchmarkId::new("parallel", label), &g, |b, g| b.iter(|| f(g)));
        group.bench_with_input(BenchmarkId::new("one-thread", label), &g, |b, g| {
            b.iter(|| single.install(|| f(g)))
        });
    }
    group.finish();
}

fn build(c: &mut Criterion) {
    compare(c, "build_collection", |g| {
        let p = Palette::full(g.node_count() - 1);
        poset::build_collection(g, &p, poset::DEFAULT_MAX_FACES).unwrap();
    });
}

fn axioms(c: &mut Criterion) {
    compare(c, "diamond_and_flags", |g| {
        let p = Palette::full(g.node_count() - 1);
        let comp = &poset::build_collection(g, &p, poset::DEFAULT_MAX_FACES).unwrap()[0];
        check_diamond(&comp.poset);
        check_strong_flag_connectivity(&comp.poset);
    });
}

criterion_group!(benches, build, axioms);
criterion_main!(benches);
