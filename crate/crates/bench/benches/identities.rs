use std::hint::black_box;

use bifib_bench::{fixture, operands};
use bifib_core::fib_octonion::{catalan_general, catalan_lhs, oct_binet, oct_o, CatalanForm};
use bifib_core::series::genfun_check;
use bifib_core::verify::{self, Suite, VerifyConfig};
use bifib_core::SeqCache;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn octonion_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("octonion_product");
    for n in [10i64, 40] {
        let mut f = fixture("1/2", "3", n + 2);
        let (p, q) = operands(&mut f, n);
        group.bench_with_input(BenchmarkId::new("table", n), &n, |bch, _| {
            bch.iter(|| black_box(&p) * black_box(&q))
        });
        group.bench_with_input(BenchmarkId::new("cayley_dickson", n), &n, |bch, _| {
            bch.iter(|| black_box(&p).mul_cayley_dickson(black_box(&q)))
        });
    }
    group.finish();
}

fn sequence_terms(c: &mut Criterion) {
    let mut group = c.benchmark_group("octonion_term");
    let f = fixture("2", "3", 0);
    for n in [10u32, 40] {
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |bch, &n| {
            bch.iter(|| {
                let mut cache = SeqCache::new(f.params.clone());
                oct_o(&mut cache, n as i64)
            })
        });
        group.bench_with_input(BenchmarkId::new("binet", n), &n, |bch, &n| {
            bch.iter(|| oct_binet(&f.constants, &f.params, n).unwrap())
        });
    }
    group.finish();
}

fn catalan(c: &mut Criterion) {
    let mut f = fixture("2", "3", 60);
    c.bench_function("catalan/product_side", |bch| {
        bch.iter(|| catalan_lhs(&mut f.cache, black_box(20), 4))
    });
    c.bench_function("catalan/closed_form", |bch| {
        bch.iter(|| {
            catalan_general(
                &f.constants,
                &f.params,
                black_box(20),
                4,
                CatalanForm::BetaFirst,
            )
            .unwrap()
        })
    });
}

fn generating_function(c: &mut Criterion) {
    let f = fixture("2", "3", 0);
    c.bench_function("genfun_check/order_64", |bch| {
        bch.iter(|| {
            let mut cache = SeqCache::new(f.params.clone());
            genfun_check(&mut cache, 64).unwrap()
        })
    });
}

fn suites(c: &mut Criterion) {
    let grid = verify::default_grid();
    let config = VerifyConfig {
        n_max: 20,
        suites: vec![Suite::Binet, Suite::Sums],
        ..VerifyConfig::default()
    };
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("binet_and_sums_grid", |bch| {
        bch.iter(|| verify::run(&grid, &config).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    octonion_products,
    sequence_terms,
    catalan,
    generating_function,
    suites
);
criterion_main!(benches);
