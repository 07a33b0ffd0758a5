use std::hint::black_box;

use biinterval_bench::{awkward_raw_pair, half_half_region, integer_gap_region};
use biinterval_core::{
    canonicalize, classify_frequency, classify_region, enumerate_frequencies, ft_indicator,
    gram_matrix, parseval_sum, rat, reconcile, s_tilde_partial, verify_tiling, CaseSelector,
    RatInterval, RealWindow, TilingSpec,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_canonicalize(c: &mut Criterion) {
    let raw = awkward_raw_pair();
    c.bench_function("canonicalize_awkward_pair", |b| {
        b.iter(|| canonicalize(black_box(&raw)).unwrap())
    });
    let region = integer_gap_region();
    c.bench_function("classify_region", |b| {
        b.iter(|| classify_region(black_box(&region)))
    });
}

fn bench_fourier(c: &mut Criterion) {
    let region = half_half_region();
    c.bench_function("ft_indicator", |b| {
        b.iter(|| ft_indicator(black_box(&region), 7.25))
    });
    let lambda = rat(11, 3);
    c.bench_function("classify_frequency", |b| {
        b.iter(|| classify_frequency(black_box(&region), black_box(&lambda)))
    });
}

fn bench_spectra(c: &mut Criterion) {
    let region = half_half_region();
    let spectrum = biinterval_core::build_spectrum(&region, CaseSelector::CaseII, Some(1)).unwrap();
    c.bench_function("parseval_sum_k1000", |b| {
        b.iter(|| parseval_sum(black_box(&region), &spectrum, &rat(1, 6), 1000))
    });
    let freqs = enumerate_frequencies(&spectrum, &rat(30, 1));
    c.bench_function("gram_matrix_31", |b| {
        b.iter(|| gram_matrix(black_box(&region), black_box(&freqs)))
    });
    c.bench_function("s_tilde_k1000", |b| {
        b.iter(|| s_tilde_partial(0.37, 1000).unwrap())
    });
}

fn bench_tiling(c: &mut Criterion) {
    let region = half_half_region();
    let tiling = TilingSpec::new(rat(3, 1), vec![rat(0, 1), rat(1, 2), rat(1, 1)]).unwrap();
    let window = RatInterval::new(rat(0, 1), rat(30, 1));
    c.bench_function("verify_tiling_10_periods", |b| {
        b.iter(|| verify_tiling(black_box(&region), &tiling, &window))
    });
}

fn bench_scan(c: &mut Criterion) {
    let region = half_half_region();
    c.bench_function("reconcile_window_0_2", |b| {
        b.iter(|| {
            reconcile(
                black_box(&region),
                RealWindow::new(0.0, 2.0),
                1e-3,
                1e-6,
                1000,
            )
        })
    });
}

criterion_group!(
    benches,
    bench_canonicalize,
    bench_fourier,
    bench_spectra,
    bench_tiling,
    bench_scan
);
criterion_main!(benches);
