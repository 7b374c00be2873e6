use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cyclowalk::{build_blocks, certify_infinite, walk_period, CycloNum, DEFAULT_T_MAX};
use cyclowalk_bench::{fourier, grover};

fn periods(c: &mut Criterion) {
    c.bench_function("walk_period grover n=3", |b| {
        let s = grover(3);
        b.iter(|| walk_period(black_box(&s), DEFAULT_T_MAX).unwrap())
    });
    c.bench_function("walk_period fourier n=3", |b| {
        let s = fourier(3);
        b.iter(|| walk_period(black_box(&s), DEFAULT_T_MAX).unwrap())
    });
}

fn certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify_infinite");
    for n in [2, 9, 16, 30] {
        group.bench_with_input(BenchmarkId::new("grover", n), &grover(n), |b, s| {
            b.iter(|| certify_infinite(s).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fourier", n), &fourier(n), |b, s| {
            b.iter(|| certify_infinite(s).unwrap())
        });
    }
    group.finish();
}

fn arithmetic(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclo_mul");
    for level in [12u64, 60, 210] {
        let x = CycloNum::from_int_coeffs(level, &[1, -2, 3, 0, 5, -1, 7]).scale_int(3);
        let y = CycloNum::zeta(level, 5) + CycloNum::ratio(level, 1, 3);
        group.bench_with_input(BenchmarkId::from_parameter(level), &(x, y), |b, (x, y)| {
            b.iter(|| black_box(x) * black_box(y))
        });
    }
    group.finish();
    c.bench_function("build_blocks fourier n=30", |b| {
        let s = fourier(30);
        b.iter(|| build_blocks(black_box(&s)).unwrap())
    });
}

criterion_group!(benches, periods, certificates, arithmetic);
criterion_main!(benches);
