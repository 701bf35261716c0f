use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use tricomi_core::exec::Execution;
use tricomi_core::fundsol::{Solution, SpacetimePoint};
use tricomi_core::quad::{integrate_bessel_tail, QuadSpec, SecondKind, TailSpec};

fn watson_params() -> Vec<TailSpec> {
    let mut v = Vec::new();
    for (mu, nu) in [(0.0, 0.0), (0.5, 1.0 / 3.0), (-0.5, 1.0 / 3.0), (0.0, 1.0 / 3.0)] {
        for a in [0.5, 1.0, 2.0] {
            v.push(TailSpec { lambda: -(mu + nu + 1.0), mu, nu, a, b: 1.0, second: SecondKind::K });
        }
    }
    v
}

fn grid_points() -> Vec<SpacetimePoint> {
    let mut v = Vec::new();
    for i in 0..200 {
        for j in 0..200 {
            let p = SpacetimePoint::on_ray(2, 3.0 * i as f64 / 199.0, -2.0 + 4.0 * j as f64 / 199.0).unwrap();
            v.push(p);
        }
    }
    v
}

fn sweeps(c: &mut Criterion) {
    let modes = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];
    let specs = watson_params();
    let q = QuadSpec::default();
    let mut g = c.benchmark_group("watson-sweep");
    for (name, exec) in modes {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| exec.map(&specs, |s| integrate_bessel_tail(s, 0.0, &q).map(|r| r.value).unwrap_or(f64::NAN)))
        });
    }
    g.finish();

    let pts = grid_points();
    let mut g = c.benchmark_group("grid-fill-n2");
    for (name, exec) in modes {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| exec.map(&pts, |p| Solution::FPlus.eval(2, black_box(p)).unwrap_or(f64::NAN)))
        });
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
