use criterion::{criterion_group, criterion_main};

criterion_group!(benches, salpeter_bench::exact, salpeter_bench::ladder, salpeter_bench::spectrum, salpeter_bench::quadrature);
criterion_main!(benches);
