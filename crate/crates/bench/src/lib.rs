//! Criterion benchmarks for `qalg-core` live under `benches/`.
