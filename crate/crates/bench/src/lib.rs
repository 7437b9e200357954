//! Criterion benchmarks for the screening pipeline; see `benches/`.
