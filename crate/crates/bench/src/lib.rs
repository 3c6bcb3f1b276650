//! Criterion benchmarks for `cantor-core`; see `benches/`.
