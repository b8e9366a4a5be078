//! Criterion benchmarks for `decolimit-core`; see `benches/`.
