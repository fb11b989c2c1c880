//! Criterion benchmarks for `tonal-core`; see `benches/`.
