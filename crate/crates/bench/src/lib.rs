//! Criterion benchmarks for `ultragraph-core`; see `benches/`.
