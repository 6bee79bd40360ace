//! Criterion benchmarks for the enumeration engine; see `benches/`.
