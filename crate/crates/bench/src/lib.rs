//! Criterion benchmarks for latpuzzle; see `benches/`.
