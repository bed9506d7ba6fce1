//! Criterion benchmarks for the exact spectral routines; see `benches/`.
