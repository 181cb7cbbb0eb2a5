//! Criterion benchmarks for `fockcrystal`; see `benches/`.
