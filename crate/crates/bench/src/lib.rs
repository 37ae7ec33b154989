//! Benchmark host crate; the measurements live in `benches/invariants.rs`.
