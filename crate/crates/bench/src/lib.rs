//! Shared inputs for the criterion benchmarks.

/// `(n, s)` pairs timed by the generation benchmark, smallest first.
pub const GENERATE_CASES: &[(usize, u32)] = &[(6, 2), (6, 3), (5, 4)];
