//! Fixtures shared by the benchmarks in `benches/`.

use lenslab::params::{enumerate, SurgeryParameter};

/// Non-trivial parameters with `p` in `[p_min, p_max]`.
pub fn params_between(p_min: i64, p_max: i64) -> Vec<SurgeryParameter> {
    enumerate(p_max).into_iter().filter(|s| s.p >= p_min && !s.is_trivial()).collect()
}
