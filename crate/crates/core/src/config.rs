//! Size bounds shared by every enumeration.

use std::env;

/// Environment variable overriding [`Limits::max_ambient`].
pub const MAX_AMBIENT_ENV: &str = "PARASIG_MAX_AMBIENT";
/// Environment variable overriding [`Limits::orbit_limit`].
pub const ORBIT_LIMIT_ENV: &str = "PARASIG_ORBIT_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ambient dimension accepted for the classical families
    /// (`m + n` for AIII, `m` for BDI, `n` for CI and DIII).
    pub max_ambient: usize,
    /// Largest orbit `orbit_bfs` will build before giving up.
    pub orbit_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ambient: 12,
            orbit_limit: 10_000_000,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `PARASIG_MAX_AMBIENT` / `PARASIG_ORBIT_LIMIT`
    /// when those parse as positive integers.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = read_usize(MAX_AMBIENT_ENV) {
            limits.max_ambient = v;
        }
        if let Some(v) = read_usize(ORBIT_LIMIT_ENV) {
            limits.orbit_limit = v;
        }
        limits
    }
}

fn read_usize(key: &str) -> Option<usize> {
    env::var(key).ok()?.trim().parse().ok().filter(|&v| v > 0)
}
