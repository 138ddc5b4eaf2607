use std::env;

/// Default hard cap on denumerant table entries.
pub const DEFAULT_HORIZON_CAP: usize = 10_000_000;

/// Default cap on the exponent of gap power sums.
pub const DEFAULT_MU_CAP: u32 = 8;

/// Environment variable that overrides [`DEFAULT_HORIZON_CAP`].
pub const HORIZON_CAP_ENV: &str = "PNSG_HORIZON_CAP";

/// Resource limits shared by table builds and power sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub horizon_cap: usize,
    pub mu_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            horizon_cap: DEFAULT_HORIZON_CAP,
            mu_cap: DEFAULT_MU_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the horizon cap taken from `PNSG_HORIZON_CAP` when it
    /// is set to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(cap) = env::var(HORIZON_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
        {
            limits.horizon_cap = cap;
        }
        limits
    }

    pub fn with_horizon_cap(mut self, cap: usize) -> Self {
        self.horizon_cap = cap;
        self
    }

    pub fn with_mu_cap(mut self, cap: u32) -> Self {
        self.mu_cap = cap;
        self
    }
}
