use std::path::Path;

use flagcodes::Limits;
use serde::Deserialize;

pub const CONFIG_ENV: &str = "FLAGCODES_CONFIG";

/// Optional TOML file named by `FLAGCODES_CONFIG`.
///
/// ```toml
/// max_combinatorial_n = 14
/// max_flag_n = 8
/// flag_fields = [2, 3]
///
/// [verify]
/// n_max = 7
/// q = [2, 3]
/// trials = 1000
/// seed = 0
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub max_combinatorial_n: usize,
    pub max_flag_n: usize,
    pub flag_fields: Vec<u32>,
    pub verify: VerifyDefaults,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyDefaults {
    pub n_max: usize,
    pub q: Vec<u32>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        let limits = Limits::default();
        Self {
            max_combinatorial_n: limits.max_combinatorial_n,
            max_flag_n: limits.max_flag_n,
            flag_fields: vec![2, 3],
            verify: VerifyDefaults::default(),
        }
    }
}

impl Default for VerifyDefaults {
    fn default() -> Self {
        Self {
            n_max: 7,
            q: vec![2, 3],
            trials: 1000,
            seed: 0,
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }

    /// Reads the file named by the environment variable, defaults when unset.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }

    pub fn limits(&self) -> Limits {
        Limits {
            max_combinatorial_n: self.max_combinatorial_n,
            max_flag_n: self.max_flag_n,
        }
    }
}
