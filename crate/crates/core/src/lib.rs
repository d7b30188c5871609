//! Full flag codes over prime fields.
//!
//! * [`gfq`]: prime-field linear algebra, canonical subspaces, subspace metrics.
//! * [`flags`]: flags, flag codes, flag distance, projected codes.
//! * [`paths`]: the distance support and distance paths of flag pairs.
//! * [`ferrers`]: the Ferrers frame, embedded partitions, staircases and splittings.
//! * [`durfee`]: Durfee rectangles and the code-level analysis built on them.
//! * [`codefile`]: text and JSON code files.
//! * [`random`] and [`verify`]: random codes and the property harness.

pub mod codefile;
pub mod durfee;
pub mod error;
pub mod ferrers;
pub mod flags;
pub mod gfq;
pub mod paths;
pub mod random;
pub mod verify;

use serde::{Deserialize, Serialize};

pub use error::{Error, Result};

/// Upper bounds on `n` for exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Pure combinatorics: path and partition enumeration.
    pub max_combinatorial_n: usize,
    /// Exhaustive work over actual flags.
    pub max_flag_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_combinatorial_n: 14,
            max_flag_n: 8,
        }
    }
}
