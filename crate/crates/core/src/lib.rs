//! Finite partial orders with certificate-producing solvers.
//!
//! The crate builds minimum chain covers (Perles' recursion for Dilworth's
//! theorem), minimum antichain covers (Mirsky layer peeling), L-perfect
//! bipartite matchings and systems of distinct representatives (via the
//! graph-to-poset reduction), and Erdős–Szekeres monotone subsequences.
//! Every solver output is a certificate that the verifiers in [`poset`],
//! [`hall`] and [`erdos_szekeres`] re-check independently, and the
//! exhaustive routines in [`oracle`] provide ground truth for small instances.

pub mod cli;
pub mod dilworth;
pub mod erdos_szekeres;
pub mod error;
pub mod hall;
pub mod io;
pub mod mirsky;
pub mod oracle;
pub mod poset;

pub use error::{Error, Result};
pub use poset::{AntichainCover, ChainCover, FinitePoset, Label};

/// Size limits for the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest carrier for the max-antichain / max-chain searches, and
    /// therefore for every solver that calls them.
    pub oracle: usize,
    /// Largest carrier for the minimum-cover partition searches.
    pub cover: usize,
    /// Largest left side for exhaustive Hall-condition subset enumeration.
    pub subset: usize,
    /// Carrier size above which loading a poset logs a warning.
    pub carrier_warn: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            oracle: 24,
            cover: 10,
            subset: 20,
            carrier_warn: 64,
        }
    }
}

impl Caps {
    pub(crate) fn check(size: usize, cap: usize, cap_name: &'static str) -> Result<()> {
        if size > cap {
            Err(Error::InstanceTooLarge {
                size,
                cap,
                cap_name,
            })
        } else {
            Ok(())
        }
    }
}
