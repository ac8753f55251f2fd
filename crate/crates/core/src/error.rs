use alloc::string::String;

use crate::weights::Weight;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    /// A coefficient was requested beyond the order a series is known to.
    #[error("coefficient of q^{exponent} requested from a series truncated at order {order}")]
    Truncated { exponent: i64, order: u32 },

    #[error("enumeration of partitions of {m} exceeds the configured cap {cap}")]
    EnumerationCap { m: u32, cap: u32 },

    #[error("level {0} is not supported (only level-1 flag data is implemented)")]
    UnsupportedLevel(i64),

    /// The λ cut-off of a limit sum could not be shown to drop only zero terms.
    #[error(
        "cut-off lambda_max = {lambda_max} is not certified: first excluded entry has f = {f}"
    )]
    CutoffUnverified { lambda_max: u64, f: i64 },

    /// Two routes that must agree did not. Always an implementation bug.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    /// A character did not decompose into a nonnegative sum of irreducibles.
    #[error("integrity error: {0}")]
    Integrity(String),
}
