//! Exact computation of outer multiplicities in tensor products of integrable
//! highest-weight modules for the affine Kac-Moody algebra of type A₁⁽¹⁾.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computations:
//!
//! - [`qseries`]: exact Laurent polynomials and truncated power series in `q`,
//!   Gaussian binomials and inverse q-Pochhammer factors.
//! - [`partitions`]: counting partitions with bounded parts, bounded number of
//!   parts, or distinct parts of a fixed parity, plus a brute-force enumerator.
//! - [`weights`]: the affine weight lattice in the basis `(Λ₀, ω₁, δ)`, simple
//!   reflections, the diagram automorphism, Weyl orbits and the sets `Γ_Φ`.
//! - [`flags`]: level 1 → 2 Demazure flag multiplicities and their stabilized
//!   limits along the Weyl orbit.
//! - [`outer`]: closed forms for `V(Λ₀)⊗V(Λᵢ)` and `V(Λ₁)⊗V(Λ₁)`, the limit
//!   formula, the automorphism transfer and identity verifiers.
//! - [`oracle`]: an independent brute-force route through Freudenthal's
//!   recursion, character convolution and highest-weight subtraction.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod flags;
pub mod oracle;
pub mod outer;
pub mod partitions;
pub mod qseries;
pub mod weights;

pub use error::{Error, Result};
pub use flags::{FlagSign, StabilizedLimit};
pub use oracle::{MultTable, WeightMultMap};
pub use outer::{CaseReport, PhiLabel};
pub use partitions::{Constraints, Parity, PartitionTable};
pub use qseries::{QPoly, TruncSeries};
pub use weights::{GammaEntry, Node, Weight};
