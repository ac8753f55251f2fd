//! Multiplicities of level-2 Demazure modules in level-1 Demazure flags for
//! sl₂, and their limits along the Weyl orbit.
//!
//! For sl₂ the local Weyl module `W(μ)` coincides with `D(1, μ)` and
//!
//! ```text
//! [W(μ) : D(2, λ)](q) = q^{p⌈μ/2⌉} [⌊μ/2⌋, p]_q    if p = (μ − λ)/2 ∈ ℤ≥0
//! ```
//!
//! and 0 otherwise. The coefficients are repackaged as
//! `β^±_{m, m−p}(r)`, the coefficient of `q^r` in `q^{(m + [±=+])p} [m, p]_q`,
//! which counts partitions in a `p × (m − p)` box:
//!
//! ```text
//! β^-_{k, k−p}(r) = ρ^p_{k−p}(r − kp),   β^+_{k, k−p}(r) = ρ^p_{k−p}(r − (k+1)p).
//! ```
//!
//! Along the orbit the arguments grow with `k` and the counts become
//! `ρ_b(f)` once `k ≥ f + b`; [`stabilized_limit`] computes that value and
//! re-evaluates the β sequence past the threshold to confirm it.

use alloc::format;

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::Zero;

use crate::partitions::{rho_bounded, rho_bounded_both};
use crate::qseries::{gaussian_binomial, QPoly};
use crate::{Error, Result};

/// The sign `±` labelling the two β families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlagSign {
    Minus,
    Plus,
}

impl FlagSign {
    /// `sign((−1)^{n+1})`: minus for even `n`, plus for odd `n`.
    pub fn of_parity(n: u64) -> Self {
        if n.is_multiple_of(2) {
            FlagSign::Minus
        } else {
            FlagSign::Plus
        }
    }

    fn extra(self) -> u64 {
        match self {
            FlagSign::Minus => 0,
            FlagSign::Plus => 1,
        }
    }
}

/// `[W(μ) : D(2, λ)](q)`.
pub fn weyl_flag_poly(mu: u64, lambda: u64) -> QPoly {
    if lambda > mu || !(mu - lambda).is_multiple_of(2) {
        return QPoly::zero();
    }
    let p = (mu - lambda) / 2;
    let half_floor = mu / 2;
    let half_ceil = mu.div_ceil(2);
    gaussian_binomial(half_floor as i64, p as i64)
        .expect("p <= floor(mu/2) whenever lambda >= 0")
        .shift((p * half_ceil) as i64)
}

/// `β^sign_{m, l}(r)`; zero unless `l ≤ m`.
pub fn beta(sign: FlagSign, m: u64, l: u64, r: i64) -> BigUint {
    if l > m {
        return BigUint::zero();
    }
    let p = m - l;
    let offset = (m + sign.extra()) as i128 * p as i128;
    let target = r as i128 - offset;
    if target < 0 {
        return BigUint::zero();
    }
    rho_bounded_both(l, p, target as i64)
}

/// `α¹_λ(m, r) = [W(λ + 2m) : D(2, λ, r)]`, zero unless `m ∈ ℤ≥0`.
pub fn alpha1(lambda: u64, m: Rational64, r: i64) -> BigUint {
    if !m.is_integer() || *m.numer() < 0 {
        return BigUint::zero();
    }
    let m = *m.numer() as u64;
    let half = lambda / 2;
    beta(FlagSign::of_parity(lambda), half + m, half, r)
}

/// Source of the flag multiplicities `α^ℓ_λ(m, r)` for one level `ℓ`.
///
/// Only level 1 is implemented ([`LevelOneFlags`]); higher levels need flag
/// data this crate does not carry.
pub trait FlagMultiplicities {
    fn level(&self) -> i64;

    /// `α^ℓ_λ(m, r)`.
    fn alpha(&self, lambda: u64, m: Rational64, r: i64) -> BigUint;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LevelOneFlags;

impl FlagMultiplicities for LevelOneFlags {
    fn level(&self) -> i64 {
        1
    }

    fn alpha(&self, lambda: u64, m: Rational64, r: i64) -> BigUint {
        alpha1(lambda, m, r)
    }
}

/// Eventual value of a β sequence together with the `k` from which it is
/// constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizedLimit {
    pub value: BigUint,
    pub threshold: u64,
}

/// The grade `r_k` at which `β^sign_{k, b}(r_k)` counts partitions in the box
/// `(k − b) × b` of area `b(k − b) − f`.
pub fn orbit_grade(sign: FlagSign, b: u64, f: i64, k: u64) -> i64 {
    let (k, b) = (k as i64, b as i64);
    match sign {
        FlagSign::Minus => k * k - b * b - f,
        FlagSign::Plus => (k + 1 + b) * (k - b) - f,
    }
}

/// Number of extra `k` past the threshold at which a limit is re-checked.
pub const STABILITY_WINDOW: u64 = 3;

/// `lim_k β^sign_{k, b}(r_k) = ρ_b(f)`, constant for `k ≥ max(f, 0) + b`.
///
/// The sequence is evaluated at `threshold ..= threshold + 3`; any
/// disagreement is reported as [`Error::Consistency`].
pub fn stabilized_limit(sign: FlagSign, b: u64, f: i64) -> Result<StabilizedLimit> {
    let value = rho_bounded(b, f);
    let threshold = f.max(0) as u64 + b;
    for k in threshold..=threshold + STABILITY_WINDOW {
        let seq = beta(sign, k, b, orbit_grade(sign, b, f, k));
        if seq != value {
            return Err(Error::Consistency(format!(
                "beta{sign:?}_(k={k}, {b}) = {seq} but rho_{b}({f}) = {value}"
            )));
        }
    }
    Ok(StabilizedLimit { value, threshold })
}

/// The pair of `β⁺` limits at `b = 2l` and `b = 2l − 1` that occur together
/// for `V(Λ₀) ⊗ V(Λ₁)`, combined into `ρ_{2l}(s − 2l² + l)`.
///
/// Cross-checked against the two separate stabilized limits and against the
/// paired β sum evaluated at common `k` past the threshold.
pub fn paired_limit_plus(l: u64, s: i64) -> Result<BigUint> {
    if l == 0 {
        return Err(Error::Domain("paired limit needs l >= 1".into()));
    }
    let (li, b_plus, b_minus) = (l as i64, 2 * l, 2 * l - 1);
    let f_minus = s - 2 * li * li + li;
    let f_plus = s - 2 * li * li - li;
    let value = rho_bounded(b_plus, f_minus);

    let separate = stabilized_limit(FlagSign::Plus, b_plus, f_plus)?.value
        + stabilized_limit(FlagSign::Plus, b_minus, f_minus)?.value;
    if separate != value {
        return Err(Error::Consistency(format!(
            "paired limit at l={l}, s={s}: {value} vs separate limits {separate}"
        )));
    }

    let threshold = f_minus.max(0) as u64 + b_plus;
    for k in threshold..=threshold + STABILITY_WINDOW {
        let sum = beta(
            FlagSign::Plus,
            k,
            b_plus,
            orbit_grade(FlagSign::Plus, b_plus, f_plus, k),
        ) + beta(
            FlagSign::Plus,
            k,
            b_minus,
            orbit_grade(FlagSign::Plus, b_minus, f_minus, k),
        );
        if sum != value {
            return Err(Error::Consistency(format!(
                "paired beta sum at l={l}, s={s}, k={k} is {sum}, expected {value}"
            )));
        }
    }
    Ok(value)
}
