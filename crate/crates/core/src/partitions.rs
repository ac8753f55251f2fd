//! Counting integer partitions under bounded-part, bounded-length and
//! distinct-parity constraints.
//!
//! Conventions: the empty partition is the unique partition of 0, and every
//! count at a negative target is 0. Negative targets are ordinary inputs.
//!
//! The counting functions use independent algorithms so that identities
//! relating them are meaningful checks. [`enumerate_partitions`] lists
//! partitions explicitly and serves as a brute-force reference.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedAdd, CheckedSub, One, Zero};

use crate::weights::Node;
use crate::{Error, Result};

/// Number of partitions of `m` with every part at most `k`.
pub fn rho_bounded(k: u64, m: i64) -> BigUint {
    if m < 0 {
        return BigUint::zero();
    }
    let m = m as usize;
    let k = (k as usize).min(m);
    bounded_dp::<u128>(k, m)
        .map(BigUint::from)
        .unwrap_or_else(|| bounded_dp::<BigUint>(k, m).expect("big integers do not overflow"))
}

fn bounded_dp<T: Clone + Zero + One + CheckedAdd>(k: usize, m: usize) -> Option<T> {
    let mut counts = vec![T::zero(); m + 1];
    counts[0] = T::one();
    for part in 1..=k {
        for total in part..=m {
            counts[total] = counts[total].checked_add(&counts[total - part])?;
        }
    }
    Some(counts.swap_remove(m))
}

/// Number of partitions of `m` into at most `p` parts, each at most `k`.
///
/// Computed as the `q^m` coefficient of `Π_{i=1}^{t} (1 − q^{u+i})/(1 − q^i)`
/// with `{t, u} = {k, p}`, `t ≤ u`; conjugation makes the roles symmetric.
pub fn rho_bounded_both(k: u64, p: u64, m: i64) -> BigUint {
    let area = i128::from(k) * i128::from(p);
    if m < 0 || i128::from(m) > area {
        return BigUint::zero();
    }
    // Complementing inside the p × k box is a bijection.
    let m = (m as i128).min(area - m as i128) as usize;
    if m == 0 {
        return BigUint::one();
    }
    let (a, c) = ((k as usize).min(m), (p as usize).min(m));
    let (t, u) = (a.min(c), a.max(c));
    match box_product::<i128>(t, u, m) {
        Some(v) => BigUint::try_from(v).expect("counts are nonnegative"),
        None => box_product::<BigInt>(t, u, m)
            .expect("big integers do not overflow")
            .to_biguint()
            .expect("counts are nonnegative"),
    }
}

fn box_product<T>(t: usize, u: usize, m: usize) -> Option<T>
where
    T: Clone + Zero + One + CheckedAdd + CheckedSub,
{
    let mut coeffs = vec![T::zero(); m + 1];
    coeffs[0] = T::one();
    for i in 1..=t {
        let num = u + i;
        for e in (num..=m).rev() {
            coeffs[e] = coeffs[e].checked_sub(&coeffs[e - num])?;
        }
        for e in i..=m {
            coeffs[e] = coeffs[e].checked_add(&coeffs[e - i])?;
        }
    }
    Some(coeffs.swap_remove(m))
}

/// Number of partitions of `m` into distinct parts whose parity differs from
/// the node `i`: odd parts for `i = 0`, even parts for `i = 1`.
pub fn rho_distinct_parity(i: Node, m: i64) -> BigUint {
    if m < 0 {
        return BigUint::zero();
    }
    rho_distinct_parity_table(i, m as u32).swap_remove(m as usize)
}

/// `ρ≠^i(m)` for every `0 ≤ m ≤ m_max`.
pub fn rho_distinct_parity_table(i: Node, m_max: u32) -> Vec<BigUint> {
    let m = m_max as usize;
    let first = match i {
        Node::Zero => 1,
        Node::One => 2,
    };
    let mut counts = vec![BigUint::zero(); m + 1];
    counts[0] = BigUint::one();
    for part in (first..=m).step_by(2) {
        for total in (part..=m).rev() {
            let prev = counts[total - part].clone();
            counts[total] += prev;
        }
    }
    counts
}

/// Precomputed table of `ρ_k(m)` for `m ≤ m_max` and every `k`.
///
/// Built once and read-only afterwards, so it can be shared between threads.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    m_max: usize,
    // rows[k][m] for k ≤ m_max; ρ_k(m) = ρ_{m_max}(m) for larger k.
    rows: Vec<Vec<BigUint>>,
}

impl PartitionTable {
    pub fn new(m_max: u32) -> Self {
        let m_max = m_max as usize;
        let mut rows = Vec::with_capacity(m_max + 1);
        let mut counts = vec![BigUint::zero(); m_max + 1];
        counts[0] = BigUint::one();
        rows.push(counts.clone());
        for part in 1..=m_max {
            for total in part..=m_max {
                let prev = counts[total - part].clone();
                counts[total] += prev;
            }
            rows.push(counts.clone());
        }
        Self { m_max, rows }
    }

    pub fn m_max(&self) -> u32 {
        self.m_max as u32
    }

    /// `ρ_k(m)`, or `None` when `m` exceeds the table.
    pub fn rho_bounded(&self, k: u64, m: i64) -> Option<BigUint> {
        if m < 0 {
            return Some(BigUint::zero());
        }
        let m = m as usize;
        if m > self.m_max {
            return None;
        }
        let k = (k as usize).min(self.m_max);
        Some(self.rows[k][m].clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn admits(self, part: u32) -> bool {
        match self {
            Parity::Even => part.is_multiple_of(2),
            Parity::Odd => part % 2 == 1,
        }
    }
}

/// Constraints for [`enumerate_partitions`]. The default admits everything.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub max_part: Option<u32>,
    pub max_len: Option<u32>,
    pub distinct: bool,
    pub parity: Option<Parity>,
}

impl Constraints {
    pub fn parts_at_most(mut self, k: u32) -> Self {
        self.max_part = Some(k);
        self
    }

    pub fn at_most_parts(mut self, p: u32) -> Self {
        self.max_len = Some(p);
        self
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn parity(mut self, parity: Parity) -> Self {
        self.parity = Some(parity);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Largest `m` that may be enumerated.
    pub cap: u32,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self { cap: 60 }
    }
}

/// Lists every partition of `m` satisfying `constraints`, each as a weakly
/// decreasing sequence of parts.
pub fn enumerate_partitions(
    m: u32,
    constraints: &Constraints,
    config: &EnumerationConfig,
) -> Result<Vec<Vec<u32>>> {
    if m > config.cap {
        return Err(Error::EnumerationCap { m, cap: config.cap });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    let first_max = constraints.max_part.unwrap_or(m).min(m);
    extend(m, first_max, constraints, &mut current, &mut out);
    Ok(out)
}

fn extend(
    remaining: u32,
    max_next: u32,
    constraints: &Constraints,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if constraints
        .max_len
        .is_some_and(|len| current.len() as u32 >= len)
    {
        return;
    }
    for part in (1..=max_next.min(remaining)).rev() {
        if constraints.parity.is_some_and(|p| !p.admits(part)) {
            continue;
        }
        current.push(part);
        let next_max = if constraints.distinct { part - 1 } else { part };
        extend(remaining - part, next_max, constraints, current, out);
        current.pop();
    }
}
