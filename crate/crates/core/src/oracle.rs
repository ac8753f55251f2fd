//! Brute-force characters of integrable highest-weight modules.
//!
//! Weight multiplicities come from Freudenthal's recursion, tensor products
//! from convolution, and outer multiplicities from repeatedly peeling off the
//! character of a maximal dominant weight. None of this shares code with the
//! closed forms in [`crate::outer`].
//!
//! The invariant form has `(Λ₀, δ) = 1`, `(ω₁, ω₁) = 1/2` and every other
//! basis pairing 0, so `(α₁, α₁) = (α₀, α₀) = 2`. Internally the doubled form
//! `2(x, y)` is used, which is integer valued.
//!
//! A weight `μ` of `V(Λ)` is described by its drop `n = c₀` in
//! `Λ − μ = c₀α₀ + c₁α₁`; a map of depth `d` knows every weight with
//! `n ≤ d`. Inside `V(Λ)` the weights at drop `n` satisfy
//! `b ≡ Λ(h₁) (mod 2)`, `b² ≤ Λ(h₁)² + 4ℓn` (the norm of a weight never
//! exceeds that of `Λ`) and `c₁ ≥ 0`; everything outside that region is zero.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::weights::Weight;
use crate::{Error, Result};

/// `2(x, y)`.
pub fn inner2(x: &Weight, y: &Weight) -> i64 {
    2 * (x.lambda0 * y.delta + x.delta * y.lambda0) + x.omega1 * y.omega1
}

/// The invariant form `(x, y)`.
pub fn inner(x: &Weight, y: &Weight) -> Rational64 {
    Rational64::new(inner2(x, y), 2)
}

/// `ρ = Λ₀ + Λ₁`.
pub const RHO: Weight = Weight::new(2, 1, 0);

/// Truncated character: multiplicities of all weights within `depth` of `top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultMap {
    top: Weight,
    depth: u32,
    // Nonzero multiplicities only.
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightMultMap {
    /// Entries with zero multiplicity or beyond `depth` are dropped.
    pub fn from_entries(
        top: Weight,
        depth: u32,
        entries: impl IntoIterator<Item = (Weight, BigUint)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (w, m) in entries {
            let drop = top.delta - w.delta;
            if !m.is_zero() && (0..=i64::from(depth)).contains(&drop) {
                *map.entry(w).or_insert_with(BigUint::zero) += m;
            }
        }
        Self {
            top,
            depth,
            entries: map,
        }
    }

    /// The character of a one-dimensional module of weight `w`.
    pub fn point(w: Weight, depth: u32) -> Self {
        Self::from_entries(w, depth, [(w, BigUint::from(1u8))])
    }

    pub fn top(&self) -> Weight {
        self.top
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `c₀` of `top − w`.
    pub fn drop_of(&self, w: &Weight) -> i64 {
        self.top.delta - w.delta
    }

    /// Multiplicity of `w`, or `None` when `w` lies deeper than the map.
    pub fn get(&self, w: &Weight) -> Option<BigUint> {
        if self.drop_of(w) > i64::from(self.depth) {
            return None;
        }
        Some(self.entries.get(w).cloned().unwrap_or_else(BigUint::zero))
    }

    /// Nonzero entries in weight order.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> + '_ {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn shift_delta(&self, by: i64) -> Self {
        Self {
            top: self.top.shift_delta(by),
            depth: self.depth,
            entries: self
                .entries
                .iter()
                .map(|(w, m)| (w.shift_delta(by), m.clone()))
                .collect(),
        }
    }

    pub fn with_depth(&self, depth: u32) -> Self {
        let depth = depth.min(self.depth);
        Self::from_entries(self.top, depth, self.entries.clone())
    }
}

/// Region of `V(Λ)` at drop `n`: the admissible `h₁` values, largest first.
fn region_at(lambda: &Weight, n: i64) -> impl Iterator<Item = i64> {
    let (a, bl) = (lambda.level(), lambda.omega1);
    let radius = (bl * bl + 4 * a * n).sqrt();
    let hi = radius.min(bl + 2 * n);
    let hi = if (hi - bl).is_even() { hi } else { hi - 1 };
    let lo = -radius;
    let lo = if (lo - bl).is_even() { lo } else { lo + 1 };
    (lo..=hi).rev().step_by(2)
}

fn in_region(lambda: &Weight, w: &Weight) -> bool {
    let n = lambda.delta - w.delta;
    if n < 0 || w.level() != lambda.level() || (w.omega1 - lambda.omega1).is_odd() {
        return false;
    }
    let b = w.omega1;
    let bl = lambda.omega1;
    b * b <= bl * bl + 4 * lambda.level() * n && b <= bl + 2 * n
}

/// Weight multiplicities of `V(Λ)` for every weight within `depth` of `Λ`.
///
/// Weights are processed by increasing drop and, within a drop, by increasing
/// `c₁`, so every term on the right of the recursion is already known or
/// outside the region. That closure property is checked at each lookup.
pub fn freudenthal(lambda: &Weight, depth: u32) -> Result<WeightMultMap> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(*lambda));
    }
    if lambda.level() == 0 {
        return Ok(WeightMultMap::point(*lambda, depth));
    }
    let top_norm = inner2(&(*lambda + RHO), &(*lambda + RHO));
    // Every in-region weight processed so far, zeros included.
    let mut known: BTreeMap<Weight, BigUint> = BTreeMap::new();

    let lookup = |known: &BTreeMap<Weight, BigUint>, w: &Weight| -> Result<BigUint> {
        if !in_region(lambda, w) {
            return Ok(BigUint::zero());
        }
        known.get(w).cloned().ok_or_else(|| {
            Error::Consistency(format!("freudenthal region not closed: {w} needed early"))
        })
    };

    for n in 0..=i64::from(depth) {
        for b in region_at(lambda, n) {
            let mu = Weight::new(lambda.level(), b, lambda.delta - n);
            if mu == *lambda {
                known.insert(mu, BigUint::from(1u8));
                continue;
            }
            let mut numer = BigInt::zero();
            let mut add_string = |root: Weight, max_k: i64| -> Result<()> {
                let mut k = 1;
                loop {
                    if max_k > 0 && k > max_k {
                        return Ok(());
                    }
                    let w = mu + root * k;
                    // Strings along α₁ leave the region and never return.
                    if max_k == 0 && !in_region(lambda, &w) {
                        return Ok(());
                    }
                    let m = lookup(&known, &w)?;
                    if !m.is_zero() {
                        numer += BigInt::from(inner2(&w, &root)) * BigInt::from(m);
                    }
                    k += 1;
                }
            };
            add_string(Weight::ALPHA1, 0)?;
            for step in 1..=n {
                let max_k = n / step;
                for root in [
                    Weight::ALPHA1.shift_delta(step),
                    (-Weight::ALPHA1).shift_delta(step),
                    Weight::DELTA * step,
                ] {
                    add_string(root, max_k)?;
                }
            }
            numer *= 2;
            let denom = top_norm - inner2(&(mu + RHO), &(mu + RHO));
            let mult = if numer.is_zero() {
                BigUint::zero()
            } else {
                if denom <= 0 {
                    return Err(Error::Consistency(format!(
                        "freudenthal denominator {denom} at {mu} with nonzero numerator"
                    )));
                }
                let (q, rem) = numer.div_rem(&BigInt::from(denom));
                if !rem.is_zero() || q.sign() == Sign::Minus {
                    return Err(Error::Consistency(format!(
                        "freudenthal quotient {numer}/{denom} at {mu} is not a natural number"
                    )));
                }
                q.magnitude().clone()
            };
            known.insert(mu, mult);
        }
    }
    Ok(WeightMultMap::from_entries(*lambda, depth, known))
}

/// Character of a tensor product, known to the smaller of the two depths.
pub fn tensor_character(a: &WeightMultMap, b: &WeightMultMap) -> WeightMultMap {
    let depth = a.depth().min(b.depth());
    let top = a.top() + b.top();
    let mut out: BTreeMap<Weight, BigUint> = BTreeMap::new();
    for (wa, ma) in a.iter() {
        let da = a.drop_of(wa);
        if da > i64::from(depth) {
            continue;
        }
        for (wb, mb) in b.iter() {
            if da + b.drop_of(wb) > i64::from(depth) {
                continue;
            }
            *out.entry(*wa + *wb).or_insert_with(BigUint::zero) += ma * mb;
        }
    }
    WeightMultMap::from_entries(top, depth, out)
}

/// Outer multiplicities `[V : V(Φ)]`, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultTable {
    entries: BTreeMap<Weight, BigUint>,
}

impl MultTable {
    pub fn get(&self, phi: &Weight) -> BigUint {
        self.entries.get(phi).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> + '_ {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl FromIterator<(Weight, BigUint)> for MultTable {
    fn from_iter<T: IntoIterator<Item = (Weight, BigUint)>>(iter: T) -> Self {
        let mut entries = BTreeMap::new();
        for (w, m) in iter {
            if !m.is_zero() {
                *entries.entry(w).or_insert_with(BigUint::zero) += m;
            }
        }
        Self { entries }
    }
}

/// `[V : V(Φ)]` for every `Φ` within `depth` of the top of `t`.
pub fn decompose(t: &WeightMultMap, depth: u32) -> Result<MultTable> {
    decompose_with_order(t, depth, |_| {})
}

/// [`decompose`], with `order` free to permute the candidate list before a
/// maximal candidate is chosen. The result must not depend on it.
pub fn decompose_with_order<F>(t: &WeightMultMap, depth: u32, mut order: F) -> Result<MultTable>
where
    F: FnMut(&mut Vec<Weight>),
{
    if depth > t.depth() {
        return Err(Error::Domain(format!(
            "decomposition depth {depth} exceeds character depth {}",
            t.depth()
        )));
    }
    let top = t.top();
    let mut residual: BTreeMap<Weight, BigInt> = t
        .iter()
        .filter(|(w, _)| t.drop_of(w) <= i64::from(depth))
        .map(|(w, m)| (*w, BigInt::from(m.clone())))
        .collect();
    // Characters at δ-degree 0, keyed by (level, h₁ value, depth).
    let mut cache: BTreeMap<(i64, i64, u32), WeightMultMap> = BTreeMap::new();
    let mut table = BTreeMap::new();

    loop {
        let mut candidates: Vec<Weight> = residual
            .iter()
            .filter(|(w, m)| m.is_positive() && w.is_dominant())
            .map(|(w, _)| *w)
            .collect();
        if candidates.is_empty() {
            break;
        }
        order(&mut candidates);
        let phi = *candidates
            .iter()
            .find(|c| !candidates.iter().any(|d| strictly_above(d, c)))
            .expect("a finite nonempty poset has a maximal element");
        let m = residual[&phi].magnitude().clone();
        let remaining = depth - (top.delta - phi.delta) as u32;
        let key = (phi.level(), phi.omega1, remaining);
        let character = match cache.entry(key) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(freudenthal(
                &Weight::new(phi.level(), phi.omega1, 0),
                remaining,
            )?),
        };
        for (w, cm) in character.iter() {
            let w = w.shift_delta(phi.delta);
            let entry = residual.entry(w).or_insert_with(BigInt::zero);
            *entry -= BigInt::from(cm * &m);
            if entry.is_negative() {
                return Err(Error::Integrity(format!(
                    "residual multiplicity {entry} at {w} after removing {m} x V({phi})"
                )));
            }
        }
        residual.retain(|_, v| !v.is_zero());
        table.insert(phi, m);
    }
    if let Some((w, m)) = residual.iter().find(|(_, m)| !m.is_zero()) {
        return Err(Error::Integrity(format!(
            "residual multiplicity {m} left at nondominant-only weight {w}"
        )));
    }
    Ok(table.into_iter().collect())
}

/// `d > c` in the dominance order: `d − c` is a nonzero sum of simple roots.
fn strictly_above(d: &Weight, c: &Weight) -> bool {
    d != c
        && (*d - *c)
            .root_coordinates()
            .is_some_and(|(c0, c1)| c0 >= 0 && c1 >= 0)
}
