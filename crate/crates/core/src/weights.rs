//! The weight lattice of A₁⁽¹⁾ in the basis `(Λ₀, ω₁, δ)`.
//!
//! A weight `aΛ₀ + bω₁ + cδ` has level `a`, takes the value `b` on `h₁`,
//! `a − b` on `h₀` and `c` on `d`. Simple roots are `α₁ = 2ω₁` and
//! `α₀ = δ − 2ω₁`, and `Λ₁ = Λ₀ + ω₁`.
//!
//! Every element of the affine Weyl group is `σ_k` or `σ_k s₁` for a unique
//! `k ∈ ℤ`, where `σ_k = (s₁s₀)^k s₁`, so orbits are described by closed
//! forms rather than by a general Coxeter-group engine.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// A node of the affine Dynkin diagram of A₁⁽¹⁾.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Zero,
    One,
}

impl Node {
    pub const ALL: [Node; 2] = [Node::Zero, Node::One];

    pub fn index(self) -> u8 {
        match self {
            Node::Zero => 0,
            Node::One => 1,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            0 => Some(Node::Zero),
            1 => Some(Node::One),
            _ => None,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Node::Zero => Node::One,
            Node::One => Node::Zero,
        }
    }
}

/// `lambda0·Λ₀ + omega1·ω₁ + delta·δ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub lambda0: i64,
    pub omega1: i64,
    pub delta: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight::new(0, 0, 0);
    pub const LAMBDA0: Weight = Weight::new(1, 0, 0);
    pub const LAMBDA1: Weight = Weight::new(1, 1, 0);
    pub const OMEGA1: Weight = Weight::new(0, 1, 0);
    pub const DELTA: Weight = Weight::new(0, 0, 1);
    pub const ALPHA0: Weight = Weight::new(0, -2, 1);
    pub const ALPHA1: Weight = Weight::new(0, 2, 0);

    pub const fn new(lambda0: i64, omega1: i64, delta: i64) -> Self {
        Self {
            lambda0,
            omega1,
            delta,
        }
    }

    /// The fundamental weight `Λ_i`.
    pub const fn fundamental(i: Node) -> Self {
        match i {
            Node::Zero => Self::LAMBDA0,
            Node::One => Self::LAMBDA1,
        }
    }

    /// The simple root `α_i`.
    pub const fn simple_root(i: Node) -> Self {
        match i {
            Node::Zero => Self::ALPHA0,
            Node::One => Self::ALPHA1,
        }
    }

    pub fn level(&self) -> i64 {
        self.lambda0
    }

    /// Value on the simple coroot `h_i`.
    pub fn eval_h(&self, i: Node) -> i64 {
        match i {
            Node::Zero => self.lambda0 - self.omega1,
            Node::One => self.omega1,
        }
    }

    /// Value on the derivation `d`.
    pub fn eval_d(&self) -> i64 {
        self.delta
    }

    pub fn is_dominant(&self) -> bool {
        self.eval_h(Node::Zero) >= 0 && self.eval_h(Node::One) >= 0
    }

    /// `s_i μ = μ − μ(h_i) α_i`.
    pub fn reflect(&self, i: Node) -> Self {
        *self - Self::simple_root(i) * self.eval_h(i)
    }

    /// The nontrivial diagram automorphism: swaps `Λ₀` and `Λ₁`, fixes `δ`.
    pub fn diagram_automorphism(&self) -> Self {
        Self::new(self.lambda0, self.lambda0 - self.omega1, self.delta)
    }

    /// `σ^i`: the identity for `i = 0`, the diagram automorphism for `i = 1`.
    pub fn automorphism_power(&self, i: Node) -> Self {
        match i {
            Node::Zero => *self,
            Node::One => self.diagram_automorphism(),
        }
    }

    pub fn shift_delta(&self, by: i64) -> Self {
        Self::new(self.lambda0, self.omega1, self.delta + by)
    }

    /// Coordinates `(c₀, c₁)` with `self = c₀α₀ + c₁α₁`, if `self` lies in
    /// the root lattice. The coordinates may be negative.
    pub fn root_coordinates(&self) -> Option<(i64, i64)> {
        if self.lambda0 != 0 {
            return None;
        }
        let c0 = self.delta;
        let twice_c1 = self.omega1 + 2 * c0;
        (twice_c1 % 2 == 0).then_some((c0, twice_c1 / 2))
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        Weight::new(
            self.lambda0 + rhs.lambda0,
            self.omega1 + rhs.omega1,
            self.delta + rhs.delta,
        )
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight::new(-self.lambda0, -self.omega1, -self.delta)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;

    fn mul(self, k: i64) -> Weight {
        Weight::new(self.lambda0 * k, self.omega1 * k, self.delta * k)
    }
}

/// Renders in the `a*Lambda0 + b*omega1 + c*delta` grammar.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |x: i64| if x < 0 { '-' } else { '+' };
        write!(
            f,
            "{}*Lambda0 {} {}*omega1 {} {}*delta",
            self.lambda0,
            sign(self.omega1),
            self.omega1.unsigned_abs(),
            sign(self.delta),
            self.delta.unsigned_abs()
        )
    }
}

fn require_orbit_input(lambda: &Weight) -> Result<()> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(*lambda));
    }
    if lambda.level() < 1 {
        return Err(Error::Domain(format!(
            "orbit closed forms need positive level, got {lambda}"
        )));
    }
    Ok(())
}

/// `σ_k Λ` (or `σ_k s₁ Λ` when `with_s1`) for dominant `Λ = ℓΛ₀ + mω₁ + sδ`
/// of level `ℓ ≥ 1`:
///
/// ```text
/// σ_k Λ    = ℓΛ₀ − (2kℓ + m)ω₁ − (k(kℓ + m) − s)δ
/// σ_k s₁ Λ = ℓΛ₀ − (2kℓ − m)ω₁ − (k(kℓ − m) − s)δ
/// ```
pub fn sigma_k(lambda: &Weight, k: i64, with_s1: bool) -> Result<Weight> {
    require_orbit_input(lambda)?;
    let level = lambda.level();
    let m = if with_s1 {
        -lambda.omega1
    } else {
        lambda.omega1
    };
    let s = lambda.delta;
    Ok(Weight::new(
        level,
        -(2 * k * level + m),
        -(k * (k * level + m) - s),
    ))
}

/// Reduced word of `σ_k` (or `σ_k s₁`), written left to right.
///
/// `σ_k = (s₁s₀)^k s₁` for `k ≥ 0` and `(s₀s₁)^{−k} s₁` for `k < 0`.
pub fn sigma_k_word(k: i64, with_s1: bool) -> Vec<Node> {
    let pair = if k >= 0 {
        [Node::One, Node::Zero]
    } else {
        [Node::Zero, Node::One]
    };
    let mut word: Vec<Node> = pair
        .iter()
        .copied()
        .cycle()
        .take(2 * k.unsigned_abs() as usize)
        .collect();
    if !with_s1 {
        word.push(Node::One);
    }
    word
}

/// Applies a word of simple reflections, rightmost letter first.
pub fn apply_word(word: &[Node], w: &Weight) -> Weight {
    word.iter().rev().fold(*w, |acc, &i| acc.reflect(i))
}

/// A label `(λ, r)` of the g-stable Demazure module `D(ℓ, λ, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaEntry {
    pub lambda: u64,
    pub r: i64,
}

/// The part of `Γ_Φ` with `λ ≤ lambda_max`, sorted by `(λ, r)`.
///
/// `(λ, r) ∈ Γ_Φ` iff `ℓΛ₀ + λω₁ + rδ` lies in the Weyl orbit of `Φ`. For
/// level 0 the orbit is the single point `Φ = sδ`.
pub fn gamma_set(phi: &Weight, lambda_max: u64) -> Result<Vec<GammaEntry>> {
    if !phi.is_dominant() {
        return Err(Error::NotDominant(*phi));
    }
    let level = phi.level();
    if level == 0 {
        return Ok(alloc::vec![GammaEntry {
            lambda: 0,
            r: phi.delta
        }]);
    }
    let m = phi.omega1;
    // |2kℓ ± m| ≤ λ_max forces |k| ≤ (λ_max + m) / 2ℓ.
    let k_bound = (lambda_max as i64 + m) / (2 * level) + 1;
    let mut entries = BTreeSet::new();
    for k in -k_bound..=k_bound {
        for with_s1 in [false, true] {
            let w = sigma_k(phi, k, with_s1)?;
            let lambda = w.omega1.unsigned_abs();
            if lambda <= lambda_max {
                entries.insert(GammaEntry { lambda, r: w.delta });
            }
        }
    }
    Ok(entries.into_iter().collect())
}

/// `(c₀, c₁)` with `Λ_j + Λ − Φ = c₀α₀ + c₁α₁`, when both are nonnegative
/// integers, i.e. when `Φ ≤ Λ_j + Λ`.
pub fn dominance_diff(lambda: &Weight, phi: &Weight, j: Node) -> Option<(i64, i64)> {
    let diff = Weight::fundamental(j) + *lambda - *phi;
    diff.root_coordinates()
        .filter(|&(c0, c1)| c0 >= 0 && c1 >= 0)
}
