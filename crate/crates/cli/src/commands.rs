//! Command implementations. Each returns a [`Table`] and whether every check
//! in it passed; rendering and exit codes are left to the caller.

use clap::ValueEnum;
use demazure_mult_core::flags::weyl_flag_poly;
use demazure_mult_core::oracle::{decompose, freudenthal, tensor_character};
use demazure_mult_core::outer::{
    outer_mult_11, outer_mult_fundamental, outer_mult_limit, outer_mult_limit_auto,
    verify_assembly, verify_b_formula, verify_orbit, verify_transfer, verify_triple,
    PartitionIdentity,
};
use demazure_mult_core::weights::gamma_set;
use demazure_mult_core::{CaseReport, Node, PhiLabel, Weight};
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::format::{Cell, Table};
use crate::CliError;

pub struct Output {
    pub table: Table,
    pub ok: bool,
}

impl Output {
    fn table(table: Table) -> Self {
        Self { table, ok: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    ClosedForm,
    Limit,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Limit => "limit",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug)]
pub struct OuterMultArgs {
    pub i: Node,
    pub with: Weight,
    pub s_max: u32,
    pub method: Method,
    /// Fixed `λ` bound for the limit route; `None` widens until the cut-off verifies.
    pub lambda_max: Option<u64>,
    pub verbose: bool,
}

/// `(j, s, Φ)` triples for `V(Λ_i) ⊗ V(Λ_k + tδ)`, sorted by `(j, s)`.
fn outer_labels(i: Node, k: Node, t: i64, s_max: u32) -> Vec<(u8, i64, Weight)> {
    let s_max = i64::from(s_max);
    if (i, k) == (Node::One, Node::One) {
        // Φ = 2Λ_{1−j} − sδ.
        [(0u8, Weight::LAMBDA1 * 2), (1, Weight::LAMBDA0 * 2)]
            .into_iter()
            .flat_map(|(j, top)| (0..=s_max).map(move |s| (j, s, top.shift_delta(t - s))))
            .collect()
    } else {
        let node = if i == k { Node::Zero } else { Node::One };
        PhiLabel::all(node, s_max)
            .into_iter()
            .map(|label| (label.j, label.s, label.phi().shift_delta(t)))
            .collect()
    }
}

pub fn outer_mult(args: &OuterMultArgs) -> Result<Output, CliError> {
    let lambda = args.with;
    let k = match (lambda.level(), lambda.omega1) {
        (1, 0) => Node::Zero,
        (1, 1) => Node::One,
        _ => {
            return Err(CliError::Usage(format!(
                "--with must be Lambda0 or Lambda1 up to a multiple of delta, got {lambda}"
            )))
        }
    };
    let t = lambda.delta;
    let i = args.i;
    let labels = outer_labels(i, k, t, args.s_max);

    let oracle = match args.method {
        Method::Oracle => {
            let depth = args.s_max;
            let product = tensor_character(
                &freudenthal(&Weight::fundamental(i), depth)?,
                &freudenthal(&lambda, depth)?,
            );
            Some(decompose(&product, depth)?)
        }
        _ => None,
    };
    let mults: Vec<BigUint> = labels
        .par_iter()
        .map(|&(_, _, phi)| match args.method {
            Method::ClosedForm => {
                let unshifted = phi.shift_delta(-t);
                Ok(if (i, k) == (Node::One, Node::One) {
                    outer_mult_11(&unshifted)
                } else {
                    outer_mult_fundamental(if i == k { Node::Zero } else { Node::One }, &unshifted)
                })
            }
            Method::Limit => match args.lambda_max {
                Some(bound) => outer_mult_limit(i, &lambda, &phi, bound),
                None => outer_mult_limit_auto(i, &lambda, &phi),
            },
            Method::Oracle => Ok(oracle.as_ref().expect("oracle table").get(&phi)),
        })
        .collect::<Result<_, _>>()?;

    let mut table = Table::new(&["phi", "j", "s", "mult", "method"]);
    for ((j, s, phi), mult) in labels.into_iter().zip(mults) {
        if args.verbose || mult != BigUint::default() {
            table.push(vec![
                Cell::Weight(phi),
                Cell::Int(j.into()),
                Cell::Int(s),
                Cell::Big(mult),
                Cell::Text(args.method.name().into()),
            ]);
        }
    }
    Ok(Output::table(table))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    /// Distinct-parity counts against the bounded-partition sum.
    Partrel,
    /// The `B_j` series identity, `j ∈ {0, 1}`, to order `--order`.
    Bformula,
    /// Closed form, distinct parts and the oracle.
    Triple,
    /// Orbit closed forms against reflection words.
    Orbit,
    /// Limit assembly against the closed form.
    Assembly,
    /// `V(Λ₁) ⊗ V(Λ₁)` against the transferred problem and the oracle.
    Transfer,
}

#[derive(Clone, Debug)]
pub struct VerifyArgs {
    pub kind: VerifyKind,
    pub s_max: u32,
    /// Oracle truncation; raised to `s_max` when smaller.
    pub depth: u32,
    pub order: u32,
    pub level_max: i64,
    pub k_max: i64,
}

pub fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let depth = args.depth.max(args.s_max);
    let reports: Vec<CaseReport> = match args.kind {
        VerifyKind::Partrel => {
            let identity = PartitionIdentity::new(args.s_max);
            identity
                .cases()
                .par_iter()
                .map(|label| identity.check(label))
                .collect()
        }
        VerifyKind::Bformula => {
            let (zero, one) = rayon::join(
                || verify_b_formula(0, args.order),
                || verify_b_formula(1, args.order),
            );
            let mut reports = zero?;
            reports.extend(one?);
            reports
        }
        VerifyKind::Triple => verify_triple(args.s_max, depth)?,
        VerifyKind::Orbit => verify_orbit(args.level_max, args.k_max)?,
        VerifyKind::Assembly => verify_assembly(args.s_max)?,
        VerifyKind::Transfer => verify_transfer(args.s_max, depth)?,
    };
    let mut table = Table::new(&["case", "lhs", "rhs", "pass"]);
    let ok = reports.iter().all(|r| r.pass);
    for r in reports {
        table.push(vec![
            Cell::Text(r.case),
            Cell::Text(r.lhs),
            Cell::Text(r.rhs),
            Cell::Bool(r.pass),
        ]);
    }
    Ok(Output { table, ok })
}

/// Weight multiplicities of `V(Λ)` down to `depth`, sorted by drop, then `ω₁` descending.
pub fn character(lambda: &Weight, depth: u32) -> Result<Output, CliError> {
    if !lambda.is_dominant() {
        return Err(CliError::Usage(format!("{lambda} is not dominant")));
    }
    let ch = freudenthal(lambda, depth)?;
    let mut entries: Vec<(&Weight, &BigUint)> = ch.iter().collect();
    entries.sort_by_key(|(w, _)| (ch.drop_of(w), std::cmp::Reverse(w.omega1)));
    let mut table = Table::new(&["weight", "mult"]);
    for (w, m) in entries {
        table.push(vec![Cell::Weight(*w), Cell::Big(m.clone())]);
    }
    Ok(Output::table(table))
}

/// Nonzero `[W(μ) : D(2, λ)](q)`, `λ` descending.
pub fn flag_mult(mu: i64) -> Result<Output, CliError> {
    let mu = u64::try_from(mu)
        .map_err(|_| CliError::Usage(format!("mu must be nonnegative, got {mu}")))?;
    let mut table = Table::new(&["lambda", "poly"]);
    for lambda in (0..=mu).rev() {
        let poly = weyl_flag_poly(mu, lambda);
        if !poly.is_zero() {
            table.push(vec![Cell::Int(lambda as i64), Cell::Poly(poly)]);
        }
    }
    Ok(Output::table(table))
}

/// `Γ_Φ` with `λ ≤ lambda_max`, sorted by `(λ, r)`.
pub fn gamma(phi: &Weight, lambda_max: u64) -> Result<Output, CliError> {
    if !phi.is_dominant() {
        return Err(CliError::Usage(format!("{phi} is not dominant")));
    }
    let mut table = Table::new(&["lambda", "r"]);
    for e in gamma_set(phi, lambda_max)? {
        table.push(vec![Cell::Int(e.lambda as i64), Cell::Int(e.r)]);
    }
    Ok(Output::table(table))
}
