//! Cross-route agreement for outer multiplicities and the oracle.

use demazure_mult_core::oracle::{decompose, decompose_with_order, freudenthal, tensor_character};
use demazure_mult_core::outer::{
    classify_phi, limit_assembly, misra_wilson, outer_mult_11, outer_mult_fundamental,
    outer_mult_limit, outer_mult_limit_auto, transfer_automorphism, verify_transfer, PhiLabel,
};
use demazure_mult_core::{Error, Node, Weight};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

const L0: Weight = Weight::LAMBDA0;
const L1: Weight = Weight::LAMBDA1;

#[test]
fn fundamental_vanishes_off_the_labelled_weights() {
    for i in Node::ALL {
        for b in -4..=4 {
            for c in -10..=10 {
                let phi = Weight::new(2, b, c);
                if classify_phi(i, &phi).is_none() {
                    assert_eq!(outer_mult_fundamental(i, &phi), BigUint::from(0u8), "{phi}");
                }
            }
        }
    }
}

#[test]
fn limit_reproduces_fundamental_cases() {
    for i in Node::ALL {
        for label in PhiLabel::all(i, 20) {
            let phi = label.phi();
            let expected = outer_mult_fundamental(i, &phi);
            // V(Λ₀) ⊗ V(Λᵢ) read with either factor first.
            assert_eq!(
                outer_mult_limit_auto(Node::Zero, &Weight::fundamental(i), &phi).unwrap(),
                expected
            );
            assert_eq!(outer_mult_limit_auto(i, &L0, &phi).unwrap(), expected);
        }
    }
}

#[test]
fn limit_at_node_one_reproduces_the_eleven_formula() {
    for s in 0..=15 {
        for phi in [(L1 * 2).shift_delta(-s), (L0 * 2).shift_delta(-s)] {
            assert_eq!(
                outer_mult_limit_auto(Node::One, &L1, &phi).unwrap(),
                outer_mult_11(&phi),
                "{phi}"
            );
        }
    }
}

#[test]
fn limit_support_is_bounded_by_floor_l() {
    for i in Node::ALL {
        for label in PhiLabel::all(i, 40) {
            let assembly =
                limit_assembly(Node::Zero, &Weight::fundamental(i), &label.phi(), 200).unwrap();
            let mut groups: Vec<u64> = assembly
                .support()
                .map(|t| {
                    if i == Node::Zero {
                        t.b
                    } else {
                        t.b.div_ceil(2)
                    }
                })
                .collect();
            groups.dedup();
            assert!(groups.len() as i64 <= label.floor_l() + 1, "{label:?}");
            let (_, f) = assembly.cutoff.unwrap();
            assert!(f < 0);
        }
    }
}

#[test]
fn limit_rejects_unsupported_input() {
    assert_eq!(
        outer_mult_limit(Node::Zero, &Weight::new(2, 1, 0), &Weight::new(3, 1, 0), 10),
        Err(Error::UnsupportedLevel(2))
    );
    assert!(matches!(
        outer_mult_limit(Node::Zero, &Weight::new(1, 2, 0), &(L0 * 2), 10),
        Err(Error::NotDominant(_))
    ));
    assert_eq!(
        outer_mult_limit(Node::Zero, &L0, &(L0 * 3), 10).unwrap(),
        BigUint::from(0u8)
    );
}

#[test]
fn transfer_is_consistent_up_to_fifteen() {
    let reports = verify_transfer(15, 15).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn transfer_preserves_multiplicity_for_general_targets() {
    // Any Φ ≤ Λ_j + Λ: transferring to V(Λ₀) ⊗ V(σΛ) keeps the multiplicity.
    let depth = 8;
    for (j, lambda) in [(Node::One, L0), (Node::One, L1), (Node::Zero, L1)] {
        let product = tensor_character(
            &freudenthal(&Weight::fundamental(j), depth).unwrap(),
            &freudenthal(&lambda, depth).unwrap(),
        );
        let table = decompose(&product, depth).unwrap();
        for (phi, m) in table.iter() {
            let (lambda_t, phi_t) = transfer_automorphism(j, &lambda, phi).unwrap();
            assert_eq!(
                &outer_mult_limit_auto(Node::Zero, &lambda_t, &phi_t).unwrap(),
                m,
                "{phi}"
            );
        }
    }
}

#[test]
fn misra_wilson_matches_closed_form() {
    for i in Node::ALL {
        for label in PhiLabel::all(i, 60) {
            assert_eq!(
                misra_wilson(i, label.j, label.s).unwrap(),
                outer_mult_fundamental(i, &label.phi())
            );
        }
    }
}

#[test]
fn tensor_square_of_basic_module_by_hand() {
    // Weights of V(Λ₀) down to drop 1: Λ₀, Λ₀ − δ, Λ₀ − α₀ and s₁s₀Λ₀. Only
    // Λ₀ + (Λ₀ − δ) and its mirror land on 2Λ₀ − δ.
    let a = freudenthal(&L0, 2).unwrap();
    let t = tensor_character(&a, &a);
    assert_eq!(t.get(&(L0 * 2).shift_delta(-1)), Some(BigUint::from(2u8)));
    // Φ⁰_{0,s} for s = 0, 2 and Φ⁰_{1,s} for s = 1, 2 each occur once.
    let mut expected = vec![
        (L0 * 2, 1u8),
        ((L0 * 2).shift_delta(-2), 1),
        ((L1 * 2).shift_delta(-1), 1),
        ((L1 * 2).shift_delta(-2), 1),
    ];
    expected.sort();
    let got: Vec<(Weight, u8)> = decompose(&t, 2)
        .unwrap()
        .iter()
        .map(|(w, m)| (*w, u8::try_from(m).unwrap()))
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn decompose_ignores_candidate_order() {
    let mut rng = StdRng::seed_from_u64(7);
    for (a, b) in [(L0, L1), (L1 * 2, L0), (L0 + L1, L1)] {
        let t = tensor_character(&freudenthal(&a, 7).unwrap(), &freudenthal(&b, 7).unwrap());
        let reference = decompose(&t, 7).unwrap();
        for _ in 0..5 {
            assert_eq!(
                decompose_with_order(&t, 7, |c| c.shuffle(&mut rng)).unwrap(),
                reference
            );
        }
        assert_eq!(
            decompose_with_order(&t, 7, |c| c.reverse()).unwrap(),
            reference
        );
    }
}

#[test]
fn decompose_round_trips_irreducibles() {
    for phi in [
        L0,
        L1,
        L0 * 2,
        L0 + L1,
        Weight::new(3, 1, 4),
        Weight::new(3, 3, 0),
    ] {
        for d in 0..=6 {
            let table = decompose(&freudenthal(&phi, d).unwrap(), d).unwrap();
            assert_eq!(table.len(), 1);
            assert_eq!(table.get(&phi), BigUint::from(1u8));
        }
    }
}
