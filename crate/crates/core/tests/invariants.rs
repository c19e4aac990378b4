mod common;

use common::{named_dga, random_stable_tame};
use lch_core::corpus;
use lch_core::invariants::{
    chi_star, compare, compare_with, enumerate_augmentations, linearized_homology, polynomial_multiset,
    report, InvariantError, Verdict,
};
use lch_core::ncalg::{apply_tame_automorphism, stabilize, Element};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn trefoil_has_five_augmentations() {
    let dga = named_dga("trefoil", 2);
    let augs = enumerate_augmentations(&dga, 2, 1).unwrap();
    assert_eq!(augs.len(), 5);
    for a in &augs {
        assert_eq!(linearized_homology(&dga, a).unwrap().to_string(), "2·λ^0 + 1·λ^1");
    }
}

#[test]
fn trefoil_report_block() {
    let dga = named_dga("trefoil", 2);
    let text = report(&dga, 2, 1, 1 << 20).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("augs p=2 t=1 count=5"));
    assert_eq!(lines.next(), Some("linpoly p=2 aug=0 = 2·λ^0 + 1·λ^1"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn stabilized_trefoil_keeps_count_and_polynomials() {
    let dga = named_dga("trefoil", 2);
    let st = stabilize(&dga, 3);
    assert!(st.check_d_squared().passed());
    let a = enumerate_augmentations(&dga, 2, 1).unwrap();
    let b = enumerate_augmentations(&st, 2, 1).unwrap();
    assert_eq!(a.len(), b.len());
    assert_eq!(polynomial_multiset(&dga, &a).unwrap(), polynomial_multiset(&st, &b).unwrap());
}

#[test]
fn trefoil_tame_move_keeps_count() {
    let dga = named_dga("trefoil", 2);
    let b1 = dga.index_of("b1").unwrap();
    let b3 = dga.index_of("b3").unwrap();
    let moved = apply_tame_automorphism(&dga, b1, &Element::generator(2, b3 as u32)).unwrap();
    assert_ne!(moved.differentials(), dga.differentials());
    assert_eq!(enumerate_augmentations(&moved, 2, 1).unwrap().len(), 5);
}

#[test]
fn chekanov_pair_is_distinguished_over_f2() {
    let a = named_dga("chekanov1", 2);
    let b = named_dga("chekanov2", 2);
    let v = compare(&a, &b, 2).unwrap();
    assert!(matches!(v, Verdict::Distinguished(_)), "{v}");
    assert_eq!(
        v.to_string(),
        "DISTINGUISHED linearized homology [2·λ^0 + 1·λ^1] vs [1·λ^-2 + 1·λ^1 + 1·λ^2]"
    );
    let pa = polynomial_multiset(&a, &enumerate_augmentations(&a, 2, 1).unwrap()).unwrap();
    let pb = polynomial_multiset(&b, &enumerate_augmentations(&b, 2, 1).unwrap()).unwrap();
    assert!(pa.iter().all(|p| p.to_string() == "2·λ^0 + 1·λ^1"));
    assert!(pb.iter().all(|p| p.to_string() == "1·λ^-2 + 1·λ^1 + 1·λ^2"));
}

#[test]
fn compare_is_symmetric_on_named_pairs() {
    let names: Vec<&str> = corpus::NAMED.iter().map(|p| p.name).collect();
    for x in &names {
        for y in &names {
            let (a, b) = (named_dga(x, 0), named_dga(y, 0));
            for p in [2, 3] {
                let ab = compare(&a, &b, p).unwrap();
                let ba = compare(&b, &a, p).unwrap();
                assert_eq!(ab.is_distinguished(), ba.is_distinguished(), "{x} {y} p={p}");
            }
        }
    }
}

#[test]
fn a_knot_is_never_distinguished_from_itself() {
    for p in &corpus::NAMED {
        let d = named_dga(p.name, 0);
        assert_eq!(compare(&d, &d, 3).unwrap(), Verdict::Inconclusive);
    }
}

#[test]
fn budget_is_reported() {
    let dga = named_dga("trefoil", 0);
    let err = compare_with(&dga, &dga, 3, 2, 26).unwrap_err();
    assert_eq!(err, InvariantError::Budget { needed: 27, budget: 26 });
}

#[test]
fn normalized_counts_see_through_degree_zero_stabilization() {
    let dga = named_dga("trefoil", 0);
    let st = stabilize(&dga, 0);
    assert_eq!(chi_star(&st), chi_star(&dga).map(|c| c + 2));
    assert_eq!(compare(&dga, &st, 2).unwrap(), Verdict::Inconclusive);
    assert_eq!(compare(&dga, &stabilize(&st, 0), 3).unwrap(), Verdict::Inconclusive);
    // the trefoil's five augmentations against the unknot's one
    let v = compare(&dga, &named_dga("unknot", 0), 2).unwrap();
    assert!(v.is_distinguished());
}

#[test]
fn chekanov_counts_differ_after_normalization() {
    let a = named_dga("chekanov1", 0);
    let b = named_dga("chekanov2", 0);
    assert_eq!(chi_star(&a), Some(3));
    assert_eq!(chi_star(&b), Some(1));
    assert_eq!(enumerate_augmentations(&a, 2, 1).unwrap().len(), 6);
    assert_eq!(enumerate_augmentations(&b, 2, 1).unwrap().len(), 2);
}

#[test]
fn degree_zero_stabilization_multiplies_by_p() {
    for name in ["unknot", "trefoil", "chekanov1", "chekanov2"] {
        let dga = named_dga(name, 0);
        for (p, t) in [(2, 1), (3, 2), (5, 4)] {
            let n = enumerate_augmentations(&dga, p, t).unwrap().len();
            let m = enumerate_augmentations(&stabilize(&dga, 0), p, t).unwrap().len();
            assert_eq!(m, p as usize * n, "{name} p={p}");
        }
    }
}

fn signature(dga: &lch_core::ncalg::Dga, p: u32, t: u64) -> (usize, Vec<String>) {
    let augs = enumerate_augmentations(dga, p, t).unwrap();
    let polys = polynomial_multiset(dga, &augs).unwrap();
    (augs.len(), polys.iter().map(|x| x.to_string()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn stable_tame_moves_preserve_invariants(
        seed in any::<u64>(),
        entry in 0usize..corpus::NAMED.len(),
        moves in 1usize..4,
    ) {
        let dga = named_dga(corpus::NAMED[entry].name, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let moved = random_stable_tame(&mut rng, &dga, moves);
        prop_assert!(moved.check_d_squared().passed());
        prop_assert!(moved.degree_violations().is_empty());
        for (p, t) in [(2, 1), (3, 2)] {
            prop_assert_eq!(signature(&dga, p, t), signature(&moved, p, t));
        }
    }
}
