use lch_core::diagram::{elaborate_front, parse_plat, random_plat, resolve, LagrangianDiagram};
use lch_core::disks::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn diagram(text: &str) -> LagrangianDiagram {
    resolve(&elaborate_front(&parse_plat(text).unwrap()).unwrap()).unwrap()
}

fn random_diagrams(seed: u64, n: usize, crossings: usize) -> Vec<LagrangianDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| resolve(&elaborate_front(&random_plat(&mut rng, crossings, 8)).unwrap()).unwrap())
        .collect()
}

#[test]
fn sweep_agrees_with_exhaustive_search() {
    for (i, d) in random_diagrams(11, 600, 6).iter().enumerate() {
        for a in 0..d.vertices().len() {
            let brute = brute_force_enumerate(d, a, 30).unwrap();
            let sweep = sweep_enumerate(d, a);
            assert_eq!(brute, sweep, "diagram {i}, generator {}", d.vertices()[a].name);
        }
    }
}

#[test]
fn disk_areas_are_positive_and_add_up() {
    for d in random_diagrams(12, 200, 6) {
        for a in 0..d.vertices().len() {
            for k in sweep_enumerate(&d, a) {
                assert!(k.area > 0.into());
                let neg: lch_core::diagram::Rational =
                    k.negatives.iter().map(|&(v, _)| d.vertices()[v].action).sum();
                assert_eq!(k.area, d.vertices()[a].action - neg);
            }
        }
    }
}

#[test]
fn d_squared_vanishes_over_the_integers() {
    for (i, d) in random_diagrams(13, 300, 10).iter().enumerate() {
        for spin in [Spin::Bounding, Spin::Lie] {
            let dga = differential(d, 0, spin).unwrap();
            let report = dga.check_d_squared();
            assert!(report.passed(), "diagram {i} {spin:?}: {:?}", report.failures);
            assert!(dga.degree_violations().is_empty(), "diagram {i}");
            assert!(dga.action_violations().is_empty(), "diagram {i}");
        }
    }
}

#[test]
fn shipped_sign_table_is_candidate_three() {
    assert_eq!(SignTable::candidate(3), SIGN_TABLE);
}

#[test]
fn all_plus_signs_break_d_squared() {
    // signs only matter once some crossing has a nonzero differential
    let diagrams = random_diagrams(5, 200, 10);
    let failing = diagrams.iter().any(|d| {
        let dga = assemble(d, &enumerate_all(d), 0, Spin::Bounding, &SignTable::candidate(0)).unwrap();
        !dga.check_d_squared().passed()
    });
    assert!(failing);
}

#[test]
fn unknot_differential() {
    let d = diagram("L 1\nR 1");
    let dga = differential(&d, 0, Spin::Bounding).unwrap();
    assert_eq!(dga.len(), 1);
    let terms: Vec<_> = dga.diff(0).monomials().map(|(w, k, c)| (w.0.clone(), k, c)).collect();
    assert_eq!(terms.len(), 2);
    assert!(terms.iter().all(|(w, _, c)| w.is_empty() && *c == 1));
    let mut ks: Vec<i32> = terms.iter().map(|t| t.1).collect();
    ks.sort();
    assert_eq!(ks, vec![0, 1]);
}

#[test]
fn trefoil_disk_counts() {
    let d = diagram("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
    let count = |name: &str| sweep_enumerate(&d, d.vertex_by_name(name).unwrap()).len();
    assert_eq!(count("a1"), 4);
    assert_eq!(count("a2"), 4);
    assert_eq!(count("b1") + count("b2") + count("b3"), 0);
}

#[test]
fn zero_corner_budget_is_an_error() {
    let d = diagram("L 1\nR 1");
    assert!(matches!(
        brute_force_enumerate(&d, 0, 0),
        Err(DiskError::Budget { .. })
    ));
}
