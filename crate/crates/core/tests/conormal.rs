use std::f64::consts::{PI, TAU};

use lch_core::conormal::*;

#[test]
fn pullback_matches_the_canonical_form() {
    for n in [2, 3] {
        let dev = check_contact_pullback(n, 1000, 1e-5);
        assert!(dev < 1e-8, "n = {n}: {dev:e}");
    }
}

#[test]
fn pullback_error_is_second_order() {
    for n in [2, 3] {
        let order = pullback_convergence_order(n, 200, &[1e-2, 1e-3, 1e-4]);
        assert!((1.8..=2.2).contains(&order), "n = {n}: order {order}");
    }
}

#[test]
fn translated_circle_front() {
    let c = PlaneCurve::circle([2.0, 0.0], 1.0, 10_000);
    let f = conormal_front(&c).unwrap();
    for fp in &f.points {
        // sheet 0 is the left normal: inward on a counterclockwise circle
        let sign = if fp.sheet == 0 { -1.0 } else { 1.0 };
        let want = 2.0 * fp.theta.cos() + sign;
        assert!((fp.z - want).abs() < 1e-6, "{fp:?}");
    }
}

#[test]
fn ellipse_has_two_chords_at_every_resolution() {
    for n in [1_000, 10_000, 100_000] {
        let f = conormal_front(&PlaneCurve::ellipse(2.0, 1.0, n)).unwrap();
        let chords = reeb_chords_numeric(&f, 1e-6).unwrap();
        assert_eq!(chords.len(), 2, "n = {n}: {chords:?}");
        let mut actions: Vec<f64> = chords.iter().map(|c| c.action).collect();
        actions.sort_by(f64::total_cmp);
        assert!((actions[0] - 2.0).abs() < 1e-4 && (actions[1] - 4.0).abs() < 1e-4, "{actions:?}");
    }
}

#[test]
fn ellipse_chords_sit_on_the_axes() {
    let f = conormal_front(&PlaneCurve::ellipse(2.0, 1.0, 4096)).unwrap();
    for c in reeb_chords_numeric(&f, 1e-6).unwrap() {
        let d = (c.s1 - c.s2).rem_euclid(TAU);
        assert!((d - PI).abs() < 1e-3, "{c:?}");
        assert!((c.s1 * 2.0 / PI - (c.s1 * 2.0 / PI).round()).abs() < 1e-3, "{c:?}");
    }
}

#[test]
fn ellipse_front_has_no_cusps() {
    let f = conormal_front(&PlaneCurve::ellipse(2.0, 1.0, 2000)).unwrap();
    assert!(front_cusps(&f).is_empty());
}

#[test]
fn circles_are_not_chord_generic() {
    for c in [
        PlaneCurve::circle([0.0, 0.0], 1.0, 1000),
        PlaneCurve::circle([0.3, -1.0], 2.0, 5000),
    ] {
        let f = conormal_front(&c).unwrap();
        assert!(matches!(
            reeb_chords_numeric(&f, 1e-6),
            Err(ConormalError::NotChordGeneric(_))
        ));
    }
}

#[test]
fn chord_actions_ignore_translation() {
    let base = PlaneCurve::ellipse(2.0, 1.0, 3000);
    let actions = |c: &PlaneCurve| {
        let mut a: Vec<f64> = reeb_chords_numeric(&conormal_front(c).unwrap(), 1e-6)
            .unwrap()
            .iter()
            .map(|c| c.action)
            .collect();
        a.sort_by(f64::total_cmp);
        a
    };
    let want = actions(&base);
    for v in [[1.0, 2.0], [-3.5, 0.25], [10.0, -7.0]] {
        let got = actions(&base.translated(v));
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-6);
        }
    }
}

#[test]
fn rotation_shifts_theta() {
    let c = PlaneCurve::ellipse(2.0, 1.0, 500);
    let phi = 0.7;
    let f = conormal_front(&c).unwrap();
    let g = conormal_front(&c.rotated(phi)).unwrap();
    for (a, b) in f.points.iter().zip(&g.points) {
        let d = (b.theta - a.theta - phi).rem_euclid(TAU);
        assert!(d.min(TAU - d) < 1e-9);
        assert!((a.z - b.z).abs() < 1e-9 && (a.p - b.p).abs() < 1e-9);
    }
}

#[test]
fn curve_text_roundtrip_to_front() {
    let text: String = (0..64)
        .map(|i| {
            let s = TAU * i as f64 / 64.0;
            format!("{} {}\n", 2.0 * s.cos(), s.sin())
        })
        .collect();
    let c = parse_curve(&text).unwrap();
    let f = conormal_front(&c).unwrap();
    assert_eq!(f.to_text().lines().count(), 128);
}

#[test]
fn brute_force_double_normals_agree_on_a_limacon() {
    // a non-convex curve with more double normals
    let c = PlaneCurve::from_fn(
        1500,
        |s| {
            let r = 1.0 + 0.6 * s.cos() + 0.1 * (3.0 * s).sin();
            [r * s.cos(), r * s.sin()]
        },
        |s| {
            let r = 1.0 + 0.6 * s.cos() + 0.1 * (3.0 * s).sin();
            let dr = -0.6 * s.sin() + 0.3 * (3.0 * s).cos();
            [dr * s.cos() - r * s.sin(), dr * s.sin() + r * s.cos()]
        },
    )
    .unwrap();
    let chords = reeb_chords_numeric(&conormal_front(&c).unwrap(), 1e-6).unwrap();
    let oracle = double_normals_bruteforce(&c);
    assert_eq!(chords.len(), oracle.len(), "{chords:?}\n{oracle:?}");
}

#[test]
fn chord_parameters_stay_in_one_period() {
    for n in [1000, 4096] {
        let f = conormal_front(&PlaneCurve::ellipse(2.0, 1.0, n)).unwrap();
        for c in reeb_chords_numeric(&f, 1e-6).unwrap() {
            for s in [c.s1, c.s2] {
                assert!((0.0..TAU).contains(&s), "{s}");
            }
            assert!((0.0..PI).contains(&c.theta));
        }
    }
}
