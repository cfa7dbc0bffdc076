use kashaev_core::algebra::{LaurentPoly, Rational};
use kashaev_core::diagram::{parse_input, Diagram, Kink, Pass, Sign};
use kashaev_core::invariants::{
    alexander_kauffman, alexander_squared_kashaev, classical_signature_gl, conjecture_report, kashaev_invariant,
    signature_profile, square_sign, ScanVerdict, DEFAULT_REFINE_DEPTH,
};
use kashaev_core::matrices::{factorization_check, kashaev_matrix};
use kashaev_core::seifert::{alexander_from_seifert, pythagorean_points, seifert_from_braid};
use proptest::prelude::*;

const KNOTS: &[(&str, &str, &str, i64)] = &[
    ("3_1", "B 2: 1 1 1", "t - 1 + t^-1", -2),
    ("3_1 mirror", "B 2: -1 -1 -1", "t - 1 + t^-1", 2),
    ("4_1", "B 3: 1 -2 1 -2", "-t + 3 - t^-1", 0),
    ("5_1", "B 2: 1 1 1 1 1", "t^2 - t + 1 - t^-1 + t^-2", -4),
    ("7_1", "B 2: 1 1 1 1 1 1 1", "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3", -6),
    ("5_2", "B 3: 1 1 1 2 -1 2", "2*t - 3 + 2*t^-1", -2),
    ("6_1", "B 4: 1 1 2 -1 -3 2 -3", "-2*t + 5 - 2*t^-1", 0),
    ("T(3,4)", "B 3: 1 2 1 2 1 2 1 2", "t^3 - t^2 + 1 - t^-2 + t^-3", -6),
    ("T(3,5)", "B 3: 1 2 1 2 1 2 1 2 1 2", "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4", -8),
];

#[test]
fn corpus_alexander_and_signature() {
    for &(name, text, delta, sigma) in KNOTS {
        let p = parse_input(text).unwrap();
        let d = &p.diagram;
        let a = seifert_from_braid(p.braid.as_ref().unwrap()).unwrap();
        let dk = alexander_kauffman(d).unwrap();
        assert_eq!(dk.to_t_string(), delta, "{name}");
        assert_eq!(alexander_from_seifert(&a), dk, "{name}");
        assert_eq!(a.intersection_det().magnitude().to_string(), "1", "{name}");
        assert_eq!(classical_signature_gl(d), Ok(sigma), "{name}");
        let sq = alexander_squared_kashaev(d, None).unwrap();
        assert!(square_sign(&sq, &dk).is_some(), "{name}");
    }
}

#[test]
fn corpus_reports_pass() {
    let grid = pythagorean_points(64);
    for &(name, text, _, _) in KNOTS {
        let p = parse_input(text).unwrap();
        let a = seifert_from_braid(p.braid.as_ref().unwrap()).unwrap();
        let r = conjecture_report(&p.diagram, Some(&a), &grid).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
        assert_eq!(r.verdict, ScanVerdict::TheoremBacked, "{name}");
        assert!(r.scan_equal(), "{name}");
    }
}

#[test]
fn profile_ends_at_writhe() {
    // Past the outermost Alexander root on either side the value is w(D).
    let mut grid: Vec<Rational> = (-40..=40).map(|k| Rational::new(k.into(), 41.into())).collect();
    grid.extend([Rational::new((-999).into(), 1000.into()), Rational::new(999.into(), 1000.into())]);
    for &(name, text, _, _) in KNOTS {
        let d = parse_input(text).unwrap().diagram;
        let p = signature_profile(&d, &grid, DEFAULT_REFINE_DEPTH).unwrap();
        let w = d.writhe();
        assert_eq!(p.samples.first().unwrap().1, w, "{name}");
        assert_eq!(p.samples.last().unwrap().1, w, "{name}");
        assert_eq!(p.value_at_one, w, "{name}");
    }
}

#[test]
fn pd_trefoil_matches_braid_trefoil() {
    let pd = parse_input("X 1 5 2 4; X 3 1 4 6; X 5 3 6 2").unwrap().diagram;
    let br = parse_input("B 2: 1 1 1").unwrap().diagram;
    for k in 0..=8 {
        let x = Rational::new((k - 4).into(), 4.into());
        assert_eq!(kashaev_invariant(&pd, &x), kashaev_invariant(&br, &x));
    }
    assert_eq!(alexander_kauffman(&pd), alexander_kauffman(&br));
}

#[test]
fn unknot_diagrams() {
    for text in ["", "X 1 1 2 2", "X 1 2 2 1", "B 2: 1 1 -1"] {
        let d = parse_input(text).unwrap().diagram;
        assert_eq!(alexander_kauffman(&d).unwrap(), LaurentPoly::one(), "{text:?}");
        assert_eq!(classical_signature_gl(&d), Ok(0));
        let r = conjecture_report(&d, None, &pythagorean_points(8)).unwrap();
        assert!(r.passed(), "{text:?}: {r:?}");
        assert_eq!(r.verdict, ScanVerdict::Skipped);
    }
}

#[derive(Clone, Debug)]
enum Move {
    R1 { edge: usize, sign: bool, under: bool },
    R2 { a: usize, b: usize, pick: usize },
}

fn moves() -> impl Strategy<Value = Vec<Move>> {
    let one = prop_oneof![
        (any::<usize>(), any::<bool>(), any::<bool>()).prop_map(|(edge, sign, under)| Move::R1 { edge, sign, under }),
        (any::<usize>(), any::<usize>(), any::<usize>()).prop_map(|(a, b, pick)| Move::R2 { a, b, pick }),
    ];
    proptest::collection::vec(one, 1..4)
}

fn apply(d: &Diagram, ms: &[Move]) -> Diagram {
    let mut d = d.clone();
    for m in ms {
        let e = d.edge_count();
        match *m {
            Move::R1 { edge, sign, under } => {
                let sign = if sign { Sign::Positive } else { Sign::Negative };
                let first = if under { Pass::Under } else { Pass::Over };
                d = d.r1_kink(edge % e, Kink { sign, first }).unwrap();
            }
            Move::R2 { a, b, pick } => {
                let (a, b) = (a % e, b % e);
                if a == b {
                    continue;
                }
                let common = d.common_regions(a, b).unwrap();
                if common.is_empty() {
                    continue;
                }
                d = d.r2_move_in(a, b, common[pick % common.len()]).unwrap();
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn rewrites_preserve_invariants(knot in 0..KNOTS.len(), ms in moves(), xnum in -9i64..=9) {
        let base = parse_input(KNOTS[knot].1).unwrap().diagram;
        let d = apply(&base, &ms);
        let x = Rational::new(xnum.into(), 10.into());
        prop_assert!(kashaev_matrix(&d).unwrap().is_symmetric());
        prop_assert!(factorization_check(&d).unwrap());
        prop_assert_eq!(kashaev_invariant(&d, &x).unwrap(), kashaev_invariant(&base, &x).unwrap());
        prop_assert_eq!(alexander_kauffman(&d).unwrap(), alexander_kauffman(&base).unwrap());
        prop_assert_eq!(classical_signature_gl(&d).unwrap(), KNOTS[knot].3);
    }
}
