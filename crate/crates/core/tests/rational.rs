use posbraid::diagram::LinkDiagram;
use posbraid::khovanov::{khovanov_homology, khovanov_homology_scanned, HomologyTable};
use posbraid::rational::{alternating_closed_form, alternating_code, is_alternating, normalize_zeros, t_transform, u_transform};
use proptest::prelude::*;

fn diagram(code: &[i64]) -> LinkDiagram {
    LinkDiagram::from_rational_code(code).unwrap()
}

fn kh(code: &[i64]) -> HomologyTable {
    // the empty code is the round unknot
    let d = if code.is_empty() { LinkDiagram::from_parts(Vec::new(), 0, 1).unwrap() } else { diagram(code) };
    khovanov_homology(&d).unwrap()
}

fn is_knot(code: &[i64]) -> bool {
    diagram(code).component_count() == 1
}

/// Orients `after` so that its linking number matches `before`; reversing one
/// component of a two-component link negates it.
fn matched(before: &LinkDiagram, after: LinkDiagram) -> LinkDiagram {
    if after.component_count() == 2 && after.linking_number() != before.linking_number() {
        after.with_component_reversed(0)
    } else {
        after
    }
}

#[test]
fn end_zeros_untwist() {
    for code in [vec![0, 3, 3], vec![0, 2, 1, 2], vec![2, 1, 3, 0], vec![3, 1, 0]] {
        let n = normalize_zeros(&code);
        assert_eq!(kh(&code), kh(&n), "{code:?} vs {n:?}");
    }
}

#[test]
fn two_ones_is_the_unlink() {
    let d = diagram(&[1, 1]);
    assert_eq!(d.component_count(), 2);
    assert_eq!(kh(&[1, 1]), kh(&[0]));
    assert_ne!(kh(&[1, 1]), kh(&[-1]));
    assert_eq!(u_transform(&[1, 1]).unwrap(), vec![0]);
}

#[test]
fn listed_moves_keep_the_knot() {
    assert_eq!(kh(&[2, -1, 1]), kh(&[3, 2]));
    assert_eq!(kh(&[2, -1, 1, 1, 3]), kh(&[3, 1, 2]));
    assert_eq!(kh(&[1, -1, 1, 2]), kh(&[2, 1, -1, 1]));
    let code = [3, 2, 2];
    let (alt, _) = alternating_code(&code).unwrap();
    assert!(is_knot(&code));
    assert_eq!(kh(&code), kh(&alt));
}

#[test]
fn u_is_not_its_mirror() {
    // a chiral knot tells the two twist conventions apart
    let mut chiral = 0;
    for code in [[2, 3], [3, 3], [4, 2], [2, 4], [3, 4]] {
        if !is_knot(&code) {
            continue;
        }
        let u = u_transform(&code).unwrap();
        let mirror: Vec<i64> = u.iter().map(|a| -a).collect();
        if kh(&code) != kh(&mirror) {
            chiral += 1;
            assert_eq!(kh(&code), kh(&u));
        }
    }
    assert!(chiral > 0);
}

fn small_code(min: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(min..=3i64, 2..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn u_preserves_homology(code in small_code(1)) {
        let u = u_transform(&code).unwrap();
        prop_assume!(is_knot(&code));
        prop_assert_eq!(kh(&code), kh(&u), "{:?} -> {:?}", code, u);
    }

    #[test]
    fn t_preserves_homology(mut code in proptest::collection::vec(1..=3i64, 4..=5), i in 2usize..=3) {
        prop_assume!(i <= code.len() - 2);
        code[i - 1] = -1;
        let t = t_transform(&code, i).unwrap();
        prop_assume!(is_knot(&code));
        prop_assert_eq!(kh(&code), kh(&t), "{:?} at {} -> {:?}", code, i, t);
    }

    #[test]
    fn alternating_reduction(code in proptest::collection::vec(2..=4i64, 2..=5)) {
        let (alt, b) = alternating_code(&code).unwrap();
        let m = code.len();
        prop_assert!(is_alternating(&alt).unwrap());
        let d = diagram(&code);
        let d2 = matched(&d, diagram(&alt));
        prop_assert!(d2.is_a_adequate());
        // zero boxes are empty, so the uncollapsed form is the same diagram
        let raw = diagram(&alternating_closed_form(&code));
        prop_assert_eq!(raw.circles_all_a(), m + 1);
        prop_assert_eq!(d2.circles_all_a(), m + 1);
        prop_assert_eq!(d2.positive_count() as i64 - d.positive_count() as i64, b.delta_p);
        prop_assert_eq!(d2.negative_count() as i64 - d.negative_count() as i64, b.delta_n);
        prop_assert_eq!(d2.writhe() - d.writhe(), b.delta_w);
        if d.component_count() == 1 {
            prop_assert_eq!(khovanov_homology_scanned(&d).unwrap(), khovanov_homology_scanned(&d2).unwrap());
            if d.crossing_count() <= 11 {
                prop_assert_eq!(kh(&code), khovanov_homology(&d2).unwrap());
            }
        }
    }
}
