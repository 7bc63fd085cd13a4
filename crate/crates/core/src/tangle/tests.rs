use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn diagram(s: &str) -> TangleDiagram {
    TangleDiagram::parse(s).unwrap()
}

const HOPF: &str = "in 0 / CUP 1 u / CUP 3 u / XO 2 / XO 2 / CAP 3 / CAP 1";

#[test]
fn parses_examples() {
    let t = diagram("in 2 / orient u u / XO 1");
    assert_eq!((t.p(), t.q(), t.n()), (2, 2, 1));
    let u = diagram("in 0 / CUP 1 u / CAP 1");
    assert_eq!((u.p(), u.q(), u.n()), (0, 0, 0));
    assert!(u.is_link());
    let full = "tangle v1\nin 2\norient u d  # comment\nXU 1\nCAP 1\nend\n";
    assert_eq!(diagram(full).word, diagram(R1_KINK).word);
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(parse_slice_word("in 2 / orient u u / CAP 2"), Err(TangleError::Malformed(_))));
    assert!(matches!(parse_slice_word("in 2 / orient u u / CAP 1"), Err(TangleError::OrientationMismatch(_))));
    assert!(matches!(parse_slice_word("in 2 / orient u u / FOO 1"), Err(TangleError::Malformed(_))));
    assert!(matches!(parse_slice_word("in 2 / orient u / XO 1"), Err(TangleError::Malformed(_))));
    assert!(matches!(parse_slice_word("in 2 / XO 1"), Err(TangleError::Malformed(_))));
    assert!(matches!(parse_slice_word("in 1 / orient u / XO 0"), Err(TangleError::Malformed(_))));
    assert!(matches!(parse_slice_word("in 2 / orient u u / end / XO 1"), Err(TangleError::Malformed(_))));
}

#[test]
fn text_round_trip() {
    for s in [TWIST_TWO, R2_PAIR, R1_KINK, HOPF] {
        let w = parse_slice_word(s).unwrap();
        assert_eq!(parse_slice_word(&w.to_text()).unwrap(), w);
        assert_eq!(parse_slice_word(&w.to_inline()).unwrap(), w);
    }
}

#[test]
fn crossing_signs_of_worked_diagrams() {
    assert_eq!(diagram(R1_KINK).crossing_signs(), (1, 0));
    assert_eq!(diagram(R2_PAIR).crossing_signs(), (1, 1));
    assert_eq!(diagram(TWIST_TWO).crossing_signs(), (2, 0));
    // reversing both strands keeps the counts
    assert_eq!(diagram("in 2 / orient d u / XU 1 / CAP 1").crossing_signs(), (1, 0));
    assert_eq!(diagram("in 2 / orient d d / XO 1 / XU 1").crossing_signs(), (1, 1));
    assert_eq!(diagram("in 2 / orient u u / XO 1").crossing_signs(), (1, 0));
    assert_eq!(diagram("in 2 / orient u u / XU 1").crossing_signs(), (0, 1));
    assert_eq!(diagram(HOPF).crossing_signs(), (0, 2));
}

#[test]
fn mirror_swaps_sign_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::tangle(6))).unwrap();
        let (a, b) = t.crossing_signs();
        assert_eq!(t.mirror().crossing_signs(), (b, a));
    }
}

#[test]
fn single_crossing_smoothings_are_two_arcs() {
    let t = diagram("in 2 / orient u u / XO 1");
    for alpha in 0..2 {
        let r = resolve(&t, alpha, 1);
        assert_eq!(r.type_word(), vec![1, 1]);
    }
    let v = resolve(&t, 0, 1);
    assert_eq!(v.components[0].kind, ComponentKind::Arc { start: Point::Bottom(0), end: Point::Top(0) });
    assert_eq!(v.components[1].kind, ComponentKind::Arc { start: Point::Top(1), end: Point::Bottom(1) });
    let h = resolve(&t, 1, 1);
    assert_eq!(h.components[0].kind, ComponentKind::Arc { start: Point::Bottom(0), end: Point::Bottom(1) });
    assert_eq!(h.components[1].kind, ComponentKind::Arc { start: Point::Top(1), end: Point::Top(0) });
}

#[test]
fn kink_smoothings() {
    let t = diagram(R1_KINK);
    let r0 = resolve(&t, 0, 1);
    let r1 = resolve(&t, 1, 1);
    assert_eq!((r0.arcs(), r0.circles()), (1, 1));
    assert_eq!((r1.arcs(), r1.circles()), (1, 0));
    let cube = build_cube(&t, 1);
    assert_eq!(cube.edges[0].kind, SaddleKind::CircleArcToArc);
    let neg = diagram("in 2 / orient u d / XO 1 / CAP 1");
    assert_eq!(neg.crossing_signs(), (0, 1));
    assert_eq!(build_cube(&neg, 1).edges[0].kind, SaddleKind::ArcToCircleArc);
}

#[test]
fn hopf_link_smoothings() {
    let t = diagram(HOPF);
    for alpha in 0..4 {
        let r = resolve(&t, alpha, 1);
        assert_eq!(r.arcs(), 0);
        assert_eq!(r.circles(), independent_circle_count(&t, alpha), "alpha={alpha}");
    }
    assert_eq!(resolve(&t, 0, 1).circles(), 2);
    let cube = build_cube(&t, 1);
    assert!(matches!(cube.edges[0].kind, SaddleKind::MergeCC | SaddleKind::SplitCC));
}

#[test]
fn cube_sizes() {
    let t = diagram("in 2 / orient u u / XO 1");
    let c = build_cube(&t, 1);
    assert_eq!((c.vertices.len(), c.edges.len()), (2, 1));
    assert_eq!(c.edges[0].kind, SaddleKind::ArcArc);
    assert_eq!(c.edges[0].variant, LocalVariant::X);
    assert_eq!(build_cube(&t, -1).edges[0].variant, LocalVariant::Y);
    let u = build_cube(&diagram("in 0 / CUP 1 u / CAP 1"), 1);
    assert_eq!((u.vertices.len(), u.edges.len()), (1, 0));
    assert_eq!(u.vertices[0].type_word(), vec![0]);
    let r2 = build_cube(&diagram(R2_PAIR), 1);
    assert_eq!((r2.vertices.len(), r2.edges.len()), (4, 4));
    let words: BTreeSet<Vec<u8>> = r2.vertices.iter().map(|v| v.type_word()).collect();
    assert!(words.contains(&vec![1, 0, 1]) || words.contains(&vec![1, 1, 0]) || words.contains(&vec![0, 1, 1]));
}

/// Counts circles by walking an explicit adjacency list of the smoothing.
fn independent_circle_count(t: &TangleDiagram, alpha: usize) -> usize {
    let mut adj: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    let mut link = |a: (usize, usize), b: (usize, usize)| {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    };
    let mut j = 0;
    for (s, sl) in t.word.slices.iter().enumerate() {
        let w = t.widths[s];
        match *sl {
            Slice::Cap(i) => {
                link((s, i), (s, i + 1));
                for k in (0..w).filter(|&k| k != i && k != i + 1) {
                    link((s, k), (s + 1, if k < i { k } else { k - 2 }));
                }
            }
            Slice::Cup(i, _) => {
                link((s + 1, i), (s + 1, i + 1));
                for k in 0..w {
                    link((s, k), (s + 1, if k < i { k } else { k + 2 }));
                }
            }
            Slice::CrossOver(i) | Slice::CrossUnder(i) => {
                let over = matches!(sl, Slice::CrossOver(_));
                let one = alpha >> j & 1 == 1;
                j += 1;
                if over != one {
                    link((s, i), (s + 1, i));
                    link((s, i + 1), (s + 1, i + 1));
                } else {
                    link((s, i), (s, i + 1));
                    link((s + 1, i), (s + 1, i + 1));
                }
                for k in (0..w).filter(|&k| k != i && k != i + 1) {
                    link((s, k), (s + 1, k));
                }
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut circles = 0;
    let nodes: Vec<_> = adj.keys().copied().collect();
    for start in nodes {
        if seen.contains(&start) {
            continue;
        }
        let mut stack = vec![start];
        let mut boundary = false;
        while let Some(x) = stack.pop() {
            if !seen.insert(x) {
                continue;
            }
            boundary |= x.0 == 0 || x.0 == t.levels() - 1;
            stack.extend(adj[&x].iter().copied());
        }
        if !boundary {
            circles += 1;
        }
    }
    circles
}

fn check_resolution_invariants(t: &TangleDiagram, epsilon: i8) {
    let signs = boundary_signs(t, epsilon);
    let cube = build_cube(t, epsilon);
    for r in &cube.vertices {
        assert_eq!(r.arcs(), (t.p() + t.q()) / 2);
        assert_eq!(r.circles(), independent_circle_count(t, r.alpha));
        let mut hit = vec![0; t.p() + t.q()];
        for c in &r.components {
            if let ComponentKind::Arc { start, end } = c.kind {
                assert_eq!(signs[start.index(t.p())], PointSign::Minus);
                assert_eq!(signs[end.index(t.p())], PointSign::Plus);
                hit[start.index(t.p())] += 1;
                hit[end.index(t.p())] += 1;
            }
        }
        assert!(hit.iter().all(|&h| h == 1));
        let anchors: Vec<_> = r.components.iter().map(|c| c.anchor).collect();
        assert!(anchors.windows(2).all(|w| w[0] < w[1]));
    }
    for e in &cube.edges {
        let before = cube.vertices[e.alpha].components.len() as i64;
        let after = cube.vertices[e.alpha | 1 << e.crossing].components.len() as i64;
        let diff = after - before;
        assert!(diff.abs() <= 1);
        assert_eq!(diff == 0, e.kind == SaddleKind::ArcArc);
        assert_eq!(e.untouched.len() + e.source.len(), before as usize);
    }
}

#[test]
fn flipping_the_colouring_reverses_arcs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::tangle(5))).unwrap();
        for alpha in 0..1usize << t.n() {
            let a = resolve(&t, alpha, 1);
            let b = resolve(&t, alpha, -1);
            assert_eq!(a.segment_component, b.segment_component);
            for (x, y) in a.components.iter().zip(&b.components) {
                match (x.kind, y.kind) {
                    (ComponentKind::Arc { start, end }, ComponentKind::Arc { start: s2, end: e2 }) => {
                        assert_eq!((start, end), (e2, s2));
                    }
                    (ComponentKind::Circle, ComponentKind::Circle) => {}
                    _ => panic!("component types differ"),
                }
            }
        }
    }
}

#[test]
fn moves_produce_valid_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for mv in [Move::R1, Move::R2, Move::R3] {
        for link in [false, true] {
            for _ in 0..10 {
                let (a, b) = random_move_pair(&mut rng, mv, 8, link);
                let (ta, tb) = (TangleDiagram::new(a).unwrap(), TangleDiagram::new(b).unwrap());
                assert_eq!((ta.p(), ta.q()), (tb.p(), tb.q()));
                assert!(ta.n() <= 8 && tb.n() <= 8);
                assert_eq!(ta.is_link(), link);
                match mv {
                    Move::R1 => assert_eq!(tb.n(), ta.n() + 1),
                    Move::R2 => assert_eq!(tb.n(), ta.n() + 2),
                    Move::R3 => assert_eq!(tb.n(), ta.n()),
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resolutions_satisfy_arc_invariants(seed in any::<u64>(), eps in prop_oneof![Just(1i8), Just(-1i8)], link in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = if link { RandomConfig::link(6) } else { RandomConfig::tangle(6) };
        let t = TangleDiagram::new(random_slice_word(&mut rng, &cfg)).unwrap();
        check_resolution_invariants(&t, eps);
    }
}

