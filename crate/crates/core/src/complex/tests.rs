use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{builtin, Params};
use crate::linalg::{Fp, Matrix};
use crate::tangle::{random_slice_word, RandomConfig, TangleDiagram, R2_PAIR, TWIST_TWO};

fn f2() -> Fp {
    Fp::new(2).unwrap()
}

fn alg(name: &str, p: u64) -> Algebra<Fp> {
    builtin(name, &Fp::new(p).unwrap(), &Params::new()).unwrap()
}

fn diagram(s: &str) -> TangleDiagram {
    TangleDiagram::parse(s).unwrap()
}

const UNKNOT: &str = "in 0 / CUP 1 u / CAP 1";
const TREFOIL: &str = "in 0 / CUP 1 u / CUP 3 d / XO 2 / XO 2 / XO 2 / CAP 3 / CAP 1";
const HOPF: &str = "in 0 / CUP 1 u / CUP 3 u / XO 2 / XO 2 / CAP 3 / CAP 1";

/// Subspace-formula filtered homology on the dense version of `c`.
fn dense_homology(c: &ChainComplex<Fp>) -> BigradedDims {
    let diffs: Vec<Matrix<Fp>> = c.diffs.iter().map(|d| d.to_dense()).collect();
    dense_filtered_homology(&c.field, c.start, &c.terms, &diffs)
}

#[test]
fn twist_two_barnatan_table() {
    let c = tangle_complex(&diagram(TWIST_TWO), 1, &alg("barnatan_pair", 2)).unwrap();
    assert_eq!(c.terms.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 8, 8]);
    let h = homology_bigraded(&c);
    // The listed class of 1⊗x⊗1 in H² is cohomologous to 1⊗1⊗1 + y⊗1⊗1,
    // which lies in filtration degree 10, so the second class of H² sits
    // in degree 10 rather than 8.
    assert_eq!(h, BigradedDims::from_entries([(2, 0, 1), (4, 0, 1), (10, 2, 1), (12, 2, 1)]));
    assert_eq!(h.poincare().to_string(), "A^2 + A^4 + t^2*A^10 + t^2*A^12");
}

/// `T′` assembled directly from the printed differentials, with the middle
/// term ordered `A ⊗ C ⊗ A`.
fn twist_two_printed(a: &Algebra<Fp>) -> (Vec<Vec<i64>>, Vec<Matrix<Fp>>) {
    use crate::algebra::{tau, tensor_degrees};
    let k = a.knowledgeable().unwrap();
    let (aa, f) = (&k.a, &k.a.field);
    let id = aa.id();
    let d0_part = id.kron(&aa.mu).mul(&tau(f, 2, 2).kron(&id)).mul(&id.kron(&aa.delta));
    let d0 = d0_part.vstack(&d0_part);
    let left = id.kron(&k.iota_star).mul(&aa.delta).kron(&id);
    let right = id.kron(&k.iota_star.kron(&id).mul(&aa.delta));
    let d1 = left.hstack(&right);
    let dd = tensor_degrees(&aa.degrees, &aa.degrees);
    let shift = |v: &[i64], s: i64| v.iter().map(|x| x + s).collect::<Vec<_>>();
    let aca = tensor_degrees(&tensor_degrees(&aa.degrees, &k.c.degrees), &aa.degrees);
    let degs = vec![shift(&dd, 4), [shift(&dd, 6), shift(&dd, 6)].concat(), shift(&aca, 8)];
    (degs, vec![d0, d1])
}

#[test]
fn twist_two_printed_differentials_agree() {
    for name in ["barnatan_pair", "khovanov_pair"] {
        let a = alg(name, 2);
        let (degs, diffs) = twist_two_printed(&a);
        assert!(diffs[1].mul(&diffs[0]).is_zero());
        let printed = dense_filtered_homology(&f2(), 0, &degs, &diffs);
        let ours = homology_bigraded(&tangle_complex(&diagram(TWIST_TWO), 1, &a).unwrap());
        assert_eq!(printed, ours, "{name}");
    }
}

#[test]
fn twist_two_khovanov_polynomial() {
    let p = tangle_polynomial(&diagram(TWIST_TWO), 1, &alg("khovanov_pair", 2)).unwrap();
    assert_eq!(p.to_string(), "A^2 + A^4 + t^1*A^6 + t^1*A^8 + t^2*A^8 + 2*t^2*A^10 + t^2*A^12");
}

#[test]
fn reidemeister_two_pair_is_a_tensor_square() {
    for name in ["khovanov_pair", "barnatan_pair"] {
        let h = homology_bigraded(&tangle_complex(&diagram(R2_PAIR), 1, &alg(name, 2)).unwrap());
        assert_eq!(h, BigradedDims::from_entries([(-2, 0, 1), (0, 0, 2), (2, 0, 1)]), "{name}");
    }
}

#[test]
fn unknot_and_trefoil() {
    let kh = Algebra::Frobenius(alg("khovanov_pair", 2).closed().clone());
    let u = tangle_polynomial(&diagram(UNKNOT), 1, &kh).unwrap();
    assert_eq!(u.to_string(), "A^-2 + A^2");
    let t = diagram(TREFOIL);
    let c = tangle_complex(&t, 1, &kh).unwrap();
    assert_eq!(c.graded_euler_characteristic(), normalized_bracket(&t).unwrap());
    // Over F₂ the integral torsion class adds two generators to the four
    // rational ones.
    let h = homology_bigraded(&c);
    assert_eq!(h.total(), 6);
    assert_eq!(h.poincare().at_t_minus_one(), c.graded_euler_characteristic());
    assert_eq!(h, khovanov_link_oracle(&t, kh.closed()).unwrap());
}

#[test]
fn hopf_link_matches_oracle() {
    let t = diagram(HOPF);
    let kh = alg("khovanov_pair", 2);
    let h = homology_bigraded(&tangle_complex(&t, 1, &kh).unwrap());
    assert_eq!(h, khovanov_link_oracle(&t, kh.closed()).unwrap());
    assert_eq!(h.total(), 4);
}

#[test]
fn arcs_need_a_knowledgeable_algebra() {
    let closed = Algebra::Frobenius(alg("khovanov_pair", 2).closed().clone());
    assert_eq!(tangle_complex(&diagram(TWIST_TWO), 1, &closed).unwrap_err(), ComplexError::AlgebraNotKnowledgeable);
    assert_eq!(kauffman_bracket(&diagram(TWIST_TWO)).unwrap_err(), ComplexError::NotALink);
}

#[test]
fn associated_graded_of_barnatan_is_khovanov() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (bn, kh) = (alg("barnatan_pair", 2), alg("khovanov_pair", 2));
    for _ in 0..10 {
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::tangle(5))).unwrap();
        let c = tangle_complex(&t, 1, &bn).unwrap();
        let g = tangle_complex(&t, 1, &kh).unwrap();
        assert_eq!(c.associated_graded().diffs, g.diffs, "{}", t.word);
        assert_eq!(spectral_page(&c, 1).dims, homology_bigraded(&g));
        assert_eq!(spectral_page(&c, 0).dims, c.term_dims());
    }
}

#[test]
fn noncommutative_algebras_square_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let algs = [alg("m2k_plus_k", 5), alg("hk_plus_k", 5), alg("matrix", 3), alg("quaternion", 3)];
    for _ in 0..6 {
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::tangle(4))).unwrap();
        for a in &algs {
            for eps in [1, -1] {
                let c = tangle_complex(&t, eps, a).unwrap();
                let rep = verify_complex(&c);
                assert!(rep.failures().all(|f| f.name.starts_with("degree") && a.grading() == crate::algebra::GradingMode::None), "{}: {:?}", t.word, rep.failures().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn oracle_agrees_on_random_links() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let kh = alg("khovanov_pair", 2);
    for _ in 0..8 {
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::link(5))).unwrap();
        let c = tangle_complex(&t, 1, &kh).unwrap();
        assert_eq!(homology_bigraded(&c), khovanov_link_oracle(&t, kh.closed()).unwrap(), "{}", t.word);
        assert_eq!(c.graded_euler_characteristic(), normalized_bracket(&t).unwrap(), "{}", t.word);
    }
}

#[test]
fn shifts_and_json() {
    let r = HomologyReport::compute(&diagram(TWIST_TWO), 1, &alg("barnatan_pair", 2), "barnatan_pair").unwrap();
    let j = r.to_json();
    assert_eq!(j["field"]["char"], 2);
    assert_eq!(j["n_plus"], 2);
    assert_eq!(j["homology"].as_array().unwrap().len(), 4);
    assert_eq!(j["polynomial"], "A^2 + A^4 + t^2*A^10 + t^2*A^12");
    let c = ChainComplex::single(&f2(), 0, vec![1, -1], crate::algebra::GradingMode::Graded);
    assert_eq!(c.shift_cohomological(-2).start, -2);
    assert_eq!(c.shift_internal(3).terms[0], vec![4, 2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn persistence_matches_subspace_formula(seed in 0u64..10_000, eps in prop::sample::select(vec![1i8, -1])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::tangle(4))).unwrap();
        for name in ["barnatan_pair", "lee_pair", "khovanov_pair"] {
            let c = tangle_complex(&t, eps, &alg(name, 2)).unwrap();
            prop_assert!(verify_complex(&c).passed());
            let h = homology_bigraded(&c);
            prop_assert_eq!(&h, &dense_homology(&c));
            if name == "khovanov_pair" {
                prop_assert_eq!(h.poincare().at_t_minus_one(), c.graded_euler_characteristic());
            }
        }
    }

    #[test]
    fn crossing_numbering_does_not_matter(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::tangle(4))).unwrap();
        let n = t.n();
        let perm: Vec<usize> = (0..n).rev().collect();
        let a = alg("barnatan_pair", 2);
        let h = homology_bigraded(&tangle_complex(&t, 1, &a).unwrap());
        let h2 = homology_bigraded(&tangle_complex(&t.renumbered(&perm), 1, &a).unwrap());
        prop_assert_eq!(h, h2);
    }
}
