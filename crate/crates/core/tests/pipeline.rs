//! End-to-end checks across modules and through the binary.

use std::process::Command;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tanglehom::algebra::{builtin, Algebra, Params};
use tanglehom::complex::{homology_bigraded, tangle_complex};
use tanglehom::compose::{building_block, coequalize, compose_tangle, glue_tangles, tangle_bimodule, tensor, BlockKind};
use tanglehom::linalg::{Fp, Matrix};
use tanglehom::tangle::{random_slice_word, RandomConfig, TangleDiagram, R1_KINK, TWIST_TWO};

fn alg(name: &str, p: u64) -> Algebra<Fp> {
    builtin(name, &Fp::new(p).unwrap(), &Params::new()).unwrap()
}

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tanglehom")).args(args).current_dir(env!("CARGO_MANIFEST_DIR")).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn binary_homology_and_exit_codes() {
    let (code, out, _) = bin(&["homology", "--algebra", "barnatan_pair", "--char", "2", "--t", "0", "--epsilon", "+1", "data/tprime.tangle", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n_plus"], 2);
    let (code, _, err) = bin(&["compose", "--algebra", "khovanov_pair", "data/tprime.tangle"]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1);
    assert_eq!(bin(&["homology", "data/missing.tangle"]).0, 2);
    let (code, out, _) = bin(&["euler", "--algebra", "c_ht", "--h", "0", "--t", "0", "--char", "2", "data/unknot.tangle"]);
    assert_eq!((code, out.as_str()), (0, "A^-2 + A^2\n"));
}

#[test]
fn binary_output_is_deterministic() {
    let args = ["reidemeister", "--seed", "9", "--moves", "R2,R3", "--nmax", "5", "--pairs", "4", "--format", "json"];
    assert_eq!(bin(&args), bin(&args));
}

#[test]
fn kernel_of_the_first_differential_of_twist_two() {
    let c = tangle_complex(&TangleDiagram::parse(TWIST_TWO).unwrap(), 1, &alg("barnatan_pair", 2)).unwrap();
    let d0 = c.diffs[0].to_dense();
    let f = c.field;
    let ker = d0.kernel_basis();
    assert_eq!(ker.len(), 2);
    // A has basis (1, y); A⊗A is indexed 2a+b.
    let expected = [vec![0, 1, 1, 0], vec![0, 1, 0, 1]];
    let both: Vec<Vec<u64>> = ker.iter().cloned().chain(expected.iter().cloned()).collect();
    assert_eq!(Matrix::from_columns(&f, 4, &both).rank(), 2);
}

#[test]
fn reidemeister_one_composite_has_the_two_term_shape() {
    let a = alg("barnatan_pair", 2);
    let c = compose_tangle(&TangleDiagram::parse(R1_KINK).unwrap(), 1, &a).unwrap();
    // Same term sizes as the global complex, and two surviving generators.
    let global = tangle_complex(&TangleDiagram::parse(R1_KINK).unwrap(), 1, &a).unwrap();
    let sizes = |v: &[Vec<i64>]| v.iter().map(Vec::len).collect::<Vec<_>>();
    assert_eq!(sizes(&c.complex.terms), sizes(&global.terms));
    assert_eq!(homology_bigraded(&c.complex).total(), 2);
}

#[test]
fn arc_closed_on_itself_gives_the_centre() {
    for (name, p, centre) in [("barnatan_pair", 2, 2), ("matrix", 5, 1), ("quaternion", 5, 1), ("m2k_plus_k", 5, 2)] {
        let a = alg(name, p);
        let arc = building_block(BlockKind::Arc, &a).unwrap();
        let mut chain = arc.clone();
        for _ in 0..2 {
            let n = chain.points.len();
            chain = glue_tangles(&chain, &arc, &[(n - 1, 0)]).unwrap();
        }
        let dim_a = a.knowledgeable().unwrap().a.dim();
        assert_eq!(chain.complex.terms[0].len(), dim_a, "{name}");
        let closed = coequalize(&chain, 1, 0).unwrap();
        assert_eq!(closed.complex.terms[0].len(), centre, "{name}");
    }
}

#[test]
fn gluing_order_does_not_change_ranks() {
    let a = alg("barnatan_pair", 2);
    let x = building_block(BlockKind::parse("crossing+TB").unwrap(), &a).unwrap();
    let y = building_block(BlockKind::parse("crossing-TB").unwrap(), &a).unwrap();
    let g1 = glue_tangles(&x, &y, &[(2, 0), (3, 1)]).unwrap();
    let g2 = glue_tangles(&x, &y, &[(3, 1), (2, 0)]).unwrap();
    assert_eq!(homology_bigraded(&g1.complex), homology_bigraded(&g2.complex));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn actions_are_chain_maps_and_arc_gluing_preserves_dimension(seed in 0u64..10_000, eps in prop::sample::select(vec![1i8, -1])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = TangleDiagram::new(random_slice_word(&mut rng, &RandomConfig::tangle(4))).unwrap();
        for (name, p) in [("barnatan_pair", 2), ("lee_pair", 2), ("m2k_plus_k", 5)] {
            let a = alg(name, p);
            let b = tangle_bimodule(&t, eps, &a).unwrap();
            prop_assert!(b.verify(&a.knowledgeable().unwrap().a).passed(), "{} {}", name, t.word);
        }
        let bn = alg("barnatan_pair", 2);
        let b = tangle_bimodule(&t, eps, &bn).unwrap();
        let arc = building_block(BlockKind::Arc, &bn).unwrap();
        if let Some(plus) = b.points.iter().position(|p| p.sign == tanglehom::tangle::PointSign::Plus) {
            // Gluing an arc onto any boundary point leaves dimensions unchanged.
            let glued = coequalize(&tensor(&b, &arc), plus, b.points.len()).unwrap();
            prop_assert_eq!(glued.complex.total_dim(), b.complex.total_dim());
        }
    }
}
