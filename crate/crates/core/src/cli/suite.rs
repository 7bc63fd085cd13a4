//! Seeded Reidemeister invariance checks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::complex::{persistence, tangle_complex, ComplexError, Persistence};
use crate::linalg::Field;
use crate::tangle::{random_move_pair, Move, SliceWord, TangleDiagram};

/// One diagram pair related by a move, and whether every page agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReidemeisterCase {
    pub mv: Move,
    pub index: usize,
    pub before: String,
    pub after: String,
    /// Pages compared, `E_1` up to the first page where both have stabilized.
    pub pages: i64,
    pub pass: bool,
}

impl ReidemeisterCase {
    pub fn to_json(&self) -> Value {
        json!({
            "move": self.mv.name(),
            "index": self.index,
            "before": self.before,
            "after": self.after,
            "pages": self.pages,
            "pass": self.pass,
        })
    }
}

/// Compares `E_∞` and `E_r` for `r = 1, …` up to the point where both
/// sequences have degenerated, and at least through `E_3`.
fn pages_agree(a: &Persistence, b: &Persistence) -> (i64, bool) {
    let last = a.max_length().max(b.max_length()).max(2) + 1;
    let ok = (1..=last).all(|r| a.page(Some(r)) == b.page(Some(r))) && a.page(None) == b.page(None);
    (last, ok)
}

/// For each move, `pairs` random diagram pairs with at most `n_max`
/// crossings, drawn from one seeded stream; pairs are evaluated in parallel
/// and reported in generation order.
pub fn reidemeister_suite<F: Field>(
    seed: u64,
    moves: &[Move],
    n_max: usize,
    pairs: usize,
    link: bool,
    epsilon: i8,
    alg: &Algebra<F>,
) -> Result<Vec<ReidemeisterCase>, ComplexError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn: Vec<(Move, usize, SliceWord, SliceWord)> = Vec::new();
    for &mv in moves {
        for index in 0..pairs {
            let (a, b) = random_move_pair(&mut rng, mv, n_max, link);
            drawn.push((mv, index, a, b));
        }
    }
    drawn
        .into_par_iter()
        .map(|(mv, index, a, b)| {
            let pa = persistence(&tangle_complex(&TangleDiagram::new(a.clone()).expect("generated word"), epsilon, alg)?);
            let pb = persistence(&tangle_complex(&TangleDiagram::new(b.clone()).expect("generated word"), epsilon, alg)?);
            let (pages, pass) = pages_agree(&pa, &pb);
            Ok(ReidemeisterCase { mv, index, before: a.to_inline(), after: b.to_inline(), pages, pass })
        })
        .collect()
}
