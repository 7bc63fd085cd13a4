//! Seeded random slice words and local Reidemeister moves.

use rand::Rng;

use super::slice::{Dir, Slice, SliceWord};

/// Shape limits for generated diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomConfig {
    pub max_crossings: usize,
    pub max_width: usize,
    pub max_inputs: usize,
    /// Produce link diagrams (no boundary points).
    pub link: bool,
}

impl RandomConfig {
    pub fn tangle(max_crossings: usize) -> Self {
        Self { max_crossings, max_width: 6, max_inputs: 4, link: false }
    }

    pub fn link(max_crossings: usize) -> Self {
        Self { max_crossings, max_width: 6, max_inputs: 0, link: true }
    }
}

const CUP_WEIGHT: f64 = 0.2;
const CAP_WEIGHT: f64 = 0.2;

fn admissible(dirs: &[Dir], s: &Slice, max_width: usize) -> bool {
    let w = dirs.len();
    match *s {
        Slice::Cap(i) => i + 1 < w && dirs[i] != dirs[i + 1],
        Slice::Cup(i, _) => i <= w && w + 2 <= max_width,
        Slice::CrossOver(i) | Slice::CrossUnder(i) => i + 1 < w,
    }
}

fn apply(dirs: &mut Vec<Dir>, s: &Slice) {
    match *s {
        Slice::Cap(i) => {
            dirs.drain(i..i + 2);
        }
        Slice::Cup(i, d) => {
            dirs.splice(i..i, [d, d.flip()]);
        }
        Slice::CrossOver(i) | Slice::CrossUnder(i) => dirs.swap(i, i + 1),
    }
}

fn random_dir<R: Rng>(rng: &mut R) -> Dir {
    if rng.random_bool(0.5) { Dir::Up } else { Dir::Down }
}

/// Draws slices with cup/cap/crossing weights 0.2/0.2/0.6, rejecting
/// inadmissible positions, until `crossings` crossings are placed. Link
/// diagrams are then closed with caps.
pub fn random_slice_word_with<R: Rng>(rng: &mut R, cfg: &RandomConfig, crossings: usize) -> SliceWord {
    let p = if cfg.link { 0 } else { rng.random_range(0..=cfg.max_inputs.min(cfg.max_width)) };
    let inputs: Vec<Dir> = (0..p).map(|_| random_dir(rng)).collect();
    let mut dirs = inputs.clone();
    let mut slices = Vec::new();
    if cfg.link {
        let s = Slice::Cup(0, random_dir(rng));
        apply(&mut dirs, &s);
        slices.push(s);
    }
    let mut placed = 0;
    let mut attempts = 0;
    while placed < crossings && attempts < 10_000 {
        attempts += 1;
        let w = dirs.len();
        let u: f64 = rng.random();
        let s = if u < CUP_WEIGHT {
            Slice::Cup(rng.random_range(0..=w), random_dir(rng))
        } else if u < CUP_WEIGHT + CAP_WEIGHT {
            if w < 2 {
                continue;
            }
            Slice::Cap(rng.random_range(0..w - 1))
        } else {
            if w < 2 {
                continue;
            }
            let i = rng.random_range(0..w - 1);
            if rng.random_bool(0.5) { Slice::CrossOver(i) } else { Slice::CrossUnder(i) }
        };
        if !admissible(&dirs, &s, cfg.max_width) {
            continue;
        }
        if s.is_crossing() {
            placed += 1;
        }
        apply(&mut dirs, &s);
        slices.push(s);
    }
    if cfg.link {
        while !dirs.is_empty() {
            let opts: Vec<usize> = (0..dirs.len() - 1).filter(|&i| dirs[i] != dirs[i + 1]).collect();
            let s = Slice::Cap(opts[rng.random_range(0..opts.len())]);
            apply(&mut dirs, &s);
            slices.push(s);
        }
    }
    SliceWord::new(inputs, slices).expect("generated slices are admissible")
}

/// A random diagram with between 1 and `max_crossings` crossings.
pub fn random_slice_word<R: Rng>(rng: &mut R, cfg: &RandomConfig) -> SliceWord {
    let n = rng.random_range(1..=cfg.max_crossings.max(1));
    random_slice_word_with(rng, cfg, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    R1,
    R2,
    R3,
}

impl Move {
    pub fn name(self) -> &'static str {
        match self {
            Move::R1 => "R1",
            Move::R2 => "R2",
            Move::R3 => "R3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "R1" => Some(Move::R1),
            "R2" => Some(Move::R2),
            "R3" => Some(Move::R3),
            _ => None,
        }
    }

    /// Crossings added by the move.
    pub fn crossings(self) -> usize {
        match self {
            Move::R1 => 1,
            Move::R2 => 2,
            Move::R3 => 3,
        }
    }
}

fn insert(word: &SliceWord, level: usize, local: &[Slice]) -> SliceWord {
    let mut slices = word.slices.clone();
    slices.splice(level..level, local.iter().copied());
    SliceWord::new(word.inputs.clone(), slices).expect("local move keeps the word admissible")
}

/// A pair of diagrams related by one move at a random admissible site:
/// for R1 and R2 the base word and the word with the move inserted, for R3
/// the two sides of the braid relation inserted at the same place.
/// Returns `None` if the word has no admissible site.
pub fn apply_move<R: Rng>(rng: &mut R, word: &SliceWord, mv: Move) -> Option<(SliceWord, SliceWord)> {
    let levels = word.orientations().expect("valid word");
    let need = match mv {
        Move::R1 => 1,
        Move::R2 => 2,
        Move::R3 => 3,
    };
    let sites: Vec<(usize, usize)> = levels
        .iter()
        .enumerate()
        .flat_map(|(l, d)| (0..(d.len() + 1).saturating_sub(need)).map(move |i| (l, i)))
        // The braid pattern reverses three strands; keep the orientations intact.
        .filter(|&(l, i)| mv != Move::R3 || levels[l][i] == levels[l][i + 2])
        .collect();
    if sites.is_empty() {
        return None;
    }
    let (level, i) = sites[rng.random_range(0..sites.len())];
    let x = |over: bool, k: usize| if over { Slice::CrossOver(k) } else { Slice::CrossUnder(k) };
    let over = rng.random_bool(0.5);
    match mv {
        Move::R1 => {
            let d = levels[level][i];
            let local = if rng.random_bool(0.5) {
                [Slice::Cup(i + 1, d), x(over, i), Slice::Cap(i + 1)]
            } else {
                [Slice::Cup(i, d.flip()), x(over, i + 1), Slice::Cap(i)]
            };
            Some((word.clone(), insert(word, level, &local)))
        }
        Move::R2 => Some((word.clone(), insert(word, level, &[x(over, i), x(!over, i)]))),
        Move::R3 => {
            let (a, b) = if rng.random_bool(0.5) {
                ([x(over, i), x(over, i + 1), x(over, i)], [x(over, i + 1), x(over, i), x(over, i + 1)])
            } else {
                // σ₁σ₂σ₁⁻¹ = σ₂⁻¹σ₁σ₂
                ([x(true, i), x(true, i + 1), x(false, i)], [x(false, i + 1), x(true, i), x(true, i + 1)])
            };
            Some((insert(word, level, &a), insert(word, level, &b)))
        }
    }
}

fn shifted(s: &Slice, by: usize) -> Slice {
    match *s {
        Slice::Cap(i) => Slice::Cap(i + by),
        Slice::Cup(i, d) => Slice::Cup(i + by, d),
        Slice::CrossOver(i) => Slice::CrossOver(i + by),
        Slice::CrossUnder(i) => Slice::CrossUnder(i + by),
    }
}

/// A random base diagram and a move applied to it, with at most `n_max`
/// crossings on either side.
pub fn random_move_pair<R: Rng>(rng: &mut R, mv: Move, n_max: usize, link: bool) -> (SliceWord, SliceWord) {
    let base_max = n_max.saturating_sub(mv.crossings());
    let cfg = if link { RandomConfig::link(base_max) } else { RandomConfig::tangle(base_max) };
    loop {
        let n = rng.random_range(0..=base_max);
        let mut base = random_slice_word_with(rng, &cfg, n);
        if mv == Move::R3 && base.widths().iter().all(|&w| w < 3) {
            base = if link {
                // A split unknot on the left widens every level by two.
                let mut slices = vec![Slice::Cup(0, Dir::Up)];
                slices.extend(base.slices.iter().map(|s| shifted(s, 2)));
                slices.push(Slice::Cap(0));
                SliceWord::new(Vec::new(), slices).expect("split union with an unknot")
            } else {
                let mut inputs = base.inputs.clone();
                let extra = 3usize.saturating_sub(inputs.len());
                inputs.extend((0..extra).map(|_| random_dir(rng)));
                SliceWord::new(inputs, base.slices.clone()).expect("extra strands on the right")
            };
        }
        if let Some(pair) = apply_move(rng, &base, mv) {
            return pair;
        }
    }
}
