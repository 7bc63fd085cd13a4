//! The slice-word text format for plane tangle diagrams.
//!
//! A diagram is read bottom to top as a stack of elementary slices acting on
//! a row of vertical strands:
//!
//! ```text
//! tangle v1
//! in 2
//! orient u u
//! XO 1
//! XU 1
//! end
//! ```
//!
//! Lines may also be separated by `/`, `#` starts a comment, and the header
//! and `end` lines are optional.

use std::fmt;

use super::TangleError;

/// Vertical direction of a strand where it crosses a horizontal line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn flip(self) -> Self {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Dir::Up => "u",
            Dir::Down => "d",
        }
    }

    fn parse(tok: &str) -> Option<Self> {
        match tok {
            "u" | "U" | "up" => Some(Dir::Up),
            "d" | "D" | "down" => Some(Dir::Down),
            _ => None,
        }
    }
}

/// One elementary slice; positions are 0-based here and 1-based in text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// Joins strands `i` and `i+1` from below.
    Cap(usize),
    /// Creates strands `i` and `i+1`; the direction is that of the left leg.
    Cup(usize, Dir),
    /// Strands `i` and `i+1` swap; the one entering at `i` passes over.
    CrossOver(usize),
    /// Strands `i` and `i+1` swap; the one entering at `i` passes under.
    CrossUnder(usize),
}

impl Slice {
    pub fn position(&self) -> usize {
        match *self {
            Slice::Cap(i) | Slice::Cup(i, _) | Slice::CrossOver(i) | Slice::CrossUnder(i) => i,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, Slice::CrossOver(_) | Slice::CrossUnder(_))
    }

    /// Strand count after the slice, given the count before it.
    pub fn width_after(&self, before: usize) -> usize {
        match self {
            Slice::Cap(_) => before - 2,
            Slice::Cup(..) => before + 2,
            _ => before,
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slice::Cap(i) => write!(f, "CAP {}", i + 1),
            Slice::Cup(i, d) => write!(f, "CUP {} {}", i + 1, d.token()),
            Slice::CrossOver(i) => write!(f, "XO {}", i + 1),
            Slice::CrossUnder(i) => write!(f, "XU {}", i + 1),
        }
    }
}

/// A structurally valid slice word: bottom orientations and slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SliceWord {
    pub inputs: Vec<Dir>,
    pub slices: Vec<Slice>,
}

impl SliceWord {
    /// Validates positions and cap orientations.
    pub fn new(inputs: Vec<Dir>, slices: Vec<Slice>) -> Result<Self, TangleError> {
        let w = Self { inputs, slices };
        w.orientations()?;
        Ok(w)
    }

    /// Strand directions on each of the `slices.len() + 1` horizontal levels.
    pub fn orientations(&self) -> Result<Vec<Vec<Dir>>, TangleError> {
        let mut levels = vec![self.inputs.clone()];
        for (n, s) in self.slices.iter().enumerate() {
            let mut cur = levels.last().unwrap().clone();
            let w = cur.len();
            let i = s.position();
            let bad = |what: &str| TangleError::Malformed(format!("slice {} ({s}): {what} with {w} strands", n + 1));
            match *s {
                Slice::Cap(_) => {
                    if i + 1 >= w {
                        return Err(bad("position out of range"));
                    }
                    if cur[i] == cur[i + 1] {
                        return Err(TangleError::OrientationMismatch(format!(
                            "slice {} ({s}) joins two strands both pointing {}",
                            n + 1,
                            cur[i].token()
                        )));
                    }
                    cur.drain(i..i + 2);
                }
                Slice::Cup(_, d) => {
                    if i > w {
                        return Err(bad("position out of range"));
                    }
                    cur.splice(i..i, [d, d.flip()]);
                }
                Slice::CrossOver(_) | Slice::CrossUnder(_) => {
                    if i + 1 >= w {
                        return Err(bad("position out of range"));
                    }
                    cur.swap(i, i + 1);
                }
            }
            levels.push(cur);
        }
        Ok(levels)
    }

    pub fn widths(&self) -> Vec<usize> {
        let mut w = vec![self.inputs.len()];
        for s in &self.slices {
            w.push(s.width_after(*w.last().unwrap()));
        }
        w
    }

    pub fn outputs(&self) -> usize {
        *self.widths().last().unwrap()
    }

    /// Mirror image: every crossing changes from over to under.
    pub fn mirror(&self) -> Self {
        let slices = self
            .slices
            .iter()
            .map(|s| match *s {
                Slice::CrossOver(i) => Slice::CrossUnder(i),
                Slice::CrossUnder(i) => Slice::CrossOver(i),
                other => other,
            })
            .collect();
        Self { inputs: self.inputs.clone(), slices }
    }

    /// The stacked diagram `other` on top of `self`.
    pub fn then(&self, other: &SliceWord) -> Result<Self, TangleError> {
        let top = self.orientations()?.pop().unwrap();
        if top != other.inputs {
            return Err(TangleError::Malformed("top boundary does not match the bottom of the next diagram".into()));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        Self::new(self.inputs.clone(), slices)
    }

    /// Canonical text with one group per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("tangle v1\nin {}\n", self.inputs.len());
        if !self.inputs.is_empty() {
            let toks: Vec<&str> = self.inputs.iter().map(|d| d.token()).collect();
            out.push_str(&format!("orient {}\n", toks.join(" ")));
        }
        for s in &self.slices {
            out.push_str(&format!("{s}\n"));
        }
        out.push_str("end\n");
        out
    }

    /// Compact single-line form using `/` separators.
    pub fn to_inline(&self) -> String {
        let mut parts = vec![format!("in {}", self.inputs.len())];
        if !self.inputs.is_empty() {
            let toks: Vec<&str> = self.inputs.iter().map(|d| d.token()).collect();
            parts.push(format!("orient {}", toks.join(" ")));
        }
        parts.extend(self.slices.iter().map(|s| s.to_string()));
        parts.join(" / ")
    }
}

impl fmt::Display for SliceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_inline())
    }
}

fn position(tok: Option<&str>, line: usize) -> Result<usize, TangleError> {
    let tok = tok.ok_or_else(|| TangleError::Malformed(format!("line {line}: missing position")))?;
    match tok.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i - 1),
        _ => Err(TangleError::Malformed(format!("line {line}: bad position {tok:?}"))),
    }
}

/// Parses the slice-word text format.
pub fn parse_slice_word(text: &str) -> Result<SliceWord, TangleError> {
    let mut inputs: Option<Vec<Dir>> = None;
    let mut count: Option<usize> = None;
    let mut slices = Vec::new();
    let mut ended = false;
    let groups = text.lines().enumerate().flat_map(|(n, l)| {
        let l = l.split('#').next().unwrap_or("");
        l.split('/').map(move |g| (n + 1, g.trim().to_string())).collect::<Vec<_>>()
    });
    for (line, g) in groups {
        if g.is_empty() {
            continue;
        }
        if ended {
            return Err(TangleError::Malformed(format!("line {line}: content after end")));
        }
        let mut toks = g.split_whitespace();
        let kw = toks.next().unwrap();
        let err = |m: &str| TangleError::Malformed(format!("line {line}: {m}"));
        match kw {
            "tangle" => {
                if toks.next() != Some("v1") || count.is_some() {
                    return Err(err("expected header `tangle v1` first"));
                }
            }
            "in" => {
                if count.is_some() {
                    return Err(err("duplicate `in`"));
                }
                let p = toks.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(|| err("`in` needs a count"))?;
                count = Some(p);
                if p == 0 {
                    inputs = Some(Vec::new());
                }
            }
            "orient" => {
                let p = count.ok_or_else(|| err("`orient` before `in`"))?;
                let dirs: Option<Vec<Dir>> = toks.by_ref().map(Dir::parse).collect();
                let dirs = dirs.ok_or_else(|| err("orientations must be u or d"))?;
                if dirs.len() != p {
                    return Err(err(&format!("expected {p} orientations, got {}", dirs.len())));
                }
                inputs = Some(dirs);
            }
            "CAP" | "CUP" | "XO" | "XU" => {
                if inputs.is_none() {
                    return Err(err("slices need `in` and `orient` first"));
                }
                let i = position(toks.next(), line)?;
                let s = match kw {
                    "CAP" => Slice::Cap(i),
                    "CUP" => {
                        let d = toks.next().and_then(Dir::parse).ok_or_else(|| err("CUP needs a leg orientation u or d"))?;
                        Slice::Cup(i, d)
                    }
                    "XO" => Slice::CrossOver(i),
                    _ => Slice::CrossUnder(i),
                };
                slices.push(s);
            }
            "end" => ended = true,
            other => return Err(err(&format!("unknown keyword {other:?}"))),
        }
        if toks.next().is_some() {
            return Err(TangleError::Malformed(format!("line {line}: trailing tokens in {g:?}")));
        }
    }
    let inputs = match (count, inputs) {
        (Some(_), Some(i)) => i,
        (Some(_), None) => return Err(TangleError::Malformed("missing `orient` line".into())),
        (None, _) => return Err(TangleError::Malformed("missing `in` line".into())),
    };
    SliceWord::new(inputs, slices)
}
