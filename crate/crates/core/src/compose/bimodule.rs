//! Complexes of bimodules with one `A`-action per boundary point, their
//! tensor products and coequalizers.

use crate::algebra::{AxiomReport, FrobeniusData, GradingMode};
use crate::complex::{realize_cube, tensor_complexes, term_layout, total_complex, ChainComplex, TensorShape};
use crate::linalg::{Field, Matrix, Quotient, SparseMatrix, SparseVec};
use crate::tangle::{boundary_signs, ComponentKind, Point, PointSign, TangleDiagram};

use super::ComposeError;

/// A boundary point carrying an action, tagged with a position in some
/// ambient diagram (`level`, `pos`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryPoint {
    pub sign: PointSign,
    pub level: usize,
    pub pos: usize,
}

/// A complex of `(A^{⊗r}, A^{⊗r})`-bimodules: left actions at `-` points,
/// right actions at `+` points.
#[derive(Clone, Debug)]
pub struct BimoduleComplex<F: Field> {
    pub complex: ChainComplex<F>,
    pub points: Vec<BoundaryPoint>,
    /// `actions[p][i][a]` is the operator of basis element `a` of `A` at
    /// point `p` on term `i`: `m ↦ a·m` at `-` points, `m ↦ m·a` at `+`.
    pub actions: Vec<Vec<Vec<SparseMatrix<F>>>>,
    /// Number of coequalizers applied so far.
    pub gluings: usize,
}

impl<F: Field> BimoduleComplex<F> {
    /// The ground field in degree `(0, 0)` with no boundary.
    pub fn unit(f: &F, mode: GradingMode) -> Self {
        Self { complex: ChainComplex::single(f, 0, vec![0], mode), points: Vec::new(), actions: Vec::new(), gluings: 0 }
    }

    pub fn field(&self) -> &F {
        &self.complex.field
    }

    pub fn point_index(&self, level: usize, pos: usize) -> Option<usize> {
        self.points.iter().position(|p| p.level == level && p.pos == pos)
    }

    /// Relabels point `i` as `f(i, point)`.
    pub fn retag(mut self, f: impl Fn(usize, BoundaryPoint) -> (usize, usize)) -> Self {
        for (i, p) in self.points.iter_mut().enumerate() {
            let (l, q) = f(i, *p);
            p.level = l;
            p.pos = q;
        }
        self
    }

    /// Reorders points by `(level, pos)`.
    pub fn sort_points(mut self) -> Self {
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        idx.sort_by_key(|&i| (self.points[i].level, self.points[i].pos));
        self.points = idx.iter().map(|&i| self.points[i]).collect();
        let mut actions = std::mem::take(&mut self.actions);
        self.actions = idx.iter().map(|&i| std::mem::take(&mut actions[i])).collect();
        self
    }

    /// Checks that actions are chain maps, unital, associative, and that
    /// actions at distinct points commute.
    pub fn verify(&self, a: &FrobeniusData<F>) -> AxiomReport {
        let mut rep = AxiomReport::new();
        let f = self.field();
        let c = &self.complex;
        let unit = a.unit_vector();
        for (p, pt) in self.points.iter().enumerate() {
            let tag = format!("point{p}");
            let mut chain = None;
            let mut unital = None;
            let mut assoc = None;
            for (i, ops) in self.actions[p].iter().enumerate() {
                if let Some(d) = c.diffs.get(i) {
                    for (x, op) in ops.iter().enumerate() {
                        if d.mul(op) != self.actions[p][i + 1][x].mul(d) && chain.is_none() {
                            chain = Some(format!("term {i}, basis {x}"));
                        }
                    }
                }
                let dim = c.terms[i].len();
                if combine(f, ops, &unit, dim) != SparseMatrix::identity(f, dim) && unital.is_none() {
                    unital = Some(format!("term {i}"));
                }
                for x in 0..ops.len() {
                    for y in 0..ops.len() {
                        // m·x·y = m·(xy) on the right, x·(y·m) = (xy)·m on the left.
                        let (first, second) = if pt.sign == PointSign::Minus { (y, x) } else { (x, y) };
                        let prod = a.product(&a.basis_vector(x), &a.basis_vector(y));
                        if ops[second].mul(&ops[first]) != combine(f, ops, &prod, dim) && assoc.is_none() {
                            assoc = Some(format!("term {i}, basis ({x},{y})"));
                        }
                    }
                }
            }
            rep.push(format!("{tag}.chain_map"), chain);
            rep.push(format!("{tag}.unital"), unital);
            rep.push(format!("{tag}.associative"), assoc);
        }
        for p in 0..self.points.len() {
            for q in p + 1..self.points.len() {
                let mut bad = None;
                for i in 0..c.terms.len() {
                    for (x, u) in self.actions[p][i].iter().enumerate() {
                        for (y, v) in self.actions[q][i].iter().enumerate() {
                            if u.mul(v) != v.mul(u) && bad.is_none() {
                                bad = Some(format!("term {i}, basis ({x},{y})"));
                            }
                        }
                    }
                }
                rep.push(format!("commute.{p}.{q}"), bad);
            }
        }
        rep
    }
}

/// `Σ_j v_j · ops[j]`.
fn combine<F: Field>(f: &F, ops: &[SparseMatrix<F>], v: &[F::Elem], dim: usize) -> SparseMatrix<F> {
    let mut out = SparseMatrix::zeros(f, dim, dim);
    for (j, c) in v.iter().enumerate() {
        if !f.is_zero(c) {
            out = out.add(&ops[j].scale(c));
        }
    }
    out
}

/// `id ⊗ … ⊗ op ⊗ … ⊗ id` acting on factor `k` of `shape`.
fn on_factor<F: Field>(f: &F, shape: &TensorShape, k: usize, op: &Matrix<F>) -> SparseMatrix<F> {
    let mut trip = Vec::new();
    for idx in 0..shape.size() {
        let mut d = shape.digits(idx);
        let x = d[k];
        for r in 0..op.rows() {
            let v = op.get(r, x);
            if !f.is_zero(v) {
                d[k] = r;
                trip.push((shape.index(&d), idx, v.clone()));
            }
        }
    }
    SparseMatrix::from_triplets(f, shape.size(), shape.size(), trip)
}

/// The tangle complex of `t` with the actions at its boundary points: at
/// each vertex, left multiplication on the arc starting at a `-` point and
/// right multiplication on the arc ending at a `+` point.
pub fn tangle_bimodule<F: Field>(
    t: &TangleDiagram,
    epsilon: i8,
    alg: &crate::algebra::Algebra<F>,
) -> Result<BimoduleComplex<F>, ComposeError> {
    let k = alg.knowledgeable().ok_or(ComposeError::Complex(crate::complex::ComplexError::AlgebraNotKnowledgeable))?;
    let a = &k.a;
    let f = alg.field();
    let rc = realize_cube(t, epsilon, alg)?;
    let (np, nm) = t.crossing_signs();
    let complex = total_complex(&rc)?.into_shifted(2 * np as i64 - 4 * nm as i64, -(nm as i64));
    let (members, offset) = term_layout(&rc);
    let signs = boundary_signs(t, epsilon);
    let levels = t.levels();
    let mut points = Vec::new();
    let mut actions = Vec::new();
    let all: Vec<Point> = (0..t.p()).map(Point::Bottom).chain((0..t.q()).map(Point::Top)).collect();
    for (pi, &pt) in all.iter().enumerate() {
        let sign = signs[pi];
        let (level, pos) = match pt {
            Point::Bottom(i) => (0, i),
            Point::Top(j) => (levels - 1, j),
        };
        points.push(BoundaryPoint { sign, level, pos });
        let mut per_term = Vec::new();
        for m in &members {
            let dim: usize = m.iter().map(|&al| rc.vertices[al].shape.size()).sum();
            let mut ops = Vec::with_capacity(a.dim());
            for x in 0..a.dim() {
                let xv = a.basis_vector(x);
                let mult = if sign == PointSign::Minus { a.left_mult(&xv) } else { a.right_mult(&xv) };
                let mut trip = Vec::new();
                for &al in m {
                    let comps = &rc.cube.vertices[al].components;
                    let c = comps
                        .iter()
                        .position(|c| match c.kind {
                            ComponentKind::Arc { start, end } => {
                                if sign == PointSign::Minus { start == pt } else { end == pt }
                            }
                            ComponentKind::Circle => false,
                        })
                        .expect("every boundary point ends an arc with the matching sign");
                    let op = on_factor(f, &rc.vertices[al].shape, c, &mult);
                    trip.extend(op.entries().map(|(r, col, v)| (offset[al] + r, offset[al] + col, v.clone())));
                }
                ops.push(SparseMatrix::from_triplets(f, dim, dim, trip));
            }
            per_term.push(ops);
        }
        actions.push(per_term);
    }
    Ok(BimoduleComplex { complex, points, actions, gluings: 0 })
}

/// `c1 ⊗_k c2` with actions `op ⊗ id` and `id ⊗ op`; points of `c1` first.
pub fn tensor<F: Field>(c1: &BimoduleComplex<F>, c2: &BimoduleComplex<F>) -> BimoduleComplex<F> {
    let f = c1.field();
    let complex = tensor_complexes(&c1.complex, &c2.complex);
    let (a, b) = (&c1.complex, &c2.complex);
    // Blocks (p, q, offset) of each total degree, as laid out by tensor_complexes.
    let blocks: Vec<Vec<(i64, i64, usize)>> = complex
        .degrees()
        .map(|r| {
            let mut o = 0;
            let mut v = Vec::new();
            for p in a.degrees() {
                let q = r - p;
                if b.degrees().any(|x| x == q) {
                    v.push((p, q, o));
                    o += a.term(p).len() * b.term(q).len();
                }
            }
            v
        })
        .collect();
    let lift = |ops_a: Option<&[Vec<SparseMatrix<F>>]>, ops_b: Option<&[Vec<SparseMatrix<F>>]>| -> Vec<Vec<SparseMatrix<F>>> {
        let na = ops_a.map_or_else(|| ops_b.unwrap()[0].len(), |o| o[0].len());
        blocks
            .iter()
            .enumerate()
            .map(|(i, bl)| {
                let dim = complex.terms[i].len();
                (0..na)
                    .map(|x| {
                        let mut trip = Vec::new();
                        for &(p, q, o) in bl {
                            let (ia, ib) = ((p - a.start) as usize, (q - b.start) as usize);
                            let (da, db) = (a.terms[ia].len(), b.terms[ib].len());
                            let op = match (ops_a, ops_b) {
                                (Some(oa), _) => oa[ia][x].kron(&SparseMatrix::identity(f, db)),
                                (_, Some(ob)) => SparseMatrix::identity(f, da).kron(&ob[ib][x]),
                                _ => unreachable!(),
                            };
                            trip.extend(op.entries().map(|(r, c, v)| (o + r, o + c, v.clone())));
                        }
                        SparseMatrix::from_triplets(f, dim, dim, trip)
                    })
                    .collect()
            })
            .collect()
    };
    let mut actions = Vec::new();
    for ops in &c1.actions {
        actions.push(lift(Some(ops), None));
    }
    for ops in &c2.actions {
        actions.push(lift(None, Some(ops)));
    }
    let points = c1.points.iter().chain(&c2.points).copied().collect();
    BimoduleComplex { complex, points, actions, gluings: c1.gluings + c2.gluings }
}

/// The quotient by `ρ_plus(m ⊗ a) - λ_minus(a ⊗ m)`, with induced
/// differential and actions; the two points are removed.
pub fn coequalize<F: Field>(c: &BimoduleComplex<F>, plus: usize, minus: usize) -> Result<BimoduleComplex<F>, ComposeError> {
    if c.points[plus].sign != PointSign::Plus || c.points[minus].sign != PointSign::Minus || plus == minus {
        return Err(ComposeError::SignMismatch { plus, minus });
    }
    let f = c.field();
    let cx = &c.complex;
    let quotients: Vec<Quotient<F>> = cx
        .terms
        .iter()
        .enumerate()
        .map(|(i, degs)| {
            let mut rels: Vec<SparseVec<F::Elem>> = Vec::new();
            for (r, l) in c.actions[plus][i].iter().zip(&c.actions[minus][i]) {
                let diff = r.add(&l.scale(&f.neg(&f.one())));
                rels.extend(diff.columns().iter().filter(|v| !v.is_empty()).cloned());
            }
            // Pivot on the lowest degree so the kept basis carries the
            // quotient filtration.
            let max = degs.iter().copied().max().unwrap_or(0);
            let priority: Vec<usize> = degs.iter().map(|&k| (max - k) as usize).collect();
            Quotient::new(f, degs.len(), &priority, rels)
        })
        .collect();
    let descend = |i: usize, j: usize, m: &SparseMatrix<F>, what: &str| -> Result<SparseMatrix<F>, ComposeError> {
        // m descends iff P_j m vanishes on ker P_i, i.e. P_j m = (P_j m S_i) P_i.
        let pm = quotients[j].projection.mul(m);
        let bar = pm.mul(&quotients[i].section);
        if bar.mul(&quotients[i].projection) != pm {
            return Err(ComposeError::NotWellDefined(format!("{what} on term {i}")));
        }
        Ok(bar)
    };
    let diffs = cx
        .diffs
        .iter()
        .enumerate()
        .map(|(i, d)| descend(i, i + 1, d, "differential"))
        .collect::<Result<Vec<_>, _>>()?;
    let terms: Vec<Vec<i64>> =
        cx.terms.iter().zip(&quotients).map(|(degs, q)| q.complement.iter().map(|&g| degs[g]).collect()).collect();
    let mut points = Vec::new();
    let mut actions = Vec::new();
    for (p, pt) in c.points.iter().enumerate() {
        if p == plus || p == minus {
            continue;
        }
        points.push(*pt);
        let per_term = c.actions[p]
            .iter()
            .enumerate()
            .map(|(i, ops)| ops.iter().map(|op| descend(i, i, op, "action")).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        actions.push(per_term);
    }
    let complex = ChainComplex::new(f, cx.start, terms, diffs, cx.mode);
    Ok(BimoduleComplex { complex, points, actions, gluings: c.gluings + 1 })
}
