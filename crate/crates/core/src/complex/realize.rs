//! Realizing the cube of resolutions as linear maps and forming the signed
//! total complex.

use crate::algebra::{tensor_degrees, tau, Algebra, GradingMode};
use crate::linalg::{Field, Matrix, SparseMatrix};
use crate::tangle::{build_cube, ComponentKind, SaddleDescriptor, SaddleKind, TangleCube, TangleDiagram};

use super::chain::ChainComplex;
use super::ComplexError;

/// The five local saddle maps of an algebra, as dense matrices.
#[derive(Clone, Debug)]
pub struct LocalMaps<F: Field> {
    pub dim_a: usize,
    pub dim_c: usize,
    pub degrees_a: Vec<i64>,
    pub degrees_c: Vec<i64>,
    /// `(μ ⊗ id)(id ⊗ τ)(Δ ⊗ id): A ⊗ A → A ⊗ A`.
    pub arc_arc: Option<Matrix<F>>,
    /// `(ι* ⊗ id) Δ: A → C ⊗ A`.
    pub arc_to_circle_arc: Option<Matrix<F>>,
    /// `μ (ι ⊗ id): C ⊗ A → A`.
    pub circle_arc_to_arc: Option<Matrix<F>>,
    pub merge: Matrix<F>,
    pub split: Matrix<F>,
}

impl<F: Field> LocalMaps<F> {
    pub fn new(alg: &Algebra<F>) -> Self {
        let c = alg.closed();
        let (dim_a, degrees_a, arc_arc, arc_to_circle_arc, circle_arc_to_arc) = match alg.knowledgeable() {
            None => (0, Vec::new(), None, None, None),
            Some(k) => {
                let a = &k.a;
                let id = a.id();
                let aa = a.mu.kron(&id).mul(&id.kron(&tau(&a.field, a.dim(), a.dim()))).mul(&a.delta.kron(&id));
                let ac = k.iota_star.kron(&id).mul(&a.delta);
                let ca = a.mu.mul(&k.iota.kron(&id));
                (a.dim(), a.degrees.clone(), Some(aa), Some(ac), Some(ca))
            }
        };
        Self {
            dim_a,
            dim_c: c.dim(),
            degrees_a,
            degrees_c: c.degrees.clone(),
            arc_arc,
            arc_to_circle_arc,
            circle_arc_to_arc,
            merge: c.mu.clone(),
            split: c.delta.clone(),
        }
    }

    fn local(&self, kind: SaddleKind) -> Result<&Matrix<F>, ComplexError> {
        let m = match kind {
            SaddleKind::ArcArc => self.arc_arc.as_ref(),
            SaddleKind::ArcToCircleArc => self.arc_to_circle_arc.as_ref(),
            SaddleKind::CircleArcToArc => self.circle_arc_to_arc.as_ref(),
            SaddleKind::MergeCC => Some(&self.merge),
            SaddleKind::SplitCC => Some(&self.split),
        };
        m.ok_or(ComplexError::AlgebraNotKnowledgeable)
    }
}

/// Mixed-radix indexing of a tensor product, first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    pub dims: Vec<usize>,
}

impl TensorShape {
    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            d[k] = idx % self.dims[k];
            idx /= self.dims[k];
        }
        d
    }

    /// Place value of each factor.
    pub fn strides(&self) -> Vec<usize> {
        let mut s = vec![1; self.dims.len()];
        for k in (0..self.dims.len().saturating_sub(1)).rev() {
            s[k] = s[k + 1] * self.dims[k + 1];
        }
        s
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.dims).fold(0, |acc, (d, n)| acc * n + d)
    }
}

/// One vertex space `Z(D_α)` with its basis degrees, shift included.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexSpace {
    pub alpha: usize,
    pub shape: TensorShape,
    pub degrees: Vec<i64>,
}

/// The cube with every vertex and edge realized.
#[derive(Clone, Debug)]
pub struct RealizedCube<F: Field> {
    pub field: F,
    pub cube: TangleCube,
    pub mode: GradingMode,
    pub vertices: Vec<VertexSpace>,
    /// Parallel to `cube.edges`.
    pub edge_maps: Vec<SparseMatrix<F>>,
}

impl<F: Field> RealizedCube<F> {
    pub fn edge_map(&self, alpha: usize, j: usize) -> &SparseMatrix<F> {
        let k = self.cube.edges.partition_point(|e| (e.alpha, e.crossing) < (alpha, j));
        &self.edge_maps[k]
    }

    /// Checks that every square `α → α∪{j}, α∪{l} → α∪{j,l}` commutes.
    pub fn check_squares(&self) -> Result<(), ComplexError> {
        let n = self.cube.n;
        for alpha in 0..1usize << n {
            for j in (0..n).filter(|&j| alpha >> j & 1 == 0) {
                for l in (j + 1..n).filter(|&l| alpha >> l & 1 == 0) {
                    let a = self.edge_map(alpha | 1 << j, l).mul(self.edge_map(alpha, j));
                    let b = self.edge_map(alpha | 1 << l, j).mul(self.edge_map(alpha, l));
                    if a != b {
                        return Err(ComplexError::NonCommutingSquare { alpha, j, l });
                    }
                }
            }
        }
        Ok(())
    }
}

fn vertex_space(lm: &LocalMaps<impl Field>, cube: &TangleCube, alpha: usize) -> VertexSpace {
    let comps = &cube.vertices[alpha].components;
    let dims = comps.iter().map(|c| if c.is_arc() { lm.dim_a } else { lm.dim_c }).collect();
    let mut degrees = vec![TangleCube::vertex_shift(alpha)];
    for c in comps {
        degrees = tensor_degrees(&degrees, if c.is_arc() { &lm.degrees_a } else { &lm.degrees_c });
    }
    VertexSpace { alpha, shape: TensorShape { dims }, degrees }
}

fn realize_edge<F: Field>(
    f: &F,
    lm: &LocalMaps<F>,
    e: &SaddleDescriptor,
    src: &VertexSpace,
    tgt: &VertexSpace,
) -> Result<SparseMatrix<F>, ComplexError> {
    let local = lm.local(e.kind)?;
    let (src_strides, tgt_strides) = (src.shape.strides(), tgt.shape.strides());
    let digit = |idx: usize, c: usize| idx / src_strides[c] % src.shape.dims[c];
    // Local input index strides, and the target offset of each local output.
    let in_shape = TensorShape { dims: e.source.iter().map(|&c| src.shape.dims[c]).collect() };
    let in_strides = in_shape.strides();
    let out_shape = TensorShape { dims: e.target.iter().map(|&c| tgt.shape.dims[c]).collect() };
    let out_offset: Vec<usize> = (0..out_shape.size())
        .map(|lo| out_shape.digits(lo).iter().zip(&e.target).map(|(d, &c)| d * tgt_strides[c]).sum())
        .collect();
    let mut cols: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); local.cols()];
    for (r, c, v) in local.nonzero_entries() {
        cols[c].push((out_offset[r], v.clone()));
    }
    let mut trip = Vec::new();
    for idx in 0..src.shape.size() {
        let base: usize = e.untouched.iter().map(|&(s, t)| digit(idx, s) * tgt_strides[t]).sum();
        let li: usize = e.source.iter().zip(&in_strides).map(|(&c, st)| digit(idx, c) * st).sum();
        for (off, v) in &cols[li] {
            trip.push((base + off, idx, v.clone()));
        }
    }
    Ok(SparseMatrix::from_triplets(f, tgt.shape.size(), src.shape.size(), trip))
}

/// Applies the algebra to every vertex and edge of the cube of `t`.
pub fn realize_cube<F: Field>(t: &TangleDiagram, epsilon: i8, alg: &Algebra<F>) -> Result<RealizedCube<F>, ComplexError> {
    let cube = build_cube(t, epsilon);
    let lm = LocalMaps::new(alg);
    let has_arcs = cube.vertices.iter().any(|v| v.components.iter().any(|c| matches!(c.kind, ComponentKind::Arc { .. })));
    if has_arcs && alg.knowledgeable().is_none() {
        return Err(ComplexError::AlgebraNotKnowledgeable);
    }
    let vertices: Vec<VertexSpace> = (0..cube.vertices.len()).map(|a| vertex_space(&lm, &cube, a)).collect();
    let f = alg.field();
    let edge_maps = cube
        .edges
        .iter()
        .map(|e| realize_edge(f, &lm, e, &vertices[e.alpha], &vertices[e.alpha | 1 << e.crossing]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RealizedCube { field: f.clone(), cube, mode: alg.grading(), vertices, edge_maps })
}

/// Vertices of each cube height in ascending `α`, and the offset of every
/// vertex space inside its term.
pub fn term_layout<F: Field>(rc: &RealizedCube<F>) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = rc.cube.n;
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for alpha in 0..1usize << n {
        members[alpha.count_ones() as usize].push(alpha);
    }
    let mut offset = vec![0usize; 1 << n];
    for m in &members {
        let mut o = 0;
        for &alpha in m {
            offset[alpha] = o;
            o += rc.vertices[alpha].shape.size();
        }
    }
    (members, offset)
}

/// `C_tot(Z(S))`: term `r` is `⊕_{|α|=r} Z(D_α)` (α ascending), edges carry
/// the sign `(-1)^{|{k ∈ α : k < j}|}`.
pub fn total_complex<F: Field>(rc: &RealizedCube<F>) -> Result<ChainComplex<F>, ComplexError> {
    rc.check_squares()?;
    let f = &rc.field;
    let n = rc.cube.n;
    let (members, offset) = term_layout(rc);
    let terms: Vec<Vec<i64>> =
        members.iter().map(|m| m.iter().flat_map(|&a| rc.vertices[a].degrees.iter().copied()).collect()).collect();
    let m1 = f.neg(&f.one());
    let mut diffs = Vec::with_capacity(n);
    for r in 0..n {
        let mut trip = Vec::new();
        for &alpha in &members[r] {
            for j in (0..n).filter(|&j| alpha >> j & 1 == 0) {
                let neg = (alpha & ((1 << j) - 1)).count_ones() % 2 == 1;
                let (o_in, o_out) = (offset[alpha], offset[alpha | 1 << j]);
                for (row, col, v) in rc.edge_map(alpha, j).entries() {
                    trip.push((o_out + row, o_in + col, if neg { f.mul(&m1, v) } else { v.clone() }));
                }
            }
        }
        diffs.push(SparseMatrix::from_triplets(f, terms[r + 1].len(), terms[r].len(), trip));
    }
    Ok(ChainComplex::new(f, 0, terms, diffs, rc.mode))
}

/// The tangle complex `C_tot{2n₊ - 4n₋}[-n₋]`.
pub fn tangle_complex<F: Field>(t: &TangleDiagram, epsilon: i8, alg: &Algebra<F>) -> Result<ChainComplex<F>, ComplexError> {
    let rc = realize_cube(t, epsilon, alg)?;
    let (np, nm) = t.crossing_signs();
    let (np, nm) = (np as i64, nm as i64);
    Ok(total_complex(&rc)?.into_shifted(2 * np - 4 * nm, -nm))
}
