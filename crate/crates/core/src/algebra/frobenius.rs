//! Frobenius algebras given by structure constants.

use std::fmt;

use super::report::{compare_maps, AxiomReport, TensorLabels};
use super::AlgebraError;
use crate::linalg::{Field, Matrix};

/// How basis degrees constrain the structure maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingMode {
    Graded,
    Filtered,
    None,
}

impl GradingMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            GradingMode::Graded => "graded",
            GradingMode::Filtered => "filtered",
            GradingMode::None => "none",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "graded" => Some(GradingMode::Graded),
            "filtered" => Some(GradingMode::Filtered),
            "none" => Some(GradingMode::None),
            _ => None,
        }
    }

    /// The weakest mode satisfied by both inputs.
    pub fn meet(self, other: Self) -> Self {
        use GradingMode::*;
        match (self, other) {
            (None, _) | (_, None) => None,
            (Graded, Graded) => Graded,
            _ => Filtered,
        }
    }
}

impl fmt::Display for GradingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A Frobenius algebra `(A, μ, η, Δ, ε)` in a fixed basis.
///
/// Tensor bases are ordered with the first factor most significant, so
/// `e_i ⊗ e_j` has index `i * dim + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusData<F: Field> {
    pub field: F,
    pub labels: Vec<String>,
    /// `dim × dim²`
    pub mu: Matrix<F>,
    /// `dim × 1`
    pub eta: Matrix<F>,
    /// `dim² × dim`
    pub delta: Matrix<F>,
    /// `1 × dim`
    pub eps: Matrix<F>,
    /// Doubled internal degree of each basis vector.
    pub degrees: Vec<i64>,
    pub grading: GradingMode,
    /// Unit `s` of the Euler degrees: μ, Δ have degree `-s`, η, ε degree `s`.
    /// It is 1 for algebras attached to arcs and 2 for those attached to circles.
    pub degree_unit: i64,
}

/// One structure map together with its declared Euler degree.
pub(crate) struct DegreeSpec<'a, F: Field> {
    pub name: &'static str,
    pub map: &'a Matrix<F>,
    pub input: Vec<i64>,
    pub output: Vec<i64>,
    pub degree: i64,
}

/// Degrees of the basis of `V ⊗ W`.
pub fn tensor_degrees(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

/// Whether `m` maps degree `deg_in` into degree `deg_in + d` (graded) or
/// into degrees at least that (filtered); returns the first offending entry.
pub fn degree_violation<F: Field>(
    m: &Matrix<F>,
    deg_in: &[i64],
    deg_out: &[i64],
    d: i64,
    mode: GradingMode,
) -> Option<(usize, usize)> {
    m.nonzero_entries()
        .find(|(r, c, _)| {
            let need = deg_in[*c] + d;
            match mode {
                GradingMode::Graded => deg_out[*r] != need,
                GradingMode::Filtered => deg_out[*r] < need,
                GradingMode::None => false,
            }
        })
        .map(|(r, c, _)| (r, c))
}

/// Keeps only the entries with `deg_out = deg_in + d`.
pub fn degree_extremal_part<F: Field>(m: &Matrix<F>, deg_in: &[i64], deg_out: &[i64], d: i64) -> Matrix<F> {
    let mut out = Matrix::zeros(m.field(), m.rows(), m.cols());
    for (r, c, v) in m.nonzero_entries() {
        if deg_out[r] == deg_in[c] + d {
            out.set(r, c, v.clone());
        }
    }
    out
}

/// The swap `V ⊗ W → W ⊗ V` as a permutation matrix.
pub fn tau<F: Field>(f: &F, dv: usize, dw: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(f, dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            m.set(j * dv + i, i * dw + j, f.one());
        }
    }
    m
}

impl<F: Field> FrobeniusData<F> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn id(&self) -> Matrix<F> {
        Matrix::identity(&self.field, self.dim())
    }

    pub fn tau(&self) -> Matrix<F> {
        tau(&self.field, self.dim(), self.dim())
    }

    /// `e_i · e_j`
    pub fn product(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.mu.get(k, i * n + j);
                    if !f.is_zero(c) {
                        f.add_mul_assign(o, &ab, c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `x ↦ a·x`.
    pub fn left_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let av = Matrix::from_columns(&self.field, self.dim(), &[a.to_vec()]);
        self.mu.mul(&av.kron(&self.id()))
    }

    /// Matrix of right multiplication `x ↦ x·a`.
    pub fn right_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let av = Matrix::from_columns(&self.field, self.dim(), &[a.to_vec()]);
        self.mu.mul(&self.id().kron(&av))
    }

    pub fn unit_vector(&self) -> Vec<F::Elem> {
        self.eta.column(0)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.dim()).map(|k| if k == i { f.one() } else { f.zero() }).collect()
    }

    fn labels1(&self) -> TensorLabels<'_> {
        TensorLabels::new(vec![&self.labels])
    }

    fn labels_pow(&self, n: usize) -> TensorLabels<'_> {
        TensorLabels::new(vec![&self.labels[..]; n])
    }

    pub(crate) fn degree_specs(&self) -> Vec<DegreeSpec<'_, F>> {
        let s = self.degree_unit;
        let d1 = self.degrees.clone();
        let d2 = tensor_degrees(&d1, &d1);
        vec![
            DegreeSpec { name: "mu", map: &self.mu, input: d2.clone(), output: d1.clone(), degree: -s },
            DegreeSpec { name: "eta", map: &self.eta, input: vec![0], output: d1.clone(), degree: s },
            DegreeSpec { name: "delta", map: &self.delta, input: d1.clone(), output: d2, degree: -s },
            DegreeSpec { name: "eps", map: &self.eps, input: d1, output: vec![0], degree: s },
        ]
    }

    /// Checks the Euler degrees of the four structure maps under `mode`.
    pub fn degree_audit(&self, mode: GradingMode) -> AxiomReport {
        let mut rep = AxiomReport::new();
        if mode == GradingMode::None {
            return rep;
        }
        for spec in self.degree_specs() {
            let w = degree_violation(spec.map, &spec.input, &spec.output, spec.degree, mode).map(|(r, c)| {
                format!(
                    "entry (out {r}, in {c}) has degrees {} <- {}, declared degree {}",
                    spec.output[r], spec.input[c], spec.degree
                )
            });
            rep.push(format!("degree.{}", spec.name), w);
        }
        rep
    }

    fn check_shapes(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let ok = (self.mu.rows(), self.mu.cols()) == (n, n * n)
            && (self.eta.rows(), self.eta.cols()) == (n, 1)
            && (self.delta.rows(), self.delta.cols()) == (n * n, n)
            && (self.eps.rows(), self.eps.cols()) == (1, n)
            && self.degrees.len() == n;
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch(format!("structure tensors do not match dimension {n}")))
        }
    }

    /// Checks all Frobenius algebra axioms and the degree discipline.
    pub fn validate(&self) -> Result<AxiomReport, AlgebraError> {
        self.check_shapes()?;
        let id = self.id();
        let (mu, eta, delta, eps) = (&self.mu, &self.eta, &self.delta, &self.eps);
        let l1 = self.labels1();
        let l2 = self.labels_pow(2);
        let l3 = self.labels_pow(3);
        let k = TensorLabels::new(vec![]);
        let mut rep = AxiomReport::new();

        rep.push("associativity", compare_maps(&mu.mul(&mu.kron(&id)), &mu.mul(&id.kron(mu)), &l3, &l1));
        rep.push("left_unit", compare_maps(&mu.mul(&eta.kron(&id)), &id, &l1, &l1));
        rep.push("right_unit", compare_maps(&mu.mul(&id.kron(eta)), &id, &l1, &l1));
        rep.push(
            "coassociativity",
            compare_maps(&delta.kron(&id).mul(delta), &id.kron(delta).mul(delta), &l1, &l3),
        );
        rep.push("left_counit", compare_maps(&eps.kron(&id).mul(delta), &id, &l1, &l1));
        rep.push("right_counit", compare_maps(&id.kron(eps).mul(delta), &id, &l1, &l1));
        let dm = delta.mul(mu);
        rep.push("frobenius_left", compare_maps(&id.kron(mu).mul(&delta.kron(&id)), &dm, &l2, &l2));
        rep.push("frobenius_right", compare_maps(&mu.kron(&id).mul(&id.kron(delta)), &dm, &l2, &l2));
        rep.extend_prefixed("grading", self.degree_audit(self.grading));

        let t = self.tau();
        let symmetric = compare_maps(&eps.mul(mu).mul(&t), &eps.mul(mu), &l2, &k).is_none();
        let commutative = mu.mul(&t) == *mu;
        rep.push_property("symmetric", symmetric);
        rep.push_property("commutative", commutative);
        Ok(rep)
    }

    pub fn is_symmetric(&self) -> bool {
        self.eps.mul(&self.mu).mul(&self.tau()) == self.eps.mul(&self.mu)
    }

    pub fn is_commutative(&self) -> bool {
        self.mu.mul(&self.tau()) == self.mu
    }

    /// Keeps the degree-extremal part of each structure map under the
    /// algebra's own degree unit and marks the result graded.
    pub fn associated_graded(&self) -> Self {
        let mut parts = self
            .degree_specs()
            .into_iter()
            .map(|s| degree_extremal_part(s.map, &s.input, &s.output, s.degree))
            .collect::<Vec<_>>()
            .into_iter();
        Self {
            mu: parts.next().unwrap(),
            eta: parts.next().unwrap(),
            delta: parts.next().unwrap(),
            eps: parts.next().unwrap(),
            grading: GradingMode::Graded,
            ..self.clone()
        }
    }

    /// The opposite algebra: `μ∘τ` and `τ∘Δ`, same unit, counit and degrees.
    pub fn opposite(&self) -> Self {
        let t = self.tau();
        Self { mu: self.mu.mul(&t), delta: t.mul(&self.delta), ..self.clone() }
    }

    /// Evaluates the sphere, torus and four-tube conditions exactly.
    pub fn check_barnatan(&self) -> BarNatanReport {
        let f = &self.field;
        let id = self.id();
        let (mu, eta, delta, eps) = (&self.mu, &self.eta, &self.delta, &self.eps);
        let sphere = eps.mul(eta);
        let torus = eps.mul(mu).mul(delta).mul(eta);
        let ee = eps.kron(eps);
        let eta_eps = eta.mul(eps);
        let four_tubes = delta
            .mul(eta)
            .mul(&ee)
            .add(&eta.kron(eta).mul(eps).mul(mu))
            .sub(&eta_eps.kron(&id))
            .sub(&id.kron(&eta_eps));
        BarNatanReport {
            sphere: f.is_zero(sphere.get(0, 0)),
            torus: *torus.get(0, 0) == f.from_i64(2),
            four_tubes: four_tubes.is_zero(),
        }
    }

    /// `μ^{(l)}: A^{⊗l} → A`, with `μ^{(1)} = id` and `μ^{(0)} = η`.
    pub fn iterated_mu(&self, l: usize) -> Matrix<F> {
        match l {
            0 => self.eta.clone(),
            1 => self.id(),
            _ => {
                let mut m = self.mu.clone();
                for _ in 2..l {
                    m = self.mu.mul(&m.kron(&self.id()));
                }
                m
            }
        }
    }

    /// `Δ^{(j)}: A → A^{⊗j}`, with `Δ^{(1)} = id` and `Δ^{(0)} = ε`.
    pub fn iterated_delta(&self, j: usize) -> Matrix<F> {
        match j {
            0 => self.eps.clone(),
            1 => self.id(),
            _ => {
                let mut m = self.delta.clone();
                for _ in 2..j {
                    m = m.kron(&self.id()).mul(&self.delta);
                }
                m
            }
        }
    }
}

/// Truth values of the sphere (S), torus (T) and four-tube (4Tu) conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BarNatanReport {
    pub sphere: bool,
    pub torus: bool,
    pub four_tubes: bool,
}

impl BarNatanReport {
    pub fn all(&self) -> bool {
        self.sphere && self.torus && self.four_tubes
    }
}
