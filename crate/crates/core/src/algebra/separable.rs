//! Window elements, strong separability and the state-sum construction.

use super::frobenius::{FrobeniusData, GradingMode};
use super::knowledgeable::KnowledgeableFrobenius;
use super::AlgebraError;
use crate::linalg::{Field, Matrix};

/// The window element `a = μΔη(1)` and its inverse when it exists.
#[derive(Clone, Debug, PartialEq)]
pub struct Window<F: Field> {
    pub element: Vec<F::Elem>,
    pub inverse: Option<Vec<F::Elem>>,
}

impl<F: Field> FrobeniusData<F> {
    pub fn window(&self) -> Window<F> {
        let element = self.mu.mul(&self.delta).mul(&self.eta).column(0);
        let unit = self.unit_vector();
        let inverse = self
            .left_mult(&element)
            .solve(&unit)
            .filter(|x| self.product(x, &element) == unit);
        Window { element, inverse }
    }

    /// Gram matrix of `g_can(x, y) = tr(L_x L_y)`.
    pub fn canonical_form(&self) -> Matrix<F> {
        let f = &self.field;
        let n = self.dim();
        let ls: Vec<Matrix<F>> = (0..n).map(|i| self.left_mult(&self.basis_vector(i))).collect();
        let mut g = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                let p = ls[i].mul(&ls[j]);
                let mut tr = f.zero();
                for k in 0..n {
                    tr = f.add(&tr, p.get(k, k));
                }
                g.set(i, j, tr);
            }
        }
        g
    }

    /// Non-degeneracy of the canonical form. For symmetric algebras this is
    /// cross-checked against invertibility of the window element.
    pub fn is_strongly_separable(&self) -> Result<bool, AlgebraError> {
        let by_form = self.canonical_form().rank() == self.dim();
        if self.is_symmetric() {
            let by_window = self.window().inverse.is_some();
            if by_form != by_window {
                return Err(AlgebraError::Inconsistent(format!(
                    "canonical form says {by_form}, window element says {by_window}"
                )));
            }
        }
        Ok(by_form)
    }

    fn window_inverse(&self) -> Result<Window<F>, AlgebraError> {
        let w = self.window();
        if w.inverse.is_none() {
            return Err(AlgebraError::NotStronglySeparable);
        }
        Ok(w)
    }

    /// The idempotent `p = (a⁻¹·) ∘ μ ∘ τ ∘ Δ` projecting onto the centre.
    pub fn centre_projection(&self) -> Result<Matrix<F>, AlgebraError> {
        let w = self.window_inverse()?;
        let inv = w.inverse.unwrap();
        Ok(self.left_mult(&inv).mul(&self.mu).mul(&self.tau()).mul(&self.delta))
    }

    /// `P_{jl} = Δ^{(j)} ∘ (a^{-(j-1)}·) ∘ μ^{(l)}` and
    /// `Q_{jl} = Δ^{(j)} ∘ (a^{-(j-1)}·) ∘ p ∘ μ^{(l)}` as maps `A^{⊗l} → A^{⊗j}`.
    pub fn idempotents_pq(&self, j: usize, l: usize) -> Result<(Matrix<F>, Matrix<F>), AlgebraError> {
        if j == 0 || l == 0 {
            return Err(AlgebraError::BadParameter("j and l must be positive".into()));
        }
        let w = self.window_inverse()?;
        let inv = w.inverse.unwrap();
        let mut scale = self.id();
        let li = self.left_mult(&inv);
        for _ in 1..j {
            scale = li.mul(&scale);
        }
        let p = self.centre_projection()?;
        let dj = self.iterated_delta(j);
        let ml = self.iterated_mu(l);
        let big_p = dj.mul(&scale).mul(&ml);
        let big_q = dj.mul(&scale).mul(&p).mul(&ml);
        Ok((big_p, big_q))
    }

    /// State-sum knowledgeable Frobenius algebra with `C = Z(A) = p(A)`.
    ///
    /// The centre basis is the row-reduced basis of the image of `p`; a central
    /// element's coordinates are its entries at the pivot positions.
    pub fn state_sum_kfrob(&self) -> Result<KnowledgeableFrobenius<F>, AlgebraError> {
        let f = &self.field;
        let w = self.window_inverse()?;
        let inv = w.inverse.unwrap();
        let p = self.centre_projection()?;
        let (r, pivots) = p.transpose().rref();
        let nc = pivots.len();
        let n = self.dim();
        let basis: Vec<Vec<F::Elem>> = (0..nc).map(|i| r.row(i).to_vec()).collect();
        let b = Matrix::from_columns(f, n, &basis);
        let mut coords = Matrix::zeros(f, nc, n);
        for (i, &pc) in pivots.iter().enumerate() {
            coords.set(i, pc, f.one());
        }
        let la = self.left_mult(&w.element);
        let linv = self.left_mult(&inv);
        let mu_c = coords.mul(&self.mu).mul(&b.kron(&b));
        let eta_c = coords.mul(&self.eta);
        let delta_c = coords.kron(&coords).mul(&p.kron(&p)).mul(&self.delta).mul(&la).mul(&b);
        let eps_c = self.eps.mul(&linv).mul(&b);
        let iota_star = coords.mul(&la).mul(&p);
        let labels = basis
            .iter()
            .map(|v| super::report::TensorLabels::new(vec![&self.labels]).format_vector(f, v))
            .collect();
        let c = FrobeniusData {
            field: f.clone(),
            labels,
            mu: mu_c,
            eta: eta_c,
            delta: delta_c,
            eps: eps_c,
            degrees: vec![0; nc],
            grading: GradingMode::None,
            degree_unit: 2,
        };
        Ok(KnowledgeableFrobenius { a: self.clone(), c, iota: b, iota_star })
    }
}
