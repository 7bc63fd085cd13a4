//! Knowledgeable Frobenius algebras `(A, C, ι, ι*)`.

use super::frobenius::{degree_extremal_part, degree_violation, tau, DegreeSpec, FrobeniusData, GradingMode};
use super::report::{compare_maps, AxiomReport, TensorLabels};
use super::AlgebraError;
use crate::linalg::{Field, Matrix};

/// A symmetric Frobenius algebra `A`, a commutative Frobenius algebra `C`,
/// and the zipper and cozipper maps `ι: C → A`, `ι*: A → C`.
#[derive(Clone, Debug, PartialEq)]
pub struct KnowledgeableFrobenius<F: Field> {
    pub a: FrobeniusData<F>,
    pub c: FrobeniusData<F>,
    /// `dim A × dim C`
    pub iota: Matrix<F>,
    /// `dim C × dim A`
    pub iota_star: Matrix<F>,
}

impl<F: Field> KnowledgeableFrobenius<F> {
    pub fn field(&self) -> &F {
        &self.a.field
    }

    fn check_shapes(&self) -> Result<(), AlgebraError> {
        let (na, nc) = (self.a.dim(), self.c.dim());
        if (self.iota.rows(), self.iota.cols()) != (na, nc) || (self.iota_star.rows(), self.iota_star.cols()) != (nc, na) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "zipper maps must be {na}x{nc} and {nc}x{na}"
            )));
        }
        if self.a.field != self.c.field {
            return Err(AlgebraError::DimensionMismatch("A and C are over different fields".into()));
        }
        Ok(())
    }

    /// Checks both component algebras, symmetry of `A`, commutativity of `C`,
    /// that `ι` is a unital algebra map, and the knowledge, duality and Cardy
    /// identities.
    pub fn validate(&self) -> Result<AxiomReport, AlgebraError> {
        self.check_shapes()?;
        let (a, c) = (&self.a, &self.c);
        let f = &a.field;
        let mut rep = AxiomReport::new();
        let ra = a.validate()?;
        let rc = c.validate()?;
        let (sym, comm) = (ra.property("symmetric").unwrap_or(false), rc.property("commutative").unwrap_or(false));
        rep.extend_prefixed("A", ra);
        rep.extend_prefixed("C", rc);

        let la = TensorLabels::new(vec![&a.labels]);
        let lcc = TensorLabels::new(vec![&c.labels, &c.labels]);
        let lca = TensorLabels::new(vec![&c.labels, &a.labels]);
        let k = TensorLabels::new(vec![]);
        let ida = a.id();
        let idc = c.id();
        let (iota, istar) = (&self.iota, &self.iota_star);

        rep.push("A.symmetric", if sym { None } else { Some("εμτ ≠ εμ".into()) });
        rep.push("C.commutative", if comm { None } else { Some("μτ ≠ μ".into()) });
        rep.push("iota_unital", compare_maps(&iota.mul(&c.eta), &a.eta, &k, &la));
        rep.push(
            "iota_multiplicative",
            compare_maps(&iota.mul(&c.mu), &a.mu.mul(&iota.kron(iota)), &lcc, &la),
        );
        let iota_id = iota.kron(&ida);
        let swap_ca = tau(f, a.dim(), a.dim());
        rep.push(
            "knowledge",
            compare_maps(&a.mu.mul(&iota_id), &a.mu.mul(&swap_ca).mul(&iota_id), &lca, &la),
        );
        rep.push(
            "duality",
            compare_maps(&c.eps.mul(&c.mu).mul(&idc.kron(istar)), &a.eps.mul(&a.mu).mul(&iota_id), &lca, &k),
        );
        rep.push("cardy", compare_maps(&self.cardy_lhs(), &iota.mul(istar), &la, &la));
        Ok(rep)
    }

    /// `μ_A ∘ τ ∘ Δ_A`
    pub fn cardy_lhs(&self) -> Matrix<F> {
        self.a.mu.mul(&self.a.tau()).mul(&self.a.delta)
    }

    fn zipper_specs(&self) -> [DegreeSpec<'_, F>; 2] {
        [
            DegreeSpec { name: "iota", map: &self.iota, input: self.c.degrees.clone(), output: self.a.degrees.clone(), degree: -1 },
            DegreeSpec { name: "iota_star", map: &self.iota_star, input: self.a.degrees.clone(), output: self.c.degrees.clone(), degree: -1 },
        ]
    }

    /// The combined grading mode of `A` and `C`.
    pub fn grading(&self) -> GradingMode {
        self.a.grading.meet(self.c.grading)
    }

    /// Checks the Euler degrees of all ten structure maps: `A` with unit 1,
    /// `C` with unit 2, and `ι`, `ι*` of degree −1.
    pub fn check_euler_degrees(&self) -> Result<AxiomReport, AlgebraError> {
        let mode = self.grading();
        if mode == GradingMode::None {
            return Err(AlgebraError::GradingAbsent);
        }
        let mut rep = AxiomReport::new();
        let a = FrobeniusData { degree_unit: 1, ..self.a.clone() };
        let c = FrobeniusData { degree_unit: 2, ..self.c.clone() };
        rep.extend_prefixed("A", a.degree_audit(mode));
        rep.extend_prefixed("C", c.degree_audit(mode));
        for spec in self.zipper_specs() {
            let w = degree_violation(spec.map, &spec.input, &spec.output, spec.degree, mode)
                .map(|(r, col)| format!("entry (out {r}, in {col}) has degrees {} <- {}", spec.output[r], spec.input[col]));
            rep.push(format!("degree.{}", spec.name), w);
        }
        Ok(rep)
    }

    /// Truncates every structure map to its degree-extremal part, giving a
    /// graded algebra on the same bases.
    pub fn associated_graded(&self) -> Result<Self, AlgebraError> {
        if self.grading() == GradingMode::None {
            return Err(AlgebraError::GradingAbsent);
        }
        let [si, ss] = self.zipper_specs();
        Ok(Self {
            a: self.a.associated_graded(),
            c: self.c.associated_graded(),
            iota: degree_extremal_part(si.map, &si.input, &si.output, si.degree),
            iota_star: degree_extremal_part(ss.map, &ss.input, &ss.output, ss.degree),
        })
    }

    /// Replaces `A` by its opposite algebra.
    pub fn with_opposite(&self) -> Self {
        Self { a: self.a.opposite(), ..self.clone() }
    }
}
