//! Built-in example algebras.

use std::collections::BTreeMap;

use super::frobenius::{FrobeniusData, GradingMode};
use super::knowledgeable::KnowledgeableFrobenius;
use super::{Algebra, AlgebraError};
use crate::linalg::{Field, Matrix};

/// Names accepted by [`builtin`].
pub const CATALOG: &[&str] = &[
    "c_ht",
    "khovanov_pair",
    "truncated_poly",
    "modp_X",
    "barnatan_pair",
    "lee_pair",
    "matrix",
    "quaternion",
    "m2k_plus_k",
    "hk_plus_k",
];

/// Scalar and integer parameters of catalog entries, stored as text and
/// parsed in the target field on demand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn scalar<F: Field>(&self, f: &F, key: &str, default: i64) -> Result<F::Elem, AlgebraError> {
        match self.0.get(key) {
            None => Ok(f.from_i64(default)),
            Some(s) => f.parse(s).map_err(|_| AlgebraError::BadParameter(format!("{key}={s}"))),
        }
    }

    pub fn integer(&self, key: &str, default: u64) -> Result<u64, AlgebraError> {
        match self.0.get(key) {
            None => Ok(default),
            Some(s) => s.trim().parse().map_err(|_| AlgebraError::BadParameter(format!("{key}={s}"))),
        }
    }
}

/// Incremental construction of structure tensors from sparse term lists.
struct Builder<F: Field> {
    f: F,
    n: usize,
    mu: Matrix<F>,
    eta: Matrix<F>,
    delta: Matrix<F>,
    eps: Matrix<F>,
}

impl<F: Field> Builder<F> {
    fn new(f: &F, n: usize) -> Self {
        Self {
            f: f.clone(),
            n,
            mu: Matrix::zeros(f, n, n * n),
            eta: Matrix::zeros(f, n, 1),
            delta: Matrix::zeros(f, n * n, n),
            eps: Matrix::zeros(f, 1, n),
        }
    }

    fn c(&self, x: i64) -> F::Elem {
        self.f.from_i64(x)
    }

    fn mu(&mut self, i: usize, j: usize, terms: &[(usize, F::Elem)]) {
        for (k, v) in terms {
            self.mu.add_to(*k, i * self.n + j, v);
        }
    }

    fn delta(&mut self, i: usize, terms: &[(usize, usize, F::Elem)]) {
        for (j, k, v) in terms {
            self.delta.add_to(j * self.n + k, i, v);
        }
    }

    fn unit_is(&mut self, i: usize) {
        let one = self.f.one();
        self.eta.set(i, 0, one.clone());
        for j in 0..self.n {
            self.mu(i, j, &[(j, one.clone())]);
            if j != i {
                self.mu(j, i, &[(j, one.clone())]);
            }
        }
    }

    fn eps(&mut self, i: usize, v: F::Elem) {
        self.eps.set(0, i, v);
    }

    /// Fills `Δ` from `μ` and `ε` through the Frobenius pairing:
    /// `Δ(x) = Σ_i x·e_i ⊗ e^i` with `ε(e_i e^j) = δ_ij`.
    fn delta_from_pairing(&mut self) -> Result<(), AlgebraError> {
        let n = self.n;
        let f = self.f.clone();
        let mut g = Matrix::zeros(&f, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut v = f.zero();
                for k in 0..n {
                    f.add_mul_assign(&mut v, self.eps.get(0, k), self.mu.get(k, i * n + j));
                }
                g.set(i, j, v);
            }
        }
        let h = g.inverse().ok_or_else(|| AlgebraError::Inconsistent("degenerate Frobenius pairing".into()))?;
        let mut copairing = Matrix::zeros(&f, n * n, 1);
        for i in 0..n {
            for k in 0..n {
                copairing.set(i * n + k, 0, h.get(k, i).clone());
            }
        }
        let id = Matrix::identity(&f, n);
        // Δ(x) = (μ(x ⊗ -) ⊗ id) Δ(1)
        let mut delta = Matrix::zeros(&f, n * n, n);
        for x in 0..n {
            let mut ex = Matrix::zeros(&f, n, 1);
            ex.set(x, 0, f.one());
            let lx = self.mu.mul(&ex.kron(&id));
            let col = lx.kron(&id).mul(&copairing);
            for r in 0..n * n {
                delta.set(r, x, col.get(r, 0).clone());
            }
        }
        self.delta = delta;
        Ok(())
    }

    fn finish(self, labels: &[&str], degrees: Vec<i64>, grading: GradingMode, degree_unit: i64) -> FrobeniusData<F> {
        FrobeniusData {
            field: self.f,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            mu: self.mu,
            eta: self.eta,
            delta: self.delta,
            eps: self.eps,
            degrees,
            grading,
            degree_unit,
        }
    }
}

fn require_char<F: Field>(f: &F, name: &str, ok: bool, required: &str) -> Result<(), AlgebraError> {
    if ok {
        Ok(())
    } else {
        Err(AlgebraError::IncompatibleCharacteristic {
            name: name.to_string(),
            characteristic: f.characteristic(),
            required: required.to_string(),
        })
    }
}

fn zipper<F: Field>(f: &F, rows: usize, cols: usize, entries: &[(usize, usize, F::Elem)]) -> Matrix<F> {
    let mut m = Matrix::zeros(f, rows, cols);
    for (r, c, v) in entries {
        m.set(*r, *c, v.clone());
    }
    m
}

/// The two-dimensional algebra `k[x]/(x² − hx − t)` with the counit
/// `ε(1) = 0`, `ε(x) = 1`, basis `{1, x}` labelled by `var`.
pub fn quadratic<F: Field>(f: &F, var: &str, h: &F::Elem, t: &F::Elem, degrees: [i64; 2], grading: GradingMode, unit: i64) -> FrobeniusData<F> {
    let mut b = Builder::new(f, 2);
    let one = f.one();
    b.unit_is(0);
    b.mu(1, 1, &[(1, h.clone()), (0, t.clone())]);
    b.delta(0, &[(0, 1, one.clone()), (1, 0, one.clone()), (0, 0, f.neg(h))]);
    b.delta(1, &[(1, 1, one.clone()), (0, 0, t.clone())]);
    b.eps(1, one);
    b.finish(&["1", var], degrees.to_vec(), grading, unit)
}

/// `C_{h,t} = k[x]/(x² − hx − t)`, graded when `h = t = 0` and filtered otherwise.
pub fn c_ht<F: Field>(f: &F, h: &F::Elem, t: &F::Elem) -> FrobeniusData<F> {
    let grading = if f.is_zero(h) && f.is_zero(t) { GradingMode::Graded } else { GradingMode::Filtered };
    quadratic(f, "x", h, t, [2, -2], grading, 2)
}

/// `A_{h,t} = k[y]/(y² − hy − t)` with the same shape of coproduct and counit.
pub fn a_ht<F: Field>(f: &F, h: &F::Elem, t: &F::Elem) -> FrobeniusData<F> {
    let grading = if f.is_zero(h) && f.is_zero(t) { GradingMode::Graded } else { GradingMode::Filtered };
    quadratic(f, "y", h, t, [1, -1], grading, 1)
}

/// `A = k[y]/(y²)` with `C = C_{0,0}`; knowledgeable only in characteristic 2.
/// No characteristic check is made here.
pub fn khovanov_pair_data<F: Field>(f: &F) -> KnowledgeableFrobenius<F> {
    let z = f.zero();
    let a = a_ht(f, &z, &z);
    let c = c_ht(f, &z, &z);
    let one = f.one();
    let iota = zipper(f, 2, 2, &[(0, 0, one.clone())]);
    let iota_star = zipper(f, 2, 2, &[(1, 1, one)]);
    KnowledgeableFrobenius { a, c, iota, iota_star }
}

/// `A = k[y]/(y^p)` with `C = C_{0,0}`; knowledgeable only in characteristic `p`.
/// The cozipper sends `y^{p−1}` to `x`, which the Cardy condition requires.
pub fn truncated_poly_data<F: Field>(f: &F, p: usize) -> KnowledgeableFrobenius<F> {
    let mut b = Builder::new(f, p);
    let one = f.one();
    b.unit_is(0);
    for i in 1..p {
        for j in 1..p {
            if i + j < p {
                b.mu(i, j, &[(i + j, one.clone())]);
            }
        }
    }
    for l in 0..p {
        let terms: Vec<(usize, usize, F::Elem)> = (0..p - l).map(|j| (j + l, p - 1 - j, one.clone())).collect();
        b.delta(l, &terms);
    }
    b.eps(p - 1, one.clone());
    let labels: Vec<String> = (0..p)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "y".to_string(),
            _ => format!("y^{i}"),
        })
        .collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let (degrees, grading) = match p {
        2 => (vec![1, -1], GradingMode::Graded),
        3 => (vec![1, 0, -1], GradingMode::Graded),
        _ => (vec![0; p], GradingMode::None),
    };
    let a = b.finish(&label_refs, degrees, grading, 1);
    let z = f.zero();
    let c = c_ht(f, &z, &z);
    let iota = zipper(f, p, 2, &[(0, 0, one.clone())]);
    let iota_star = zipper(f, 2, p, &[(1, p - 1, one)]);
    KnowledgeableFrobenius { a, c, iota, iota_star }
}

/// Basis `X_{−n}, …, X_n` with `X_1` the unit; `p = 2n + 1`.
pub fn modp_x_data<F: Field>(f: &F, p: usize) -> KnowledgeableFrobenius<F> {
    assert!(p % 2 == 1 && p >= 3, "modp_X needs an odd p >= 3");
    let n = (p - 1) / 2;
    let idx = |i: i64| (i + n as i64) as usize;
    let mut b = Builder::new(f, p);
    let one = f.one();
    let range = -(n as i64)..=(n as i64);
    b.unit_is(idx(1));
    for j in range.clone() {
        if j != 1 && -j != 1 {
            b.mu(idx(j), idx(-j), &[(idx(-1), one.clone())]);
        }
    }
    let all: Vec<(usize, usize, F::Elem)> = range.clone().map(|l| (idx(l), idx(-l), one.clone())).collect();
    b.delta(idx(1), &all);
    b.delta(idx(-1), &[(idx(-1), idx(-1), one.clone())]);
    for j in range.clone() {
        if j != 1 && j != -1 {
            b.delta(idx(j), &[(idx(-1), idx(j), one.clone()), (idx(j), idx(-1), one.clone())]);
        }
    }
    b.eps(idx(-1), one.clone());
    let labels: Vec<String> = range.clone().map(|i| format!("X{i}")).collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let a = b.finish(&label_refs, range.collect(), GradingMode::Graded, 1);
    let z = f.zero();
    let c = c_ht(f, &z, &z);
    let iota = zipper(f, p, 2, &[(idx(1), 0, one.clone())]);
    let iota_star = zipper(f, 2, p, &[(1, idx(-1), one)]);
    KnowledgeableFrobenius { a, c, iota, iota_star }
}

/// `A_{1,t}` with `C = C_{1,t}`, `ι(x) = y`, `ι*(1) = 1`, `ι*(y) = x`.
pub fn barnatan_pair_data<F: Field>(f: &F, t: &F::Elem) -> KnowledgeableFrobenius<F> {
    let h = f.one();
    let a = FrobeniusData { grading: GradingMode::Filtered, ..a_ht(f, &h, t) };
    let c = FrobeniusData { grading: GradingMode::Filtered, ..c_ht(f, &h, t) };
    let one = f.one();
    let iota = Matrix::identity(f, 2);
    let iota_star = zipper(f, 2, 2, &[(0, 0, one.clone()), (1, 1, one)]);
    KnowledgeableFrobenius { a, c, iota, iota_star }
}

/// `A_{0,t}` with `C = C_{0,t²}`, `ι(x) = t·1`, `ι*(1) = 0`, `ι*(y) = t + x`.
pub fn lee_pair_data<F: Field>(f: &F, t: &F::Elem) -> KnowledgeableFrobenius<F> {
    let z = f.zero();
    let a = FrobeniusData { grading: GradingMode::Filtered, ..a_ht(f, &z, t) };
    let c = FrobeniusData { grading: GradingMode::Filtered, ..c_ht(f, &z, &f.mul(t, t)) };
    let one = f.one();
    let iota = zipper(f, 2, 2, &[(0, 0, one.clone()), (0, 1, t.clone())]);
    let iota_star = zipper(f, 2, 2, &[(0, 1, t.clone()), (1, 1, one)]);
    KnowledgeableFrobenius { a, c, iota, iota_star }
}

/// The one-dimensional algebra `k` with `Δ(1) = d·1⊗1` and `ε(1) = e`.
pub fn scalar_algebra<F: Field>(f: &F, d: F::Elem, e: F::Elem) -> FrobeniusData<F> {
    let mut b = Builder::new(f, 1);
    b.unit_is(0);
    b.delta(0, &[(0, 0, d)]);
    b.eps(0, e);
    b.finish(&["1"], vec![0], GradingMode::None, 2)
}

/// `M_m(k)` with `Δ(e_pq) = α Σ_r e_pr ⊗ e_rq`, `ε(e_pq) = δ_pq/α`, and its
/// state-sum partner `C = k`.
pub fn matrix_data<F: Field>(f: &F, m: usize, alpha: &F::Elem) -> Result<KnowledgeableFrobenius<F>, AlgebraError> {
    let ainv = f.inv(alpha).ok_or_else(|| AlgebraError::BadParameter("alpha must be nonzero".into()))?;
    let n = m * m;
    let e = |p: usize, q: usize| p * m + q;
    let mut b = Builder::new(f, n);
    let one = f.one();
    for p in 0..m {
        b.eta.set(e(p, p), 0, one.clone());
        for q in 0..m {
            for s in 0..m {
                b.mu(e(p, q), e(q, s), &[(e(p, s), one.clone())]);
            }
            let terms: Vec<_> = (0..m).map(|r| (e(p, r), e(r, q), alpha.clone())).collect();
            b.delta(e(p, q), &terms);
        }
        b.eps(e(p, p), ainv.clone());
    }
    let labels: Vec<String> = (0..n).map(|i| format!("e{}{}", i / m + 1, i % m + 1)).collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let a = b.finish(&label_refs, vec![0; n], GradingMode::None, 1);
    let a2 = f.mul(alpha, alpha);
    let c = scalar_algebra(f, a2.clone(), f.inv(&a2).unwrap());
    let iota_entries: Vec<_> = (0..m).map(|p| (e(p, p), 0, one.clone())).collect();
    let star_entries: Vec<_> = (0..m).map(|p| (0, e(p, p), alpha.clone())).collect();
    Ok(KnowledgeableFrobenius { a, c, iota: zipper(f, n, 1, &iota_entries), iota_star: zipper(f, 1, n, &star_entries) })
}

/// Quaternion multiplication on the basis `1, I, J, K`: `(index, sign)`.
fn quaternion_product(i: usize, j: usize) -> (usize, i64) {
    const T: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, -1), (3, 1), (2, -1)],
        [(2, 1), (3, -1), (0, -1), (1, 1)],
        [(3, 1), (2, 1), (1, -1), (0, -1)],
    ];
    T[i][j]
}

/// The quaternions with the coproduct scaled by `α`, and `C = k`.
pub fn quaternion_data<F: Field>(f: &F, alpha: &F::Elem) -> Result<KnowledgeableFrobenius<F>, AlgebraError> {
    let ainv = f.inv(alpha).ok_or_else(|| AlgebraError::BadParameter("alpha must be nonzero".into()))?;
    let mut b = Builder::new(f, 4);
    for i in 0..4 {
        for j in 0..4 {
            let (k, s) = quaternion_product(i, j);
            let v = b.c(s);
            b.mu(i, j, &[(k, v)]);
        }
    }
    b.eta.set(0, 0, f.one());
    let sc = |s: i64| f.mul(alpha, &f.from_i64(s));
    b.delta(0, &[(0, 0, sc(1)), (1, 1, sc(-1)), (2, 2, sc(-1)), (3, 3, sc(-1))]);
    b.delta(1, &[(0, 1, sc(1)), (1, 0, sc(1)), (2, 3, sc(1)), (3, 2, sc(-1))]);
    b.delta(2, &[(0, 2, sc(1)), (2, 0, sc(1)), (3, 1, sc(1)), (1, 3, sc(-1))]);
    b.delta(3, &[(0, 3, sc(1)), (3, 0, sc(1)), (1, 2, sc(1)), (2, 1, sc(-1))]);
    b.eps(0, ainv);
    let a = b.finish(&["1", "I", "J", "K"], vec![0; 4], GradingMode::None, 1);
    let four_a2 = f.mul(&f.from_i64(4), &f.mul(alpha, alpha));
    let eps_c = f.inv(&four_a2).ok_or_else(|| AlgebraError::Inconsistent("4α² vanishes".into()))?;
    let c = scalar_algebra(f, four_a2, eps_c);
    let iota = zipper(f, 4, 1, &[(0, 0, f.one())]);
    let iota_star = zipper(f, 1, 4, &[(0, 0, f.mul(&f.from_i64(4), alpha))]);
    Ok(KnowledgeableFrobenius { a, c, iota, iota_star })
}

/// `M_2(k) ⊕ k` in characteristic 5 with window element `1`, basis
/// `1, A, B, C, D` and `C = C_{1,0}`. The coproduct is derived from the
/// product and counit through the Frobenius pairing.
pub fn m2k_plus_k_data<F: Field>(f: &F) -> Result<KnowledgeableFrobenius<F>, AlgebraError> {
    let mut b = Builder::new(f, 5);
    let (one, half) = (f.one(), f.from_ratio(1, 2).ok_or(AlgebraError::Inconsistent("1/2 undefined".into()))?);
    let neg = |x: &F::Elem| f.neg(x);
    b.unit_is(0);
    b.mu(3, 3, &[(0, one.clone()), (4, neg(&one))]);
    b.mu(4, 4, &[(4, one.clone())]);
    b.mu(1, 2, &[(0, half.clone()), (3, half.clone()), (4, neg(&half))]);
    b.mu(2, 1, &[(0, half.clone()), (3, neg(&half)), (4, neg(&half))]);
    b.mu(1, 3, &[(1, neg(&one))]);
    b.mu(3, 1, &[(1, one.clone())]);
    b.mu(2, 3, &[(2, one.clone())]);
    b.mu(3, 2, &[(2, neg(&one))]);
    b.eps(4, one.clone());
    b.delta_from_pairing()?;
    let a = b.finish(&["1", "A", "B", "C", "D"], vec![1, 0, 0, 0, -1], GradingMode::Filtered, 1);
    sum_with_c10(f, a, 4)
}

/// `ℍ ⊕ k` in characteristic 5 with window element `1`, basis `1, I, J, K, L`
/// and `C = C_{1,0}`. The coproduct is derived as for [`m2k_plus_k_data`].
pub fn hk_plus_k_data<F: Field>(f: &F) -> Result<KnowledgeableFrobenius<F>, AlgebraError> {
    let mut b = Builder::new(f, 5);
    let one = f.one();
    let neg = f.neg(&one);
    b.unit_is(0);
    for i in 1..4 {
        b.mu(i, i, &[(4, one.clone()), (0, neg.clone())]);
    }
    b.mu(1, 2, &[(3, one.clone())]);
    b.mu(2, 1, &[(3, neg.clone())]);
    b.mu(2, 3, &[(1, one.clone())]);
    b.mu(3, 2, &[(1, neg.clone())]);
    b.mu(3, 1, &[(2, one.clone())]);
    b.mu(1, 3, &[(2, neg.clone())]);
    b.mu(4, 4, &[(4, one.clone())]);
    b.eps(4, one);
    b.delta_from_pairing()?;
    let a = b.finish(&["1", "I", "J", "K", "L"], vec![1, 0, 0, 0, -1], GradingMode::Filtered, 1);
    sum_with_c10(f, a, 4)
}

/// Pairs `a` with `C_{1,0}` via `ι(x) = e_last`, `ι*(1) = 1`, `ι*(e_last) = x`.
fn sum_with_c10<F: Field>(f: &F, a: FrobeniusData<F>, last: usize) -> Result<KnowledgeableFrobenius<F>, AlgebraError> {
    let one = f.one();
    let c = FrobeniusData { grading: GradingMode::Filtered, ..c_ht(f, &one, &f.zero()) };
    let n = a.dim();
    let iota = zipper(f, n, 2, &[(0, 0, one.clone()), (last, 1, one.clone())]);
    let iota_star = zipper(f, 2, n, &[(0, 0, one.clone()), (1, last, one)]);
    Ok(KnowledgeableFrobenius { a, c, iota, iota_star })
}

/// Looks up a catalog algebra, enforcing each entry's characteristic constraint.
pub fn builtin<F: Field>(name: &str, f: &F, params: &Params) -> Result<Algebra<F>, AlgebraError> {
    let ch = f.characteristic();
    let kf = Algebra::Knowledgeable;
    match name {
        "c_ht" => {
            let h = params.scalar(f, "h", 0)?;
            let t = params.scalar(f, "t", 0)?;
            Ok(Algebra::Frobenius(c_ht(f, &h, &t)))
        }
        "khovanov_pair" => {
            require_char(f, name, ch == 2, "2")?;
            Ok(kf(khovanov_pair_data(f)))
        }
        "truncated_poly" => {
            let p = params.integer("p", ch.max(2))?;
            if p < 2 {
                return Err(AlgebraError::BadParameter("p must be at least 2".into()));
            }
            require_char(f, name, ch == p, &p.to_string())?;
            Ok(kf(truncated_poly_data(f, p as usize)))
        }
        "modp_X" => {
            require_char(f, name, ch % 2 == 1, "an odd prime p")?;
            let p = params.integer("p", ch)?;
            require_char(f, name, ch == p, &p.to_string())?;
            Ok(kf(modp_x_data(f, p as usize)))
        }
        "barnatan_pair" => {
            require_char(f, name, ch == 2, "2")?;
            Ok(kf(barnatan_pair_data(f, &params.scalar(f, "t", 0)?)))
        }
        "lee_pair" => {
            require_char(f, name, ch == 2, "2")?;
            Ok(kf(lee_pair_data(f, &params.scalar(f, "t", 1)?)))
        }
        "matrix" => {
            let m = params.integer("m", 2)?;
            if m == 0 {
                return Err(AlgebraError::BadParameter("m must be positive".into()));
            }
            Ok(kf(matrix_data(f, m as usize, &params.scalar(f, "alpha", 1)?)?))
        }
        "quaternion" => {
            require_char(f, name, ch != 2, "not 2")?;
            Ok(kf(quaternion_data(f, &params.scalar(f, "alpha", 1)?)?))
        }
        "m2k_plus_k" => {
            require_char(f, name, ch == 5, "5")?;
            Ok(kf(m2k_plus_k_data(f)?))
        }
        "hk_plus_k" => {
            require_char(f, name, ch == 5, "5")?;
            Ok(kf(hk_plus_k_data(f)?))
        }
        _ => Err(AlgebraError::UnknownAlgebra(name.to_string())),
    }
}
