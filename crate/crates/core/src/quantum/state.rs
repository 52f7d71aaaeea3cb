use crate::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Dense complex matrix used for general (not necessarily Hermitian) operators.
pub type CMatrix = DMatrix<Complex64>;

/// Maximum entrywise deviation `|A - A^†|` accepted for a Hermitian matrix.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Tolerance on trace and on the smallest eigenvalue of a density matrix.
pub const DENSITY_TOL: f64 = 1e-10;

/// Vector of complex amplitudes. Normalisation is not imposed.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector(DVector<Complex64>);

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidArgument("state vector must have at least one amplitude".into()));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument("state vector has non-finite amplitudes".into()));
        }
        Ok(Self(DVector::from_vec(amplitudes)))
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The `k`-th vector of the standard basis in dimension `n`.
    pub fn basis(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::InvalidArgument(format!("basis index {k} out of range for dimension {n}")));
        }
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[k] = Complex64::new(1.0, 0.0);
        Self::new(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        self.0.as_slice()
    }

    pub fn column(&self) -> &DVector<Complex64> {
        &self.0
    }

    /// `⟨self, other⟩`, antilinear in the first slot.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.dotc(&other.0))
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.norm_squared()
    }

    /// `⟨ψ, ψ⟩`, failing on the zero vector.
    pub fn nonzero_norm_sq(&self) -> Result<f64> {
        let n = self.norm_sq();
        if n == 0.0 {
            Err(Error::ZeroVector)
        } else {
            Ok(n)
        }
    }

    pub fn normalized(&self) -> Result<StateVector> {
        let n = self.nonzero_norm_sq()?.sqrt();
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> StateVector {
        Self(&self.0 * c)
    }

    pub fn add(&self, other: &StateVector) -> Result<StateVector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self(&self.0 + &other.0))
    }

    /// `self + s·other`.
    pub fn axpy(&self, s: f64, other: &StateVector) -> Result<StateVector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self(&self.0 + &other.0 * Complex64::new(s, 0.0)))
    }

    /// Multiplication by `i`, the complex structure on the realified space.
    pub fn times_i(&self) -> StateVector {
        self.scale(Complex64::i())
    }

    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        check_dim(self.dim(), other.dim())?;
        Ok((&self.0 - &other.0).norm())
    }
}

/// Hermitian operator, symmetrised on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
        }
        let adj = m.adjoint();
        let dev = (&m - &adj).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if !dev.is_finite() || dev > HERMITIAN_TOL {
            return Err(Error::NotHermitian(dev));
        }
        Ok(Self((m + adj) * Complex64::new(0.5, 0.0)))
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        for r in rows {
            check_dim(n, r.len())?;
        }
        Self::new(CMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn from_real_diagonal(d: &[f64]) -> Self {
        let n = d.len();
        Self(CMatrix::from_fn(n, n, |i, j| if i == j { Complex64::new(d[i], 0.0) } else { Complex64::new(0.0, 0.0) }))
    }

    pub fn identity(n: usize) -> Self {
        Self(CMatrix::identity(n, n))
    }

    pub fn pauli_x() -> Self {
        let (o, l) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        Self(CMatrix::from_row_slice(2, 2, &[o, l, l, o]))
    }

    pub fn pauli_y() -> Self {
        let (o, i) = (Complex64::new(0.0, 0.0), Complex64::i());
        Self(CMatrix::from_row_slice(2, 2, &[o, -i, i, o]))
    }

    pub fn pauli_z() -> Self {
        Self::from_real_diagonal(&[1.0, -1.0])
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn scale(&self, c: f64) -> HermitianMatrix {
        Self(&self.0 * Complex64::new(c, 0.0))
    }

    pub fn add(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self(&self.0 + &other.0))
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        apply_op(&self.0, psi)
    }

    /// Eigenvalues in ascending order together with the matching
    /// orthonormal eigenvectors as columns.
    pub fn eigen(&self) -> (Vec<f64>, CMatrix) {
        let eig = self.0.clone().symmetric_eigen();
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let vectors = CMatrix::from_fn(self.dim(), self.dim(), |i, j| eig.eigenvectors[(i, order[j])]);
        (values, vectors)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigen().0
    }

    /// `f(A) = V diag(f(λ)) V^†`.
    pub fn function(&self, f: impl Fn(f64) -> Complex64) -> CMatrix {
        let (vals, v) = self.eigen();
        let n = self.dim();
        let d = CMatrix::from_fn(n, n, |i, j| if i == j { f(vals[i]) } else { Complex64::new(0.0, 0.0) });
        &v * d * v.adjoint()
    }
}

/// Positive semidefinite Hermitian matrix of unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(HermitianMatrix);

impl DensityMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        let h = HermitianMatrix::new(m).map_err(|e| Error::InvalidDensity(e.to_string()))?;
        let tr = h.matrix().trace().re;
        if (tr - 1.0).abs() > DENSITY_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr} differs from 1")));
        }
        let min = h.eigenvalues().first().copied().unwrap_or(0.0);
        if min < -DENSITY_TOL {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self(h))
    }

    /// `|ψ⟩⟨ψ| / ⟨ψ, ψ⟩`.
    pub fn from_state(psi: &StateVector) -> Result<Self> {
        let n = psi.nonzero_norm_sq()?;
        Self::new(momentum_map(psi) / Complex64::new(n, 0.0))
    }

    pub(crate) fn from_hermitian_unchecked(h: HermitianMatrix) -> Self {
        Self(h)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        self.0.matrix()
    }

    pub fn as_hermitian(&self) -> &HermitianMatrix {
        &self.0
    }

    pub fn trace(&self) -> f64 {
        self.matrix().trace().re
    }

    pub fn purity(&self) -> f64 {
        (self.matrix() * self.matrix()).trace().re
    }

    /// `Tr(ρ A)`.
    pub fn expectation(&self, a: &HermitianMatrix) -> Result<f64> {
        check_dim(self.dim(), a.dim())?;
        Ok((self.matrix() * a.matrix()).trace().re)
    }
}

/// Momentum map of the unitary action, the rank-one operator `|ψ⟩⟨ψ|`.
pub fn momentum_map(psi: &StateVector) -> CMatrix {
    psi.column() * psi.column().adjoint()
}

pub(crate) fn apply_op(m: &CMatrix, psi: &StateVector) -> Result<StateVector> {
    check_dim(m.ncols(), psi.dim())?;
    Ok(StateVector(m * psi.column()))
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Real coordinates `(q_1..q_n, p_1..p_n)` with `ψ_k = q_k + i p_k`.
pub fn realify(psi: &StateVector) -> Vec<f64> {
    let a = psi.amplitudes();
    a.iter().map(|z| z.re).chain(a.iter().map(|z| z.im)).collect()
}

pub fn complexify(x: &[f64]) -> Result<StateVector> {
    if x.is_empty() || !x.len().is_multiple_of(2) {
        return Err(Error::DimensionMismatch { expected: 2 * (x.len() / 2 + 1), found: x.len() });
    }
    let n = x.len() / 2;
    StateVector::new((0..n).map(|k| Complex64::new(x[k], x[n + k])).collect())
}

/// The three tensors of the Kähler structure on the realified space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KahlerTensor {
    ComplexStructure,
    Metric,
    Symplectic,
}

/// Result of [`kahler_apply`]: `J` maps vectors, `g` and `ω` produce numbers.
#[derive(Debug, Clone, PartialEq)]
pub enum KahlerValue {
    Vector(Vec<f64>),
    Scalar(f64),
}

/// Applies `J`, `g` or `ω` in realified coordinates. `J` ignores `y`.
pub fn kahler_apply(tensor: KahlerTensor, x: &[f64], y: &[f64]) -> Result<KahlerValue> {
    match tensor {
        KahlerTensor::ComplexStructure => kahler_j(x).map(KahlerValue::Vector),
        KahlerTensor::Metric => kahler_g(x, y).map(KahlerValue::Scalar),
        KahlerTensor::Symplectic => kahler_omega(x, y).map(KahlerValue::Scalar),
    }
}

pub fn kahler_j(x: &[f64]) -> Result<Vec<f64>> {
    let n = half_dim(x.len())?;
    Ok((0..n).map(|k| -x[n + k]).chain((0..n).map(|k| x[k])).collect())
}

pub fn kahler_g(x: &[f64], y: &[f64]) -> Result<f64> {
    half_dim(x.len())?;
    check_dim(x.len(), y.len())?;
    Ok(x.iter().zip(y).map(|(a, b)| a * b).sum())
}

pub fn kahler_omega(x: &[f64], y: &[f64]) -> Result<f64> {
    let n = half_dim(x.len())?;
    check_dim(x.len(), y.len())?;
    Ok((0..n).map(|k| x[k] * y[n + k] - x[n + k] * y[k]).sum())
}

fn half_dim(len: usize) -> Result<usize> {
    if len == 0 || !len.is_multiple_of(2) {
        return Err(Error::DimensionMismatch { expected: len + 1, found: len });
    }
    Ok(len / 2)
}
