//! Lanczos tridiagonalization and evolution on the resulting Krylov chain.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-12;
const TERMINATION_TOL: f64 = 1e-12;

/// Lanczos coefficients. `a[n]` is the diagonal entry on site `n`; `b[n]`
/// couples sites `n` and `n + 1`, so `b[0]` is the usual `b_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LanczosData {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl LanczosData {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The chain's tridiagonal generator.
    pub fn tridiagonal(&self) -> DMatrix<f64> {
        let n = self.a.len();
        let mut m = DMatrix::zeros(n, n);
        for (i, &a) in self.a.iter().enumerate() {
            m[(i, i)] = a;
        }
        for (i, &b) in self.b.iter().take(n.saturating_sub(1)).enumerate() {
            m[(i, i + 1)] = b;
            m[(i + 1, i)] = b;
        }
        m
    }
}

/// Coefficients together with the orthonormal Krylov vectors.
#[derive(Debug, Clone)]
pub struct LanczosRun {
    pub data: LanczosData,
    pub basis: Vec<DVector<Complex64>>,
}

/// Largest entry of `|H - H^dagger|`.
pub fn hermiticity_defect(h: &DMatrix<Complex64>) -> f64 {
    (h - h.adjoint())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Lanczos with full reorthogonalization, run until `b < 1e-12`, the space is
/// exhausted, or `max_steps` vectors have been built.
pub fn lanczos_oracle(
    h: &DMatrix<Complex64>,
    start: &DVector<Complex64>,
    max_steps: usize,
) -> Result<LanczosRun> {
    let dim = h.nrows();
    if h.ncols() != dim || start.len() != dim || dim == 0 {
        return Err(Error::InvalidParameter(format!(
            "shape mismatch: matrix {}x{}, start vector {}",
            h.nrows(),
            h.ncols(),
            start.len()
        )));
    }
    let defect = hermiticity_defect(h);
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let norm = start.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidParameter(format!(
            "start vector must be normalized, |v| = {norm}"
        )));
    }
    if max_steps == 0 {
        return Err(Error::InvalidParameter("max_steps must be positive".into()));
    }

    let mut basis = vec![start.clone()];
    let mut a = Vec::new();
    let mut b = Vec::new();
    loop {
        let n = basis.len() - 1;
        let mut w = h * &basis[n];
        let an = basis[n].dotc(&w).re;
        a.push(an);
        w -= &basis[n] * Complex64::from(an);
        if n > 0 {
            w -= &basis[n - 1] * Complex64::from(b[n - 1]);
        }
        for _ in 0..2 {
            for v in &basis {
                let c = v.dotc(&w);
                w -= v * c;
            }
        }
        if basis.len() >= max_steps || basis.len() >= dim {
            break;
        }
        let bn = w.norm();
        if bn < TERMINATION_TOL {
            break;
        }
        b.push(bn);
        basis.push(w / Complex64::from(bn));
    }
    Ok(LanczosRun {
        data: LanczosData { a, b },
        basis,
    })
}

/// Exact propagation of `i d(psi_n)/dt = a_n psi_n + b_n psi_{n-1} + b_{n+1} psi_{n+1}`
/// from `psi = e_0`, through the spectral decomposition of the chain.
#[derive(Debug, Clone)]
pub struct KrylovChain {
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
}

impl KrylovChain {
    pub fn new(data: &LanczosData) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::InvalidParameter(
                "Krylov chain needs at least one site".into(),
            ));
        }
        let eig = SymmetricEigen::new(data.tridiagonal());
        Ok(KrylovChain {
            eigenvalues: eig.eigenvalues,
            eigenvectors: eig.eigenvectors,
        })
    }

    pub fn amplitudes(&self, t: f64) -> Vec<Complex64> {
        let v = &self.eigenvectors;
        let n = v.nrows();
        let weights: Vec<Complex64> = (0..n)
            .map(|j| Complex64::from_polar(v[(0, j)], -self.eigenvalues[j] * t))
            .collect();
        (0..n)
            .map(|i| (0..n).map(|j| weights[j] * v[(i, j)]).sum())
            .collect()
    }

    /// `sum_n n |psi_n(t)|^2`.
    pub fn complexity(&self, t: f64) -> f64 {
        self.amplitudes(t)
            .iter()
            .enumerate()
            .map(|(n, z)| n as f64 * z.norm_sqr())
            .sum()
    }
}

pub fn krylov_chain_amplitudes(data: &LanczosData, t: f64) -> Result<Vec<Complex64>> {
    Ok(KrylovChain::new(data)?.amplitudes(t))
}

pub fn krylov_chain_complexity(data: &LanczosData, t: f64) -> Result<f64> {
    Ok(KrylovChain::new(data)?.complexity(t))
}
