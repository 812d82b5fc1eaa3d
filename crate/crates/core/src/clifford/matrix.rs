use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Dense 4x4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix4 {
    pub entries: [[Complex64; 4]; 4],
}

/// Four-component complex column vector.
pub type Spinor4 = [Complex64; 4];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl Default for ComplexMatrix4 {
    fn default() -> Self {
        Self::zero()
    }
}

impl ComplexMatrix4 {
    pub fn zero() -> Self {
        ComplexMatrix4 {
            entries: [[ZERO; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.entries[k][k] = ONE;
        }
        m
    }

    pub fn from_rows(entries: [[Complex64; 4]; 4]) -> Self {
        ComplexMatrix4 { entries }
    }

    pub fn from_real_diagonal(d: [f64; 4]) -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.entries[k][k] = Complex64::new(d[k], 0.0);
        }
        m
    }

    /// Outer product `u v^dagger`.
    pub fn outer(u: &Spinor4, v: &Spinor4) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = u[i] * v[j].conj();
            }
        }
        m
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|z| *z *= c);
        m
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|k| self.entries[k][k]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.adjoint(), tol)
    }

    /// `M * M = 1` within `tol`.
    pub fn is_involution(&self, tol: f64) -> bool {
        (*self * *self).approx_eq(&Self::identity(), tol)
    }

    pub fn apply(&self, v: &Spinor4) -> Spinor4 {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|k| self.entries[i][k] * v[k]).sum();
        }
        out
    }

    /// `U M U^dagger`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        *u * *self * u.adjoint()
    }

    pub fn to_nalgebra(&self) -> Matrix4<Complex64> {
        Matrix4::from_fn(|i, j| self.entries[i][j])
    }

    pub fn from_nalgebra(m: &Matrix4<Complex64>) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = m[(i, j)];
            }
        }
        out
    }

    /// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
    ///
    /// Only the Hermitian part `(M + M^dagger)/2` is diagonalised.
    pub fn eigh(&self) -> (Vec<f64>, Vec<Spinor4>) {
        let herm = (*self + self.adjoint()).scale_real(0.5);
        let eig = herm.to_nalgebra().symmetric_eigen();
        let mut pairs: Vec<(f64, Spinor4)> = (0..4)
            .map(|c| {
                let col = eig.eigenvectors.column(c);
                (eig.eigenvalues[c], [col[0], col[1], col[2], col[3]])
            })
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        pairs.into_iter().unzip()
    }
}

impl Add for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] += rhs.entries[i][j];
            }
        }
        m
    }
}

impl Sub for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] -= rhs.entries[i][j];
            }
        }
        m
    }
}

impl Neg for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn neg(self) -> Self {
        self.scale_real(-1.0)
    }
}

impl Mul for ComplexMatrix4 {
    type Output = ComplexMatrix4;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = (0..4).map(|k| self.entries[i][k] * rhs.entries[k][j]).sum();
            }
        }
        m
    }
}

/// Inner product `<u|v>`.
pub fn inner(u: &Spinor4, v: &Spinor4) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}
