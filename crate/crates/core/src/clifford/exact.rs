//! Integer-complex 4x4 matrices.
//!
//! Every gamma matrix and every component of the observable families has
//! entries in `{0, ±1, ±i}`, and so do their products. Structural claims
//! (anticommutation, commuting families, Peres-Mermin products) are checked
//! here with zero tolerance.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::ComplexMatrix4;

/// Gaussian integer `re + i im`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub fn conj(self) -> Self {
        GaussInt::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl From<GaussInt> for Complex64 {
    fn from(z: GaussInt) -> Complex64 {
        Complex64::new(z.re as f64, z.im as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactMatrix4(pub [[GaussInt; 4]; 4]);

impl ExactMatrix4 {
    pub fn zero() -> Self {
        ExactMatrix4([[GaussInt::ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.0[k][k] = GaussInt::ONE;
        }
        m
    }

    /// Kronecker product of two 2x2 Gaussian-integer matrices.
    pub fn kron(a: [[GaussInt; 2]; 2], b: [[GaussInt; 2]; 2]) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
            }
        }
        m
    }

    /// Block matrix `[[p, q], [r, s]]` from 2x2 blocks.
    pub fn from_blocks(blocks: [[[[GaussInt; 2]; 2]; 2]; 2]) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = blocks[i / 2][j / 2][i % 2][j % 2];
            }
        }
        m
    }

    pub fn scale(&self, c: GaussInt) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|z| *z = c * *z);
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_zero())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn to_complex(&self) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.0[i][j].into();
            }
        }
        m
    }
}

impl Add for ExactMatrix4 {
    type Output = ExactMatrix4;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[i][j] + rhs.0[i][j];
            }
        }
        m
    }
}

impl Sub for ExactMatrix4 {
    type Output = ExactMatrix4;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ExactMatrix4 {
    type Output = ExactMatrix4;
    fn neg(self) -> Self {
        self.scale(-GaussInt::ONE)
    }
}

impl Mul for ExactMatrix4 {
    type Output = ExactMatrix4;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = GaussInt::ZERO;
                for k in 0..4 {
                    acc = acc + self.0[i][k] * rhs.0[k][j];
                }
                m.0[i][j] = acc;
            }
        }
        m
    }
}
