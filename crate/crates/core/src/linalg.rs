//! Small dense `f64` matrices and the matrix exponential.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct FloatMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    pub fn zero(dim: usize) -> Self {
        FloatMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    /// Row-major data; fails unless `data.len() == dim²`.
    pub fn from_vec(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::NotSquare);
        }
        Ok(FloatMatrix { dim, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Self::from_vec(dim, rows.concat())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        FloatMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, c: f64) -> Self {
        FloatMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        out
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.data
            .chunks(self.dim)
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for FloatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.data.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:.16e}")).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `exp(M)` by scaling and squaring: `M` is scaled by `2⁻ʲ` until its norm
/// is at most `1/2`, a degree-18 Taylor polynomial is summed, then squared
/// `j` times.
pub fn matrix_exp(m: &FloatMatrix) -> FloatMatrix {
    let norm = m.norm_inf();
    let mut squarings = 0u32;
    if norm > 0.5 {
        squarings = (norm / 0.5).log2().ceil() as u32;
    }
    let scaled = m.scale(0.5f64.powi(squarings as i32));
    let mut out = FloatMatrix::identity(m.dim);
    let mut term = FloatMatrix::identity(m.dim);
    for k in 1..=18 {
        term = term.mul(&scaled).scale(1.0 / k as f64);
        out = out.add(&term);
    }
    for _ in 0..squarings {
        out = out.mul(&out);
    }
    out
}

/// [`matrix_exp`] on row-major data, failing on non-square input.
pub fn matrix_exp_rows(rows: &[Vec<f64>]) -> Result<FloatMatrix> {
    Ok(matrix_exp(&FloatMatrix::from_rows(rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &FloatMatrix, b: &FloatMatrix, tol: f64) -> bool {
        a.sub(b).norm_inf() <= tol * b.norm_inf().max(1.0)
    }

    #[test]
    fn trivial_exponentials() {
        assert_eq!(matrix_exp(&FloatMatrix::zero(3)), FloatMatrix::identity(3));
        let e = matrix_exp(&FloatMatrix::identity(1));
        assert!((e.get(0, 0) - std::f64::consts::E).abs() < 1e-13 * std::f64::consts::E);
        let n = FloatMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(
            matrix_exp(&n),
            FloatMatrix::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap()
        );
        assert!(matrix_exp_rows(&[vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn rotation_generator() {
        for &theta in &[0.3, 1.0, 2.5] {
            let m = FloatMatrix::from_rows(&[vec![0.0, theta], vec![-theta, 0.0]]).unwrap();
            let expect = FloatMatrix::from_rows(&[
                vec![theta.cos(), theta.sin()],
                vec![-theta.sin(), theta.cos()],
            ])
            .unwrap();
            assert!(close(&matrix_exp(&m), &expect, 1e-13), "{theta}");
        }
    }

    #[test]
    fn exp_of_negation_is_inverse() {
        let m = FloatMatrix::from_rows(&[
            vec![0.2, -0.7, 0.1],
            vec![0.4, 0.1, -0.3],
            vec![0.0, 0.5, -0.2],
        ])
        .unwrap();
        let prod = matrix_exp(&m).mul(&matrix_exp(&m.scale(-1.0)));
        assert!(close(&prod, &FloatMatrix::identity(3), 1e-14));
    }
}
