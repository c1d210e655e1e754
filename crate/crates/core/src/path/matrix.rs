use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, to_f64, Rational};

use super::Poly;

/// A `d × d` matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zero(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Ok(ExactMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        Ok(ExactMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out.entries[i * d + j] += a * &other.entries[k * d + j];
                }
            }
        }
        Ok(out)
    }

    pub fn to_f64(&self) -> crate::linalg::FloatMatrix {
        crate::linalg::FloatMatrix::from_vec(self.dim, self.entries.iter().map(to_f64).collect())
            .expect("square by construction")
    }

    /// Same schema as [`MatPolyPath::to_json`], with constant entries.
    pub fn to_json(&self) -> Value {
        MatPolyPath::constant(self).to_json()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format_rational(self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix(\n{self})")
    }
}

fn check_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// A path `t ↦ A(t)`: a `d × d` matrix of polynomials in `t` with rational
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatPolyPath {
    dim: usize,
    entries: Vec<Poly>,
}

impl MatPolyPath {
    pub fn zero(dim: usize) -> Self {
        MatPolyPath {
            dim,
            entries: vec![Poly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::constant(&ExactMatrix::identity(dim))
    }

    pub fn constant(m: &ExactMatrix) -> Self {
        MatPolyPath {
            dim: m.dim,
            entries: m.entries.iter().cloned().map(Poly::constant).collect(),
        }
    }

    /// The `1 × 1` path `p(t)`.
    pub fn scalar(p: Poly) -> Self {
        MatPolyPath {
            dim: 1,
            entries: vec![p],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Ok(MatPolyPath {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Largest entry degree, `None` for the zero path.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        MatPolyPath {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        Ok(MatPolyPath {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, Poly::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, Poly::sub)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Poly::zero();
                for k in 0..d {
                    acc = acc.add(&self.entries[i * d + k].mul(&other.entries[k * d + j]));
                }
                out.entries[i * d + j] = acc;
            }
        }
        Ok(out)
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Entrywise `∫₀ᵗ`; the weight-zero Rota–Baxter operator.
    pub fn integral(&self) -> Self {
        self.map(Poly::antiderivative)
    }

    pub fn derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    pub fn eval(&self, s: &Rational) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|p| p.eval(s)).collect(),
        }
    }

    /// Drops every monomial `tᵏ` with `k ≥ degree`.
    pub fn truncate_below(&self, degree: usize) -> Self {
        self.map(|p| p.truncate_below(degree))
    }

    /// Lowest power of `t` present in any entry.
    pub fn valuation(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::valuation).min()
    }

    /// `{"dim": d, "entries": [[[c0, c1, …], …], …]}` with `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.dim)
            .map(|i| {
                Value::Array(
                    (0..self.dim)
                        .map(|j| {
                            let p = self.get(i, j);
                            let coeffs: Vec<Value> = if p.is_zero() {
                                vec![Value::from("0")]
                            } else {
                                p.coeffs()
                                    .iter()
                                    .map(|c| Value::from(format_rational(c)))
                                    .collect()
                            };
                            Value::Array(coeffs)
                        })
                        .collect(),
                )
            })
            .collect();
        json!({ "dim": self.dim, "entries": rows })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: String| Error::Invalid(m);
        let dim = value
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing integer field \"dim\"".into()))? as usize;
        if dim == 0 {
            return Err(bad("dim must be at least 1".into()));
        }
        let rows = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field \"entries\"".into()))?;
        if rows.len() != dim {
            return Err(bad(format!("expected {dim} rows, found {}", rows.len())));
        }
        let mut out = Vec::with_capacity(dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .filter(|r| r.len() == dim)
                .ok_or_else(|| bad(format!("row {i} must hold {dim} polynomials")))?;
            let mut polys = Vec::with_capacity(dim);
            for (j, entry) in row.iter().enumerate() {
                let coeffs = entry
                    .as_array()
                    .ok_or_else(|| bad(format!("entry ({i}, {j}) must be an array")))?;
                let coeffs = coeffs
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => parse_rational(s),
                        Value::Number(n) if n.is_i64() => {
                            Ok(Rational::from_integer(n.as_i64().expect("i64").into()))
                        }
                        other => Err(bad(format!("entry ({i}, {j}): bad coefficient {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                polys.push(Poly::new(coeffs));
            }
            out.push(polys);
        }
        Self::from_rows(out)
    }
}

impl fmt::Display for MatPolyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MatPolyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatPolyPath(\n{self})")
    }
}
