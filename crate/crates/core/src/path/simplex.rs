use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::Rational;

use super::{ExactMatrix, MatPolyPath, Poly};

type Monomials = BTreeMap<Vec<u32>, Rational>;

/// A `d × d` matrix of polynomials in `s = x₀` and `u₁ … uₙ = x₁ … xₙ`.
///
/// Variable `0` holds the outer bound, so integrating `u₁` over `(0, s)`
/// lands the result there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexPoly {
    vars: usize,
    dim: usize,
    entries: Vec<Monomials>,
}

fn add_into(target: &mut Monomials, key: Vec<u32>, c: Rational) {
    if c.is_zero() {
        return;
    }
    match target.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SimplexPoly {
    /// The identity matrix, as a polynomial in `n + 1` variables.
    pub fn identity(n: usize, dim: usize) -> Self {
        let mut entries = vec![Monomials::new(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i].insert(vec![0; n + 1], Rational::one());
        }
        SimplexPoly {
            vars: n + 1,
            dim,
            entries,
        }
    }

    /// `a(u_var)` embedded among `n + 1` variables.
    pub fn from_path(a: &MatPolyPath, n: usize, var: usize) -> Result<Self> {
        if var > n {
            return Err(Error::OutOfRange(format!("variable {var} of {n}")));
        }
        let dim = a.dim();
        let mut entries = vec![Monomials::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in a.get(i, j).coeffs().iter().enumerate() {
                    let mut key = vec![0; n + 1];
                    key[var] = k as u32;
                    add_into(&mut entries[i * dim + j], key, c.clone());
                }
            }
        }
        Ok(SimplexPoly {
            vars: n + 1,
            dim,
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.vars != other.vars {
            return Err(Error::Invalid(format!(
                "variable counts differ: {} and {}",
                self.vars, other.vars
            )));
        }
        let d = self.dim;
        let mut entries = vec![Monomials::new(); d * d];
        for i in 0..d {
            for k in 0..d {
                let left = &self.entries[i * d + k];
                if left.is_empty() {
                    continue;
                }
                for j in 0..d {
                    let target = &mut entries[i * d + j];
                    for (m1, c1) in left {
                        for (m2, c2) in &other.entries[k * d + j] {
                            let key: Vec<u32> = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                            add_into(target, key, c1 * c2);
                        }
                    }
                }
            }
        }
        Ok(SimplexPoly {
            vars: self.vars,
            dim: d,
            entries,
        })
    }

    /// Antiderivative in `x_var` vanishing at `x_var = 0`.
    pub fn antiderivative(&self, var: usize) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                e.iter()
                    .map(|(m, c)| {
                        let mut key = m.clone();
                        key[var] += 1;
                        let k = key[var];
                        (key, c / Rational::from_integer(k.into()))
                    })
                    .collect()
            })
            .collect();
        SimplexPoly {
            vars: self.vars,
            dim: self.dim,
            entries,
        }
    }

    /// Substitutes `x_from := x_to`.
    pub fn substitute(&self, from: usize, to: usize) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let mut out = Monomials::new();
                for (m, c) in e {
                    let mut key = m.clone();
                    key[to] += key[from];
                    key[from] = 0;
                    add_into(&mut out, key, c.clone());
                }
                out
            })
            .collect();
        SimplexPoly {
            vars: self.vars,
            dim: self.dim,
            entries,
        }
    }

    /// `∫₀^{x_upper} · d x_var`.
    pub fn integrate(&self, var: usize, upper: usize) -> Self {
        self.antiderivative(var).substitute(var, upper)
    }

    /// Reads off a polynomial that only involves variable `0`.
    pub fn to_path(&self) -> Result<MatPolyPath> {
        let d = self.dim;
        let mut rows = vec![Vec::with_capacity(d); d];
        for (idx, e) in self.entries.iter().enumerate() {
            let mut coeffs = Vec::new();
            for (m, c) in e {
                if m[1..].iter().any(|&x| x != 0) {
                    return Err(Error::Invalid("inner variables remain".into()));
                }
                let k = m[0] as usize;
                if coeffs.len() <= k {
                    coeffs.resize(k + 1, Rational::zero());
                }
                coeffs[k] += c;
            }
            rows[idx / d].push(Poly::new(coeffs));
        }
        MatPolyPath::from_rows(rows)
    }
}

/// `∫_{0<uₙ<…<u₁<s} a(u_{σ1})⋯a(u_{σn}) du` as a polynomial in `s`.
///
/// The integrand is expanded, then `uₙ`, `uₙ₋₁`, …, `u₁` are integrated in
/// turn, each up to the next outer variable.
pub fn perm_integral(sigma: &Permutation, a: &MatPolyPath) -> Result<MatPolyPath> {
    let n = sigma.len();
    if n == 0 {
        return Err(Error::DegreeZero("perm_integral"));
    }
    let mut integrand = SimplexPoly::identity(n, a.dim());
    for &letter in sigma.word() {
        integrand = integrand.mul(&SimplexPoly::from_path(a, n, letter)?)?;
    }
    for var in (1..=n).rev() {
        integrand = integrand.integrate(var, var - 1);
    }
    integrand.to_path()
}

pub fn eval_perm_integral(
    sigma: &Permutation,
    a: &MatPolyPath,
    s: &Rational,
) -> Result<ExactMatrix> {
    Ok(perm_integral(sigma, a)?.eval(s))
}
