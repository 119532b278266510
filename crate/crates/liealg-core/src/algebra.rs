//! Finite-dimensional Lie algebras presented by structure constants.
//!
//! A [`LieAlgebra`] is a list of generator labels plus a [`StructureTensor`]
//! holding the coefficients of `[X_i, X_j]` expanded in the basis. The tensor
//! only ever stores pairs with `i < j`; antisymmetry is a consequence of the
//! storage scheme rather than a property to be checked.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::linalg::{Matrix, RowSpace};
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// Basis-change matrices, automorphisms and projections are all plain exact
/// matrices.
pub type LinearMap = Matrix;

/// Sparse antisymmetric bracket table: `(i, j)` with `i < j` maps to the dense
/// coefficient vector of `[X_i, X_j]`. Zero vectors are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    entries: BTreeMap<(usize, usize), Vec<G>>,
}

impl StructureTensor {
    pub fn new(dim: usize) -> Self {
        StructureTensor { dim, entries: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets the coefficient vector of `[X_i, X_j]` for `i < j`.
    pub fn set(&mut self, i: usize, j: usize, coeffs: Vec<G>) -> Result<(), Error> {
        if i >= j || j >= self.dim {
            return Err(Error::InvalidAlgebra(format!(
                "bracket pair ({i}, {j}) must satisfy i < j < {}",
                self.dim
            )));
        }
        if coeffs.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: coeffs.len() });
        }
        if coeffs.iter().all(G::is_zero) {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), coeffs);
        }
        Ok(())
    }

    /// Coefficient vector of `[X_i, X_j]` for arbitrary index order; `(j, i)`
    /// returns the negated vector and `(i, i)` is zero.
    pub fn coefficients(&self, i: usize, j: usize) -> Vec<G> {
        if i == j {
            return vec![G::zero(); self.dim];
        }
        let (key, negate) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.entries.get(&key) {
            None => vec![G::zero(); self.dim],
            Some(v) if negate => v.iter().map(|x| -x).collect(),
            Some(v) => v.clone(),
        }
    }

    /// Iterates stored pairs `(i, j)` with `i < j` and nonzero coefficients.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), &Vec<G>)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }
}

/// A Lie algebra with named generators. `jacobi_verified` records whether the
/// full Jacobi sweep passed at construction; the catalog refuses to hand out
/// anything unverified, but hand-written tables may legitimately carry
/// `false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    tensor: StructureTensor,
    jacobi_verified: bool,
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, tensor: StructureTensor) -> Result<Self, Error> {
        if names.is_empty() {
            return Err(Error::InvalidAlgebra("generator list is empty".into()));
        }
        if names.len() != tensor.dim() {
            return Err(Error::DimensionMismatch { expected: tensor.dim(), got: names.len() });
        }
        for (idx, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlgebra(format!("generator {idx} has an empty name")));
            }
            if names[..idx].contains(name) {
                return Err(Error::InvalidAlgebra(format!("duplicate generator name `{name}`")));
            }
        }
        let mut algebra = LieAlgebra { names, tensor, jacobi_verified: false };
        algebra.jacobi_verified = check_jacobi(&algebra).passed();
        Ok(algebra)
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn jacobi_verified(&self) -> bool {
        self.jacobi_verified
    }

    /// Same structure constants under new generator labels.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self, Error> {
        LieAlgebra::new(names, self.tensor.clone())
    }

    pub fn element(&self, coeffs: Vec<G>) -> Result<AlgebraElement<'_>, Error> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: coeffs.len() });
        }
        Ok(AlgebraElement { algebra: self, coeffs })
    }

    pub fn generator(&self, i: usize) -> Result<AlgebraElement<'_>, Error> {
        if i >= self.dim() {
            return Err(Error::GeneratorIndex(i));
        }
        let mut coeffs = vec![G::zero(); self.dim()];
        coeffs[i] = G::one();
        Ok(AlgebraElement { algebra: self, coeffs })
    }

    pub fn zero_element(&self) -> AlgebraElement<'_> {
        AlgebraElement { algebra: self, coeffs: vec![G::zero(); self.dim()] }
    }

    /// Raw bracket on coefficient vectors, bilinear through the tensor.
    pub fn bracket_coeffs(&self, x: &[G], y: &[G]) -> Vec<G> {
        let n = self.dim();
        let mut out = vec![G::zero(); n];
        for ((i, j), coeffs) in self.tensor.pairs() {
            // x_i y_j − x_j y_i multiplies [X_i, X_j] for each stored i < j.
            let weight = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if weight.is_zero() {
                continue;
            }
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(&weight * c);
                }
            }
        }
        out
    }
}

/// An element `a^i X_i` bound to its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<'a> {
    algebra: &'a LieAlgebra,
    coeffs: Vec<G>,
}

impl<'a> AlgebraElement<'a> {
    pub fn algebra(&self) -> &'a LieAlgebra {
        self.algebra
    }

    pub fn coefficients(&self) -> &[G] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<G> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(G::is_zero)
    }

    pub fn scaled(&self, factor: &G) -> AlgebraElement<'a> {
        AlgebraElement {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &AlgebraElement<'a>) -> Result<AlgebraElement<'a>, Error> {
        self.check_same_algebra(other)?;
        Ok(AlgebraElement {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// The Lie bracket `[self, other]`.
    pub fn bracket(&self, other: &AlgebraElement<'a>) -> Result<AlgebraElement<'a>, Error> {
        self.check_same_algebra(other)?;
        Ok(AlgebraElement {
            algebra: self.algebra,
            coeffs: self.algebra.bracket_coeffs(&self.coeffs, &other.coeffs),
        })
    }

    fn check_same_algebra(&self, other: &AlgebraElement<'a>) -> Result<(), Error> {
        if std::ptr::eq(self.algebra, other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

/// Outcome of the exhaustive Jacobi sweep over all `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    violations: Vec<JacobiViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<G>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[JacobiViolation] {
        &self.violations
    }
}

/// Evaluates `[[X_i, X_j], X_k] + [[X_j, X_k], X_i] + [[X_k, X_i], X_j]`
/// exactly for every `i < j < k` and collects the nonzero residuals.
pub fn check_jacobi(algebra: &LieAlgebra) -> JacobiReport {
    let n = algebra.dim();
    let mut violations = Vec::new();
    let basis: Vec<Vec<G>> = (0..n)
        .map(|i| {
            let mut v = vec![G::zero(); n];
            v[i] = G::one();
            v
        })
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let ij = algebra.bracket_coeffs(&basis[i], &basis[j]);
                let jk = algebra.bracket_coeffs(&basis[j], &basis[k]);
                let ki = algebra.bracket_coeffs(&basis[k], &basis[i]);
                let mut residual = algebra.bracket_coeffs(&ij, &basis[k]);
                for (r, term) in residual.iter_mut().zip(algebra.bracket_coeffs(&jk, &basis[i])) {
                    *r += &term;
                }
                for (r, term) in residual.iter_mut().zip(algebra.bracket_coeffs(&ki, &basis[j])) {
                    *r += &term;
                }
                if residual.iter().any(|x| !x.is_zero()) {
                    violations.push(JacobiViolation { triple: (i, j, k), residual });
                }
            }
        }
    }
    JacobiReport { violations }
}

/// Rewrites the structure constants under the basis change `Y_i = U_i^j X_j`:
/// `C'_ij^k = U_i^a U_j^b C_ab^c (U⁻¹)_c^k`. Generator labels become
/// `y1..yn`; use [`LieAlgebra::renamed`] to assign meaningful ones.
pub fn transform_basis(algebra: &LieAlgebra, map: &LinearMap) -> Result<LieAlgebra, Error> {
    let n = algebra.dim();
    if !map.is_square() || map.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, got: map.rows() });
    }
    let inverse = map.inverse()?;
    let mut tensor = StructureTensor::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            // [Y_i, Y_j] expanded in the X basis, then pushed through U⁻¹.
            let in_x = algebra.bracket_coeffs(map.row(i), map.row(j));
            let mut in_y = vec![G::zero(); n];
            for (c, coeff) in in_x.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for k in 0..n {
                    in_y[k] += &(coeff * inverse.get(c, k));
                }
            }
            tensor.set(i, j, in_y)?;
        }
    }
    let names = (1..=n).map(|i| format!("y{i}")).collect();
    LieAlgebra::new(names, tensor)
}

/// Echelonized basis of the span of all brackets `[X_i, X_j]`.
pub fn derived_subalgebra(algebra: &LieAlgebra) -> Vec<AlgebraElement<'_>> {
    let mut span = RowSpace::new(algebra.dim());
    for ((_, _), coeffs) in algebra.tensor().pairs() {
        span.insert(coeffs.clone());
    }
    span.basis()
        .map(|v| algebra.element(v.to_vec()).expect("basis width matches dimension"))
        .collect()
}
