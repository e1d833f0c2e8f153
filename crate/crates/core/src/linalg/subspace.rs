use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{combine, Matrix};

/// A linear subspace of `T^n`, stored by its reduced-row-echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Subspace<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![T::zero(); ambient_dim];
                v[i] = T::one();
                v
            })
            .collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors (dependent ones are dropped).
    pub fn span(ambient_dim: usize, vectors: &[Vec<T>]) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        Ok(Self::span_unchecked(ambient_dim, vectors))
    }

    fn span_unchecked(ambient_dim: usize, vectors: &[Vec<T>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = Matrix::from_fn(vectors.len(), ambient_dim, |i, j| vectors[i][j].clone());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient_dim,
            basis,
            pivots,
        }
    }

    /// Used for kernels, where the vectors are independent by construction;
    /// still canonicalised so equality stays a basis comparison.
    pub(crate) fn from_independent_unchecked(ambient_dim: usize, vectors: Vec<Vec<T>>) -> Self {
        Self::span_unchecked(ambient_dim, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Leading positions of the canonical basis vectors.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of a vector already known to lie in the subspace.
    pub fn coordinates_unchecked(&self, v: &[T]) -> Vec<T> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient_dim != other {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        self.check_ambient(v.len())?;
        let coords: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = combine(self.ambient_dim, &coords, &self.basis);
        let inside = rebuilt.iter().zip(v).all(|(a, b)| (a.clone() - b.clone()).is_negligible());
        Ok(inside.then_some(coords))
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn element(&self, coords: &[T]) -> Vec<T> {
        combine(self.ambient_dim, coords, &self.basis)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient_dim)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Self::span_unchecked(self.ambient_dim, &all))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        // Solve sum a_i u_i = sum b_j w_j: kernel of [U^T | -W^T].
        let (p, q) = (self.dim(), other.dim());
        let m = Matrix::from_fn(self.ambient_dim, p + q, |i, j| {
            if j < p {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - p][i].clone()
            }
        });
        let ker = m.kernel_basis();
        let vectors: Vec<Vec<T>> = ker
            .basis()
            .iter()
            .map(|k| combine(self.ambient_dim, &k[..p], &self.basis))
            .collect();
        Ok(Self::span_unchecked(self.ambient_dim, &vectors))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::from_i64(0); n];
        v[i] = Rational::from_i64(1);
        v
    }

    #[test]
    fn spec_examples() {
        let a = Subspace::span(2, &[e(2, 0)]).unwrap();
        let b = Subspace::span(2, &[e(2, 1)]).unwrap();
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.intersect(&a).unwrap(), a);

        let a = Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap();
        let b = Subspace::span(3, &[e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(3, &[e(3, 1)]).unwrap());
        assert_eq!(a.sum(&b).unwrap().dim(), 3);
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let a = Subspace::<Rational>::full(2);
        let b = Subspace::<Rational>::full(3);
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch { .. })));
        assert!(a.contains(&e(3, 0)).is_err());
    }

    #[test]
    fn canonical_basis_gives_equality() {
        let v1 = vec![Rational::from_i64(1), Rational::from_i64(1)];
        let v2 = vec![Rational::from_i64(2), Rational::from_i64(2)];
        assert_eq!(Subspace::span(2, &[v1]).unwrap(), Subspace::span(2, &[v2]).unwrap());
    }
}
