use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

use super::Involution;

/// Eigenspace of `op` for eigenvalue `sign` (+1 or -1), in coordinates.
pub(crate) fn eigenspace<T: Scalar>(op: &Matrix<T>, sign: i64) -> Subspace<T> {
    let d = op.rows();
    let shifted = &Matrix::identity(d).scale(&T::from_i64(-sign)) + op;
    shifted.kernel_basis()
}

/// Checks `[a, b] ⊆ target` on basis elements.
pub(crate) fn brackets_into<T: Scalar>(
    alg: &LieAlgebra<T>,
    a: &Subspace<T>,
    b: &Subspace<T>,
    target: &Subspace<T>,
) -> bool {
    let am: Vec<Matrix<T>> = a.basis().iter().map(|v| alg.to_matrix(v)).collect();
    let bm: Vec<Matrix<T>> = b.basis().iter().map(|v| alg.to_matrix(v)).collect();
    am.iter().all(|x| {
        bm.iter().all(|y| {
            let c = x.commutator(y);
            c.is_zero()
                || alg
                    .coords(&c)
                    .map(|v| target.contains(&v).unwrap_or(false))
                    .unwrap_or(false)
        })
    })
}

/// Dimensions of the graded pieces of a centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerDims {
    pub even: usize,
    pub odd: usize,
}

/// The Z2-grading `g = g0 + g1` of an involution.
#[derive(Clone, Debug)]
pub struct Z2Grading<T> {
    algebra: LieAlgebra<T>,
    theta: Involution<T>,
    g0: Subspace<T>,
    g1: Subspace<T>,
}

impl<T: Scalar> Z2Grading<T> {
    pub fn new(algebra: LieAlgebra<T>, theta: Involution<T>) -> Result<Self> {
        let g0 = eigenspace(theta.op(), 1);
        let g1 = eigenspace(theta.op(), -1);
        if g0.dim() + g1.dim() != algebra.dim() {
            return Err(Error::InvalidDecomposition(
                "eigenspaces do not span the algebra".into(),
            ));
        }
        let z = Self {
            algebra,
            theta,
            g0,
            g1,
        };
        if !z.brackets_ok() {
            return Err(Error::InvalidDecomposition("grading rule violated".into()));
        }
        Ok(z)
    }

    fn brackets_ok(&self) -> bool {
        let a = &self.algebra;
        brackets_into(a, &self.g0, &self.g0, &self.g0)
            && brackets_into(a, &self.g0, &self.g1, &self.g1)
            && brackets_into(a, &self.g1, &self.g1, &self.g0)
    }

    pub fn algebra(&self) -> &LieAlgebra<T> {
        &self.algebra
    }

    pub fn theta(&self) -> &Involution<T> {
        &self.theta
    }

    pub fn g0(&self) -> &Subspace<T> {
        &self.g0
    }

    pub fn g1(&self) -> &Subspace<T> {
        &self.g1
    }

    /// `dim g1 - dim g0 = rk g`.
    pub fn is_maximal_rank(&self) -> bool {
        self.g1.dim() as i64 - self.g0.dim() as i64 == self.algebra.lie_rank() as i64
    }

    /// Dims of `z(x) ∩ g0` and `z(x) ∩ g1` for homogeneous `x`.
    pub fn centralizer_dims(&self, x: &Matrix<T>) -> Result<CentralizerDims> {
        let c = self.algebra.coords(x)?;
        if !(self.g0.contains(&c)? || self.g1.contains(&c)?) {
            return Err(Error::NotHomogeneous);
        }
        let xs = std::slice::from_ref(x);
        Ok(CentralizerDims {
            even: self.algebra.centralizer(xs, &self.g0).dim(),
            odd: self.algebra.centralizer(xs, &self.g1).dim(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn sl_transpose_grading() {
        for n in 2..5 {
            let sl = LieAlgebra::<Rational>::sl(n).unwrap();
            let theta = Involution::outer(&sl, Matrix::identity(n)).unwrap();
            let g = Z2Grading::new(sl, theta).unwrap();
            assert_eq!(g.g0().dim(), n * (n - 1) / 2);
            assert_eq!(g.g1().dim(), n * (n + 1) / 2 - 1);
            assert!(g.is_maximal_rank());
        }
    }

    #[test]
    fn sl2_diagonal_grading() {
        let sl2 = LieAlgebra::<Rational>::sl(2).unwrap();
        let s = Matrix::diagonal(&[1, -1].map(Rational::from_i64));
        let theta = Involution::conjugation(&sl2, s).unwrap();
        let g = Z2Grading::new(sl2, theta).unwrap();
        assert_eq!((g.g0().dim(), g.g1().dim()), (1, 2));
        let zero = Matrix::zeros(2, 2);
        let dims = g.centralizer_dims(&zero).unwrap();
        assert_eq!((dims.even, dims.odd), (1, 2));
        let mixed = Matrix::from_i64_rows(&[&[1, 1], &[0, -1]]);
        assert_eq!(g.centralizer_dims(&mixed), Err(Error::NotHomogeneous));
    }
}
