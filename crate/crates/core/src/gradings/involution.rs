use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// How an involution is presented.
#[derive(Clone, Debug, PartialEq)]
pub enum Presentation<T> {
    /// `x -> S tau(x) S^-1` with `tau` the identity or `x -> -x^T`.
    Generator {
        s: Matrix<T>,
        s_inv: Matrix<T>,
        outer: bool,
    },
    /// Only the operator on algebra coordinates is known.
    Explicit,
}

/// A validated involutive automorphism of a matrix Lie algebra.
#[derive(Clone, Debug)]
pub struct Involution<T> {
    presentation: Presentation<T>,
    /// Operator on the algebra's coordinates (column `j` is the image of
    /// basis element `j`).
    op: Matrix<T>,
}

impl<T: Scalar> PartialEq for Involution<T> {
    fn eq(&self, other: &Self) -> bool {
        self.op == other.op
    }
}

fn outer_image<T: Scalar>(s: &Matrix<T>, s_inv: &Matrix<T>, x: &Matrix<T>, outer: bool) -> Matrix<T> {
    let inner = if outer { -&x.transpose() } else { x.clone() };
    &(s * &inner) * s_inv
}

impl<T: Scalar> Involution<T> {
    /// `Ad(S)`.
    pub fn conjugation(alg: &LieAlgebra<T>, s: Matrix<T>) -> Result<Self> {
        Self::generator(alg, s, false)
    }

    /// `x -> -S x^T S^-1`.
    pub fn outer(alg: &LieAlgebra<T>, s: Matrix<T>) -> Result<Self> {
        Self::generator(alg, s, true)
    }

    pub fn generator(alg: &LieAlgebra<T>, s: Matrix<T>, outer: bool) -> Result<Self> {
        let s_inv = s
            .inverse()
            .ok_or_else(|| Error::InvalidInvolution("S is not invertible".into()))?;
        let mut cols = Vec::with_capacity(alg.dim());
        for b in alg.basis() {
            let img = outer_image(&s, &s_inv, b, outer);
            let c = alg.coords(&img).map_err(|_| {
                Error::InvalidInvolution("map does not preserve the algebra".into())
            })?;
            cols.push(c);
        }
        let op = Matrix::from_columns(alg.dim(), &cols);
        let inv = Self {
            presentation: Presentation::Generator { s, s_inv, outer },
            op,
        };
        inv.validate(alg)?;
        Ok(inv)
    }

    /// From an operator on algebra coordinates.
    pub fn explicit(alg: &LieAlgebra<T>, op: Matrix<T>) -> Result<Self> {
        if op.rows() != alg.dim() || op.cols() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: op.rows(),
            });
        }
        let inv = Self {
            presentation: Presentation::Explicit,
            op,
        };
        inv.validate(alg)?;
        Ok(inv)
    }

    fn validate(&self, alg: &LieAlgebra<T>) -> Result<()> {
        let d = alg.dim();
        if &self.op * &self.op != Matrix::identity(d) {
            return Err(Error::InvalidInvolution("theta^2 is not the identity".into()));
        }
        if self.op == Matrix::identity(d) {
            return Err(Error::InvalidInvolution("theta is the identity".into()));
        }
        let images: Vec<Matrix<T>> = (0..d).map(|j| alg.to_matrix(&self.op.column(j))).collect();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.apply(alg, &alg.basis()[i].commutator(&alg.basis()[j]));
                let rhs = images[i].commutator(&images[j]);
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!(
                        "not an automorphism on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn op(&self) -> &Matrix<T> {
        &self.op
    }

    pub fn presentation(&self) -> &Presentation<T> {
        &self.presentation
    }

    /// Image of an algebra element.
    pub fn apply(&self, alg: &LieAlgebra<T>, x: &Matrix<T>) -> Matrix<T> {
        match &self.presentation {
            Presentation::Generator { s, s_inv, outer } => outer_image(s, s_inv, x, *outer),
            Presentation::Explicit => {
                alg.to_matrix(&self.op.apply(&alg.coords_unchecked(x)))
            }
        }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        &self.op * &other.op == &other.op * &self.op
    }

    /// `self o other`, validated. Generator presentations compose in closed
    /// form: `(S1, t1) o (S2, t2) = (S1 t1(S2), t1 t2)` where `t1(S2)` is
    /// `S2^-T` for an outer `t1`.
    pub fn compose(&self, alg: &LieAlgebra<T>, other: &Self) -> Result<Self> {
        match (&self.presentation, &other.presentation) {
            (
                Presentation::Generator { s: s1, outer: o1, .. },
                Presentation::Generator { s: s2, s_inv: s2_inv, outer: o2 },
            ) => {
                let twisted = if *o1 { s2_inv.transpose() } else { s2.clone() };
                Self::generator(alg, s1 * &twisted, o1 ^ o2)
            }
            _ => Self::explicit(alg, &self.op * &other.op),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn rejects_identity_and_non_involutions() {
        let sl2 = LieAlgebra::<Rational>::sl(2).unwrap();
        assert!(Involution::conjugation(&sl2, Matrix::identity(2)).is_err());
        let s = Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert!(Involution::conjugation(&sl2, s).is_err());
    }

    #[test]
    fn composition_matches_operator_product() {
        let sl3 = LieAlgebra::<Rational>::sl(3).unwrap();
        let d = Matrix::diagonal(&[1, -1, 1].map(Rational::from_i64));
        let a = Involution::outer(&sl3, Matrix::identity(3)).unwrap();
        let b = Involution::outer(&sl3, d).unwrap();
        let c = a.compose(&sl3, &b).unwrap();
        assert_eq!(c.op(), &(a.op() * b.op()));
        assert!(matches!(c.presentation(), Presentation::Generator { outer: false, .. }));
    }

    #[test]
    fn so_requires_compatible_s() {
        let so4 = LieAlgebra::<Rational>::so(4).unwrap();
        let s = Matrix::diagonal(&[1, 2, 1, 1].map(Rational::from_i64));
        assert!(Involution::conjugation(&so4, s).is_err());
    }
}
