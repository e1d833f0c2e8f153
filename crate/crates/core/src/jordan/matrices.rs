//! Matrices similar to their negatives, and the fibre of the Jordan
//! commuting map over a regular one.

use rand::seq::SliceRandom;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rng::{small_vector, SeededRng};
use crate::scalar::Scalar;

/// Whether the characteristic polynomial of `b` is even or odd, i.e. every
/// coefficient `c_k` with `k` odd vanishes.
pub fn m2_membership<T: Scalar>(b: &Matrix<T>) -> Result<bool> {
    let c = b.char_poly()?;
    Ok(c.iter().skip(1).step_by(2).all(|v| v.is_negligible()))
}

/// Number of polynomial conditions cutting out the set: `ceil(n / 2)`.
pub fn m2_constraint_count(n: usize) -> usize {
    n.div_ceil(2)
}

/// Companion matrix of `prod (x^2 - a_k^2)`, times `x` for odd `n`, with
/// distinct positive integers `a_k`.
pub fn sample_m2_regular<T: Scalar>(n: usize, rng: &mut SeededRng) -> Result<Matrix<T>> {
    if n == 0 {
        return Err(Error::InvalidSize("n must be positive".into()));
    }
    let mut pool: Vec<i64> = (1..=(2 * n as i64 + 2)).collect();
    pool.shuffle(rng);
    // ascending coefficients
    let mut poly: Vec<T> = vec![T::one()];
    if n % 2 == 1 {
        poly = vec![T::zero(), T::one()];
    }
    for &a in pool.iter().take(n / 2) {
        let factor = [T::from_i64(-a * a), T::zero(), T::one()];
        let mut next = vec![T::zero(); poly.len() + 2];
        for (i, p) in poly.iter().enumerate() {
            for (j, q) in factor.iter().enumerate() {
                next[i + j] = next[i + j].clone() + p.clone() * q.clone();
            }
        }
        poly = next;
    }
    Ok(Matrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -poly[i].clone()
        } else if i == j + 1 {
            T::one()
        } else {
            T::zero()
        }
    }))
}

/// Kernel of `X -> XB + sign * BX` on `n x n` matrices.
fn twisted_centralizer<T: Scalar>(b: &Matrix<T>, sign: i64) -> Subspace<T> {
    let n = b.rows();
    let s = T::from_i64(sign);
    let cols: Vec<Vec<T>> = (0..n * n)
        .map(|k| {
            let x = Matrix::unit(n, k / n, k % n);
            (&(&x * b) + &(b * &x).scale(&s)).into_data()
        })
        .collect();
    Matrix::from_columns(n * n, &cols).kernel_basis()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberBoundReport {
    pub n: usize,
    pub constraint_count: usize,
    /// `dim {X : XB + BX = 0}`.
    pub jordan_centralizer_dim: usize,
    /// `dim {C : CB = BC}`.
    pub lie_centralizer_dim: usize,
    pub witness_invertible: bool,
    /// Whether `C -> AC` carries the Lie centralizer onto the Jordan one.
    pub isomorphism_ok: bool,
    /// `n^2 - constraint_count + jordan_centralizer_dim`.
    pub component_dim: usize,
    /// `n^2 + floor(n / 2)`.
    pub expected: usize,
}

impl FiberBoundReport {
    pub fn passes(&self) -> bool {
        self.witness_invertible
            && self.isomorphism_ok
            && self.jordan_centralizer_dim == self.n
            && self.component_dim == self.expected
    }
}

/// Measures the fibre over a regular element `B` of the set of matrices
/// similar to their negatives.
pub fn fiber_bound_report<T: Scalar>(n: usize, rng: &mut SeededRng) -> Result<FiberBoundReport> {
    let b = sample_m2_regular::<T>(n, rng)?;
    debug_assert!(m2_membership(&b)?);
    let zj = twisted_centralizer(&b, 1);
    let zl = twisted_centralizer(&b, -1);
    let mut witness = None;
    for _ in 0..32 {
        let c = small_vector::<T>(rng, zj.dim(), 3);
        let a = Matrix::new(n, n, zj.element(&c))?;
        if a.inverse().is_some() {
            witness = Some(a);
            break;
        }
    }
    let isomorphism_ok = match &witness {
        Some(a) => {
            let images: Vec<Vec<T>> = zl
                .basis()
                .iter()
                .map(|c| (a * &Matrix::new(n, n, c.clone()).expect("square")).into_data())
                .collect();
            let span = Subspace::span(n * n, &images)?;
            span.dim() == zl.dim() && span == zj
        }
        None => false,
    };
    let constraint_count = m2_constraint_count(n);
    Ok(FiberBoundReport {
        n,
        constraint_count,
        jordan_centralizer_dim: zj.dim(),
        lie_centralizer_dim: zl.dim(),
        witness_invertible: witness.is_some(),
        isomorphism_ok,
        component_dim: n * n - constraint_count + zj.dim(),
        expected: n * n + n / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;
    use crate::Rational;

    #[test]
    fn membership() {
        let b = Matrix::<Rational>::from_i64_rows(&[&[0, 1], &[4, 0]]);
        assert!(m2_membership(&b).unwrap());
        let c = Matrix::<Rational>::from_i64_rows(&[&[1, 0], &[0, 2]]);
        assert!(!m2_membership(&c).unwrap());
        assert_eq!(m2_constraint_count(3), 2);
        assert_eq!(m2_constraint_count(4), 2);
    }

    #[test]
    fn samples_are_members() {
        let mut rng = seeded(1);
        for n in 1..6 {
            let b = sample_m2_regular::<Rational>(n, &mut rng).unwrap();
            assert!(m2_membership(&b).unwrap());
        }
    }

    #[test]
    fn fiber_bounds() {
        let mut rng = seeded(2);
        for (n, expected) in [(2, 5), (3, 10), (4, 18)] {
            let r = fiber_bound_report::<Rational>(n, &mut rng).unwrap();
            assert_eq!(r.expected, expected);
            assert!(r.passes(), "{r:?}");
        }
    }
}
