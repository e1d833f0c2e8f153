//! Finite-dimensional Jordan algebras given by structure constants, the
//! Jordan algebra of a short grading and the triad built from it.

mod matrices;
mod short;

pub use matrices::{
    fiber_bound_report, m2_constraint_count, m2_membership, sample_m2_regular, FiberBoundReport,
};
pub use short::{JordanTriad, ShortGrading, ShortKind, TKK_CONSTANT};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, Subspace};
use crate::rng::{small_vector, SeededRng};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "n")]
pub enum JordanFamily {
    /// All `n x n` matrices, `A o B = (AB + BA) / 2`.
    Full(usize),
    /// Symmetric `n x n` matrices.
    Sym(usize),
    /// Skew `2n x 2n` matrices, `A o B = (AJB + BJA) / 2`.
    Skew(usize),
    /// `k + k^n` with `(a, u) o (b, v) = (ab + <u, v>, av + bu)`.
    Spin(usize),
    /// `g(-1)` of a short grading with `x o y = [x, [e, y]]`.
    Short(ShortKind, usize),
}

impl JordanFamily {
    /// Dimension predicted by the family.
    pub fn expected_dim(&self) -> usize {
        match *self {
            JordanFamily::Full(n) => n * n,
            JordanFamily::Sym(n) => n * (n + 1) / 2,
            JordanFamily::Skew(n) => n * (2 * n - 1),
            JordanFamily::Spin(n) => n + 1,
            JordanFamily::Short(k, n) => k.jordan_family(n).expected_dim(),
        }
    }
}

impl fmt::Display for JordanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanFamily::Full(n) => write!(f, "full({n})"),
            JordanFamily::Sym(n) => write!(f, "sym({n})"),
            JordanFamily::Skew(n) => write!(f, "skew({})", 2 * n),
            JordanFamily::Spin(n) => write!(f, "spin({n})"),
            JordanFamily::Short(k, n) => write!(f, "short({k}, {n})"),
        }
    }
}

/// Matrix model of a Jordan algebra: its elements as a subspace of
/// flattened matrices.
#[derive(Clone, Debug)]
struct Realization<T> {
    size: usize,
    space: Subspace<T>,
}

#[derive(Clone, Debug)]
pub struct JordanAlgebra<T> {
    family: JordanFamily,
    dim: usize,
    /// `table[i * dim + j]` holds the coordinates of `b_i o b_j`.
    table: Vec<Vec<T>>,
    realization: Option<Realization<T>>,
}

/// Dimension up to which the Jordan identity is checked on every basis triple.
pub const EXHAUSTIVE_IDENTITY_DIM: usize = 10;

impl<T: Scalar> JordanAlgebra<T> {
    pub fn full(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidJordan("n must be positive".into()));
        }
        let basis: Vec<Matrix<T>> = (0..n)
            .flat_map(|i| (0..n).map(move |j| Matrix::unit(n, i, j)))
            .collect();
        Self::from_matrices(JordanFamily::Full(n), n, &basis, anticommutator_half)
    }

    pub fn sym(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidJordan("n must be positive".into()));
        }
        let mut basis = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut m = Matrix::unit(n, i, j);
                if i != j {
                    m = &m + &Matrix::unit(n, j, i);
                }
                basis.push(m);
            }
        }
        Self::from_matrices(JordanFamily::Sym(n), n, &basis, anticommutator_half)
    }

    /// Skew `2n x 2n` matrices with the standard symplectic `J`.
    pub fn skew(n: usize) -> Result<Self> {
        let size = 2 * n;
        let j = Matrix::from_fn(size, size, |a, b| {
            if b == a + n && a < n {
                T::one()
            } else if a == b + n && b < n {
                -T::one()
            } else {
                T::zero()
            }
        });
        Self::skew_with(n, j)
    }

    pub fn skew_with(n: usize, j: Matrix<T>) -> Result<Self> {
        let size = 2 * n;
        if n == 0 || j.rows() != size || !j.is_square() {
            return Err(Error::InvalidJordan("J must be 2n x 2n".into()));
        }
        if j.transpose() != -&j || j.rank() != size {
            return Err(Error::InvalidJordan("J must be invertible and skew".into()));
        }
        let mut basis = Vec::new();
        for a in 0..size {
            for b in a + 1..size {
                basis.push(&Matrix::unit(size, a, b) - &Matrix::unit(size, b, a));
            }
        }
        let half = T::from_ratio(1, 2);
        Self::from_matrices(JordanFamily::Skew(n), size, &basis, |x, y| {
            (&(&(x * &j) * y) + &(&(y * &j) * x)).scale(&half)
        })
    }

    /// Spin factor of dimension `n + 1`.
    pub fn spin(n: usize) -> Result<Self> {
        if n == 0 || n > 10 {
            return Err(Error::InvalidJordan(format!("spin factor size {n} outside 1..=10")));
        }
        let d = n + 1;
        // basis (1, 0), (0, e_i): unit times anything is itself,
        // e_i e_i = 1, e_i e_j = 0
        let mut table = vec![vec![T::zero(); d]; d * d];
        table[0] = unit_vec(d, 0);
        for i in 1..d {
            table[i] = unit_vec(d, i);
            table[i * d] = unit_vec(d, i);
            table[i * d + i] = unit_vec(d, 0);
        }
        let alg = Self {
            family: JordanFamily::Spin(n),
            dim: d,
            table,
            realization: None,
        };
        alg.check_axioms(None)?;
        Ok(alg)
    }

    /// Jordan algebra on a subspace of `size x size` matrices closed under
    /// `prod`.
    pub fn from_matrices(
        family: JordanFamily,
        size: usize,
        spanning: &[Matrix<T>],
        prod: impl Fn(&Matrix<T>, &Matrix<T>) -> Matrix<T>,
    ) -> Result<Self> {
        let flat: Vec<Vec<T>> = spanning.iter().map(|m| m.data().to_vec()).collect();
        let space = Subspace::span(size * size, &flat)?;
        let basis: Vec<Matrix<T>> = space
            .basis()
            .iter()
            .map(|v| Matrix::new(size, size, v.clone()).expect("square"))
            .collect();
        let d = basis.len();
        let mut table = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in i..d {
                let p = prod(&basis[i], &basis[j]);
                let c = space
                    .coordinates(p.data())?
                    .ok_or_else(|| Error::InvalidJordan(format!("{family} is not closed")))?;
                if j != i {
                    table[j * d + i] = c.clone();
                }
                table[i * d + j] = c;
            }
        }
        let alg = Self {
            family,
            dim: d,
            table,
            realization: Some(Realization { size, space }),
        };
        alg.check_axioms(None)?;
        Ok(alg)
    }

    pub fn family(&self) -> JordanFamily {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, x: &[T], y: &[T]) -> Vec<T> {
        let d = self.dim;
        let mut out = vec![T::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (o, t) in out.iter_mut().zip(&self.table[i * d + j]) {
                    if !t.is_zero() {
                        *o = o.clone() + ab.clone() * t.clone();
                    }
                }
            }
        }
        out
    }

    /// `L_x : y -> x o y` as a `dim x dim` matrix.
    pub fn l_op(&self, x: &[T]) -> Matrix<T> {
        let d = self.dim;
        let cols: Vec<Vec<T>> = (0..d).map(|j| self.mul(x, &unit_vec(d, j))).collect();
        Matrix::from_columns(d, &cols)
    }

    fn basis_l_ops(&self) -> Vec<Matrix<T>> {
        (0..self.dim).map(|i| self.l_op(&unit_vec(self.dim, i))).collect()
    }

    /// `ker L_x`.
    pub fn centralizer(&self, x: &[T]) -> Subspace<T> {
        self.l_op(x).kernel_basis()
    }

    /// The unit element, if any.
    pub fn unit(&self) -> Option<Vec<T>> {
        let d = self.dim;
        let ops = self.basis_l_ops();
        // sum_k u_k L_k = I as d^2 linear equations
        let a = Matrix::from_fn(d * d, d, |r, k| ops[k].data()[r].clone());
        let id = Matrix::<T>::identity(d);
        a.solve(id.data()).ok().flatten()
    }

    /// Commutativity on basis pairs, and the Jordan identity: on every basis
    /// triple in linearised form up to [`EXHAUSTIVE_IDENTITY_DIM`], on random
    /// elements above (when an rng is supplied).
    pub fn check_axioms(&self, rng: Option<&mut SeededRng>) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                if self.table[i * d + j] != self.table[j * d + i] {
                    return Err(Error::InvalidJordan(format!("not commutative at ({i}, {j})")));
                }
            }
        }
        if d <= EXHAUSTIVE_IDENTITY_DIM {
            let ops = self.basis_l_ops();
            let l_of = |v: &[T]| -> Matrix<T> {
                let mut acc = Matrix::zeros(d, d);
                for (k, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        acc = &acc + &ops[k].scale(c);
                    }
                }
                acc
            };
            for a in 0..d {
                for b in a..d {
                    for c in b..d {
                        let bc = l_of(&self.table[b * d + c]);
                        let ca = l_of(&self.table[c * d + a]);
                        let ab = l_of(&self.table[a * d + b]);
                        let s = &(&ops[a].commutator(&bc) + &ops[b].commutator(&ca))
                            + &ops[c].commutator(&ab);
                        if !s.is_zero() {
                            return Err(Error::InvalidJordan(format!(
                                "Jordan identity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else if let Some(rng) = rng {
            for _ in 0..8 {
                let x = small_vector::<T>(rng, d, 3);
                let y = small_vector::<T>(rng, d, 3);
                if !self.jordan_identity_holds(&x, &y) {
                    return Err(Error::InvalidJordan("Jordan identity fails on a sample".into()));
                }
            }
        }
        Ok(())
    }

    /// `(x o y) o (x o x) = x o (y o (x o x))`.
    pub fn jordan_identity_holds(&self, x: &[T], y: &[T]) -> bool {
        let xx = self.mul(x, x);
        self.mul(&self.mul(x, y), &xx) == self.mul(x, &self.mul(y, &xx))
    }

    /// Matrix of an element, for matrix families.
    pub fn to_matrix(&self, x: &[T]) -> Option<Matrix<T>> {
        self.realization
            .as_ref()
            .map(|r| Matrix::new(r.size, r.size, r.space.element(x)).expect("square"))
    }

    /// Coordinates of a matrix, for matrix families.
    pub fn coords_of(&self, m: &Matrix<T>) -> Result<Vec<T>> {
        let r = self
            .realization
            .as_ref()
            .ok_or_else(|| Error::InvalidJordan("no matrix realization".into()))?;
        r.space
            .coordinates(m.data())?
            .ok_or_else(|| Error::InvalidJordan("matrix outside the algebra".into()))
    }

    pub fn random_element(&self, rng: &mut SeededRng, bound: i64) -> Vec<T> {
        small_vector(rng, self.dim, bound)
    }

    /// Element with the given coordinates on an explicit basis combination.
    pub fn combine(&self, coeffs: &[T], vectors: &[Vec<T>]) -> Vec<T> {
        combine(self.dim, coeffs, vectors)
    }
}

fn unit_vec<T: Scalar>(d: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); d];
    v[i] = T::one();
    v
}

fn anticommutator_half<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    (&(a * b) + &(b * a)).scale(&T::from_ratio(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type J = JordanAlgebra<Rational>;

    #[test]
    fn family_dimensions() {
        assert_eq!(J::full(2).unwrap().dim(), 4);
        assert_eq!(J::sym(2).unwrap().dim(), 3);
        assert_eq!(J::sym(3).unwrap().dim(), 6);
        assert_eq!(J::skew(2).unwrap().dim(), 6);
        assert_eq!(J::spin(3).unwrap().dim(), 4);
        assert!(J::spin(11).is_err());
    }

    #[test]
    fn full_product_example() {
        let j = J::full(2).unwrap();
        let a = j.coords_of(&Matrix::from_i64_rows(&[&[0, 1], &[0, 0]])).unwrap();
        let b = j.coords_of(&Matrix::from_i64_rows(&[&[0, 0], &[1, 0]])).unwrap();
        let p = j.to_matrix(&j.mul(&a, &b)).unwrap();
        assert_eq!(p, Matrix::identity(2).scale(&Rational::from_ratio(1, 2)));
    }

    #[test]
    fn spin_unit() {
        let j = J::spin(4).unwrap();
        assert_eq!(j.unit(), Some(unit_vec(5, 0)));
    }

    #[test]
    fn centralizers() {
        let j = J::full(2).unwrap();
        let unit = j.unit().unwrap();
        assert_eq!(j.centralizer(&unit).dim(), 0);
        assert_eq!(j.centralizer(&vec![Rational::from_i64(0); 4]).dim(), 4);
        let b = j.coords_of(&Matrix::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(j.centralizer(&b).dim(), 2);
    }

    #[test]
    fn bad_skew_form_rejected() {
        let j = Matrix::<Rational>::from_i64_rows(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert!(J::skew_with(2, j).is_err());
    }
}
