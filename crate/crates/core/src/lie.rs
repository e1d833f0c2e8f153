//! Classical matrix Lie algebras.
//!
//! An algebra is a subspace of `N x N` matrices cut out by linear
//! constraints. Its basis is the canonical echelon basis of that subspace, so
//! the coordinates of an element are its entries at the pivot positions.
//! `so` and `sp` default to the antidiagonal (split) forms, which make the
//! diagonal matrices in the algebra a Cartan subalgebra.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::partitions::Partition;
use crate::rng::{small_vector, SeededRng};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Sl,
    So,
    Sp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::So => "so",
            Family::Sp => "sp",
        };
        f.write_str(s)
    }
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Debug)]
pub struct LieAlgebra<T> {
    id: u64,
    family: Family,
    size: usize,
    form: Option<Matrix<T>>,
    lie_rank: usize,
    /// The algebra as a subspace of flattened `N x N` matrices.
    space: Subspace<T>,
    basis: Vec<Matrix<T>>,
}

/// Element of a specific algebra. Brackets of elements of different algebras
/// are rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement<T> {
    algebra: u64,
    matrix: Matrix<T>,
}

impl<T: Scalar> LieElement<T> {
    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }
}

/// The split antidiagonal form of size `n`: symmetric for `So`,
/// `[[0, K], [-K, 0]]` for `Sp`.
pub fn split_form<T: Scalar>(family: Family, n: usize) -> Matrix<T> {
    Matrix::from_fn(n, n, |i, j| {
        if i + j + 1 != n {
            T::zero()
        } else if family == Family::Sp && i >= n / 2 {
            -T::one()
        } else {
            T::one()
        }
    })
}

fn flatten_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

impl<T: Scalar> LieAlgebra<T> {
    pub fn gl(n: usize) -> Result<Self> {
        Self::build(Family::Gl, n)
    }

    pub fn sl(n: usize) -> Result<Self> {
        Self::build(Family::Sl, n)
    }

    pub fn so(n: usize) -> Result<Self> {
        Self::build(Family::So, n)
    }

    /// `sp(n)` for even matrix size `n`.
    pub fn sp(n: usize) -> Result<Self> {
        Self::build(Family::Sp, n)
    }

    /// Standard construction with split forms; `n` is the matrix size.
    pub fn build(family: Family, n: usize) -> Result<Self> {
        match family {
            Family::Gl if n >= 1 => Self::from_constraints(family, n, None),
            Family::Sl if n >= 2 => Self::from_constraints(family, n, None),
            Family::So if n >= 2 => Self::with_form(family, split_form(family, n)),
            Family::Sp if n >= 2 && n.is_multiple_of(2) => Self::with_form(family, split_form(family, n)),
            _ => Err(Error::InvalidSize(format!("{family}({n})"))),
        }
    }

    /// `so` or `sp` of an arbitrary nondegenerate form.
    pub fn with_form(family: Family, form: Matrix<T>) -> Result<Self> {
        let n = form.rows();
        if !form.is_square() {
            return Err(Error::NotSquare {
                rows: form.rows(),
                cols: form.cols(),
            });
        }
        let t = form.transpose();
        let ok = match family {
            Family::So => t == form,
            Family::Sp => t == -&form,
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidSize(format!(
                "{family} needs a {} form",
                if family == Family::So { "symmetric" } else { "skew" }
            )));
        }
        if form.rank() != n {
            return Err(Error::InvalidSize("degenerate form".into()));
        }
        Self::from_constraints(family, n, Some(form))
    }

    fn from_constraints(family: Family, n: usize, form: Option<Matrix<T>>) -> Result<Self> {
        let nn = n * n;
        let constraints = match (&family, &form) {
            (Family::Gl, _) => Matrix::zeros(0, nn),
            (Family::Sl, _) => Matrix::from_fn(1, nn, |_, k| {
                if k / n == k % n {
                    T::one()
                } else {
                    T::zero()
                }
            }),
            (_, Some(f)) => {
                // (x^T F + F x)_{ij} = sum_k x_{ki} F_{kj} + F_{ik} x_{kj}
                let mut c = Matrix::<T>::zeros(nn, nn);
                for i in 0..n {
                    for j in 0..n {
                        let row = flatten_index(n, i, j);
                        for k in 0..n {
                            let a = flatten_index(n, k, i);
                            let v = c.get(row, a).clone() + f.get(k, j).clone();
                            c.set(row, a, v);
                            let b = flatten_index(n, k, j);
                            let v = c.get(row, b).clone() + f.get(i, k).clone();
                            c.set(row, b, v);
                        }
                    }
                }
                c
            }
            _ => unreachable!("so/sp always carry a form"),
        };
        let space = if constraints.rows() == 0 {
            Subspace::full(nn)
        } else {
            constraints.kernel_basis()
        };
        let basis = space
            .basis()
            .iter()
            .map(|v| Matrix::new(n, n, v.clone()).expect("basis vector has n^2 entries"))
            .collect();
        let lie_rank = match family {
            Family::Gl => n,
            Family::Sl => n - 1,
            Family::So => n / 2,
            Family::Sp => n / 2,
        };
        Ok(Self {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            family,
            size: n,
            form,
            lie_rank,
            space,
            basis,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Matrix size `N`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn lie_rank(&self) -> usize {
        self.lie_rank
    }

    pub fn form(&self) -> Option<&Matrix<T>> {
        self.form.as_ref()
    }

    pub fn basis(&self) -> &[Matrix<T>] {
        &self.basis
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.size)
    }

    pub fn contains(&self, x: &Matrix<T>) -> bool {
        x.rows() == self.size
            && x.cols() == self.size
            && self.space.contains(x.data()).unwrap_or(false)
    }

    /// Coordinates of `x` in the algebra basis.
    pub fn coords(&self, x: &Matrix<T>) -> Result<Vec<T>> {
        if x.rows() != self.size || x.cols() != self.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                found: x.rows(),
            });
        }
        self.space.coordinates(x.data())?.ok_or(Error::NotInAlgebra)
    }

    /// Coordinates of a matrix already known to lie in the algebra.
    pub fn coords_unchecked(&self, x: &Matrix<T>) -> Vec<T> {
        self.space.coordinates_unchecked(x.data())
    }

    pub fn to_matrix(&self, coords: &[T]) -> Matrix<T> {
        Matrix::new(self.size, self.size, self.space.element(coords)).expect("square")
    }

    pub fn element(&self, x: Matrix<T>) -> Result<LieElement<T>> {
        if !self.contains(&x) {
            return Err(Error::NotInAlgebra);
        }
        Ok(LieElement {
            algebra: self.id,
            matrix: x,
        })
    }

    pub fn bracket(&self, x: &LieElement<T>, y: &LieElement<T>) -> Result<LieElement<T>> {
        if x.algebra != self.id || y.algebra != self.id {
            return Err(Error::MixedAlgebra);
        }
        let z = x.matrix.commutator(&y.matrix);
        debug_assert!(self.contains(&z));
        Ok(LieElement {
            algebra: self.id,
            matrix: z,
        })
    }

    /// `ad x` in the algebra basis: column `j` holds the coordinates of
    /// `[x, b_j]`.
    pub fn ad(&self, x: &Matrix<T>) -> Matrix<T> {
        let cols: Vec<Vec<T>> = self
            .basis
            .iter()
            .map(|b| self.coords_unchecked(&x.commutator(b)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Trace form `tr(xy)`.
    pub fn trace_form(&self, x: &Matrix<T>, y: &Matrix<T>) -> T {
        (x * y).trace()
    }

    /// Subspace of the algebra's coordinate space spanned by matrices.
    pub fn span(&self, xs: &[Matrix<T>]) -> Result<Subspace<T>> {
        let coords = xs.iter().map(|x| self.coords(x)).collect::<Result<Vec<_>>>()?;
        Subspace::span(self.dim(), &coords)
    }

    pub fn full_space(&self) -> Subspace<T> {
        Subspace::full(self.dim())
    }

    /// Diagonal matrices of the algebra, in coordinate space.
    pub fn diagonal_subspace(&self) -> Subspace<T> {
        let n = self.size;
        let off: Vec<usize> = (0..n * n).filter(|&r| r / n != r % n).collect();
        let m = Matrix::from_fn(off.len(), self.dim(), |r, k| self.basis[k].data()[off[r]].clone());
        m.kernel_basis()
    }

    /// `{v in within : [v, x] = 0 for every x}`; `within` lives in coordinate
    /// space.
    pub fn centralizer(&self, xs: &[Matrix<T>], within: &Subspace<T>) -> Subspace<T> {
        let active: Vec<&Matrix<T>> = xs.iter().filter(|x| !x.is_zero()).collect();
        if active.is_empty() || within.is_zero() {
            return within.clone();
        }
        let ws: Vec<Matrix<T>> = within.basis().iter().map(|w| self.to_matrix(w)).collect();
        let nn = self.size * self.size;
        let k = ws.len();
        let mut stacked = Matrix::zeros(nn * active.len(), k);
        for (a, x) in active.iter().enumerate() {
            for (j, w) in ws.iter().enumerate() {
                let c = x.commutator(w);
                for (r, v) in c.data().iter().enumerate() {
                    if !v.is_zero() {
                        stacked.set(a * nn + r, j, v.clone());
                    }
                }
            }
        }
        let ker = stacked.kernel_basis();
        let vecs: Vec<Vec<T>> = ker.basis().iter().map(|c| within.element(c)).collect();
        Subspace::span(self.dim(), &vecs).expect("same ambient")
    }

    /// Image `[x, W]` as a subspace of coordinate space.
    pub fn bracket_image(&self, x: &Matrix<T>, within: &Subspace<T>) -> Subspace<T> {
        let vecs: Vec<Vec<T>> = within
            .basis()
            .iter()
            .map(|w| self.coords_unchecked(&x.commutator(&self.to_matrix(w))))
            .collect();
        Subspace::span(self.dim(), &vecs).expect("same ambient")
    }

    /// A random element of `within` with small integer coordinates.
    pub fn random_in(&self, within: &Subspace<T>, rng: &mut SeededRng, bound: i64) -> Matrix<T> {
        let c = small_vector::<T>(rng, within.dim(), bound);
        self.to_matrix(&within.element(&c))
    }

    /// Whether every bracket of basis elements stays in the algebra.
    pub fn is_closed(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| {
            self.basis[i + 1..]
                .iter()
                .all(|b| self.contains(&a.commutator(b)))
        })
    }

    /// A nilpotent element with Jordan type `lambda`, re-verified after
    /// construction.
    pub fn nilpotent_from_partition(&self, lambda: &Partition) -> Result<Matrix<T>> {
        if lambda.n() != self.size {
            return Err(Error::InvalidPartition(format!(
                "{lambda} is not a partition of {}",
                self.size
            )));
        }
        let e = match self.family {
            Family::Gl | Family::Sl => jordan_nilpotent(lambda.parts()),
            Family::So | Family::Sp => {
                let form = self.form.as_ref().expect("so/sp carry a form");
                form_nilpotent(self.family, lambda, form)?
            }
        };
        if !self.contains(&e) {
            return Err(Error::NotInAlgebra);
        }
        if jordan_type(&e).as_deref() != Some(lambda.parts()) {
            return Err(Error::InvalidPartition(format!(
                "constructed element does not have type {lambda}"
            )));
        }
        Ok(e)
    }
}

/// Block-diagonal nilpotent with superdiagonal Jordan blocks.
pub fn jordan_nilpotent<T: Scalar>(parts: &[usize]) -> Matrix<T> {
    let n: usize = parts.iter().sum();
    let mut e = Matrix::zeros(n, n);
    let mut start = 0;
    for &d in parts {
        for k in 1..d {
            e.set(start + k - 1, start + k, T::one());
        }
        start += d;
    }
    e
}

/// Jordan type of a nilpotent matrix read off the ranks of its powers;
/// `None` if the matrix is not nilpotent.
pub fn jordan_type<T: Scalar>(x: &Matrix<T>) -> Option<Vec<usize>> {
    let n = x.rows();
    let mut ranks = vec![n];
    let mut p = Matrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n + 1 {
            return None;
        }
        p = &p * x;
        ranks.push(p.rank());
        let k = ranks.len();
        if ranks[k - 1] == ranks[k - 2] && ranks[k - 1] > 0 {
            return None;
        }
    }
    // blocks of size >= k: r_{k-1} - r_k
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exactly));
    }
    Some(parts)
}

pub fn is_nilpotent<T: Scalar>(x: &Matrix<T>) -> bool {
    x.is_square() && x.pow(x.rows() as u32).is_zero()
}

/// Semisimple iff the squarefree part of the characteristic polynomial
/// already annihilates the matrix.
pub fn is_semisimple<T: Scalar>(x: &Matrix<T>) -> bool {
    match x.char_polynomial() {
        Ok(p) => p.squarefree_part().eval_matrix(x).is_zero(),
        Err(_) => false,
    }
}

/// Builds a nilpotent of type `lambda` preserving `form` (so/sp).
///
/// Works in an abstract space that is an orthogonal sum of Jordan blocks
/// carrying invariant forms, then moves to a basis whose Gram matrix is
/// `form`. Only split antidiagonal forms are supported for the final step.
fn form_nilpotent<T: Scalar>(
    family: Family,
    lambda: &Partition,
    form: &Matrix<T>,
) -> Result<Matrix<T>> {
    let n = lambda.n();
    if *form != split_form(family, n) {
        return Err(Error::Unsupported(
            "nilpotent embedding needs the split form".into(),
        ));
    }
    let eps = if family == Family::So { 1 } else { -1 };
    // Parts that can carry a form on a single block: odd for so, even for sp.
    let single_ok = |d: usize| (d % 2 == 1) == (family == Family::So);
    let mut counts = std::collections::BTreeMap::<usize, usize>::new();
    for &d in lambda.parts() {
        *counts.entry(d).or_default() += 1;
    }
    let mut singles = Vec::new();
    let mut pairs = Vec::new();
    for (&d, &c) in counts.iter().rev() {
        if single_ok(d) {
            singles.extend(std::iter::repeat_n(d, c));
        } else {
            if c % 2 == 1 {
                return Err(Error::InvalidPartition(format!(
                    "{lambda}: part {d} needs even multiplicity in {family}"
                )));
            }
            pairs.extend(std::iter::repeat_n(d, c / 2));
        }
    }

    let mut e0 = Matrix::<T>::zeros(n, n);
    let mut gram = Matrix::<T>::zeros(n, n);
    // hyperbolic pairs (p, q) with B(p, q) = 1, and vectors of norm +-1
    let mut hyper: Vec<(Vec<T>, Vec<T>)> = Vec::new();
    let mut middles: Vec<(usize, i64)> = Vec::new();
    let unit = |i: usize| {
        let mut v = vec![T::zero(); n];
        v[i] = T::one();
        v
    };
    let mut start = 0;

    // Odd singles in so: the middle vectors get alternating norms +1, -1 so
    // they pair up rationally; any leftover gets +1.
    let mut next_sign = 1i64;
    for &d in &singles {
        for k in 1..d {
            e0.set(start + k - 1, start + k, T::one());
        }
        // B(v_i, v_j) = s (-1)^i for i + j = d + 1 (1-based)
        let s = if d % 2 == 1 {
            let m = d.div_ceil(2);
            let natural = if m % 2 == 0 { 1 } else { -1 };
            let want = next_sign;
            next_sign = -next_sign;
            natural * want
        } else {
            1
        };
        for i in 1..=d {
            let j = d + 1 - i;
            let sign = if i % 2 == 0 { s } else { -s };
            gram.set(start + i - 1, start + j - 1, T::from_i64(sign));
        }
        for i in 1..=d / 2 {
            let j = d + 1 - i;
            let sign = if i % 2 == 0 { s } else { -s };
            let q: Vec<T> = unit(start + j - 1).into_iter().map(|x| x * T::from_i64(sign)).collect();
            hyper.push((unit(start + i - 1), q));
        }
        if d % 2 == 1 {
            let m = d.div_ceil(2);
            let norm = if m % 2 == 0 { s } else { -s };
            middles.push((start + m - 1, norm));
        }
        start += d;
    }
    for &d in &pairs {
        // u block then w block: e = diag(J, -J^T), Gram [[0, I], [eps I, 0]]
        for k in 1..d {
            e0.set(start + k - 1, start + k, T::one());
            e0.set(start + d + k, start + d + k - 1, -T::one());
        }
        for i in 0..d {
            gram.set(start + i, start + d + i, T::one());
            gram.set(start + d + i, start + i, T::from_i64(eps));
            hyper.push((unit(start + i), unit(start + d + i)));
        }
        start += 2 * d;
    }

    let mut plus: Vec<usize> = middles.iter().filter(|m| m.1 == 1).map(|m| m.0).collect();
    let mut minus: Vec<usize> = middles.iter().filter(|m| m.1 == -1).map(|m| m.0).collect();
    let half = T::from_ratio(1, 2);
    while let (Some(a), Some(b)) = (plus.last().copied(), minus.last().copied()) {
        plus.pop();
        minus.pop();
        let p: Vec<T> = (0..n)
            .map(|i| {
                if i == a || i == b {
                    half.clone()
                } else {
                    T::zero()
                }
            })
            .collect();
        let mut q = unit(a);
        q[b] = -T::one();
        hyper.push((p, q));
    }
    if !minus.is_empty() || plus.len() > 1 {
        return Err(Error::InvalidPartition(format!(
            "{lambda}: anisotropic remainder"
        )));
    }

    // New basis p_1..p_k, [m], q_k..q_1 has Gram matrix equal to the split form.
    let k = hyper.len();
    let mut cols: Vec<Vec<T>> = hyper.iter().map(|h| h.0.clone()).collect();
    if let Some(&m) = plus.first() {
        cols.push(unit(m));
    }
    cols.extend(hyper.iter().rev().map(|h| h.1.clone()));
    debug_assert_eq!(cols.len(), n);
    debug_assert_eq!(2 * k + plus.len(), n);
    let p = Matrix::from_columns(n, &cols);
    if &(&p.transpose() * &gram) * &p != *form {
        return Err(Error::InvalidPartition(format!(
            "{lambda}: basis change does not reach the split form"
        )));
    }
    let p_inv = p.inverse().ok_or_else(|| Error::InvalidPartition("singular basis".into()))?;
    Ok(&(&p_inv * &e0) * &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type A = LieAlgebra<Rational>;

    #[test]
    fn classical_dimensions() {
        let sl2 = A::sl(2).unwrap();
        assert_eq!((sl2.dim(), sl2.lie_rank()), (3, 1));
        let sp4 = A::sp(4).unwrap();
        assert_eq!((sp4.dim(), sp4.lie_rank()), (10, 2));
        let so5 = A::so(5).unwrap();
        assert_eq!((so5.dim(), so5.lie_rank()), (10, 2));
        assert_eq!(A::gl(3).unwrap().dim(), 9);
        assert!(A::sp(3).is_err());
        assert!(A::sl(1).is_err());
    }

    #[test]
    fn closure_small() {
        for a in [A::sl(3).unwrap(), A::so(5).unwrap(), A::sp(4).unwrap()] {
            assert!(a.is_closed(), "{}", a.name());
        }
    }

    #[test]
    fn sl2_centralizers() {
        let sl2 = A::sl(2).unwrap();
        let e = Matrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        let h = Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(sl2.centralizer(&[e], &sl2.full_space()).dim(), 1);
        let zh = sl2.centralizer(std::slice::from_ref(&h), &sl2.full_space());
        assert_eq!(zh, sl2.span(&[h]).unwrap());
        assert_eq!(sl2.centralizer(&[Matrix::zeros(2, 2)], &sl2.full_space()).dim(), 3);
    }

    #[test]
    fn mixed_brackets_rejected() {
        let a = A::sl(2).unwrap();
        let b = A::sl(2).unwrap();
        let x = a.element(Matrix::from_i64_rows(&[&[0, 1], &[0, 0]])).unwrap();
        let y = b.element(Matrix::from_i64_rows(&[&[0, 0], &[1, 0]])).unwrap();
        assert_eq!(a.bracket(&x, &y), Err(Error::MixedAlgebra));
        let z = a.bracket(&x, &x).unwrap();
        assert!(z.matrix().is_zero());
    }

    #[test]
    fn nilpotent_examples() {
        let gl3 = A::gl(3).unwrap();
        let e = gl3.nilpotent_from_partition(&Partition::new(vec![3]).unwrap()).unwrap();
        assert_eq!((e.rank(), e.pow(2).rank()), (2, 1));
        assert!(e.pow(3).is_zero());

        let sp4 = A::sp(4).unwrap();
        let e = sp4.nilpotent_from_partition(&Partition::new(vec![2, 2]).unwrap()).unwrap();
        assert!(e.pow(2).is_zero());
        assert_eq!(e.rank(), 2);
        let f = sp4.form().unwrap();
        assert!((&(&e.transpose() * f) + &(f * &e)).is_zero());

        let so5 = A::so(5).unwrap();
        let e = so5.nilpotent_from_partition(&Partition::new(vec![3, 1, 1]).unwrap()).unwrap();
        assert_eq!(jordan_type(&e), Some(vec![3, 1, 1]));

        assert!(so5.nilpotent_from_partition(&Partition::new(vec![2, 1, 1, 1]).unwrap()).is_err());
        assert!(sp4.nilpotent_from_partition(&Partition::new(vec![3, 1]).unwrap()).is_err());
    }

    #[test]
    fn semisimplicity() {
        let h = Matrix::<Rational>::from_i64_rows(&[&[1, 0], &[0, -1]]);
        assert!(is_semisimple(&h));
        let j = Matrix::<Rational>::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert!(is_nilpotent(&j) && !is_semisimple(&j));
        let mixed = Matrix::<Rational>::from_i64_rows(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, -2]]);
        // eigenvector mixing across distinct eigenvalues is still diagonalisable
        assert!(is_semisimple(&mixed));
        let bad = Matrix::<Rational>::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, -2]]);
        assert!(!is_semisimple(&bad));
    }
}
