use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gradings::{Involution, Piece, Quaternionic};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

use super::{JordanAlgebra, JordanFamily};

/// The four short gradings with a Jordan algebra of the classical kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShortKind {
    /// `sl(2n)`, Jordan algebra `full(n)`.
    Sl,
    /// `sp(2n)`, Jordan algebra `sym(n)`.
    Sp,
    /// `so(4n)`, Jordan algebra `skew(2n)`.
    SoSkew,
    /// `so(n)`, `n >= 5`, Jordan algebra `spin(n - 3)`.
    SoSpin,
}

impl ShortKind {
    pub const ALL: [ShortKind; 4] = [ShortKind::Sl, ShortKind::Sp, ShortKind::SoSkew, ShortKind::SoSpin];

    pub fn id(&self) -> &'static str {
        match self {
            ShortKind::Sl => "sl",
            ShortKind::Sp => "sp",
            ShortKind::SoSkew => "so-skew",
            ShortKind::SoSpin => "so-spin",
        }
    }

    /// Jordan family of `g(-1)` for size parameter `n`.
    pub fn jordan_family(&self, n: usize) -> JordanFamily {
        match self {
            ShortKind::Sl => JordanFamily::Full(n),
            ShortKind::Sp => JordanFamily::Sym(n),
            ShortKind::SoSkew => JordanFamily::Skew(n),
            ShortKind::SoSpin => JordanFamily::Spin(n.saturating_sub(3)),
        }
    }

    /// Matrix size of the ambient algebra.
    pub fn matrix_size(&self, n: usize) -> usize {
        match self {
            ShortKind::Sl | ShortKind::Sp => 2 * n,
            ShortKind::SoSkew => 4 * n,
            ShortKind::SoSpin => n,
        }
    }

    /// Rank of the restricted root system `C_r` of the triad.
    pub fn restricted_rank(&self, n: usize) -> usize {
        match self {
            ShortKind::SoSpin => 2,
            _ => n,
        }
    }

    /// Multiplicity of the short restricted roots.
    pub fn short_multiplicity(&self, n: usize) -> usize {
        match self {
            ShortKind::Sl => 2,
            ShortKind::Sp => 1,
            ShortKind::SoSkew => 4,
            ShortKind::SoSpin => n - 4,
        }
    }
}

impl fmt::Display for ShortKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A short Z-grading `g = g(-1) + g(0) + g(1)` with an sl2-triple `(e, h, f)`,
/// `h` the grading element and `e` in `g(1)`.
#[derive(Clone, Debug)]
pub struct ShortGrading<T> {
    kind: ShortKind,
    n: usize,
    algebra: LieAlgebra<T>,
    h: Matrix<T>,
    e: Matrix<T>,
    f: Matrix<T>,
    /// `g(-1), g(0), g(1)` in coordinate space.
    pieces: [Subspace<T>; 3],
}

impl<T: Scalar> ShortGrading<T> {
    pub fn new(kind: ShortKind, n: usize) -> Result<Self> {
        let size = kind.matrix_size(n);
        let (algebra, h, e) = match kind {
            ShortKind::Sl | ShortKind::Sp | ShortKind::SoSkew => {
                if n == 0 {
                    return Err(Error::ShortGrading("n must be positive".into()));
                }
                let half = size / 2;
                let h = Matrix::from_fn(size, size, |i, j| match (i == j, i < half) {
                    (false, _) => T::zero(),
                    (true, true) => T::one(),
                    (true, false) => -T::one(),
                });
                let block: Matrix<T> = match kind {
                    ShortKind::Sl => Matrix::identity(half),
                    ShortKind::Sp => antidiagonal(half),
                    _ => &antidiagonal(half) * &standard_symplectic(n),
                };
                let e = Matrix::from_fn(size, size, |i, j| {
                    if i < half && j >= half {
                        block.get(i, j - half).clone()
                    } else {
                        T::zero()
                    }
                });
                let algebra = match kind {
                    ShortKind::Sl => LieAlgebra::sl(size)?,
                    ShortKind::Sp => LieAlgebra::sp(size)?,
                    _ => LieAlgebra::so(size)?,
                };
                (algebra, h, e)
            }
            ShortKind::SoSpin => {
                if n < 5 {
                    return Err(Error::ShortGrading(format!("so-spin needs n >= 5, got {n}")));
                }
                let mut h = Matrix::zeros(n, n);
                h.set(0, 0, T::from_i64(2));
                h.set(n - 1, n - 1, T::from_i64(-2));
                let mut e = Matrix::zeros(n, n);
                e.set(0, 1, T::one());
                e.set(n - 2, n - 1, -T::one());
                e.set(0, n - 2, T::one());
                e.set(1, n - 1, -T::one());
                (LieAlgebra::so(n)?, h, e)
            }
        };
        Self::from_parts(kind, n, algebra, h, e)
    }

    fn from_parts(kind: ShortKind, n: usize, algebra: LieAlgebra<T>, h: Matrix<T>, e: Matrix<T>) -> Result<Self> {
        if !algebra.contains(&h) || !algebra.contains(&e) {
            return Err(Error::ShortGrading("h or e outside the algebra".into()));
        }
        let ad_h = algebra.ad(&h).scale(&T::from_ratio(1, 2));
        let pieces = [-1i64, 0, 1].map(|k| {
            let shifted = &ad_h - &Matrix::identity(algebra.dim()).scale(&T::from_i64(k));
            shifted.kernel_basis()
        });
        let total: usize = pieces.iter().map(Subspace::dim).sum();
        if total != algebra.dim() {
            return Err(Error::ShortGrading("ad h has eigenvalues outside {-2, 0, 2}".into()));
        }
        if !pieces[2].contains(&algebra.coords(&e)?)? {
            return Err(Error::ShortGrading("e is not in g(1)".into()));
        }
        // f in g(-1) with [e, f] = h
        let lower: Vec<Matrix<T>> = pieces[0].basis().iter().map(|c| algebra.to_matrix(c)).collect();
        let cols: Vec<Vec<T>> = lower.iter().map(|b| algebra.coords_unchecked(&e.commutator(b))).collect();
        let system = Matrix::from_columns(algebra.dim(), &cols);
        let x = system
            .solve(&algebra.coords(&h)?)?
            .ok_or_else(|| Error::ShortGrading("e is not part of an sl2-triple with h".into()))?;
        let f = algebra.to_matrix(&pieces[0].element(&x));
        Ok(Self {
            kind,
            n,
            algebra,
            h,
            e,
            f,
            pieces,
        })
    }

    pub fn kind(&self) -> ShortKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &LieAlgebra<T> {
        &self.algebra
    }

    pub fn h(&self) -> &Matrix<T> {
        &self.h
    }

    pub fn e(&self) -> &Matrix<T> {
        &self.e
    }

    pub fn f(&self) -> &Matrix<T> {
        &self.f
    }

    /// `g(k)` for `k` in `{-1, 0, 1}`.
    pub fn piece(&self, k: i8) -> &Subspace<T> {
        &self.pieces[(k + 1) as usize]
    }

    fn matrices(&self, s: &Subspace<T>) -> Vec<Matrix<T>> {
        s.basis().iter().map(|c| self.algebra.to_matrix(c)).collect()
    }

    /// `g(-1)` with `x o y = [x, [e, y]]`.
    pub fn jordan_algebra(&self) -> Result<JordanAlgebra<T>> {
        let e = self.e.clone();
        JordanAlgebra::from_matrices(
            JordanFamily::Short(self.kind, self.n),
            self.algebra.size(),
            &self.matrices(self.piece(-1)),
            move |x, y| x.commutator(&e.commutator(y)),
        )
    }

    /// `k = z(e) in g(0)`.
    pub fn k(&self) -> Subspace<T> {
        self.algebra.centralizer(std::slice::from_ref(&self.e), self.piece(0))
    }

    /// `m = [g(-1), e]`.
    pub fn m(&self) -> Subspace<T> {
        let vecs: Vec<Vec<T>> = self
            .matrices(self.piece(-1))
            .iter()
            .map(|y| self.algebra.coords_unchecked(&y.commutator(&self.e)))
            .collect();
        Subspace::span(self.algebra.dim(), &vecs).expect("same ambient")
    }

    /// The triad `sigma1 = (-1)^degree`, `sigma2` acting by `+1` on `k`,
    /// `-1` on `m` and swapping `[x, e]` with `-[x, f]` for `x` in `m`.
    pub fn jordan_triad(&self) -> Result<JordanTriad<T>> {
        let alg = &self.algebra;
        let d = alg.dim();
        let k = self.k();
        let m = self.m();
        if k.dim() + m.dim() != self.piece(0).dim() || !k.intersect(&m)?.is_zero() {
            return Err(Error::ShortGrading("g(0) is not k + m".into()));
        }
        // sigma1 = Ad(S), S diagonal with signs from h
        let size = alg.size();
        let h00 = self.h.get(0, 0).clone();
        let signs: Vec<T> = (0..size)
            .map(|j| {
                let diff = (h00.clone() - self.h.get(j, j).clone()).to_f64().round() as i64;
                if diff.rem_euclid(4) == 0 {
                    T::one()
                } else {
                    -T::one()
                }
            })
            .collect();
        let sigma1 = Involution::conjugation(alg, Matrix::diagonal(&signs))?;

        let mut src = Vec::with_capacity(d);
        let mut dst = Vec::with_capacity(d);
        for c in k.basis() {
            src.push(c.clone());
            dst.push(c.clone());
        }
        for x in self.matrices(&m) {
            let xc = alg.coords_unchecked(&x);
            src.push(xc.clone());
            dst.push(xc.into_iter().map(|v| -v).collect());
            let xe = alg.coords_unchecked(&x.commutator(&self.e));
            let xf = alg.coords_unchecked(&x.commutator(&self.f));
            src.push(xe.clone());
            dst.push(xf.iter().map(|v| -v.clone()).collect());
            src.push(xf);
            dst.push(xe.into_iter().map(|v| -v).collect());
        }
        let p = Matrix::from_columns(d, &src);
        let q = Matrix::from_columns(d, &dst);
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::ShortGrading("k, m, [m, e], [m, f] do not span g".into()))?;
        let sigma2 = Involution::explicit(alg, &q * &p_inv)?;
        let decomposition = Quaternionic::new(alg.clone(), sigma1, sigma2)?;
        let jordan = self.jordan_algebra()?;
        Ok(JordanTriad {
            grading: self.clone(),
            jordan,
            decomposition,
        })
    }
}

/// The quaternionic decomposition attached to a short grading, with its
/// Jordan algebra.
#[derive(Clone, Debug)]
pub struct JordanTriad<T> {
    grading: ShortGrading<T>,
    jordan: JordanAlgebra<T>,
    decomposition: Quaternionic<T>,
}

impl<T: Scalar> JordanTriad<T> {
    pub fn grading(&self) -> &ShortGrading<T> {
        &self.grading
    }

    pub fn jordan(&self) -> &JordanAlgebra<T> {
        &self.jordan
    }

    pub fn decomposition(&self) -> &Quaternionic<T> {
        &self.decomposition
    }

    pub fn into_decomposition(self) -> Quaternionic<T> {
        self.decomposition
    }

    /// Whether the pieces are `k, m, [m, e - f], [m, e + f]`.
    pub fn pieces_match(&self) -> Result<bool> {
        let sg = &self.grading;
        let alg = sg.algebra();
        let e_minus_f = sg.e() - sg.f();
        let e_plus_f = sg.e() + sg.f();
        let m = sg.m();
        let image = |t: &Matrix<T>| -> Subspace<T> { alg.bracket_image(t, &m) };
        let d = &self.decomposition;
        Ok(d.piece(Piece::G00) == &sg.k()
            && d.piece(Piece::G01) == &m
            && d.piece(Piece::G10) == &image(&e_minus_f)
            && d.piece(Piece::G11) == &image(&e_plus_f))
    }

    /// `x` in `g(-1)` carried to `g10` (`sign = -1`) or `g11` (`sign = 1`)
    /// by `x -> [[x, e], e + sign f]`.
    pub fn transport(&self, x: &Matrix<T>, sign: i8) -> Matrix<T> {
        let sg = &self.grading;
        let t = if sign < 0 { sg.e() - sg.f() } else { sg.e() + sg.f() };
        x.commutator(sg.e()).commutator(&t)
    }

    /// `[[[x, e], e - f], [[y, e], e + f]] = c [[[x, e], y], e]` for `x, y`
    /// in `g(-1)`, with `c = TKK_CONSTANT`.
    pub fn tkk_identity_holds(&self, x: &Matrix<T>, y: &Matrix<T>) -> bool {
        let lhs = self.transport(x, -1).commutator(&self.transport(y, 1));
        let e = self.grading.e();
        let rhs = x
            .commutator(e)
            .commutator(y)
            .commutator(e)
            .scale(&T::from_i64(TKK_CONSTANT));
        lhs == rhs
    }

    /// Whether the transported pair commutes.
    pub fn transported_pair_commutes(&self, x: &Matrix<T>, y: &Matrix<T>) -> bool {
        self.transport(x, -1).commutator(&self.transport(y, 1)).is_zero()
    }

    /// `t_m = m` intersected with the diagonal matrices.
    pub fn diagonal_m(&self) -> Result<Subspace<T>> {
        let alg = self.grading.algebra();
        self.grading.m().intersect(&alg.diagonal_subspace())
    }

    /// `c11 = [t_m, e + f]`, a Cartan subspace of `g11`.
    pub fn c11(&self) -> Result<Vec<Matrix<T>>> {
        let sg = &self.grading;
        let alg = sg.algebra();
        let ef = sg.e() + sg.f();
        let tm = self.diagonal_m()?;
        Ok(tm
            .basis()
            .iter()
            .map(|c| alg.to_matrix(c).commutator(&ef))
            .collect())
    }
}

/// Constant in the transport identity. With `x = y = f` in `sl2` the left
/// side is `-8h` and `[[[f, e], f], e] = -2h`.
pub const TKK_CONSTANT: i64 = 4;

fn antidiagonal<T: Scalar>(n: usize) -> Matrix<T> {
    Matrix::from_fn(n, n, |i, j| if i + j + 1 == n { T::one() } else { T::zero() })
}

/// `[[0, I], [-I, 0]]` of size `2n`.
fn standard_symplectic<T: Scalar>(n: usize) -> Matrix<T> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j == i + n {
            T::one()
        } else if i >= n && j + n == i {
            -T::one()
        } else {
            T::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;
    use crate::Rational;

    fn triad(kind: ShortKind, n: usize) -> JordanTriad<Rational> {
        ShortGrading::new(kind, n).unwrap().jordan_triad().unwrap()
    }

    #[test]
    fn jordan_dimensions_and_units() {
        for (kind, n) in [(ShortKind::Sl, 2), (ShortKind::Sp, 2), (ShortKind::SoSkew, 1), (ShortKind::SoSpin, 6)] {
            let sg = ShortGrading::<Rational>::new(kind, n).unwrap();
            let j = sg.jordan_algebra().unwrap();
            assert_eq!(j.dim(), kind.jordan_family(n).expected_dim(), "{kind}");
            let half_f = sg.f().scale(&Rational::from_ratio(1, 2));
            assert_eq!(j.unit().unwrap(), j.coords_of(&half_f).unwrap(), "{kind}");
        }
    }

    #[test]
    fn triad_pieces() {
        for (kind, n) in [(ShortKind::Sl, 2), (ShortKind::Sp, 2), (ShortKind::SoSpin, 5)] {
            let t = triad(kind, n);
            assert!(t.pieces_match().unwrap(), "{kind}");
            let dims = t.decomposition().dims();
            assert_eq!(dims[1], t.jordan().dim());
            assert_eq!(dims[2], t.jordan().dim());
            assert_eq!(dims[3], t.jordan().dim());
        }
    }

    #[test]
    fn tkk_identity_and_transport() {
        for (kind, n) in [(ShortKind::Sl, 2), (ShortKind::Sp, 2), (ShortKind::SoSpin, 6), (ShortKind::SoSkew, 2)] {
            check_tkk(triad(kind, n));
        }
    }

    fn check_tkk(t: JordanTriad<Rational>) {
        let alg = t.grading().algebra();
        let mut rng = seeded(5);
        let lower = t.grading().piece(-1).clone();
        for _ in 0..4 {
            let x = alg.random_in(&lower, &mut rng, 2);
            let y = alg.random_in(&lower, &mut rng, 2);
            assert!(t.tkk_identity_holds(&x, &y));
            assert!(t.decomposition().in_piece(&t.transport(&x, -1), Piece::G10));
            assert!(t.decomposition().in_piece(&t.transport(&x, 1), Piece::G11));
        }
    }

    #[test]
    fn c11_has_restricted_rank() {
        for (kind, n) in [(ShortKind::Sl, 2), (ShortKind::Sp, 3), (ShortKind::SoSkew, 1), (ShortKind::SoSpin, 6)] {
            let t = triad(kind, n);
            let c = t.c11().unwrap();
            assert_eq!(c.len(), kind.restricted_rank(n), "{kind}");
            for x in &c {
                assert!(t.decomposition().in_piece(x, Piece::G11));
            }
        }
    }
}
