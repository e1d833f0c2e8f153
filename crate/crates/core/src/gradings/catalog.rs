//! Concrete gradings. Every entry is validated on construction (involution
//! axioms, grading rule) rather than trusted.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{ShortGrading, ShortKind};
use crate::lie::{jordan_nilpotent, split_form, Family, LieAlgebra};
use crate::linalg::Matrix;
use crate::partitions::{GradedDims, NilpotentData, PairKind};
use crate::scalar::Scalar;

use super::{Involution, Quaternionic, Z2Grading};

fn diag_signs<T: Scalar>(signs: &[i64]) -> Matrix<T> {
    Matrix::diagonal(&signs.iter().map(|&s| T::from_i64(s)).collect::<Vec<_>>())
}

/// `diag(I_a, -I_b)`.
fn block_signs<T: Scalar>(a: usize, b: usize) -> Matrix<T> {
    let mut s = vec![1; a];
    s.extend(std::iter::repeat_n(-1, b));
    diag_signs(&s)
}

fn block_diag<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (p, q) = (a.rows(), b.rows());
    Matrix::from_fn(p + q, p + q, |i, j| {
        if i < p && j < p {
            a.get(i, j).clone()
        } else if i >= p && j >= p {
            b.get(i - p, j - p).clone()
        } else {
            T::zero()
        }
    })
}

/// A symmetric pair `(g, g0)` realised as a Z2-grading, with a recipe for
/// nilpotents of `g0` of given Jordan type.
#[derive(Clone, Debug)]
pub struct SymmetricPair<T> {
    kind: PairKind,
    /// Block sizes: `(n, 0)` for one-partition pairs, matrix sizes of the
    /// two blocks otherwise.
    blocks: (usize, usize),
    grading: Z2Grading<T>,
}

impl<T: Scalar> SymmetricPair<T> {
    /// `n` is the partition size for one-partition pairs; for two-sided pairs
    /// `(n, m)` are the block sizes.
    pub fn new(kind: PairKind, n: usize, m: usize) -> Result<Self> {
        let bad = || Error::InvalidSize(format!("{kind} with ({n}, {m})"));
        let (alg, theta) = match kind {
            PairKind::SlSo => {
                let alg = LieAlgebra::sl(n)?;
                let f = split_form::<T>(Family::So, n);
                let th = Involution::outer(&alg, f)?;
                (alg, th)
            }
            PairKind::SlSp => {
                if n % 2 == 1 {
                    return Err(bad());
                }
                let alg = LieAlgebra::sl(n)?;
                let f = split_form::<T>(Family::Sp, n);
                let th = Involution::outer(&alg, f.inverse().expect("form is invertible"))?;
                (alg, th)
            }
            PairKind::SpGl | PairKind::SoGl => {
                let fam = if kind == PairKind::SpGl { Family::Sp } else { Family::So };
                if n < 1 {
                    return Err(bad());
                }
                let alg = LieAlgebra::build(fam, 2 * n)?;
                let th = Involution::conjugation(&alg, block_signs(n, n))?;
                (alg, th)
            }
            PairKind::SlSl => {
                if n < 1 || m < 1 {
                    return Err(bad());
                }
                let alg = LieAlgebra::sl(n + m)?;
                let th = Involution::conjugation(&alg, block_signs(n, m))?;
                (alg, th)
            }
            PairKind::SpSp | PairKind::SoSo => {
                let fam = if kind == PairKind::SpSp { Family::Sp } else { Family::So };
                if n < 1 || m < 1 || (fam == Family::Sp && (n % 2 == 1 || m % 2 == 1)) {
                    return Err(bad());
                }
                let form = block_diag(&split_form::<T>(fam, n), &split_form::<T>(fam, m));
                let alg = LieAlgebra::with_form(fam, form)?;
                let th = Involution::conjugation(&alg, block_signs(n, m))?;
                (alg, th)
            }
        };
        let blocks = if kind.is_two_sided() { (n, m) } else { (n, 0) };
        Ok(Self {
            kind,
            blocks,
            grading: Z2Grading::new(alg, theta)?,
        })
    }

    /// The pair hosting the given nilpotent data.
    pub fn for_data(kind: PairKind, data: &NilpotentData) -> Result<Self> {
        match data {
            NilpotentData::One(l) => Self::new(kind, l.n(), 0),
            NilpotentData::Two(l, m) => Self::new(kind, l.n(), m.n()),
        }
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn grading(&self) -> &Z2Grading<T> {
        &self.grading
    }

    /// A nilpotent element of `g0` with the given Jordan data.
    pub fn nilpotent_in_g0(&self, data: &NilpotentData) -> Result<Matrix<T>> {
        let e = match (self.kind, data) {
            (PairKind::SlSo, NilpotentData::One(l)) => {
                LieAlgebra::<T>::so(l.n())?.nilpotent_from_partition(l)?
            }
            (PairKind::SlSp, NilpotentData::One(l)) => {
                LieAlgebra::<T>::sp(l.n())?.nilpotent_from_partition(l)?
            }
            (PairKind::SpGl | PairKind::SoGl, NilpotentData::One(l)) => {
                // diag(A, -K A^T K) preserves [[0, K], [+-K, 0]]
                let n = l.n();
                let a = jordan_nilpotent::<T>(l.parts());
                let k = Matrix::from_fn(n, n, |i, j| {
                    if i + j + 1 == n {
                        T::one()
                    } else {
                        T::zero()
                    }
                });
                let d = -&(&(&k * &a.transpose()) * &k);
                block_diag(&a, &d)
            }
            (PairKind::SlSl, NilpotentData::Two(l, m)) => {
                block_diag(&jordan_nilpotent(l.parts()), &jordan_nilpotent(m.parts()))
            }
            (PairKind::SpSp | PairKind::SoSo, NilpotentData::Two(l, m)) => {
                let fam = if self.kind == PairKind::SpSp { Family::Sp } else { Family::So };
                let part = |p: &crate::partitions::Partition| -> Result<Matrix<T>> {
                    if p.n() == 1 {
                        Ok(Matrix::zeros(1, 1))
                    } else {
                        LieAlgebra::<T>::build(fam, p.n())?.nilpotent_from_partition(p)
                    }
                };
                block_diag(&part(l)?, &part(m)?)
            }
            _ => return Err(Error::Unsupported(format!("{data} for {}", self.kind))),
        };
        let (a, b) = self.blocks;
        let expected = if self.kind.is_two_sided() { a + b } else {
            match self.kind {
                PairKind::SpGl | PairKind::SoGl => 2 * a,
                _ => a,
            }
        };
        if e.rows() != expected {
            return Err(Error::InvalidPartition(format!(
                "{data} does not fit {}",
                self.kind
            )));
        }
        let alg = self.grading.algebra();
        let c = alg.coords(&e)?;
        if !self.grading.g0().contains(&c)? {
            return Err(Error::NotHomogeneous);
        }
        Ok(e)
    }

    /// Graded centralizer dimensions computed from explicit matrices.
    pub fn graded_dims(&self, data: &NilpotentData) -> Result<GradedDims> {
        let e = self.nilpotent_in_g0(data)?;
        let d = self.grading.centralizer_dims(&e)?;
        Ok(GradedDims {
            g0e: d.even as i64,
            g1e: d.odd as i64,
            rank: self.grading.algebra().lie_rank() as i64,
        })
    }
}

/// Named Z2 x Z2 decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Entry {
    /// `so_n` with two commuting reflections: `so_{n-2}`, `n-2`, `n-2`, `1`.
    SoChain,
    /// `sl_2n` with `sigma1` fixing `sp_2n` and `sigma3 = Ad(D)`; parameter
    /// `m` gives `g00 = sp_2m + sp_{2n-2m}`.
    SlSp,
    /// `sl_n` with `x -> -x^T` and `x -> -D x^T D`, both of maximal rank.
    SlDyad,
    /// Jordan triads built from short gradings.
    SpTriad,
    SlTriad,
    SoSkewTriad,
    SoSpinTriad,
}

impl Entry {
    pub const ALL: [Entry; 7] = [
        Entry::SoChain,
        Entry::SlSp,
        Entry::SlDyad,
        Entry::SpTriad,
        Entry::SlTriad,
        Entry::SoSkewTriad,
        Entry::SoSpinTriad,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Entry::SoChain => "so-chain",
            Entry::SlSp => "sl-sp",
            Entry::SlDyad => "sl-dyad",
            Entry::SpTriad => "sp-triad",
            Entry::SlTriad => "sl-triad",
            Entry::SoSkewTriad => "so-skew-triad",
            Entry::SoSpinTriad => "so-spin-triad",
        }
    }

    /// The short grading behind a triad entry.
    pub fn short_kind(&self) -> Option<ShortKind> {
        match self {
            Entry::SpTriad => Some(ShortKind::Sp),
            Entry::SlTriad => Some(ShortKind::Sl),
            Entry::SoSkewTriad => Some(ShortKind::SoSkew),
            Entry::SoSpinTriad => Some(ShortKind::SoSpin),
            _ => None,
        }
    }

    /// Builds the decomposition. `n` is the entry's size parameter: matrix
    /// size for `so-chain`, `sl-dyad` and `so-spin-triad`, half the matrix
    /// size for `sl-sp`, `sp-triad`, `sl-triad`, a quarter for
    /// `so-skew-triad`. `m` is only read by `sl-sp` (default 1).
    pub fn build<T: Scalar>(&self, n: usize, m: Option<usize>) -> Result<Quaternionic<T>> {
        match self {
            Entry::SoChain => so_chain(n),
            Entry::SlSp => sl_sp_pair(n, m.unwrap_or(1)),
            Entry::SlDyad => sl_dyad(n),
            _ => {
                let kind = self.short_kind().expect("triad entry");
                let sg = ShortGrading::new(kind, n)?;
                Ok(sg.jordan_triad()?.into_decomposition())
            }
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Entry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Entry::ALL
            .into_iter()
            .find(|e| e.id() == s)
            .ok_or_else(|| Error::Unsupported(format!("catalog entry {s}")))
    }
}

/// Reflection `s_v = I - 2 v v^T F / B(v, v)` of a form `F`.
fn reflection<T: Scalar>(form: &Matrix<T>, v: &[T]) -> Matrix<T> {
    let n = v.len();
    let fv = form.apply(v);
    let norm = crate::linalg::dot(v, &fv);
    let two = T::from_i64(2) / norm;
    Matrix::from_fn(n, n, |i, j| {
        let id = if i == j { T::one() } else { T::zero() };
        id - two.clone() * v[i].clone() * fv[j].clone()
    })
}

pub fn so_chain<T: Scalar>(n: usize) -> Result<Quaternionic<T>> {
    if n < 4 {
        return Err(Error::InvalidSize(format!("so-chain needs n >= 4, got {n}")));
    }
    let alg = LieAlgebra::<T>::so(n)?;
    let form = alg.form().expect("so has a form").clone();
    let mut v1 = vec![T::zero(); n];
    let mut v2 = vec![T::zero(); n];
    v1[0] = T::one();
    v1[n - 1] = T::one();
    v2[0] = T::one();
    v2[n - 1] = -T::one();
    let s1 = Involution::conjugation(&alg, reflection(&form, &v1))?;
    let s2 = Involution::conjugation(&alg, reflection(&form, &v2))?;
    Quaternionic::new(alg, s1, s2)
}

pub fn sl_sp_pair<T: Scalar>(n: usize, m: usize) -> Result<Quaternionic<T>> {
    if n < 2 || m < 1 || m >= n {
        return Err(Error::InvalidSize(format!("sl-sp needs 1 <= m < n, got ({n}, {m})")));
    }
    let size = 2 * n;
    let alg = LieAlgebra::<T>::sl(size)?;
    let f = split_form::<T>(Family::Sp, size);
    let f_inv = f.inverse().expect("invertible");
    let signs: Vec<i64> = (0..size)
        .map(|i| if i >= m && i < size - m { -1 } else { 1 })
        .collect();
    let d = diag_signs::<T>(&signs);
    let s1 = Involution::outer(&alg, f_inv.clone())?;
    let s2 = Involution::outer(&alg, &d * &f_inv)?;
    Quaternionic::new(alg, s1, s2)
}

pub fn sl_dyad<T: Scalar>(n: usize) -> Result<Quaternionic<T>> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("sl-dyad needs n >= 2, got {n}")));
    }
    let alg = LieAlgebra::<T>::sl(n)?;
    let p = n.div_ceil(2);
    let s1 = Involution::outer(&alg, Matrix::identity(n))?;
    let s2 = Involution::outer(&alg, block_signs(p, n - p))?;
    Quaternionic::new(alg, s1, s2)
}

/// Symmetric spaces whose Cartan subspace is known in closed form with a
/// rational spectrum, for restricted-root computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootCase {
    /// `(sl_2n, sp_2n)`
    SlSp(usize),
    /// `(sp_2n, gl_n)`
    SpGl(usize),
    /// `(sl_2n, s(gl_n + gl_n))`
    SlSl(usize),
}

impl RootCase {
    pub fn id(&self) -> String {
        match *self {
            RootCase::SlSp(n) => format!("sl{}-sp{}", 2 * n, 2 * n),
            RootCase::SpGl(n) => format!("sp{}-gl{}", 2 * n, n),
            RootCase::SlSl(n) => format!("sl{}-sl{}sl{}", 2 * n, n, n),
        }
    }

    pub fn pair(&self) -> (PairKind, usize, usize) {
        match *self {
            RootCase::SlSp(n) => (PairKind::SlSp, 2 * n, 0),
            RootCase::SpGl(n) => (PairKind::SpGl, n, 0),
            RootCase::SlSl(n) => (PairKind::SlSl, n, n),
        }
    }

    /// The grading and a basis of a Cartan subspace of `g1` (integral
    /// matrices).
    pub fn build<T: Scalar>(&self) -> Result<(Z2Grading<T>, Vec<Matrix<T>>)> {
        let (kind, n, m) = self.pair();
        let pair = SymmetricPair::<T>::new(kind, n, m)?;
        let size = pair.grading().algebra().size();
        let css: Vec<Matrix<T>> = match *self {
            RootCase::SlSp(h) => {
                // palindromic traceless diagonals: d_i = d_{N-1-i}
                (1..h)
                    .map(|k| {
                        let mut s = vec![0; size];
                        s[0] = 1;
                        s[size - 1] = 1;
                        s[k] = -1;
                        s[size - 1 - k] = -1;
                        diag_signs(&s)
                    })
                    .collect()
            }
            RootCase::SpGl(h) | RootCase::SlSl(h) => (0..h)
                .map(|i| {
                    let j = size - 1 - i;
                    let mut c = Matrix::zeros(size, size);
                    c.set(i, j, T::one());
                    c.set(j, i, T::one());
                    c
                })
                .collect(),
        };
        let grading = pair.grading;
        for c in &css {
            let v = grading.algebra().coords(c)?;
            if !grading.g1().contains(&v)? {
                return Err(Error::InvalidDecomposition(format!(
                    "{}: Cartan element outside g1",
                    self.id()
                )));
            }
        }
        Ok((grading, css))
    }
}

impl FromStr for RootCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        for n in 1..=8 {
            for case in [RootCase::SlSp(n), RootCase::SpGl(n), RootCase::SlSl(n)] {
                if case.id() == s {
                    return Ok(case);
                }
            }
        }
        Err(Error::Unsupported(format!("root catalog entry {s}")))
    }
}
