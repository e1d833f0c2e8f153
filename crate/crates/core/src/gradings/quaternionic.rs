use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

use super::grading::brackets_into;
use super::Involution;

/// Graded piece `g_ij`: `sigma1 = (-1)^i`, `sigma2 = (-1)^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Piece {
    #[serde(rename = "00")]
    G00,
    #[serde(rename = "01")]
    G01,
    #[serde(rename = "10")]
    G10,
    #[serde(rename = "11")]
    G11,
}

impl Piece {
    pub const ALL: [Piece; 4] = [Piece::G00, Piece::G01, Piece::G10, Piece::G11];
    /// The three pieces that carry commutator maps.
    pub const ODD: [Piece; 3] = [Piece::G01, Piece::G10, Piece::G11];

    pub fn bits(self) -> (u8, u8) {
        match self {
            Piece::G00 => (0, 0),
            Piece::G01 => (0, 1),
            Piece::G10 => (1, 0),
            Piece::G11 => (1, 1),
        }
    }

    pub fn from_bits(i: u8, j: u8) -> Self {
        match (i & 1, j & 1) {
            (0, 0) => Piece::G00,
            (0, 1) => Piece::G01,
            (1, 0) => Piece::G10,
            _ => Piece::G11,
        }
    }

    /// Grading rule: `[g_a, g_b] ⊆ g_{a+b}`.
    pub fn plus(self, other: Piece) -> Piece {
        let (a, b) = self.bits();
        let (c, d) = other.bits();
        Piece::from_bits(a ^ c, b ^ d)
    }

    fn index(self) -> usize {
        let (i, j) = self.bits();
        (2 * i + j) as usize
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.bits();
        write!(f, "g{i}{j}")
    }
}

/// The Z2 x Z2-grading of two commuting involutions.
#[derive(Clone, Debug)]
pub struct Quaternionic<T> {
    algebra: LieAlgebra<T>,
    sigma1: Involution<T>,
    sigma2: Involution<T>,
    sigma3: Involution<T>,
    pieces: [Subspace<T>; 4],
}

impl<T: Scalar> Quaternionic<T> {
    pub fn new(algebra: LieAlgebra<T>, sigma1: Involution<T>, sigma2: Involution<T>) -> Result<Self> {
        if sigma1 == sigma2 {
            return Err(Error::InvalidDecomposition("sigma1 = sigma2".into()));
        }
        if !sigma1.commutes_with(&sigma2) {
            return Err(Error::InvalidDecomposition("involutions do not commute".into()));
        }
        let sigma3 = sigma1.compose(&algebra, &sigma2)?;
        let d = algebra.dim();
        let id = Matrix::<T>::identity(d);
        let pieces = Piece::ALL.map(|p| {
            let (i, j) = p.bits();
            let s1 = if i == 0 { T::one() } else { -T::one() };
            let s2 = if j == 0 { T::one() } else { -T::one() };
            let a = sigma1.op() - &id.scale(&s1);
            let b = sigma2.op() - &id.scale(&s2);
            a.vstack(&b).expect("same width").kernel_basis()
        });
        let total: usize = pieces.iter().map(Subspace::dim).sum();
        if total != d {
            return Err(Error::InvalidDecomposition(format!(
                "pieces have total dimension {total}, algebra {d}"
            )));
        }
        let q = Self {
            algebra,
            sigma1,
            sigma2,
            sigma3,
            pieces,
        };
        if let Some((a, b)) = q.bracket_failure() {
            return Err(Error::InvalidDecomposition(format!("[{a}, {b}] leaves {}", a.plus(b))));
        }
        Ok(q)
    }

    /// First pair of pieces violating the grading rule, if any.
    pub fn bracket_failure(&self) -> Option<(Piece, Piece)> {
        for (k, &a) in Piece::ALL.iter().enumerate() {
            for &b in &Piece::ALL[k..] {
                if !brackets_into(&self.algebra, self.piece(a), self.piece(b), self.piece(a.plus(b))) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn algebra(&self) -> &LieAlgebra<T> {
        &self.algebra
    }

    pub fn sigma1(&self) -> &Involution<T> {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Involution<T> {
        &self.sigma2
    }

    pub fn sigma3(&self) -> &Involution<T> {
        &self.sigma3
    }

    pub fn piece(&self, p: Piece) -> &Subspace<T> {
        &self.pieces[p.index()]
    }

    pub fn dim(&self, p: Piece) -> usize {
        self.piece(p).dim()
    }

    /// `(dim g00, dim g01, dim g10, dim g11)`.
    pub fn dims(&self) -> [usize; 4] {
        Piece::ALL.map(|p| self.dim(p))
    }

    /// `g_{1*} = g10 + g11`, the odd part of `sigma1`.
    pub fn g1_star(&self) -> Subspace<T> {
        self.piece(Piece::G10).sum(self.piece(Piece::G11)).expect("same ambient")
    }

    /// `g_{*1} = g01 + g11`, the odd part of `sigma2`.
    pub fn g_star1(&self) -> Subspace<T> {
        self.piece(Piece::G01).sum(self.piece(Piece::G11)).expect("same ambient")
    }

    /// Fixed algebra of `sigma3`: `g00 + g11`.
    pub fn h(&self) -> Subspace<T> {
        self.piece(Piece::G00).sum(self.piece(Piece::G11)).expect("same ambient")
    }

    /// The piece containing a homogeneous element.
    pub fn piece_of(&self, x: &Matrix<T>) -> Result<Piece> {
        let c = self.algebra.coords(x)?;
        for p in Piece::ALL {
            if self.piece(p).contains(&c)? {
                return Ok(p);
            }
        }
        Err(Error::NotHomogeneous)
    }

    pub fn in_piece(&self, x: &Matrix<T>, p: Piece) -> bool {
        self.algebra
            .coords(x)
            .map(|c| self.piece(p).contains(&c).unwrap_or(false))
            .unwrap_or(false)
    }

    /// The Z2-grading of `sigma1`.
    pub fn sigma1_grading(&self) -> Result<super::Z2Grading<T>> {
        super::Z2Grading::new(self.algebra.clone(), self.sigma1.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_arithmetic() {
        assert_eq!(Piece::G01.plus(Piece::G10), Piece::G11);
        assert_eq!(Piece::G11.plus(Piece::G11), Piece::G00);
        assert_eq!(Piece::G10.to_string(), "g10");
    }
}
