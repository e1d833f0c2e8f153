//! Commuting varieties of quaternionic decompositions: commutator maps,
//! Cartan subspaces, standard components, restricted roots and lower bounds.

mod bounds;
mod css;
mod roots;

pub use bounds::{lower_bound_kernel_construction, lower_bound_single_root, KernelBound, SingleRootBound};
pub use css::{
    build_css, build_homogeneous, conjugacy_criterion, local_check, standard_component_dim,
    CartanSubspace, ConjugacyReport, HomogeneousCss, HomogeneousSummary, LocalCheck,
};
pub use roots::{restricted_roots, LengthClass, RestrictedRootSystem, RootPair, RootProfile};

use crate::error::{Error, Result};
use crate::gradings::{Piece, Quaternionic};
use crate::linalg::{Matrix, Subspace};
use crate::rng::SeededRng;
use crate::scalar::Scalar;

/// Default number of random draws before a search gives up.
pub const DEFAULT_BUDGET: usize = 64;

/// `phi(x, y) = [x, y] : g_alpha x g_beta -> g_gamma` for a permutation
/// `(alpha, beta, gamma)` of the odd pieces.
#[derive(Clone, Copy, Debug)]
pub struct CommutatorMap<'a, T> {
    qd: &'a Quaternionic<T>,
    alpha: Piece,
    beta: Piece,
    gamma: Piece,
}

impl<'a, T: Scalar> CommutatorMap<'a, T> {
    pub fn new(qd: &'a Quaternionic<T>, alpha: Piece, beta: Piece) -> Result<Self> {
        if alpha == beta || alpha == Piece::G00 || beta == Piece::G00 {
            return Err(Error::InvalidDecomposition(format!(
                "commutator map needs two distinct odd pieces, got {alpha}, {beta}"
            )));
        }
        Ok(Self {
            qd,
            alpha,
            beta,
            gamma: alpha.plus(beta),
        })
    }

    /// `g10 x g11 -> g01`.
    pub fn standard(qd: &'a Quaternionic<T>) -> Self {
        Self::new(qd, Piece::G10, Piece::G11).expect("distinct odd pieces")
    }

    pub fn decomposition(&self) -> &'a Quaternionic<T> {
        self.qd
    }

    pub fn alpha(&self) -> Piece {
        self.alpha
    }

    pub fn beta(&self) -> Piece {
        self.beta
    }

    pub fn gamma(&self) -> Piece {
        self.gamma
    }

    /// `g_alpha + g_beta`, the odd part of the involution negating both.
    pub fn source(&self) -> Subspace<T> {
        self.qd
            .piece(self.alpha)
            .sum(self.qd.piece(self.beta))
            .expect("same ambient")
    }

    fn check(&self, x: &Matrix<T>, p: Piece) -> Result<()> {
        if x.is_zero() || self.qd.in_piece(x, p) {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!("element outside {p}")))
        }
    }

    pub fn apply(&self, x: &Matrix<T>, y: &Matrix<T>) -> Result<Matrix<T>> {
        self.check(x, self.alpha)?;
        self.check(y, self.beta)?;
        Ok(x.commutator(y))
    }

    /// `[x, g_beta] + [g_alpha, y]`, the image of the differential at `(x, y)`.
    pub fn differential_image(&self, x: &Matrix<T>, y: &Matrix<T>) -> Result<Subspace<T>> {
        self.check(x, self.alpha)?;
        self.check(y, self.beta)?;
        let alg = self.qd.algebra();
        let a = alg.bracket_image(x, self.qd.piece(self.beta));
        let b = alg.bracket_image(y, self.qd.piece(self.alpha));
        a.sum(&b)
    }

    /// Searches for `(x, y)` with `z(x)_gamma ∩ z(y)_gamma = 0`, which makes
    /// the map dominant.
    pub fn dominance_witness(&self, rng: &mut SeededRng, trials: usize) -> Option<(Matrix<T>, Matrix<T>)> {
        let alg = self.qd.algebra();
        let target = self.qd.piece(self.gamma);
        if target.is_zero() {
            let z = Matrix::zeros(alg.size(), alg.size());
            return Some((z.clone(), z));
        }
        for _ in 0..trials {
            let x = alg.random_in(self.qd.piece(self.alpha), rng, 3);
            let y = alg.random_in(self.qd.piece(self.beta), rng, 3);
            let zx = alg.centralizer(std::slice::from_ref(&x), target);
            if zx.is_zero() {
                return Some((x, y));
            }
            let zxy = alg.centralizer(std::slice::from_ref(&y), &zx);
            if zxy.is_zero() {
                return Some((x, y));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::catalog::{so_chain, Entry};
    use crate::rng::seeded;
    use crate::Rational;

    #[test]
    fn trivial_differential() {
        let qd = so_chain::<Rational>(6).unwrap();
        let cm = CommutatorMap::standard(&qd);
        let z = Matrix::zeros(6, 6);
        assert!(cm.differential_image(&z, &z).unwrap().is_zero());
        assert!(CommutatorMap::new(&qd, Piece::G10, Piece::G10).is_err());
    }

    #[test]
    fn chain_witness() {
        let qd = so_chain::<Rational>(6).unwrap();
        let cm = CommutatorMap::standard(&qd);
        let mut rng = seeded(3);
        let (x, y) = cm.dominance_witness(&mut rng, 32).expect("witness");
        let image = cm.differential_image(&x, &y).unwrap();
        assert_eq!(image.dim(), qd.dim(Piece::G01));
    }

    #[test]
    fn sp4_triad_witness() {
        let qd = Entry::SpTriad.build::<Rational>(2, None).unwrap();
        let cm = CommutatorMap::standard(&qd);
        let mut rng = seeded(4);
        assert!(cm.dominance_witness(&mut rng, 32).is_some());
    }
}
