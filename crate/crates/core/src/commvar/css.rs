use serde::Serialize;

use crate::error::{Error, Result};
use crate::gradings::Piece;
use crate::lie::{is_semisimple, LieAlgebra};
use crate::linalg::{combine, Matrix, Subspace};
use crate::rng::{small_vector, SeededRng};
use crate::scalar::Scalar;

use super::CommutatorMap;

/// A subspace of pairwise commuting semisimple elements of `ambient`,
/// certified maximal by `z(c) ∩ ambient = c`.
#[derive(Clone, Debug)]
pub struct CartanSubspace<T> {
    ambient: Subspace<T>,
    basis: Vec<Matrix<T>>,
}

impl<T: Scalar> CartanSubspace<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<T>] {
        &self.basis
    }

    pub fn ambient(&self) -> &Subspace<T> {
        &self.ambient
    }

    /// Recheck every defining property from scratch.
    pub fn is_certified(&self, alg: &LieAlgebra<T>) -> bool {
        let commuting = self
            .basis
            .iter()
            .enumerate()
            .all(|(i, a)| self.basis[i + 1..].iter().all(|b| a.commutator(b).is_zero()));
        let inside = self.basis.iter().all(|b| {
            alg.coords(b)
                .map(|c| self.ambient.contains(&c).unwrap_or(false))
                .unwrap_or(false)
        });
        commuting
            && inside
            && self.basis.iter().all(is_semisimple)
            && alg.span(&self.basis).ok() == Some(alg.centralizer(&self.basis, &self.ambient))
    }

    /// A random element with small integer coefficients.
    pub fn random_element(&self, rng: &mut SeededRng, bound: i64) -> Matrix<T> {
        let c = small_vector::<T>(rng, self.dim(), bound);
        let n = self.basis.first().map_or(0, Matrix::rows);
        let flat: Vec<Vec<T>> = self.basis.iter().map(|b| b.data().to_vec()).collect();
        Matrix::new(n, n, combine(n * n, &c, &flat)).expect("square")
    }
}

/// Adjoins random semisimple elements of `z(fixed + c) ∩ ambient` to `c`
/// until the centralizer equals `span c`.
fn extend<T: Scalar>(
    alg: &LieAlgebra<T>,
    fixed: &[Matrix<T>],
    ambient: &Subspace<T>,
    rng: &mut SeededRng,
    budget: usize,
) -> Result<Vec<Matrix<T>>> {
    let mut c: Vec<Matrix<T>> = Vec::new();
    loop {
        let mut all = fixed.to_vec();
        all.extend(c.iter().cloned());
        let z = alg.centralizer(&all, ambient);
        let span = alg.span(&c)?;
        if z.dim() == span.dim() {
            return Ok(c);
        }
        let mut added = false;
        for _ in 0..budget {
            let y = alg.random_in(&z, rng, 3);
            if !span.contains(&alg.coords_unchecked(&y))? && is_semisimple(&y) {
                c.push(y);
                added = true;
                break;
            }
        }
        if !added {
            return Err(Error::BudgetExhausted(format!(
                "no semisimple element found in a {}-dimensional centralizer",
                z.dim()
            )));
        }
    }
}

/// A Cartan subspace of `ambient` (a graded piece or a sum of pieces), built
/// greedily.
pub fn build_css<T: Scalar>(
    alg: &LieAlgebra<T>,
    ambient: &Subspace<T>,
    rng: &mut SeededRng,
    budget: usize,
) -> Result<CartanSubspace<T>> {
    let basis = extend(alg, &[], ambient, rng, budget)?;
    let css = CartanSubspace {
        ambient: ambient.clone(),
        basis,
    };
    debug_assert!(css.is_certified(alg));
    Ok(css)
}

/// Cartan subspace `a_alpha + a_beta` of `g_alpha + g_beta` with
/// `a_p ⊆ g_p`.
#[derive(Clone, Debug)]
pub struct HomogeneousCss<T> {
    first: Piece,
    alpha: Piece,
    beta: Piece,
    a_alpha: Vec<Matrix<T>>,
    a_beta: Vec<Matrix<T>>,
}

impl<T: Scalar> HomogeneousCss<T> {
    /// Piece the construction started from.
    pub fn first(&self) -> Piece {
        self.first
    }

    pub fn part(&self, p: Piece) -> &[Matrix<T>] {
        if p == self.alpha {
            &self.a_alpha
        } else if p == self.beta {
            &self.a_beta
        } else {
            &[]
        }
    }

    /// `(dim a_alpha, dim a_beta)`.
    pub fn dimension_vector(&self) -> (usize, usize) {
        (self.a_alpha.len(), self.a_beta.len())
    }

    pub fn combined(&self) -> Vec<Matrix<T>> {
        let mut all = self.a_alpha.clone();
        all.extend(self.a_beta.iter().cloned());
        all
    }
}

/// Little Cartan subspace of `g_first`, then a little Cartan subspace of
/// the other piece inside the centralizer of the first.
pub fn build_homogeneous<T: Scalar>(
    cm: &CommutatorMap<'_, T>,
    first: Piece,
    rng: &mut SeededRng,
    budget: usize,
) -> Result<HomogeneousCss<T>> {
    let second = if first == cm.alpha() {
        cm.beta()
    } else if first == cm.beta() {
        cm.alpha()
    } else {
        return Err(Error::Hypothesis(format!("{first} is not a source piece")));
    };
    let qd = cm.decomposition();
    let alg = qd.algebra();
    let a_first = extend(alg, &[], qd.piece(first), rng, budget)?;
    let a_second = extend(alg, &a_first, qd.piece(second), rng, budget)?;
    let (a_alpha, a_beta) = if first == cm.alpha() {
        (a_first, a_second)
    } else {
        (a_second, a_first)
    };
    let h = HomogeneousCss {
        first,
        alpha: cm.alpha(),
        beta: cm.beta(),
        a_alpha,
        a_beta,
    };
    let check = CartanSubspace {
        ambient: cm.source(),
        basis: h.combined(),
    };
    if !check.is_certified(alg) {
        return Err(Error::Hypothesis(
            "homogeneous construction is not a Cartan subspace of the source".into(),
        ));
    }
    Ok(h)
}

/// `dim g_alpha + dim g_beta - dim g_gamma + dim (z(h) ∩ g_gamma)`.
pub fn standard_component_dim<T: Scalar>(cm: &CommutatorMap<'_, T>, h: &HomogeneousCss<T>) -> usize {
    let qd = cm.decomposition();
    let a_gamma = qd.algebra().centralizer(&h.combined(), qd.piece(cm.gamma()));
    qd.dim(cm.alpha()) + qd.dim(cm.beta()) - qd.dim(cm.gamma()) + a_gamma.dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCheck {
    /// `dim g_alpha + dim g_beta - dim im(d phi)` at the sampled point.
    pub tangent_dim: usize,
    pub component_dim: usize,
}

impl LocalCheck {
    pub fn passes(&self) -> bool {
        self.tangent_dim == self.component_dim
    }
}

/// Tangent-space dimension of the fibre at a generic point of `h`, taken as
/// the minimum over `samples` random points.
pub fn local_check<T: Scalar>(
    cm: &CommutatorMap<'_, T>,
    h: &HomogeneousCss<T>,
    rng: &mut SeededRng,
    samples: usize,
) -> Result<LocalCheck> {
    let qd = cm.decomposition();
    let n = qd.algebra().size();
    let source = qd.dim(cm.alpha()) + qd.dim(cm.beta());
    let mut best = usize::MAX;
    for _ in 0..samples.max(1) {
        let pick = |v: &[Matrix<T>], rng: &mut SeededRng| -> Matrix<T> {
            let c = small_vector::<T>(rng, v.len(), 5);
            let flat: Vec<Vec<T>> = v.iter().map(|b| b.data().to_vec()).collect();
            Matrix::new(n, n, combine(n * n, &c, &flat)).expect("square")
        };
        let x = pick(h.part(cm.alpha()), rng);
        let y = pick(h.part(cm.beta()), rng);
        let image = cm.differential_image(&x, &y)?;
        best = best.min(source - image.dim());
    }
    Ok(LocalCheck {
        tangent_dim: best,
        component_dim: standard_component_dim(cm, h),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneousSummary {
    pub first: Piece,
    pub dimension_vector: (usize, usize),
    pub component_dim: usize,
    /// `d_alpha <= dim c_alpha` and `d_beta <= dim c_beta`.
    pub bounds_hold: bool,
    pub local: LocalCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyReport {
    pub alpha: Piece,
    pub beta: Piece,
    /// `(dim c_source, dim c_alpha, dim c_beta)`.
    pub dims: (usize, usize, usize),
    /// `dim c_source = dim c_alpha + dim c_beta`.
    pub unique_standard: bool,
    pub homogeneous: Vec<HomogeneousSummary>,
}

/// Builds the big and little Cartan subspaces and both homogeneous ones.
pub fn conjugacy_criterion<T: Scalar>(
    cm: &CommutatorMap<'_, T>,
    rng: &mut SeededRng,
    budget: usize,
) -> Result<ConjugacyReport> {
    let qd = cm.decomposition();
    let alg = qd.algebra();
    let big = build_css(alg, &cm.source(), rng, budget)?;
    let ca = build_css(alg, qd.piece(cm.alpha()), rng, budget)?;
    let cb = build_css(alg, qd.piece(cm.beta()), rng, budget)?;
    let mut homogeneous = Vec::new();
    for first in [cm.alpha(), cm.beta()] {
        let h = build_homogeneous(cm, first, rng, budget)?;
        let (da, db) = h.dimension_vector();
        homogeneous.push(HomogeneousSummary {
            first,
            dimension_vector: (da, db),
            component_dim: standard_component_dim(cm, &h),
            bounds_hold: da <= ca.dim() && db <= cb.dim(),
            local: local_check(cm, &h, rng, 4)?,
        });
    }
    Ok(ConjugacyReport {
        alpha: cm.alpha(),
        beta: cm.beta(),
        dims: (big.dim(), ca.dim(), cb.dim()),
        unique_standard: big.dim() == ca.dim() + cb.dim(),
        homogeneous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::catalog::{so_chain, Entry};
    use crate::gradings::Involution;
    use crate::rng::seeded;
    use crate::Rational;

    #[test]
    fn sl2_diagonal_css() {
        let sl = LieAlgebra::<Rational>::sl(2).unwrap();
        let s = Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
        let theta = Involution::conjugation(&sl, s).unwrap();
        let g = crate::gradings::Z2Grading::new(sl.clone(), theta).unwrap();
        let mut rng = seeded(1);
        let c = build_css(&sl, g.g1(), &mut rng, 16).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.is_certified(&sl));
    }

    #[test]
    fn chain_homogeneous() {
        let qd = so_chain::<Rational>(6).unwrap();
        let cm = CommutatorMap::standard(&qd);
        let mut rng = seeded(2);
        let from10 = build_homogeneous(&cm, Piece::G10, &mut rng, 32).unwrap();
        assert_eq!(from10.dimension_vector(), (1, 0));
        assert_eq!(standard_component_dim(&cm, &from10), 4);
        let from11 = build_homogeneous(&cm, Piece::G11, &mut rng, 32).unwrap();
        assert_eq!(from11.dimension_vector(), (0, 1));
        assert_eq!(standard_component_dim(&cm, &from11), 1);
        let report = conjugacy_criterion(&cm, &mut rng, 32).unwrap();
        assert!(!report.unique_standard);
        assert!(report.homogeneous.iter().all(|h| h.bounds_hold && h.local.passes()));
    }

    #[test]
    fn sp4_triad_components() {
        let qd = Entry::SpTriad.build::<Rational>(2, None).unwrap();
        let cm = CommutatorMap::standard(&qd);
        let mut rng = seeded(3);
        let report = conjugacy_criterion(&cm, &mut rng, 32).unwrap();
        for h in &report.homogeneous {
            assert_eq!(h.component_dim, qd.dim(Piece::G11));
            assert!(h.local.passes());
        }
        assert_eq!(report.dims.0, qd.algebra().lie_rank());
    }
}
