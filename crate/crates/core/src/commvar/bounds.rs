use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gradings::{Piece, Quaternionic};
use crate::jordan::JordanTriad;
use crate::linalg::{combine, Matrix};
use crate::rng::{small_vector, SeededRng};
use crate::scalar::Scalar;
use crate::{QMatrix, Rational};

use super::roots::{restricted_roots, RestrictedRootSystem};

/// `span` of the combinations of `basis` given by the kernel vectors of
/// the functionals `rows`.
fn kernel_of_functionals(rows: &[Vec<Rational>], basis: &[QMatrix]) -> Vec<QMatrix> {
    let r = basis.len();
    let n = basis[0].rows();
    let ker = if rows.is_empty() {
        crate::linalg::Subspace::full(r)
    } else {
        Matrix::from_rows(rows.to_vec()).expect("rows of equal length").kernel_basis()
    };
    let flat: Vec<Vec<Rational>> = basis.iter().map(|b| b.data().to_vec()).collect();
    ker.basis()
        .iter()
        .map(|c| Matrix::new(n, n, combine(n * n, c, &flat)).expect("square"))
        .collect()
}

fn random_combination(v: &[QMatrix], n: usize, rng: &mut SeededRng) -> QMatrix {
    let c = small_vector::<Rational>(rng, v.len(), 5);
    let flat: Vec<Vec<Rational>> = v.iter().map(|b| b.data().to_vec()).collect();
    Matrix::new(n, n, combine(n * n, &c, &flat)).expect("square")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingleRootBound {
    /// The chosen root on the Cartan basis of `c11`.
    #[serde(serialize_with = "crate::scalar::ser::rationals")]
    pub root: Vec<Rational>,
    pub multiplicity: usize,
    pub c11_dim: usize,
    pub c_tilde_dim: usize,
    pub z10_dim: usize,
    pub dim_g11: usize,
    /// `dim g11 + dim z(c~)_10 + dim c~ - dim c11`.
    pub bound: usize,
}

impl SingleRootBound {
    /// `dim z(c~)_10 = m_mu`.
    pub fn passes(&self) -> bool {
        self.z10_dim == self.multiplicity
    }
}

/// Lower bound from one root `mu` of `c11` on `g` with `m_mu > 1` and no
/// rational multiple among the roots on `g00 + g11`; `c~ = ker mu`.
pub fn lower_bound_single_root(qd: &Quaternionic<Rational>, c11: &[QMatrix]) -> Result<SingleRootBound> {
    let alg = qd.algebra();
    let (roots, basis) = restricted_roots(alg, c11, None)?;
    let (roots_h, _) = restricted_roots(alg, &basis, Some(&qd.h()))?;
    let mu = roots
        .pairs
        .iter()
        .filter(|p| p.multiplicity > 1 && !roots_h.has_rational_multiple(&p.q))
        .max_by_key(|p| p.multiplicity)
        .ok_or_else(|| Error::Hypothesis("no root with multiplicity > 1 outside the subsystem".into()))?;
    let c_tilde = kernel_of_functionals(std::slice::from_ref(&mu.weight), &basis);
    let z10 = alg.centralizer(&c_tilde, qd.piece(Piece::G10)).dim();
    let dim_g11 = qd.dim(Piece::G11);
    Ok(SingleRootBound {
        root: mu.weight.clone(),
        multiplicity: mu.multiplicity,
        c11_dim: basis.len(),
        c_tilde_dim: c_tilde.len(),
        z10_dim: z10,
        dim_g11,
        bound: dim_g11 + z10 + c_tilde.len() - basis.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelBound {
    pub rank: usize,
    pub profile: String,
    pub subsystem_profile: String,
    pub m_short: usize,
    pub m_long: usize,
    pub dim_j: usize,
    pub c_tilde_dim: usize,
    pub z10_dim: usize,
    /// `m_short r / 2` (`r` even) or `m_short [r/2] + 1` (`r` odd).
    pub z10_expected: usize,
    /// `dim g11 + dim z(c~)_10 + dim c~ - r`.
    pub bound: usize,
    /// `dim J + (m_short - 1) [r/2]`.
    pub formula: usize,
    /// Generic stabilizer dims in `g00` of `c^ = z(c~)_10 + c~` and of `c11`.
    pub stabilizer_dims: (usize, usize),
}

impl KernelBound {
    pub fn passes(&self) -> bool {
        self.z10_dim == self.z10_expected && self.bound == self.formula && self.c_tilde_dim == self.rank / 2
    }
}

fn normalized(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x < &Rational::zero() => v.iter().map(|y| -y.clone()).collect(),
        _ => v.to_vec(),
    }
}

/// Builds `e_1, ..., e_r` from the long roots `±2e_i` of a `C_r` system,
/// signed so that `e_i - e_j` are the roots of the subsystem.
fn epsilon_basis(roots: &RestrictedRootSystem, sub: &RestrictedRootSystem, r: usize) -> Result<Vec<Vec<Rational>>> {
    let profile = roots.profile();
    let longest = roots
        .pairs
        .iter()
        .map(|p| p.length_sq.clone())
        .max()
        .ok_or_else(|| Error::Hypothesis("no roots".into()))?;
    let half = Rational::from_ratio(1, 2);
    let mut eps: Vec<Vec<Rational>> = roots
        .pairs
        .iter()
        .filter(|p| r == 1 || p.length_sq == longest)
        .map(|p| p.weight.iter().map(|v| v.clone() * half.clone()).collect())
        .collect();
    if eps.len() != r {
        return Err(Error::Hypothesis(format!(
            "expected {r} long root pairs in a C{r} system, found {} ({})",
            eps.len(),
            profile.label
        )));
    }
    let sub_weights: Vec<Vec<Rational>> = sub.pairs.iter().map(|p| normalized(&p.weight)).collect();
    let diff = |a: &[Rational], b: &[Rational], s: i64| -> Vec<Rational> {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.clone() - Rational::from_i64(s) * y.clone())
            .collect()
    };
    for i in 1..r {
        if sub_weights.contains(&normalized(&diff(&eps[0], &eps[i], 1))) {
            continue;
        }
        if sub_weights.contains(&normalized(&diff(&eps[0], &eps[i], -1))) {
            eps[i] = eps[i].iter().map(|v| -v.clone()).collect();
            continue;
        }
        return Err(Error::Hypothesis("subsystem is not e_i - e_j".into()));
    }
    if sub.pairs.len() != r * (r - 1) / 2 {
        return Err(Error::Hypothesis("subsystem is not of type A".into()));
    }
    for i in 0..r {
        for j in i + 1..r {
            if !sub_weights.contains(&normalized(&diff(&eps[i], &eps[j], 1))) {
                return Err(Error::Hypothesis(format!("e_{i} - e_{j} is not a subsystem root")));
            }
        }
    }
    Ok(eps)
}

/// The kernel construction for a Jordan triad: `c~ = {x : (e_i + e_{r+1-i})(x) = 0}`.
pub fn lower_bound_kernel_construction(triad: &JordanTriad<Rational>, rng: &mut SeededRng) -> Result<KernelBound> {
    let qd = triad.decomposition();
    let alg = qd.algebra();
    let c11 = triad.c11()?;
    let (roots, basis) = restricted_roots(alg, &c11, None)?;
    let (sub, _) = restricted_roots(alg, &basis, Some(&qd.h()))?;
    let r = basis.len();
    let profile = roots.profile();
    if r >= 2 && profile.label != format!("C{r}") {
        return Err(Error::Hypothesis(format!("profile {} is not C{r}", profile.label)));
    }
    let m_short = if r >= 2 { profile.m_short().unwrap_or(0) } else { 0 };
    let m_long = profile.m_long().unwrap_or(0);
    let eps = epsilon_basis(&roots, &sub, r)?;
    let rows: Vec<Vec<Rational>> = (0..r.div_ceil(2))
        .map(|i| {
            eps[i]
                .iter()
                .zip(&eps[r - 1 - i])
                .map(|(a, b)| a.clone() + b.clone())
                .collect()
        })
        .collect();
    let c_tilde = kernel_of_functionals(&rows, &basis);
    let z10 = alg.centralizer(&c_tilde, qd.piece(Piece::G10));
    let z10_expected = if r % 2 == 0 { m_short * r / 2 } else { m_short * (r / 2) + 1 };
    let dim_j = triad.jordan().dim();
    let dim_g11 = qd.dim(Piece::G11);

    let n = alg.size();
    let z10_mats: Vec<QMatrix> = z10.basis().iter().map(|c| alg.to_matrix(c)).collect();
    let hat = {
        let a = if z10_mats.is_empty() { Matrix::zeros(n, n) } else { random_combination(&z10_mats, n, rng) };
        let b = if c_tilde.is_empty() { Matrix::zeros(n, n) } else { random_combination(&c_tilde, n, rng) };
        &a + &b
    };
    let generic11 = random_combination(&basis, n, rng);
    let g00 = qd.piece(Piece::G00);
    let stabilizer_dims = (
        alg.centralizer(std::slice::from_ref(&hat), g00).dim(),
        alg.centralizer(std::slice::from_ref(&generic11), g00).dim(),
    );
    Ok(KernelBound {
        rank: r,
        profile: profile.label,
        subsystem_profile: sub.profile().label,
        m_short,
        m_long,
        dim_j,
        c_tilde_dim: c_tilde.len(),
        z10_dim: z10.dim(),
        z10_expected,
        bound: dim_g11 + z10.dim() + c_tilde.len() - r,
        formula: dim_j + m_short.saturating_sub(1) * (r / 2),
        stabilizer_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{ShortGrading, ShortKind};
    use crate::rng::seeded;

    fn kernel_bound(kind: ShortKind, n: usize) -> KernelBound {
        let t = ShortGrading::<Rational>::new(kind, n).unwrap().jordan_triad().unwrap();
        lower_bound_kernel_construction(&t, &mut seeded(7)).unwrap()
    }

    #[test]
    fn full_two() {
        let b = kernel_bound(ShortKind::Sl, 2);
        assert!(b.passes(), "{b:?}");
        assert_eq!(b.bound, 5);
        assert_eq!((b.m_short, b.m_long), (2, 1));
    }

    #[test]
    fn sym_has_no_excess() {
        let b = kernel_bound(ShortKind::Sp, 2);
        assert!(b.passes(), "{b:?}");
        assert_eq!(b.bound, b.dim_j);
    }
}
