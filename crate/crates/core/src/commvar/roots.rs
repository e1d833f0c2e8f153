use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::{QMatrix, QSubspace, Rational};

/// A pair `±gamma` of restricted roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootPair {
    /// `q_jk = gamma(c_j) gamma(c_k)`, the joint eigenvalues of
    /// `ad(c_j) ad(c_k)` on the root space.
    #[serde(skip)]
    pub q: QMatrix,
    /// `gamma` on the Cartan basis, sign-normalised (first nonzero entry
    /// positive); purely imaginary roots are stored divided by `i`.
    #[serde(serialize_with = "crate::scalar::ser::rationals")]
    pub weight: Vec<Rational>,
    /// Whether `gamma` takes imaginary values on the real Cartan subspace.
    pub imaginary: bool,
    pub multiplicity: usize,
    /// `|gamma|^2` for the dual of the trace form.
    #[serde(serialize_with = "crate::scalar::ser::rational")]
    pub length_sq: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LengthClass {
    /// `|gamma|^2 / |shortest|^2`.
    #[serde(serialize_with = "crate::scalar::ser::rational")]
    pub ratio: Rational,
    /// Number of roots (both signs).
    pub count: usize,
    /// Distinct multiplicities in the class, ascending.
    pub multiplicities: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootProfile {
    /// `A_r`, `B_r`, `C_r`, `BC_r`, or `unknown`; `B_2` is reported as `C2`.
    pub label: String,
    pub rank: usize,
    pub root_count: usize,
    pub classes: Vec<LengthClass>,
}

impl RootProfile {
    fn uniform(&self, idx: usize) -> Option<usize> {
        let c = self.classes.get(idx)?;
        (c.multiplicities.len() == 1).then(|| c.multiplicities[0])
    }

    /// Multiplicity of the shortest roots, if it is the same for all of them.
    pub fn m_short(&self) -> Option<usize> {
        self.uniform(0)
    }

    /// Multiplicity of the longest roots, if it is the same for all of them.
    pub fn m_long(&self) -> Option<usize> {
        self.uniform(self.classes.len().checked_sub(1)?)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictedRootSystem {
    /// Dimension of the Cartan subspace.
    pub css_dim: usize,
    /// Dimension of the space the roots were computed on.
    pub ambient_dim: usize,
    pub zero_weight_dim: usize,
    pub pairs: Vec<RootPair>,
}

impl RestrictedRootSystem {
    /// Every root with its multiplicity, both signs.
    pub fn roots(&self) -> Vec<(Vec<Rational>, usize)> {
        let mut out = Vec::with_capacity(2 * self.pairs.len());
        for p in &self.pairs {
            out.push((p.weight.clone(), p.multiplicity));
            out.push((p.weight.iter().map(|v| -v.clone()).collect(), p.multiplicity));
        }
        out
    }

    /// Roots scaled by one common positive integer so every entry is an integer.
    pub fn integer_roots(&self) -> Vec<(Vec<BigInt>, usize)> {
        let all: Vec<Rational> = self.pairs.iter().flat_map(|p| p.weight.iter().cloned()).collect();
        let d = Rational::common_denominator(&all);
        self.roots()
            .into_iter()
            .map(|(w, m)| {
                let v = w
                    .into_iter()
                    .map(|x| (x * d.clone()).as_integer().expect("cleared denominators"))
                    .collect();
                (v, m)
            })
            .collect()
    }

    pub fn root_count(&self) -> usize {
        2 * self.pairs.len()
    }

    /// `dim = zero_weight_dim + sum of multiplicities`.
    pub fn is_complete(&self) -> bool {
        let total: usize = self.pairs.iter().map(|p| 2 * p.multiplicity).sum();
        self.zero_weight_dim + total == self.ambient_dim
    }

    /// Whether some root is a rational multiple of `q` (given as its
    /// `gamma (x) gamma` matrix).
    pub fn has_rational_multiple(&self, q: &QMatrix) -> bool {
        self.pairs.iter().any(|p| rational_square_ratio(&p.q, q))
    }

    pub fn profile(&self) -> RootProfile {
        let rank = if self.pairs.is_empty() {
            0
        } else {
            let rows: Vec<Vec<Rational>> = self.pairs.iter().map(|p| p.weight.clone()).collect();
            Matrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
        };
        let mut by_len: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for p in &self.pairs {
            by_len.entry(p.length_sq.clone()).or_default().push(p.multiplicity);
        }
        let shortest = by_len.keys().next().cloned();
        let classes: Vec<LengthClass> = by_len
            .into_iter()
            .map(|(len, ms)| {
                let mut distinct = ms.clone();
                distinct.sort_unstable();
                distinct.dedup();
                LengthClass {
                    ratio: len / shortest.clone().expect("nonempty"),
                    count: 2 * ms.len(),
                    multiplicities: distinct,
                }
            })
            .collect();
        let root_count = self.root_count();
        let r = rank;
        let ratios: Vec<Rational> = classes.iter().map(|c| c.ratio.clone()).collect();
        let q = |n: i64| Rational::from_i64(n);
        let label = match classes.len() {
            0 => "trivial".to_string(),
            1 if root_count == r * (r + 1) => format!("A{r}"),
            2 if ratios[1] == q(2) && root_count == 2 * r * r => {
                if classes[1].count == 2 * r {
                    format!("C{r}")
                } else {
                    format!("B{r}")
                }
            }
            3 if ratios[1] == q(2) && ratios[2] == q(4) && root_count == 2 * r * r + 2 * r => format!("BC{r}"),
            _ => "unknown".to_string(),
        };
        RootProfile {
            label,
            rank,
            root_count,
            classes,
        }
    }
}

/// `a = s^2 b` for some nonzero rational `s`.
fn rational_square_ratio(a: &QMatrix, b: &QMatrix) -> bool {
    let pos = b.data().iter().position(|v| !v.is_zero());
    let Some(k) = pos else { return false };
    let t = a.data()[k].clone() / b.data()[k].clone();
    &b.scale(&t) == a && t.is_positive() && rational_sqrt(&t).is_some()
}

fn rational_sqrt(v: &Rational) -> Option<Rational> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer().sqrt();
    let d = v.denom().sqrt();
    (&n * &n == *v.numer() && &d * &d == *v.denom()).then(|| Rational::new(n, d))
}

/// Operator `x -> [c, x]` on an invariant subspace, in its basis.
fn restricted_ad(alg: &LieAlgebra<Rational>, c: &QMatrix, w: &QSubspace) -> Result<QMatrix> {
    let cols = w
        .basis()
        .iter()
        .map(|b| {
            let img = alg.coords_unchecked(&c.commutator(&alg.to_matrix(b)));
            w.coordinates(&img)?
                .ok_or_else(|| Error::Hypothesis("subspace is not ad-invariant".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(w.dim(), &cols))
}

/// Restriction of `op` to an invariant subspace given in ambient coordinates.
fn restrict(op: &QMatrix, s: &QSubspace) -> QMatrix {
    let cols: Vec<Vec<Rational>> = s
        .basis()
        .iter()
        .map(|b| s.coordinates_unchecked(&op.apply(b)))
        .collect();
    Matrix::from_columns(s.dim(), &cols)
}

fn max_row_sum(m: &QMatrix) -> BigInt {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| v.abs()).fold(Rational::zero(), |a, b| a + b))
        .max()
        .map(|v| v.ceil().to_integer())
        .unwrap_or_default()
}

/// Splits `s` into eigenspaces of `op`, whose eigenvalues must be integers
/// of absolute value at most `bound`.
fn split(op: &QMatrix, s: &QSubspace, bound: &BigInt) -> Result<Vec<(Rational, QSubspace)>> {
    let local = restrict(op, s);
    let poly = local.char_polynomial()?.squarefree_part();
    let mut out = Vec::new();
    let mut found = 0;
    let mut t = -bound.clone();
    while &t <= bound {
        let tr = Rational::from_integer(t.clone());
        if poly.eval(&tr).is_zero() {
            let shifted = &local - &Matrix::identity(s.dim()).scale(&tr);
            let ker = shifted.kernel_basis();
            let vecs: Vec<Vec<Rational>> = ker.basis().iter().map(|c| s.element(c)).collect();
            found += vecs.len();
            out.push((tr, Subspace::span(s.ambient_dim(), &vecs)?));
        }
        t += 1;
    }
    if found != s.dim() {
        return Err(Error::IrrationalSpectrum(format!(
            "{} of {} dimensions have integral eigenvalues",
            found,
            s.dim()
        )));
    }
    Ok(out)
}

/// Restricted roots of the Cartan subspace spanned by `css` on the algebra,
/// or on an ad-invariant subspace `within` of it.
///
/// The basis is first scaled to integral matrices; weights refer to the
/// scaled basis, which is returned alongside the system.
pub fn restricted_roots(
    alg: &LieAlgebra<Rational>,
    css: &[QMatrix],
    within: Option<&QSubspace>,
) -> Result<(RestrictedRootSystem, Vec<QMatrix>)> {
    let r = css.len();
    if r == 0 {
        return Err(Error::Hypothesis("empty Cartan subspace".into()));
    }
    let basis: Vec<QMatrix> = css
        .iter()
        .map(|c| c.scale(&Rational::common_denominator(c.data())))
        .collect();
    for (i, a) in basis.iter().enumerate() {
        if basis[i + 1..].iter().any(|b| !a.commutator(b).is_zero()) {
            return Err(Error::Hypothesis("Cartan basis does not commute".into()));
        }
    }
    let full = alg.full_space();
    let w = within.unwrap_or(&full);
    let ads = basis.iter().map(|c| restricted_ad(alg, c, w)).collect::<Result<Vec<_>>>()?;
    let radius: Vec<BigInt> = basis.iter().map(max_row_sum).collect();

    // joint eigenspaces of the commuting operators ad(c_j) ad(c_k), j <= k
    let d = w.dim();
    let mut classes: Vec<(Vec<Rational>, QSubspace)> = vec![(Vec::new(), Subspace::full(d))];
    for j in 0..r {
        for k in j..r {
            let op = &ads[j] * &ads[k];
            let bound = BigInt::from(4) * &radius[j] * &radius[k];
            let mut next = Vec::new();
            for (vals, s) in classes {
                for (t, piece) in split(&op, &s, &bound)? {
                    let mut v = vals.clone();
                    v.push(t);
                    next.push((v, piece));
                }
            }
            classes = next;
        }
    }

    let gram = Matrix::from_fn(r, r, |j, k| alg.trace_form(&basis[j], &basis[k]));
    let gram_inv = gram
        .inverse()
        .ok_or_else(|| Error::Hypothesis("trace form degenerate on the Cartan subspace".into()))?;
    let mut zero_weight_dim = 0;
    let mut pairs = Vec::new();
    for (vals, s) in classes {
        let mut q = Matrix::zeros(r, r);
        let mut it = vals.into_iter();
        for j in 0..r {
            for k in j..r {
                let v = it.next().expect("one value per pair");
                q.set(j, k, v.clone());
                q.set(k, j, v);
            }
        }
        if q.is_zero() {
            zero_weight_dim += s.dim();
            continue;
        }
        if s.dim() % 2 == 1 {
            return Err(Error::Hypothesis("odd-dimensional root pair space".into()));
        }
        let j0 = (0..r).find(|&j| !q.get(j, j).is_zero()).expect("nonzero diagonal");
        let qjj = q.get(j0, j0).clone();
        let root = rational_sqrt(&qjj.abs()).ok_or_else(|| {
            Error::IrrationalSpectrum(format!("root value squared {qjj} is not a rational square"))
        })?;
        let mut weight: Vec<Rational> = q.row(j0).iter().map(|v| v.clone() / root.clone()).collect();
        if weight.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
            weight.iter_mut().for_each(|v| *v = -v.clone());
        }
        let length_sq = (0..r)
            .flat_map(|j| (0..r).map(move |k| (j, k)))
            .fold(Rational::zero(), |acc, (j, k)| {
                acc + gram_inv.get(j, k).clone() * q.get(j, k).clone()
            })
            .abs();
        pairs.push(RootPair {
            q,
            weight,
            imaginary: qjj.is_negative(),
            multiplicity: s.dim() / 2,
            length_sq,
        });
    }
    pairs.sort_by(|a, b| a.weight.cmp(&b.weight));
    let system = RestrictedRootSystem {
        css_dim: r,
        ambient_dim: d,
        zero_weight_dim,
        pairs,
    };
    Ok((system, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::catalog::RootCase;

    fn profile(case: RootCase) -> (RestrictedRootSystem, RootProfile) {
        let (g, css) = case.build::<Rational>().unwrap();
        let (sys, _) = restricted_roots(g.algebra(), &css, None).unwrap();
        let p = sys.profile();
        (sys, p)
    }

    #[test]
    fn sl4_sp4_is_a1() {
        let (sys, p) = profile(RootCase::SlSp(2));
        assert!(sys.is_complete());
        assert_eq!(p.label, "A1");
        assert_eq!(p.m_short(), Some(4));
        assert_eq!(sys.zero_weight_dim, 7);
    }

    #[test]
    fn sp4_gl2_is_c2() {
        let (sys, p) = profile(RootCase::SpGl(2));
        assert!(sys.is_complete());
        assert_eq!(p.label, "C2");
        assert_eq!((p.m_short(), p.m_long()), (Some(1), Some(1)));
    }

    #[test]
    fn sl4_hermitian_is_c2() {
        let (sys, p) = profile(RootCase::SlSl(2));
        assert!(sys.is_complete());
        assert_eq!(p.label, "C2");
        assert_eq!((p.m_short(), p.m_long()), (Some(2), Some(1)));
    }

    #[test]
    fn integer_roots_are_integral() {
        let (sys, _) = profile(RootCase::SpGl(2));
        assert_eq!(sys.integer_roots().len(), 8);
    }

    #[test]
    fn square_ratio() {
        let a = Matrix::<Rational>::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(rational_square_ratio(&a.scale(&Rational::from_i64(9)), &a));
        assert!(!rational_square_ratio(&a.scale(&Rational::from_i64(2)), &a));
    }
}
