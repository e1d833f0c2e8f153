//! Graded centralizer dimensions from explicit nilpotent matrices.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gradings::catalog::SymmetricPair;
use crate::lie::{Family, LieAlgebra};
use crate::Rational;

use super::{admissible_data, min_size, GradedDims, NilpotentData, PairKind, Partition, SweepReport};

/// `dim g^e` for `e` of type `lambda` in `family` of matrix size `|lambda|`,
/// by an exact kernel computation.
pub fn centralizer_dim(family: Family, lambda: &Partition) -> Result<usize> {
    let alg = LieAlgebra::<Rational>::build(family, lambda.n())?;
    let e = alg.nilpotent_from_partition(lambda)?;
    Ok(alg.centralizer(&[e], &alg.full_space()).dim())
}

/// Graded dims of a nilpotent in `g0` via matrices.
pub fn graded_dims(pair: PairKind, data: &NilpotentData) -> Result<GradedDims> {
    SymmetricPair::<Rational>::for_data(pair, data)?.graded_dims(data)
}

/// Matrix-oracle sweep: all admissible data of each size up to `bound`, one
/// symmetric pair per block shape.
pub fn sweep(pair: PairKind, bound: usize) -> Result<SweepReport> {
    if bound < 2 {
        return Err(Error::InvalidSize(format!("sweep bound {bound} < 2")));
    }
    let sizes: Vec<usize> = (min_size(pair)..=bound).collect();
    let per_size = sizes
        .par_iter()
        .map(|&size| {
            let data = admissible_data(pair, size);
            let rows = data
                .par_iter()
                .map(|d| {
                    let dims = graded_dims(pair, d)?;
                    let mut violations = Vec::new();
                    if pair.has_formula() {
                        let closed = super::graded_dims(pair, d)?;
                        if closed != dims {
                            violations.push(format!(
                                "matrix dims {dims:?} differ from formula {closed:?}"
                            ));
                        }
                    }
                    Ok((d.clone(), dims, violations))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((size, rows))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(super::assemble_oracle(pair, bound, per_size))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{dim_cent_gl, dim_cent_so, dim_cent_sp};

    #[test]
    fn small_oracle_agreement() {
        let l = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(centralizer_dim(Family::Gl, &l).unwrap() as i64, dim_cent_gl(&l));
        let l = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(centralizer_dim(Family::Sp, &l).unwrap() as i64, dim_cent_sp(&l).unwrap());
        let l = Partition::new(vec![3, 1, 1]).unwrap();
        assert_eq!(centralizer_dim(Family::So, &l).unwrap() as i64, dim_cent_so(&l).unwrap());
    }

    #[test]
    fn formula_pairs_match_matrices_small() {
        for pair in [PairKind::SlSo, PairKind::SpGl, PairKind::SoGl, PairKind::SlSl] {
            let r = sweep(pair, 4).unwrap();
            assert!(r.violations.is_empty(), "{pair}: {:?}", r.violations);
        }
    }
}
