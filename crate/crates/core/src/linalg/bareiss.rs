//! Fraction-free elimination.
//!
//! Rational rows are scaled to integer rows, reduced with Bareiss' one-step
//! scheme (every division is exact), and only the final back substitution
//! touches fractions. Entry growth stays bounded by minors of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Matrix;
use crate::scalar::Scalar;

/// Clears denominators row by row and strips the row content.
fn integer_rows(rows: usize, cols: usize, data: &[BigRational]) -> Vec<Vec<BigInt>> {
    (0..rows)
        .map(|i| {
            let row = &data[i * cols..(i + 1) * cols];
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let mut ints: Vec<BigInt> = row
                .iter()
                .map(|v| v.numer() * (&l / v.denom()))
                .collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if !g.is_zero() && !g.is_one() {
                for v in ints.iter_mut() {
                    *v = &*v / &g;
                }
            }
            ints
        })
        .collect()
}

/// Bareiss forward elimination in place. Returns the pivot columns; rows
/// `0..pivots.len()` are the echelon rows, the rest are zero.
pub fn integer_echelon(m: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Prefer the smallest nonzero pivot to keep entries short.
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
        else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &piv * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form of a rational matrix via integer elimination.
pub fn rational_rref(
    rows: usize,
    cols: usize,
    data: &[BigRational],
) -> (Vec<BigRational>, Vec<usize>) {
    let mut ints = integer_rows(rows, cols, data);
    let pivots = integer_echelon(&mut ints);
    let rank = pivots.len();

    let mut out: Vec<Vec<BigRational>> = ints
        .into_iter()
        .take(rank)
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for k in (0..rank).rev() {
        let pc = pivots[k];
        let inv = out[k][pc].recip();
        for v in out[k][pc..].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let (above, below) = out.split_at_mut(k);
        let prow = &below[0];
        for row in above.iter_mut() {
            let f = row[pc].clone();
            if f.is_zero() {
                continue;
            }
            for j in pc..cols {
                if !prow[j].is_zero() {
                    row[j] -= &f * &prow[j];
                }
            }
        }
    }

    let mut flat = Vec::with_capacity(rows * cols);
    for row in out {
        flat.extend(row);
    }
    flat.resize(rows * cols, BigRational::zero());
    (flat, pivots)
}

/// Rank of an integer matrix.
pub fn integer_rank(m: &[Vec<BigInt>]) -> usize {
    let mut work = m.to_vec();
    integer_echelon(&mut work).len()
}

/// Determinant by Bareiss elimination over the scalar field. For exact
/// scalars every division is exact; for floats the largest pivot is used.
pub fn det<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut prev = T::one();
    let mut sign = T::one();
    for k in 0..n {
        let pick = if T::EXACT {
            (k..n).find(|&i| !a[i][k].is_negligible())
        } else {
            (k..n).filter(|&i| !a[i][k].is_negligible()).max_by(|&x, &y| {
                a[x][k]
                    .pivot_weight()
                    .partial_cmp(&a[y][k].pivot_weight())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
        };
        let Some(p) = pick else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn rref_with_fractions() {
        let data = vec![q(1, 2), q(1, 3), q(1, 1), q(1, 4), q(1, 6), q(1, 2)];
        let (r, piv) = rational_rref(2, 3, &data);
        assert_eq!(piv, vec![0]);
        assert_eq!(r, vec![q(1, 1), q(2, 3), q(2, 1), q(0, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn det_small() {
        let m = Matrix::<Rational>::from_i64_rows(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(det(&m), q(0, 1));
        let m = Matrix::<Rational>::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(&m), q(-1, 1));
    }

    #[test]
    fn integer_rank_skips_zero_columns() {
        let m: Vec<Vec<BigInt>> = [[0, 2, 4, 1], [0, 1, 2, 0], [0, 3, 6, 5]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(integer_rank(&m), 2);
    }
}
