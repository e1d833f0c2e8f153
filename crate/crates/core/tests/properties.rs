use proptest::prelude::*;

use quatgrad::jordan::JordanAlgebra;
use quatgrad::lie::{Family, LieAlgebra};
use quatgrad::linalg::{Matrix, Subspace};
use quatgrad::rng::seeded;
use quatgrad::{QMatrix, Rational, Scalar};

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| Matrix::new(rows, cols, v.into_iter().map(q).collect()).unwrap())
}

fn any_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square() -> impl Strategy<Value = QMatrix> {
    (1usize..5).prop_flat_map(|n| matrix(n, n))
}

fn vectors(count: usize, len: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(q), len), 0..=count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in any_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
    }

    #[test]
    fn kernel_is_annihilated(m in any_matrix()) {
        for v in m.kernel_basis().basis() {
            prop_assert!(m.apply(v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn bareiss_matches_gauss_jordan(m in any_matrix()) {
        prop_assert_eq!(m.rref(), m.rref_gauss_jordan());
    }

    #[test]
    fn grassmann_formula((u, w) in (vectors(4, 5), vectors(4, 5))) {
        let u = Subspace::span(5, &u).unwrap();
        let w = Subspace::span(5, &w).unwrap();
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(cap.is_subspace_of(&u).unwrap() && cap.is_subspace_of(&w).unwrap());
    }

    #[test]
    fn char_poly_is_conjugation_invariant((a, p) in (1usize..5).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))) {
        if let Some(p_inv) = p.inverse() {
            let b = &(&p * &a) * &p_inv;
            prop_assert_eq!(a.char_poly().unwrap(), b.char_poly().unwrap());
        }
    }

    #[test]
    fn cayley_hamilton(a in square()) {
        prop_assert!(a.char_polynomial().unwrap().eval_matrix(&a).is_zero());
    }

    #[test]
    fn determinant_is_constant_coefficient(a in square()) {
        let n = a.rows();
        let cp = a.char_poly().unwrap();
        let sign = if n % 2 == 0 { q(1) } else { q(-1) };
        prop_assert_eq!(cp[0].clone(), q(1));
        prop_assert_eq!(cp[n].clone(), sign * a.det().unwrap());
    }

    #[test]
    fn jacobi_in_classical_algebras(
        family in prop::sample::select(vec![Family::Sl, Family::So, Family::Sp]),
        seed in any::<u64>(),
    ) {
        let alg = LieAlgebra::<Rational>::build(family, 4).unwrap();
        let full = alg.full_space();
        let mut rng = seeded(seed);
        let [x, y, z] = [0; 3].map(|_| alg.random_in(&full, &mut rng, 3));
        let jac = &(&x.commutator(&y.commutator(&z)) + &y.commutator(&z.commutator(&x)))
            + &z.commutator(&x.commutator(&y));
        prop_assert!(jac.is_zero());
        prop_assert!(alg.contains(&x.commutator(&y)));
    }

    #[test]
    fn jordan_identity(kind in 0usize..4, n in 2usize..4, seed in any::<u64>()) {
        let j = match kind {
            0 => JordanAlgebra::<Rational>::full(n),
            1 => JordanAlgebra::sym(n),
            2 => JordanAlgebra::skew(n),
            _ => JordanAlgebra::spin(n + 2),
        }
        .unwrap();
        let mut rng = seeded(seed);
        let x = j.random_element(&mut rng, 3);
        let y = j.random_element(&mut rng, 3);
        prop_assert_eq!(j.mul(&x, &y), j.mul(&y, &x));
        prop_assert!(j.jordan_identity_holds(&x, &y));
        if let Some(u) = j.unit() {
            prop_assert_eq!(j.mul(&u, &x), x);
        }
    }
}

#[test]
fn float_and_exact_ranks_agree_on_integer_matrices() {
    let m = Matrix::<Rational>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let f = Matrix::<f64>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    assert_eq!(m.rank(), 2);
    assert_eq!(f.rank(), 2);
}
