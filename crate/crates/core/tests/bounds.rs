use quatgrad::commvar::{build_css, lower_bound_single_root, DEFAULT_BUDGET};
use quatgrad::gradings::catalog::Entry;
use quatgrad::gradings::Piece;
use quatgrad::rng::seeded;
use quatgrad::Rational;

#[test]
fn single_root_bound_on_sl_sp() {
    let qd = Entry::SlSp.build::<Rational>(2, Some(1)).unwrap();
    let mut rng = seeded(11);
    let c11 = build_css(qd.algebra(), qd.piece(Piece::G11), &mut rng, DEFAULT_BUDGET).unwrap();
    let b = lower_bound_single_root(&qd, c11.basis()).unwrap();
    assert!(b.passes(), "{b:?}");
    assert!(b.multiplicity > 1);
    assert_eq!(b.c_tilde_dim + 1, b.c11_dim);
    assert_eq!(b.bound, b.dim_g11 + b.z10_dim - 1);
}
