//! Smith normal form over Q[t] with its unimodular transforms.

use qpnkit::exactlinalg::{smith_normal_form, Field, PolyMatrix, UPoly};

fn main() {
    let q = Field::Rationals;
    let p = |c: &[i64]| UPoly::from_i64(q, c);
    let a = PolyMatrix::from_rows(
        q,
        vec![
            vec![p(&[0, 1]), p(&[1, 1]), p(&[0])],
            vec![p(&[0, 0, 1]), p(&[0, 1, 1]), p(&[0, 1])],
        ],
    );
    let snf = smith_normal_form(&a);
    println!("A = {a}");
    println!("invariant factors: {}", snf.diag.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    println!("det L = {}, det R = {}", snf.left.determinant(), snf.right.determinant());
    assert_eq!(snf.left.mul(&a).mul(&snf.right), snf.diagonal_matrix());
    println!("L * A * R equals the diagonal");
}
