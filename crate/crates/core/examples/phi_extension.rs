//! Extends a compatible tuple of sections from the truncation generators
//! to a module map, and shows the witness reported for an incompatible one.

use qpnkit::exactlinalg::Field;
use qpnkit::koszulsym::{phi_extend, truncation_presentation, KoszulError, SectionTuple};
use qpnkit::{FPGradedModule, PolyRing};

fn main() {
    let s = PolyRing::projective(Field::Rationals, 1);
    let (a, d) = (0, 1);
    let t = truncation_presentation(s, a, d);
    let target = FPGradedModule::free(s, vec![d + 1]);

    // p |-> x0 * p on every generator p of degree a + d.
    let x0 = s.var(0);
    let values = s.monomials(a + d).into_iter().map(|p| vec![s.monomial(p).mul(&x0)]).collect();
    let tuple = SectionTuple::from_ordered(&s, a, d, values);
    let map = phi_extend(&t, &target, &tuple).expect("compatible tuple");
    for k in a..=a + 3 {
        let block = map.matrix().realize(k).to_dense();
        println!("degree {k}: {}x{} block, rank {}", block.rows(), block.cols(), block.rank());
    }

    // Sending x0 to x1^2 and x1 to x0^2 breaks x1 * phi(x0) = x0 * phi(x1).
    let bad = SectionTuple::from_ordered(&s, a, d, vec![vec![s.var(1).mul(&s.var(1))], vec![x0.mul(&x0)]]);
    match phi_extend(&t, &target, &bad) {
        Err(KoszulError::IncompatibleTuple { q, i, j }) => {
            println!("incompatible at q = {q}, i = {i}, j = {j}");
        }
        other => println!("unexpected: {other:?}"),
    }
}
