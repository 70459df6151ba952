//! Symmetric powers of graded modules: free modules by multisets of
//! generators, presented modules by adding the image of the relations.

use qpnkit::exactlinalg::Field;
use qpnkit::koszulsym::{sym_free, sym_module};
use qpnkit::{DegreeWindow, FPGradedModule, GradedFree, GradedMatrix, PolyRing};

fn main() {
    let s = PolyRing::projective(Field::Rationals, 1);
    let f = GradedFree::new(vec![1, 0, -1]);
    for m in 0..=3 {
        let sym = sym_free(&f, m);
        println!("Sym^{m} of S(1)+S(0)+S(-1): twists {:?}", sym.free.twists());
    }

    // S / (x0) in degree zero; its symmetric square is itself.
    let rels = GradedMatrix::new(s, GradedFree::new(vec![-1]), GradedFree::new(vec![0]), vec![vec![s.var(0)]]).unwrap();
    let m = FPGradedModule::new(rels);
    let w = DegreeWindow::new(0, 4).unwrap();
    let sym2 = sym_module(&m, 2).unwrap();
    println!("S/(x0):       {:?}", m.hilbert_table(w));
    println!("Sym^2 S/(x0): {:?}", sym2.hilbert_table(w));

    let sum = m.direct_sum(&FPGradedModule::free(s, vec![0])).unwrap();
    println!("Sym^2 (S/(x0) + S): {:?}", sym_module(&sum, 2).unwrap().hilbert_table(w));
}
