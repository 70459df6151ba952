//! Base change of modules along ring maps, and descent of a module over an
//! algebra object along an algebra map back to the base.

use qpnkit::exactlinalg::{Field, UPoly};
use qpnkit::tensorfunctor::{
    base_change, descend_module, AModule, AlgebraMap, AlgebraObject, FinDimAlgebra, RingMap, TElem, TMatrix,
    TModule, TargetRing,
};

fn main() {
    let q = Field::Rationals;
    let r = TargetRing::Univariate(q);
    let k = TargetRing::Field(q);
    let dual = TargetRing::algebra(FinDimAlgebra::truncated_polynomials(q, 2).unwrap());
    let p = |c: &[i64]| TElem::Poly(UPoly::from_i64(q, c));

    // Q[t]/(t^2 - 1) and Q[t]/(t^2).
    let m = TModule::new(TMatrix::from_rows(r.clone(), vec![vec![p(&[-1, 0, 1])]]));
    let n = TModule::new(TMatrix::from_rows(r.clone(), vec![vec![p(&[0, 0, 1])]]));
    let at = |v: i64| RingMap::new(r.clone(), k.clone(), vec![k.from_i64(v)]).unwrap();
    for v in [0, 1, 2] {
        println!(
            "t = {v}: Q[t]/(t^2-1) -> {}, Q[t]/(t^2) -> {}",
            base_change(&at(v), &m).unwrap().classify(),
            base_change(&at(v), &n).unwrap().classify()
        );
    }
    let to_dual = RingMap::new(r.clone(), dual.clone(), vec![dual.basis_elem(1)]).unwrap();
    println!("Q[t]/(t^2) over the dual numbers: {}", base_change(&to_dual, &n).unwrap().classify());

    // The unit algebra with its identity section descends a module to itself.
    let a = AlgebraObject::unit_algebra(&r);
    let module = AModule::new(a.clone(), n.clone(), TMatrix::identity(r.clone(), 1)).unwrap();
    let sigma = AlgebraMap { images: vec![p(&[1])] };
    let id = RingMap::identity(&r);
    println!("descended: {}", descend_module(&id, &a, &sigma, &module).unwrap().classify());

    // Q x Q as an algebra over Q[t], split by the first projection.
    let carrier = TModule::free(r.clone(), 2);
    let zero = p(&[0]);
    let one = p(&[1]);
    let mult = TMatrix::from_rows(
        r.clone(),
        vec![
            vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), zero.clone(), one.clone()],
        ],
    );
    let split = AlgebraObject::new(carrier, vec![one.clone(), one.clone()], mult).unwrap();
    let regular = AModule::regular(&split);
    let first = AlgebraMap { images: vec![one, zero] };
    println!("regular module along the first factor: {}", descend_module(&id, &split, &first, &regular).unwrap().classify());
}
