//! Checks homogeneous relations on a rational point of P^2, and on a
//! family of points over Q[t].

use qpnkit::exactlinalg::{Field, UPoly};
use qpnkit::tensorfunctor::{check_good_epi, verify_relation, SectionData, TElem, TargetRing};
use qpnkit::PolyRing;

fn main() {
    let q = Field::Rationals;
    let s = PolyRing::projective(q, 2);
    let x = |i| s.var(i);
    let fermat = x(0).mul(&x(0)).add(&x(1).mul(&x(1))).sub(&x(2).mul(&x(2)));

    let k = TargetRing::Field(q);
    for triple in [[3, 4, 5], [5, 12, 13], [1, 1, 1]] {
        let sd = SectionData::new(k.clone(), triple.iter().map(|&v| k.from_i64(v)).collect()).unwrap();
        println!("{triple:?}: good {}, {fermat} = 0: {}", check_good_epi(&sd).good(), verify_relation(&sd, &fermat).unwrap());
    }

    // (1 - t^2, 2t, 1 + t^2) parametrizes the conic.
    let p = |c: &[i64]| TElem::Poly(UPoly::from_i64(q, c));
    let family = SectionData::new(TargetRing::Univariate(q), vec![p(&[1, 0, -1]), p(&[0, 2]), p(&[1, 0, 1])]).unwrap();
    println!("(1 - t^2, 2t, 1 + t^2): good {}, relation holds {}", check_good_epi(&family).good(), verify_relation(&family, &fermat).unwrap());
}
