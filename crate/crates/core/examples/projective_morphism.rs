//! Rebuilds the morphism to projective space from good sections: affine
//! charts with their coordinate ratios, or a single point over a field.

use qpnkit::exactlinalg::{Field, UPoly};
use qpnkit::tensorfunctor::{reconstruct_morphism, SectionData, TElem, TargetRing};

fn main() {
    let q = Field::Rationals;
    let t = TargetRing::Univariate(q);
    let p = |c: &[i64]| TElem::Poly(UPoly::from_i64(q, c));

    // t |-> [t : 1 - t : 1 + t^2] on the affine line.
    let sd = SectionData::new(t, vec![p(&[0, 1]), p(&[1, -1]), p(&[1, 0, 1])]).unwrap();
    let map = reconstruct_morphism(&sd).unwrap();
    for chart in &map.charts {
        let coords: Vec<String> = chart.coordinates.iter().map(|(n, d)| format!("({n})/({d})")).collect();
        println!("chart x{} != 0: {}", chart.index, coords.join(", "));
    }
    let cover: Vec<String> = map.cover_certificate.iter().map(ToString::to_string).collect();
    println!("cover: {}  (verified {})", cover.join(", "), map.verify_cover(&sd));

    let k = TargetRing::Field(q);
    let pt = SectionData::new(k.clone(), vec![k.from_i64(2), k.from_i64(0), k.from_i64(-1)]).unwrap();
    let point = reconstruct_morphism(&pt).unwrap().point(&pt).unwrap();
    println!("point: [{}]", point.iter().map(ToString::to_string).collect::<Vec<_>>().join(" : "));

    let bad = SectionData::new(TargetRing::Univariate(q), vec![p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
    println!("(t, t^2): {}", reconstruct_morphism(&bad).unwrap_err());
}
