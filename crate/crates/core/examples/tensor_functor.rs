//! Evaluates graded modules on P^1 along the sections (1, t) over Q[t],
//! then checks that truncations map to isomorphisms and that evaluation
//! commutes with tensor products.

use qpnkit::exactlinalg::{Field, UPoly};
use qpnkit::koszulsym::truncation_presentation;
use qpnkit::tensorfunctor::{
    check_monoidality, check_truncation_iso, evaluate_map, evaluate_object, SectionData, TElem, TargetRing,
};
use qpnkit::{FPGradedModule, GradedFree, GradedMatrix};

fn main() {
    let q = Field::Rationals;
    let sd = SectionData::new(
        TargetRing::Univariate(q),
        vec![TElem::Poly(UPoly::one(q)), TElem::Poly(UPoly::t(q))],
    )
    .unwrap();
    let s = sd.polyring();

    let cyclic = |i: usize| {
        let rels = GradedMatrix::new(s, GradedFree::new(vec![-1]), GradedFree::new(vec![0]), vec![vec![s.var(i)]]);
        FPGradedModule::new(rels.unwrap())
    };
    for (name, m) in [("S(2)", FPGradedModule::free(s, vec![2])), ("S/(x0)", cyclic(0)), ("S/(x1)", cyclic(1))] {
        println!("F({name}) = {}", evaluate_object(&sd, &m).unwrap().classify());
    }

    let t = truncation_presentation(s, 0, 1);
    let incl = evaluate_map(&sd, t.inclusion()).unwrap();
    println!("F(inclusion) = {}, bijective {}", incl.matrix(), incl.is_bijective());
    for (d, a) in [(1, 0), (2, -1), (-3, 1), (0, 4)] {
        println!("truncation of S({d}) at {a}: iso {}", check_truncation_iso(&sd, d, a).unwrap());
    }

    let m = cyclic(1);
    let n = FPGradedModule::free(s, vec![1, -1]);
    println!("F(M (x) N) = F(M) (x) F(N): {}", check_monoidality(&sd, &m, &n).unwrap());
}
