//! Decides whether a row of sections over Q[t] is a good epimorphism and
//! prints the certificate: Bezout coefficients, or the obstruction.

use qpnkit::exactlinalg::{Field, UPoly};
use qpnkit::tensorfunctor::{check_good_epi, EpiCertificate, SectionData, TElem, TargetRing};

fn sections(rows: &[&[i64]]) -> SectionData {
    let q = Field::Rationals;
    let elems = rows.iter().map(|c| TElem::Poly(UPoly::from_i64(q, c))).collect();
    SectionData::new(TargetRing::Univariate(q), elems).unwrap()
}

fn main() {
    for rows in [&[&[1][..], &[0, 1]][..], &[&[0, 1], &[1, -1]], &[&[0, 1], &[0, 0, 1]], &[&[1, 1], &[1, 2, 1], &[0, 0, 0, 1]]] {
        let sd = sections(rows);
        let shown: Vec<String> = sd.sections().iter().map(ToString::to_string).collect();
        let v = check_good_epi(&sd);
        print!("({}): epi {}, middle exact {}", shown.join(", "), v.epi, v.middle_exact);
        match &v.certificate {
            EpiCertificate::Bezout(c) => {
                println!(", coefficients {}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            }
            EpiCertificate::NonUnitGcd(g) => println!(", sections generate ({g})"),
            other => println!(", {other:?}"),
        }
    }
}
