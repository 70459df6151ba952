//! Presents the truncation of S(d) at degree a over P^n and checks the
//! presentation sequence degree by degree.
//!
//! cargo run --example truncation_exactness -- [n] [a] [d]

use qpnkit::exactlinalg::Field;
use qpnkit::grmod::is_exact_window;
use qpnkit::koszulsym::truncation_presentation;
use qpnkit::{DegreeWindow, PolyRing};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let n = *args.first().unwrap_or(&2) as usize;
    let a = *args.get(1).unwrap_or(&1);
    let d = *args.get(2).unwrap_or(&1);

    let ring = PolyRing::projective(Field::Rationals, n);
    let t = truncation_presentation(ring, a, d);
    println!("generators: {} monomials of degree {}", t.generators().len(), a + d);
    println!("relations:  {}", t.module().rels().cols());

    let window = DegreeWindow::new(a - 1, a + 6).unwrap();
    let report = is_exact_window(&t.exact_sequence(), window).expect("composites vanish");
    println!("{:>6}  {:>18}  {:>10}", "degree", "dims rel/gen/S(d)", "images");
    for row in &report.degrees {
        println!("{:>6}  {:>18}  {:>10}", row.degree, format!("{:?}", row.dims), format!("{:?}", row.image_dims));
    }
    match report.witness() {
        None => println!("exact on [{}, {}]", window.lo(), window.hi()),
        Some((degree, position)) => println!("not exact at degree {degree}, position {position}"),
    }
}
