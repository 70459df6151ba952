//! Seeded generators for randomized corpora: polynomials, graded modules,
//! section tuples and tuples `(m_p)` for truncation maps.

use rand::Rng;

use crate::exactlinalg::{Field, UPoly};
use crate::grmod::{FPGradedModule, GradedFree, GradedMatrix};
use crate::koszulsym::SectionTuple;
use crate::polyring::{HomPoly, PolyRing};
use crate::tensorfunctor::{SectionData, TElem, TargetRing};

/// Homogeneous polynomial of the given degree; each monomial is present
/// with probability `density`, with a nonzero coefficient.
pub fn hompoly<R: Rng + ?Sized>(rng: &mut R, ring: &PolyRing, degree: u32, density: f64) -> HomPoly {
    let mut p = ring.zero(degree);
    for m in ring.monomials(degree as i64) {
        if rng.gen_bool(density) {
            let c = loop {
                let c = ring.field.random(rng, 3);
                if !c.is_zero() {
                    break c;
                }
            };
            p.add_term(m, c);
        }
    }
    p
}

/// A nonzero homogeneous polynomial of the given degree.
pub fn nonzero_hompoly<R: Rng + ?Sized>(rng: &mut R, ring: &PolyRing, degree: u32) -> HomPoly {
    loop {
        let p = hompoly(rng, ring, degree, 0.5);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A cokernel of a random matrix: up to `max_gens` generators with twists
/// in `[-1, 1]`, up to `max_rels` relations of degree one or two.
pub fn module<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &PolyRing,
    max_gens: usize,
    max_rels: usize,
) -> FPGradedModule {
    let ngens = rng.gen_range(1..=max_gens);
    let twists: Vec<i64> = (0..ngens).map(|_| rng.gen_range(-1..=1)).collect();
    let low = *twists.iter().min().expect("at least one generator");
    let nrels = rng.gen_range(0..=max_rels);
    let columns = (0..nrels)
        .map(|_| {
            let rt = low - rng.gen_range(1..=2);
            let col = twists
                .iter()
                .map(|&t| hompoly(rng, ring, (t - rt) as u32, 0.4))
                .collect();
            (rt, col)
        })
        .collect();
    let rels = GradedMatrix::from_columns(*ring, GradedFree::new(twists), columns)
        .expect("entry degrees match the twists");
    FPGradedModule::new(rels)
}

/// `n + 1` polynomials of degree at most `max_degree` generating the unit
/// ideal of `F[t]`.
pub fn unit_gcd_sections<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    n: usize,
    max_degree: usize,
) -> SectionData {
    loop {
        let polys: Vec<UPoly> = (0..=n).map(|_| UPoly::random(field, rng, max_degree)).collect();
        let g = polys.iter().fold(UPoly::zero(field), |g, p| g.gcd(p));
        if g.is_one() {
            return SectionData::new(
                TargetRing::Univariate(field),
                polys.into_iter().map(TElem::Poly).collect(),
            )
            .expect("polynomials lie in F[t]");
        }
    }
}

/// A compatible tuple `m_p = c * p` for the truncation `S(d)_{>=a}`, with
/// `c` a random vector of degrees `0` or `1` into a free target; returns the
/// target and the tuple.
pub fn compatible_tuple<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &PolyRing,
    a: i64,
    d: i64,
) -> (FPGradedModule, SectionTuple) {
    let rank = rng.gen_range(1..=2);
    let shifts: Vec<u32> = (0..rank).map(|_| rng.gen_range(0..=1)).collect();
    let target = FPGradedModule::free(*ring, shifts.iter().map(|&k| d + k as i64).collect());
    let c: Vec<HomPoly> = shifts.iter().map(|&k| nonzero_hompoly(rng, ring, k)).collect();
    let values = ring
        .monomials(a + d)
        .into_iter()
        .map(|p| {
            let vals = c.iter().map(|cj| cj.mul_monomial(&p)).collect();
            (p, vals)
        })
        .collect();
    (target, SectionTuple::new(a, d, values))
}

/// A compatible tuple with one value perturbed by a nonzero term. When
/// `a + d >= 1` and there are at least two variables, such a tuple always
/// violates some Koszul relation.
pub fn incompatible_tuple<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &PolyRing,
    a: i64,
    d: i64,
) -> (FPGradedModule, SectionTuple) {
    let (target, mut tuple) = compatible_tuple(rng, ring, a, d);
    let keys: Vec<_> = tuple.values.keys().cloned().collect();
    let p = &keys[rng.gen_range(0..keys.len())];
    let j = rng.gen_range(0..target.gens().rank());
    let degree = (a + target.gens().twists()[j]) as u32;
    let delta = nonzero_hompoly(rng, ring, degree);
    let entry = &mut tuple.values.get_mut(p).expect("key exists")[j];
    *entry = entry.add(&delta);
    (target, tuple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_reproducible() {
        let ring = PolyRing::projective(Field::prime(7).unwrap(), 2);
        let mut r1 = ChaCha8Rng::seed_from_u64(3);
        let mut r2 = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(module(&mut r1, &ring, 3, 3), module(&mut r2, &ring, 3, 3));
        let s = unit_gcd_sections(&mut r1, Field::prime(7).unwrap(), 2, 2);
        assert_eq!(s.sections().len(), 3);
    }
}
