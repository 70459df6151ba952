use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qpnkit::exactlinalg::{Field, Scalar, UPoly, UnivariateRing};
use qpnkit::polyring::{binomial, enumerate_monomials, multiply, substitute, HomPoly, Monomial, PolyRing};
use qpnkit::random;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q() -> Field {
    Field::Rationals
}

/// All exponent vectors of length `nvars` summing to `m`, by brute force,
/// in descending lexicographic order.
fn brute_force(nvars: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=m).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().sum::<u32>() == m);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn rat(s: &Scalar) -> BigRational {
    match s {
        Scalar::Q(r) => r.clone(),
        Scalar::Fp { .. } => unreachable!("rational tests only"),
    }
}

#[test]
fn enumeration_examples() {
    let names: Vec<String> = enumerate_monomials(2, 2).iter().map(ToString::to_string).collect();
    assert_eq!(names, ["x0^2", "x0*x1", "x1^2"]);
    assert!(enumerate_monomials(3, -1).is_empty());
    assert_eq!(enumerate_monomials(3, 3).len(), 10);
}

#[test]
fn multiplication_examples() {
    let s = PolyRing::projective(q(), 1);
    let (x0, x1) = (s.var(0), s.var(1));
    assert_eq!(multiply(&x0, &x1), s.monomial(Monomial::new(vec![1, 1])));
    assert!(multiply(&x0, &s.zero(3)).is_zero());
    let lhs = multiply(&x0.add(&x1), &x0.sub(&x1));
    assert_eq!(lhs, multiply(&x0, &x0).sub(&multiply(&x1, &x1)));
}

#[test]
fn substitution_examples() {
    let t = UnivariateRing { field: q() };
    let s = PolyRing::projective(q(), 1);
    let sec = [UPoly::one(q()), UPoly::t(q())];
    assert_eq!(substitute(&t, &s.var(0), &sec), UPoly::one(q()));
    let p = s.monomial(Monomial::new(vec![1, 2]));
    assert_eq!(substitute(&t, &p, &sec), UPoly::from_i64(q(), &[0, 0, 1]));

    let s3 = PolyRing::projective(q(), 2);
    let fermat = s3.var(0).mul(&s3.var(0)).add(&s3.var(1).mul(&s3.var(1))).sub(&s3.var(2).mul(&s3.var(2)));
    let pt = [q().from_i64(3), q().from_i64(4), q().from_i64(5)];
    assert!(substitute(&q(), &fermat, &pt).is_zero());
}

#[test]
fn enumeration_counts_and_contents() {
    for n in 0..=4usize {
        for m in 0..=8u32 {
            let listed = enumerate_monomials(n + 1, m as i64);
            // Stars and bars, computed by a product formula.
            let count = (1..=n as u64).fold(1u64, |acc, i| acc * (m as u64 + i) / i);
            assert_eq!(listed.len() as u64, count, "n={n} m={m}");
            assert_eq!(binomial(n + m as usize, n) as u64, count);
            let exps: Vec<Vec<u32>> = listed.iter().map(|x| x.exponents().to_vec()).collect();
            assert_eq!(exps, brute_force(n + 1, m), "n={n} m={m}");
            for (i, x) in listed.iter().enumerate() {
                assert_eq!(x.index(), i);
            }
        }
    }
}

proptest! {
    #[test]
    fn substitution_is_a_ring_homomorphism(seed in any::<u64>(), dp in 0u32..4, dq in 0u32..4, n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = PolyRing::projective(q(), n);
        let t = UnivariateRing { field: q() };
        let p = random::hompoly(&mut rng, &s, dp, 0.6);
        let p2 = random::hompoly(&mut rng, &s, dp, 0.6);
        let r = random::hompoly(&mut rng, &s, dq, 0.6);
        let sec: Vec<UPoly> = (0..=n).map(|_| UPoly::random(q(), &mut rng, 2)).collect();
        let sub = |h: &HomPoly| substitute(&t, h, &sec);
        prop_assert_eq!(sub(&p.add(&p2)), sub(&p).add(&sub(&p2)));
        prop_assert_eq!(sub(&p.mul(&r)), sub(&p).mul(&sub(&r)));
        prop_assert_eq!(sub(&s.one()), UPoly::one(q()));
    }

    #[test]
    fn substitution_commutes_with_evaluation(seed in any::<u64>(), deg in 0u32..4, t0 in -3i64..=3) {
        // Substituting polynomials and then evaluating at t0 equals
        // evaluating the monomials directly at the values s_i(t0).
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = PolyRing::projective(q(), 2);
        let p = random::hompoly(&mut rng, &s, deg, 0.6);
        let sec: Vec<UPoly> = (0..3).map(|_| UPoly::random(q(), &mut rng, 2)).collect();
        let via_t = substitute(&UnivariateRing { field: q() }, &p, &sec).eval(&q().from_i64(t0));
        let vals: Vec<BigRational> = sec.iter().map(|f| rat(&f.eval(&q().from_i64(t0)))).collect();
        let direct: BigRational = p
            .terms()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(&vals)
                    .fold(rat(c), |acc, (&e, v)| acc * num_traits::pow(v.clone(), e as usize))
            })
            .fold(BigRational::from_integer(BigInt::from(0)), |a, b| a + b);
        prop_assert_eq!(rat(&via_t), direct);
    }
}
