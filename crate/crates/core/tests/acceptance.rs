//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every check compares against an oracle computed without
//! the code path under test.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qpnkit::exactlinalg::{CommRing, Field, UPoly};
use qpnkit::grmod::{is_exact_window, GrModError};
use qpnkit::koszulsym::{
    evaluate_phi_recursive, phi_extend, sym_free, sym_module, truncation_presentation,
    KoszulError,
};
use qpnkit::polyring::{binomial, HomPoly, Monomial, PolyRing};
use qpnkit::random;
use qpnkit::tensorfunctor::{
    check_good_epi, check_monoidality, check_truncation_iso, descend_module, evaluate_map,
    evaluate_object, reconstruct_morphism, verify_relation, AModule, AlgebraMap, AlgebraObject,
    Classification, EpiCertificate, RingMap, SectionData, TElem, TMatrix, TModule, TargetRing,
};
use qpnkit::{DegreeWindow, FPGradedModule, GradedFree, GradedMatrix, GradedModuleMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q() -> Field {
    Field::Rationals
}

fn f7() -> Field {
    Field::prime(7).unwrap()
}

fn poly(field: Field, c: &[i64]) -> TElem {
    TElem::Poly(UPoly::from_i64(field, c))
}

fn qt(c: &[&[i64]]) -> SectionData {
    SectionData::new(
        TargetRing::Univariate(q()),
        c.iter().map(|p| poly(q(), p)).collect(),
    )
    .unwrap()
}

fn scalar_sections(vals: &[i64]) -> SectionData {
    let ring = TargetRing::Field(q());
    SectionData::new(ring.clone(), vals.iter().map(|&v| ring.from_i64(v)).collect()).unwrap()
}

// Instances of the truncation sweep: n in 1..=3, a, d in [-3, 3], a + d >= 0.
fn sweep_instances() -> Vec<(Field, usize, i64, i64)> {
    let mut out = Vec::new();
    for field in [q(), f7()] {
        for n in 1..=3 {
            for a in -3..=3 {
                for d in -3..=3 {
                    if a + d >= 0 {
                        out.push((field, n, a, d));
                    }
                }
            }
        }
    }
    out
}

fn criterion_1() -> Check {
    let instances = sweep_instances();
    for &(field, n, a, d) in &instances {
        let t = truncation_presentation(PolyRing::projective(field, n), a, d);
        let w = DegreeWindow::new(a - 1, a + 6).unwrap();
        let report = is_exact_window(&t.exact_sequence(), w)
            .map_err(|e| format!("{field} n={n} a={a} d={d}: {e}"))?;
        ensure(report.is_exact(), || {
            format!("{field} n={n} a={a} d={d}: inexact at {:?}", report.witness())
        })?;
        // Oracle: the truncation module has Hilbert function dim S_{k+d} for
        // k >= a and 0 below, and the inclusion is injective, so every
        // image dimension at the S(d) end equals that count.
        let ring = PolyRing::projective(field, n);
        for deg in &report.degrees {
            let expected = if deg.degree >= a { ring.dim(deg.degree + d) } else { 0 };
            ensure(deg.image_dims[1] == expected, || {
                format!("{field} n={n} a={a} d={d}: image of inclusion in degree {} is {}, expected {expected}", deg.degree, deg.image_dims[1])
            })?;
        }
    }
    Ok(format!("{} instances exact", instances.len()))
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut mutated = 0;
    for (field, n, a, d) in sweep_instances() {
        let t = truncation_presentation(PolyRing::projective(field, n), a, d);
        let [rel, incl] = t.exact_sequence();
        let m = rel.matrix();
        let entries: Vec<(usize, usize)> = (0..m.rows())
            .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
            .filter(|&(r, c)| !m.get(r, c).is_zero())
            .collect();
        if entries.is_empty() {
            // a + d = 0: a single generator and no Koszul relations.
            continue;
        }
        let (r, c) = entries[rng.gen_range(0..entries.len())];
        let flipped = m.with_entry(r, c, m.get(r, c).neg()).unwrap();
        let bad = GradedModuleMap::new(rel.source().clone(), rel.target().clone(), flipped.clone())
            .unwrap();
        let w = DegreeWindow::new(a - 1, a + 6).unwrap();
        let degree = match is_exact_window(&[bad, incl.clone()], w) {
            Err(GrModError::NotComplex { degree, .. }) => degree,
            Ok(report) => match report.witness() {
                Some((degree, _)) => degree,
                None => return Err(format!("{field} n={n} a={a} d={d}: mutation at ({r}, {c}) not detected")),
            },
            Err(e) => return Err(format!("{field} n={n} a={a} d={d}: {e}")),
        };
        ensure(w.degrees().any(|k| k == degree), || format!("witness degree {degree} outside window"))?;
        // Oracle: the flipped column composed with the inclusion is nonzero.
        let composite = incl.matrix().compose(&flipped).unwrap();
        ensure(!composite.column(c).iter().all(HomPoly::is_zero), || {
            format!("{field} n={n} a={a} d={d}: flipped column still composes to zero")
        })?;
        mutated += 1;
    }
    Ok(format!("{mutated} mutated instances, all flagged with a witness degree"))
}

// The presentation-level value of the map on `mono`: factor `mono` as
// `p * rest` with `p` the last generator label dividing it (the recursion
// peels the first variable instead) and multiply the column of `e_p` by
// `rest`.
fn factor_oracle(gens: &[Monomial], map: &GradedModuleMap, mono: &Monomial) -> Option<Vec<HomPoly>> {
    let (col, p) = gens.iter().enumerate().rev().find(|(_, p)| p.divides(mono))?;
    let rest = p.quotient_of(mono).unwrap();
    Some(map.matrix().column(col).iter().map(|v| v.mul_monomial(&rest)).collect())
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut monomials_checked = 0;
    for trial in 0..50 {
        let field = if trial % 2 == 0 { q() } else { f7() };
        let n = rng.gen_range(1..=3);
        let ring = PolyRing::projective(field, n);
        let a = rng.gen_range(-2..=2);
        let d = rng.gen_range(0..=2) - a;
        let t = truncation_presentation(ring, a, d);
        let (target, tuple) = random::compatible_tuple(&mut rng, &ring, a, d);
        let map = phi_extend(&t, &target, &tuple).map_err(|e| format!("compatible tuple rejected: {e}"))?;
        for deg in 0..=(a + d + 4) {
            for mono in ring.monomials(deg) {
                let got = evaluate_phi_recursive(&t, &tuple, &target, &mono).map_err(|e| e.to_string())?;
                let expected = if deg < a + d {
                    None
                } else {
                    factor_oracle(t.generators(), &map, &mono)
                };
                match expected {
                    Some(e) => ensure(got == e, || format!("phi({mono}) = {got:?}, expected {e:?}"))?,
                    None => ensure(got.iter().all(HomPoly::is_zero), || format!("phi({mono}) nonzero below a + d"))?,
                }
                // The map's columns are the tuple itself.
                if deg == a + d {
                    ensure(tuple.values[&mono] == got, || format!("phi({mono}) differs from m_p"))?;
                }
                monomials_checked += 1;
            }
        }
    }
    for trial in 0..50 {
        let field = if trial % 2 == 0 { q() } else { f7() };
        let n = rng.gen_range(1..=3);
        let ring = PolyRing::projective(field, n);
        let a = rng.gen_range(-2..=2);
        let d = rng.gen_range(1..=2) - a;
        let t = truncation_presentation(ring, a, d);
        let (target, tuple) = random::incompatible_tuple(&mut rng, &ring, a, d);
        match phi_extend(&t, &target, &tuple) {
            Err(KoszulError::IncompatibleTuple { q, i, j }) => {
                // Oracle: the named relation really fails for this tuple.
                let xj_q = q.mul_var(j);
                let xi_q = q.mul_var(i);
                let xi = Monomial::var(ring.nvars, i);
                let xj = Monomial::var(ring.nvars, j);
                let lhs: Vec<HomPoly> = tuple.values[&xj_q].iter().map(|v| v.mul_monomial(&xi)).collect();
                let rhs: Vec<HomPoly> = tuple.values[&xi_q].iter().map(|v| v.mul_monomial(&xj)).collect();
                ensure(lhs != rhs, || format!("witness ({q}, {i}, {j}) satisfies its relation"))?;
            }
            Ok(_) => return Err(format!("incompatible tuple accepted (n={n}, a={a}, d={d})")),
            Err(e) => return Err(format!("unexpected error {e}")),
        }
    }
    Ok(format!("50 compatible tuples agree on {monomials_checked} monomials; 50 incompatible tuples rejected with valid witnesses"))
}

fn multichoose(r: usize, p: usize) -> usize {
    if p == 0 {
        1
    } else if r == 0 {
        0
    } else {
        binomial(r + p - 1, p)
    }
}

fn criterion_4() -> Check {
    let mut cases = 0;
    for r in 0..=4usize {
        for r2 in 0..=4usize {
            for m in 0..=4usize {
                let f = GradedFree::new((0..r).map(|i| i as i64 - 1).collect());
                let g = GradedFree::new((0..r2).map(|i| 2 - i as i64).collect());
                let s = sym_free(&f.direct_sum(&g), m);
                let expected: usize = (0..=m).map(|p| multichoose(r, p) * multichoose(r2, m - p)).sum();
                ensure(s.free.rank() == expected, || {
                    format!("Sym^{m} of rank {r}+{r2}: rank {}, expected {expected}", s.free.rank())
                })?;
                // Twists: each summand of Sym^m is a product of p twists from F
                // and m - p from G, so the multiset of twists must match.
                let mut twists: Vec<i64> = s.free.twists().to_vec();
                let mut oracle = Vec::new();
                for p in 0..=m {
                    for a in qpnkit::koszulsym::multisets(r, p) {
                        for b in qpnkit::koszulsym::multisets(r2, m - p) {
                            let ta: i64 = a.iter().map(|&i| f.twists()[i]).sum();
                            let tb: i64 = b.iter().map(|&i| g.twists()[i]).sum();
                            oracle.push(ta + tb);
                        }
                    }
                }
                twists.sort_unstable();
                oracle.sort_unstable();
                ensure(twists == oracle, || format!("Sym^{m} twists differ for ranks {r}, {r2}"))?;
                cases += 1;
            }
        }
    }
    for n in 0..=3usize {
        for m in 0..=4usize {
            let s = sym_free(&GradedFree::new(vec![0; n + 1]), m);
            ensure(s.free.rank() == binomial(n + m, n), || format!("Sym^{m} of 1^{}: wrong rank", n + 1))?;
        }
    }
    let ring = PolyRing::projective(q(), 2);
    for twists in [vec![0], vec![0, 1], vec![-1, 0, 2], vec![1, 1, 1, -2]] {
        for k in 0..=4 {
            let module = FPGradedModule::free(ring, twists.clone());
            let s = sym_module(&module, k).map_err(|e| e.to_string())?;
            let oracle = sym_free(&GradedFree::new(twists.clone()), k);
            ensure(s.gens() == &oracle.free && s.rels().cols() == 0, || {
                format!("Sym^{k} of free {twists:?} is not the free symmetric power")
            })?;
        }
    }
    Ok(format!("{cases} direct-sum rank identities; Sym^m(1^(n+1)) ranks; free sym_module"))
}

// Oracle for a Bézout certificate: recompute sum a_i s_i in the target ring.
fn bezout_holds(sd: &SectionData, coeffs: &[TElem]) -> bool {
    let ring = sd.ring();
    let total = coeffs
        .iter()
        .zip(sd.sections())
        .fold(ring.zero(), |acc, (a, s)| ring.add(&acc, &ring.mul(a, s)));
    total == ring.one()
}

fn criterion_5() -> Check {
    let sd = qt(&[&[1], &[0, 1]]);
    let v = check_good_epi(&sd);
    ensure(v.good(), || "(1, t) is not good".into())?;
    ensure(bezout_holds(&sd, v.bezout().unwrap()), || "Bézout certificate for (1, t) is wrong".into())?;

    let sd = qt(&[&[0, 1], &[0, 0, 1]]);
    let v = check_good_epi(&sd);
    ensure(!v.epi, || "(t, t^2) reported epi".into())?;
    ensure(v.certificate == EpiCertificate::NonUnitGcd(UPoly::from_i64(q(), &[0, 1])), || {
        format!("(t, t^2): witness {:?}, expected gcd t", v.certificate)
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..100 {
        let n = 1 + i % 3;
        let sd = random::unit_gcd_sections(&mut rng, f7(), n, 3);
        let v = check_good_epi(&sd);
        ensure(v.epi && v.middle_exact, || format!("random tuple {i} not good: {v:?}"))?;
        ensure(bezout_holds(&sd, v.bezout().unwrap()), || format!("random tuple {i}: bad certificate"))?;
    }
    Ok("(1, t) good; (t, t^2) not epi with gcd t; 100 random unit-gcd tuples good".into())
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tuples = vec![qt(&[&[1], &[0, 1]])];
    for i in 0..10 {
        tuples.push(random::unit_gcd_sections(&mut rng, f7(), 1 + i % 3, 2));
    }
    let pairs: Vec<(usize, i64, i64)> = (0..tuples.len())
        .flat_map(|s| (-3..=3).flat_map(move |d| (-3..=3).map(move |a| (s, d, a))))
        .collect();
    use rayon::prelude::*;
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(s, d, a)| match check_truncation_iso(&tuples[s], d, a) {
            Ok(true) => None,
            Ok(false) => Some(format!("tuple {s}: d={d} a={a} not an isomorphism")),
            Err(e) => Some(format!("tuple {s}: d={d} a={a}: {e}")),
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} (tuple, d, a) triples invert", pairs.len()))
}

fn criterion_7() -> Check {
    let sd = qt(&[&[1], &[0, 1]]);
    let ring = sd.polyring();
    for a in -2..=2 {
        for b in -2..=2 {
            let m = FPGradedModule::free(ring, vec![a]);
            let n = FPGradedModule::free(ring, vec![b]);
            ensure(check_monoidality(&sd, &m, &n).map_err(|e| e.to_string())?, || {
                format!("S({a}) ⊗ S({b}) comparison not bijective")
            })?;
            let e = evaluate_object(&sd, &m.tensor(&n).unwrap()).map_err(|e| e.to_string())?;
            ensure(e.classify() == Classification::Pid { free_rank: 1, torsion: vec![] }, || {
                format!("F(S({a}) ⊗ S({b})) is {}", e.classify())
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..25 {
        let sd = random::unit_gcd_sections(&mut rng, f7(), 1 + i % 2, 2);
        let ring = sd.polyring();
        let m = random::module(&mut rng, &ring, 3, 2);
        let n = random::module(&mut rng, &ring, 3, 2);
        ensure(check_monoidality(&sd, &m, &n).map_err(|e| e.to_string())?, || {
            format!("random pair {i}: comparison not bijective")
        })?;
        // Oracle: both sides have the same Smith invariants.
        let lhs = evaluate_object(&sd, &m)
            .unwrap()
            .tensor(&evaluate_object(&sd, &n).unwrap())
            .classify();
        let rhs = evaluate_object(&sd, &m.tensor(&n).unwrap()).unwrap().classify();
        ensure(lhs == rhs, || format!("random pair {i}: {lhs} vs {rhs}"))?;
    }
    Ok("25 twist pairs and 25 random cokernel pairs over F7[t]".into())
}

// p(1, t) for a monomial x0^e0 x1^e1 with coefficient c: c * t^e1.
fn substitute_oracle(p: &HomPoly) -> UPoly {
    p.terms().fold(UPoly::zero(q()), |acc, (m, c)| {
        let mut coeffs = vec![q().zero(); m.exponents()[1] as usize + 1];
        coeffs[m.exponents()[1] as usize] = c.clone();
        acc.add(&UPoly::new(q(), coeffs))
    })
}

fn criterion_8() -> Check {
    let sd = qt(&[&[1], &[0, 1]]);
    let map = reconstruct_morphism(&sd).map_err(|e| e.to_string())?;
    ensure(map.charts.len() == 1 && map.charts[0].index == 0, || format!("charts: {:?}", map.charts))?;
    ensure(map.charts[0].coordinates[1] == (poly(q(), &[0, 1]), poly(q(), &[1])), || {
        format!("chart 0 coordinates {:?}", map.charts[0].coordinates)
    })?;
    let ring = sd.polyring();
    for d in -3..=3 {
        let e = evaluate_object(&sd, &FPGradedModule::free(ring, vec![d])).map_err(|e| e.to_string())?;
        ensure(e.classify() == Classification::Pid { free_rank: 1, torsion: vec![] }, || {
            format!("F(S({d})) is {}", e.classify())
        })?;
    }
    for d in 0..=3 {
        let basis = ring.monomials(d);
        let src = FPGradedModule::free(ring, vec![0; basis.len()]);
        let tgt = FPGradedModule::free(ring, vec![d]);
        let row: Vec<HomPoly> = basis.iter().map(|m| ring.monomial(m.clone())).collect();
        let matrix = GradedMatrix::new(ring, src.gens().clone(), tgt.gens().clone(), vec![row.clone()])
            .map_err(|e| e.to_string())?;
        let f = GradedModuleMap::new(src, tgt, matrix).map_err(|e| e.to_string())?;
        let image = evaluate_map(&sd, &f).map_err(|e| e.to_string())?;
        for (j, p) in row.iter().enumerate() {
            let expected = TElem::Poly(substitute_oracle(p));
            ensure(image.matrix().get(0, j) == &expected, || {
                format!("F({p}) = {}, expected {expected}", image.matrix().get(0, j))
            })?;
        }
    }
    Ok("chart t -> [1 : t]; F(S(d)) free of rank 1; section row matches p(1, t)".into())
}

fn criterion_9() -> Check {
    let qt_ring = TargetRing::Univariate(q());
    let qf = TargetRing::Field(q());
    let one = |r: &TargetRing| r.from_i64(1);
    let zero = |r: &TargetRing| r.from_i64(0);

    // Unit algebra with the identity: descent is base change.
    let id = RingMap::identity(&qt_ring);
    let a = AlgebraObject::unit_algebra(&qt_ring);
    let m = AModule::regular(&a);
    let sigma = AlgebraMap { images: vec![one(&qt_ring)] };
    let got = descend_module(&id, &a, &sigma, &m).map_err(|e| e.to_string())?;
    let free1 = Classification::Pid { free_rank: 1, torsion: vec![] };
    ensure(got.classify() == free1, || format!("unit algebra: {}", got.classify()))?;

    // Q[t]/(t) along t -> 0.
    let f = RingMap::new(qt_ring.clone(), qf.clone(), vec![zero(&qf)]).map_err(|e| e.to_string())?;
    let carrier = TModule::new(TMatrix::from_rows(qt_ring.clone(), vec![vec![poly(q(), &[0, 1])]]));
    let mult = TMatrix::from_rows(qt_ring.clone(), vec![vec![one(&qt_ring)]]);
    let a = AlgebraObject::new(carrier, vec![one(&qt_ring)], mult).map_err(|e| e.to_string())?;
    let m = AModule::regular(&a);
    let sigma = AlgebraMap { images: vec![one(&qf)] };
    let got = descend_module(&f, &a, &sigma, &m).map_err(|e| e.to_string())?;
    ensure(got.classify() == Classification::Dimension(1), || format!("Q[t]/(t): {}", got.classify()))?;

    // Rank-2 algebra with u^2 = 1 and u -> 1.
    let o = one(&qt_ring);
    let z = zero(&qt_ring);
    let mult = TMatrix::from_rows(
        qt_ring.clone(),
        vec![
            vec![o.clone(), z.clone(), z.clone(), o.clone()],
            vec![z.clone(), o.clone(), o.clone(), z.clone()],
        ],
    );
    let a = AlgebraObject::new(TModule::free(qt_ring.clone(), 2), vec![o.clone(), z.clone()], mult)
        .map_err(|e| e.to_string())?;
    let m = AModule::regular(&a);
    let sigma = AlgebraMap { images: vec![o.clone(), o.clone()] };
    let got = descend_module(&id, &a, &sigma, &m).map_err(|e| e.to_string())?;
    ensure(got.classify() == free1, || format!("u^2 = 1: {}", got.classify()))?;
    Ok("unit algebra free rank 1; Q[t]/(t) gives Q; u -> 1 gives Q[t]".into())
}

fn criterion_10() -> Check {
    let ring = PolyRing::projective(q(), 2);
    let x = |i| ring.var(i);
    let fermat = x(0).mul(&x(0)).add(&x(1).mul(&x(1))).sub(&x(2).mul(&x(2)));
    let linear = x(0).add(&x(1)).sub(&x(2));
    let got = verify_relation(&scalar_sections(&[3, 4, 5]), &fermat).map_err(|e| e.to_string())?;
    ensure(got, || "x0^2 + x1^2 - x2^2 fails at (3, 4, 5)".into())?;
    let got = verify_relation(&scalar_sections(&[1, 1, 1]), &linear).map_err(|e| e.to_string())?;
    ensure(!got, || "x0 + x1 - x2 holds at (1, 1, 1)".into())?;
    Ok("(3, 4, 5) satisfies the quadric; (1, 1, 1) violates the linear relation".into())
}

fn criterion_11() -> Check {
    let script = concat!(env!("CARGO_MANIFEST_DIR"), "/../../scripts/acceptance.qpk");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qpnkit"))
            .args(["run", script, "--seed", "0"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.code() == Some(0), || {
        format!("exit code {:?}: {}", first.status.code(), String::from_utf8_lossy(&first.stdout))
    })?;
    ensure(second.status.code() == Some(0), || format!("second run exit code {:?}", second.status.code()))?;
    ensure(first.stdout == second.stdout, || "outputs differ between runs".into())?;
    ensure(!first.stdout.is_empty(), || "empty report".into())?;
    let lines = first.stdout.iter().filter(|&&b| b == b'\n').count();
    Ok(format!("{lines} identical JSON lines, exit code 0"))
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("truncation exactness sweep", criterion_1, Duration::from_secs(60)),
        ("single-sign mutation control", criterion_2, Duration::from_secs(60)),
        ("recursive extension agreement", criterion_3, Duration::from_secs(30)),
        ("symmetric power ranks", criterion_4, Duration::from_secs(10)),
        ("good epimorphism verdicts", criterion_5, Duration::from_secs(30)),
        ("truncation isomorphism sweep", criterion_6, Duration::from_secs(60)),
        ("monoidality", criterion_7, Duration::from_secs(30)),
        ("tensoriality round trip", criterion_8, Duration::MAX),
        ("affine descent", criterion_9, Duration::from_secs(5)),
        ("Fermat-type relation", criterion_10, Duration::MAX),
        ("CLI determinism", criterion_11, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > budget => Err(format!("{msg}, but took longer than {budget:?}")),
            r => r,
        };
        match result {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{:.2}s]", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{:.2}s]", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
