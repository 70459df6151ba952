//! The tensor functor out of graded modules determined by a tuple of
//! sections `(s_0, .., s_n)` of the trivial line bundle on an affine target.
//!
//! Every `S(b)` goes to the free module of rank one (the twist is only
//! bookkeeping) and a presentation goes to the presentation obtained by
//! replacing `x_i` with `s_i`. Since substitution is a ring map this is right
//! exact and monoidal on presentations; the checks here verify the
//! isomorphisms that the theory predicts for the induced comparison maps.

mod descent;
mod goodepi;
mod target;

pub use descent::{base_change, descend_module, AModule, AlgebraMap, AlgebraObject, RingMap};
pub use goodepi::{
    check_good_epi, reconstruct_morphism, Chart, ChartMap, EpiCertificate, GoodEpiVerdict,
};
pub use target::{
    kernel, span_contains, Classification, FinDimAlgebra, SpanTester, TElem, TMatrix, TModule,
    TModuleMap, TargetRing,
};

use thiserror::Error;

use crate::exactlinalg::CommRing;
use crate::grmod::{FPGradedModule, GrModError, GradedMatrix, GradedModuleMap};
use crate::koszulsym::truncation_presentation;
use crate::polyring::{substitute, HomPoly, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("expected {expected} sections, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("section tuple is not a good epimorphism: {0}")]
    PreconditionNotGood(String),
    #[error("invalid ring map: {0}")]
    InvalidRingMap(String),
    #[error("invalid algebra map: {0}")]
    InvalidAlgebraMap(String),
    #[error("invalid module structure: {0}")]
    InvalidModuleStructure(String),
    #[error("relation column {column} does not map into the target relations")]
    IllDefinedMap { column: usize },
    #[error(transparent)]
    Graded(#[from] GrModError),
}

/// A line bundle with sections on an affine target: the bundle is the free
/// module of rank one, so the data is the tuple `(s_0, .., s_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionData {
    ring: TargetRing,
    sections: Vec<TElem>,
}

impl SectionData {
    pub fn new(ring: TargetRing, sections: Vec<TElem>) -> Result<Self, TensorError> {
        if sections.is_empty() {
            return Err(TensorError::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(bad) = sections.iter().find(|s| !ring.contains(s)) {
            return Err(TensorError::RingMismatch(format!("{bad} is not in {ring}")));
        }
        Ok(SectionData { ring, sections })
    }

    pub fn ring(&self) -> &TargetRing {
        &self.ring
    }

    pub fn sections(&self) -> &[TElem] {
        &self.sections
    }

    /// Projective dimension: one less than the number of sections.
    pub fn n(&self) -> usize {
        self.sections.len() - 1
    }

    /// The source ring `F[x_0..x_n]`.
    pub fn polyring(&self) -> PolyRing {
        PolyRing::projective(self.ring.field(), self.n())
    }

    pub fn section_row(&self) -> TMatrix {
        goodepi::section_row(&self.ring, &self.sections)
    }

    pub fn koszul_matrix(&self) -> TMatrix {
        goodepi::koszul_matrix(&self.ring, &self.sections)
    }

    /// `p(s_0, .., s_n)`.
    pub fn substitute(&self, p: &HomPoly) -> Result<TElem, TensorError> {
        if p.nvars() != self.sections.len() {
            return Err(TensorError::ArityMismatch {
                expected: p.nvars(),
                found: self.sections.len(),
            });
        }
        if let Some((_, c)) = p.terms().next() {
            if c.field() != self.ring.field() {
                return Err(TensorError::RingMismatch(format!(
                    "polynomial over {} substituted into {}",
                    c.field(),
                    self.ring
                )));
            }
        }
        Ok(substitute(&self.ring, p, &self.sections))
    }

    fn check_source(&self, ring: &PolyRing) -> Result<(), TensorError> {
        if ring.field != self.ring.field() {
            return Err(TensorError::RingMismatch(format!(
                "module over {} evaluated into {}",
                ring.field, self.ring
            )));
        }
        if ring.nvars != self.sections.len() {
            return Err(TensorError::ArityMismatch {
                expected: ring.nvars,
                found: self.sections.len(),
            });
        }
        Ok(())
    }

    fn substitute_matrix(&self, m: &GradedMatrix) -> TMatrix {
        let cols = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .map(|r| substitute(&self.ring, m.get(r, c), &self.sections))
                    .collect()
            })
            .collect();
        TMatrix::from_columns(self.ring.clone(), m.rows(), cols)
    }
}

/// The image of a finitely presented graded module: one free generator per
/// graded generator, relations substituted entrywise.
pub fn evaluate_object(sd: &SectionData, m: &FPGradedModule) -> Result<TModule, TensorError> {
    sd.check_source(m.ring())?;
    Ok(TModule::new(sd.substitute_matrix(m.rels())))
}

/// The image of a graded map. Substitution carries relations to relations,
/// so the result is well defined without a further check.
pub fn evaluate_map(sd: &SectionData, f: &GradedModuleMap) -> Result<TModuleMap, TensorError> {
    let source = evaluate_object(sd, f.source())?;
    let target = evaluate_object(sd, f.target())?;
    TModuleMap::new_unchecked(source, target, sd.substitute_matrix(f.matrix()))
}

fn require_good(sd: &SectionData) -> Result<(), TensorError> {
    let verdict = check_good_epi(sd);
    if verdict.good() {
        Ok(())
    } else {
        Err(TensorError::PreconditionNotGood(goodepi::describe_failure(
            &verdict,
        )))
    }
}

/// Whether the inclusion `S(d)_{>=a} -> S(d)` is sent to an isomorphism.
/// The verdict is exact (no degree window involved).
pub fn check_truncation_iso(sd: &SectionData, d: i64, a: i64) -> Result<bool, TensorError> {
    require_good(sd)?;
    let t = truncation_presentation(sd.polyring(), a, d);
    Ok(evaluate_map(sd, t.inclusion())?.is_bijective())
}

/// Whether the identity on generator labels
/// `F(M) ⊗ F(N) -> F(M ⊗ N)` is a well-defined bijection.
pub fn check_monoidality(
    sd: &SectionData,
    m: &FPGradedModule,
    n: &FPGradedModule,
) -> Result<bool, TensorError> {
    let lhs = evaluate_object(sd, m)?.tensor(&evaluate_object(sd, n)?);
    let rhs = evaluate_object(sd, &m.tensor(n)?)?;
    let id = TMatrix::identity(sd.ring.clone(), lhs.gens());
    Ok(match TModuleMap::new(lhs, rhs, id) {
        Ok(map) => map.is_bijective(),
        Err(TensorError::IllDefinedMap { .. }) => false,
        Err(e) => return Err(e),
    })
}

/// Whether `rel(s_0, .., s_n) = 0` in the target.
pub fn verify_relation(sd: &SectionData, rel: &HomPoly) -> Result<bool, TensorError> {
    if rel.is_zero() {
        return Ok(true);
    }
    Ok(sd.ring.is_zero(&sd.substitute(rel)?))
}

/// Exactness of `T^{rels} -> T^{H_m} -> T -> 0`, the truncation presentation
/// of `S_{>=m}` inside `S` with `x_i` replaced by `s_i`: the relations must
/// generate the kernel of `e_p |-> p(s)`, and that map must be onto.
pub fn check_truncation_sequence(sd: &SectionData, m: i64) -> Result<bool, TensorError> {
    let t = truncation_presentation(sd.polyring(), m, 0);
    let incl = evaluate_map(sd, t.inclusion())?;
    if !incl.is_surjective() {
        return Ok(false);
    }
    let rels = incl.source().rels();
    let ker = kernel(incl.matrix());
    let tester = SpanTester::new(rels);
    Ok((0..ker.cols()).all(|c| tester.contains(&ker.column(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::{Field, UPoly};
    use crate::grmod::{GradedFree, GradedMatrix};
    use crate::polyring::Monomial;

    fn q() -> Field {
        Field::Rationals
    }

    fn p(c: &[i64]) -> TElem {
        TElem::Poly(UPoly::from_i64(q(), c))
    }

    fn one_t() -> SectionData {
        SectionData::new(TargetRing::Univariate(q()), vec![p(&[1]), p(&[0, 1])]).unwrap()
    }

    fn quotient_by_var(s: PolyRing, i: usize) -> FPGradedModule {
        FPGradedModule::new(
            GradedMatrix::new(s, GradedFree::new(vec![-1]), GradedFree::new(vec![0]), vec![vec![s.var(i)]])
                .unwrap(),
        )
    }

    #[test]
    fn evaluating_twists_and_quotients() {
        let sd = one_t();
        let s = sd.polyring();
        assert_eq!(
            evaluate_object(&sd, &FPGradedModule::free(s, vec![3])).unwrap(),
            TModule::free(sd.ring().clone(), 1)
        );
        assert!(evaluate_object(&sd, &quotient_by_var(s, 0)).unwrap().is_zero());
        assert_eq!(
            evaluate_object(&sd, &quotient_by_var(s, 1)).unwrap().classify(),
            Classification::Pid { free_rank: 0, torsion: vec![UPoly::t(q())] }
        );
    }

    #[test]
    fn evaluating_the_smallest_inclusion() {
        let sd = one_t();
        let t = truncation_presentation(sd.polyring(), 0, 1);
        let f = evaluate_map(&sd, t.inclusion()).unwrap();
        assert_eq!(f.matrix(), &TMatrix::from_rows(sd.ring().clone(), vec![vec![p(&[1]), p(&[0, 1])]]));
        assert_eq!(f.source().rels(), &TMatrix::from_rows(sd.ring().clone(), vec![vec![p(&[0, -1])], vec![p(&[1])]]));
        assert!(check_truncation_iso(&sd, 1, 0).unwrap());
        assert!(check_truncation_iso(&sd, 1, -3).unwrap());
    }

    #[test]
    fn truncation_iso_needs_good_sections() {
        let sd = SectionData::new(TargetRing::Univariate(q()), vec![p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        assert!(matches!(check_truncation_iso(&sd, 1, 0), Err(TensorError::PreconditionNotGood(_))));
    }

    #[test]
    fn monoidality_on_quotients() {
        let sd = one_t();
        let s = sd.polyring();
        let m = quotient_by_var(s, 1);
        assert!(check_monoidality(&sd, &m, &m).unwrap());
        let o1 = FPGradedModule::free(s, vec![1]);
        assert!(check_monoidality(&sd, &o1, &o1).unwrap());
    }

    #[test]
    fn pythagorean_relation() {
        let s = PolyRing::projective(q(), 2);
        let sd = SectionData::new(
            TargetRing::Field(q()),
            [3, 4, 5].iter().map(|&v| TElem::Scalar(q().from_i64(v))).collect(),
        )
        .unwrap();
        let rel = s.var(0).mul(&s.var(0)).add(&s.var(1).mul(&s.var(1))).sub(&s.var(2).mul(&s.var(2)));
        assert!(verify_relation(&sd, &rel).unwrap());
        assert!(verify_relation(&sd, &s.zero(2)).unwrap());
        let ones = SectionData::new(TargetRing::Field(q()), vec![TElem::Scalar(q().one()); 3]).unwrap();
        let lin = s.var(0).add(&s.var(1)).sub(&s.var(2));
        assert!(!verify_relation(&ones, &lin).unwrap());
    }

    #[test]
    fn truncation_sequences_for_good_sections() {
        let sd = one_t();
        for m in 0..=3 {
            assert!(check_truncation_sequence(&sd, m).unwrap());
        }
        let mono = Monomial::new(vec![1, 1]);
        assert_eq!(sd.substitute(&sd.polyring().monomial(mono)).unwrap(), p(&[0, 1]));
    }
}
