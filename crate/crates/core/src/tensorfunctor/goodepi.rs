//! The good-epimorphism test for `(s_0, .., s_n)` and the chart description
//! of the morphism to projective space it classifies.

use crate::exactlinalg::{column_span_equal, CommRing, DenseMatrix, UPoly};

use super::target::{kernel, SpanTester, TElem, TMatrix, TargetRing};
use super::{SectionData, TensorError};

/// Why `1^{n+1} -> L` is or is not an epimorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpiCertificate {
    /// `sum a_i s_i = 1`.
    Bezout(Vec<TElem>),
    /// The sections generate the proper ideal `(gcd)` of `F[t]`.
    NonUnitGcd(UPoly),
    /// Over a field: every section vanishes.
    ZeroSections,
    /// Over a finite-dimensional algebra: the ideal of the sections has this
    /// dimension, short of the whole ring.
    ProperIdeal { dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodEpiVerdict {
    pub epi: bool,
    pub certificate: EpiCertificate,
    pub middle_exact: bool,
    /// A relation among the sections outside the span of the Koszul
    /// relations.
    pub syzygy: Option<Vec<TElem>>,
}

impl GoodEpiVerdict {
    pub fn good(&self) -> bool {
        self.epi && self.middle_exact
    }

    pub fn bezout(&self) -> Option<&[TElem]> {
        match &self.certificate {
            EpiCertificate::Bezout(c) => Some(c),
            _ => None,
        }
    }
}

/// Checks that `1^{C(n+1,2)} -> 1^{n+1} -> L -> 0` is a cokernel diagram:
/// the sections generate the unit ideal, and every relation among them is a
/// combination of the Koszul relations `s_i e_j - s_j e_i`.
pub fn check_good_epi(sd: &SectionData) -> GoodEpiVerdict {
    let certificate = epi_certificate(sd);
    let epi = matches!(certificate, EpiCertificate::Bezout(_));
    let row = sd.section_row();
    let koszul = sd.koszul_matrix();
    let kernel = kernel(&row);
    let middle_exact = match sd.ring() {
        TargetRing::Univariate(_) => column_span_equal(&kernel.to_poly(), &koszul.to_poly()),
        _ => {
            let tester = SpanTester::new(&koszul);
            (0..kernel.cols()).all(|c| tester.contains(&kernel.column(c)))
        }
    };
    let syzygy = if middle_exact {
        None
    } else {
        let tester = SpanTester::new(&koszul);
        (0..kernel.cols())
            .map(|c| kernel.column(c))
            .find(|v| !tester.contains(v))
    };
    GoodEpiVerdict {
        epi,
        certificate,
        middle_exact,
        syzygy,
    }
}

fn epi_certificate(sd: &SectionData) -> EpiCertificate {
    let ring = sd.ring();
    let s = sd.sections();
    match ring {
        TargetRing::Field(_) => match s.iter().position(|x| !ring.is_zero(x)) {
            Some(i) => {
                let mut coeffs = vec![ring.zero(); s.len()];
                let TElem::Scalar(c) = &s[i] else { unreachable!() };
                coeffs[i] = TElem::Scalar(c.inv());
                EpiCertificate::Bezout(coeffs)
            }
            None => EpiCertificate::ZeroSections,
        },
        TargetRing::Univariate(field) => {
            let polys: Vec<UPoly> = s
                .iter()
                .map(|x| match x {
                    TElem::Poly(p) => p.clone(),
                    _ => unreachable!("sections checked at construction"),
                })
                .collect();
            // g = sum coeffs[i] * s_i, maintained through iterated xgcd.
            let mut g = UPoly::zero(*field);
            let mut coeffs: Vec<UPoly> = Vec::with_capacity(polys.len());
            for p in &polys {
                let (h, u, v) = g.xgcd(p);
                for c in coeffs.iter_mut() {
                    *c = c.mul(&u);
                }
                coeffs.push(v);
                g = h;
            }
            if g.is_one() {
                EpiCertificate::Bezout(coeffs.into_iter().map(TElem::Poly).collect())
            } else {
                EpiCertificate::NonUnitGcd(g)
            }
        }
        TargetRing::FinDim(alg) => {
            let row = sd.section_row();
            let lin: DenseMatrix = row.linearize();
            match lin.solve(alg.unit()) {
                Some(x) => EpiCertificate::Bezout(
                    x.chunks(alg.dim()).map(|c| ring.from_coords(c)).collect(),
                ),
                None => EpiCertificate::ProperIdeal { dim: lin.rank() },
            }
        }
    }
}

/// One affine chart `{s_i invertible}` of the classified morphism, with the
/// coordinates `s_j / s_i` kept as `(numerator, denominator)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub index: usize,
    pub coordinates: Vec<(TElem, TElem)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartMap {
    pub charts: Vec<Chart>,
    /// Coefficients `a_i` with `sum a_i s_i = 1`; charts are the indices
    /// with `a_i != 0`, so their loci cover the target.
    pub cover_certificate: Vec<TElem>,
}

impl ChartMap {
    /// Recomputes `sum a_i s_i` and compares it with `1`.
    pub fn verify_cover(&self, sd: &SectionData) -> bool {
        let ring = sd.ring();
        let total = self
            .cover_certificate
            .iter()
            .zip(sd.sections())
            .fold(ring.zero(), |acc, (a, s)| ring.add(&acc, &ring.mul(a, s)));
        total == ring.one()
    }

    /// Homogeneous coordinates of the single point, for a field target.
    pub fn point(&self, sd: &SectionData) -> Option<Vec<TElem>> {
        matches!(sd.ring(), TargetRing::Field(_)).then(|| sd.sections().to_vec())
    }
}

/// The morphism to projective space classified by a good section tuple.
pub fn reconstruct_morphism(sd: &SectionData) -> Result<ChartMap, TensorError> {
    let verdict = check_good_epi(sd);
    if !verdict.good() {
        return Err(TensorError::PreconditionNotGood(describe_failure(&verdict)));
    }
    let cover = verdict.bezout().expect("good implies epi").to_vec();
    let ring = sd.ring();
    let charts = cover
        .iter()
        .enumerate()
        .filter(|(_, a)| !ring.is_zero(a))
        .map(|(i, _)| Chart {
            index: i,
            coordinates: sd
                .sections()
                .iter()
                .map(|sj| (sj.clone(), sd.sections()[i].clone()))
                .collect(),
        })
        .collect();
    Ok(ChartMap {
        charts,
        cover_certificate: cover,
    })
}

pub(crate) fn describe_failure(v: &GoodEpiVerdict) -> String {
    match &v.certificate {
        EpiCertificate::NonUnitGcd(g) => format!("sections generate ({g})"),
        EpiCertificate::ZeroSections => "all sections vanish".into(),
        EpiCertificate::ProperIdeal { dim } => {
            format!("sections generate an ideal of dimension {dim}")
        }
        EpiCertificate::Bezout(_) => "the Koszul relations miss a syzygy".into(),
    }
}

/// The `1 x (n+1)` row `(s_0 .. s_n)`.
pub(crate) fn section_row(ring: &TargetRing, s: &[TElem]) -> TMatrix {
    TMatrix::from_rows(ring.clone(), vec![s.to_vec()])
}

/// Columns `e_{i,j} |-> s_i e_j - s_j e_i` for `i < j`, lexicographic.
pub(crate) fn koszul_matrix(ring: &TargetRing, s: &[TElem]) -> TMatrix {
    let n = s.len();
    let mut cols = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut col = vec![ring.zero(); n];
            col[j] = s[i].clone();
            col[i] = ring.neg(&s[j]);
            cols.push(col);
        }
    }
    TMatrix::from_columns(ring.clone(), n, cols)
}
