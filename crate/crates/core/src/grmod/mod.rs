//! Finitely presented graded `S`-modules and graded maps between them.
//!
//! Grading convention: `S(d)_k = S_{d+k}`, so the generator of `S(d)` sits
//! in degree `-d` and a matrix entry from a summand `S(b)` to a summand
//! `S(a)` is homogeneous of degree `a - b`. All builders in the crate use
//! this single convention.
//!
//! Every verdict is computed degree by degree: a graded matrix realized in
//! degree `k` is a matrix over the coefficient field whose rows and columns
//! are the monomial bases of the summands.

mod exactness;

pub use exactness::{
    first_non_iso_degree, is_exact_window, is_iso_window, DegreeReport, DegreeWindow,
    ExactnessReport, PositionCheck,
};

use std::collections::HashMap;

use thiserror::Error;

use crate::exactlinalg::{Scalar, SparseMatrix};
use crate::polyring::{enumerate_monomials, HomPoly, Monomial, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrModError {
    #[error("entry ({row}, {col}) has degree {found}, expected {expected}")]
    DegreeMismatch {
        row: usize,
        col: usize,
        expected: i64,
        found: u32,
    },
    #[error("entry ({row}, {col}) is nonzero but its required degree {required} is negative")]
    NegativeDegreeEntry { row: usize, col: usize, required: i64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("objects live over different polynomial rings")]
    RingMismatch,
    #[error("map sends relation column {column} (degree {degree}) outside the target relations")]
    IllDefinedMap { column: usize, degree: i64 },
    #[error("maps {position} and {} are not composable", position + 1)]
    NotComposable { position: usize },
    #[error("composite into position {position} is nonzero in degree {degree}")]
    NotComplex { position: usize, degree: i64 },
    #[error("empty degree window [{lo}, {hi}]")]
    InvalidWindow { lo: i64, hi: i64 },
}

/// Direct sum of twists `S(d)`, one entry per summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedFree {
    twists: Vec<i64>,
}

impl GradedFree {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFree { twists }
    }

    pub fn zero() -> Self {
        GradedFree::default()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// `dim F_k = sum_d C(n+k+d, n)` over summands with `k + d >= 0`.
    pub fn component_dim(&self, ring: &PolyRing, k: i64) -> usize {
        self.twists.iter().map(|d| ring.dim(k + d)).sum()
    }

    /// Start of each summand's block in the degree-`k` basis.
    pub fn offsets(&self, ring: &PolyRing, k: i64) -> Vec<usize> {
        let mut acc = 0;
        self.twists
            .iter()
            .map(|d| {
                let o = acc;
                acc += ring.dim(k + d);
                o
            })
            .collect()
    }

    pub fn shift(&self, e: i64) -> GradedFree {
        GradedFree::new(self.twists.iter().map(|d| d + e).collect())
    }

    pub fn direct_sum(&self, other: &GradedFree) -> GradedFree {
        GradedFree::new(self.twists.iter().chain(&other.twists).copied().collect())
    }

    /// Degrees in which the generators live (`-d` for `S(d)`).
    pub fn generator_degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.twists.iter().map(|d| -d)
    }
}

/// Homogeneous matrix `source -> target`; rows index target summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: PolyRing,
    source: GradedFree,
    target: GradedFree,
    entries: Vec<HomPoly>,
}

impl GradedMatrix {
    /// Checks the degree invariant on every nonzero entry.
    pub fn new(
        ring: PolyRing,
        source: GradedFree,
        target: GradedFree,
        entries: Vec<Vec<HomPoly>>,
    ) -> Result<Self, GrModError> {
        if entries.len() != target.rank() {
            return Err(GrModError::ShapeMismatch(format!(
                "{} rows for a target of rank {}",
                entries.len(),
                target.rank()
            )));
        }
        let mut flat = Vec::with_capacity(target.rank() * source.rank());
        for (r, row) in entries.into_iter().enumerate() {
            if row.len() != source.rank() {
                return Err(GrModError::ShapeMismatch(format!(
                    "row {r} has {} entries for a source of rank {}",
                    row.len(),
                    source.rank()
                )));
            }
            for (c, p) in row.into_iter().enumerate() {
                if p.nvars() != ring.nvars {
                    return Err(GrModError::RingMismatch);
                }
                let required = target.twists[r] - source.twists[c];
                if p.is_zero() {
                    flat.push(HomPoly::zero(ring.nvars, required.max(0) as u32));
                    continue;
                }
                if required < 0 {
                    return Err(GrModError::NegativeDegreeEntry { row: r, col: c, required });
                }
                if p.degree() as i64 != required {
                    return Err(GrModError::DegreeMismatch {
                        row: r,
                        col: c,
                        expected: required,
                        found: p.degree(),
                    });
                }
                flat.push(p);
            }
        }
        Ok(GradedMatrix {
            ring,
            source,
            target,
            entries: flat,
        })
    }

    pub fn zero(ring: PolyRing, source: GradedFree, target: GradedFree) -> Self {
        let entries = target
            .twists
            .iter()
            .flat_map(|t| {
                source
                    .twists
                    .iter()
                    .map(move |s| HomPoly::zero(ring.nvars, (t - s).max(0) as u32))
            })
            .collect();
        GradedMatrix {
            ring,
            source,
            target,
            entries,
        }
    }

    pub fn identity(ring: PolyRing, free: GradedFree) -> Self {
        let mut m = GradedMatrix::zero(ring, free.clone(), free);
        for i in 0..m.target.rank() {
            m.entries[i * m.source.rank() + i] = ring.one();
        }
        m
    }

    /// Builds from columns, each given as `(source twist, entries)`.
    pub fn from_columns(
        ring: PolyRing,
        target: GradedFree,
        columns: Vec<(i64, Vec<HomPoly>)>,
    ) -> Result<Self, GrModError> {
        let source = GradedFree::new(columns.iter().map(|(t, _)| *t).collect());
        let rows = (0..target.rank())
            .map(|r| columns.iter().map(|(_, col)| col[r].clone()).collect())
            .collect();
        GradedMatrix::new(ring, source, target, rows)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn source(&self) -> &GradedFree {
        &self.source
    }

    pub fn target(&self) -> &GradedFree {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn get(&self, r: usize, c: usize) -> &HomPoly {
        &self.entries[r * self.cols() + c]
    }

    pub fn column(&self, c: usize) -> Vec<HomPoly> {
        (0..self.rows()).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn required_degree(&self, r: usize, c: usize) -> i64 {
        self.target.twists[r] - self.source.twists[c]
    }

    /// Replaces one entry, re-checking the degree invariant.
    pub fn with_entry(&self, r: usize, c: usize, p: HomPoly) -> Result<Self, GrModError> {
        let rows = (0..self.rows())
            .map(|i| {
                (0..self.cols())
                    .map(|j| if (i, j) == (r, c) { p.clone() } else { self.get(i, j).clone() })
                    .collect()
            })
            .collect();
        GradedMatrix::new(self.ring, self.source.clone(), self.target.clone(), rows)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HomPoly::is_zero)
    }

    /// `self ∘ rhs`, where `rhs: A -> B` and `self: B -> C`.
    pub fn compose(&self, rhs: &GradedMatrix) -> Result<GradedMatrix, GrModError> {
        if self.source != rhs.target {
            return Err(GrModError::ShapeMismatch(
                "inner free modules differ in composition".into(),
            ));
        }
        let rows = (0..self.rows())
            .map(|i| {
                (0..rhs.cols())
                    .map(|j| {
                        let deg = (self.target.twists[i] - rhs.source.twists[j]).max(0) as u32;
                        (0..self.cols()).fold(HomPoly::zero(self.ring.nvars, deg), |acc, k| {
                            let a = self.get(i, k);
                            let b = rhs.get(k, j);
                            if a.is_zero() || b.is_zero() {
                                acc
                            } else {
                                acc.add(&a.mul(b))
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        GradedMatrix::new(self.ring, rhs.source.clone(), self.target.clone(), rows)
    }

    /// `[self | other]` over a common target.
    pub fn hstack(&self, other: &GradedMatrix) -> Result<GradedMatrix, GrModError> {
        if self.target != other.target {
            return Err(GrModError::ShapeMismatch("hstack needs a common target".into()));
        }
        let source = self.source.direct_sum(&other.source);
        let rows = (0..self.rows())
            .map(|r| {
                (0..self.cols())
                    .map(|c| self.get(r, c).clone())
                    .chain((0..other.cols()).map(|c| other.get(r, c).clone()))
                    .collect()
            })
            .collect();
        GradedMatrix::new(self.ring, source, self.target.clone(), rows)
    }

    /// Block diagonal `self ⊕ other`.
    pub fn block_diag(&self, other: &GradedMatrix) -> GradedMatrix {
        let source = self.source.direct_sum(&other.source);
        let target = self.target.direct_sum(&other.target);
        let mut out = GradedMatrix::zero(self.ring, source, target);
        let cols = out.cols();
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                out.entries[r * cols + c] = self.get(r, c).clone();
            }
        }
        for r in 0..other.rows() {
            for c in 0..other.cols() {
                out.entries[(self.rows() + r) * cols + self.cols() + c] = other.get(r, c).clone();
            }
        }
        out
    }

    /// Same entries with all twists shifted by `e`.
    pub fn shift(&self, e: i64) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring,
            source: self.source.shift(e),
            target: self.target.shift(e),
            entries: self.entries.clone(),
        }
    }

    /// The degree-`k` component as a field matrix.
    pub fn realize(&self, k: i64) -> SparseMatrix {
        let mut cache = HashMap::new();
        self.realize_cached(k, &mut cache)
    }

    fn realize_cached(&self, k: i64, cache: &mut HashMap<i64, Vec<Monomial>>) -> SparseMatrix {
        let ring = &self.ring;
        let row_off = self.target.offsets(ring, k);
        let col_off = self.source.offsets(ring, k);
        let mut out = SparseMatrix::new(
            ring.field,
            self.target.component_dim(ring, k),
            self.source.component_dim(ring, k),
        );
        for (j, s) in self.source.twists.iter().enumerate() {
            let deg = k + s;
            if deg < 0 {
                continue;
            }
            let basis = cache
                .entry(deg)
                .or_insert_with(|| enumerate_monomials(ring.nvars, deg))
                .clone();
            for (iu, u) in basis.iter().enumerate() {
                let col = col_off[j] + iu;
                for (i, &off) in row_off.iter().enumerate() {
                    let p = self.get(i, j);
                    for (m, c) in p.terms() {
                        out.push(off + m.mul(u).index(), col, c.clone());
                    }
                }
            }
        }
        out
    }
}

/// Coordinates of a degree-`k` element of the free module `free`, given as
/// one homogeneous polynomial per summand (entry `j` of degree `k + d_j`).
pub fn realize_element(
    ring: &PolyRing,
    free: &GradedFree,
    k: i64,
    element: &[HomPoly],
) -> Vec<(usize, Scalar)> {
    assert_eq!(element.len(), free.rank(), "one component per summand");
    let off = free.offsets(ring, k);
    let mut out = Vec::new();
    for (j, p) in element.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        debug_assert_eq!(p.degree() as i64, k + free.twists()[j]);
        for (m, c) in p.terms() {
            out.push((off[j] + m.index(), c.clone()));
        }
    }
    out
}

/// Cokernel of a graded matrix `rels: R -> gens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPGradedModule {
    rels: GradedMatrix,
}

impl FPGradedModule {
    pub fn new(rels: GradedMatrix) -> Self {
        FPGradedModule { rels }
    }

    /// Free module with no relations.
    pub fn free(ring: PolyRing, twists: Vec<i64>) -> Self {
        let gens = GradedFree::new(twists);
        FPGradedModule {
            rels: GradedMatrix::zero(ring, GradedFree::zero(), gens),
        }
    }

    pub fn zero(ring: PolyRing) -> Self {
        FPGradedModule::free(ring, Vec::new())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.rels.ring
    }

    pub fn gens(&self) -> &GradedFree {
        &self.rels.target
    }

    pub fn rels(&self) -> &GradedMatrix {
        &self.rels
    }

    pub fn is_free(&self) -> bool {
        self.rels.cols() == 0
    }

    pub fn relations_in_degree(&self, k: i64) -> SparseMatrix {
        self.rels.realize(k)
    }

    /// `dim M_k = dim (gens)_k - rank (rels)_k`.
    pub fn component_dim(&self, k: i64) -> usize {
        self.gens().component_dim(self.ring(), k) - self.relations_in_degree(k).rank()
    }

    /// Whether a degree-`k` element of the generators vanishes in `M_k`.
    pub fn is_zero_element(&self, k: i64, element: &[HomPoly]) -> bool {
        let coords = realize_element(self.ring(), self.gens(), k, element);
        if coords.is_empty() {
            return true;
        }
        self.relations_in_degree(k).spans(&coords)
    }

    pub fn twist(&self, e: i64) -> FPGradedModule {
        FPGradedModule::new(self.rels.shift(e))
    }

    /// Generators are pairs `(i, j)`, `i`-major; relations are
    /// `rels_m ⊗ gens_n` followed by `gens_m ⊗ rels_n`.
    pub fn tensor(&self, other: &FPGradedModule) -> Result<FPGradedModule, GrModError> {
        if self.ring() != other.ring() {
            return Err(GrModError::RingMismatch);
        }
        let ring = *self.ring();
        let (gm, gn) = (self.gens().twists(), other.gens().twists());
        let gens = GradedFree::new(
            gm.iter()
                .flat_map(|a| gn.iter().map(move |b| a + b))
                .collect(),
        );
        let rows = gens.rank();
        let pos = |i: usize, j: usize| i * gn.len() + j;
        let mut columns = Vec::new();
        for c in 0..self.rels.cols() {
            let rt = self.rels.source.twists[c];
            for (j, b) in gn.iter().enumerate() {
                let mut col: Vec<HomPoly> = (0..rows).map(|_| ring.zero(0)).collect();
                for i in 0..gm.len() {
                    col[pos(i, j)] = self.rels.get(i, c).clone();
                }
                columns.push((rt + b, col));
            }
        }
        for (i, a) in gm.iter().enumerate() {
            for c in 0..other.rels.cols() {
                let rt = other.rels.source.twists[c];
                let mut col: Vec<HomPoly> = (0..rows).map(|_| ring.zero(0)).collect();
                for j in 0..gn.len() {
                    col[pos(i, j)] = other.rels.get(j, c).clone();
                }
                columns.push((a + rt, col));
            }
        }
        Ok(FPGradedModule::new(GradedMatrix::from_columns(
            ring, gens, columns,
        )?))
    }

    pub fn direct_sum(&self, other: &FPGradedModule) -> Result<FPGradedModule, GrModError> {
        if self.ring() != other.ring() {
            return Err(GrModError::RingMismatch);
        }
        Ok(FPGradedModule::new(self.rels.block_diag(&other.rels)))
    }

    /// `(k, dim M_k)` for every degree of the window.
    pub fn hilbert_table(&self, w: DegreeWindow) -> Vec<(i64, usize)> {
        w.degrees().map(|k| (k, self.component_dim(k))).collect()
    }

    /// `[min generator degree - 1, max generator degree + 6]`.
    pub fn default_window(&self) -> DegreeWindow {
        DegreeWindow::covering(self.gens().generator_degrees())
    }
}

/// Graded map between finitely presented modules, given on generators.
/// Well-definedness is verified at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModuleMap {
    source: FPGradedModule,
    target: FPGradedModule,
    matrix: GradedMatrix,
}

impl GradedModuleMap {
    pub fn new(
        source: FPGradedModule,
        target: FPGradedModule,
        matrix: GradedMatrix,
    ) -> Result<Self, GrModError> {
        if source.ring() != target.ring() || matrix.ring() != source.ring() {
            return Err(GrModError::RingMismatch);
        }
        if matrix.source() != source.gens() || matrix.target() != target.gens() {
            return Err(GrModError::ShapeMismatch(
                "map matrix does not go between the generator modules".into(),
            ));
        }
        if let Some((column, degree)) = first_ill_defined_column(&source, &target, &matrix)? {
            return Err(GrModError::IllDefinedMap { column, degree });
        }
        Ok(GradedModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(m: &FPGradedModule) -> Self {
        GradedModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: GradedMatrix::identity(*m.ring(), m.gens().clone()),
        }
    }

    pub fn zero(source: &FPGradedModule, target: &FPGradedModule) -> Self {
        GradedModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: GradedMatrix::zero(*source.ring(), source.gens().clone(), target.gens().clone()),
        }
    }

    pub fn source(&self) -> &FPGradedModule {
        &self.source
    }

    pub fn target(&self) -> &FPGradedModule {
        &self.target
    }

    pub fn matrix(&self) -> &GradedMatrix {
        &self.matrix
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &GradedModuleMap) -> Result<GradedModuleMap, GrModError> {
        if rhs.target != self.source {
            return Err(GrModError::NotComposable { position: 0 });
        }
        Ok(GradedModuleMap {
            source: rhs.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.compose(&rhs.matrix)?,
        })
    }

    /// Dimension of the image in degree `k`:
    /// `rank [F_k | R_k] - rank R_k` with `R` the target relations.
    pub fn image_dim(&self, k: i64) -> usize {
        let rels = self.target.relations_in_degree(k);
        let combined = rels.hstack(&self.matrix.realize(k));
        combined.rank() - rels.rank()
    }
}

/// First relation column of `source` whose image leaves the span of the
/// target relations, with the degree where it was detected.
fn first_ill_defined_column(
    source: &FPGradedModule,
    target: &FPGradedModule,
    matrix: &GradedMatrix,
) -> Result<Option<(usize, i64)>, GrModError> {
    let srels = source.rels();
    if srels.cols() == 0 {
        return Ok(None);
    }
    let images = matrix.compose(srels)?;
    let ring = *source.ring();
    let mut by_degree: std::collections::BTreeMap<i64, Vec<usize>> = Default::default();
    for c in 0..srels.cols() {
        by_degree.entry(-srels.source().twists()[c]).or_default().push(c);
    }
    let mut failures = Vec::new();
    for (k, cols) in by_degree {
        let trels = target.relations_in_degree(k);
        let coords: Vec<_> = cols
            .iter()
            .map(|&c| realize_element(&ring, target.gens(), k, &images.column(c)))
            .collect();
        let mut all = trels.clone();
        for v in &coords {
            all.push_column(v.iter().cloned());
        }
        let base = trels.rank();
        if all.rank() == base {
            continue;
        }
        for (c, v) in cols.iter().zip(&coords) {
            if !v.is_empty() && !trels.spans(v) {
                failures.push((*c, k));
                break;
            }
        }
    }
    Ok(failures.into_iter().min())
}

/// Cokernel of a well-defined map: target generators with the target
/// relations followed by the map's columns.
pub fn cokernel(f: &GradedModuleMap) -> FPGradedModule {
    let rels = f
        .target
        .rels
        .hstack(&f.matrix)
        .expect("map matrix shares the target generators");
    FPGradedModule::new(rels)
}

pub fn component_dim(m: &FPGradedModule, k: i64) -> usize {
    m.component_dim(k)
}

pub fn twist(m: &FPGradedModule, e: i64) -> FPGradedModule {
    m.twist(e)
}

pub fn tensor(m: &FPGradedModule, n: &FPGradedModule) -> Result<FPGradedModule, GrModError> {
    m.tensor(n)
}

pub fn direct_sum(m: &FPGradedModule, n: &FPGradedModule) -> Result<FPGradedModule, GrModError> {
    m.direct_sum(n)
}

pub fn hilbert_table(m: &FPGradedModule, w: DegreeWindow) -> Vec<(i64, usize)> {
    m.hilbert_table(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::Field;

    fn ring1() -> PolyRing {
        PolyRing::projective(Field::Rationals, 1)
    }

    /// `coker(x_i: S(-1) -> S)`.
    fn quotient_by_var(ring: PolyRing, i: usize) -> FPGradedModule {
        let rels = GradedMatrix::new(
            ring,
            GradedFree::new(vec![-1]),
            GradedFree::new(vec![0]),
            vec![vec![ring.var(i)]],
        )
        .unwrap();
        FPGradedModule::new(rels)
    }

    #[test]
    fn component_dims() {
        let s = ring1();
        assert_eq!(FPGradedModule::free(s, vec![1]).component_dim(0), 2);
        assert_eq!(FPGradedModule::free(s, vec![2]).component_dim(-3), 0);
        assert_eq!(quotient_by_var(s, 0).component_dim(3), 1);
    }

    #[test]
    fn degree_invariant_violations() {
        let s = ring1();
        let bad = GradedMatrix::new(
            s,
            GradedFree::new(vec![0]),
            GradedFree::new(vec![0]),
            vec![vec![s.var(0)]],
        );
        assert_eq!(
            bad,
            Err(GrModError::DegreeMismatch { row: 0, col: 0, expected: 0, found: 1 })
        );
        let neg = GradedMatrix::new(
            s,
            GradedFree::new(vec![1]),
            GradedFree::new(vec![0]),
            vec![vec![s.one()]],
        );
        assert_eq!(
            neg,
            Err(GrModError::NegativeDegreeEntry { row: 0, col: 0, required: -1 })
        );
    }

    #[test]
    fn twist_shifts_dims() {
        let m = quotient_by_var(ring1(), 1);
        assert_eq!(m.twist(0), m);
        assert_eq!(m.twist(2).twist(-3), m.twist(-1));
        for k in -3..4 {
            assert_eq!(m.twist(2).component_dim(k), m.component_dim(k + 2));
        }
        let f = FPGradedModule::free(ring1(), vec![3]);
        assert_eq!(f.twist(-1), FPGradedModule::free(ring1(), vec![2]));
    }

    #[test]
    fn tensor_of_quotients() {
        let s = ring1();
        let m = quotient_by_var(s, 0);
        let mm = m.tensor(&m).unwrap();
        for k in 0..=6 {
            assert_eq!(mm.component_dim(k), m.component_dim(k));
        }
        let a = FPGradedModule::free(s, vec![2]);
        let b = FPGradedModule::free(s, vec![-5]);
        assert_eq!(a.tensor(&b).unwrap(), FPGradedModule::free(s, vec![-3]));
        let unit = FPGradedModule::free(s, vec![0]);
        assert_eq!(m.tensor(&unit).unwrap(), m);
    }

    #[test]
    fn direct_sums() {
        let s = ring1();
        let a = FPGradedModule::free(s, vec![1]);
        let b = FPGradedModule::free(s, vec![-2]);
        assert_eq!(a.direct_sum(&b).unwrap().gens().twists(), &[1, -2]);
        let m = quotient_by_var(s, 1);
        assert_eq!(m.direct_sum(&FPGradedModule::zero(s)).unwrap(), m);
    }

    #[test]
    fn cokernels() {
        let s = ring1();
        let x0 = GradedModuleMap::new(
            FPGradedModule::free(s, vec![-1]),
            FPGradedModule::free(s, vec![0]),
            GradedMatrix::new(s, GradedFree::new(vec![-1]), GradedFree::new(vec![0]), vec![vec![s.var(0)]])
                .unwrap(),
        )
        .unwrap();
        assert_eq!(cokernel(&x0), quotient_by_var(s, 0));

        let m = quotient_by_var(s, 1);
        let id = GradedModuleMap::identity(&m);
        let w = DegreeWindow::new(-2, 6).unwrap();
        assert!(cokernel(&id).hilbert_table(w).iter().all(|(_, d)| *d == 0));

        let from_zero = GradedModuleMap::zero(&FPGradedModule::zero(s), &m);
        assert_eq!(cokernel(&from_zero), m);
    }

    #[test]
    fn ill_defined_map_rejected() {
        let s = ring1();
        // S/(x0) -> S/(x1) by the identity on generators is not well defined
        let src = quotient_by_var(s, 0);
        let tgt = quotient_by_var(s, 1);
        let err = GradedModuleMap::new(
            src,
            tgt,
            GradedMatrix::identity(s, GradedFree::new(vec![0])),
        )
        .unwrap_err();
        assert_eq!(err, GrModError::IllDefinedMap { column: 0, degree: 1 });
    }

    #[test]
    fn hilbert_of_s() {
        let s = FPGradedModule::free(ring1(), vec![0]);
        let table = s.hilbert_table(DegreeWindow::new(0, 3).unwrap());
        assert_eq!(table, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    }
}
