//! Affine target rings and finitely presented modules over them.
//!
//! Three kinds of target are supported: a field `F`, the principal ideal
//! domain `F[t]`, and a commutative finite-dimensional `F`-algebra given by
//! structure constants. Module questions reduce to two primitives, span
//! membership and kernel generators:
//!
//! - over `F[t]` both come from the Smith normal form;
//! - over a field or a finite-dimensional algebra `T` of dimension `D`, a
//!   matrix over `T` is linearized to a matrix over `F` whose column `(j, k)`
//!   is `b_k` times column `j`, for the basis `b_0..b_{D-1}` of `T` (for a
//!   field, `D = 1` and `b_0 = 1`). The `T`-span of the columns is the
//!   `F`-span of the linearized columns, and the `F`-kernel of the
//!   linearization, regrouped into elements of `T`, generates the `T`-kernel.

use std::fmt;
use std::sync::Arc;

use crate::exactlinalg::{
    invariant_factors, kernel_generators, CommRing, ColumnSpan, DenseMatrix, Field, PolyMatrix,
    Scalar, UPoly,
};

use super::TensorError;

/// A commutative, associative, unital algebra of finite dimension over a
/// field, with `b_i * b_j = sum_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: Field,
    dim: usize,
    constants: Vec<Scalar>,
    unit: Vec<Scalar>,
}

impl FinDimAlgebra {
    /// `constants` is the cube `c[i][j][k]` flattened with `k` fastest.
    pub fn new(
        field: Field,
        dim: usize,
        constants: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Self, TensorError> {
        if dim == 0 {
            return Err(TensorError::InvalidAlgebra("dimension must be positive".into()));
        }
        if constants.len() != dim * dim * dim || unit.len() != dim {
            return Err(TensorError::InvalidAlgebra(format!(
                "expected {} structure constants and {} unit coordinates, got {} and {}",
                dim * dim * dim,
                dim,
                constants.len(),
                unit.len()
            )));
        }
        if !constants.iter().chain(&unit).all(|c| field.contains(c)) {
            return Err(TensorError::InvalidAlgebra(format!(
                "coefficients must lie in {field}"
            )));
        }
        let alg = FinDimAlgebra {
            field,
            dim,
            constants,
            unit,
        };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if alg.constant(i, j, k) != alg.constant(j, i, k) {
                        return Err(TensorError::InvalidAlgebra(format!(
                            "b{i}*b{j} != b{j}*b{i}"
                        )));
                    }
                }
            }
        }
        for j in 0..dim {
            let bj = alg.basis(j);
            if alg.mul(&alg.unit, &bj) != bj {
                return Err(TensorError::InvalidAlgebra(format!(
                    "unit does not fix b{j}"
                )));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let ij = alg.mul(&alg.basis(i), &alg.basis(j));
                for l in 0..dim {
                    let left = alg.mul(&ij, &alg.basis(l));
                    let right = alg.mul(&alg.basis(i), &alg.mul(&alg.basis(j), &alg.basis(l)));
                    if left != right {
                        return Err(TensorError::InvalidAlgebra(format!(
                            "(b{i}*b{j})*b{l} != b{i}*(b{j}*b{l})"
                        )));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// `F[t]/(t^dim)` with basis `1, t, .., t^(dim-1)`.
    pub fn truncated_polynomials(field: Field, dim: usize) -> Result<Self, TensorError> {
        let mut constants = vec![field.zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if i + j < dim {
                    constants[(i * dim + j) * dim + i + j] = field.one();
                }
            }
        }
        let mut unit = vec![field.zero(); dim];
        if dim > 0 {
            unit[0] = field.one();
        }
        FinDimAlgebra::new(field, dim, constants, unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[k] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o = &*o + &(&p * c);
                    }
                }
            }
        }
        out
    }
}

/// An affine target ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetRing {
    Field(Field),
    /// `F[t]`.
    Univariate(Field),
    FinDim(Arc<FinDimAlgebra>),
}

/// An element of a [`TargetRing`]: a field scalar, a polynomial in `t`, or
/// coordinates in the basis of a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TElem {
    Scalar(Scalar),
    Poly(UPoly),
    Vector(Vec<Scalar>),
}

impl fmt::Display for TElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TElem::Scalar(s) => write!(f, "{s}"),
            TElem::Poly(p) => write!(f, "{p}"),
            TElem::Vector(v) => {
                write!(f, "[")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Display for TargetRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetRing::Field(k) => write!(f, "{k}"),
            TargetRing::Univariate(k) => write!(f, "{k}[t]"),
            TargetRing::FinDim(a) => write!(f, "{}-dimensional algebra over {}", a.dim, a.field),
        }
    }
}

impl TargetRing {
    pub fn algebra(alg: FinDimAlgebra) -> Self {
        TargetRing::FinDim(Arc::new(alg))
    }

    pub fn field(&self) -> Field {
        match self {
            TargetRing::Field(k) | TargetRing::Univariate(k) => *k,
            TargetRing::FinDim(a) => a.field,
        }
    }

    /// Dimension over the coefficient field, if finite.
    pub fn linear_dim(&self) -> Option<usize> {
        match self {
            TargetRing::Field(_) => Some(1),
            TargetRing::Univariate(_) => None,
            TargetRing::FinDim(a) => Some(a.dim),
        }
    }

    pub fn from_i64(&self, v: i64) -> TElem {
        self.from_scalar(&self.field().from_i64(v))
    }

    /// The variable `t` of a univariate target.
    pub fn t(&self) -> Option<TElem> {
        match self {
            TargetRing::Univariate(k) => Some(TElem::Poly(UPoly::t(*k))),
            _ => None,
        }
    }

    pub fn contains(&self, e: &TElem) -> bool {
        match (self, e) {
            (TargetRing::Field(k), TElem::Scalar(s)) => k.contains(s),
            (TargetRing::Univariate(k), TElem::Poly(p)) => p.field() == *k,
            (TargetRing::FinDim(a), TElem::Vector(v)) => {
                v.len() == a.dim && v.iter().all(|c| a.field.contains(c))
            }
            _ => false,
        }
    }

    /// Coordinates of `e` over the coefficient field (finite-dimensional
    /// targets only).
    pub fn coords(&self, e: &TElem) -> Vec<Scalar> {
        match e {
            TElem::Scalar(s) => vec![s.clone()],
            TElem::Vector(v) => v.clone(),
            TElem::Poly(_) => panic!("F[t] has no finite coordinates"),
        }
    }

    pub fn from_coords(&self, c: &[Scalar]) -> TElem {
        match self {
            TargetRing::Field(_) => TElem::Scalar(c[0].clone()),
            TargetRing::FinDim(_) => TElem::Vector(c.to_vec()),
            TargetRing::Univariate(_) => panic!("F[t] has no finite coordinates"),
        }
    }

    /// The `k`-th basis element over the coefficient field.
    pub fn basis_elem(&self, k: usize) -> TElem {
        match self {
            TargetRing::Field(f) => {
                assert_eq!(k, 0);
                TElem::Scalar(f.one())
            }
            TargetRing::FinDim(a) => TElem::Vector(a.basis(k)),
            TargetRing::Univariate(f) => {
                let mut c = vec![f.zero(); k + 1];
                c[k] = f.one();
                TElem::Poly(UPoly::new(*f, c))
            }
        }
    }

    pub fn is_unit(&self, e: &TElem) -> bool {
        match (self, e) {
            (TargetRing::Field(_), TElem::Scalar(s)) => !s.is_zero(),
            (TargetRing::Univariate(_), TElem::Poly(p)) => p.is_unit(),
            (TargetRing::FinDim(a), TElem::Vector(_)) => {
                let row = TMatrix::from_rows(self.clone(), vec![vec![e.clone()]]);
                row.linearize().rank() == a.dim
            }
            _ => panic!("element {e} does not belong to {self}"),
        }
    }

    fn mismatch(&self, e: &TElem) -> ! {
        panic!("element {e} does not belong to {self}")
    }
}

impl CommRing for TargetRing {
    type Elem = TElem;

    fn base_field(&self) -> Field {
        self.field()
    }

    fn zero(&self) -> TElem {
        match self {
            TargetRing::Field(k) => TElem::Scalar(k.zero()),
            TargetRing::Univariate(k) => TElem::Poly(UPoly::zero(*k)),
            TargetRing::FinDim(a) => TElem::Vector(vec![a.field.zero(); a.dim]),
        }
    }

    fn one(&self) -> TElem {
        match self {
            TargetRing::FinDim(a) => TElem::Vector(a.unit.clone()),
            _ => self.from_scalar(&self.field().one()),
        }
    }

    fn add(&self, a: &TElem, b: &TElem) -> TElem {
        match (a, b) {
            (TElem::Scalar(x), TElem::Scalar(y)) => TElem::Scalar(x + y),
            (TElem::Poly(x), TElem::Poly(y)) => TElem::Poly(x.add(y)),
            (TElem::Vector(x), TElem::Vector(y)) => {
                TElem::Vector(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            _ => self.mismatch(b),
        }
    }

    fn sub(&self, a: &TElem, b: &TElem) -> TElem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &TElem) -> TElem {
        match a {
            TElem::Scalar(x) => TElem::Scalar(-x),
            TElem::Poly(x) => TElem::Poly(x.neg()),
            TElem::Vector(x) => TElem::Vector(x.iter().map(|c| -c).collect()),
        }
    }

    fn mul(&self, a: &TElem, b: &TElem) -> TElem {
        match (self, a, b) {
            (_, TElem::Scalar(x), TElem::Scalar(y)) => TElem::Scalar(x * y),
            (_, TElem::Poly(x), TElem::Poly(y)) => TElem::Poly(x.mul(y)),
            (TargetRing::FinDim(alg), TElem::Vector(x), TElem::Vector(y)) => {
                TElem::Vector(alg.mul(x, y))
            }
            _ => self.mismatch(b),
        }
    }

    fn is_zero(&self, a: &TElem) -> bool {
        match a {
            TElem::Scalar(x) => x.is_zero(),
            TElem::Poly(x) => x.is_zero(),
            TElem::Vector(x) => x.iter().all(Scalar::is_zero),
        }
    }

    fn from_scalar(&self, s: &Scalar) -> TElem {
        match self {
            TargetRing::Field(_) => TElem::Scalar(s.clone()),
            TargetRing::Univariate(_) => TElem::Poly(UPoly::constant(s.clone())),
            TargetRing::FinDim(a) => TElem::Vector(a.unit.iter().map(|u| u * s).collect()),
        }
    }
}

/// A matrix over a target ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMatrix {
    ring: TargetRing,
    rows: usize,
    cols: usize,
    entries: Vec<TElem>,
}

impl TMatrix {
    pub fn zeros(ring: TargetRing, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        TMatrix {
            ring,
            rows,
            cols,
            entries: vec![z; rows * cols],
        }
    }

    pub fn identity(ring: TargetRing, n: usize) -> Self {
        let mut m = TMatrix::zeros(ring.clone(), n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: TargetRing, rows: Vec<Vec<TElem>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        TMatrix {
            ring,
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(ring: TargetRing, rows: usize, cols: Vec<Vec<TElem>>) -> Self {
        let mut m = TMatrix::zeros(ring, rows, cols.len());
        for (c, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn ring(&self) -> &TargetRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &TElem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: TElem) {
        debug_assert!(self.ring.contains(&v));
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<TElem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<TElem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn mul(&self, rhs: &TMatrix) -> TMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let mut out = TMatrix::zeros(self.ring.clone(), self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if self.ring.is_zero(a) {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if self.ring.is_zero(b) {
                        continue;
                    }
                    let v = self.ring.add(out.get(r, c), &self.ring.mul(a, b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[TElem]) -> Vec<TElem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(self.ring.zero(), |acc, c| {
                    self.ring.add(&acc, &self.ring.mul(self.get(r, c), &v[c]))
                })
            })
            .collect()
    }

    pub fn hstack(&self, other: &TMatrix) -> TMatrix {
        assert_eq!(self.rows, other.rows, "row counts");
        let mut cols = self.columns();
        cols.extend(other.columns());
        TMatrix::from_columns(self.ring.clone(), self.rows, cols)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &TMatrix) -> TMatrix {
        let mut out = TMatrix::zeros(
            self.ring.clone(),
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if self.ring.is_zero(a) {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let v = self.ring.mul(a, other.get(r2, c2));
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, v);
                    }
                }
            }
        }
        out
    }

    /// Applies `f` entrywise, landing in `ring`.
    pub fn map_entries(&self, ring: TargetRing, f: impl Fn(&TElem) -> TElem) -> TMatrix {
        TMatrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// The matrix over `F[t]` (univariate targets only).
    pub fn to_poly(&self) -> PolyMatrix {
        let field = self.ring.field();
        let rows = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| match self.get(r, c) {
                        TElem::Poly(p) => p.clone(),
                        e => panic!("{e} is not a polynomial"),
                    })
                    .collect()
            })
            .collect();
        if self.rows == 0 {
            return PolyMatrix::zeros(field, 0, self.cols);
        }
        PolyMatrix::from_rows(field, rows)
    }

    fn from_poly(ring: TargetRing, m: &PolyMatrix) -> TMatrix {
        let cols = (0..m.cols())
            .map(|c| m.column(c).into_iter().map(TElem::Poly).collect())
            .collect();
        TMatrix::from_columns(ring, m.rows(), cols)
    }

    /// The `F`-linear matrix of the map `T^cols -> T^rows` (finite-dimensional
    /// targets only); column `(j, k)` sits at `j * D + k`.
    pub fn linearize(&self) -> DenseMatrix {
        let d = self.ring.linear_dim().expect("finite-dimensional target");
        let field = self.ring.field();
        let mut out = DenseMatrix::zeros(field, self.rows * d, self.cols * d);
        for c in 0..self.cols {
            for k in 0..d {
                let b = self.ring.basis_elem(k);
                for r in 0..self.rows {
                    let e = self.get(r, c);
                    if self.ring.is_zero(e) {
                        continue;
                    }
                    let prod = self.ring.coords(&self.ring.mul(&b, e));
                    for (i, v) in prod.into_iter().enumerate() {
                        out.set(r * d + i, c * d + k, v);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for TMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Precomputed membership test for the `T`-span of the columns of a matrix.
#[derive(Clone, Debug)]
pub enum SpanTester {
    Pid(ColumnSpan),
    /// Reduced echelon basis of the linearized column space, with the pivot
    /// coordinate of each basis vector.
    Linear {
        ring: TargetRing,
        basis: Vec<(usize, Vec<Scalar>)>,
    },
}

impl SpanTester {
    pub fn new(b: &TMatrix) -> Self {
        match b.ring() {
            TargetRing::Univariate(_) => SpanTester::Pid(ColumnSpan::new(&b.to_poly())),
            ring => {
                let mut t = b.linearize().transpose();
                let pivots = t.rref();
                let basis = pivots
                    .iter()
                    .enumerate()
                    .map(|(r, &p)| (p, (0..t.cols()).map(|c| t.get(r, c).clone()).collect()))
                    .collect();
                SpanTester::Linear {
                    ring: ring.clone(),
                    basis,
                }
            }
        }
    }

    pub fn contains(&self, v: &[TElem]) -> bool {
        match self {
            SpanTester::Pid(span) => {
                let polys: Vec<UPoly> = v
                    .iter()
                    .map(|e| match e {
                        TElem::Poly(p) => p.clone(),
                        e => panic!("{e} is not a polynomial"),
                    })
                    .collect();
                span.contains(&polys)
            }
            SpanTester::Linear { ring, basis } => {
                let mut w: Vec<Scalar> = v.iter().flat_map(|e| ring.coords(e)).collect();
                for (p, row) in basis {
                    let f = w[*p].clone();
                    if f.is_zero() {
                        continue;
                    }
                    for (wi, ri) in w.iter_mut().zip(row) {
                        if !ri.is_zero() {
                            *wi = &*wi - &(&f * ri);
                        }
                    }
                }
                w.iter().all(Scalar::is_zero)
            }
        }
    }
}

/// Whether `v` lies in the `T`-span of the columns of `b`.
pub fn span_contains(b: &TMatrix, v: &[TElem]) -> bool {
    SpanTester::new(b).contains(v)
}

/// Columns generating the right kernel of `a` as a `T`-module.
pub fn kernel(a: &TMatrix) -> TMatrix {
    let ring = a.ring().clone();
    match &ring {
        TargetRing::Univariate(_) => TMatrix::from_poly(ring.clone(), &kernel_generators(&a.to_poly())),
        _ => {
            let d = ring.linear_dim().expect("finite-dimensional target");
            let basis = a.linearize().kernel_basis();
            let cols = (0..basis.cols())
                .map(|k| {
                    let v = basis.column(k);
                    v.chunks(d).map(|c| ring.from_coords(c)).collect()
                })
                .collect();
            TMatrix::from_columns(ring.clone(), a.cols(), cols)
        }
    }
}

/// Isomorphism type of a finitely presented module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Dimension over the coefficient field (field and finite-dimensional
    /// targets).
    Dimension(usize),
    /// `F[t]^free_rank ⊕ ⊕ F[t]/(f)` with monic non-unit invariant factors.
    Pid { free_rank: usize, torsion: Vec<UPoly> },
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Dimension(d) => write!(f, "dim {d}"),
            Classification::Pid { free_rank, torsion } => {
                write!(f, "free rank {free_rank}")?;
                if !torsion.is_empty() {
                    write!(f, ", torsion")?;
                    for t in torsion {
                        write!(f, " ({t})")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// `coker(rels)`: a module over a target ring with `gens` generators and the
/// columns of `rels` as relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TModule {
    rels: TMatrix,
}

impl TModule {
    pub fn new(rels: TMatrix) -> Self {
        TModule { rels }
    }

    pub fn free(ring: TargetRing, rank: usize) -> Self {
        TModule::new(TMatrix::zeros(ring, rank, 0))
    }

    pub fn ring(&self) -> &TargetRing {
        self.rels.ring()
    }

    pub fn gens(&self) -> usize {
        self.rels.rows()
    }

    pub fn rels(&self) -> &TMatrix {
        &self.rels
    }

    pub fn classify(&self) -> Classification {
        match self.ring() {
            TargetRing::Univariate(_) => {
                let factors = invariant_factors(&self.rels.to_poly());
                let rank = factors.iter().filter(|f| !f.is_zero()).count();
                Classification::Pid {
                    free_rank: self.gens() - rank,
                    torsion: factors
                        .into_iter()
                        .filter(|f| !f.is_zero() && !f.is_unit())
                        .collect(),
                }
            }
            ring => {
                let d = ring.linear_dim().expect("finite-dimensional target");
                Classification::Dimension(self.gens() * d - self.rels.linearize().rank())
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self.classify() {
            Classification::Dimension(d) => d == 0,
            Classification::Pid { free_rank, torsion } => free_rank == 0 && torsion.is_empty(),
        }
    }

    /// Whether a vector over the generators represents zero.
    pub fn is_zero_element(&self, v: &[TElem]) -> bool {
        span_contains(&self.rels, v)
    }

    /// `self ⊗_T other`; generators `e_i ⊗ f_j` ordered with `i` major, and
    /// relations `rels ⊗ f_j` followed by `e_i ⊗ rels'`.
    pub fn tensor(&self, other: &TModule) -> TModule {
        let ring = self.ring().clone();
        let left = self.rels.kronecker(&TMatrix::identity(ring.clone(), other.gens()));
        let right = TMatrix::identity(ring, self.gens()).kronecker(&other.rels);
        TModule::new(left.hstack(&right))
    }
}

/// A module map given by the images of the source generators (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TModuleMap {
    source: TModule,
    target: TModule,
    matrix: TMatrix,
}

impl TModuleMap {
    /// Checks shapes and that every source relation maps into the span of
    /// the target relations.
    pub fn new(source: TModule, target: TModule, matrix: TMatrix) -> Result<Self, TensorError> {
        let map = TModuleMap::new_unchecked(source, target, matrix)?;
        let tester = SpanTester::new(map.target.rels());
        let images = map.matrix.mul(map.source.rels());
        for c in 0..images.cols() {
            if !tester.contains(&images.column(c)) {
                return Err(TensorError::IllDefinedMap { column: c });
            }
        }
        Ok(map)
    }

    /// Checks shapes only.
    pub fn new_unchecked(
        source: TModule,
        target: TModule,
        matrix: TMatrix,
    ) -> Result<Self, TensorError> {
        if source.ring() != target.ring() || matrix.ring() != source.ring() {
            return Err(TensorError::RingMismatch(
                "source, target and matrix must share a ring".into(),
            ));
        }
        if matrix.rows() != target.gens() || matrix.cols() != source.gens() {
            return Err(TensorError::ShapeMismatch(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.gens(),
                source.gens()
            )));
        }
        Ok(TModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(m: &TModule) -> Self {
        TModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: TMatrix::identity(m.ring().clone(), m.gens()),
        }
    }

    pub fn source(&self) -> &TModule {
        &self.source
    }

    pub fn target(&self) -> &TModule {
        &self.target
    }

    pub fn matrix(&self) -> &TMatrix {
        &self.matrix
    }

    /// `coker(self)`: target generators, target relations followed by the
    /// images of the source generators.
    pub fn cokernel(&self) -> TModule {
        TModule::new(self.target.rels.hstack(&self.matrix))
    }

    /// First target generator outside the image, if any.
    ///
    /// The map `coker(A) -> coker(B)` with matrix `F` is onto iff every unit
    /// vector `e_i` lies in the span of `[F | B]`.
    pub fn surjectivity_witness(&self) -> Option<usize> {
        let ring = self.matrix.ring();
        let tester = SpanTester::new(&self.matrix.hstack(self.target.rels()));
        (0..self.target.gens()).find(|&i| {
            let mut e = vec![ring.zero(); self.target.gens()];
            e[i] = ring.one();
            !tester.contains(&e)
        })
    }

    /// A source vector that is nonzero in the source but maps to zero, if
    /// any.
    ///
    /// An element `x` of `coker(A)` maps to zero iff `F x = -B y` for some
    /// `y`, i.e. `(x, y)` is in the kernel of `[F | B]`. The map is injective
    /// iff the `x`-part of every kernel generator lies in the span of `A`.
    pub fn injectivity_witness(&self) -> Option<Vec<TElem>> {
        let combined = self.matrix.hstack(self.target.rels());
        let ker = kernel(&combined);
        let tester = SpanTester::new(self.source.rels());
        let r = self.source.gens();
        (0..ker.cols())
            .map(|c| ker.column(c)[..r].to_vec())
            .find(|x| !tester.contains(x))
    }

    pub fn is_surjective(&self) -> bool {
        self.surjectivity_witness().is_none()
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_witness().is_none()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt() -> TargetRing {
        TargetRing::Univariate(Field::Rationals)
    }

    fn p(c: &[i64]) -> TElem {
        TElem::Poly(UPoly::from_i64(Field::Rationals, c))
    }

    #[test]
    fn algebra_axioms_are_checked() {
        let q = Field::Rationals;
        let dual = FinDimAlgebra::truncated_polynomials(q, 2).unwrap();
        let eps = vec![q.zero(), q.one()];
        assert_eq!(dual.mul(&eps, &eps), vec![q.zero(), q.zero()]);
        let mut c = dual.constants().to_vec();
        c[1] = q.one();
        assert!(FinDimAlgebra::new(q, 2, c, dual.unit().to_vec()).is_err());
        assert!(FinDimAlgebra::new(q, 2, dual.constants().to_vec(), vec![q.zero(), q.one()]).is_err());
    }

    #[test]
    fn classify_over_univariate() {
        let m = TModule::new(TMatrix::from_rows(qt(), vec![vec![p(&[0, 1])], vec![p(&[0])]]));
        assert_eq!(
            m.classify(),
            Classification::Pid {
                free_rank: 1,
                torsion: vec![UPoly::t(Field::Rationals)]
            }
        );
        assert_eq!(TModule::new(TMatrix::from_rows(qt(), vec![vec![p(&[1])]])).classify(),
            Classification::Pid { free_rank: 0, torsion: vec![] });
    }

    #[test]
    fn classify_over_algebra() {
        let q = Field::Rationals;
        let ring = TargetRing::algebra(FinDimAlgebra::truncated_polynomials(q, 3).unwrap());
        let t = ring.basis_elem(1);
        let m = TModule::new(TMatrix::from_rows(ring.clone(), vec![vec![t.clone()]]));
        assert_eq!(m.classify(), Classification::Dimension(1));
        assert!(!ring.is_unit(&t));
        assert!(ring.is_unit(&ring.add(&ring.one(), &t)));
    }

    #[test]
    fn section_row_map_is_bijective() {
        // coker((-t, 1)^T) -> Q[t] via (1, t)
        let ring = qt();
        let src = TModule::new(TMatrix::from_rows(ring.clone(), vec![vec![p(&[0, -1])], vec![p(&[1])]]));
        let tgt = TModule::free(ring.clone(), 1);
        let f = TModuleMap::new(src, tgt, TMatrix::from_rows(ring, vec![vec![p(&[1]), p(&[0, 1])]]))
            .unwrap();
        assert!(f.is_bijective());
    }

    #[test]
    fn non_injective_and_non_surjective() {
        let ring = qt();
        let free2 = TModule::free(ring.clone(), 2);
        let free1 = TModule::free(ring.clone(), 1);
        let f = TModuleMap::new(free2, free1.clone(), TMatrix::from_rows(ring.clone(), vec![vec![p(&[1]), p(&[0, 1])]]))
            .unwrap();
        assert!(f.is_surjective());
        assert_eq!(f.injectivity_witness(), Some(vec![p(&[0, -1]), p(&[1])]));
        let g = TModuleMap::new(free1.clone(), free1, TMatrix::from_rows(ring, vec![vec![p(&[0, 1])]])).unwrap();
        assert_eq!(g.surjectivity_witness(), Some(0));
        assert!(g.is_injective());
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        let ring = qt();
        let src = TModule::new(TMatrix::from_rows(ring.clone(), vec![vec![p(&[0, 1])]]));
        let err = TModuleMap::new(src, TModule::free(ring.clone(), 1), TMatrix::identity(ring, 1));
        assert_eq!(err.unwrap_err(), TensorError::IllDefinedMap { column: 0 });
    }

    #[test]
    fn linear_kernel_and_span() {
        let q = Field::Rationals;
        let ring = TargetRing::Field(q);
        let s = |v: i64| TElem::Scalar(q.from_i64(v));
        let a = TMatrix::from_rows(ring.clone(), vec![vec![s(1), s(2), s(3)]]);
        let k = kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
        assert!(span_contains(&k, &[s(-2), s(1), s(0)]));
        assert!(!span_contains(&k, &[s(1), s(0), s(0)]));
    }
}
