//! Matrices over `k[t]`, with Smith normal form (the engine behind every
//! isomorphism verdict over univariate targets) and a canonical column
//! Hermite form for comparing submodules of `k[t]^n`.

use std::fmt;

use super::field::Field;
use super::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<UPoly>,
}

impl PolyMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            field,
            rows,
            cols,
            entries: vec![UPoly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, UPoly::one(field));
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<UPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from columns; `rows` is needed when there are none.
    pub fn from_columns(field: Field, rows: usize, cols: Vec<Vec<UPoly>>) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (c, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &UPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: UPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<UPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(UPoly::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = PolyMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[UPoly]) -> Vec<UPoly> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(UPoly::zero(self.field), |acc, c| {
                    acc.add(&self.get(r, c).mul(&v[c]))
                })
            })
            .collect()
    }

    pub fn hstack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = PolyMatrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `row[dst] -= q * row[src]`, touching columns from `from` on.
    fn row_axpy(&mut self, dst: usize, src: usize, q: &UPoly, from: usize) {
        for c in from..self.cols {
            let s = self.get(src, c);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, c).sub(&q.mul(s));
            self.set(dst, c, v);
        }
    }

    /// `col[dst] -= q * col[src]`, touching rows from `from` on.
    fn col_axpy(&mut self, dst: usize, src: usize, q: &UPoly, from: usize) {
        for r in from..self.rows {
            let s = self.get(r, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(r, dst).sub(&q.mul(s));
            self.set(r, dst, v);
        }
    }

    fn scale_row(&mut self, r: usize, c: &UPoly) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(c);
            self.set(r, j, v);
        }
    }

    fn scale_col(&mut self, c: usize, s: &UPoly) {
        for i in 0..self.rows {
            let v = self.get(i, c).mul(s);
            self.set(i, c, v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> UPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return UPoly::one(self.field);
        }
        let mut m = self.clone();
        let mut prev = UPoly::one(self.field);
        let mut negate = false;
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return UPoly::zero(self.field);
                };
                m.swap_rows(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m
                        .get(i, j)
                        .mul(m.get(k, k))
                        .sub(&m.get(i, k).mul(m.get(k, j)));
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    m.set(i, j, q);
                }
                m.set(i, k, UPoly::zero(self.field));
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            d.neg()
        } else {
            d
        }
    }
}

impl fmt::Display for PolyMatrix {
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

/// Smith normal form witness: `left * A * right` is the diagonal matrix
/// with entries `diag` (length `min(rows, cols)`, zeros trailing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithData {
    pub left: PolyMatrix,
    pub diag: Vec<UPoly>,
    pub right: PolyMatrix,
}

impl SmithData {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The diagonal padded to the shape of the input.
    pub fn diagonal_matrix(&self) -> PolyMatrix {
        let field = self.left.field();
        let mut d = PolyMatrix::zeros(field, self.left.rows(), self.right.rows());
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

/// Computes `(left, diag, right)` with `left * a * right = diag`.
///
/// Pivot rule: at each stage the nonzero entry of least degree in the
/// remaining block, ties broken by lowest `(row, col)`. Rows and columns are
/// cleared by Euclidean division against the pivot; a nonzero remainder
/// restarts the stage with a strictly smaller pivot degree. Once the pivot
/// row and column are clear, a remaining entry not divisible by the pivot has
/// its row added to the pivot row, which again forces a smaller pivot. Each
/// finished pivot is scaled monic.
pub fn smith_normal_form(a: &PolyMatrix) -> SmithData {
    let field = a.field();
    let mut work = a.clone();
    let mut left = PolyMatrix::identity(field, a.rows());
    let mut right = PolyMatrix::identity(field, a.cols());
    let diag = smith_reduce(&mut work, Some(&mut left), Some(&mut right));
    SmithData { left, diag, right }
}

/// Invariant factors only, skipping the transformation matrices.
pub fn invariant_factors(a: &PolyMatrix) -> Vec<UPoly> {
    let mut work = a.clone();
    smith_reduce(&mut work, None, None)
}

fn smith_reduce(
    a: &mut PolyMatrix,
    mut left: Option<&mut PolyMatrix>,
    mut right: Option<&mut PolyMatrix>,
) -> Vec<UPoly> {
    let field = a.field();
    let steps = a.rows().min(a.cols());
    let mut diag = Vec::with_capacity(steps);
    for t in 0..steps {
        loop {
            let Some((pr, pc)) = find_pivot(a, t) else {
                diag.resize(steps, UPoly::zero(field));
                return diag;
            };
            a.swap_rows(t, pr);
            if let Some(l) = left.as_deref_mut() {
                l.swap_rows(t, pr);
            }
            a.swap_cols(t, pc);
            if let Some(r) = right.as_deref_mut() {
                r.swap_cols(t, pc);
            }

            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..a.rows() {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).div_rem(&pivot);
                a.row_axpy(i, t, &q, t);
                if let Some(l) = left.as_deref_mut() {
                    l.row_axpy(i, t, &q, 0);
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            for j in t + 1..a.cols() {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).div_rem(&pivot);
                a.col_axpy(j, t, &q, t);
                if let Some(rm) = right.as_deref_mut() {
                    rm.col_axpy(j, t, &q, 0);
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..a.rows()).find(|&i| {
                (t + 1..a.cols()).any(|j| !a.get(i, j).divisible_by(&pivot))
            });
            if let Some(i) = offender {
                let minus_one = UPoly::constant(-field.one());
                a.row_axpy(t, i, &minus_one, t);
                if let Some(l) = left.as_deref_mut() {
                    l.row_axpy(t, i, &minus_one, 0);
                }
                continue;
            }

            let inv = UPoly::constant(pivot.lead().expect("nonzero pivot").inv());
            a.scale_row(t, &inv);
            if let Some(l) = left.as_deref_mut() {
                l.scale_row(t, &inv);
            }
            diag.push(a.get(t, t).clone());
            break;
        }
    }
    diag
}

fn find_pivot(a: &PolyMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            if let Some(d) = a.get(r, c).degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, r, c));
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Right kernel of `a` as a matrix whose columns generate it (and form a
/// basis, since submodules of free `k[t]`-modules are free).
pub fn kernel_generators(a: &PolyMatrix) -> PolyMatrix {
    let smith = smith_normal_form(a);
    let rank = smith.rank();
    let cols = a.cols();
    let gens: Vec<Vec<UPoly>> = (rank..cols).map(|c| smith.right.column(c)).collect();
    PolyMatrix::from_columns(a.field(), cols, gens)
}

/// Precomputed membership test for the column span of a fixed matrix.
///
/// With `U A V = D`, a vector `v` lies in the span of `A` iff `U v` lies in
/// the span of `D`: the `i`-th entry is divisible by the `i`-th invariant
/// factor and vanishes past the rank.
#[derive(Clone, Debug)]
pub struct ColumnSpan {
    left: PolyMatrix,
    diag: Vec<UPoly>,
}

impl ColumnSpan {
    pub fn new(a: &PolyMatrix) -> Self {
        let field = a.field();
        let mut work = a.clone();
        let mut left = PolyMatrix::identity(field, a.rows());
        let diag = smith_reduce(&mut work, Some(&mut left), None);
        ColumnSpan { left, diag }
    }

    pub fn contains(&self, v: &[UPoly]) -> bool {
        let w = self.left.mul_vec(v);
        w.iter().enumerate().all(|(i, wi)| match self.diag.get(i) {
            Some(d) => wi.divisible_by(d),
            None => wi.is_zero(),
        })
    }
}

/// Canonical column Hermite form: columns in echelon form with monic pivots,
/// entries left of each pivot reduced below the pivot degree, zero columns
/// dropped. Two matrices have the same column span iff their forms agree.
pub fn hermite_column_form(a: &PolyMatrix) -> PolyMatrix {
    let mut m = a.clone();
    let mut pc = 0;
    for r in 0..m.rows() {
        if pc == m.cols() {
            break;
        }
        loop {
            let mut best: Option<(usize, usize)> = None;
            for c in pc..m.cols() {
                if let Some(d) = m.get(r, c).degree() {
                    if best.is_none_or(|(bd, _)| d < bd) {
                        best = Some((d, c));
                    }
                }
            }
            let Some((_, c)) = best else { break };
            m.swap_cols(pc, c);
            let pivot = m.get(r, pc).clone();
            let mut done = true;
            for k in pc + 1..m.cols() {
                if m.get(r, k).is_zero() {
                    continue;
                }
                let (q, rem) = m.get(r, k).div_rem(&pivot);
                m.col_axpy(k, pc, &q, 0);
                done &= rem.is_zero();
            }
            if done {
                break;
            }
        }
        if pc < m.cols() && !m.get(r, pc).is_zero() {
            let inv = UPoly::constant(m.get(r, pc).lead().expect("pivot").inv());
            m.scale_col(pc, &inv);
            let pivot = m.get(r, pc).clone();
            for k in 0..pc {
                let q = m.get(r, k).div_rem(&pivot).0;
                if !q.is_zero() {
                    m.col_axpy(k, pc, &q, 0);
                }
            }
            pc += 1;
        }
    }
    let keep: Vec<Vec<UPoly>> = (0..pc).map(|c| m.column(c)).collect();
    PolyMatrix::from_columns(a.field(), a.rows(), keep)
}

/// Whether `a` and `b` have the same column span in `k[t]^rows`.
pub fn column_span_equal(a: &PolyMatrix, b: &PolyMatrix) -> bool {
    assert_eq!(a.rows(), b.rows(), "column spans live in different free modules");
    hermite_column_form(a) == hermite_column_form(b)
}
