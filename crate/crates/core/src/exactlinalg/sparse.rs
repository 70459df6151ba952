//! Coordinate-format matrices produced by realizing graded maps in a single
//! degree. Realized Koszul-type matrices split into many small blocks once
//! rows and columns are grouped by connectivity, so rank is computed per
//! connected component of the row/column incidence graph.

use std::collections::HashMap;

use super::dense::DenseMatrix;
use super::field::{Field, Scalar};

#[derive(Clone, Debug)]
pub struct SparseMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

impl SparseMatrix {
    pub fn new(field: Field, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            cols,
            entries: Vec::new(),
        }
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

    /// Adds `v` at `(r, c)`. Duplicate coordinates accumulate.
    pub fn push(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(r < self.rows && c < self.cols);
        if !v.is_zero() {
            self.entries.push((r, c, v));
        }
    }

    /// Appends a column and returns its index.
    pub fn push_column(&mut self, col: impl IntoIterator<Item = (usize, Scalar)>) -> usize {
        let c = self.cols;
        self.cols += 1;
        for (r, v) in col {
            self.push(r, c, v);
        }
        c
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = self.clone();
        out.cols += other.cols;
        out.entries.extend(
            other
                .entries
                .iter()
                .map(|(r, c, v)| (*r, c + self.cols, v.clone())),
        );
        out
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zeros(self.field, self.rows, self.cols);
        for (r, c, v) in &self.entries {
            let cur = d.get(*r, *c) + v;
            d.set(*r, *c, cur);
        }
        d
    }

    /// Splits rows and columns into connected blocks; each block is returned
    /// as a dense matrix. Isolated rows and columns form no block.
    pub fn blocks(&self) -> Vec<DenseMatrix> {
        let mut sets = DisjointSets::new(self.rows + self.cols);
        for (r, c, _) in &self.entries {
            sets.union(*r, self.rows + c);
        }
        let mut block_of: HashMap<usize, usize> = HashMap::new();
        let mut row_idx: Vec<HashMap<usize, usize>> = Vec::new();
        let mut col_idx: Vec<HashMap<usize, usize>> = Vec::new();
        let mut items: Vec<Vec<(usize, usize, &Scalar)>> = Vec::new();
        for (r, c, v) in &self.entries {
            let root = sets.find(*r);
            let b = *block_of.entry(root).or_insert_with(|| {
                row_idx.push(HashMap::new());
                col_idx.push(HashMap::new());
                items.push(Vec::new());
                items.len() - 1
            });
            let nr = row_idx[b].len();
            let lr = *row_idx[b].entry(*r).or_insert(nr);
            let nc = col_idx[b].len();
            let lc = *col_idx[b].entry(*c).or_insert(nc);
            items[b].push((lr, lc, v));
        }
        items
            .into_iter()
            .enumerate()
            .map(|(b, its)| {
                let mut d = DenseMatrix::zeros(self.field, row_idx[b].len(), col_idx[b].len());
                for (r, c, v) in its {
                    let cur = d.get(r, c) + v;
                    d.set(r, c, cur);
                }
                d
            })
            .collect()
    }

    /// Rank as the sum of block ranks.
    pub fn rank(&self) -> usize {
        self.blocks().iter().map(DenseMatrix::rank).sum()
    }

    /// Whether the column `v` (given as coordinates) lies in the column span.
    pub fn spans(&self, v: &[(usize, Scalar)]) -> bool {
        let mut with = self.clone();
        with.push_column(v.iter().cloned());
        with.rank() == self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_rank_matches_dense_rank() {
        let q = Field::Rationals;
        let mut m = SparseMatrix::new(q, 4, 4);
        m.push(0, 0, q.from_i64(1));
        m.push(1, 0, q.from_i64(2));
        m.push(2, 2, q.from_i64(1));
        m.push(3, 3, q.from_i64(1));
        m.push(2, 3, q.from_i64(1));
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank(), m.to_dense().rank());
        assert_eq!(m.blocks().len(), 2);
    }

    #[test]
    fn duplicate_coordinates_accumulate() {
        let q = Field::Rationals;
        let mut m = SparseMatrix::new(q, 1, 1);
        m.push(0, 0, q.from_i64(1));
        m.push(0, 0, q.from_i64(-1));
        assert_eq!(m.rank(), 0);
    }
}
