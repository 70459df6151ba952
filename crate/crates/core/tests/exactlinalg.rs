//! Ranks, kernels and Smith forms checked against determinant-based
//! oracles (Leibniz expansion of minors), which share no code with the
//! elimination routines.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use qpnkit::exactlinalg::{
    column_span_equal, invariant_factors, smith_normal_form, DenseMatrix, Field, PolyMatrix, UPoly,
};

fn q() -> Field {
    Field::Rationals
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn int_minor(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> BigInt {
    permutations(rows.len())
        .iter()
        .map(|p| {
            let mut prod = BigInt::from(sign(p));
            for (i, &j) in p.iter().enumerate() {
                prod *= m[rows[i]][cols[j]];
            }
            prod
        })
        .sum()
}

/// Largest `k` with a nonzero `k x k` minor, modulo `p` when given.
fn minor_rank(m: &[Vec<i64>], modulus: Option<i64>) -> usize {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            subsets(r, k).iter().any(|rows| {
                subsets(c, k).iter().any(|cols| {
                    let d = int_minor(m, rows, cols);
                    match modulus {
                        None => !d.is_zero(),
                        Some(p) => !(d % p).is_zero(),
                    }
                })
            })
        })
        .unwrap_or(0)
}

fn poly_minor(m: &[Vec<UPoly>], rows: &[usize], cols: &[usize]) -> UPoly {
    permutations(rows.len()).iter().fold(UPoly::zero(q()), |acc, p| {
        let mut prod = UPoly::from_i64(q(), &[sign(p)]);
        for (i, &j) in p.iter().enumerate() {
            prod = prod.mul(&m[rows[i]][cols[j]]);
        }
        acc.add(&prod)
    })
}

/// Determinantal divisors `d_k`: monic gcd of all `k x k` minors.
fn determinantal_divisors(m: &[Vec<UPoly>]) -> Vec<UPoly> {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    (1..=r.min(c))
        .map(|k| {
            let mut g = UPoly::zero(q());
            for rows in subsets(r, k) {
                for cols in subsets(c, k) {
                    g = g.gcd(&poly_minor(m, &rows, &cols));
                }
            }
            g
        })
        .collect()
}

fn dense(field: Field, m: &[Vec<i64>]) -> DenseMatrix {
    let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    DenseMatrix::from_i64_rows(field, &rows)
}

fn polys(m: &[Vec<Vec<i64>>]) -> Vec<Vec<UPoly>> {
    m.iter()
        .map(|r| r.iter().map(|c| UPoly::from_i64(q(), c)).collect())
        .collect()
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
    })
}

fn poly_matrix() -> impl Strategy<Value = Vec<Vec<Vec<i64>>>> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| {
        prop::collection::vec(
            prop::collection::vec(prop::collection::vec(-2i64..=2, 0..=3), c),
            r,
        )
    })
}

#[test]
fn rank_examples() {
    assert_eq!(dense(q(), &[vec![1, 0], vec![0, 1]]).rank(), 2);
    assert_eq!(dense(q(), &[vec![1, 2], vec![2, 4]]).rank(), 1);
    let f2 = Field::prime(2).unwrap();
    assert_eq!(dense(f2, &[vec![1, 1], vec![1, 1]]).rank(), 1);
}

#[test]
fn kernel_examples() {
    let k = dense(q(), &[vec![0, 0]]).kernel_basis();
    assert_eq!((k.rows(), k.cols()), (2, 2));
    assert_eq!(k.rank(), 2);
    let k = dense(q(), &[vec![1, 2]]).kernel_basis();
    assert_eq!(k.cols(), 1);
    // (-2, 1) up to scaling: 1 * k0 + 2 * k1 = 0 and k nonzero.
    assert!(dense(q(), &[vec![1, 2]]).mul(&k).is_zero());
    assert!(!k.is_zero());
    assert_eq!(dense(q(), &[vec![1, 0], vec![0, 1]]).kernel_basis().cols(), 0);
}

#[test]
fn smith_examples() {
    let t = |c: &[i64]| UPoly::from_i64(q(), c);
    let a = PolyMatrix::from_rows(q(), vec![vec![t(&[0, 1]), t(&[0])], vec![t(&[0]), t(&[0, 0, 1])]]);
    assert_eq!(invariant_factors(&a), vec![t(&[0, 1]), t(&[0, 0, 1])]);

    let a = PolyMatrix::from_rows(q(), vec![vec![t(&[0, 1]), t(&[1])]]);
    let s = smith_normal_form(&a);
    assert_eq!(s.diag, vec![t(&[1])]);
    assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal_matrix());

    let a = PolyMatrix::from_rows(q(), vec![vec![t(&[-1, 1]), t(&[0])], vec![t(&[0]), t(&[1, 1])]]);
    let s = smith_normal_form(&a);
    assert_eq!(s.diag, vec![t(&[1]), t(&[-1, 0, 1])]);
    assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal_matrix());
}

#[test]
fn column_span_examples() {
    let t = |c: &[i64]| UPoly::from_i64(q(), c);
    let cols = |cs: Vec<Vec<UPoly>>| PolyMatrix::from_columns(q(), 2, cs);
    let a = cols(vec![vec![t(&[0, 1]), t(&[0])], vec![t(&[0]), t(&[0, 1])]]);
    let b = cols(vec![vec![t(&[0, 1]), t(&[0, 1])], vec![t(&[0]), t(&[0, 1])]]);
    assert!(column_span_equal(&a, &b));
    let c = cols(vec![vec![t(&[0, 1]), t(&[0])]]);
    assert!(!column_span_equal(&c, &a));
    assert!(column_span_equal(&a, &a));
}

#[test]
fn large_rational_entries_do_not_overflow() {
    // Hilbert-like matrix with entries 1/(i+j+1): full rank, heavy growth.
    let n = 7;
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let r = num_rational::BigRational::new(BigInt::from(1), BigInt::from(i + j + 1));
                    q().from_rational(&r).unwrap()
                })
                .collect()
        })
        .collect();
    assert_eq!(DenseMatrix::from_rows(q(), rows).rank(), n);
}

proptest! {
    #[test]
    fn rank_matches_minors_over_q(m in int_matrix()) {
        prop_assert_eq!(dense(q(), &m).rank(), minor_rank(&m, None));
    }

    #[test]
    fn rank_matches_minors_over_f7(m in int_matrix()) {
        let f7 = Field::prime(7).unwrap();
        prop_assert_eq!(dense(f7, &m).rank(), minor_rank(&m, Some(7)));
    }

    #[test]
    fn rank_nullity(m in int_matrix()) {
        let a = dense(q(), &m);
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), a.cols());
        prop_assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn rank_is_independent_of_pivot_order(m in int_matrix()) {
        // Reversing rows and columns changes every pivot choice.
        let rev: Vec<Vec<i64>> = m.iter().rev().map(|r| r.iter().rev().copied().collect()).collect();
        let (a, b) = (dense(q(), &m), dense(q(), &rev));
        prop_assert_eq!(a.rank(), b.rank());
        prop_assert_eq!(a.kernel_basis().cols(), b.kernel_basis().cols());
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn smith_reconstructs(m in poly_matrix()) {
        let a = PolyMatrix::from_rows(q(), polys(&m));
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal_matrix());
        for w in s.diag.windows(2) {
            prop_assert!(w[1].divisible_by(&w[0]));
        }
        let dl = s.left.determinant();
        let dr = s.right.determinant();
        prop_assert!(!dl.is_zero() && dl.degree() == Some(0));
        prop_assert!(!dr.is_zero() && dr.degree() == Some(0));
    }

    #[test]
    fn smith_matches_determinantal_divisors(m in poly_matrix()) {
        let rows = polys(&m);
        let diag = invariant_factors(&PolyMatrix::from_rows(q(), rows.clone()));
        let divisors = determinantal_divisors(&rows);
        let mut prod = UPoly::one(q());
        for (k, d) in divisors.iter().enumerate() {
            prod = prod.mul(&diag[k]);
            prop_assert_eq!(&prod.monic_or_zero(), d);
        }
    }

    #[test]
    fn column_span_equal_is_an_equivalence(a in poly_matrix(), u in prop::collection::vec(-2i64..=2, 9)) {
        let a = PolyMatrix::from_rows(q(), polys(&a));
        // b = a * (unimodular upper triangular), c = b with a column appended
        // from the span: all three span the same module.
        let n = a.cols();
        let mut up = PolyMatrix::identity(q(), n);
        for i in 0..n {
            for j in i + 1..n {
                up.set(i, j, UPoly::from_i64(q(), &[u[(i * 3 + j) % 9], u[(j * 3 + i) % 9]]));
            }
        }
        let b = a.mul(&up);
        let extra = a.mul_vec(&(0..n).map(|i| UPoly::from_i64(q(), &[u[i % 9]])).collect::<Vec<_>>());
        let c = b.hstack(&PolyMatrix::from_columns(q(), a.rows(), vec![extra]));
        prop_assert!(column_span_equal(&a, &a));
        prop_assert_eq!(column_span_equal(&a, &b), column_span_equal(&b, &a));
        prop_assert!(column_span_equal(&a, &b));
        prop_assert!(column_span_equal(&b, &c));
        prop_assert!(column_span_equal(&a, &c));
    }
}

trait MonicOrZero {
    fn monic_or_zero(&self) -> UPoly;
}

impl MonicOrZero for UPoly {
    fn monic_or_zero(&self) -> UPoly {
        if self.is_zero() {
            self.clone()
        } else {
            self.monic()
        }
    }
}
