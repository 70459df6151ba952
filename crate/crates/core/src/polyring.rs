//! The graded ring `S = k[x0..xn]`: monomials, homogeneous polynomials, the
//! monomial bases `H_m`, and substitution of ring elements for variables.
//!
//! Monomials are ordered lexicographically with `x0 > x1 > ... > xn`, so
//! `H_2` in two variables is `[x0^2, x0*x1, x1^2]`. Every matrix built from
//! a component `S_m` uses this order for its rows and columns.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactlinalg::{CommRing, Field, Scalar};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `m` in `nvars` variables; zero for `m < 0`.
pub fn count_monomials(nvars: usize, m: i64) -> usize {
    if m < 0 || nvars == 0 {
        return usize::from(m == 0 && nvars == 0);
    }
    binomial(nvars - 1 + m as usize, nvars - 1)
}

/// Exponent vector of a monic monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    /// Smallest index with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Divides by `x_i`; `None` if `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        (self.0[i] > 0).then(|| {
            let mut e = self.0.clone();
            e[i] -= 1;
            Monomial(e)
        })
    }

    /// Position of this monomial in the ordered basis of its degree.
    pub fn index(&self) -> usize {
        let n = self.nvars();
        let mut rem = self.degree() as i64;
        let mut idx = 0;
        for i in 0..n.saturating_sub(1) {
            let e = self.0[i] as i64;
            // monomials agreeing so far but with a larger exponent here come first
            for v in (e + 1)..=rem {
                idx += count_monomials(n - i - 1, rem - v);
            }
            rem -= e;
        }
        idx
    }
}

impl Ord for Monomial {
    /// Basis order: lexicographically larger exponent vectors come first.
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// `H_m` in basis order; empty for `m < 0`.
pub fn enumerate_monomials(nvars: usize, m: i64) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(count_monomials(nvars, m));
    if m < 0 {
        return out;
    }
    let mut current = vec![0u32; nvars];
    fill_monomials(&mut current, 0, m as u32, &mut out);
    out
}

fn fill_monomials(current: &mut Vec<u32>, pos: usize, rem: u32, out: &mut Vec<Monomial>) {
    let n = current.len();
    if n == 0 {
        if rem == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if pos == n - 1 {
        current[pos] = rem;
        out.push(Monomial(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        current[pos] = e;
        fill_monomials(current, pos + 1, rem - e, out);
    }
    current[pos] = 0;
}

/// A homogeneous polynomial of a fixed degree. No stored coefficient is
/// zero; the zero polynomial keeps its nominal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl HomPoly {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        HomPoly {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(monomial: Monomial, coeff: Scalar) -> Self {
        let mut p = HomPoly::zero(monomial.nvars(), monomial.degree());
        p.add_term(monomial, coeff);
        p
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        HomPoly::term(Monomial::one(nvars), c)
    }

    pub fn var(field: Field, nvars: usize, i: usize) -> Self {
        HomPoly::term(Monomial::var(nvars, i), field.one())
    }

    /// Builds from terms, which must all have degree `degree`.
    pub fn from_terms(
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = HomPoly::zero(nvars, degree);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Accumulates `coeff * monomial`.
    pub fn add_term(&mut self, monomial: Monomial, coeff: Scalar) {
        assert_eq!(monomial.degree(), self.degree, "inhomogeneous term");
        assert_eq!(monomial.nvars(), self.nvars, "variable count mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&monomial) {
            None => {
                self.terms.insert(monomial, coeff);
            }
            Some(c) => {
                let s = &c + &coeff;
                if !s.is_zero() {
                    self.terms.insert(monomial, s);
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Sum; both sides must share a degree unless one of them is zero.
    pub fn add(&self, other: &HomPoly) -> HomPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> HomPoly {
        HomPoly {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &HomPoly) -> HomPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> HomPoly {
        HomPoly::from_terms(
            self.nvars,
            self.degree,
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)),
        )
    }

    /// Product; the degree is the sum of degrees.
    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = HomPoly::zero(self.nvars, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> HomPoly {
        HomPoly {
            nvars: self.nvars,
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// The graded ring `k[x0..x(nvars-1)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: Field,
    pub nvars: usize,
}

impl PolyRing {
    pub fn new(field: Field, nvars: usize) -> Self {
        PolyRing { field, nvars }
    }

    /// `S = k[x0..xn]` for the projective space of dimension `n`.
    pub fn projective(field: Field, n: usize) -> Self {
        PolyRing { field, nvars: n + 1 }
    }

    /// The `n` of `P^n`.
    pub fn n(&self) -> usize {
        self.nvars - 1
    }

    pub fn var(&self, i: usize) -> HomPoly {
        HomPoly::var(self.field, self.nvars, i)
    }

    pub fn one(&self) -> HomPoly {
        HomPoly::constant(self.nvars, self.field.one())
    }

    pub fn zero(&self, degree: u32) -> HomPoly {
        HomPoly::zero(self.nvars, degree)
    }

    pub fn monomial(&self, m: Monomial) -> HomPoly {
        HomPoly::term(m, self.field.one())
    }

    pub fn monomials(&self, m: i64) -> Vec<Monomial> {
        enumerate_monomials(self.nvars, m)
    }

    /// `dim S_m`.
    pub fn dim(&self, m: i64) -> usize {
        count_monomials(self.nvars, m)
    }
}

/// Product of homogeneous polynomials.
pub fn multiply(p: &HomPoly, q: &HomPoly) -> HomPoly {
    p.mul(q)
}

/// Replaces `x_i` by `s[i]` and evaluates in `ring`.
pub fn substitute<R: CommRing>(ring: &R, p: &HomPoly, s: &[R::Elem]) -> R::Elem {
    assert_eq!(s.len(), p.nvars(), "one value per variable required");
    let mut acc = ring.zero();
    for (m, c) in p.terms() {
        let mut t = ring.from_scalar(c);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = ring.mul(&t, &ring.pow(&s[i], e));
            }
        }
        acc = ring.add(&acc, &t);
    }
    acc
}
