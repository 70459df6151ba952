//! Dense univariate polynomials `k[t]` over a [`Field`].

use std::fmt;

use rand::Rng;

use super::field::{Field, Scalar};
use super::ring::CommRing;

/// Polynomial in `t` with coefficients in ascending degree. The coefficient
/// vector never ends in a zero, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| field.contains(c)));
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UPoly { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        UPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Self::new(field, vec![c])
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    /// The variable `t`.
    pub fn t(field: Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        Self::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.field, out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dl = divisor.lead().expect("division by zero polynomial");
        let dl_inv = dl.inv();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &dl_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        (UPoly::new(self.field, quot), UPoly::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        self.div_rem(divisor).1
    }

    /// Whether `divisor` divides `self`. Zero divides only zero.
    pub fn divisible_by(&self, divisor: &UPoly) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        self.rem(divisor).is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*self + v*other = g` and
    /// `g` monic (or zero when both inputs vanish).
    pub fn xgcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(f), UPoly::zero(f));
        let (mut t0, mut t1) = (UPoly::zero(f), UPoly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluates at an element of an arbitrary ring over the same field.
    pub fn eval_in<R: CommRing>(&self, ring: &R, x: &R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), &ring.from_scalar(c));
        }
        acc
    }

    /// Random polynomial of degree at most `max_degree`.
    pub fn random<R: Rng + ?Sized>(field: Field, rng: &mut R, max_degree: usize) -> UPoly {
        let coeffs = (0..=max_degree).map(|_| field.random(rng, 3)).collect();
        UPoly::new(field, coeffs)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// The ring `k[t]` as a [`CommRing`] context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnivariateRing {
    pub field: Field,
}

impl CommRing for UnivariateRing {
    type Elem = UPoly;

    fn base_field(&self) -> Field {
        self.field
    }
    fn zero(&self) -> UPoly {
        UPoly::zero(self.field)
    }
    fn one(&self) -> UPoly {
        UPoly::one(self.field)
    }
    fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.add(b)
    }
    fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.sub(b)
    }
    fn neg(&self, a: &UPoly) -> UPoly {
        a.neg()
    }
    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.mul(b)
    }
    fn is_zero(&self, a: &UPoly) -> bool {
        a.is_zero()
    }
    fn from_scalar(&self, s: &Scalar) -> UPoly {
        UPoly::constant(s.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_i64(Field::Rationals, c)
    }

    #[test]
    fn division_with_remainder() {
        // t^3 + 2 = (t^2 + t + 1)(t - 1) + 3
        let (quo, rem) = q(&[2, 0, 0, 1]).div_rem(&q(&[-1, 1]));
        assert_eq!(quo, q(&[1, 1, 1]));
        assert_eq!(rem, q(&[3]));
    }

    #[test]
    fn bezout_for_one_and_t() {
        let (g, u, v) = q(&[1]).xgcd(&q(&[0, 1]));
        assert!(g.is_one());
        assert!(u.is_one());
        assert!(v.is_zero());
    }

    #[test]
    fn bezout_for_t_and_one_minus_t() {
        let a = q(&[0, 1]);
        let b = q(&[1, -1]);
        let (g, u, v) = a.xgcd(&b);
        assert!(g.is_one());
        assert_eq!((u.clone(), v.clone()), (q(&[1]), q(&[1])));
        assert!(u.mul(&a).add(&v.mul(&b)).is_one());
    }

    #[test]
    fn gcd_is_monic() {
        let g = q(&[0, 2]).gcd(&q(&[0, 0, 4]));
        assert_eq!(g, q(&[0, 1]));
        assert!(UPoly::zero(Field::Rationals)
            .gcd(&UPoly::zero(Field::Rationals))
            .is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(q(&[1, -1]).to_string(), "-t + 1");
        assert_eq!(q(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(q(&[0, 3]).to_string(), "3*t");
        assert_eq!(q(&[]).to_string(), "0");
    }
}
