use std::fmt::Debug;

use super::field::{Field, Scalar};

/// A commutative ring containing a fixed coefficient field, accessed through
/// a context object in the style `ring.add(&a, &b)`.
pub trait CommRing {
    type Elem: Clone + PartialEq + Debug;

    fn base_field(&self) -> Field;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    #[allow(clippy::wrong_self_convention)]
    fn from_scalar(&self, s: &Scalar) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, mut exp: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

impl CommRing for Field {
    type Elem = Scalar;

    fn base_field(&self) -> Field {
        *self
    }
    fn zero(&self) -> Scalar {
        Field::zero(self)
    }
    fn one(&self) -> Scalar {
        Field::one(self)
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a - b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn from_scalar(&self, s: &Scalar) -> Scalar {
        s.clone()
    }
}
