//! Coefficient field abstraction shared by polynomials, rational functions
//! and the exact linear algebra kernel.

use std::fmt::{Debug, Display};

/// An exact field. Implementors must be canonical: two elements are equal
/// iff they compare equal with `==`.
pub trait Field: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_zero(&self) -> bool;

    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Exact division.
    ///
    /// Panics when `other` is zero; fallible callers check first.
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero field element"))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Binomial coefficient C(n, k) for integer (possibly negative) n, as a
/// field element: n(n-1)...(n-k+1)/k!.
pub fn binomial<F: Field>(n: i64, k: u32) -> F {
    let mut acc = F::one();
    for j in 0..k as i64 {
        acc = acc.mul(&F::from_int(n - j));
        acc = acc.div(&F::from_int(j + 1));
    }
    acc
}

/// k! as a field element.
pub fn factorial<F: Field>(k: u32) -> F {
    let mut acc = F::one();
    for j in 1..=k as i64 {
        acc = acc.mul(&F::from_int(j));
    }
    acc
}
