//! The commutative-ring interface shared by every matrix kernel.

use core::fmt::Debug;
use core::hash::Hash;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// A commutative ring with unit whose elements are small `Copy` values.
///
/// Ring descriptors carry all context (modulus, field tables); elements are
/// plain encodings that only make sense together with their descriptor.
pub trait Ring: Clone + PartialEq + Debug {
    type Elem: Copy + Eq + Ord + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;

    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    /// Image of an integer under `Z -> R`.
    fn from_i128(&self, k: i128) -> Self::Elem;

    /// Image of a big integer under `Z -> R`.
    fn from_bigint(&self, k: &BigInt) -> Self::Elem;

    /// Integer representative of `a`, for rings that are quotients of `Z`.
    ///
    /// Fraction-free elimination over non-fields runs on these lifts.
    fn lift(&self, a: Self::Elem) -> Option<i128>;

    fn is_field(&self) -> bool;

    /// Number of elements, `None` when infinite.
    fn cardinality(&self) -> Option<u64>;

    /// The element with enumeration index `index < cardinality()`.
    fn element(&self, index: u64) -> Self::Elem;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn is_unit(&self, a: Self::Elem) -> bool {
        self.inv(a).is_some()
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut exp: u64) -> Self::Elem {
        let mut result = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }
}

/// The integers, on `i128` values. Overflow panics.
///
/// Only meant for small exact checks such as signed Pascal inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = i128;

    fn zero(&self) -> i128 {
        0
    }
    fn one(&self) -> i128 {
        1
    }
    fn add(&self, a: i128, b: i128) -> i128 {
        a.checked_add(b).expect("integer overflow")
    }
    fn neg(&self, a: i128) -> i128 {
        a.checked_neg().expect("integer overflow")
    }
    fn mul(&self, a: i128, b: i128) -> i128 {
        a.checked_mul(b).expect("integer overflow")
    }
    fn inv(&self, a: i128) -> Option<i128> {
        (a == 1 || a == -1).then_some(a)
    }
    fn from_i128(&self, k: i128) -> i128 {
        k
    }
    fn from_bigint(&self, k: &BigInt) -> i128 {
        k.to_i128().expect("integer overflow")
    }
    fn lift(&self, a: i128) -> Option<i128> {
        Some(a)
    }
    fn is_field(&self) -> bool {
        false
    }
    fn cardinality(&self) -> Option<u64> {
        None
    }
    fn element(&self, index: u64) -> i128 {
        index as i128
    }
}
