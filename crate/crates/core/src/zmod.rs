//! Residue rings `Z/aZ`, the CRT splitting of circulant groups over them and
//! lifting along `Z/p^{t+1}Z -> Z/p^tZ`.
//!
//! A circulant over `Z/aZ` is regular exactly when its determinant is a
//! unit, i.e. nonzero modulo every prime dividing `a`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, ToPrimitive};

use crate::circulant::Circulant;
use crate::error::{domain, Error, Result};
use crate::numtheory::{factorize, gcd, inv_mod, mul_mod, Factorization};
use crate::ring::Ring;

/// The ring `Z/aZ` with `a >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Zmod {
    modulus: u64,
    factorization: Factorization,
}

impl Zmod {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(domain!("modulus must be at least 2, got {modulus}"));
        }
        if modulus > u32::MAX as u64 {
            return Err(domain!("modulus {modulus} exceeds 2^32"));
        }
        Ok(Zmod {
            modulus,
            factorization: factorize(modulus)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    /// Wraps a residue, reducing it into `[0, a)`.
    pub fn elem(&self, value: u64) -> ZmodElement<'_> {
        ZmodElement {
            ring: self,
            value: value % self.modulus,
        }
    }

    /// For `a = p^t`, returns `(p, t)`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.factorization.pairs() {
            [(p, t)] => Some((*p, *t)),
            _ => None,
        }
    }
}

impl Ring for Zmod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }
    fn neg(&self, a: u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }
    fn inv(&self, a: u64) -> Option<u64> {
        inv_mod(a, self.modulus)
    }
    fn is_unit(&self, a: u64) -> bool {
        gcd(a, self.modulus) == 1
    }
    fn from_i128(&self, k: i128) -> u64 {
        k.rem_euclid(self.modulus as i128) as u64
    }
    fn from_bigint(&self, k: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        let r = ((k % &m) + &m) % &m;
        r.to_u64().expect("residue fits")
    }
    fn lift(&self, a: u64) -> Option<i128> {
        Some(a as i128)
    }
    fn is_field(&self) -> bool {
        self.factorization.pairs().len() == 1 && self.factorization.pairs()[0].1 == 1
    }
    fn cardinality(&self) -> Option<u64> {
        Some(self.modulus)
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
}

/// A residue together with its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZmodElement<'a> {
    ring: &'a Zmod,
    value: u64,
}

impl<'a> ZmodElement<'a> {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ring(&self) -> &'a Zmod {
        self.ring
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.add(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.ring.elem(self.ring.neg(self.value))
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.value)
    }
}

/// The prime-power factors `Z/p_i^{t_i}Z` of `Z/aZ`, in ascending prime order.
///
/// `RC_n(Z/aZ)` is the direct product of the circulant groups over these
/// rings, for every `n`.
pub fn crt_split(ring: &Zmod) -> Vec<Zmod> {
    ring.factorization()
        .pairs()
        .iter()
        .map(|&(p, t)| Zmod::new(p.pow(t)).expect("prime power modulus is valid"))
        .collect()
}

impl Circulant<Zmod> {
    /// Entrywise reduction into `Z/bZ` for a divisor `b` of the modulus.
    pub fn reduce(&self, target: &Zmod) -> Result<Circulant<Zmod>> {
        if self.ring().modulus() % target.modulus() != 0 {
            return Err(domain!(
                "{} does not divide {}",
                target.modulus(),
                self.ring().modulus()
            ));
        }
        let column = self
            .column()
            .iter()
            .map(|&c| c % target.modulus())
            .collect();
        Circulant::new(target.clone(), column)
    }

    /// Images under the CRT isomorphism onto the prime-power factors.
    pub fn crt_components(&self) -> Vec<Circulant<Zmod>> {
        crt_split(self.ring())
            .iter()
            .map(|r| self.reduce(r).expect("prime-power factor divides modulus"))
            .collect()
    }
}

/// Lifts a regular circulant over `Z/p^tZ` to `Z/p^{t+1}Z`.
///
/// Every residue is lifted to its least non-negative representative, so the
/// lift reduces back to `c` and has the same determinant modulo `p`.
pub fn lift_circulant(c: &Circulant<Zmod>) -> Result<Circulant<Zmod>> {
    let (p, _) = c
        .ring()
        .prime_power()
        .ok_or_else(|| domain!("modulus {} is not a prime power", c.ring().modulus()))?;
    if !c.is_regular() {
        return Err(Error::Singular);
    }
    let target = Zmod::new(c.ring().modulus() * p)?;
    let lifted = Circulant::new(target, c.column().to_vec())?;
    debug_assert!(lifted.is_regular());
    Ok(lifted)
}

/// Number of circulant matrices in the congruence kernel
/// `K_t = { I + p^t M }` of `GL_n(Z/p^{t+1}Z) -> GL_n(Z/p^tZ)`, which is `p^n`.
pub fn kernel_circulant_count(p: u64, n: u64) -> BigUint {
    Pow::pow(BigUint::from(p), n)
}

/// Fraction of the order of `RC_n(Z/p^{t}Z)` gained by one lifting step.
pub(crate) fn lifting_factor(p: u64, n: u64, t: u32) -> BigUint {
    Pow::pow(BigUint::from(p), n * (t as u64 - 1))
}
