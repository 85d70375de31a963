//! Finite fields `F_{p^s} = F_p[x]/(f)`.
//!
//! Elements are encoded as integers in `[0, p^s)`: the coefficient vector
//! of the reduced polynomial read as base-`p` digits, constant term least
//! significant. The prime field `F_p` therefore consists of the encodings
//! `0..p`, and subfields are never constructed separately: they are the
//! Frobenius-fixed subsets of one field.
//!
//! Construction is deterministic. The modulus `f` is the monic irreducible
//! polynomial of degree `s` with the smallest encoding, and the fixed
//! multiplicative generator is the smallest encoding of order `p^s - 1`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{domain, Result};
use crate::numtheory::{factorize, is_prime, lcm, multiplicative_order};
use crate::ring::Ring;

/// Log/antilog tables are built for fields up to this size.
const TABLE_LIMIT: u64 = 1 << 20;
/// Largest supported field order.
const ORDER_LIMIT: u64 = 1 << 32;

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Debug)]
struct Inner {
    p: u64,
    s: u32,
    order: u64,
    /// Monic modulus, ascending coefficients, length `s + 1`.
    modulus: Vec<u64>,
    generator: u64,
    tables: Option<Tables>,
}

/// A finite field `F_{p^s}`. Cloning shares the precomputed tables.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.s, self.0.modulus)
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.0.p, self.0.s)
    }
}

// Dense polynomials over F_p, ascending coefficients, no trailing zeros.
mod poly {
    use alloc::vec;
    use alloc::vec::Vec;

    use crate::numtheory::inv_mod;

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let len = a.len().max(b.len());
        let mut out = vec![0u64; len];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(out)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    /// Remainder of `a` modulo nonzero `b`.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p).expect("leading coefficient is a unit");
        while r.len() > db {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            for i in 0..=db {
                let k = dr - db + i;
                r[k] = (r[k] + p - c * b[i] % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `base^exp mod f`.
    pub fn pow_mod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut b = rem(base, f, p);
        while exp > 0 {
            if exp & 1 == 1 {
                result = rem(&mul(&result, &b, p), f, p);
            }
            b = rem(&mul(&b, &b, p), f, p);
            exp >>= 1;
        }
        result
    }
}

/// Whether the monic polynomial `f` of degree `s >= 1` is irreducible over
/// `F_p`: `gcd(f, x^{p^k} - x) = 1` for every `k <= s/2` and
/// `x^{p^s} = x mod f`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let s = f.len() - 1;
    let x = vec![0u64, 1];
    let x_mod = poly::rem(&x, f, p);
    let mut frob = x_mod.clone();
    for k in 1..=s {
        frob = poly::pow_mod(&frob, p, f, p);
        if k <= s / 2 {
            let g = poly::gcd(f, &poly::sub(&frob, &x_mod, p), p);
            if g.len() != 1 {
                return false;
            }
        }
    }
    frob == x_mod
}

impl FiniteField {
    /// Builds `F_{p^s}` deterministically.
    pub fn new(p: u64, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(domain!("{p} is not prime"));
        }
        if s == 0 {
            return Err(domain!("extension degree must be at least 1"));
        }
        let order = p
            .checked_pow(s)
            .filter(|&q| q <= ORDER_LIMIT)
            .ok_or_else(|| domain!("field order {p}^{s} exceeds 2^32"))?;

        let modulus = (0..order)
            .map(|lower| {
                let mut f = Self::digits(lower, p, s as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .ok_or_else(|| crate::Error::Inconsistency(format!("no irreducible of degree {s}")))?;

        let bare = FiniteField(Arc::new(Inner {
            p,
            s,
            order,
            modulus,
            generator: 0,
            tables: None,
        }));
        let generator = bare.find_generator();
        let tables = (order <= TABLE_LIMIT).then(|| Self::build_tables(&bare, generator));
        Ok(FiniteField(Arc::new(Inner {
            p,
            s,
            order,
            modulus: bare.0.modulus.clone(),
            generator,
            tables,
        })))
    }

    fn digits(mut x: u64, p: u64, len: usize) -> Vec<u64> {
        let mut out = vec![0u64; len];
        for d in out.iter_mut() {
            *d = x % p;
            x /= p;
        }
        out
    }

    fn find_generator(&self) -> u64 {
        let q1 = self.0.order - 1;
        if q1 == 1 {
            return 1;
        }
        let primes: Vec<u64> = factorize(q1).expect("q - 1 >= 2").primes().collect();
        (1..self.0.order)
            .find(|&g| primes.iter().all(|&l| self.pow(g, q1 / l) != 1))
            .expect("the multiplicative group is cyclic")
    }

    fn build_tables(field: &FiniteField, generator: u64) -> Tables {
        let q = field.0.order as usize;
        let mut exp = vec![0u32; q - 1];
        let mut log = vec![0u32; q];
        let mut x = 1u64;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x as u32;
            log[x as usize] = i as u32;
            x = field.mul(x, generator);
        }
        Tables { exp, log }
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.s
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// The modulus polynomial, ascending coefficients including the leading 1.
    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn generator(&self) -> u64 {
        self.0.generator
    }

    /// Coefficients of `x`, ascending powers, length exactly `s`.
    pub fn coeffs(&self, x: u64) -> Vec<u64> {
        Self::digits(x, self.0.p, self.0.s as usize)
    }

    /// Encodes a coefficient sequence (ascending powers, at most `s` entries).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<u64> {
        if coeffs.len() > self.0.s as usize {
            return Err(domain!("{} coefficients for a degree-{} field", coeffs.len(), self.0.s));
        }
        let mut x = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.0.p {
                return Err(domain!("coefficient {c} is not reduced mod {}", self.0.p));
            }
            x = x * self.0.p + c;
        }
        Ok(x)
    }

    /// Checks that `x` is a valid encoding.
    pub fn check(&self, x: u64) -> Result<u64> {
        if x >= self.0.order {
            return Err(domain!("{x} is not an element of {self}"));
        }
        Ok(x)
    }

    /// Text form of an element: its coefficient sequence, e.g. `[1,1]`.
    pub fn render(&self, x: u64) -> String {
        let parts: Vec<String> = self.coeffs(x).iter().map(|c| format!("{c}")).collect();
        format!("[{}]", parts.join(","))
    }

    fn poly_mul(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        let s = self.0.s as usize;
        let prod = poly::mul(&self.coeffs(a), &self.coeffs(b), p);
        let r = poly::rem(&prod, &self.0.modulus, p);
        let mut x = 0u64;
        for &c in r.iter().rev() {
            x = x * p + c;
        }
        debug_assert!(r.len() <= s);
        x
    }

    /// Relative Frobenius `x -> x^{p^t}`.
    pub fn frobenius(&self, x: u64, t: u64) -> u64 {
        let t = t % self.0.s as u64;
        (0..t).fold(x, |acc, _| self.pow(acc, self.0.p))
    }

    /// Whether `x` lies in the subfield `F_{p^t}`, i.e. is fixed by `x -> x^{p^t}`.
    pub fn in_subfield(&self, x: u64, t: u64) -> Result<bool> {
        self.check_subfield_degree(t)?;
        Ok(self.frobenius(x, t) == x)
    }

    fn check_subfield_degree(&self, t: u64) -> Result<()> {
        if t == 0 || self.0.s as u64 % t != 0 {
            return Err(domain!("{t} does not divide the degree {}", self.0.s));
        }
        Ok(())
    }

    /// The `p^t` elements of the subfield `F_{p^t}`, ascending by encoding.
    pub fn subfield_elements(&self, t: u64) -> Result<Vec<u64>> {
        self.check_subfield_degree(t)?;
        Ok((0..self.0.order)
            .filter(|&x| self.frobenius(x, t) == x)
            .collect())
    }

    /// `generator^((p^s - 1)/m)`, a primitive `m`-th root of unity.
    pub fn primitive_root_of_unity(&self, m: u64) -> Result<u64> {
        let q1 = self.0.order - 1;
        if m == 0 || q1 % m != 0 {
            return Err(domain!("{m} does not divide {q1}"));
        }
        Ok(self.pow(self.0.generator, q1 / m))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: u64) -> Result<u64> {
        if x == 0 {
            return Err(domain!("zero has no multiplicative order"));
        }
        let q1 = self.0.order - 1;
        if q1 == 1 {
            return Ok(1);
        }
        let mut ord = q1;
        for prime in factorize(q1)?.primes().collect::<Vec<_>>() {
            while ord % prime == 0 && self.pow(x, ord / prime) == 1 {
                ord /= prime;
            }
        }
        Ok(ord)
    }
}

/// The embedding of a smaller field `F_{p^t}` into `F_{p^s}`, sending the
/// class of `x` to the root of its modulus with the least encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    source: FiniteField,
    target: FiniteField,
    alpha: u64,
}

impl Embedding {
    pub fn new(source: &FiniteField, target: &FiniteField) -> Result<Self> {
        let (p, t) = (source.characteristic(), source.degree());
        if target.characteristic() != p || target.degree() % t != 0 {
            return Err(domain!("{source} is not a subfield of {target}"));
        }
        let f = source.modulus_coeffs();
        let eval = |y: u64| f.iter().rev().fold(0, |acc, &c| target.add(target.mul(acc, y), c));
        let q1 = target.order() - 1;
        let h = target.pow(target.generator(), q1 / (source.order() - 1));
        let mut y = 1;
        let mut alpha = if eval(0) == 0 { Some(0) } else { None };
        for _ in 0..source.order() - 1 {
            if eval(y) == 0 && alpha.is_none_or(|a| y < a) {
                alpha = Some(y);
            }
            y = target.mul(y, h);
        }
        let alpha = alpha
            .ok_or_else(|| crate::Error::Inconsistency(format!("{source} has no root in {target}")))?;
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            alpha,
        })
    }

    /// Image of the class of `x`.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn apply(&self, x: u64) -> Result<u64> {
        self.source.check(x)?;
        let tf = &self.target;
        Ok(self
            .source
            .coeffs(x)
            .iter()
            .rev()
            .fold(0, |acc, &c| tf.add(tf.mul(acc, self.alpha), c)))
    }
}

/// Least `s` with `t | s` and `m | p^s - 1`.
pub fn required_extension_degree(p: u64, t: u64, m: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    if m == 0 || m % p == 0 {
        return Err(domain!("{p} divides {m}"));
    }
    Ok(lcm(t, multiplicative_order(p, m)?))
}

impl Ring for FiniteField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.s == 1 {
            return (a + b) % p;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u64, 1u64);
        while a > 0 || b > 0 {
            out += (a % p + b % p) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    fn neg(&self, a: u64) -> u64 {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.s == 1 {
            return (p - a) % p;
        }
        let mut a = a;
        let (mut out, mut place) = (0u64, 1u64);
        while a > 0 {
            out += (p - a % p) % p * place;
            a /= p;
            place *= p;
        }
        out
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.0.s == 1 {
            return a * b % self.0.p;
        }
        match &self.0.tables {
            Some(t) => {
                let q1 = (self.0.order - 1) as usize;
                let idx = t.log[a as usize] as usize + t.log[b as usize] as usize;
                t.exp[if idx >= q1 { idx - q1 } else { idx }] as u64
            }
            None => self.poly_mul(a, b),
        }
    }

    fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        match &self.0.tables {
            Some(t) => {
                let q1 = self.0.order - 1;
                let l = t.log[a as usize] as u64;
                Some(t.exp[((q1 - l) % q1) as usize] as u64)
            }
            None => Some(self.pow(a, self.0.order - 2)),
        }
    }

    fn from_i128(&self, k: i128) -> u64 {
        k.rem_euclid(self.0.p as i128) as u64
    }

    fn from_bigint(&self, k: &BigInt) -> u64 {
        let p = BigInt::from(self.0.p);
        (((k % &p) + &p) % &p).to_u64().expect("residue fits")
    }

    fn lift(&self, a: u64) -> Option<i128> {
        (self.0.s == 1).then_some(a as i128)
    }

    fn is_field(&self) -> bool {
        true
    }

    fn cardinality(&self) -> Option<u64> {
        Some(self.0.order)
    }

    fn element(&self, index: u64) -> u64 {
        index
    }
}
