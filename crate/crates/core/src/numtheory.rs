//! Elementary number theory on machine words.
//!
//! Everything here is exact and sized for desk-scale inputs (at most
//! `2^63`); factorization is plain trial division.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization, primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Whether the factored integer is a power of a single prime.
    pub fn is_prime_power(&self) -> bool {
        self.pairs.len() == 1
    }

    // Trial division; callers guarantee n >= 1.
    fn of(mut n: u64) -> Self {
        let mut pairs = Vec::new();
        let mut d = 2u64;
        while d.saturating_mul(d) <= n {
            if n % d == 0 {
                let mut e = 0;
                while n % d == 0 {
                    n /= d;
                    e += 1;
                }
                pairs.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if n > 1 {
            pairs.push((n, 1));
        }
        Factorization { pairs }
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(domain!("cannot factorize {n}, need n >= 2"));
    }
    Ok(Factorization::of(n))
}

/// Euler's totient, computed from the factorization. `euler_phi(0)` is 0.
pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    Factorization::of(n)
        .pairs
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n`, ascending. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut divs = vec![1u64];
    for &(p, e) in Factorization::of(n).pairs() {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Order of `k` in `(Z/dZ)^*`; the trivial group gives 1 for `d = 1`.
pub fn multiplicative_order(k: u64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(domain!("modulus must be positive"));
    }
    if d == 1 {
        return Ok(1);
    }
    if gcd(k % d, d) != 1 {
        return Err(domain!("{k} is not a unit modulo {d}"));
    }
    // The order divides phi(d): strip prime factors while the power stays 1.
    let mut order = euler_phi(d);
    for &(q, _) in Factorization::of(order).pairs() {
        while order % q == 0 && pow_mod(k, order / q, d) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Digits of `x` in base `p`, least significant first.
pub fn base_digits(mut x: u64, p: u64) -> Vec<u64> {
    let mut digits = Vec::new();
    while x > 0 {
        digits.push(x % p);
        x /= p;
    }
    digits
}

/// `binomial(a, b) mod p` as the product of digit-wise binomials in base `p`.
pub fn lucas_binomial(a: u64, b: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    if b > a {
        return Ok(0);
    }
    let (mut a, mut b) = (a, b);
    let mut acc = 1u64;
    while a > 0 || b > 0 {
        let (ai, bi) = (a % p, b % p);
        if bi > ai {
            return Ok(0);
        }
        acc = mul_mod(acc, digit_binomial(ai, bi, p), p);
        a /= p;
        b /= p;
    }
    Ok(acc)
}

// binomial(a, b) mod p for 0 <= b <= a < p; all denominators are units.
fn digit_binomial(a: u64, b: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = mul_mod(num, a - i, p);
        den = mul_mod(den, i + 1, p);
    }
    mul_mod(num, inv_mod(den, p).expect("digit factorials are units"), p)
}

/// Splits `n = m · p^r` with `p ∤ m`, returning `(m, r)`.
pub fn split_prime_part(n: u64, p: u64) -> (u64, u32) {
    let (mut m, mut r) = (n, 0u32);
    if n == 0 || p < 2 {
        return (n, 0);
    }
    while m % p == 0 {
        m /= p;
        r += 1;
    }
    (m, r)
}

/// Returns `r` when `q = p^r` with `r >= 1`.
pub fn prime_power_exponent(q: u64, p: u64) -> Option<u32> {
    if q < p || p < 2 {
        return None;
    }
    let (rest, r) = split_prime_part(q, p);
    (rest == 1 && r >= 1).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_by_count(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    fn binomial_exact(a: u64, b: u64) -> num_bigint::BigUint {
        use num_bigint::BigUint;
        if b > a {
            return BigUint::from(0u32);
        }
        let mut acc = BigUint::from(1u32);
        for i in 0..b {
            acc = acc * (a - i) / (i + 1);
        }
        acc
    }

    // Exact Pascal triangle in arbitrary precision.
    fn exact_triangle(size: usize) -> Vec<Vec<num_bigint::BigUint>> {
        use num_bigint::BigUint;
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(size + 1);
        for a in 0..=size {
            let mut row = vec![BigUint::from(0u32); size + 1];
            row[0] = BigUint::from(1u32);
            for b in 1..=a {
                row[b] = &rows[a - 1][b - 1] + &rows[a - 1][b];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn phi_matches_count() {
        for n in 1..=10_000u64 {
            assert_eq!(euler_phi(n), phi_by_count(n), "n = {n}");
        }
    }

    #[test]
    fn phi_sums_over_divisors() {
        for m in 1..=10_000u64 {
            let total: u64 = divisors(m).into_iter().map(euler_phi).sum();
            assert_eq!(total, m);
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(2, 1).unwrap(), 1);
        assert_eq!(multiplicative_order(5, 2).unwrap(), 1);
        assert!(matches!(
            multiplicative_order(2, 4),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn order_is_minimal() {
        for d in 1..=500u64 {
            for k in 0..d.max(2) {
                if gcd(k, d) != 1 {
                    continue;
                }
                let e = multiplicative_order(k, d).unwrap();
                assert_eq!(pow_mod(k, e, d), 1 % d);
                for f in 1..e {
                    assert_ne!(pow_mod(k, f, d), 1, "k={k} d={d} f={f}");
                }
            }
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7), vec![1, 7]);
        for n in 1..=300u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), brute);
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(4).unwrap().pairs(), &[(2, 2)]);
        assert_eq!(factorize(360).unwrap().pairs(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97).unwrap().pairs(), &[(97, 1)]);
        assert!(factorize(1).is_err());
        assert!(factorize(0).is_err());
        for n in 2..=2000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), n);
            assert!(f.primes().all(is_prime));
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binomial(5, 0, 2).unwrap(), 1);
        assert_eq!(lucas_binomial(5, 2, 2).unwrap(), 0);
        assert_eq!(lucas_binomial(6, 3, 3).unwrap(), 2);
        assert_eq!(lucas_binomial(3, 5, 7).unwrap(), 0);
        assert!(lucas_binomial(5, 2, 4).is_err());
    }

    #[test]
    fn lucas_matches_exact_binomials() {
        let triangle = exact_triangle(500);
        for p in [2u64, 3, 5, 7] {
            for a in 0..=500u64 {
                for b in 0..=500u64 {
                    let exact = &triangle[a as usize][b as usize] % p;
                    let expected = u64::try_from(exact).unwrap();
                    assert_eq!(lucas_binomial(a, b, p).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn lucas_large_prime_path() {
        for a in 0..80u64 {
            for b in 0..80u64 {
                let exact = u64::try_from(binomial_exact(a, b) % 101u64).unwrap();
                assert_eq!(lucas_binomial(a, b, 101).unwrap(), exact);
            }
        }
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(inv_mod(5, 1), Some(0));
    }

    #[test]
    fn prime_part_split() {
        assert_eq!(split_prime_part(12, 2), (3, 2));
        assert_eq!(split_prime_part(7, 2), (7, 0));
        assert_eq!(prime_power_exponent(8, 2), Some(3));
        assert_eq!(prime_power_exponent(12, 2), None);
        assert_eq!(prime_power_exponent(1, 2), None);
    }
}
