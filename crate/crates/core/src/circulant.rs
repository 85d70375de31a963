//! Circulant matrices, the order formulas for their unit groups, and the
//! brute-force enumeration that checks them.
//!
//! A circulant is stored as its defining vector `v`, the last column of its
//! dense form `(A^{n-1} v | A^{n-2} v | ... | v)` where `A` is the cyclic
//! shift. With 0-based indices the dense entry `(i, j)` is
//! `v[(i + n - 1 - j) mod n]`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::field::FiniteField;
use crate::linalg::{det_in_place, Matrix};
use crate::numtheory::{
    divisors, euler_phi, is_prime, multiplicative_order, pow_mod, split_prime_part,
};
use crate::ring::Ring;
use crate::zmod::{lifting_factor, Zmod};

/// Default enumeration budget, in candidate defining vectors.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circulant<R: Ring> {
    ring: R,
    column: Vec<R::Elem>,
}

impl<R: Ring> Circulant<R> {
    /// The circulant with defining (last) column `column`.
    pub fn new(ring: R, column: Vec<R::Elem>) -> Result<Self> {
        if column.is_empty() {
            return Err(domain!("a circulant needs n >= 1"));
        }
        Ok(Circulant { ring, column })
    }

    /// The circulant whose first column is `first`.
    pub fn from_first_column(ring: R, first: &[R::Elem]) -> Result<Self> {
        // first column = A^{n-1} v = (v_{n-1}, v_0, ..., v_{n-2})
        let mut column = first.to_vec();
        if !column.is_empty() {
            column.rotate_left(1);
        }
        Self::new(ring, column)
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut column = vec![ring.zero(); n.max(1)];
        column[n.max(1) - 1] = ring.one();
        Circulant { ring, column }
    }

    /// The shift generator `A` as a circulant.
    pub fn shift(ring: R, n: usize) -> Self {
        let n = n.max(1);
        let mut column = vec![ring.zero(); n];
        column[(2 * n - 2) % n] = ring.one();
        Circulant { ring, column }
    }

    /// Reads a dense matrix back, checking `a_{i,j+1} = a_{i-1,j}`.
    pub fn from_dense(m: &Matrix<R>) -> Result<Self> {
        if !m.is_square() || m.rows() == 0 {
            return Err(domain!("{}x{} matrix is not a circulant shape", m.rows(), m.cols()));
        }
        let n = m.rows();
        for i in 0..n {
            for j in 0..n {
                if m.get(i, (j + 1) % n) != m.get((i + n - 1) % n, j) {
                    return Err(domain!("matrix is not circulant at ({i}, {j})"));
                }
            }
        }
        Self::new(m.ring().clone(), m.column(n - 1))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.column.len()
    }

    /// The defining vector (last dense column).
    pub fn column(&self) -> &[R::Elem] {
        &self.column
    }

    pub fn to_dense(&self) -> Matrix<R> {
        let n = self.n();
        Matrix::from_fn(self.ring.clone(), n, n, |i, j| {
            self.column[(i + n - 1 - j) % n]
        })
    }

    /// Product as a cyclic convolution of defining vectors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let n = self.n();
        if n != other.n() {
            return Err(Error::DimensionMismatch {
                left: (n, n),
                right: (other.n(), other.n()),
            });
        }
        let ring = &self.ring;
        // last column of C·D is C·d
        let column = (0..n)
            .map(|i| {
                (0..n).fold(ring.zero(), |acc, j| {
                    let c = self.column[(i + n - 1 - j) % n];
                    ring.add(acc, ring.mul(c, other.column[j]))
                })
            })
            .collect();
        Ok(Circulant {
            ring: ring.clone(),
            column,
        })
    }

    pub fn determinant(&self) -> R::Elem {
        let n = self.n();
        let mut buf = self.to_dense().entries().to_vec();
        det_in_place(&self.ring, &mut buf, n)
    }

    pub fn is_regular(&self) -> bool {
        self.ring.is_unit(self.determinant())
    }

    /// Inverse, computed densely and read back as a circulant.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.to_dense().inverse()?;
        Self::from_dense(&inv).map_err(|_| {
            Error::Inconsistency(alloc::string::String::from(
                "inverse of a circulant is not circulant",
            ))
        })
    }
}

/// The cyclic shift `A` with ones at `(i, i+1 mod n)`; `A^n = I`.
pub fn shift_generator<R: Ring>(ring: R, n: usize) -> Matrix<R> {
    let (zero, one) = (ring.zero(), ring.one());
    Matrix::from_fn(ring, n, n, |i, j| if j == (i + 1) % n { one } else { zero })
}

/// What a group order was computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderParams {
    Field { p: u64, t: u32, n: u64 },
    Zmod { a: u64, n: u64 },
}

/// One factor of a group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderFactor {
    /// The contribution of one divisor `d | m` (with `n = m p^r`):
    /// `(q^{ord_d(q)} - 1)^{φ(d)/ord_d(q)} · p^{t (p^r - 1) φ(d)}`, `q = p^t`.
    Divisor {
        prime: u64,
        d: u64,
        cycle_length: u64,
        cycle_count: u64,
        p_exponent: u64,
        factor: BigUint,
    },
    /// The kernel of reduction `Z/p^tZ -> Z/pZ`: `p^{n(t-1)}`.
    Lift {
        prime: u64,
        p_exponent: u64,
        factor: BigUint,
    },
}

impl OrderFactor {
    pub fn factor(&self) -> &BigUint {
        match self {
            OrderFactor::Divisor { factor, .. } | OrderFactor::Lift { factor, .. } => factor,
        }
    }

    pub fn prime(&self) -> u64 {
        match self {
            OrderFactor::Divisor { prime, .. } | OrderFactor::Lift { prime, .. } => *prime,
        }
    }

    pub fn p_exponent(&self) -> u64 {
        match self {
            OrderFactor::Divisor { p_exponent, .. } | OrderFactor::Lift { p_exponent, .. } => {
                *p_exponent
            }
        }
    }
}

/// An exact group order with its per-divisor breakdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrder {
    pub value: BigUint,
    pub params: OrderParams,
    pub breakdown: Vec<OrderFactor>,
}

fn divisor_factors(p: u64, t: u32, n: u64) -> Vec<OrderFactor> {
    let (m, r) = split_prime_part(n, p);
    let pr = p.pow(r);
    divisors(m)
        .into_iter()
        .map(|d| {
            let q_mod_d = pow_mod(p, t as u64, d);
            let ord = multiplicative_order(q_mod_d, d).expect("p^t is a unit mod d");
            let phi = euler_phi(d);
            let cycle_count = phi / ord;
            let p_exponent = t as u64 * (pr - 1) * phi;
            let base = Pow::pow(BigUint::from(p), t as u64 * ord) - 1u32;
            let factor = Pow::pow(base, cycle_count) * Pow::pow(BigUint::from(p), p_exponent);
            OrderFactor::Divisor {
                prime: p,
                d,
                cycle_length: ord,
                cycle_count,
                p_exponent,
                factor,
            }
        })
        .collect()
}

fn assemble(params: OrderParams, breakdown: Vec<OrderFactor>) -> GroupOrder {
    let value = breakdown
        .iter()
        .fold(BigUint::one(), |acc, f| acc * f.factor());
    GroupOrder {
        value,
        params,
        breakdown,
    }
}

/// `|RC_n(F_{p^t})|`. With `n = m p^r`, `p ∤ m` and `q = p^t` this is
/// `∏_{d | m} (q^{ord_d(q)} - 1)^{φ(d)/ord_d(q)} · p^{t (p^r - 1) φ(d)}`.
pub fn order_rc_field(p: u64, t: u32, n: u64) -> Result<GroupOrder> {
    if !is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    if t == 0 || n == 0 {
        return Err(domain!("need t >= 1 and n >= 1"));
    }
    Ok(assemble(
        OrderParams::Field { p, t, n },
        divisor_factors(p, t, n),
    ))
}

/// `|RC_n(Z/aZ)|`: the product over `p^{t_p} || a` of
/// `p^{n (t_p - 1)} · |RC_n(F_p)|`.
pub fn order_rc_zmod(a: u64, n: u64) -> Result<GroupOrder> {
    if a < 2 {
        return Err(domain!("modulus must be at least 2, got {a}"));
    }
    if n == 0 {
        return Err(domain!("need n >= 1"));
    }
    let ring = Zmod::new(a)?;
    let mut breakdown = Vec::new();
    for &(p, tp) in ring.factorization().pairs() {
        if tp > 1 {
            breakdown.push(OrderFactor::Lift {
                prime: p,
                p_exponent: n * (tp as u64 - 1),
                factor: lifting_factor(p, n, tp),
            });
        }
        breakdown.extend(divisor_factors(p, 1, n));
    }
    Ok(assemble(OrderParams::Zmod { a, n }, breakdown))
}

/// Number of circulants of determinant 1 over `F_{p^t}`: the order divided
/// by `p^t - 1`. Fails if that division is not exact.
pub fn sl_count(p: u64, t: u32, n: u64) -> Result<BigUint> {
    let order = order_rc_field(p, t, n)?.value;
    let units = Pow::pow(BigUint::from(p), t) - 1u32;
    if !(&order % &units).is_zero() {
        return Err(Error::Inconsistency(alloc::format!(
            "{order} is not divisible by {units}"
        )));
    }
    Ok(order / units)
}

/// `|R|^n`, the number of defining vectors of length `n`.
pub fn candidate_count<R: Ring>(ring: &R, n: usize) -> Result<BigUint> {
    let q = ring
        .cardinality()
        .ok_or_else(|| domain!("cannot enumerate an infinite ring"))?;
    Ok(Pow::pow(BigUint::from(q), n as u64))
}

/// The candidate count as a `u64`, or a refusal naming the required budget.
pub fn check_budget<R: Ring>(ring: &R, n: usize, budget: u64) -> Result<u64> {
    let required = candidate_count(ring, n)?;
    match required.to_u64() {
        Some(total) if total <= budget => Ok(total),
        _ => Err(Error::BudgetExceeded { required, budget }),
    }
}

/// Visits every regular circulant whose defining-vector index lies in
/// `range`, passing the vector and its determinant.
///
/// Vectors are ordered lexicographically by element encoding, first entry
/// most significant, so contiguous ranges partition the space into shards.
pub fn scan_regular<R: Ring>(
    ring: &R,
    n: usize,
    range: Range<u64>,
    mut visit: impl FnMut(&[R::Elem], R::Elem),
) {
    let Some(q) = ring.cardinality() else {
        return;
    };
    if range.is_empty() || n == 0 {
        return;
    }
    let mut digits = vec![0u64; n];
    let mut rest = range.start;
    for d in digits.iter_mut().rev() {
        *d = rest % q;
        rest /= q;
    }
    let mut column: Vec<R::Elem> = digits.iter().map(|&d| ring.element(d)).collect();
    let mut buf = vec![ring.zero(); n * n];
    for _ in range {
        for i in 0..n {
            for j in 0..n {
                buf[i * n + j] = column[(i + n - 1 - j) % n];
            }
        }
        let det = det_in_place(ring, &mut buf, n);
        if ring.is_unit(det) {
            visit(&column, det);
        }
        // odometer step, last entry least significant
        for k in (0..n).rev() {
            digits[k] += 1;
            if digits[k] < q {
                column[k] = ring.element(digits[k]);
                break;
            }
            digits[k] = 0;
            column[k] = ring.element(0);
        }
    }
}

/// Counts regular circulants by exhaustive enumeration.
pub fn enumerate_regular<R: Ring>(ring: &R, n: usize, budget: u64) -> Result<u64> {
    let total = check_budget(ring, n, budget)?;
    let mut count = 0u64;
    scan_regular(ring, n, 0..total, |_, _| count += 1);
    Ok(count)
}

/// Counts circulants with determinant exactly `det`.
pub fn enumerate_with_determinant<R: Ring>(
    ring: &R,
    n: usize,
    det: R::Elem,
    budget: u64,
) -> Result<u64> {
    let total = check_budget(ring, n, budget)?;
    let mut count = 0u64;
    scan_regular(ring, n, 0..total, |_, d| {
        if d == det {
            count += 1;
        }
    });
    Ok(count)
}

/// Determinants attained by regular circulants over `F_{p^t}`.
pub fn det_image(p: u64, t: u32, n: usize, budget: u64) -> Result<BTreeSet<u64>> {
    let field = FiniteField::new(p, t)?;
    let total = check_budget(&field, n, budget)?;
    let mut image = BTreeSet::new();
    scan_regular(&field, n, 0..total, |_, d| {
        image.insert(d);
    });
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmod::Zmod;
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp(p: u64) -> FiniteField {
        FiniteField::new(p, 1).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn shift_generator_examples() {
        let f2 = fp(2);
        assert!(shift_generator(f2.clone(), 1).is_identity());
        assert!(shift_generator(f2.clone(), 3).pow(3).unwrap().is_identity());
        assert!(!shift_generator(f2, 3).pow(2).unwrap().is_identity());
        // sign of a 4-cycle
        let z5 = Zmod::new(5).unwrap();
        assert_eq!(shift_generator(z5, 4).determinant().unwrap(), 4);
        let a = shift_generator(fp(7), 4);
        assert_eq!(Circulant::from_dense(&a).unwrap(), Circulant::shift(fp(7), 4));
    }

    #[test]
    fn dense_layout() {
        let f5 = fp(5);
        let id = Circulant::identity(f5.clone(), 4);
        assert!(id.to_dense().is_identity());
        let c = Circulant::new(f5.clone(), vec![2, 3]).unwrap();
        assert_eq!(c.to_dense().entries(), &[3, 2, 2, 3]);
        let c = Circulant::new(fp(2), vec![1, 1, 0]).unwrap();
        let d = c.to_dense();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, (j + 1) % 3), d.get((i + 2) % 3, j));
            }
        }
        assert_eq!(d.column(2), vec![1, 1, 0]);
        assert_eq!(Circulant::from_dense(&d).unwrap(), c);
        let not_circ = Matrix::new(f5, 2, 2, vec![1, 2, 3, 4]).unwrap();
        assert!(Circulant::from_dense(&not_circ).is_err());
        assert!(Circulant::new(fp(2), vec![]).is_err());
    }

    #[test]
    fn first_column_constructor() {
        let z4 = Zmod::new(4).unwrap();
        let c = Circulant::from_first_column(z4, &[1, 2]).unwrap();
        assert_eq!(c.to_dense().entries(), &[1, 2, 2, 1]);
        assert_eq!(c.determinant(), 1);
        let c = Circulant::from_first_column(fp(7), &[1, 2, 3, 4]).unwrap();
        assert_eq!(c.to_dense().column(0), vec![1, 2, 3, 4]);
    }

    #[test]
    fn multiplication_examples() {
        let f3 = fp(3);
        let a = Circulant::shift(f3.clone(), 4);
        let id = Circulant::identity(f3.clone(), 4);
        assert_eq!(a.mul(&id).unwrap(), a);
        let a2 = Circulant::from_dense(&shift_generator(f3.clone(), 4).pow(2).unwrap()).unwrap();
        assert_eq!(a.mul(&a).unwrap(), a2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let c = Circulant::new(f3.clone(), (0..4).map(|_| rng.gen_range(0..3)).collect()).unwrap();
            let d = Circulant::new(f3.clone(), (0..4).map(|_| rng.gen_range(0..3)).collect()).unwrap();
            let prod = c.mul(&d).unwrap();
            assert_eq!(prod.to_dense(), c.to_dense().mul(&d.to_dense()).unwrap());
            assert_eq!(prod, d.mul(&c).unwrap());
        }
        let other = Circulant::identity(fp(5), 4);
        assert_eq!(a.mul(&other), Err(Error::RingMismatch));
        let short = Circulant::identity(f3, 3);
        assert!(matches!(a.mul(&short), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn regularity_examples() {
        let f2 = fp(2);
        assert!(Circulant::identity(f2.clone(), 5).is_regular());
        assert!(!Circulant::new(f2.clone(), vec![0; 5]).unwrap().is_regular());
        assert!(!Circulant::new(f2, vec![1, 1]).unwrap().is_regular());
    }

    #[test]
    fn group_closure_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let z = Zmod::new(12).unwrap();
        let f9 = FiniteField::new(3, 2).unwrap();
        let mut checked = 0;
        while checked < 200 {
            let c = Circulant::new(z.clone(), (0..3).map(|_| rng.gen_range(0..12)).collect()).unwrap();
            let d = Circulant::new(z.clone(), (0..3).map(|_| rng.gen_range(0..12)).collect()).unwrap();
            let e = Circulant::new(f9.clone(), (0..4).map(|_| rng.gen_range(0..9)).collect()).unwrap();
            if !(c.is_regular() && d.is_regular() && e.is_regular()) {
                continue;
            }
            assert!(c.mul(&d).unwrap().is_regular());
            let inv = c.inverse().unwrap();
            assert!(inv.is_regular());
            assert_eq!(c.mul(&inv).unwrap(), Circulant::identity(z.clone(), 3));
            let inv = e.inverse().unwrap();
            assert_eq!(e.mul(&inv).unwrap(), Circulant::identity(f9.clone(), 4));
            checked += 1;
        }
    }

    #[test]
    fn order_field_examples() {
        assert_eq!(order_rc_field(2, 1, 2).unwrap().value, big(2));
        assert_eq!(order_rc_field(2, 2, 3).unwrap().value, big(27));
        assert_eq!(order_rc_field(3, 1, 3).unwrap().value, big(18));
        for (p, t) in [(2u64, 1u32), (3, 2), (5, 3), (7, 1)] {
            assert_eq!(
                order_rc_field(p, t, 1).unwrap().value,
                big(p.pow(t) - 1)
            );
        }
        assert!(order_rc_field(4, 1, 2).is_err());
        assert!(order_rc_field(2, 0, 2).is_err());
        assert!(order_rc_field(2, 1, 0).is_err());
    }

    #[test]
    fn order_zmod_examples() {
        assert_eq!(order_rc_zmod(4, 2).unwrap().value, big(8));
        assert_eq!(order_rc_zmod(6, 2).unwrap().value, big(8));
        for p in [2u64, 3, 5, 7, 11] {
            assert_eq!(order_rc_zmod(p, 1).unwrap().value, big(p - 1));
        }
        assert!(order_rc_zmod(1, 2).is_err());
        assert!(order_rc_zmod(6, 0).is_err());
    }

    #[test]
    fn breakdown_multiplies_to_value() {
        for (p, t, n) in [(2u64, 1u32, 12u64), (3, 2, 18), (5, 1, 100), (7, 3, 49)] {
            let order = order_rc_field(p, t, n).unwrap();
            let product = order.breakdown.iter().fold(BigUint::one(), |a, f| a * f.factor());
            assert_eq!(product, order.value);
        }
        let order = order_rc_zmod(360, 6).unwrap();
        let product = order.breakdown.iter().fold(BigUint::one(), |a, f| a * f.factor());
        assert_eq!(product, order.value);
    }

    #[test]
    fn p_power_exponents_collapse() {
        for p in [2u64, 3, 5, 7] {
            for t in 1..=3u32 {
                for n in 1..=60u64 {
                    let (m, _) = split_prime_part(n, p);
                    let order = order_rc_field(p, t, n).unwrap();
                    let total: u64 = order.breakdown.iter().map(OrderFactor::p_exponent).sum();
                    assert_eq!(total, t as u64 * (n - m));
                }
            }
        }
    }

    #[test]
    fn zmod_order_is_crt_product() {
        for a in 2..=60u64 {
            let ring = Zmod::new(a).unwrap();
            for n in 1..=8u64 {
                let whole = order_rc_zmod(a, n).unwrap().value;
                let parts = crate::zmod::crt_split(&ring)
                    .iter()
                    .map(|r| order_rc_zmod(r.modulus(), n).unwrap().value)
                    .fold(BigUint::one(), |acc, x| acc * x);
                assert_eq!(whole, parts, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn zmod_prime_matches_field() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=20u64 {
                assert_eq!(
                    order_rc_zmod(p, n).unwrap().value,
                    order_rc_field(p, 1, n).unwrap().value
                );
            }
        }
    }

    #[test]
    fn sl_count_examples() {
        assert_eq!(sl_count(2, 2, 3).unwrap(), big(9));
        assert_eq!(sl_count(3, 1, 3).unwrap(), big(9));
        for n in 1..10 {
            assert_eq!(sl_count(2, 1, n).unwrap(), order_rc_field(2, 1, n).unwrap().value);
        }
        for (p, t, n) in [(3u64, 2u32, 7u64), (5, 1, 12), (7, 2, 10)] {
            let sl = sl_count(p, t, n).unwrap();
            assert_eq!(sl * (big(p.pow(t)) - 1u32), order_rc_field(p, t, n).unwrap().value);
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_regular(&fp(2), 2, DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(enumerate_regular(&fp(2), 4, DEFAULT_BUDGET).unwrap(), 8);
        assert_eq!(enumerate_regular(&Zmod::new(4).unwrap(), 2, DEFAULT_BUDGET).unwrap(), 8);
        assert_eq!(enumerate_regular(&FiniteField::new(2, 2).unwrap(), 3, DEFAULT_BUDGET).unwrap(), 27);
        assert_eq!(enumerate_regular(&fp(3), 3, DEFAULT_BUDGET).unwrap(), 18);
        assert_eq!(enumerate_regular(&Zmod::new(6).unwrap(), 2, DEFAULT_BUDGET).unwrap(), 8);
    }

    #[test]
    fn enumeration_budget() {
        match enumerate_regular(&fp(2), 64, DEFAULT_BUDGET) {
            Err(Error::BudgetExceeded { required, budget }) => {
                assert_eq!(required, Pow::pow(big(2), 64u32));
                assert_eq!(budget, DEFAULT_BUDGET);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
        assert!(enumerate_regular(&fp(2), 4, 15).is_err());
        assert_eq!(enumerate_regular(&fp(2), 4, 16).unwrap(), 8);
    }

    #[test]
    fn shards_partition_the_scan() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let mut all = Vec::new();
        scan_regular(&f4, 3, 0..64, |v, _| all.push(v.to_vec()));
        let mut sharded = Vec::new();
        for range in [0..10, 10..11, 11..40, 40..64] {
            scan_regular(&f4, 3, range, |v, _| sharded.push(v.to_vec()));
        }
        assert_eq!(all, sharded);
        assert_eq!(all.len(), 27);
        // lexicographic order
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn determinant_one_and_image() {
        assert_eq!(enumerate_with_determinant(&fp(3), 3, 1, DEFAULT_BUDGET).unwrap(), 9);
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(enumerate_with_determinant(&f4, 3, 1, DEFAULT_BUDGET).unwrap(), 9);
        assert_eq!(det_image(2, 1, 3, DEFAULT_BUDGET).unwrap(), BTreeSet::from([1]));
        assert_eq!(det_image(2, 2, 3, DEFAULT_BUDGET).unwrap(), BTreeSet::from([1, 2, 3]));
        assert_eq!(det_image(3, 1, 2, DEFAULT_BUDGET).unwrap(), BTreeSet::from([1, 2]));
        assert!(det_image(2, 1, 40, 1000).is_err());
    }

    #[test]
    fn formula_matches_enumeration_small() {
        for (p, t, max_n) in [(2u64, 1u32, 10usize), (3, 1, 6), (2, 2, 5), (5, 1, 4), (3, 2, 3)] {
            let f = FiniteField::new(p, t).unwrap();
            for n in 1..=max_n {
                let counted = enumerate_regular(&f, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(
                    big(counted),
                    order_rc_field(p, t, n as u64).unwrap().value,
                    "p={p} t={t} n={n}"
                );
            }
        }
    }
}
