//! Pascal matrices `(binomial(i, j))` reduced into a ring, and their inverses.

use crate::error::{domain, Result};
use crate::field::FiniteField;
use crate::numtheory::{lucas_binomial, prime_power_exponent};
use crate::ring::Ring;

use super::Matrix;

/// Lower triangular `n × n` Pascal matrix, built with the additive recurrence
/// in the target ring.
pub fn pascal_matrix<R: Ring>(ring: R, n: usize) -> Matrix<R> {
    let mut m = Matrix::zeros(ring.clone(), n, n);
    for i in 0..n {
        m.set(i, 0, ring.one());
        for j in 1..=i {
            let v = ring.add(m.get(i - 1, j - 1), m.get(i - 1, j));
            m.set(i, j, v);
        }
    }
    m
}

/// The closed-form inverse `((-1)^{i+j} binomial(i, j))` of the Pascal matrix.
pub fn pascal_inverse_signed<R: Ring>(ring: R, n: usize) -> Matrix<R> {
    let pasc = pascal_matrix(ring.clone(), n);
    Matrix::from_fn(ring.clone(), n, n, |i, j| {
        let b = pasc.get(i, j);
        if (i + j) % 2 == 0 {
            b
        } else {
            ring.neg(b)
        }
    })
}

/// The reflected inverse `(binomial(p^r - j, p^r - i))` (1-based indices) of
/// the Pascal matrix of size `p^r` over `F_p`.
///
/// Entries come from Lucas' theorem, not from the recurrence.
pub fn pascal_inverse_reflected(pr: u64, p: u64) -> Result<Matrix<FiniteField>> {
    let field = FiniteField::new(p, 1)?;
    if prime_power_exponent(pr, p).is_none() {
        return Err(domain!("{pr} is not a power of {p}"));
    }
    let n = pr as usize;
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..=i {
            // 0-based: binomial(pr - 1 - j, pr - 1 - i)
            m.set(i, j, lucas_binomial(pr - 1 - j as u64, pr - 1 - i as u64, p)?);
        }
    }
    Ok(m)
}

/// The `n × n` anti-diagonal reversal matrix.
pub fn reversal<R: Ring>(ring: R, n: usize) -> Matrix<R> {
    let (zero, one) = (ring.zero(), ring.one());
    Matrix::from_fn(ring, n, n, |i, j| if i + j + 1 == n { one } else { zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    fn fp(p: u64) -> FiniteField {
        FiniteField::new(p, 1).unwrap()
    }

    #[test]
    fn pascal_examples() {
        assert_eq!(pascal_matrix(fp(5), 1).entries(), &[1]);
        assert_eq!(
            pascal_matrix(fp(3), 3).entries(),
            &[1, 0, 0, 1, 1, 0, 1, 2, 1]
        );
        assert_eq!(
            pascal_matrix(fp(2), 4).entries(),
            &[1, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1]
        );
        // C(6,3) = 20 over Z
        assert_eq!(pascal_matrix(Integers, 7).get(6, 3), 20);
    }

    #[test]
    fn signed_inverse_examples() {
        assert_eq!(pascal_inverse_signed(fp(3), 1).entries(), &[1]);
        assert_eq!(
            pascal_inverse_signed(fp(3), 3).entries(),
            &[1, 0, 0, 2, 1, 0, 1, 1, 1]
        );
        assert_eq!(pascal_inverse_signed(fp(2), 2).entries(), &[1, 0, 1, 1]);
    }

    #[test]
    fn signed_inverse_inverts() {
        for n in 1..=16 {
            let pasc = pascal_matrix(Integers, n);
            let inv = pascal_inverse_signed(Integers, n);
            assert!(inv.mul(&pasc).unwrap().is_identity(), "Z, n={n}");
            assert!(pasc.mul(&inv).unwrap().is_identity());
            assert_eq!(pasc.inverse().unwrap(), inv);
            for p in [2u64, 3, 5, 7] {
                let pasc = pascal_matrix(fp(p), n);
                let inv = pascal_inverse_signed(fp(p), n);
                assert!(inv.mul(&pasc).unwrap().is_identity(), "p={p}, n={n}");
            }
        }
    }

    #[test]
    fn reflected_inverse_examples() {
        assert_eq!(pascal_inverse_reflected(2, 2).unwrap().entries(), &[1, 0, 1, 1]);
        assert_eq!(
            pascal_inverse_reflected(3, 3).unwrap().entries(),
            &[1, 0, 0, 2, 1, 0, 1, 1, 1]
        );
        let r = pascal_inverse_reflected(4, 2).unwrap();
        assert_eq!(r, pascal_matrix(fp(2), 4).inverse().unwrap());
        assert!(pascal_inverse_reflected(6, 2).is_err());
        assert!(pascal_inverse_reflected(1, 2).is_err());
        assert!(pascal_inverse_reflected(4, 4).is_err());
    }

    #[test]
    fn reflected_is_conjugated_transpose() {
        for p in [2u64, 3, 5, 7] {
            let n = p as usize;
            let r = reversal(fp(p), n);
            let r_inv = r.inverse().unwrap();
            let conj = r
                .mul(&pascal_matrix(fp(p), n).transpose())
                .unwrap()
                .mul(&r_inv)
                .unwrap();
            assert_eq!(pascal_inverse_reflected(p, p).unwrap(), conj);
        }
    }

    #[test]
    fn pascal_is_kronecker_power() {
        for (p, r) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)] {
            let base = pascal_matrix(fp(p), p as usize);
            let size = p.pow(r) as usize;
            assert_eq!(
                base.kronecker_power(r).unwrap(),
                pascal_matrix(fp(p), size),
                "p={p} r={r}"
            );
        }
    }
}
