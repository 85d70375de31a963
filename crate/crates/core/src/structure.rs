//! The Jordan form of the cyclic shift over a splitting field, an explicit
//! conjugator onto it, and the resulting block Toeplitz canonical form of
//! regular circulants.
//!
//! Throughout, `n = m p^r` with `p ∤ m`, `q = p^t`, and `F_{p^s}` is the
//! smallest extension of `F_q` containing the `m`-th roots of unity. The
//! diagonal blocks are numbered `b = 1..m` and block `b` carries eigenvalue
//! `μ^b`, so it is indexed by the residue `b mod m`; block `m` is residue 0.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::circulant::{shift_generator, Circulant};
use crate::error::{domain, Error, Result};
use crate::field::{required_extension_degree, FiniteField};
use crate::linalg::{permutation_matrix, Matrix};
use crate::numtheory::{
    divisors, euler_phi, gcd, inv_mod, is_prime, lucas_binomial, multiplicative_order, pow_mod,
    split_prime_part,
};
use crate::ring::Ring;

/// Which Frobenius permutation of `Z/mZ` to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `x -> p^t x`
    Forward,
    /// `x -> p^{-t} x`
    Inverse,
}

/// A permutation of `Z/mZ` split into disjoint cycles.
///
/// Each cycle starts at its smallest residue and the cycles are sorted by
/// that residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    modulus: u64,
    cycles: Vec<Vec<u64>>,
    lengths: BTreeMap<u64, u64>,
}

impl CycleDecomposition {
    fn from_map(modulus: u64, image: impl Fn(u64) -> u64) -> Self {
        let mut seen = vec![false; modulus as usize];
        let mut cycles = Vec::new();
        let mut lengths = BTreeMap::new();
        for start in 0..modulus {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x);
                x = image(x);
            }
            *lengths.entry(cycle.len() as u64).or_insert(0) += 1;
            cycles.push(cycle);
        }
        CycleDecomposition {
            modulus,
            cycles,
            lengths,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn cycles(&self) -> &[Vec<u64>] {
        &self.cycles
    }

    /// Cycle length to number of cycles of that length.
    pub fn lengths(&self) -> &BTreeMap<u64, u64> {
        &self.lengths
    }

    /// The image of `x` under the permutation.
    pub fn apply(&self, x: u64) -> u64 {
        for cycle in &self.cycles {
            if let Some(i) = cycle.iter().position(|&y| y == x) {
                return cycle[(i + 1) % cycle.len()];
            }
        }
        x
    }
}

fn frobenius_multiplier(p: u64, t: u64, m: u64, direction: Direction) -> Result<u64> {
    if m == 0 {
        return Err(domain!("modulus must be at least 1"));
    }
    if gcd(p, m) != 1 {
        return Err(domain!("{p} is not coprime to {m}"));
    }
    let q = pow_mod(p, t, m);
    Ok(match direction {
        Direction::Forward => q,
        Direction::Inverse => inv_mod(q, m).unwrap_or(0),
    })
}

/// Cycles of `x -> p^{±t} x` on `Z/mZ`.
pub fn frobenius_permutation(
    p: u64,
    t: u64,
    m: u64,
    direction: Direction,
) -> Result<CycleDecomposition> {
    let k = frobenius_multiplier(p, t, m, direction)?;
    Ok(CycleDecomposition::from_map(m, |x| {
        ((x as u128 * k as u128) % m as u128) as u64
    }))
}

/// The cycle type predicted from divisors: each `d | m` contributes
/// `φ(d)/ord_d(p^t)` cycles of length `ord_d(p^t)`.
pub fn cycle_structure_formula(p: u64, t: u64, m: u64) -> Result<BTreeMap<u64, u64>> {
    frobenius_multiplier(p, t, m, Direction::Forward)?;
    let mut lengths = BTreeMap::new();
    for d in divisors(m) {
        let ord = multiplicative_order(pow_mod(p, t, d), d)?;
        *lengths.entry(ord).or_insert(0) += euler_phi(d) / ord;
    }
    Ok(lengths)
}

/// Upper triangular Toeplitz matrix `T(w)` with entry `(i, j)` equal to
/// `w_{k-j+i}` (1-based) and zero outside `1..=k`.
pub fn toeplitz_t<R: Ring>(ring: R, w: &[R::Elem]) -> Result<Matrix<R>> {
    let k = w.len();
    if k == 0 {
        return Err(domain!("T(w) needs a nonempty vector"));
    }
    let zero = ring.zero();
    Ok(Matrix::from_fn(ring, k, k, |i, j| {
        if j >= i {
            w[k - 1 - (j - i)]
        } else {
            zero
        }
    }))
}

/// Number of vectors satisfying the admissibility conditions:
/// the product over the cycles of `x -> p^{-t} x` on `Z/mZ` of
/// `(p^{t m_k} - 1) · p^{t m_k (p^r - 1)}`.
pub fn admissible_count(p: u64, t: u32, n: u64) -> Result<BigUint> {
    if !is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    if t == 0 || n == 0 {
        return Err(domain!("need t >= 1 and n >= 1"));
    }
    let (m, r) = split_prime_part(n, p);
    let pr = p.pow(r);
    let sigma = frobenius_permutation(p, t as u64, m, Direction::Inverse)?;
    let bp = BigUint::from(p);
    Ok(sigma
        .cycles()
        .iter()
        .map(|c| {
            let e = t as u64 * c.len() as u64;
            (Pow::pow(&bp, e) - 1u32) * Pow::pow(&bp, e * (pr - 1))
        })
        .fold(BigUint::one(), |acc, f| acc * f))
}

/// `X C X^{-1}` together with the last columns of its diagonal blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub matrix: Matrix<FiniteField>,
    /// `blocks[b - 1]` is the vector `w` with `T(w)` the `b`-th diagonal block.
    pub blocks: Vec<Vec<u64>>,
}

/// Everything needed to move circulants over `F_{p^t}` into canonical form.
#[derive(Debug, Clone)]
pub struct StructureContext {
    p: u64,
    t: u32,
    n: u64,
    m: u64,
    r: u32,
    pr: usize,
    field: FiniteField,
    mu: u64,
    sigma: CycleDecomposition,
    x: Matrix<FiniteField>,
    x_inv: Matrix<FiniteField>,
    a_tilde: Matrix<FiniteField>,
}

impl StructureContext {
    pub fn new(p: u64, t: u32, n: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(domain!("{p} is not prime"));
        }
        if t == 0 || n == 0 {
            return Err(domain!("need t >= 1 and n >= 1"));
        }
        let (m, r) = split_prime_part(n, p);
        let s = required_extension_degree(p, t as u64, m)?;
        let s = u32::try_from(s).map_err(|_| domain!("extension degree {s} is too large"))?;
        let field = FiniteField::new(p, s)?;
        let mu = field.primitive_root_of_unity(m)?;
        let sigma = frobenius_permutation(p, t as u64, m, Direction::Inverse)?;
        let pr = p.pow(r) as usize;
        let empty = Matrix::zeros(field.clone(), 0, 0);
        let mut ctx = StructureContext {
            p,
            t,
            n,
            m,
            r,
            pr,
            field,
            mu,
            sigma,
            x: empty.clone(),
            x_inv: empty.clone(),
            a_tilde: empty,
        };
        let (x, x_inv) = ctx.build_conjugator()?;
        ctx.x = x;
        ctx.x_inv = x_inv;
        ctx.a_tilde = ctx.build_jordan_blocks();

        if !ctx.x.mul(&ctx.x_inv)?.is_identity() {
            return Err(Error::Inconsistency(String::from(
                "conjugator times its closed-form inverse is not the identity",
            )));
        }
        let shift = shift_generator(ctx.field.clone(), n as usize);
        if ctx.x.mul(&shift)?.mul(&ctx.x_inv)? != ctx.a_tilde {
            return Err(Error::Inconsistency(String::from(
                "conjugator does not map the shift to its Jordan form",
            )));
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `p^r`, the size of each Jordan block.
    pub fn block_size(&self) -> usize {
        self.pr
    }

    /// The splitting field `F_{p^s}`.
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// The primitive `m`-th root of unity `μ`.
    pub fn mu(&self) -> u64 {
        self.mu
    }

    /// Cycles of `x -> p^{-t} x` on `Z/mZ`.
    pub fn sigma(&self) -> &CycleDecomposition {
        &self.sigma
    }

    pub fn conjugator(&self) -> (&Matrix<FiniteField>, &Matrix<FiniteField>) {
        (&self.x, &self.x_inv)
    }

    /// The Jordan form `Ã = X A X^{-1}`.
    pub fn jordan_blocks(&self) -> &Matrix<FiniteField> {
        &self.a_tilde
    }

    /// Diagonal position (0-based) of the block for residue `res`.
    pub fn position_of(&self, res: u64) -> usize {
        ((res % self.m + self.m - 1) % self.m) as usize
    }

    /// Residue of the block at diagonal position `pos` (0-based).
    pub fn residue_of(&self, pos: usize) -> u64 {
        (pos as u64 + 1) % self.m
    }

    fn mu_pow(&self, e: u128) -> u64 {
        self.field.pow(self.mu, (e % self.m as u128) as u64)
    }

    fn binomial(&self, a: u64, b: u64) -> u64 {
        lucas_binomial(a, b, self.p).expect("p is prime")
    }

    fn build_jordan_blocks(&self) -> Matrix<FiniteField> {
        let (n, pr) = (self.n as usize, self.pr);
        let f = &self.field;
        Matrix::from_fn(f.clone(), n, n, |i, j| {
            if i / pr != j / pr {
                f.zero()
            } else if i == j {
                self.mu_pow((i / pr + 1) as u128)
            } else if j == i + 1 {
                f.one()
            } else {
                f.zero()
            }
        })
    }

    /// `Ã_b^k = (μ^{(k+i-j) b} binomial(k, j-i))` for `b` in `1..=m`.
    pub fn jordan_block_power(&self, b: u64, k: u64) -> Matrix<FiniteField> {
        let f = &self.field;
        Matrix::from_fn(f.clone(), self.pr, self.pr, |i, j| {
            if j < i || (j - i) as u64 > k {
                return f.zero();
            }
            let e = (k - (j - i) as u64) as u128 * b as u128;
            f.mul(self.mu_pow(e), self.binomial(k, (j - i) as u64))
        })
    }

    /// `X(k) = ((-1)^{i+j} μ^{(i-j)k} binomial(i-1, j-1))` and its inverse
    /// `(μ^{(i-j)k} binomial(i-1, j-1))`.
    pub fn conjugator_blocks(&self, k: u64) -> (Matrix<FiniteField>, Matrix<FiniteField>) {
        let f = &self.field;
        let inv = Matrix::from_fn(f.clone(), self.pr, self.pr, |i, j| {
            if j > i {
                return f.zero();
            }
            let e = (i - j) as u128 * k as u128;
            f.mul(self.mu_pow(e), self.binomial(i as u64, j as u64))
        });
        let xk = Matrix::from_fn(f.clone(), self.pr, self.pr, |i, j| {
            let e = inv.get(i, j);
            if (i + j) % 2 == 0 {
                e
            } else {
                f.neg(e)
            }
        });
        (xk, inv)
    }

    /// `X = m^{-1} (μ^{-a b p^r} X(a))_{a,b}` and
    /// `X^{-1} = (μ^{a b p^r} X(b)^{-1})_{a,b}`, with `a, b` in `1..=m`.
    pub fn build_conjugator(&self) -> Result<(Matrix<FiniteField>, Matrix<FiniteField>)> {
        let f = &self.field;
        let (m, pr) = (self.m, self.pr);
        let m_inv = f
            .inv(f.from_i128(m as i128))
            .ok_or_else(|| Error::Inconsistency(String::from("m is not invertible")))?;
        let blocks: Vec<_> = (1..=m).map(|k| self.conjugator_blocks(k)).collect();
        let n = self.n as usize;
        let pr_mod = pr as u128 % m as u128;
        let x = Matrix::from_fn(f.clone(), n, n, |i, j| {
            let (a, b) = ((i / pr + 1) as u128, (j / pr + 1) as u128);
            let e = m as u128 - (a * b * pr_mod) % m as u128;
            let entry = blocks[i / pr].0.get(i % pr, j % pr);
            f.mul(m_inv, f.mul(self.mu_pow(e), entry))
        });
        let x_inv = Matrix::from_fn(f.clone(), n, n, |i, j| {
            let (a, b) = ((i / pr + 1) as u128, (j / pr + 1) as u128);
            let entry = blocks[j / pr].1.get(i % pr, j % pr);
            f.mul(self.mu_pow(a * b * pr_mod), entry)
        });
        Ok((x, x_inv))
    }

    /// The block permutation `P` as a map on diagonal positions:
    /// position of `res` goes to the position of `p^{-t} res`.
    pub fn block_permutation(&self) -> Vec<usize> {
        (0..self.m as usize)
            .map(|pos| self.position_of(self.sigma.apply(self.residue_of(pos))))
            .collect()
    }

    /// Whether `F^t(X) = P X` with `P` the block permutation for
    /// `x -> p^{-t} x`.
    pub fn frobenius_conjugation_check(&self) -> bool {
        let t = self.t as u64;
        let frob = self.x.map(|e| self.field.frobenius(e, t));
        let Ok(p) = permutation_matrix(self.field.clone(), &self.block_permutation(), self.pr)
        else {
            return false;
        };
        p.mul(&self.x).is_ok_and(|px| px == frob)
    }

    /// Degree of the subfield holding the leader of a cycle of length `len`.
    pub fn leader_degree(&self, len: usize) -> u64 {
        self.t as u64 * len as u64
    }

    /// Splits a stacked vector of length `n` into its `m` blocks.
    pub fn split_blocks(&self, v: &[u64]) -> Result<Vec<Vec<u64>>> {
        if v.len() as u64 != self.n {
            return Err(domain!("expected {} entries, got {}", self.n, v.len()));
        }
        for &x in v {
            self.field.check(x)?;
        }
        Ok(v.chunks(self.pr).map(<[u64]>::to_vec).collect())
    }

    /// The leader block of each cycle of `σ`, in cycle order.
    pub fn leaders(&self, blocks: &[Vec<u64>]) -> Vec<Vec<u64>> {
        self.sigma
            .cycles()
            .iter()
            .map(|c| blocks[self.position_of(c[0])].clone())
            .collect()
    }

    fn frobenius_block(&self, w: &[u64], e: u64) -> Vec<u64> {
        w.iter()
            .map(|&x| self.field.frobenius(x, e * self.t as u64))
            .collect()
    }

    /// Checks the admissibility conditions on a vector given block by block
    /// in diagonal order: every block has a nonzero last entry, each cycle
    /// leader lies in `F_{p^{t m_k}}`, and the rest of each cycle is
    /// determined by the leader through the Frobenius.
    ///
    /// Along a cycle `(s_1, s_2 = p^{-t} s_1, ...)` of length `m_k` the
    /// block of `s_i` equals `F^{((m_k - i + 1) mod m_k) t}` of the leader,
    /// which is the condition `v_{(p^t a)} = F^t(v_{(a)})` for all `a`.
    pub fn check_admissible(&self, v: &[u64]) -> Result<bool> {
        let blocks = self.split_blocks(v)?;
        if blocks.iter().any(|b| b[self.pr - 1] == 0) {
            return Ok(false);
        }
        for cycle in self.sigma.cycles() {
            let len = cycle.len();
            let leader = &blocks[self.position_of(cycle[0])];
            let degree = self.leader_degree(len);
            if leader.iter().any(|&x| self.field.frobenius(x, degree) != x) {
                return Ok(false);
            }
            for (i, &res) in cycle.iter().enumerate().skip(1) {
                let expected = self.frobenius_block(leader, ((len - i) % len) as u64);
                if blocks[self.position_of(res)] != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `X C X^{-1}` for a regular circulant with entries in `F_{p^t}`.
    pub fn canonical_form(&self, c: &Circulant<FiniteField>) -> Result<CanonicalForm> {
        if c.ring() != &self.field {
            return Err(Error::RingMismatch);
        }
        if c.n() as u64 != self.n {
            return Err(Error::DimensionMismatch {
                left: (self.n as usize, self.n as usize),
                right: (c.n(), c.n()),
            });
        }
        for &x in c.column() {
            self.field.check(x)?;
            if self.field.frobenius(x, self.t as u64) != x {
                return Err(domain!(
                    "entry {} does not lie in F_{}^{}",
                    self.field.render(x),
                    self.p,
                    self.t
                ));
            }
        }
        if !c.is_regular() {
            return Err(Error::Singular);
        }
        let matrix = self.x.mul(&c.to_dense())?.mul(&self.x_inv)?;
        let pr = self.pr;
        let mut blocks = Vec::with_capacity(self.m as usize);
        for b in 0..self.m as usize {
            let w: Vec<u64> = (0..pr).map(|i| matrix.get(b * pr + i, b * pr + pr - 1)).collect();
            let expected = toeplitz_t(self.field.clone(), &w)?;
            if matrix.submatrix(b * pr, b * pr, pr, pr) != expected {
                return Err(Error::Inconsistency(alloc::format!(
                    "diagonal block {} is not upper triangular Toeplitz",
                    b + 1
                )));
            }
            blocks.push(w);
        }
        let n = self.n as usize;
        for i in 0..n {
            for j in 0..n {
                if i / pr != j / pr && matrix.get(i, j) != 0 {
                    return Err(Error::Inconsistency(String::from(
                        "canonical form has entries off the diagonal blocks",
                    )));
                }
            }
        }
        Ok(CanonicalForm { matrix, blocks })
    }

    /// Completes one leader block per cycle of `σ` to all `m` blocks and
    /// returns the circulant whose canonical form has exactly those blocks.
    pub fn synthesize_circulant(&self, leaders: &[Vec<u64>]) -> Result<Circulant<FiniteField>> {
        let cycles = self.sigma.cycles();
        if leaders.len() != cycles.len() {
            return Err(domain!(
                "expected {} leader blocks, got {}",
                cycles.len(),
                leaders.len()
            ));
        }
        let mut blocks = vec![Vec::new(); self.m as usize];
        for (cycle, leader) in cycles.iter().zip(leaders) {
            if leader.len() != self.pr {
                return Err(domain!("leader blocks need {} entries", self.pr));
            }
            let degree = self.leader_degree(cycle.len());
            for &x in leader {
                self.field.check(x)?;
                if self.field.frobenius(x, degree) != x {
                    return Err(domain!(
                        "{} does not lie in F_{}^{}",
                        self.field.render(x),
                        self.p,
                        degree
                    ));
                }
            }
            if leader[self.pr - 1] == 0 {
                return Err(domain!("leader blocks need a nonzero last entry"));
            }
            let len = cycle.len();
            for (i, &res) in cycle.iter().enumerate() {
                blocks[self.position_of(res)] = self.frobenius_block(leader, ((len - i) % len) as u64);
            }
        }
        // the blocks of X C X^{-1} are m times the blocks of X c
        let f = &self.field;
        let m_inv = f
            .inv(f.from_i128(self.m as i128))
            .ok_or_else(|| Error::Inconsistency(String::from("m is not invertible")))?;
        let v: Vec<u64> = blocks.concat().into_iter().map(|x| f.mul(m_inv, x)).collect();
        let column = self.x_inv.mul_vec(&v)?;
        if column.iter().any(|&x| f.frobenius(x, self.t as u64) != x) {
            return Err(Error::Inconsistency(String::from(
                "synthesized circulant has entries outside the base field",
            )));
        }
        Circulant::new(f.clone(), column)
    }
}
