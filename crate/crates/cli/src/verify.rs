//! Property suites comparing the closed formulas against exhaustive counts
//! and the structure theory against direct matrix computation.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rcm_core::circulant::{order_rc_field, order_rc_zmod, shift_generator, sl_count};
use rcm_core::linalg::{pascal_inverse_reflected, pascal_inverse_signed, pascal_matrix};
use rcm_core::numtheory::{
    factorize, gcd, lucas_binomial, prime_power_exponent, split_prime_part,
};
use rcm_core::structure::{
    admissible_count, cycle_structure_formula, frobenius_permutation, Direction,
};
use rcm_core::zmod::crt_split;
use rcm_core::{BigUint, Circulant, Error, FiniteField, Ring, StructureContext, Zmod};
use serde_json::{json, Value};

use crate::parallel::{count_regular, determinant_image};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub skipped: u64,
    pub status: Status,
}

impl Check {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }

    pub fn to_json(&self) -> Value {
        let (status, detail) = match &self.status {
            Status::Pass => ("pass", Value::Null),
            Status::Fail(why) => ("fail", json!(why)),
            Status::Skipped(why) => ("skipped", json!(why)),
        };
        json!({
            "name": self.name,
            "status": status,
            "cases": self.cases,
            "skipped": self.skipped,
            "detail": detail,
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS    {} ({} cases", self.name, self.cases)?,
            Status::Fail(why) => write!(f, "FAIL    {}: {} ({} cases", self.name, why, self.cases)?,
            Status::Skipped(why) => write!(f, "SKIPPED {}: {} ({} cases", self.name, why, self.cases)?,
        }
        if self.skipped > 0 {
            write!(f, ", {} skipped by budget", self.skipped)?;
        }
        write!(f, ")")
    }
}

enum Outcome {
    Ok,
    Fail(String),
    Skip(String),
}

impl From<Result<(), String>> for Outcome {
    fn from(r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Outcome::Ok,
            Err(why) => Outcome::Fail(why),
        }
    }
}

fn tally(name: &str, outcomes: impl IntoIterator<Item = Outcome>) -> Check {
    let (mut cases, mut skipped) = (0, 0);
    let (mut failure, mut skip_reason) = (None, None);
    for o in outcomes {
        match o {
            Outcome::Ok => cases += 1,
            Outcome::Fail(why) => {
                cases += 1;
                failure.get_or_insert(why);
            }
            Outcome::Skip(why) => {
                skipped += 1;
                skip_reason.get_or_insert(why);
            }
        }
    }
    let status = match (failure, skip_reason) {
        (Some(why), _) => Status::Fail(why),
        (None, Some(why)) if cases == 0 => Status::Skipped(why),
        _ => Status::Pass,
    };
    Check {
        name: String::from(name),
        cases,
        skipped,
        status,
    }
}

/// Runs `body` and turns a budget refusal into a skip.
fn budgeted(body: impl FnOnce() -> rcm_core::Result<Result<(), String>>) -> Outcome {
    match body() {
        Ok(r) => r.into(),
        Err(Error::BudgetExceeded { required, budget }) => {
            Outcome::Skip(format!("needs {required} candidates, budget {budget}"))
        }
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: impl FnOnce() -> String, a: T, b: T) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{}: {a:?} != {b:?}", what()))
    }
}

fn prime_powers(limit: u64) -> Vec<(u64, u32)> {
    (2..=limit)
        .filter_map(|q| {
            let f = factorize(q).ok()?;
            f.is_prime_power().then(|| f.pairs()[0])
        })
        .collect()
}

/// Every `(p, t, n)` with `q = p^t <= 128` and `q^n <= 2^20`.
pub fn field_grid() -> Vec<(u64, u32, usize)> {
    let mut grid = Vec::new();
    for (p, t) in prime_powers(128) {
        let q = p.pow(t);
        let mut size = q;
        let mut n = 1;
        while size <= 1 << 20 {
            grid.push((p, t, n));
            size *= q;
            n += 1;
        }
    }
    grid
}

pub fn field_orders(budget: u64) -> Check {
    let outcomes: Vec<Outcome> = field_grid()
        .into_par_iter()
        .map(|(p, t, n)| {
            budgeted(|| {
                let f = FiniteField::new(p, t)?;
                let counted = count_regular(&f, n, budget, |_, _| true)?;
                let formula = order_rc_field(p, t, n as u64)?.value;
                Ok(expect_eq(|| format!("F_{p}^{t} n={n}"), BigUint::from(counted), formula))
            })
        })
        .collect();
    tally("field order formula vs enumeration", outcomes)
}

pub fn zmod_orders(budget: u64) -> Check {
    let mut cases = Vec::new();
    for a in 2..=12u64 {
        for n in 1..=5u32 {
            if a.pow(n) <= 1 << 20 {
                cases.push((a, n as usize));
            }
        }
    }
    let outcomes: Vec<Outcome> = cases
        .into_par_iter()
        .map(|(a, n)| {
            budgeted(|| {
                let z = Zmod::new(a)?;
                let counted = count_regular(&z, n, budget, |_, _| true)?;
                let formula = order_rc_zmod(a, n as u64)?.value;
                Ok(expect_eq(|| format!("Z/{a} n={n}"), BigUint::from(counted), formula))
            })
        })
        .collect();
    tally("residue ring order formula vs enumeration", outcomes)
}

pub fn lifting(budget: u64) -> Check {
    let mut cases = Vec::new();
    for p in [2u64, 3] {
        for n in 1..=4usize {
            for t in 1..=2u32 {
                cases.push((p, n, t));
            }
        }
    }
    let outcomes: Vec<Outcome> = cases
        .into_par_iter()
        .map(|(p, n, t)| {
            budgeted(|| {
                let lower = count_regular(&Zmod::new(p.pow(t))?, n, budget, |_, _| true)?;
                let upper = count_regular(&Zmod::new(p.pow(t + 1))?, n, budget, |_, _| true)?;
                let factor = BigUint::from(p).pow(n as u32);
                Ok(expect_eq(
                    || format!("p={p} n={n} t={t}"),
                    BigUint::from(upper),
                    factor * lower,
                ))
            })
        })
        .collect();
    tally("lifting recursion by enumeration", outcomes)
}

pub fn zmod_crt() -> Check {
    let mut outcomes = Vec::new();
    for a in 2..=200u64 {
        let Ok(ring) = Zmod::new(a) else { continue };
        for n in 1..=10u64 {
            let r = (|| {
                let whole = order_rc_zmod(a, n).map_err(|e| e.to_string())?.value;
                let mut product = BigUint::from(1u32);
                for part in crt_split(&ring) {
                    product *= order_rc_zmod(part.modulus(), n).map_err(|e| e.to_string())?.value;
                }
                expect_eq(|| format!("a={a} n={n}"), whole, product)
            })();
            outcomes.push(r.into());
        }
    }
    tally("residue ring order is the CRT product", outcomes)
}

pub fn cycles() -> Check {
    let mut outcomes = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
        let p = factorize(q).unwrap().pairs()[0].0;
        let t = prime_power_exponent(q, p).unwrap() as u64;
        for m in (1..=200u64).filter(|&m| gcd(q, m) == 1) {
            outcomes.push(cycle_case(p, t, m).into());
        }
    }
    tally("cycle structure formula vs decomposition", outcomes)
}

fn cycle_case(p: u64, t: u64, m: u64) -> Result<(), String> {
    let formula = cycle_structure_formula(p, t, m).map_err(|e| e.to_string())?;
    let q = p.pow(t as u32) % m;
    for dir in [Direction::Forward, Direction::Inverse] {
        let d = frobenius_permutation(p, t, m, dir).map_err(|e| e.to_string())?;
        let mut seen = vec![false; m as usize];
        for cycle in d.cycles() {
            for (i, &x) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                let (from, to) = match dir {
                    Direction::Forward => (x, next),
                    Direction::Inverse => (next, x),
                };
                if q as u128 * from as u128 % m as u128 != to as u128 {
                    return Err(format!("q={p}^{t} m={m}: {from} does not map to {to}"));
                }
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(format!("q={p}^{t} m={m}: {x} appears twice"));
                }
            }
        }
        if seen.contains(&false) {
            return Err(format!("q={p}^{t} m={m}: cycles do not cover Z/m"));
        }
        expect_eq(|| format!("q={p}^{t} m={m} {dir:?}"), &formula, d.lengths())?;
    }
    Ok(())
}

fn pascal_sizes() -> Vec<(u64, u32)> {
    let mut sizes = Vec::new();
    for p in [2u64, 3, 5, 7] {
        sizes.push((p, 1));
        sizes.push((p, 2));
    }
    sizes.push((2, 3));
    sizes
}

pub fn pascal() -> Vec<Check> {
    let fp = |p| FiniteField::new(p, 1).unwrap();
    let signed = pascal_sizes().into_iter().map(|(p, r)| {
        let n = p.pow(r) as usize;
        let pasc = pascal_matrix(fp(p), n);
        let inv = pascal_inverse_signed(fp(p), n);
        let ok = inv.mul(&pasc).unwrap().is_identity() && pasc.mul(&inv).unwrap().is_identity();
        Outcome::from(if ok { Ok(()) } else { Err(format!("p={p} r={r}")) })
    });
    let signed = tally("signed Pascal inverse", signed.collect::<Vec<_>>());
    let reflected = pascal_sizes().into_iter().map(|(p, r)| {
        let n = p.pow(r);
        let pasc = pascal_matrix(fp(p), n as usize);
        let r_inv = match pascal_inverse_reflected(n, p) {
            Ok(m) => m,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let ok = r_inv.mul(&pasc).unwrap().is_identity() && pasc.mul(&r_inv).unwrap().is_identity();
        Outcome::from(if ok { Ok(()) } else { Err(format!("p={p} r={r}")) })
    });
    let reflected = tally("reflected Pascal inverse", reflected.collect::<Vec<_>>());
    let kron = pascal_sizes().into_iter().map(|(p, r)| {
        let base = pascal_matrix(fp(p), p as usize);
        let power = base.kronecker_power(r).unwrap();
        let ok = power == pascal_matrix(fp(p), p.pow(r) as usize);
        Outcome::from(if ok { Ok(()) } else { Err(format!("p={p} r={r}")) })
    });
    let kron = tally("Pascal matrix is a Kronecker power", kron.collect::<Vec<_>>());
    vec![signed, reflected, kron, lucas()]
}

fn lucas() -> Check {
    const N: usize = 500;
    let mut row = vec![BigUint::from(1u32)];
    let mut outcomes = Vec::new();
    for a in 0..=N {
        for p in [2u64, 3, 5, 7] {
            let bp = BigUint::from(p);
            for (b, exact) in row.iter().enumerate() {
                let direct = (exact % &bp).iter_u64_digits().next().unwrap_or(0);
                let r = match lucas_binomial(a as u64, b as u64, p) {
                    Ok(v) => expect_eq(|| format!("C({a},{b}) mod {p}"), v, direct),
                    Err(e) => Err(e.to_string()),
                };
                outcomes.push(r.into());
            }
            // b > a
            outcomes.push(
                expect_eq(|| format!("C({a},{}) mod {p}", a + 1), lucas_binomial(a as u64, a as u64 + 1, p).ok(), Some(0))
                    .into(),
            );
        }
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::from(1u32));
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::from(1u32));
        row = next;
    }
    tally("Lucas binomials vs exact binomials", outcomes)
}

pub const STRUCTURE_CASES: [(u64, u32, u64); 9] = [
    (2, 1, 2),
    (2, 1, 3),
    (2, 1, 4),
    (2, 1, 6),
    (2, 2, 3),
    (3, 1, 2),
    (3, 1, 3),
    (3, 1, 6),
    (5, 1, 4),
];

fn random_base_circulant(ctx: &StructureContext, base: &[u64], rng: &mut ChaCha8Rng) -> Circulant<FiniteField> {
    loop {
        let column = (0..ctx.n()).map(|_| base[rng.gen_range(0..base.len())]).collect();
        let c = Circulant::new(ctx.field().clone(), column).expect("n >= 1");
        if c.is_regular() {
            return c;
        }
    }
}

fn random_leaders(ctx: &StructureContext, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let f = ctx.field();
    let pr = ctx.block_size();
    ctx.sigma()
        .cycles()
        .iter()
        .map(|c| {
            let sub = f.subfield_elements(ctx.leader_degree(c.len())).expect("degree divides s");
            let mut block: Vec<u64> = (0..pr).map(|_| sub[rng.gen_range(0..sub.len())]).collect();
            block[pr - 1] = sub[rng.gen_range(1..sub.len())];
            block
        })
        .collect()
}

fn structure_case(p: u64, t: u32, n: u64, samples: usize) -> [Result<(), String>; 5] {
    let label = format!("p={p} t={t} n={n}");
    let ctx = match StructureContext::new(p, t, n) {
        Ok(ctx) => ctx,
        Err(e) => {
            let why = format!("{label}: {e}");
            return [0; 5].map(|_| Err(why.clone()));
        }
    };
    let f = ctx.field().clone();
    let (x, x_inv) = ctx.conjugator();
    let a = shift_generator(f.clone(), n as usize);
    let conj = match x.mul(&a).and_then(|xa| xa.mul(x_inv)) {
        Ok(m) if &m == ctx.jordan_blocks() => Ok(()),
        Ok(_) => Err(format!("{label}: X A X^-1 differs from the Jordan form")),
        Err(e) => Err(format!("{label}: {e}")),
    };
    let inverse = match x.inverse() {
        Ok(m) if &m == x_inv => Ok(()),
        Ok(_) => Err(format!("{label}: closed-form inverse differs")),
        Err(e) => Err(format!("{label}: {e}")),
    };
    let frob = if ctx.frobenius_conjugation_check() {
        Ok(())
    } else {
        Err(format!("{label}: F^t(X) != P X"))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(p * 1_000_003 + t as u64 * 1009 + n);
    let base = f.subfield_elements(t as u64).expect("t divides s");
    let canonical = (0..samples).try_for_each(|_| {
        let c = random_base_circulant(&ctx, &base, &mut rng);
        let form = ctx
            .canonical_form(&c)
            .map_err(|e| format!("{label} column {:?}: {e}", c.column()))?;
        match ctx.check_admissible(&form.blocks.concat()) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("{label} column {:?}: blocks not admissible", c.column())),
            Err(e) => Err(format!("{label}: {e}")),
        }
    });
    let round_trip = (0..samples).try_for_each(|_| {
        let leaders = random_leaders(&ctx, &mut rng);
        let c = ctx
            .synthesize_circulant(&leaders)
            .map_err(|e| format!("{label} leaders {leaders:?}: {e}"))?;
        let form = ctx
            .canonical_form(&c)
            .map_err(|e| format!("{label} leaders {leaders:?}: {e}"))?;
        expect_eq(|| format!("{label} round trip"), ctx.leaders(&form.blocks), leaders)
    });
    [conj, inverse, frob, canonical, round_trip]
}

pub fn structure() -> Vec<Check> {
    let results: Vec<[Result<(), String>; 5]> = STRUCTURE_CASES
        .par_iter()
        .map(|&(p, t, n)| structure_case(p, t, n, 100))
        .collect();
    let names = [
        "conjugator maps the shift to its Jordan form",
        "closed-form conjugator inverse",
        "Frobenius acts on the conjugator by a block permutation",
        "canonical form of random regular circulants is admissible",
        "synthesis and canonical form round trip",
    ];
    names
        .iter()
        .enumerate()
        .map(|(k, name)| tally(name, results.iter().map(|r| r[k].clone().into())))
        .collect()
}

/// Admissible vectors are exactly the images `X c` of regular circulants.
pub fn exhaustive_admissibility(budget: u64) -> Check {
    let cases = [(2u64, 1u32, 3u64), (2, 1, 4), (2, 1, 5), (2, 1, 6), (2, 2, 3), (3, 1, 3), (3, 1, 4), (5, 1, 3), (2, 1, 7)];
    let outcomes: Vec<Outcome> = cases
        .into_par_iter()
        .map(|(p, t, n)| budgeted(|| admissibility_case(p, t, n, budget)))
        .collect();
    tally("admissible vectors are the images of regular circulants", outcomes)
}

fn admissibility_case(p: u64, t: u32, n: u64, budget: u64) -> rcm_core::Result<Result<(), String>> {
    let ctx = StructureContext::new(p, t, n)?;
    let f = ctx.field().clone();
    let len = n as usize;
    let total = rcm_core::circulant::check_budget(&f, len, budget)?;
    let mut admissible = BTreeSet::new();
    let mut v = vec![0u64; len];
    for index in 0..total {
        let mut rest = index;
        for slot in v.iter_mut().rev() {
            *slot = rest % f.order();
            rest /= f.order();
        }
        if ctx.check_admissible(&v)? {
            admissible.insert(v.clone());
        }
    }
    let base = f.subfield_elements(t as u64)?;
    let x = ctx.conjugator().0;
    let mut images = BTreeSet::new();
    let q = base.len() as u64;
    for index in 0..q.pow(len as u32) {
        let mut rest = index;
        let column: Vec<u64> = (0..len)
            .map(|_| {
                let e = base[(rest % q) as usize];
                rest /= q;
                e
            })
            .collect();
        let c = Circulant::new(f.clone(), column)?;
        if c.is_regular() {
            images.insert(x.mul_vec(c.column())?);
        }
    }
    let label = format!("p={p} t={t} n={n}");
    if admissible != images {
        let stray = admissible.symmetric_difference(&images).next().cloned();
        return Ok(Err(format!("{label}: sets differ at {stray:?}")));
    }
    Ok(expect_eq(
        || label.clone(),
        BigUint::from(admissible.len()),
        admissible_count(p, t, n)?,
    ))
}

pub fn counting_equivalence() -> Check {
    let mut outcomes = Vec::new();
    for p in [2u64, 3, 5] {
        for t in 1..=3u32 {
            for n in 1..=24u64 {
                let r = match (admissible_count(p, t, n), order_rc_field(p, t, n)) {
                    (Ok(a), Ok(o)) => expect_eq(|| format!("p={p} t={t} n={n}"), a, o.value),
                    (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
                };
                outcomes.push(r.into());
            }
        }
    }
    tally("admissible count equals the order formula", outcomes)
}

pub fn exponent_collapse() -> Check {
    let mut outcomes = Vec::new();
    for p in [2u64, 3, 5, 7] {
        for t in 1..=4u32 {
            for n in 1..=100u64 {
                let (m, _) = split_prime_part(n, p);
                let r = order_rc_field(p, t, n).map_err(|e| e.to_string()).and_then(|o| {
                    let total: u64 = o.breakdown.iter().map(|f| f.p_exponent()).sum();
                    expect_eq(|| format!("p={p} t={t} n={n}"), total, t as u64 * (n - m))
                });
                outcomes.push(r.into());
            }
        }
    }
    tally("p-power exponents sum to t(n - m)", outcomes)
}

pub const DETERMINANT_CASES: [(u64, u32, usize); 4] = [(2, 2, 3), (3, 1, 3), (3, 1, 4), (5, 1, 2)];

pub fn determinants(budget: u64) -> Vec<Check> {
    let sl: Vec<Outcome> = DETERMINANT_CASES
        .par_iter()
        .map(|&(p, t, n)| {
            budgeted(|| {
                let f = FiniteField::new(p, t)?;
                let counted = count_regular(&f, n, budget, |_, d| d == 1)?;
                Ok(expect_eq(
                    || format!("p={p} t={t} n={n}"),
                    BigUint::from(counted),
                    sl_count(p, t, n as u64)?,
                ))
            })
        })
        .collect();
    let image: Vec<Outcome> = DETERMINANT_CASES
        .par_iter()
        .map(|&(p, t, n)| {
            budgeted(|| {
                let f = FiniteField::new(p, t)?;
                let seen = determinant_image(&f, n, budget)?;
                let units: BTreeSet<u64> = (1..f.order()).collect();
                Ok(expect_eq(|| format!("p={p} t={t} n={n}"), seen, units))
            })
        })
        .collect();
    vec![
        tally("determinant-one count equals order/(q - 1)", sl),
        tally("determinants cover the unit group", image),
    ]
}

fn random_regular<R: Ring>(ring: &R, n: usize, rng: &mut ChaCha8Rng) -> Circulant<R> {
    let q = ring.cardinality().expect("finite ring");
    loop {
        let column = (0..n).map(|_| ring.element(rng.gen_range(0..q))).collect();
        let c = Circulant::new(ring.clone(), column).expect("n >= 1");
        if c.is_regular() {
            return c;
        }
    }
}

fn group_case<R: Ring>(ring: R, n: usize, pairs: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = Circulant::identity(ring.clone(), n);
    let label = format!("{ring:?} n={n}");
    for _ in 0..pairs {
        let c = random_regular(&ring, n, &mut rng);
        let d = random_regular(&ring, n, &mut rng);
        let err = |what: &str| format!("{label}: {what} for {:?}, {:?}", c.column(), d.column());
        let prod = c.mul(&d).map_err(|e| err(&e.to_string()))?;
        let dense = c.to_dense().mul(&d.to_dense()).map_err(|e| err(&e.to_string()))?;
        let read_back = Circulant::from_dense(&dense).map_err(|_| err("dense product is not circulant"))?;
        if read_back != prod {
            return Err(err("convolution differs from the dense product"));
        }
        if !prod.is_regular() {
            return Err(err("product is singular"));
        }
        if d.mul(&c).map_err(|e| err(&e.to_string()))? != prod {
            return Err(err("product does not commute"));
        }
        let inv = c.inverse().map_err(|e| err(&e.to_string()))?;
        if !inv.is_regular() || c.mul(&inv).map_err(|e| err(&e.to_string()))? != id {
            return Err(err("inverse is not a regular circulant inverse"));
        }
    }
    Ok(())
}

pub fn group_axioms() -> Check {
    const PAIRS: usize = 1000;
    let field_cases: [(u64, u32, usize); 6] = [(2, 1, 6), (3, 1, 4), (2, 2, 3), (5, 1, 3), (3, 2, 3), (2, 3, 2)];
    let zmod_cases: [(u64, usize); 4] = [(12, 3), (8, 4), (9, 3), (10, 2)];
    let mut outcomes: Vec<Outcome> = field_cases
        .par_iter()
        .map(|&(p, t, n)| match FiniteField::new(p, t) {
            Ok(f) => group_case(f, n, PAIRS, p * 100 + t as u64 * 10 + n as u64).into(),
            Err(e) => Outcome::Fail(e.to_string()),
        })
        .collect();
    outcomes.extend(zmod_cases.par_iter().map(|&(a, n)| match Zmod::new(a) {
        Ok(z) => group_case(z, n, PAIRS, a * 10 + n as u64).into(),
        Err(e) => Outcome::Fail(e.to_string()),
    }).collect::<Vec<_>>());
    tally("products and inverses stay regular circulants", outcomes)
}

/// The numbered acceptance criteria.
pub const CRITERIA: [&str; 9] = [
    "field order formula equals exhaustive count",
    "residue ring order formula equals exhaustive count",
    "lifting multiplies the count by p^n",
    "cycle structure formula equals the decomposition",
    "Pascal inverses, Kronecker factorization and Lucas binomials",
    "conjugator, canonical form and synthesis",
    "admissible count equals the order formula",
    "determinant-one count and determinant image",
    "group axioms on random regular pairs",
];

/// Runs criterion `k` (1-based).
pub fn criterion(k: usize, budget: u64) -> Vec<Check> {
    match k {
        1 => vec![field_orders(budget)],
        2 => vec![zmod_orders(budget)],
        3 => vec![lifting(budget)],
        4 => vec![cycles()],
        5 => pascal(),
        6 => structure(),
        7 => vec![counting_equivalence()],
        8 => determinants(budget),
        9 => vec![group_axioms()],
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Orders,
    Zmod,
    Cycles,
    Pascal,
    Structure,
    All,
}

pub fn run_suite(suite: Suite, budget: u64, report: &mut dyn FnMut(&Check)) -> Vec<Check> {
    let parts: Vec<Box<dyn Fn() -> Vec<Check>>> = match suite {
        Suite::Orders => vec![
            Box::new(move || vec![field_orders(budget)]),
            Box::new(|| vec![counting_equivalence(), exponent_collapse()]),
            Box::new(move || determinants(budget)),
            Box::new(|| vec![group_axioms()]),
        ],
        Suite::Zmod => vec![
            Box::new(move || vec![zmod_orders(budget)]),
            Box::new(move || vec![lifting(budget)]),
            Box::new(|| vec![zmod_crt()]),
        ],
        Suite::Cycles => vec![Box::new(|| vec![cycles()])],
        Suite::Pascal => vec![Box::new(pascal)],
        Suite::Structure => vec![
            Box::new(structure),
            Box::new(move || vec![exhaustive_admissibility(budget)]),
        ],
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Orders, Suite::Zmod, Suite::Cycles, Suite::Pascal, Suite::Structure] {
                all.extend(run_suite(s, budget, report));
            }
            return all;
        }
    };
    let mut checks = Vec::new();
    for part in parts {
        for check in part() {
            report(&check);
            checks.push(check);
        }
    }
    checks
}
