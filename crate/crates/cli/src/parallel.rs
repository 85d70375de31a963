//! Sharded exhaustive scans over defining vectors.

use std::collections::BTreeSet;

use rayon::prelude::*;
use rcm_core::circulant::{check_budget, scan_regular};
use rcm_core::{Result, Ring};

const MIN_SHARD: u64 = 1 << 12;

fn shards(total: u64) -> Vec<std::ops::Range<u64>> {
    let size = (total / 512).max(MIN_SHARD);
    (0..total.div_ceil(size))
        .map(|k| k * size..((k + 1) * size).min(total))
        .collect()
}

/// Counts regular circulants whose vector and determinant satisfy `keep`.
pub fn count_regular<R>(
    ring: &R,
    n: usize,
    budget: u64,
    keep: impl Fn(&[R::Elem], R::Elem) -> bool + Sync,
) -> Result<u64>
where
    R: Ring + Sync,
    R::Elem: Send,
{
    let total = check_budget(ring, n, budget)?;
    Ok(shards(total)
        .into_par_iter()
        .map(|range| {
            let mut count = 0u64;
            scan_regular(ring, n, range, |v, d| {
                if keep(v, d) {
                    count += 1;
                }
            });
            count
        })
        .sum())
}

/// Determinants attained by regular circulants.
pub fn determinant_image<R>(ring: &R, n: usize, budget: u64) -> Result<BTreeSet<R::Elem>>
where
    R: Ring + Sync,
    R::Elem: Send,
{
    let total = check_budget(ring, n, budget)?;
    Ok(shards(total)
        .into_par_iter()
        .map(|range| {
            let mut seen = BTreeSet::new();
            scan_regular(ring, n, range, |_, d| {
                seen.insert(d);
            });
            seen
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rcm_core::circulant::enumerate_regular;
    use rcm_core::{FiniteField, Zmod};

    #[test]
    fn shards_cover_the_range() {
        for total in [0u64, 1, 4095, 4096, 4097, 1 << 20, 3u64.pow(13)] {
            let parts = shards(total);
            let mut next = 0;
            for r in &parts {
                assert_eq!(r.start, next);
                assert!(r.end > r.start);
                next = r.end;
            }
            assert_eq!(next, total);
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let f = FiniteField::new(3, 1).unwrap();
        for n in 1..=8 {
            assert_eq!(
                count_regular(&f, n, 1 << 24, |_, _| true).unwrap(),
                enumerate_regular(&f, n, 1 << 24).unwrap()
            );
        }
        let z = Zmod::new(12).unwrap();
        assert_eq!(
            count_regular(&z, 3, 1 << 24, |_, _| true).unwrap(),
            enumerate_regular(&z, 3, 1 << 24).unwrap()
        );
        assert!(count_regular(&z, 30, 1 << 24, |_, _| true).is_err());
    }
}
