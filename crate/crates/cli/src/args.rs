//! Strict parsers for command line values.

use rcm_core::numtheory::is_prime;

/// Parses `p^t` with `p` prime and `t >= 1`. A bare integer is rejected so
/// that `4` is never mistaken for `2^2`.
pub fn parse_prime_power(s: &str) -> Result<(u64, u32), String> {
    let (base, exp) = s
        .split_once('^')
        .ok_or_else(|| format!("expected p^t, got {s:?}"))?;
    let p = parse_digits(base).ok_or_else(|| format!("bad prime {base:?} in {s:?}"))?;
    let t = parse_digits(exp)
        .and_then(|t| u32::try_from(t).ok())
        .ok_or_else(|| format!("bad exponent {exp:?} in {s:?}"))?;
    if !is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    if t == 0 {
        return Err(String::from("exponent must be at least 1"));
    }
    Ok((p, t))
}

fn parse_digits(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Comma separated naturals; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            let part = part.trim();
            parse_digits(part).ok_or_else(|| format!("{part:?} is not a natural number"))
        })
        .collect()
}

/// A prime list for table generation.
pub fn parse_prime_list(s: &str) -> Result<Vec<u64>, String> {
    let list = parse_list(s)?;
    if let Some(bad) = list.iter().find(|&&p| !is_prime(p)) {
        return Err(format!("{bad} is not prime"));
    }
    Ok(list)
}
