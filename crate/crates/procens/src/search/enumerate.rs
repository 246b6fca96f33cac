use crate::error::{Error, Result};
use crate::model::CensoringScheme;

/// Number of feasible schemes in CS(n, m): C(n-1, m-1).
pub fn scheme_count(n: u32, m: u32) -> Result<u128> {
    if n == 0 || m == 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    Ok(binomial(n as u128 - 1, m as u128 - 1))
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        // c * (n - k + i) is always divisible by i at this point.
        c = c * (n - k + i) / i;
    }
    c
}

/// Iterator over every composition of `n - m` into `m` non-negative parts,
/// starting from `(n-m, 0, .., 0)` and descending lexicographically to
/// `(0, .., 0, n-m)`.
pub struct SchemeIter {
    n: u32,
    m: u32,
    next: Option<Vec<u32>>,
}

/// Enumerates CS(n, m) exactly once per scheme.
pub fn enumerate_schemes(n: u32, m: u32) -> Result<SchemeIter> {
    if n == 0 || m == 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    let mut first = vec![0u32; m as usize];
    first[0] = n - m;
    Ok(SchemeIter { n, m, next: Some(first) })
}

impl Iterator for SchemeIter {
    type Item = CensoringScheme;

    fn next(&mut self) -> Option<CensoringScheme> {
        let current = self.next.take()?;
        let scheme = CensoringScheme::new(self.n, self.m, current.clone())
            .expect("enumeration preserves feasibility");

        // Successor in descending lexicographic order: decrement the last
        // movable position and flush everything to its right into the slot
        // immediately after it.
        let m = self.m as usize;
        let movable = (0..m.saturating_sub(1)).rev().find(|&j| current[j] > 0);
        if let Some(j) = movable {
            let mut next = current;
            next[j] -= 1;
            let tail: u32 = next[j + 1..].iter().sum::<u32>() + 1;
            next[j + 1..].iter_mut().for_each(|x| *x = 0);
            next[j + 1] = tail;
            self.next = Some(next);
        }
        Some(scheme)
    }
}
