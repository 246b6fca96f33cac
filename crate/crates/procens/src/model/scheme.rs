use crate::error::{Error, Result};

/// A progressive Type-II censoring plan: `n` units on test, `m` observed
/// failures, and `removals[i]` surviving units withdrawn at the (i+1)-th
/// failure. Feasibility requires the removals to sum to `n - m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CensoringScheme {
    n: u32,
    m: u32,
    removals: Vec<u32>,
}

impl CensoringScheme {
    pub fn new(n: u32, m: u32, removals: Vec<u32>) -> Result<Self> {
        if n == 0 || m == 0 || m > n {
            return Err(Error::InvalidScheme(format!(
                "need 1 <= m <= n, got n={n}, m={m}"
            )));
        }
        if removals.len() != m as usize {
            return Err(Error::InvalidScheme(format!(
                "removal vector has length {}, expected m={m}",
                removals.len()
            )));
        }
        let total: u64 = removals.iter().map(|&r| r as u64).sum();
        if total != (n - m) as u64 {
            return Err(Error::InvalidScheme(format!(
                "removals sum to {total}, expected n-m={}",
                n - m
            )));
        }
        Ok(CensoringScheme { n, m, removals })
    }

    /// One-step censoring OSC(j): all `n - m` removals at the j-th failure
    /// (1-based). `OSC(m)` is ordinary Type-II censoring.
    pub fn one_step(n: u32, m: u32, j: u32) -> Result<Self> {
        if j == 0 || j > m {
            return Err(Error::InvalidArgument(format!(
                "one-step position {j} outside 1..={m}"
            )));
        }
        let mut removals = vec![0; m as usize];
        removals[(j - 1) as usize] = n - m;
        CensoringScheme::new(n, m, removals)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn removals(&self) -> &[u32] {
        &self.removals
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_invariants() {
        assert!(CensoringScheme::new(15, 5, vec![0, 0, 0, 0, 10]).is_ok());
        assert!(CensoringScheme::new(15, 5, vec![0, 0, 0, 0, 9]).is_err());
        assert!(CensoringScheme::new(15, 5, vec![0, 0, 0, 10]).is_err());
        assert!(CensoringScheme::new(15, 16, vec![0; 16]).is_err());
        assert!(CensoringScheme::new(0, 0, vec![]).is_err());
        assert!(CensoringScheme::new(5, 5, vec![0; 5]).is_ok());
    }

    #[test]
    fn one_step_places_all_removals() {
        let s = CensoringScheme::one_step(15, 5, 5).unwrap();
        assert_eq!(s.removals(), &[0, 0, 0, 0, 10]);
        let s = CensoringScheme::one_step(15, 5, 2).unwrap();
        assert_eq!(s.removals(), &[0, 10, 0, 0, 0]);
        assert!(CensoringScheme::one_step(15, 5, 6).is_err());
    }
}
