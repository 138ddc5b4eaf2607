use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A validated generator list: at least two pairwise-distinct integers, each
/// at least 2, with gcd 1.
///
/// The input order is kept because representation vectors and the scaling
/// identities (where `a_1` is the first listed generator) depend on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    input: Vec<u64>,
    sorted: Vec<u64>,
}

impl GeneratorSet {
    pub fn new(input: &[u64]) -> Result<Self> {
        if input.len() < 2 {
            return Err(Error::TooFewGenerators(input.len()));
        }
        if let Some(&small) = input.iter().find(|&&a| a < 2) {
            return Err(Error::GeneratorTooSmall(small));
        }
        let mut sorted = input.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateGenerator(w[0]));
        }
        let g = gcd_all(&sorted);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        Ok(Self {
            input: input.to_vec(),
            sorted,
        })
    }

    /// Generators in the order they were given.
    pub fn as_input(&self) -> &[u64] {
        &self.input
    }

    /// Generators in ascending order.
    pub fn sorted(&self) -> &[u64] {
        &self.sorted
    }

    pub fn min(&self) -> u64 {
        self.sorted[0]
    }

    pub fn max(&self) -> u64 {
        *self.sorted.last().expect("non-empty")
    }

    pub fn len(&self) -> usize {
        self.input.len()
    }

    pub fn is_empty(&self) -> bool {
        self.input.is_empty()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.input.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for GeneratorSet {
    type Err = Error;

    /// Parses a comma-separated list such as `4,5,6`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>().map_err(|_| {
                    Error::Precondition(format!("`{t}` is not a non-negative integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&parts)
    }
}

pub(crate) fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |g, &v| g.gcd(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_sets_and_keeps_order() {
        let a = GeneratorSet::new(&[8, 4, 5, 6]).unwrap();
        assert_eq!(a.as_input(), &[8, 4, 5, 6]);
        assert_eq!(a.sorted(), &[4, 5, 6, 8]);
        assert_eq!(a.min(), 4);
        assert_eq!(a.max(), 8);
        assert_eq!(a.to_string(), "{8,4,5,6}");
    }

    #[test]
    fn rejects_invalid_sets() {
        assert_eq!(GeneratorSet::new(&[5]), Err(Error::TooFewGenerators(1)));
        assert_eq!(GeneratorSet::new(&[1, 5]), Err(Error::GeneratorTooSmall(1)));
        assert_eq!(GeneratorSet::new(&[0, 5]), Err(Error::GeneratorTooSmall(0)));
        assert_eq!(
            GeneratorSet::new(&[4, 5, 4]),
            Err(Error::DuplicateGenerator(4))
        );
        assert_eq!(GeneratorSet::new(&[4, 6, 8]), Err(Error::GcdNotOne(2)));
    }

    #[test]
    fn parses_comma_lists() {
        let a: GeneratorSet = "17, 18,19".parse().unwrap();
        assert_eq!(a.as_input(), &[17, 18, 19]);
        assert!("4,x".parse::<GeneratorSet>().is_err());
        assert!("-3,4".parse::<GeneratorSet>().is_err());
    }
}
