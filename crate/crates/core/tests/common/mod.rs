//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the table-building or Apéry code paths.

#![allow(dead_code)]

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Counts coefficient tuples with nested enumeration.
pub fn count_representations(gens: &[u64], n: u64) -> u64 {
    match gens.split_first() {
        None => u64::from(n == 0),
        Some((&a, rest)) => (0..=n / a)
            .map(|x| count_representations(rest, n - x * a))
            .sum(),
    }
}

/// Every tuple, enumerated in lexicographic order.
pub fn list_representations(gens: &[u64], n: u64) -> Vec<Vec<u64>> {
    match gens.split_first() {
        None if n == 0 => vec![vec![]],
        None => vec![],
        Some((&a, rest)) => (0..=n / a)
            .flat_map(|x| {
                list_representations(rest, n - x * a)
                    .into_iter()
                    .map(move |mut tail| {
                        tail.insert(0, x);
                        tail
                    })
            })
            .collect(),
    }
}

/// Membership of `0..` in S_p, found by scanning until `min(gens)`
/// consecutive members follow the last non-member.
#[derive(Debug, Clone)]
pub struct Brute {
    pub member: Vec<bool>,
    pub frobenius: u64,
}

impl Brute {
    pub fn new(gens: &[u64], p: u64) -> Self {
        let run = *gens.iter().min().unwrap() as usize;
        let mut member = Vec::new();
        let mut streak = 0;
        let mut last_gap = 0u64;
        let mut n = 0u64;
        while streak < run {
            let m = count_representations(gens, n) > p;
            member.push(m);
            if m {
                streak += 1;
            } else {
                streak = 0;
                last_gap = n;
            }
            n += 1;
        }
        member.truncate(last_gap as usize + 1);
        Self {
            member,
            frobenius: last_gap,
        }
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (n as u64 > self.frobenius || self.member[n as usize])
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..=self.frobenius)
            .filter(|&n| !self.member[n as usize])
            .collect()
    }

    pub fn least(&self) -> u64 {
        (0..).find(|&n| self.contains(n as i64)).unwrap()
    }

    /// Least member in each residue class modulo `m`.
    pub fn apery(&self, m: u64) -> Vec<u64> {
        (0..m)
            .map(|j| {
                (0..)
                    .map(|t| j + t * m)
                    .find(|&n| self.contains(n as i64))
                    .unwrap()
            })
            .collect()
    }

    /// Pseudo-Frobenius numbers by the definition, with `s` ranging over a
    /// window well past every point that can fail.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        let l0 = self.least() as i64;
        let horizon = 2 * (self.frobenius as i64 + l0) + 2;
        self.gaps()
            .into_iter()
            .filter(|&x| {
                (l0 + 1..=horizon)
                    .filter(|&s| self.contains(s))
                    .all(|s| self.contains(x as i64 + s - l0))
            })
            .collect()
    }

    /// Two-sided mirror condition around `l0 + g`.
    pub fn mirror(&self, skip_midpoint: bool) -> bool {
        let c = self.frobenius as i64 + self.least() as i64;
        (-5..=c + 5)
            .all(|x| (skip_midpoint && 2 * x == c) || self.contains(x) != self.contains(c - x))
    }

    pub fn symmetric(&self) -> bool {
        let c = self.frobenius + self.least();
        c % 2 == 1 && self.mirror(false)
    }

    pub fn pseudo_symmetric(&self) -> bool {
        let c = self.frobenius + self.least();
        c.is_multiple_of(2) && self.mirror(true)
    }

    pub fn l_set(&self) -> Vec<u64> {
        let c = self.frobenius as i64 + self.least() as i64;
        (-5..=c + 5)
            .filter(|&x| !self.contains(x) && !self.contains(c - x))
            .map(|x| x as u64)
            .collect()
    }

    /// Arf condition with every member below `cutoff`.
    pub fn arf(&self, cutoff: u64) -> bool {
        let members: Vec<u64> = (0..cutoff).filter(|&n| self.contains(n as i64)).collect();
        members.iter().all(|&x| {
            members.iter().filter(|&&y| y <= x).all(|&y| {
                members
                    .iter()
                    .filter(|&&z| z <= y)
                    .all(|&z| self.contains((x + y - z) as i64))
            })
        })
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Seed of the fixed random sample used by the acceptance suite.
pub const SAMPLE_SEED: u64 = 0x5eed_2026;

/// `count` instances with 2 to 4 distinct generators in `2..=30`, gcd 1,
/// and `p` in `0..=5`.
pub fn random_instances(count: usize) -> Vec<(Vec<u64>, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(2..=4);
        let gens: Vec<u64> = sample(&mut rng, 29, k)
            .into_iter()
            .map(|i| i as u64 + 2)
            .collect();
        if gens.iter().fold(0, |g, &a| gcd(g, a)) != 1 {
            continue;
        }
        let p = rng.gen_range(0..=5);
        out.push((gens, p));
    }
    out
}
