//! Denumerant d(n; A): the number of non-negative coefficient tuples
//! `(x_1, ..., x_k)` with `sum a_i x_i = n`, counted over the full generator
//! list (non-minimal generators contribute their own representations).

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::generators::GeneratorSet;

/// Extendable table of d(n; A) for `n = 0..=horizon`.
///
/// One layer is kept per generator: layer `i` counts representations using
/// the first `i + 1` generators, so extending the horizon only computes the
/// new indices of every layer.
#[derive(Debug, Clone)]
pub struct DenumerantTable {
    generators: GeneratorSet,
    layers: Vec<Vec<BigUint>>,
}

impl DenumerantTable {
    /// Table holding only d(0) = 1.
    pub fn new(generators: GeneratorSet) -> Self {
        let layers = vec![vec![BigUint::one()]; generators.len()];
        Self { generators, layers }
    }

    pub fn build(generators: &GeneratorSet, horizon: usize, limits: &Limits) -> Result<Self> {
        let mut table = Self::new(generators.clone());
        table.extend_to(horizon, limits)?;
        Ok(table)
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn horizon(&self) -> usize {
        self.counts().len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        self.layers.last().expect("at least two layers")
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.counts().get(n)
    }

    /// Grows the table so that it covers `0..=horizon`.
    pub fn extend_to(&mut self, horizon: usize, limits: &Limits) -> Result<()> {
        if horizon >= limits.horizon_cap {
            return Err(Error::HorizonCapExceeded {
                requested: horizon + 1,
                cap: limits.horizon_cap,
            });
        }
        let old = self.horizon();
        if horizon <= old {
            return Ok(());
        }
        let gens = self.generators.as_input().to_vec();
        for (i, &a) in gens.iter().enumerate() {
            let a = a as usize;
            let (before, rest) = self.layers.split_at_mut(i);
            let layer = &mut rest[0];
            layer.reserve(horizon - old);
            for n in old + 1..=horizon {
                let mut value = match before.last() {
                    Some(prev) => prev[n].clone(),
                    None => BigUint::zero(),
                };
                if n >= a {
                    value += &layer[n - a];
                }
                layer.push(value);
            }
        }
        Ok(())
    }
}

/// Builds the table of d(n; A) for `n <= horizon`.
pub fn build_table(generators: &GeneratorSet, horizon: usize) -> Result<DenumerantTable> {
    DenumerantTable::build(generators, horizon, &Limits::from_env())
}

/// d(n; A).
pub fn denumerant(generators: &GeneratorSet, n: usize) -> Result<BigUint> {
    let table = build_table(generators, n)?;
    Ok(table.counts()[n].clone())
}

/// Every coefficient tuple (in input order of the generators) representing
/// `n`, sorted lexicographically.
pub fn representations(generators: &GeneratorSet, n: usize) -> Result<Vec<Vec<u64>>> {
    representations_with(generators, n, &Limits::from_env())
}

pub fn representations_with(
    generators: &GeneratorSet,
    n: usize,
    limits: &Limits,
) -> Result<Vec<Vec<u64>>> {
    if n >= limits.horizon_cap {
        return Err(Error::HorizonCapExceeded {
            requested: n + 1,
            cap: limits.horizon_cap,
        });
    }
    let gens = generators.as_input();
    let k = gens.len();
    // reachable[i][m]: m is a combination of gens[i..]
    let mut reachable = vec![vec![false; n + 1]; k + 1];
    reachable[k][0] = true;
    for i in (0..k).rev() {
        let a = gens[i] as usize;
        for m in 0..=n {
            reachable[i][m] = reachable[i + 1][m] || (m >= a && reachable[i][m - a]);
        }
    }

    let mut out = Vec::new();
    let mut current = vec![0u64; k];
    collect(gens, &reachable, 0, n, &mut current, &mut out);
    Ok(out)
}

fn collect(
    gens: &[u64],
    reachable: &[Vec<bool>],
    i: usize,
    remaining: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if i == gens.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let a = gens[i] as usize;
    let mut x = 0;
    while x * a <= remaining {
        let rest = remaining - x * a;
        if reachable[i + 1][rest] {
            current[i] = x as u64;
            collect(gens, reachable, i + 1, rest, current, out);
        }
        x += 1;
    }
    current[i] = 0;
}
