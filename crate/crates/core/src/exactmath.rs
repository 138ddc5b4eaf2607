//! Exact rational arithmetic and the two special-number families used by the
//! gap power-sum formulas: Bernoulli numbers (x/(e^x - 1) convention, so
//! B_1 = -1/2) and Eulerian numbers.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = BigRational;

/// Grow-only table of Bernoulli numbers.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    values: Vec<BigRat>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self {
            values: vec![BigRat::one()],
        }
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// B_n, extending the table through index `n` if needed.
    pub fn get(&mut self, n: usize) -> BigRat {
        while self.values.len() <= n {
            let m = self.values.len();
            // sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m.
            let mut acc = BigRat::zero();
            for (k, b) in self.values.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc += BigRat::from_integer(BigInt::from(binomial(m as u64 + 1, k as u64))) * b;
            }
            let next = -acc / BigRat::from_integer(BigInt::from(m + 1));
            self.values.push(next);
        }
        self.values[n].clone()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn bernoulli_cache() -> &'static Mutex<BernoulliCache> {
    static CACHE: OnceLock<Mutex<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BernoulliCache::new()))
}

/// The n-th Bernoulli number with B_1 = -1/2.
pub fn bernoulli(n: usize) -> BigRat {
    let mut cache = bernoulli_cache().lock().unwrap_or_else(|e| e.into_inner());
    cache.get(n)
}

/// Triangular table of Eulerian numbers, row `n` holding `<n, m>` for
/// `m = 0..max(n, 1)`.
#[derive(Debug, Clone)]
pub struct EulerianTable {
    rows: Vec<Vec<BigUint>>,
}

impl Default for EulerianTable {
    fn default() -> Self {
        Self {
            rows: vec![vec![BigUint::one()]],
        }
    }
}

impl EulerianTable {
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure_row(&mut self, n: usize) {
        while self.rows.len() <= n {
            let r = self.rows.len();
            let prev = &self.rows[r - 1];
            let at = |m: i64| -> BigUint {
                if m < 0 {
                    BigUint::zero()
                } else {
                    prev.get(m as usize).cloned().unwrap_or_default()
                }
            };
            let row = (0..r as i64)
                .map(|m| {
                    at(m) * BigUint::from((m + 1) as u64)
                        + at(m - 1) * BigUint::from((r as i64 - m) as u64)
                })
                .collect();
            self.rows.push(row);
        }
    }

    /// `<n, m>`; zero outside the triangle.
    pub fn get(&mut self, n: usize, m: i64) -> BigUint {
        self.ensure_row(n);
        if m < 0 {
            return BigUint::zero();
        }
        self.rows[n].get(m as usize).cloned().unwrap_or_default()
    }

    pub fn row(&mut self, n: usize) -> &[BigUint] {
        self.ensure_row(n);
        &self.rows[n]
    }
}

fn eulerian_table() -> &'static Mutex<EulerianTable> {
    static TABLE: OnceLock<Mutex<EulerianTable>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(EulerianTable::new()))
}

/// Eulerian number `<n, m>`.
pub fn eulerian(n: usize, m: i64) -> BigUint {
    let mut table = eulerian_table().lock().unwrap_or_else(|e| e.into_inner());
    table.get(n, m)
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Outcome of comparing two truncated power series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesCheck {
    Pass,
    /// Lowest degree at which the two sides differ.
    Mismatch(usize),
}

/// Checks `(1-x)^(n+1) * sum_{k<=K} k^n x^k` against
/// `sum_m <n,m> x^(m+1)` on every degree up to `K - n - 1`.
pub fn verify_eulerian_gf(n: usize, k_max: usize) -> Result<SeriesCheck> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if k_max < n + 2 {
        return Err(Error::Precondition(format!(
            "truncation {k_max} is below n + 2 = {}",
            n + 2
        )));
    }
    let top = k_max - n - 1;
    let powers: Vec<BigInt> = (0..=k_max).map(|k| BigInt::from(k).pow(n as u32)).collect();
    let signed_binom: Vec<BigInt> = (0..=n + 1)
        .map(|i| {
            let c = BigInt::from(binomial(n as u64 + 1, i as u64));
            if i.is_odd() {
                -c
            } else {
                c
            }
        })
        .collect();

    let mut table = eulerian_table().lock().unwrap_or_else(|e| e.into_inner());
    for degree in 0..=top {
        let lhs: BigInt = (0..=degree.min(n + 1))
            .map(|i| &signed_binom[i] * &powers[degree - i])
            .sum();
        let rhs = if degree == 0 {
            BigInt::zero()
        } else {
            BigInt::from(table.get(n, degree as i64 - 1))
        };
        if lhs != rhs {
            return Ok(SeriesCheck::Mismatch(degree));
        }
    }
    Ok(SeriesCheck::Pass)
}

/// `num/den` (or a bare integer) in lowest terms.
pub fn parse_rational(text: &str) -> Result<BigRat> {
    let bad = || Error::Precondition(format!("cannot parse rational `{text}`"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Precondition("rational with zero denominator".into()));
    }
    Ok(BigRat::new(num, den))
}

/// `num/den`, or just `num` for integers.
pub fn format_rational(value: &BigRat) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Converts an integral rational to a non-negative integer.
pub fn to_biguint(value: &BigRat) -> Option<BigUint> {
    if value.is_integer() && !value.is_negative() {
        value.numer().to_biguint()
    } else {
        None
    }
}
