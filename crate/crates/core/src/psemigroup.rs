//! The p-numerical semigroup S_p(A) = { n : d(n; A) > p }, its p-Apéry set
//! modulo a = min(A), gap set and the numeric invariants derived from them.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use crate::config::Limits;
use crate::denumerant::DenumerantTable;
use crate::error::{Error, Result};
use crate::exactmath::{bernoulli, binomial, to_biguint, BigRat};
use crate::generators::GeneratorSet;

/// One `(A, p)` instance with every derived field materialized.
#[derive(Debug, Clone)]
pub struct PSemigroup {
    generators: GeneratorSet,
    p: u64,
    modulus: u64,
    apery_by_residue: Vec<u64>,
    apery_sorted: Vec<u64>,
    gaps: Vec<u64>,
    small_elements: Vec<u64>,
    frobenius: u64,
    multiplicity: u64,
    conductor: u64,
    kunz: Vec<u64>,
    // member[n] for n <= frobenius
    member: Vec<bool>,
    limits: Limits,
}

/// Genus, Sylvester sum and a few gap power sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapStats {
    pub genus: u64,
    pub sylvester_sum: u64,
    pub power_sums: BTreeMap<u32, BigUint>,
}

impl PSemigroup {
    pub fn build(generators: &GeneratorSet, p: u64) -> Result<Self> {
        Self::build_with(generators, p, &Limits::from_env())
    }

    /// Grows a denumerant table until every residue class modulo `min(A)`
    /// holds an element with more than `p` representations. Inside a class,
    /// d(n + a) >= d(n), so the first hit in each class is its Apéry element.
    pub fn build_with(generators: &GeneratorSet, p: u64, limits: &Limits) -> Result<Self> {
        let a = generators.min() as usize;
        let threshold = BigUint::from(p);
        let mut table = DenumerantTable::new(generators.clone());
        let mut apery: Vec<Option<u64>> = vec![None; a];
        let mut unresolved = a;
        let mut scanned = 0usize;
        let mut horizon = (4 * generators.max() as usize).max(64);

        loop {
            let target = horizon.min(limits.horizon_cap.saturating_sub(1));
            table.extend_to(target, limits)?;
            let counts = table.counts();
            for n in scanned..=target {
                let slot = &mut apery[n % a];
                if slot.is_none() && counts[n] > threshold {
                    *slot = Some(n as u64);
                    unresolved -= 1;
                }
            }
            scanned = target + 1;
            if unresolved == 0 {
                break;
            }
            if target + 1 >= limits.horizon_cap {
                return Err(Error::HorizonCapExceeded {
                    requested: horizon.saturating_mul(2),
                    cap: limits.horizon_cap,
                });
            }
            horizon = horizon.saturating_mul(2);
        }

        let apery_by_residue: Vec<u64> = apery.into_iter().map(|m| m.expect("resolved")).collect();
        let modulus = a as u64;
        let frobenius = apery_by_residue.iter().max().expect("a >= 2") - modulus;
        let counts = table.counts();
        let member: Vec<bool> = (0..=frobenius as usize)
            .map(|n| counts[n] > threshold)
            .collect();
        let gaps: Vec<u64> = (0..=frobenius).filter(|&n| !member[n as usize]).collect();
        let conductor = frobenius + 1;
        let mut small_elements: Vec<u64> =
            (0..=frobenius).filter(|&n| member[n as usize]).collect();
        small_elements.push(conductor);
        let mut apery_sorted = apery_by_residue.clone();
        apery_sorted.sort_unstable();
        let multiplicity = apery_sorted[0];
        let kunz = apery_by_residue
            .iter()
            .enumerate()
            .map(|(j, &m)| (m - j as u64) / modulus)
            .collect();

        Ok(Self {
            generators: generators.clone(),
            p,
            modulus,
            apery_by_residue,
            apery_sorted,
            gaps,
            small_elements,
            frobenius,
            multiplicity,
            conductor,
            kunz,
            member,
            limits: *limits,
        })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The Apéry modulus a = min(A).
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `m_j` for `j = 0..a`.
    pub fn apery_by_residue(&self) -> &[u64] {
        &self.apery_by_residue
    }

    /// `l_0 < l_1 < ... < l_{a-1}`.
    pub fn apery_sorted(&self) -> &[u64] {
        &self.apery_sorted
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Elements of S_p up to and including the conductor.
    pub fn small_elements(&self) -> &[u64] {
        &self.small_elements
    }

    pub fn frobenius(&self) -> u64 {
        self.frobenius
    }

    /// Least element of S_p (0 when p = 0).
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn kunz_coordinates(&self) -> &[u64] {
        &self.kunz
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n > self.frobenius || self.member[n as usize]
    }

    pub fn contains_u64(&self, n: u64) -> bool {
        n > self.frobenius || self.member[n as usize]
    }

    /// Least element of S_p in each residue class modulo `modulus`.
    pub fn apery_wrt(&self, modulus: u64) -> Result<Vec<u64>> {
        if modulus == 0 {
            return Err(Error::Precondition("Apéry modulus must be positive".into()));
        }
        Ok((0..modulus)
            .map(|j| {
                let mut n = j;
                while !self.contains_u64(n) {
                    n += modulus;
                }
                n
            })
            .collect())
    }

    /// Number of gaps, by direct enumeration.
    pub fn genus_enumerated(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Sum of gaps, by direct enumeration.
    pub fn sylvester_sum_enumerated(&self) -> u64 {
        self.gaps.iter().sum()
    }

    /// n_p = (1/a) sum m_j - (a - 1)/2.
    pub fn genus_from_apery(&self) -> BigRat {
        let a = rat(self.modulus);
        let sum: BigRat = self.apery_by_residue.iter().map(|&m| rat(m)).sum();
        sum / &a - (a - BigRat::one()) / rat(2)
    }

    /// s_p = (1/2a) sum m_j^2 - (1/2) sum m_j + (a^2 - 1)/12.
    pub fn sylvester_sum_from_apery(&self) -> BigRat {
        let a = rat(self.modulus);
        let sum: BigRat = self.apery_by_residue.iter().map(|&m| rat(m)).sum();
        let squares: BigRat = self.apery_by_residue.iter().map(|&m| rat(m) * rat(m)).sum();
        squares / (rat(2) * &a) - sum / rat(2) + (&a * &a - BigRat::one()) / rat(12)
    }

    /// Genus, checked against the Apéry-set formula.
    pub fn genus(&self) -> Result<u64> {
        let direct = self.genus_enumerated();
        let formula = self.genus_from_apery();
        if formula != rat(direct) {
            return Err(Error::Inconsistent(format!(
                "genus of {} at p={}: enumeration {direct}, Apéry formula {formula}",
                self.generators, self.p
            )));
        }
        Ok(direct)
    }

    /// Sylvester sum, checked against the Apéry-set formula.
    pub fn sylvester_sum(&self) -> Result<u64> {
        let direct = self.sylvester_sum_enumerated();
        let formula = self.sylvester_sum_from_apery();
        if formula != rat(direct) {
            return Err(Error::Inconsistent(format!(
                "Sylvester sum of {} at p={}: enumeration {direct}, Apéry formula {formula}",
                self.generators, self.p
            )));
        }
        Ok(direct)
    }

    fn check_mu(&self, mu: u32) -> Result<()> {
        if mu > self.limits.mu_cap {
            return Err(Error::PowerCapExceeded {
                mu,
                cap: self.limits.mu_cap,
            });
        }
        Ok(())
    }

    /// sum over gaps of n^mu, with 0^0 = 1.
    pub fn power_sum_gaps(&self, mu: u32) -> Result<BigUint> {
        self.check_mu(mu)?;
        Ok(self.gaps.iter().map(|&n| BigUint::from(n).pow(mu)).sum())
    }

    /// The same power sum evaluated from the Apéry set with Bernoulli
    /// coefficients, in exact rationals.
    pub fn power_sum_bernoulli(&self, mu: u32) -> Result<BigUint> {
        self.check_mu(mu)?;
        let a = rat(self.modulus);
        let order = mu as u64 + 1;
        let mut total = BigRat::zero();
        for kappa in 0..=mu {
            let coeff = BigRat::from_integer(BigInt::from(binomial(order, kappa as u64)))
                * bernoulli(kappa as usize);
            if coeff.is_zero() {
                continue;
            }
            let a_pow = Pow::pow(&a, kappa as i32 - 1);
            let moments: BigInt = self
                .apery_by_residue
                .iter()
                .map(|&m| BigInt::from(m).pow(mu + 1 - kappa))
                .sum();
            total += coeff * a_pow * BigRat::from_integer(moments);
        }
        total /= rat(order);
        total +=
            bernoulli(order as usize) / rat(order) * (Pow::pow(&a, order as i32) - BigRat::one());
        to_biguint(&total).ok_or_else(|| {
            Error::Inconsistent(format!(
                "Bernoulli power sum for mu={mu} of {} at p={} is {total}, not a non-negative integer",
                self.generators, self.p
            ))
        })
    }

    /// Gap power sum, checked against the Bernoulli formula.
    pub fn power_sum(&self, mu: u32) -> Result<BigUint> {
        let direct = self.power_sum_gaps(mu)?;
        let formula = self.power_sum_bernoulli(mu)?;
        if direct != formula {
            return Err(Error::Inconsistent(format!(
                "power sum mu={mu} of {} at p={}: enumeration {direct}, Bernoulli formula {formula}",
                self.generators, self.p
            )));
        }
        Ok(direct)
    }

    /// sum over gaps of lambda^n n^mu, with 0^0 = 1.
    pub fn weighted_power_sum(&self, lambda: &BigRat, mu: u32) -> Result<BigRat> {
        self.check_mu(mu)?;
        if lambda.is_zero() {
            return Err(Error::Precondition("lambda must be non-zero".into()));
        }
        let mut total = BigRat::zero();
        let mut weight = BigRat::one();
        let mut last = 0u64;
        for &n in &self.gaps {
            weight *= Pow::pow(lambda, (n - last) as i32);
            last = n;
            total += &weight * BigRat::from_integer(BigInt::from(n).pow(mu));
        }
        Ok(total)
    }

    pub fn gap_stats(&self, max_mu: u32) -> Result<GapStats> {
        let power_sums = (0..=max_mu)
            .map(|mu| Ok((mu, self.power_sum(mu)?)))
            .collect::<Result<_>>()?;
        Ok(GapStats {
            genus: self.genus()?,
            sylvester_sum: self.sylvester_sum()?,
            power_sums,
        })
    }
}

fn rat(v: u64) -> BigRat {
    BigRat::from_integer(BigInt::from(v))
}

/// Builds `S_p(A)`.
pub fn build(generators: &GeneratorSet, p: u64) -> Result<PSemigroup> {
    PSemigroup::build(generators, p)
}

/// g_p(A) = max m_j - a.
pub fn frobenius_p(generators: &GeneratorSet, p: u64) -> Result<u64> {
    let sp = build(generators, p)?;
    let g = sp.frobenius();
    if sp.gaps().last() != Some(&g) {
        return Err(Error::Inconsistent(format!(
            "Frobenius of {generators} at p={p} is {g} but the largest gap is {:?}",
            sp.gaps().last()
        )));
    }
    Ok(g)
}

pub fn genus_p(generators: &GeneratorSet, p: u64) -> Result<u64> {
    build(generators, p)?.genus()
}

pub fn sylvester_sum_p(generators: &GeneratorSet, p: u64) -> Result<u64> {
    build(generators, p)?.sylvester_sum()
}
