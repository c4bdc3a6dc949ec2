//! Uncovered density of a congruence system, two ways: an exact sieve over
//! one full period, and closed-form products for structured families.
//!
//! The sieve is the ground truth everything else is checked against. It
//! marks every residue hit by some congruence over `lcm` of the moduli and
//! counts the holes, so it is exact but limited by a period cap. The
//! closed forms evaluate in time linear in the number of primes and agree
//! with the sieve wherever both apply.

use num::BigUint;

use crate::congruence::CongruenceSystem;
use crate::error::{Error, Result};
use crate::family::PrimeFamily;
use crate::partition::Partition;
use crate::primes::is_prime;
use crate::rational::Rational;

/// Default cap on the sieve period (number of residues examined).
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Exact uncovered density together with the period it was measured over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityResult {
    /// Fraction of integers in no congruence class, fully reduced.
    pub density: Rational,
    /// Period of the system: lcm of the moduli.
    pub period: BigUint,
    /// Number of uncovered residues in `0..period`.
    pub uncovered_count: BigUint,
}

impl DensityResult {
    /// Builds a result from a density and period known to be consistent,
    /// i.e. `density * period` is an integer.
    fn from_density_and_period(density: Rational, period: BigUint) -> Self {
        let count = &density * &Rational::from_biguint(period.clone());
        debug_assert!(count.denom() == &num::BigInt::from(1u32));
        let uncovered_count = count
            .numer()
            .to_biguint()
            .expect("uncovered count is non-negative");
        DensityResult {
            density,
            period,
            uncovered_count,
        }
    }
}

struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }
}

/// Sieves one full period of the system and counts uncovered residues,
/// with the default period cap.
pub fn sieve_uncovered_density(system: &CongruenceSystem) -> Result<DensityResult> {
    sieve_uncovered_density_with_cap(system, DEFAULT_SIEVE_CAP)
}

/// As [`sieve_uncovered_density`], refusing periods above `cap`.
pub fn sieve_uncovered_density_with_cap(
    system: &CongruenceSystem,
    cap: u64,
) -> Result<DensityResult> {
    let period_big = system.lcm()?;
    if period_big > BigUint::from(cap) {
        return Err(Error::resource("sieve period", &period_big, cap));
    }
    let period = u64::try_from(&period_big).expect("period fits u64 after cap check");
    let mut covered = BitVec::zeros(period as usize);
    for c in &system.congruences {
        let mut x = c.a;
        while x < period {
            covered.set(x as usize);
            x += c.n;
        }
    }
    let uncovered = period - covered.count_ones();
    Ok(DensityResult {
        density: Rational::new(uncovered.into(), period.into())?,
        period: period_big,
        uncovered_count: BigUint::from(uncovered),
    })
}

fn check_formula_primes(label: &str, primes: &[u64], q: u64) -> Result<()> {
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::validation(format!("{p} in {label} is not prime")));
        }
        if p == q {
            return Err(Error::validation(format!(
                "{q} may not appear in {label}: it is the class modulus"
            )));
        }
    }
    Ok(())
}

/// Closed form for the `q = 3` family with a standalone `0 mod 3`:
/// `(1/3) prod_{p in P1} (1 - 1/p) + (1/3) prod_{p in P2} (1 - 1/p)`.
///
/// `P1` and `P2` are the primes whose congruences sit in classes `1 mod 3`
/// and `2 mod 3`; they must be disjoint sets of primes other than 3.
pub fn eq1_density(p1: &[u64], p2: &[u64]) -> Result<Rational> {
    check_formula_primes("P1", p1, 3)?;
    check_formula_primes("P2", p2, 3)?;
    for &p in p1 {
        if p2.contains(&p) {
            return Err(Error::validation(format!(
                "prime {p} appears in both P1 and P2"
            )));
        }
    }
    for parts in [p1, p2] {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::validation("duplicate prime within a part"));
        }
    }
    let third = Rational::ratio(1, 3);
    let sum = Partition::part_product(p1) + Partition::part_product(p2);
    Ok(&third * &sum)
}

/// Closed form for a general structured family: the density of any
/// realization of `partition` over `family`,
/// `(1/q) * sum_j prod_{b in P_j} (1 - 1/b)`.
pub fn q_partition_density(family: &PrimeFamily, partition: &Partition) -> Result<Rational> {
    if partition.part_count() != family.part_count() {
        return Err(Error::validation(format!(
            "partition has {} parts but the family opens {} residue classes",
            partition.part_count(),
            family.part_count()
        )));
    }
    if partition.ground_set() != family.primes() {
        return Err(Error::validation(
            "partition does not cover exactly the family's prime set",
        ));
    }
    let over_q = Rational::new(1.into(), family.q().into())?;
    Ok(&over_q * &partition.value())
}

/// [`q_partition_density`] packaged with the family's period, for
/// comparisons against the sieve.
pub fn q_partition_density_result(
    family: &PrimeFamily,
    partition: &Partition,
) -> Result<DensityResult> {
    let density = q_partition_density(family, partition)?;
    let mut period = BigUint::from(family.q());
    for &p in family.primes() {
        period *= BigUint::from(p);
    }
    Ok(DensityResult::from_density_and_period(density, period))
}
