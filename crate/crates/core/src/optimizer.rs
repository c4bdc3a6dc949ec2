//! Residue optimization: given fixed moduli, which residues leave the
//! fewest integers uncovered, and which leave the most?
//!
//! Uncovered density is invariant under translating every residue by the
//! same amount, so the first congruence's residue is pinned to 0 and only
//! the remaining residues are enumerated; every translation orbit meets
//! that slice. The reported minimizer is the lexicographically smallest
//! residue vector (in input modulus order) among all global minimizers —
//! shifting any minimizer to first-residue 0 shows that vector lies in the
//! slice, so depth-first enumeration in residue order finds it first.
//!
//! The maximum needs no search of its own in the structured cases — taking
//! every residue to be 0 maximizes overlap (Simpson's observation) — but
//! the exhaustive maximum is still computed so that claim can be checked
//! system by system.

use num::BigUint;

use crate::congruence::CongruenceSystem;
use crate::density::{sieve_uncovered_density_with_cap, DEFAULT_SIEVE_CAP};
use crate::error::{Error, Result};
use crate::family::PrimeFamily;
use crate::partition::{
    min_sum_partition_with_cap, PartitionValue, DEFAULT_GENERAL_CAP, DEFAULT_TWO_PART_CAP,
};
use crate::rational::Rational;

/// Default cap on the number of residue configurations enumerated.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;
/// Exhaustive enumeration tracks per-slot cover multiplicity in a byte.
const MAX_ENUM_CONGRUENCES: usize = 255;

/// Outcome of a residue search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizationResult {
    /// The selected residue assignment (for minimization: the
    /// lexicographically smallest minimizer).
    pub system: CongruenceSystem,
    /// Its uncovered density.
    pub density: Rational,
    /// Period the search sieved over.
    pub period: BigUint,
    /// Residue tuples actually examined (after the symmetry quotient).
    pub tuples_examined: u64,
}

impl OptimizationResult {
    /// The residue of each congruence, in input modulus order.
    pub fn residues(&self) -> Vec<u64> {
        self.system.congruences.iter().map(|c| c.a).collect()
    }
}

/// Minimum and maximum uncovered density over all residue choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityExtremes {
    pub min: OptimizationResult,
    pub max_density: Rational,
}

/// Exhaustively minimizes uncovered density over residue choices for the
/// given moduli, under the default configuration and period caps.
pub fn optimize_residues_exhaustive(moduli: &[u64]) -> Result<OptimizationResult> {
    Ok(residue_density_extremes(moduli)?.min)
}

/// Both extremes under the default caps; one traversal computes both.
pub fn residue_density_extremes(moduli: &[u64]) -> Result<DensityExtremes> {
    residue_density_extremes_with_caps(moduli, DEFAULT_ENUM_CAP, DEFAULT_SIEVE_CAP)
}

/// As [`residue_density_extremes`] with explicit caps on the number of
/// configurations and on the period.
pub fn residue_density_extremes_with_caps(
    moduli: &[u64],
    enum_cap: u64,
    period_cap: u64,
) -> Result<DensityExtremes> {
    if moduli.is_empty() {
        return Err(Error::validation("no moduli to optimize over"));
    }
    if moduli.len() > MAX_ENUM_CONGRUENCES {
        return Err(Error::resource(
            "congruence count",
            moduli.len(),
            MAX_ENUM_CONGRUENCES,
        ));
    }
    for &n in moduli {
        if n == 0 {
            return Err(Error::validation("modulus must be positive"));
        }
    }
    let full_space: BigUint = moduli.iter().map(|&n| BigUint::from(n)).product();
    if full_space > BigUint::from(enum_cap) {
        return Err(Error::resource("residue tuple count", &full_space, enum_cap));
    }
    let period_big = crate::primes::lcm_slice(moduli);
    if period_big > BigUint::from(period_cap) {
        return Err(Error::resource("sieve period", &period_big, period_cap));
    }
    let period = u64::try_from(&period_big).expect("period fits u64 after cap check") as usize;

    struct Search<'a> {
        moduli: &'a [u64],
        period: usize,
        counts: Vec<u8>,
        zeros: u64,
        residues: Vec<u64>,
        best_zeros: u64,
        best_residues: Vec<u64>,
        max_zeros: u64,
        tuples_examined: u64,
    }

    impl Search<'_> {
        fn cover(&mut self, a: u64, n: u64) {
            let mut x = a as usize;
            while x < self.period {
                if self.counts[x] == 0 {
                    self.zeros -= 1;
                }
                self.counts[x] += 1;
                x += n as usize;
            }
        }

        fn uncover(&mut self, a: u64, n: u64) {
            let mut x = a as usize;
            while x < self.period {
                self.counts[x] -= 1;
                if self.counts[x] == 0 {
                    self.zeros += 1;
                }
                x += n as usize;
            }
        }

        fn descend(&mut self, idx: usize) {
            if idx == self.moduli.len() {
                self.tuples_examined += 1;
                if self.zeros < self.best_zeros {
                    self.best_zeros = self.zeros;
                    self.best_residues = self.residues.clone();
                }
                if self.zeros > self.max_zeros {
                    self.max_zeros = self.zeros;
                }
                return;
            }
            let n = self.moduli[idx];
            for a in 0..n {
                self.residues[idx] = a;
                self.cover(a, n);
                self.descend(idx + 1);
                self.uncover(a, n);
            }
        }
    }

    let mut search = Search {
        moduli,
        period,
        counts: vec![0u8; period],
        zeros: period as u64,
        residues: vec![0; moduli.len()],
        best_zeros: u64::MAX,
        best_residues: vec![0; moduli.len()],
        max_zeros: 0,
        tuples_examined: 0,
    };
    search.cover(0, moduli[0]);
    search.descend(1);

    let system = CongruenceSystem::from_pairs(
        &search
            .best_residues
            .iter()
            .zip(moduli)
            .map(|(&a, &n)| (a as i64, n))
            .collect::<Vec<_>>(),
    )?;
    let min = OptimizationResult {
        system,
        density: Rational::new(search.best_zeros.into(), (period as u64).into())?,
        period: period_big,
        tuples_examined: search.tuples_examined,
    };
    let max_density = Rational::new(search.max_zeros.into(), (period as u64).into())?;
    Ok(DensityExtremes { min, max_density })
}

/// Density of the all-zero residue assignment, the conjectured-then-proved
/// worst case (Simpson 1986): no residue choice leaves more uncovered.
/// Any common residue value is equivalent by translation invariance.
pub fn worst_case_density(moduli: &[u64]) -> Result<OptimizationResult> {
    worst_case_density_with_cap(moduli, DEFAULT_SIEVE_CAP)
}

/// As [`worst_case_density`] with an explicit period cap.
pub fn worst_case_density_with_cap(moduli: &[u64], cap: u64) -> Result<OptimizationResult> {
    let system = CongruenceSystem::all_zero(moduli)?;
    let sieved = sieve_uncovered_density_with_cap(&system, cap)?;
    Ok(OptimizationResult {
        system,
        density: sieved.density,
        period: sieved.period,
        tuples_examined: 1,
    })
}

/// Best structured assignment for a family: the minimizing partition of its
/// prime set, its density `value / q`, and a concrete realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyOptimum {
    pub partition: PartitionValue,
    pub density: Rational,
    pub system: CongruenceSystem,
}

/// Minimizes uncovered density over residue choices for a structured
/// family by minimizing the partition value over partitions of `P` into
/// the family's open residue classes.
pub fn optimize_structured_family(family: &PrimeFamily) -> Result<FamilyOptimum> {
    let cap = if family.part_count() == 2 {
        DEFAULT_TWO_PART_CAP
    } else {
        DEFAULT_GENERAL_CAP
    };
    optimize_structured_family_with_cap(family, cap)
}

/// As [`optimize_structured_family`] with an explicit cap on `|P|`.
pub fn optimize_structured_family_with_cap(
    family: &PrimeFamily,
    cap: usize,
) -> Result<FamilyOptimum> {
    let partition = min_sum_partition_with_cap(family.primes(), family.part_count(), cap)?;
    let over_q = Rational::new(1.into(), family.q().into())?;
    let density = &over_q * &partition.value;
    let system = family.realize(&partition.partition)?;
    Ok(FamilyOptimum {
        partition,
        density,
        system,
    })
}
