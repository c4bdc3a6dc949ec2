//! Congruences `a (mod n)` and finite systems of them.
//!
//! An integer is *hit* by a system if it satisfies at least one congruence;
//! the object of study is the density of integers hit by none. Residues are
//! normalized into `[0, n)` at construction so all downstream equality
//! checks are syntactic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::lcm_slice;
use num::bigint::BigUint;

/// A single congruence `a (mod n)` with `0 <= a < n`, `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Congruence {
    /// Residue, normalized into `[0, n)`.
    pub a: u64,
    /// Modulus, at least 1. `n = 1` covers every integer.
    pub n: u64,
}

impl Congruence {
    /// Builds a validated congruence, reducing `a` into `[0, n)`.
    /// Negative residues reduce Euclidean-style: `(-1, 3)` gives `2 mod 3`.
    pub fn new(a: i64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("modulus must be positive"));
        }
        let a = a.rem_euclid(n as i64) as u64;
        Ok(Congruence { a, n })
    }

    /// Whether `x` satisfies this congruence.
    pub fn hits(&self, x: u64) -> bool {
        x % self.n == self.a
    }
}

/// An ordered list of congruences. Duplicates are allowed (idempotent for
/// coverage); the empty system is a valid value but has no lcm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSystem {
    pub congruences: Vec<Congruence>,
}

impl CongruenceSystem {
    pub fn new(congruences: Vec<Congruence>) -> Self {
        CongruenceSystem { congruences }
    }

    /// Builds a system from `(residue, modulus)` pairs.
    pub fn from_pairs(pairs: &[(i64, u64)]) -> Result<Self> {
        let congruences = pairs
            .iter()
            .map(|&(a, n)| Congruence::new(a, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(CongruenceSystem { congruences })
    }

    /// All-zero system over the given moduli (the worst-case configuration).
    pub fn all_zero(moduli: &[u64]) -> Result<Self> {
        Self::from_pairs(&moduli.iter().map(|&n| (0i64, n)).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn moduli(&self) -> Vec<u64> {
        self.congruences.iter().map(|c| c.n).collect()
    }

    /// lcm of all moduli; the period of the coverage pattern.
    /// Errors on the empty system.
    pub fn lcm(&self) -> Result<BigUint> {
        if self.congruences.is_empty() {
            return Err(Error::validation("lcm of an empty system is undefined"));
        }
        Ok(lcm_slice(&self.moduli()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_normalize() {
        assert_eq!(Congruence::new(0, 3).unwrap(), Congruence { a: 0, n: 3 });
        assert_eq!(Congruence::new(5, 3).unwrap(), Congruence { a: 2, n: 3 });
        assert_eq!(Congruence::new(-1, 3).unwrap(), Congruence { a: 2, n: 3 });
        assert_eq!(Congruence::new(0, 1).unwrap(), Congruence { a: 0, n: 1 });
    }

    #[test]
    fn zero_modulus_rejected() {
        assert!(Congruence::new(0, 0).is_err());
    }

    #[test]
    fn shift_by_multiples_of_n_is_identity() {
        for a in -20i64..20 {
            for n in 1u64..8 {
                let base = Congruence::new(a, n).unwrap();
                for k in -3i64..4 {
                    assert_eq!(Congruence::new(a + k * n as i64, n).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn lcm_examples() {
        let s = CongruenceSystem::from_pairs(&[(0, 3), (1, 6), (2, 15)]).unwrap();
        assert_eq!(s.lcm().unwrap(), BigUint::from(30u32));
        let s = CongruenceSystem::from_pairs(&[(0, 2), (0, 3)]).unwrap();
        assert_eq!(s.lcm().unwrap(), BigUint::from(6u32));
        let s = CongruenceSystem::from_pairs(&[(1, 4)]).unwrap();
        assert_eq!(s.lcm().unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn empty_system_has_no_lcm() {
        assert!(CongruenceSystem::new(vec![]).lcm().is_err());
    }

    #[test]
    fn json_shape_matches_wire_format() {
        let s = CongruenceSystem::from_pairs(&[(0, 3), (1, 6)]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"congruences":[{"a":0,"n":3},{"a":1,"n":6}]}"#
        );
        let back: CongruenceSystem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
