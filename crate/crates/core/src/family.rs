//! Structured congruence families: a prime `q`, optionally the congruence
//! `0 mod q` on its own, and one congruence of modulus `q*p` for each prime
//! `p` in a set `P`.
//!
//! Residues in such a family matter only through (1) which residue class
//! mod `q` each congruence occupies and (2) the induced partition of `P` by
//! class. [`PrimeFamily::realize`] turns a class partition back into a
//! concrete [`CongruenceSystem`]; the mod-`p` component of each residue is a
//! free "lift" that never changes the uncovered density, which the tests
//! exercise by re-randomizing it.

use crate::congruence::{Congruence, CongruenceSystem};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::primes::{crt_pair, is_prime};

/// A family of moduli `{q} ∪ {q*p : p in P}` (the `q` alone only when
/// `standalone` is set). `q` and all members of `P` are distinct primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFamily {
    q: u64,
    standalone: bool,
    primes: Vec<u64>,
}

impl PrimeFamily {
    pub fn new(q: u64, standalone: bool, primes: Vec<u64>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::validation(format!("q = {q} is not prime")));
        }
        let mut primes = primes;
        primes.sort_unstable();
        for pair in primes.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::validation(format!(
                    "prime {} appears twice in P",
                    pair[0]
                )));
            }
        }
        for &p in &primes {
            if !is_prime(p) {
                return Err(Error::validation(format!("{p} in P is not prime")));
            }
            if p == q {
                return Err(Error::validation(format!("q = {q} may not appear in P")));
            }
            if q.checked_mul(p).is_none() {
                return Err(Error::validation(format!("modulus {q}*{p} overflows u64")));
            }
        }
        Ok(PrimeFamily {
            q,
            standalone,
            primes,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn standalone(&self) -> bool {
        self.standalone
    }

    /// The prime set `P`, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Number of residue classes mod `q` left open for partition parts:
    /// all `q` of them, or `q - 1` when `0 mod q` is taken by the
    /// standalone congruence.
    pub fn part_count(&self) -> usize {
        self.q as usize - usize::from(self.standalone)
    }

    /// The family's modulus multiset: `q` first when standalone, then
    /// `q*p` in ascending `p`. Reconstructing through
    /// [`validate_q_family`] round-trips.
    pub fn moduli(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.primes.len() + 1);
        if self.standalone {
            out.push(self.q);
        }
        for &p in &self.primes {
            out.push(self.q * p);
        }
        out
    }

    /// Realizes a partition of `P` as a concrete congruence system with the
    /// default lift `0 mod p` for every composite-modulus congruence.
    pub fn realize(&self, partition: &Partition) -> Result<CongruenceSystem> {
        self.realize_with_lift(partition, |_| 0)
    }

    /// Realizes a partition of `P`, choosing each congruence's mod-`p`
    /// residue component as `lift(p) mod p`.
    ///
    /// Part `j` (in canonical partition order) occupies class `j + 1 mod q`;
    /// when there is no standalone congruence the last part occupies class
    /// `q mod q = 0`. The congruence for `p` in a part with class `c` is the
    /// unique residue mod `q*p` that is `c mod q` and `lift(p) mod p`.
    pub fn realize_with_lift(
        &self,
        partition: &Partition,
        mut lift: impl FnMut(u64) -> u64,
    ) -> Result<CongruenceSystem> {
        if partition.part_count() != self.part_count() {
            return Err(Error::validation(format!(
                "partition has {} parts but the family opens {} residue classes",
                partition.part_count(),
                self.part_count()
            )));
        }
        if partition.ground_set() != self.primes {
            return Err(Error::validation(
                "partition does not cover exactly the family's prime set",
            ));
        }
        let mut congruences = Vec::with_capacity(self.primes.len() + 1);
        if self.standalone {
            congruences.push(Congruence::new(0, self.q)?);
        }
        for (j, part) in partition.parts().iter().enumerate() {
            let class = (j as u64 + 1) % self.q;
            for &p in part {
                let r = crt_pair(class, self.q, lift(p) % p, p);
                congruences.push(Congruence::new(r as i64, self.q * p)?);
            }
        }
        Ok(CongruenceSystem::new(congruences))
    }
}

/// Checks that `moduli` is exactly a `q`-family modulus multiset and
/// recovers its structure. Succeeds precisely when
/// [`PrimeFamily::moduli`] of the result reproduces `moduli` as a multiset.
pub fn validate_q_family(moduli: &[u64], q: u64) -> Result<PrimeFamily> {
    if !is_prime(q) {
        return Err(Error::validation(format!("q = {q} is not prime")));
    }
    let mut standalone = false;
    let mut primes = Vec::new();
    for &m in moduli {
        if m == 0 {
            return Err(Error::validation("modulus 0 is not allowed"));
        }
        if m == q {
            if standalone {
                return Err(Error::structure(format!("modulus {q} appears twice")));
            }
            standalone = true;
            continue;
        }
        if m % q != 0 {
            return Err(Error::structure(format!(
                "modulus {m} is not divisible by q = {q}"
            )));
        }
        let p = m / q;
        if p == q {
            return Err(Error::structure(format!(
                "modulus {m} = q^2 is not of the form q*p with p != q"
            )));
        }
        if !is_prime(p) {
            return Err(Error::structure(format!(
                "modulus {m} = q*{p} has composite cofactor {p}"
            )));
        }
        if primes.contains(&p) {
            return Err(Error::structure(format!("modulus {m} appears twice")));
        }
        primes.push(p);
    }
    PrimeFamily::new(q, standalone, primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_recognizes_eq1_shape() {
        let fam = validate_q_family(&[3, 6, 15], 3).unwrap();
        assert_eq!(fam.q(), 3);
        assert!(fam.standalone());
        assert_eq!(fam.primes(), &[2, 5]);
        assert_eq!(fam.part_count(), 2);
        assert_eq!(fam.moduli(), vec![3, 6, 15]);
    }

    #[test]
    fn validate_handles_no_standalone() {
        let fam = validate_q_family(&[6, 10], 2).unwrap();
        assert!(!fam.standalone());
        assert_eq!(fam.primes(), &[3, 5]);
        assert_eq!(fam.part_count(), 2);
        assert_eq!(fam.moduli(), vec![6, 10]);
    }

    #[test]
    fn validate_rejects_bad_shapes() {
        // 15 is not divisible by 2.
        assert!(matches!(
            validate_q_family(&[6, 10, 15], 2),
            Err(Error::Structure(_))
        ));
        // q^2 is not q*p with p != q.
        assert!(matches!(
            validate_q_family(&[9], 3),
            Err(Error::Structure(_))
        ));
        // Composite cofactor: 30 = 2 * 15.
        assert!(matches!(
            validate_q_family(&[30], 2),
            Err(Error::Structure(_))
        ));
        // Duplicate modulus.
        assert!(matches!(
            validate_q_family(&[6, 6], 2),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            validate_q_family(&[2, 2], 2),
            Err(Error::Structure(_))
        ));
        // q itself must be prime.
        assert!(matches!(
            validate_q_family(&[4, 8], 4),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn moduli_round_trip() {
        for (moduli, q) in [
            (vec![3u64, 6, 15], 3u64),
            (vec![6, 10], 2),
            (vec![2], 2),
            (vec![], 5),
            (vec![35, 55, 5], 5),
        ] {
            let fam = validate_q_family(&moduli, q).unwrap();
            let mut reconstructed = fam.moduli();
            reconstructed.sort_unstable();
            let mut input = moduli.clone();
            input.sort_unstable();
            assert_eq!(reconstructed, input);
        }
    }

    #[test]
    fn realize_eq1_example() {
        let fam = PrimeFamily::new(3, true, vec![2, 5]).unwrap();
        let partition = Partition::new(vec![vec![2], vec![5]]).unwrap();
        let system = fam.realize(&partition).unwrap();
        // 0 mod 3; class 1 with p=2 lifted through 0 mod 2 -> 4 mod 6;
        // class 2 with p=5 lifted through 0 mod 5 -> 5 mod 15.
        let expected = CongruenceSystem::from_pairs(&[(0, 3), (4, 6), (5, 15)]).unwrap();
        assert_eq!(system, expected);
    }

    #[test]
    fn realize_checks_partition_shape() {
        let fam = PrimeFamily::new(3, true, vec![2, 5]).unwrap();
        let wrong_parts = Partition::new(vec![vec![2], vec![5], vec![]]).unwrap();
        assert!(fam.realize(&wrong_parts).is_err());
        let wrong_set = Partition::new(vec![vec![2], vec![7]]).unwrap();
        assert!(fam.realize(&wrong_set).is_err());
    }

    #[test]
    fn realize_without_standalone_uses_class_zero() {
        let fam = PrimeFamily::new(2, false, vec![3, 5]).unwrap();
        let partition = Partition::new(vec![vec![3], vec![5]]).unwrap();
        let system = fam.realize(&partition).unwrap();
        // Part 0 -> class 1 mod 2, part 1 -> class 2 mod 2 = 0 mod 2.
        let expected = CongruenceSystem::from_pairs(&[(3, 6), (0, 10)]).unwrap();
        assert_eq!(system, expected);
    }

    #[test]
    fn lifts_change_residues_but_not_membership() {
        let fam = PrimeFamily::new(3, true, vec![2, 5]).unwrap();
        let partition = Partition::new(vec![vec![2], vec![5]]).unwrap();
        let system = fam.realize_with_lift(&partition, |p| p - 1).unwrap();
        // p=2: class 1 mod 3, 1 mod 2 -> 1 mod 6; p=5: class 2 mod 3,
        // 4 mod 5 -> 14 mod 15.
        let expected = CongruenceSystem::from_pairs(&[(0, 3), (1, 6), (14, 15)]).unwrap();
        assert_eq!(system, expected);
    }
}
