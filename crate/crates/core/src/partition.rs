//! Partitions of a prime set and exact minimization of the partition value
//! `sum over parts of prod_{b in part} (1 - 1/b)`.
//!
//! This is the combinatorial core: for structured families the optimal
//! residue choice collapses to exactly this minimization. Two independent
//! routes are provided: a branch-and-bound optimizer ([`min_sum_partition`])
//! and a plain labeled-assignment enumerator ([`partition_bruteforce`]) that
//! serves as its oracle. All comparisons are exact rational comparisons;
//! logarithms never enter the optimization path (they only appear in the
//! certified knapsack bridge, see [`crate::interval`]).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::interval::{log_weight, DyadicInterval, DEFAULT_PRECISION_CAP_BITS};
use crate::primes::is_prime;
use crate::rational::Rational;

/// Default cap on `|P|` for the 2-part branch-and-bound.
pub const DEFAULT_TWO_PART_CAP: usize = 30;
/// Default cap on `|P|` for general part counts.
pub const DEFAULT_GENERAL_CAP: usize = 20;
/// Cap on the number of labeled assignments `k^|P|` the brute-force
/// enumerator will visit.
pub const BRUTEFORCE_ASSIGNMENT_CAP: u64 = 10_000_000;

/// An assignment of a prime set to `k` labeled parts, stored in canonical
/// form: each part sorted ascending, parts ordered by smallest contained
/// prime, empty parts last. Empty parts are allowed and count toward `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<Vec<u64>>,
}

impl Partition {
    /// Builds a partition from raw parts, validating primality and
    /// disjointness and normalizing to canonical form.
    pub fn new(parts: Vec<Vec<u64>>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for part in &parts {
            for &p in part {
                if !is_prime(p) {
                    return Err(Error::validation(format!("{p} is not prime")));
                }
                if !seen.insert(p) {
                    return Err(Error::validation(format!("prime {p} appears twice")));
                }
            }
        }
        Ok(Self::from_disjoint(parts))
    }

    /// Canonicalizes parts already known to be disjoint prime sets.
    fn from_disjoint(mut parts: Vec<Vec<u64>>) -> Self {
        for part in &mut parts {
            part.sort_unstable();
        }
        // Nonempty parts by smallest element, empty parts last.
        parts.sort_by(|a, b| match (a.first(), b.first()) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        });
        Partition { parts }
    }

    pub fn parts(&self) -> &[Vec<u64>] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Union of all parts, ascending.
    pub fn ground_set(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// `prod_{b in part} (1 - 1/b)` for one part; the empty product is 1.
    pub fn part_product(part: &[u64]) -> Rational {
        let mut acc = Rational::one();
        for &p in part {
            acc *= &Rational::one_minus_inv(p);
        }
        acc
    }

    /// The partition value `sum_j prod_{b in P_j} (1 - 1/b)`.
    pub fn value(&self) -> Rational {
        let mut acc = Rational::zero();
        for part in &self.parts {
            acc += &Self::part_product(part);
        }
        acc
    }
}

impl std::fmt::Display for Partition {
    /// `{2}|{3,5}|{}` with parts in canonical order.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{{")?;
            for (j, p) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// A partition together with its exact value and per-part products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionValue {
    pub partition: Partition,
    pub value: Rational,
    pub part_products: Vec<Rational>,
}

impl PartitionValue {
    fn from_partition(partition: Partition) -> Self {
        let part_products: Vec<Rational> = partition
            .parts()
            .iter()
            .map(|part| Partition::part_product(part))
            .collect();
        let mut value = Rational::zero();
        for q in &part_products {
            value += q;
        }
        PartitionValue {
            partition,
            value,
            part_products,
        }
    }
}

fn validate_prime_set(primes: &[u64]) -> Result<Vec<u64>> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::validation(format!("prime {} appears twice", pair[0])));
        }
    }
    for &p in &sorted {
        if !is_prime(p) {
            return Err(Error::validation(format!("{p} is not prime")));
        }
    }
    Ok(sorted)
}

/// Exact global minimum of the partition value over partitions of `primes`
/// into `k` labeled-then-canonicalized parts, using the default size caps.
pub fn min_sum_partition(primes: &[u64], k: usize) -> Result<PartitionValue> {
    min_sum_partition_with_cap(
        primes,
        k,
        if k == 2 {
            DEFAULT_TWO_PART_CAP
        } else {
            DEFAULT_GENERAL_CAP
        },
    )
}

/// As [`min_sum_partition`] with an explicit cap on `|P|`.
pub fn min_sum_partition_with_cap(primes: &[u64], k: usize, cap: usize) -> Result<PartitionValue> {
    if k < 1 {
        return Err(Error::validation("part count k must be at least 1"));
    }
    let primes = validate_prime_set(primes)?;
    if primes.len() > cap {
        return Err(Error::resource("partition search size", primes.len(), cap));
    }
    let best = if k == 2 {
        two_part_branch_and_bound(&primes)
    } else {
        general_min_search(&primes, k)
    };
    Ok(PartitionValue::from_partition(best))
}

/// 2-part branch-and-bound on exact products.
///
/// The two part products multiply to the fixed total `Q = prod_P (1 - 1/p)`,
/// so minimizing the sum is the same as minimizing the absolute difference of
/// the products, i.e. maximizing the smaller product (bounded above by
/// `sqrt(Q)`, compared exactly by squaring). Both part products only shrink
/// as primes are assigned, so `min(q1, q2)` bounds the smaller product of
/// every completion: a branch is cut once that bound cannot exceed the
/// incumbent's smaller product. Primes are taken in ascending order
/// (descending log weight), the currently-larger product first so the first
/// descent is the greedy balanced assignment.
fn two_part_branch_and_bound(primes: &[u64]) -> Partition {
    struct Search<'a> {
        primes: &'a [u64],
        total: Rational,
        // Incumbent: smaller product, assignment bitmask (bit i set => part 1).
        best_small: Rational,
        best_mask: u64,
    }

    impl Search<'_> {
        fn record(&mut self, q0: &Rational, q1: &Rational, mask: u64) {
            let small = if q0 <= q1 { q0 } else { q1 };
            match small.cmp(&self.best_small) {
                Ordering::Greater => {
                    self.best_small = small.clone();
                    self.best_mask = mask;
                }
                // Distinct 2-partitions always have distinct products
                // (unique factorization), so ties only arise from the two
                // labelings of the same split; either mask canonicalizes
                // to the same partition.
                Ordering::Equal | Ordering::Less => {}
            }
        }

        fn descend(&mut self, idx: usize, q0: Rational, q1: Rational, mask: u64) {
            if idx == self.primes.len() {
                self.record(&q0, &q1, mask);
                return;
            }
            // Bound: every completion's smaller product is <= min(q0, q1),
            // and globally <= sqrt(total). Cut when it cannot beat the
            // incumbent strictly.
            let small = if q0 <= q1 { &q0 } else { &q1 };
            if *small <= self.best_small {
                return;
            }
            if self.best_small.square() >= self.total {
                return;
            }
            let factor = Rational::one_minus_inv(self.primes[idx]);
            let into_0 = (&q0 * &factor, q1.clone(), mask);
            let into_1 = (q0.clone(), &q1 * &factor, mask | (1u64 << idx));
            // Larger-product part first: the greedy balanced branch.
            let branches = if q0 >= q1 {
                [into_0, into_1]
            } else {
                [into_1, into_0]
            };
            for (a, b, m) in branches {
                self.descend(idx + 1, a, b, m);
            }
        }
    }

    let mut search = Search {
        primes,
        total: Partition::part_product(primes),
        best_small: Rational::zero(),
        best_mask: 0,
    };
    // Seed the incumbent with the everything-in-part-0 split so the bound
    // is live from the first node.
    search.record(&search.total.clone(), &Rational::one(), 0);
    search.descend(0, Rational::one(), Rational::one(), 0);

    let mut parts = vec![Vec::new(), Vec::new()];
    for (i, &p) in primes.iter().enumerate() {
        parts[usize::from(search.best_mask >> i & 1 == 1)].push(p);
    }
    Partition::from_disjoint(parts)
}

/// Recursive assignment search for general `k` with a per-node lower bound.
///
/// At a node let `q_j` be the current part products and `Q` the full-set
/// product. Final products satisfy `f_j <= q_j` and `prod_j f_j = Q`, so
/// `f_j >= Q / prod_{i != j} q_i` and hence
/// `sum_j f_j >= (Q / prod_j q_j) * sum_j q_j`. Nodes whose bound exceeds
/// the incumbent value are cut; ties are resolved by canonical order so the
/// result does not depend on search order. Symmetry is broken by allowing a
/// prime into at most one currently-empty part.
fn general_min_search(primes: &[u64], k: usize) -> Partition {
    struct Search<'a> {
        primes: &'a [u64],
        total: Rational,
        assignment: Vec<usize>,
        products: Vec<Rational>,
        best_value: Rational,
        best: Option<Partition>,
    }

    impl Search<'_> {
        fn leaf(&mut self) {
            let mut value = Rational::zero();
            for q in &self.products {
                value += q;
            }
            match value.cmp(&self.best_value) {
                Ordering::Less => {
                    self.best_value = value;
                    self.best = Some(self.to_partition());
                }
                Ordering::Equal => {
                    let cand = self.to_partition();
                    if let Some(best) = &self.best {
                        if cand < *best {
                            self.best = Some(cand);
                        }
                    }
                }
                Ordering::Greater => {}
            }
        }

        fn to_partition(&self) -> Partition {
            let mut parts = vec![Vec::new(); self.products.len()];
            for (i, &j) in self.assignment.iter().enumerate() {
                parts[j].push(self.primes[i]);
            }
            Partition::from_disjoint(parts)
        }

        fn bound_allows(&self) -> bool {
            if self.best.is_none() {
                return true;
            }
            let mut sum = Rational::zero();
            let mut prod = Rational::one();
            for q in &self.products {
                sum += q;
                prod *= q;
            }
            // lower bound on any completion's value
            let lb = &(&self.total * &sum) / &prod;
            lb <= self.best_value
        }

        fn descend(&mut self, idx: usize) {
            if idx == self.primes.len() {
                self.leaf();
                return;
            }
            if !self.bound_allows() {
                return;
            }
            let factor = Rational::one_minus_inv(self.primes[idx]);
            let mut used_empty = false;
            for j in 0..self.products.len() {
                // Interchangeable empty parts: open at most one.
                let is_empty = !self.assignment[..idx].contains(&j);
                if is_empty && used_empty {
                    continue;
                }
                if is_empty {
                    used_empty = true;
                }
                let saved = self.products[j].clone();
                self.products[j] = &self.products[j] * &factor;
                self.assignment[idx] = j;
                self.descend(idx + 1);
                self.products[j] = saved;
            }
        }
    }

    let mut search = Search {
        primes,
        total: Partition::part_product(primes),
        assignment: vec![0; primes.len()],
        products: vec![Rational::one(); k],
        best_value: Rational::from_int(i64::try_from(k).unwrap_or(i64::MAX)),
        best: None,
    };
    // Seed: everything in part 0 (value <= k is guaranteed attainable).
    search.best = Some({
        let mut parts = vec![Vec::new(); k];
        parts[0] = primes.to_vec();
        Partition::from_disjoint(parts)
    });
    search.best_value = search.best.as_ref().unwrap().value();
    search.descend(0);
    search.best.expect("search space is nonempty")
}

/// Exhaustive enumeration of all `k^|P|` labeled assignments; the oracle
/// for [`min_sum_partition`]. Ties between distinct canonical partitions are
/// broken toward the canonically smaller one, matching the optimizer.
pub fn partition_bruteforce(primes: &[u64], k: usize) -> Result<PartitionValue> {
    if k < 1 {
        return Err(Error::validation("part count k must be at least 1"));
    }
    let primes = validate_prime_set(primes)?;
    let assignments = (k as u64).checked_pow(primes.len() as u32);
    match assignments {
        Some(a) if a <= BRUTEFORCE_ASSIGNMENT_CAP => {}
        _ => {
            return Err(Error::resource(
                "brute-force assignment count",
                assignments.map_or_else(|| "overflow".to_string(), |a| a.to_string()),
                BRUTEFORCE_ASSIGNMENT_CAP,
            ))
        }
    }

    struct Enumerate<'a> {
        primes: &'a [u64],
        k: usize,
        assignment: Vec<usize>,
        products: Vec<Rational>,
        // Running sum of the part products, updated incrementally so a
        // leaf costs one comparison instead of k additions.
        sum: Rational,
        best_value: Option<Rational>,
        best: Option<Partition>,
    }

    impl Enumerate<'_> {
        fn run(&mut self, idx: usize) {
            if idx == self.primes.len() {
                let better = match &self.best_value {
                    None => true,
                    Some(b) => self.sum < *b,
                };
                if better {
                    self.best_value = Some(self.sum.clone());
                    self.best = Some(self.current_partition());
                } else if self.best_value.as_ref() == Some(&self.sum) {
                    let cand = self.current_partition();
                    if let Some(best) = &self.best {
                        if cand < *best {
                            self.best = Some(cand);
                        }
                    }
                }
                return;
            }
            let factor = Rational::one_minus_inv(self.primes[idx]);
            for j in 0..self.k {
                let saved = self.products[j].clone();
                let updated = &saved * &factor;
                self.sum = &(&self.sum - &saved) + &updated;
                self.products[j] = updated;
                self.assignment[idx] = j;
                self.run(idx + 1);
                self.sum = &(&self.sum - &self.products[j]) + &saved;
                self.products[j] = saved;
            }
        }

        fn current_partition(&self) -> Partition {
            let mut parts = vec![Vec::new(); self.k];
            for (i, &j) in self.assignment.iter().enumerate() {
                parts[j].push(self.primes[i]);
            }
            Partition::from_disjoint(parts)
        }
    }

    let mut e = Enumerate {
        primes: &primes,
        k,
        assignment: vec![0; primes.len()],
        products: vec![Rational::one(); k],
        sum: Rational::from_int(k as i64),
        best_value: None,
        best: None,
    };
    e.run(0);
    Ok(PartitionValue::from_partition(
        e.best.expect("at least one assignment exists"),
    ))
}

/// Cap on `|P|` for the log-form bridge (keeps capacity widths within the
/// requested precision).
pub const KNAPSACK_LOG_PRIME_CAP: usize = 256;
/// Internal slack so the returned widths come in under `precision_bits`
/// even after summing.
const KNAPSACK_LOG_SLACK_BITS: u32 = 8;

/// The balanced-2-partition problem in logarithmic clothing: item weights
/// `-ln(1 - 1/p)` and capacity half their total.
///
/// Choosing `I ⊆ P` with `sum_{p in I} w_p` maximal subject to staying at
/// or below the capacity is the same optimization as
/// [`min_sum_partition`]`(P, 2)`: exponentiating turns the weight sum into
/// `1 / prod_{p in I} (1 - 1/p)`, so pushing the sum up toward half the
/// total pushes the smaller part product up toward the square root of the
/// full product. The optimization itself runs on exact rationals; this
/// form exists for interoperating with knapsack tooling, so every real
/// number in it is a certified enclosure, never a float.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackLogInstance {
    pub primes: Vec<u64>,
    pub precision_bits: u32,
    pub weights: Vec<DyadicInterval>,
    pub capacity: DyadicInterval,
}

/// Builds the certified log-form bridge for `P`. All interval widths are
/// at most `2^-precision_bits`.
pub fn to_knapsack_log_form(primes: &[u64], precision_bits: u32) -> Result<KnapsackLogInstance> {
    if primes.is_empty() {
        return Err(Error::validation("log form needs a non-empty prime set"));
    }
    if precision_bits < 2 {
        return Err(Error::validation("precision must be at least 2 bits"));
    }
    if precision_bits > DEFAULT_PRECISION_CAP_BITS {
        return Err(Error::resource(
            "precision bits",
            precision_bits,
            DEFAULT_PRECISION_CAP_BITS,
        ));
    }
    let primes = validate_prime_set(primes)?;
    if primes.len() > KNAPSACK_LOG_PRIME_CAP {
        return Err(Error::resource(
            "log-form prime count",
            primes.len(),
            KNAPSACK_LOG_PRIME_CAP,
        ));
    }
    let work_bits = precision_bits + KNAPSACK_LOG_SLACK_BITS;
    let weights = primes
        .iter()
        .map(|&p| log_weight(p, work_bits))
        .collect::<Result<Vec<_>>>()?;
    let mut total = weights[0].clone();
    for w in &weights[1..] {
        total = total.add(w);
    }
    Ok(KnapsackLogInstance {
        primes,
        precision_bits,
        capacity: total.halve(),
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_orders_parts() {
        let p = Partition::new(vec![vec![5], vec![], vec![3, 2]]).unwrap();
        assert_eq!(p.parts(), &[vec![2, 3], vec![5], vec![]]);
        assert_eq!(p.to_string(), "{2,3}|{5}|{}");
    }

    #[test]
    fn partition_rejects_overlap_and_composites() {
        assert!(Partition::new(vec![vec![2], vec![2]]).is_err());
        assert!(Partition::new(vec![vec![4]]).is_err());
    }

    #[test]
    fn value_examples() {
        let p = Partition::new(vec![vec![2], vec![5]]).unwrap();
        assert_eq!(p.value(), Rational::ratio(13, 10));
        let p = Partition::new(vec![vec![], vec![]]).unwrap();
        assert_eq!(p.value(), Rational::from_int(2));
    }

    #[test]
    fn min_sum_two_five() {
        let r = min_sum_partition(&[2, 5], 2).unwrap();
        assert_eq!(r.value, Rational::ratio(13, 10));
        assert_eq!(r.partition, Partition::new(vec![vec![2], vec![5]]).unwrap());
    }

    #[test]
    fn min_sum_two_three_five() {
        // All four unordered 2-partitions:
        //   {2}|{3,5}: 1/2 + 8/15 = 31/30   (minimum)
        //   {3}|{2,5}: 2/3 + 2/5  = 32/30
        //   {5}|{2,3}: 4/5 + 1/3  = 34/30
        //   {2,3,5}|{}: 4/15 + 1  = 38/30
        let r = min_sum_partition(&[2, 3, 5], 2).unwrap();
        assert_eq!(r.value, Rational::ratio(31, 30));
        assert_eq!(
            r.partition,
            Partition::new(vec![vec![2], vec![3, 5]]).unwrap()
        );
    }

    #[test]
    fn min_sum_single_part() {
        let r = min_sum_partition(&[7], 1).unwrap();
        assert_eq!(r.value, Rational::ratio(6, 7));
        assert_eq!(r.partition, Partition::new(vec![vec![7]]).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        let r = partition_bruteforce(&[2, 5], 2).unwrap();
        assert_eq!(r.value, Rational::ratio(13, 10));
        let r = partition_bruteforce(&[2, 5], 3).unwrap();
        assert_eq!(r.value, Rational::ratio(23, 10));
        assert_eq!(
            r.partition,
            Partition::new(vec![vec![2], vec![5], vec![]]).unwrap()
        );
        let r = partition_bruteforce(&[], 2).unwrap();
        assert_eq!(r.value, Rational::from_int(2));
        assert_eq!(r.partition, Partition::new(vec![vec![], vec![]]).unwrap());
    }

    #[test]
    fn empty_set_min_sum() {
        let r = min_sum_partition(&[], 2).unwrap();
        assert_eq!(r.value, Rational::from_int(2));
    }

    #[test]
    fn caps_are_enforced() {
        let many = crate::primes::first_primes(31);
        assert!(matches!(
            min_sum_partition(&many, 2),
            Err(Error::Resource { .. })
        ));
        let some = crate::primes::first_primes(21);
        assert!(matches!(
            min_sum_partition(&some, 3),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(
            partition_bruteforce(&crate::primes::first_primes(24), 2),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn optimizer_matches_bruteforce_small() {
        for k in [1usize, 2, 3, 4] {
            for set in [
                vec![],
                vec![2],
                vec![2, 3],
                vec![2, 3, 5],
                vec![2, 3, 5, 7],
                vec![3, 5, 7, 11],
                vec![2, 3, 5, 7, 11, 13],
            ] {
                let a = min_sum_partition(&set, k).unwrap();
                let b = partition_bruteforce(&set, k).unwrap();
                assert_eq!(a.value, b.value, "set {set:?} k {k}");
                assert_eq!(a.partition, b.partition, "set {set:?} k {k}");
            }
        }
    }

    #[test]
    fn part_products_sum_to_value() {
        let r = min_sum_partition(&[2, 3, 5, 7], 3).unwrap();
        let mut sum = Rational::zero();
        for q in &r.part_products {
            sum += q;
        }
        assert_eq!(sum, r.value);
    }

    /// Every 2-partition of `P`, as (left part, right part) index splits.
    fn all_two_partitions(primes: &[u64]) -> Vec<(Vec<u64>, Vec<u64>)> {
        let n = primes.len();
        (0..(1u32 << n))
            .map(|mask| {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (i, &p) in primes.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        left.push(p);
                    } else {
                        right.push(p);
                    }
                }
                (left, right)
            })
            .collect()
    }

    #[test]
    fn product_conservation_and_identity() {
        let primes = [2u64, 3, 5, 7, 11];
        let total = Partition::part_product(&primes);
        for (left, right) in all_two_partitions(&primes) {
            let x = Partition::part_product(&left);
            let y = Partition::part_product(&right);
            // Conservation.
            assert_eq!(&x * &y, total);
            // (x+y)^2 - (x-y)^2 = 4xy.
            let sum_sq = (&x + &y).square();
            let diff_sq = (&x - &y).square();
            assert_eq!(&sum_sq - &diff_sq, &Rational::from_int(4) * &total);
            // The smaller term is at most sqrt of the total product.
            let small = if x <= y { &x } else { &y };
            assert!(small.square() <= total);
        }
    }

    #[test]
    fn argmin_sum_equals_argmin_abs_diff() {
        for primes in [vec![2u64, 3, 5], vec![2, 3, 5, 7, 11], vec![3, 7, 13]] {
            let splits = all_two_partitions(&primes);
            let values: Vec<(Rational, Rational)> = splits
                .iter()
                .map(|(l, r)| {
                    let x = Partition::part_product(l);
                    let y = Partition::part_product(r);
                    (&x + &y, (&x - &y).abs())
                })
                .collect();
            let min_sum = values.iter().map(|(s, _)| s).min().unwrap().clone();
            let min_diff = values.iter().map(|(_, d)| d).min().unwrap().clone();
            for (s, d) in &values {
                assert_eq!(*s == min_sum, *d == min_diff, "primes {primes:?}");
            }
        }
    }

    #[test]
    fn log_form_single_prime() {
        let inst = to_knapsack_log_form(&[2], 64).unwrap();
        let (wlo, whi) = inst.weights[0].to_rational_bounds();
        // ln 2 = 0.6931471805...
        let ln2_lo: Rational = "6931471805/10000000000".parse().unwrap();
        let ln2_hi: Rational = "6931471806/10000000000".parse().unwrap();
        assert!(wlo <= ln2_hi && ln2_lo <= whi);
        let (clo, chi) = inst.capacity.to_rational_bounds();
        // (ln 2)/2 = 0.3465735902...
        let half_lo: Rational = "3465735902/10000000000".parse().unwrap();
        let half_hi: Rational = "3465735903/10000000000".parse().unwrap();
        assert!(clo <= half_hi && half_lo <= chi);
    }

    #[test]
    fn log_form_capacity_is_half_the_weight_sum() {
        let inst = to_knapsack_log_form(&[2, 5], 64).unwrap();
        // ln 2 + ln(5/4) = 0.9162907318...; capacity is half: 0.4581453659...
        let (clo, chi) = inst.capacity.to_rational_bounds();
        let lo: Rational = "4581453659/10000000000".parse().unwrap();
        let hi: Rational = "4581453660/10000000000".parse().unwrap();
        assert!(clo <= hi && lo <= chi);
    }

    #[test]
    fn log_form_widths_meet_precision_and_shrink() {
        for bits in [16u32, 32, 64] {
            let inst = to_knapsack_log_form(&[2, 3, 5, 7, 11, 13], bits).unwrap();
            let bound = Rational::new(1.into(), num::BigInt::from(1u8) << bits).unwrap();
            let width = |iv: &DyadicInterval| {
                let (lo, hi) = iv.to_rational_bounds();
                hi - lo
            };
            for w in &inst.weights {
                assert!(width(w) <= bound, "bits {bits}");
            }
            assert!(width(&inst.capacity) <= bound, "bits {bits}");

            let finer = to_knapsack_log_form(&[2, 3, 5, 7, 11, 13], bits * 2).unwrap();
            for (coarse, fine) in inst.weights.iter().zip(&finer.weights) {
                let halved = &width(coarse) / &Rational::from_int(2);
                assert!(width(fine) <= halved, "bits {bits}");
            }
            let halved = &width(&inst.capacity) / &Rational::from_int(2);
            assert!(width(&finer.capacity) <= halved, "bits {bits}");
        }
    }

    #[test]
    fn log_form_validation() {
        assert!(to_knapsack_log_form(&[], 32).is_err());
        assert!(to_knapsack_log_form(&[4], 32).is_err());
        assert!(to_knapsack_log_form(&[2], 1).is_err());
        assert!(matches!(
            to_knapsack_log_form(&[2], 1 << 20),
            Err(Error::Resource { .. })
        ));
    }
}
