//! Subset-sum solvers: an instrumented branch-and-bound and the
//! meet-in-the-middle checks backing the two combinatorial conditions on
//! hard instances (all subset sums distinct; the half-total unreachable).
//!
//! The solver handles the subset-sum specialization of knapsack (weights
//! equal values) because that is the shape the hard instances have. Its
//! node counter is part of the contract: one node per recursive decision
//! point, counted on entry before any pruning, so counts are exactly
//! reproducible and comparable across instances. Chvátal (1980) showed
//! that on instances satisfying the four structural conditions every
//! algorithm in this recursive class expands exponentially many nodes;
//! the counter is how that shows up here as a measurement.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num::bigint::BigUint;
use num::Zero;

use crate::error::{Error, Result};

/// Cap on `n` for the all-sums-distinct check (2^n sums are streamed).
pub const DISTINCT_SUMS_CAP: usize = 24;
/// Cap on `n` for single-target subset-sum search (2^(n/2) memory).
pub const SUBSET_SUM_CAP: usize = 40;

/// Exact optimum of `max Σ_{i∈I} a_i` subject to `Σ ≤ capacity`, plus the
/// solver effort it took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackResult {
    pub best_value: BigUint,
    /// Indices of one optimal subset (the first one found; deterministic).
    pub chosen_set: Vec<usize>,
    /// Recursive decision points entered, counted before pruning.
    pub nodes_expanded: u64,
}

/// Depth-first branch and bound with the fractional-relaxation bound and
/// infeasibility pruning, no node budget.
pub fn solve_branch_and_bound(a: &[BigUint], capacity: &BigUint) -> Result<KnapsackResult> {
    solve_branch_and_bound_with_budget(a, capacity, u64::MAX)
}

/// As [`solve_branch_and_bound`], aborting with a budget error once more
/// than `node_budget` nodes have been entered.
///
/// Items are processed in the order given. For the subset-sum shape every
/// value/weight ratio is 1, so the fractional bound at a node is
/// `min(current + remaining, capacity)`: when the whole suffix fits the
/// bound is attained by taking it, and otherwise only an incumbent that
/// has already reached the capacity can prune. That is precisely why
/// instances whose sums crowd the half-total without reaching it are
/// expensive for this solver class.
pub fn solve_branch_and_bound_with_budget(
    a: &[BigUint],
    capacity: &BigUint,
    node_budget: u64,
) -> Result<KnapsackResult> {
    struct Solver<'a> {
        items: &'a [BigUint],
        capacity: &'a BigUint,
        /// suffix[i] = sum of items[i..].
        suffix: Vec<BigUint>,
        budget: u64,
        nodes: u64,
        best_value: BigUint,
        best_set: Vec<usize>,
        chosen: Vec<usize>,
    }

    impl Solver<'_> {
        fn descend(&mut self, idx: usize, current: BigUint) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Budget {
                    budget: self.budget,
                });
            }
            let with_rest = &current + &self.suffix[idx];
            if with_rest <= *self.capacity {
                // Whole suffix fits: the relaxation bound is attained.
                if with_rest > self.best_value {
                    self.best_value = with_rest;
                    self.best_set = self.chosen.clone();
                    self.best_set.extend(idx..self.items.len());
                }
                return Ok(());
            }
            // Bound is the capacity itself from here down.
            if self.best_value >= *self.capacity {
                return Ok(());
            }
            // idx < n: at idx == n the suffix is 0 and the branch above
            // already returned.
            let with_item = &current + &self.items[idx];
            if with_item <= *self.capacity {
                self.chosen.push(idx);
                self.descend(idx + 1, with_item)?;
                self.chosen.pop();
            }
            self.descend(idx + 1, current)
        }
    }

    let mut suffix = vec![BigUint::zero(); a.len() + 1];
    for i in (0..a.len()).rev() {
        suffix[i] = &suffix[i + 1] + &a[i];
    }
    let mut solver = Solver {
        items: a,
        capacity,
        suffix,
        budget: node_budget,
        nodes: 0,
        best_value: BigUint::zero(),
        best_set: Vec::new(),
        chosen: Vec::new(),
    };
    solver.descend(0, BigUint::zero())?;
    Ok(KnapsackResult {
        best_value: solver.best_value,
        chosen_set: solver.best_set,
        nodes_expanded: solver.nodes,
    })
}

/// All `2^n` subset sums of `items`, paired with their subset bitmasks,
/// in mask order.
fn all_subset_sums(items: &[BigUint]) -> Vec<(BigUint, u64)> {
    let mut out = Vec::with_capacity(1usize << items.len());
    out.push((BigUint::zero(), 0u64));
    for (i, item) in items.iter().enumerate() {
        for j in 0..out.len() {
            let sum = &out[j].0 + item;
            let mask = out[j].1 | (1u64 << i);
            out.push((sum, mask));
        }
    }
    out
}

/// Searches for two distinct subsets with equal sums, meet-in-the-middle:
/// the right half's sums are sorted once, and the `2^(n/2)` streams
/// "left-sum plus sorted right sums" are merged through a heap while
/// scanning consecutive totals for equality. Memory stays at `2^(n/2)`
/// entries even though all `2^n` sums are examined.
pub fn find_subset_sum_collision(a: &[BigUint]) -> Result<Option<(u64, u64)>> {
    let n = a.len();
    if n > DISTINCT_SUMS_CAP {
        return Err(Error::resource("distinct-sums size", n, DISTINCT_SUMS_CAP));
    }
    let h = n / 2;
    let left = all_subset_sums(&a[..h]);
    let mut right = all_subset_sums(&a[h..]);
    right.sort();

    let mut heap: BinaryHeap<Reverse<(BigUint, u64, usize)>> =
        BinaryHeap::with_capacity(left.len());
    for &(ref lsum, lmask) in &left {
        heap.push(Reverse((lsum + &right[0].0, lmask, 0)));
    }
    let mut prev: Option<(BigUint, u64)> = None;
    while let Some(Reverse((sum, lmask, ridx))) = heap.pop() {
        let full_mask = lmask | (right[ridx].1 << h);
        if let Some((prev_sum, prev_mask)) = &prev {
            if *prev_sum == sum {
                return Ok(Some((*prev_mask, full_mask)));
            }
        }
        if ridx + 1 < right.len() {
            let next = &left[lmask as usize].0 + &right[ridx + 1].0;
            heap.push(Reverse((next, lmask, ridx + 1)));
        }
        prev = Some((sum, full_mask));
    }
    Ok(None)
}

/// Whether all `2^n` subset sums of `a` are pairwise distinct.
pub fn distinct_subset_sums(a: &[BigUint]) -> Result<bool> {
    Ok(find_subset_sum_collision(a)?.is_none())
}

/// Finds a subset of `a` summing exactly to `target`, meet-in-the-middle
/// over `2^(n/2)` half-sums; returns its bitmask.
pub fn find_subset_hitting(a: &[BigUint], target: &BigUint) -> Result<Option<u64>> {
    let n = a.len();
    if n > SUBSET_SUM_CAP {
        return Err(Error::resource("subset-sum size", n, SUBSET_SUM_CAP));
    }
    let h = n / 2;
    let mut left = all_subset_sums(&a[..h]);
    left.sort();
    for (rsum, rmask) in all_subset_sums(&a[h..]) {
        if rsum > *target {
            continue;
        }
        let need = target - &rsum;
        let pos = left.partition_point(|(s, _)| *s < need);
        if pos < left.len() && left[pos].0 == need {
            return Ok(Some(left[pos].1 | (rmask << h)));
        }
    }
    Ok(None)
}

/// Whether some subset of `a` sums exactly to `target`.
pub fn subset_sum_exists(a: &[BigUint], target: &BigUint) -> Result<bool> {
    Ok(find_subset_hitting(a, target)?.is_some())
}

/// The indices named by a subset bitmask, ascending.
pub fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    /// Minimal deterministic generator for oracle-comparison arrays.
    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self, bound: u64) -> u64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (self.0 >> 33) % bound
        }
    }

    fn enumeration_optimum(a: &[BigUint], capacity: &BigUint) -> BigUint {
        let mut best = BigUint::zero();
        for (sum, _) in all_subset_sums(a) {
            if sum <= *capacity && sum > best {
                best = sum;
            }
        }
        best
    }

    #[test]
    fn solve_example() {
        let r = solve_branch_and_bound(&nums(&[2, 3, 7]), &BigUint::from(6u32)).unwrap();
        assert_eq!(r.best_value, BigUint::from(5u32));
        assert_eq!(r.chosen_set, vec![0, 1]);
        assert_eq!(r.nodes_expanded, 11);
    }

    #[test]
    fn solve_degenerate_cases() {
        let r = solve_branch_and_bound(&[], &BigUint::zero()).unwrap();
        assert_eq!(r.best_value, BigUint::zero());
        assert!(r.chosen_set.is_empty());
        let r = solve_branch_and_bound(&nums(&[5]), &BigUint::from(3u32)).unwrap();
        assert_eq!(r.best_value, BigUint::zero());
        assert!(r.chosen_set.is_empty());
    }

    #[test]
    fn solve_is_deterministic() {
        let a = nums(&[9, 14, 5, 7, 21, 3]);
        let cap = BigUint::from(29u32);
        let first = solve_branch_and_bound(&a, &cap).unwrap();
        let second = solve_branch_and_bound(&a, &cap).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn solve_reports_budget_exhaustion() {
        let r = solve_branch_and_bound_with_budget(&nums(&[2, 3, 7]), &BigUint::from(6u32), 3);
        assert!(matches!(r, Err(Error::Budget { budget: 3 })));
    }

    #[test]
    fn solve_matches_enumeration() {
        let mut rng = Lcg(7);
        for n in 1..=12 {
            let a = nums(&(0..n).map(|_| rng.next(100) + 1).collect::<Vec<_>>());
            let total: BigUint = a.iter().sum();
            for cap in [
                BigUint::zero(),
                &total / BigUint::from(3u32),
                &total / BigUint::from(2u32),
                total.clone(),
            ] {
                let r = solve_branch_and_bound(&a, &cap).unwrap();
                assert_eq!(r.best_value, enumeration_optimum(&a, &cap), "n={n} cap={cap}");
                let chosen_sum: BigUint = r.chosen_set.iter().map(|&i| a[i].clone()).sum();
                assert_eq!(chosen_sum, r.best_value);
                assert!(r.best_value <= cap);
            }
        }
    }

    #[test]
    fn dense_sums_close_quickly() {
        // 1..=10 reaches the half-total exactly, so the incumbent hits the
        // capacity and the bound prunes everything else.
        let a = nums(&(1..=10).collect::<Vec<_>>());
        let cap = BigUint::from(27u32);
        let r = solve_branch_and_bound(&a, &cap).unwrap();
        assert_eq!(r.best_value, cap);
        assert!(r.nodes_expanded < 100, "nodes {}", r.nodes_expanded);
    }

    #[test]
    fn distinct_examples() {
        assert!(distinct_subset_sums(&nums(&[1, 2, 4])).unwrap());
        assert!(!distinct_subset_sums(&nums(&[1, 2, 3])).unwrap());
        assert!(distinct_subset_sums(&[]).unwrap());
    }

    #[test]
    fn collision_witness_is_valid() {
        let a = nums(&[1, 2, 3]);
        let (m1, m2) = find_subset_sum_collision(&a).unwrap().unwrap();
        assert_ne!(m1, m2);
        let sum_of = |mask: u64| -> BigUint {
            mask_indices(mask).iter().map(|&i| a[i].clone()).sum()
        };
        assert_eq!(sum_of(m1), sum_of(m2));
    }

    #[test]
    fn distinct_matches_naive() {
        let mut rng = Lcg(11);
        for n in 0..=10 {
            let a = nums(&(0..n).map(|_| rng.next(40) + 1).collect::<Vec<_>>());
            let mut sums: Vec<BigUint> = all_subset_sums(&a).into_iter().map(|(s, _)| s).collect();
            sums.sort();
            let naive = sums.windows(2).all(|w| w[0] != w[1]);
            assert_eq!(distinct_subset_sums(&a).unwrap(), naive, "a={a:?}");
        }
    }

    #[test]
    fn exists_examples() {
        let a = nums(&[2, 3, 7]);
        assert!(!subset_sum_exists(&a, &BigUint::from(6u32)).unwrap());
        assert!(subset_sum_exists(&a, &BigUint::from(5u32)).unwrap());
        assert!(subset_sum_exists(&[], &BigUint::zero()).unwrap());
        assert!(!subset_sum_exists(&[], &BigUint::from(1u32)).unwrap());
    }

    #[test]
    fn exists_matches_naive_and_witness_hits() {
        let mut rng = Lcg(3);
        for n in 0..=10 {
            let a = nums(&(0..n).map(|_| rng.next(30) + 1).collect::<Vec<_>>());
            let total: BigUint = a.iter().sum();
            let mut t = BigUint::zero();
            while t <= total {
                let naive = all_subset_sums(&a).iter().any(|(s, _)| *s == t);
                match find_subset_hitting(&a, &t).unwrap() {
                    Some(mask) => {
                        assert!(naive);
                        let sum: BigUint =
                            mask_indices(mask).iter().map(|&i| a[i].clone()).sum();
                        assert_eq!(sum, t);
                    }
                    None => assert!(!naive),
                }
                t += BigUint::from(7u32);
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let many = vec![BigUint::from(1u32); DISTINCT_SUMS_CAP + 1];
        assert!(matches!(
            distinct_subset_sums(&many),
            Err(Error::Resource { .. })
        ));
        let more = vec![BigUint::from(1u32); SUBSET_SUM_CAP + 1];
        assert!(matches!(
            subset_sum_exists(&more, &BigUint::zero()),
            Err(Error::Resource { .. })
        ));
    }
}
