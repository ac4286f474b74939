//! Linear extensions, descents and the W-polynomial by enumeration.
//!
//! [`LinearExtensions`] walks the Jordan-Hölder set depth-first, always
//! trying the smallest available label first, so extensions come out in
//! lexicographic order. The walker keeps O(p) state and can be advanced
//! without allocating, which is what [`descent_tally`] uses.
//!
//! [`count_linear_extensions`] is an independent count over order ideals
//! that never lists permutations.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::IntPolynomial;
use crate::poset::{Permutation, Poset};
use crate::{Error, Result};

/// Default cap on the number of extensions [`w_polynomial_enumerative`] will visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Number of descents of `perm`.
pub fn descent_count(perm: &Permutation) -> usize {
    perm.descents()
}

/// Fixed-width bitset over 0-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct LabelSet(Vec<u64>);

impl LabelSet {
    fn new(p: usize) -> Self {
        Self(vec![0; p.div_ceil(64).max(1)])
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    /// Smallest member `>= from`.
    #[inline]
    fn next_from(&self, from: usize) -> Option<usize> {
        let mut word = from / 64;
        if word >= self.0.len() {
            return None;
        }
        let mut bits = self.0[word] & (!0u64 << (from % 64));
        loop {
            if bits != 0 {
                return Some(word * 64 + bits.trailing_zeros() as usize);
            }
            word += 1;
            if word == self.0.len() {
                return None;
            }
            bits = self.0[word];
        }
    }
}

/// Lexicographic stream of the linear extensions of a poset.
#[derive(Debug)]
pub struct LinearExtensions {
    succ: Vec<Vec<usize>>,
    /// Number of not-yet-placed predecessors of each label.
    pending: Vec<u32>,
    available: LabelSet,
    /// 0-based labels placed so far.
    prefix: Vec<usize>,
    /// `descents[d]` = descents within `prefix[..=d]`.
    descents: Vec<usize>,
    started: bool,
    finished: bool,
}

impl LinearExtensions {
    pub fn new(poset: &Poset) -> Self {
        let p = poset.size();
        let succ = poset.successors();
        let mut pending = vec![0u32; p];
        for targets in &succ {
            for &b in targets {
                pending[b] += 1;
            }
        }
        let mut available = LabelSet::new(p);
        for (i, &n) in pending.iter().enumerate() {
            if n == 0 {
                available.insert(i);
            }
        }
        Self {
            succ,
            pending,
            available,
            prefix: Vec::with_capacity(p),
            descents: Vec::with_capacity(p),
            started: false,
            finished: false,
        }
    }

    fn push(&mut self, label: usize) {
        self.available.remove(label);
        for &s in &self.succ[label] {
            self.pending[s] -= 1;
            if self.pending[s] == 0 {
                self.available.insert(s);
            }
        }
        let before = self.descents.last().copied().unwrap_or(0);
        let step = usize::from(self.prefix.last().is_some_and(|&last| last > label));
        self.prefix.push(label);
        self.descents.push(before + step);
    }

    fn pop(&mut self) -> Option<usize> {
        let label = self.prefix.pop()?;
        self.descents.pop();
        for &s in &self.succ[label] {
            if self.pending[s] == 0 {
                self.available.remove(s);
            }
            self.pending[s] += 1;
        }
        self.available.insert(label);
        Some(label)
    }

    fn fill(&mut self) {
        while self.prefix.len() < self.pending.len() {
            let next = self
                .available
                .next_from(0)
                .expect("acyclic poset always has an available label");
            self.push(next);
        }
    }

    /// Moves to the next extension. Returns `false` once the stream is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.finished {
            return false;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return true;
        }
        loop {
            let Some(last) = self.pop() else {
                self.finished = true;
                return false;
            };
            if let Some(next) = self.available.next_from(last + 1) {
                self.push(next);
                self.fill();
                return true;
            }
        }
    }

    /// Current extension as 0-based labels. Valid after `advance` returned `true`.
    pub fn current_zero_based(&self) -> &[usize] {
        &self.prefix
    }

    /// Descents of the current extension.
    pub fn current_descents(&self) -> usize {
        self.descents.last().copied().unwrap_or(0)
    }
}

impl Iterator for LinearExtensions {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.advance() {
            Some(Permutation::from_vec_unchecked(
                self.prefix.iter().map(|&l| l + 1).collect(),
            ))
        } else {
            None
        }
    }
}

/// Every extension of `poset` exactly once, lexicographically.
pub fn enumerate_linear_extensions(poset: &Poset) -> LinearExtensions {
    LinearExtensions::new(poset)
}

/// `counts[k]` = number of linear extensions with exactly `k` descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentTally {
    pub counts: Vec<BigUint>,
}

impl DescentTally {
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.counts
                .iter()
                .map(|c| BigInt::from(c.clone()))
                .collect(),
        )
    }
}

/// Streams every extension once and tallies descents; memory is O(p).
pub fn descent_tally(poset: &Poset) -> DescentTally {
    let p = poset.size();
    let mut counts = vec![0u64; p.max(1)];
    let mut walker = LinearExtensions::new(poset);
    while walker.advance() {
        counts[walker.current_descents()] += 1;
    }
    DescentTally {
        counts: counts.into_iter().map(BigUint::from).collect(),
    }
}

/// Number of linear extensions, by dynamic programming over order ideals.
///
/// Layer `k` maps each ideal of size `k` to the number of ways to build it
/// by adding one minimal element of the complement at a time. The cost is
/// proportional to the number of ideals: small for chain-like posets, up to
/// `2^p` for antichains.
pub fn count_linear_extensions(poset: &Poset) -> BigUint {
    let p = poset.size();
    let pred = poset.predecessors();
    let mut layer: HashMap<LabelSet, BigUint> = HashMap::new();
    layer.insert(LabelSet::new(p), BigUint::one());
    for _ in 0..p {
        let mut next: HashMap<LabelSet, BigUint> = HashMap::with_capacity(layer.len());
        for (ideal, ways) in &layer {
            for (x, below) in pred.iter().enumerate() {
                if ideal.contains(x) || !below.iter().all(|&y| ideal.contains(y)) {
                    continue;
                }
                let mut grown = ideal.clone();
                grown.insert(x);
                *next.entry(grown).or_insert_with(BigUint::zero) += ways;
            }
        }
        layer = next;
    }
    layer.into_values().sum()
}

/// `W(P, t)` by exhaustive enumeration.
///
/// The extension count is checked first with [`count_linear_extensions`];
/// posets with more than `budget` extensions fail with
/// [`Error::BudgetExceeded`] before any enumeration starts.
pub fn w_polynomial_enumerative(poset: &Poset, budget: u64) -> Result<IntPolynomial> {
    let count = count_linear_extensions(poset);
    if count.to_u64().is_none_or(|c| c > budget) {
        return Err(Error::BudgetExceeded {
            count: count.to_string(),
            budget,
        });
    }
    Ok(descent_tally(poset).to_polynomial())
}
