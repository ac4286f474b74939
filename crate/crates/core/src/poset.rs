//! Labeled posets on the ground set `{1, ..., p}`.
//!
//! A [`Poset`] is built from arbitrary relation pairs `a ≺ b`. Construction
//! computes the transitive closure as a dense bit matrix, rejects cyclic
//! input and keeps only the cover relations (the transitive reduction).
//! Labels are never renumbered: the descent statistic depends on them.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Dense square bit matrix, row-major, 64 bits per word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Warshall's algorithm, one word-wide OR per (k, i) pair.
    fn close(&mut self) {
        for k in 0..self.n {
            let row_k = self.row(k).to_vec();
            for i in 0..self.n {
                if self.get(i, k) {
                    let start = i * self.words;
                    for (w, bits) in row_k.iter().enumerate() {
                        self.bits[start + w] |= bits;
                    }
                }
            }
        }
    }
}

/// A partial order on `{1, ..., p}`, stored as its cover relations plus
/// the full strict order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    closure: BitMatrix,
}

impl Poset {
    /// Builds a poset from relation pairs `(a, b)` meaning `a ≺ b`.
    ///
    /// Pairs need not be covers; redundant pairs are reduced away. Fails on
    /// labels outside `[1, p]` and on any directed cycle (including `a ≺ a`).
    pub fn new(p: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if p == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut closure = BitMatrix::new(p);
        for &(a, b) in relations {
            for label in [a, b] {
                if label == 0 || label > p {
                    return Err(Error::Label { label, p });
                }
            }
            closure.set(a - 1, b - 1);
        }
        closure.close();
        if let Some(i) = (0..p).find(|&i| closure.get(i, i)) {
            return Err(Error::Cycle { label: i + 1 });
        }

        let mut covers = Vec::new();
        for a in 0..p {
            for b in 0..p {
                if closure.get(a, b) && !(0..p).any(|c| closure.get(a, c) && closure.get(c, b)) {
                    covers.push((a + 1, b + 1));
                }
            }
        }
        Ok(Self {
            size: p,
            covers,
            closure,
        })
    }

    /// The chain `1 ≺ 2 ≺ ... ≺ m`.
    pub fn chain(m: usize) -> Result<Self> {
        let covers: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        Self::new(m, &covers)
    }

    /// The poset on `[p]` with no relations.
    pub fn antichain(p: usize) -> Result<Self> {
        Self::new(p, &[])
    }

    /// Disjoint union of the chains `1 ≺ ... ≺ m` and `m+1 ≺ ... ≺ m+n`.
    pub fn disjoint_chains(m: usize, n: usize) -> Result<Self> {
        Self::new(m + n, &disjoint_chain_covers(m, n)?)
    }

    /// `P_{m,n}`: the disjoint chains with the extra cover `m+1 ≺ m`.
    pub fn pmn(m: usize, n: usize) -> Result<Self> {
        let mut covers = disjoint_chain_covers(m, n)?;
        covers.push((m + 1, m));
        Self::new(m + n, &covers)
    }

    /// Size of the ground set.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Cover relations `(a, b)` with `a ≺ b`, sorted lexicographically.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Whether `a ≺ b` in the transitive closure (1-based labels).
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.closure.get(a - 1, b - 1)
    }

    /// All strict relations `(a, b)`, `a ≺ b`, in lexicographic order.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |a| {
            (0..self.size)
                .filter(move |&b| self.closure.get(a, b))
                .map(move |b| (a + 1, b + 1))
        })
    }

    /// `i ≺ j` implies `i < j`.
    pub fn is_naturally_labeled(&self) -> bool {
        self.relations().all(|(a, b)| a < b)
    }

    /// Whether `perm` lists every element after all of its predecessors.
    pub fn is_linear_extension(&self, perm: &Permutation) -> bool {
        if perm.len() != self.size {
            return false;
        }
        let mut position = vec![0; self.size];
        for (i, &label) in perm.as_slice().iter().enumerate() {
            position[label - 1] = i;
        }
        self.covers
            .iter()
            .all(|&(a, b)| position[a - 1] < position[b - 1])
    }

    /// Successor lists of the cover graph, 0-based.
    pub(crate) fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.size];
        for &(a, b) in &self.covers {
            succ[a - 1].push(b - 1);
        }
        succ
    }

    /// Predecessor lists of the cover graph, 0-based.
    pub(crate) fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.size];
        for &(a, b) in &self.covers {
            pred[b - 1].push(a - 1);
        }
        pred
    }

    /// Renders the line-oriented text format with covers in canonical order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn disjoint_chain_covers(m: usize, n: usize) -> Result<Vec<(usize, usize)>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "chain lengths must be positive, got m={m}, n={n}"
        )));
    }
    Ok((1..m)
        .map(|i| (i, i + 1))
        .chain((m + 1..m + n).map(|i| (i, i + 1)))
        .collect())
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "poset {}", self.size)?;
        for (a, b) in &self.covers {
            writeln!(f, "cover {a} {b}")?;
        }
        Ok(())
    }
}

impl FromStr for Poset {
    type Err = Error;

    /// Parses
    ///
    /// ```text
    /// poset <p>
    /// cover <a> <b>
    /// ```
    ///
    /// with `#` comments and blank lines allowed anywhere.
    fn from_str(text: &str) -> Result<Self> {
        let mut size = None;
        let mut relations = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let number = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(format!("expected a non-negative integer, got {s:?}")))
            };
            match fields.as_slice() {
                ["poset", p] => {
                    if size.is_some() {
                        return Err(parse_err("duplicate poset header".into()));
                    }
                    size = Some(number(p)?);
                }
                ["cover", a, b] => {
                    if size.is_none() {
                        return Err(parse_err("cover before poset header".into()));
                    }
                    relations.push((number(a)?, number(b)?));
                }
                _ => return Err(parse_err(format!("unrecognised line {line:?}"))),
            }
        }
        let p = size.ok_or(Error::Parse {
            line: 0,
            message: "missing poset header".into(),
        })?;
        Poset::new(p, &relations)
    }
}

/// A permutation of `[p]` listed in visit order: `seq[i]` is the label at
/// position `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let p = seq.len();
        let mut seen = vec![false; p];
        for &label in &seq {
            if label == 0 || label > p {
                return Err(Error::Permutation(format!(
                    "label {label} outside [1, {p}]"
                )));
            }
            if std::mem::replace(&mut seen[label - 1], true) {
                return Err(Error::Permutation(format!("label {label} repeated")));
            }
        }
        Ok(Self(seq))
    }

    pub(crate) fn from_vec_unchecked(seq: Vec<usize>) -> Self {
        Self(seq)
    }

    pub fn identity(p: usize) -> Self {
        Self((1..=p).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of positions `i` with `seq[i] > seq[i + 1]`.
    pub fn descents(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, label) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{label}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validate_builds_p22() {
        let p = Poset::new(4, &[(1, 2), (3, 4), (3, 2)]).unwrap();
        assert_eq!(p.covers(), &[(1, 2), (3, 2), (3, 4)]);
        assert_eq!(p, Poset::pmn(2, 2).unwrap());
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            Poset::new(2, &[(1, 2), (2, 1)]),
            Err(Error::Cycle { label: 1 })
        );
        assert_eq!(Poset::new(3, &[(2, 2)]), Err(Error::Cycle { label: 2 }));
        assert_eq!(
            Poset::new(3, &[(1, 4)]),
            Err(Error::Label { label: 4, p: 3 })
        );
        assert_eq!(
            Poset::new(3, &[(0, 1)]),
            Err(Error::Label { label: 0, p: 3 })
        );
        assert_eq!(Poset::new(0, &[]), Err(Error::EmptyGroundSet));
    }

    #[test]
    fn redundant_relations_reduce_to_covers() {
        let p = Poset::new(3, &[(1, 2), (2, 3), (1, 3), (1, 2)]).unwrap();
        assert_eq!(p.covers(), &[(1, 2), (2, 3)]);
        assert!(p.precedes(1, 3));
    }

    #[test]
    fn families() {
        assert!(Poset::chain(1).unwrap().covers().is_empty());
        assert_eq!(Poset::chain(2).unwrap().covers(), &[(1, 2)]);
        assert_eq!(Poset::chain(3).unwrap().covers(), &[(1, 2), (2, 3)]);

        assert_eq!(
            Poset::disjoint_chains(2, 2).unwrap().covers(),
            &[(1, 2), (3, 4)]
        );
        assert!(Poset::disjoint_chains(1, 1).unwrap().covers().is_empty());
        assert_eq!(
            Poset::disjoint_chains(3, 4).unwrap().covers(),
            &[(1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]
        );

        assert_eq!(Poset::pmn(1, 1).unwrap().covers(), &[(2, 1)]);
        assert_eq!(
            Poset::pmn(3, 4).unwrap().covers(),
            &[(1, 2), (2, 3), (4, 3), (4, 5), (5, 6), (6, 7)]
        );

        let a = Poset::antichain(4).unwrap();
        assert!(a.covers().is_empty());
        assert_eq!(a.relations().count(), 0);
        assert_eq!(Poset::antichain(1).unwrap().size(), 1);
        assert!(Poset::pmn(0, 3).is_err());
    }

    #[test]
    fn natural_labeling() {
        assert!(Poset::chain(5).unwrap().is_naturally_labeled());
        assert!(!Poset::pmn(2, 2).unwrap().is_naturally_labeled());
        assert!(Poset::antichain(3).unwrap().is_naturally_labeled());
        for m in 1..6 {
            for n in 1..6 {
                assert!(Poset::disjoint_chains(m, n).unwrap().is_naturally_labeled());
            }
        }
    }

    #[test]
    fn pmn_closure_adds_exactly_forced_pairs() {
        for m in 1..6 {
            for n in 1..6 {
                let base = Poset::disjoint_chains(m, n).unwrap();
                let pmn = Poset::pmn(m, n).unwrap();
                let extra: Vec<_> = pmn
                    .relations()
                    .filter(|&(a, b)| !base.precedes(a, b))
                    .collect();
                assert!(base.relations().all(|(a, b)| pmn.precedes(a, b)));
                // m+1 is the bottom of chain 2 and m the top of chain 1, so
                // transitivity forces nothing beyond the new cover itself.
                let expected = vec![(m + 1, m)];
                assert_eq!(extra, expected, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn text_format_round_trip() {
        let text =
            "# P_{2,2}\nposet 4\ncover 3 4  # second chain\n\ncover 1 2\ncover 3 2\ncover 1 2\n";
        let p: Poset = text.parse().unwrap();
        assert_eq!(p, Poset::pmn(2, 2).unwrap());
        let canonical = p.to_text();
        assert_eq!(canonical, "poset 4\ncover 1 2\ncover 3 2\ncover 3 4\n");
        assert_eq!(canonical.parse::<Poset>().unwrap(), p);
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!(
            "cover 1 2".parse::<Poset>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "poset 2\nedge 1 2".parse::<Poset>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "poset x".parse::<Poset>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "".parse::<Poset>(),
            Err(Error::Parse { line: 0, .. })
        ));
        assert!(matches!(
            "poset 2\ncover 1 2\ncover 2 1".parse::<Poset>(),
            Err(Error::Cycle { .. })
        ));
    }

    #[test]
    fn permutation_checks() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![2, 2, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!(Permutation::new(vec![1, 3, 2, 4]).unwrap().descents(), 1);
        assert_eq!(Permutation::new(vec![3, 4, 1, 2]).unwrap().descents(), 1);
        assert_eq!(Permutation::identity(6).descents(), 0);
        assert_eq!(Permutation::identity(3).to_string(), "(1,2,3)");
    }

    fn random_dag() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (2usize..12).prop_flat_map(|p| {
            let pairs = proptest::collection::vec((1..=p, 1..=p), 0..3 * p);
            (
                Just(p),
                Just((1..=p).collect::<Vec<_>>()).prop_shuffle(),
                pairs,
            )
                .prop_map(|(p, order, pairs)| {
                    // Orient every pair along a random topological order.
                    let mut rank = vec![0; p + 1];
                    for (i, &label) in order.iter().enumerate() {
                        rank[label] = i;
                    }
                    let rels = pairs
                        .into_iter()
                        .filter(|(a, b)| a != b)
                        .map(|(a, b)| if rank[a] < rank[b] { (a, b) } else { (b, a) })
                        .collect();
                    (p, rels)
                })
        })
    }

    proptest! {
        #[test]
        fn random_dags_accepted_and_back_edges_rejected((p, rels) in random_dag()) {
            let poset = Poset::new(p, &rels).unwrap();
            // Re-closing the covers reproduces the same poset.
            let again = Poset::new(p, poset.covers()).unwrap();
            prop_assert_eq!(&again, &poset);
            // Closure is irreflexive and transitive.
            for a in 1..=p {
                prop_assert!(!poset.precedes(a, a));
                for b in 1..=p {
                    for c in 1..=p {
                        if poset.precedes(a, b) && poset.precedes(b, c) {
                            prop_assert!(poset.precedes(a, c));
                        }
                    }
                }
            }
            let first = poset.relations().next();
            if let Some((a, b)) = first {
                let mut cyclic = rels.clone();
                cyclic.push((b, a));
                let rejected = matches!(Poset::new(p, &cyclic), Err(Error::Cycle { .. }));
                prop_assert!(rejected);
            }
        }
    }
}
