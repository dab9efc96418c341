//! Integer partitions, Young diagrams and the tableau counts built on them.
//!
//! A [`Partition`] is a weakly decreasing tuple of positive parts with no
//! trailing zeros; the empty partition is the only shape of size zero.
//! Rim hooks are handled through beta-sets (first-column hook lengths): a rim
//! hook of size `r` whose top cell lies in row `i` corresponds to sliding the
//! bead of row `i` down by `r` onto a free position, and its height is one
//! more than the number of beads jumped over.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactq::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing positive integers")]
    NotAPartition(Vec<usize>),
    #[error("malformed partition text {0:?}")]
    Malformed(String),
    #[error("leg length {k} is smaller than the belly height {height}")]
    LegTooShort { k: usize, height: usize },
    #[error("leg length must be positive")]
    ZeroLeg,
    #[error("n = {n} is too small to realize the belly shape (need n >= {min})")]
    TooSmall { n: usize, min: usize },
    #[error("Kostka shortcut needs m <= n - belly_1 - 1 (m = {m}, n = {n})")]
    KostkaRange { m: usize, n: usize },
}

/// A weakly decreasing tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts, drops zeros, and wraps.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row shape `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column shape `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(n - k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Self {
        assert!(k < n, "hook (n-k, 1^k) needs k < n");
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Partition(parts)
    }

    /// The cycle type of a single `(n - l)`-cycle in `S_n`: `(n - l, 1^l)`.
    pub fn cycle_with_fixed_points(n: usize, l: usize) -> Self {
        let mut parts = vec![n - l];
        parts.extend(std::iter::repeat_n(1, l));
        Partition::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the first row (0 for the empty partition).
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.transpose();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j - 1 + conj.0[j] - i - 1 + 1);
            }
        }
        out
    }

    /// Sign of any permutation with this cycle type.
    pub fn cycle_sign(&self) -> i64 {
        let transpositions: usize = self.0.iter().map(|p| p - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn beads(&self) -> Vec<usize> {
        let h = self.height();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| p + h - 1 - i)
            .collect()
    }

    fn from_beads(mut beads: Vec<usize>) -> Partition {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        let h = beads.len();
        Partition::from_unsorted(
            beads
                .iter()
                .enumerate()
                .map(|(i, &b)| b - (h - 1 - i))
                .collect(),
        )
    }

    /// Removes the rim hook of `size` cells whose top-right cell is the end of `row`.
    pub fn remove_rim_hook_at(&self, row: usize, size: usize) -> Option<RimHookRemoval> {
        let beads = self.beads();
        let from = *beads.get(row)?;
        let to = from.checked_sub(size)?;
        if size == 0 || beads.contains(&to) {
            return None;
        }
        let jumped = beads.iter().filter(|&&b| to < b && b < from).count();
        let mut moved = beads;
        moved[row] = to;
        Some(RimHookRemoval {
            start_row: row,
            remaining: Partition::from_beads(moved),
            height: jumped + 1,
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses `"a,b,c"`; the empty string (or `"()"`) is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Malformed(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// The pair `(k, belly)` indexing the shape `(n - |belly| - k, belly_1 + 1, ..., belly_t + 1, 1^(k - t))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BellyShape {
    k: usize,
    belly: Partition,
}

impl BellyShape {
    pub fn new(k: usize, belly: Partition) -> Result<Self, PartitionError> {
        if k == 0 {
            return Err(PartitionError::ZeroLeg);
        }
        if k < belly.height() {
            return Err(PartitionError::LegTooShort {
                k,
                height: belly.height(),
            });
        }
        Ok(BellyShape { k, belly })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn belly(&self) -> &Partition {
        &self.belly
    }

    /// Smallest `n` for which [`realize_belly`] is defined.
    pub fn min_n(&self) -> usize {
        self.belly.size() + self.k + self.belly.first() + 1
    }
}

impl fmt::Debug for BellyShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b[k={};{:?}]", self.k, self.belly)
    }
}

/// Result of removing one rim hook.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHookRemoval {
    /// Row holding the top (rightmost) cell of the removed hook.
    pub start_row: usize,
    pub remaining: Partition,
    /// Number of rows the removed hook spans.
    pub height: usize,
}

/// All partitions of `n`, descending lexicographically.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

/// The shape `b^n_{k,belly}`.
pub fn realize_belly(b: &BellyShape, n: usize) -> Result<Partition, PartitionError> {
    if n < b.min_n() {
        return Err(PartitionError::TooSmall { n, min: b.min_n() });
    }
    let mut parts = vec![n - b.belly.size() - b.k];
    parts.extend(b.belly.parts().iter().map(|p| p + 1));
    parts.extend(std::iter::repeat_n(1, b.k - b.belly.height()));
    Ok(Partition(parts))
}

/// `b^n_{k,belly}` with its first row removed; independent of `n`.
pub fn mu_shape(b: &BellyShape) -> Partition {
    let mut parts: Vec<usize> = b.belly.parts().iter().map(|p| p + 1).collect();
    parts.extend(std::iter::repeat_n(1, b.k - b.belly.height()));
    Partition(parts)
}

/// Removes, from a large realization of `b`, the rim hook of size `n - l` that
/// contains the end of the first row.
///
/// Returns the remaining shape and the height of the removed hook, or `None`
/// when that removal does not leave a valid diagram. The answer does not
/// depend on which large `n` is used.
pub fn xi_shape(b: &BellyShape, l: usize) -> Option<(Partition, usize)> {
    let n = b.min_n().max(b.belly.size() + b.k + l + 1);
    xi_shape_at(b, l, n)
}

/// [`xi_shape`] computed on a specific realization `n`.
pub fn xi_shape_at(b: &BellyShape, l: usize, n: usize) -> Option<(Partition, usize)> {
    let shape = realize_belly(b, n).ok()?;
    let size = n.checked_sub(l).filter(|&s| s > 0)?;
    shape
        .remove_rim_hook_at(0, size)
        .map(|r| (r.remaining, r.height))
}

/// Every rim hook of the given size, ordered by the row of its top cell.
pub fn enumerate_rim_hooks(lambda: &Partition, size: usize) -> Vec<RimHookRemoval> {
    (0..lambda.height())
        .filter_map(|row| lambda.remove_rim_hook_at(row, size))
        .collect()
}

/// Number of standard Young tableaux of shape `lambda`, via the hook length formula.
pub fn standard_count(lambda: &Partition) -> BigUint {
    let n = lambda.size() as u64;
    let numerator: BigUint = (1..=n).map(BigUint::from).product();
    let denominator: BigUint = lambda
        .hook_lengths()
        .into_iter()
        .map(|h| BigUint::from(h as u64))
        .product();
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}

/// Standard fillings of the skew shape `lambda / (strip)`.
pub fn skew_standard_count(lambda: &Partition, strip: usize) -> BigUint {
    assert!(strip <= lambda.first(), "strip longer than the first row");
    fn rec(
        parts: &mut Vec<usize>,
        strip: usize,
        memo: &mut HashMap<Vec<usize>, BigUint>,
    ) -> BigUint {
        let remaining: usize = parts.iter().sum::<usize>() - strip;
        if remaining == 0 {
            return BigUint::one();
        }
        if let Some(v) = memo.get(parts.as_slice()) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..parts.len() {
            let p = parts[i];
            let corner = p > 0 && parts.get(i + 1).is_none_or(|&q| q < p);
            let outside_strip = i > 0 || p > strip;
            if corner && outside_strip {
                parts[i] -= 1;
                total += rec(parts, strip, memo);
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total.clone());
        total
    }
    rec(&mut lambda.parts().to_vec(), strip, &mut HashMap::new())
}

/// Kostka number `K_{lambda, (n - m, 1^m)}` for `n = |lambda|`.
///
/// Column strictness forces all `n - m` ones into the first row, so the count
/// reduces to standard fillings of the rest.
pub fn kostka_hook(lambda: &Partition, m: usize) -> BigUint {
    let n = lambda.size();
    assert!(m < n.max(1), "hook content (n - m, 1^m) needs m <= n - 1");
    if lambda.first() < n - m {
        return BigUint::zero();
    }
    skew_standard_count(lambda, n - m)
}

/// Closed form `binom(m, k + |belly|) · f_{mu_{k,belly}}` for the Kostka number
/// of a realized belly shape, valid while `m <= n - belly_1 - 1`.
pub fn kostka_belly(b: &BellyShape, m: usize, n: usize) -> Result<BigUint, PartitionError> {
    if n < b.min_n() {
        return Err(PartitionError::TooSmall { n, min: b.min_n() });
    }
    if m + b.belly.first() + 1 > n {
        return Err(PartitionError::KostkaRange { m, n });
    }
    Ok(kostka_belly_limit(b, m))
}

/// `binom(m, k + |belly|) · f_{mu_{k,belly}}` with no reference to `n`.
pub fn kostka_belly_limit(b: &BellyShape, m: usize) -> BigUint {
    let choose = binomial(m as u64, (b.k + b.belly.size()) as u64);
    choose.to_biguint().expect("binomials are non-negative") * standard_count(&mu_shape(b))
}

/// All `(k, belly)` with `|belly| <= l0`, `max(1, ht(belly)) <= k <= k0`, in
/// canonical order: `|belly|` ascending, belly descending-lex, `k` ascending.
pub fn belly_index(l0: usize, k0: usize) -> Vec<BellyShape> {
    let mut out = Vec::new();
    for size in 0..=l0 {
        for belly in enumerate_partitions(size) {
            for k in belly.height().max(1)..=k0 {
                out.push(BellyShape {
                    k,
                    belly: belly.clone(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use birkhoff_oracles as oracle;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn belly(k: usize, parts: &[usize]) -> BellyShape {
        BellyShape::new(k, p(parts)).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(oracle::partition_count(11), 56);
        for n in 0..=20 {
            assert_eq!(
                enumerate_partitions(n).len() as u64,
                oracle::partition_count(n)
            );
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,a".parse::<Partition>().is_err());
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::row(5).transpose(), Partition::column(5));
        assert_eq!(p(&[2, 2]).transpose(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    }

    #[test]
    fn realize_examples() {
        assert_eq!(realize_belly(&belly(1, &[]), 5).unwrap(), p(&[4, 1]));
        assert_eq!(
            realize_belly(&belly(5, &[2, 2, 1, 1]), 15).unwrap(),
            p(&[4, 3, 3, 2, 2, 1])
        );
        assert_eq!(realize_belly(&belly(2, &[1]), 6).unwrap(), p(&[3, 2, 1]));
        assert_eq!(realize_belly(&belly(2, &[1]), 5).unwrap(), p(&[2, 2, 1]));
        assert_eq!(
            realize_belly(&belly(2, &[1]), 4),
            Err(PartitionError::TooSmall { n: 4, min: 5 })
        );
        assert!(BellyShape::new(1, p(&[1, 1])).is_err());
        assert!(BellyShape::new(0, Partition::empty()).is_err());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_shape(&belly(1, &[])), p(&[1]));
        assert_eq!(mu_shape(&belly(3, &[2, 1])), p(&[3, 2, 1]));
        assert_eq!(mu_shape(&belly(2, &[2])), p(&[3, 1]));
    }

    #[test]
    fn xi_examples() {
        let b = belly(5, &[2, 2, 1, 1]);
        let (shape, _) = xi_shape(&b, 8).expect("valid shape");
        assert_eq!(shape, p(&[2, 2, 1, 1, 1, 1]));
        // same answer on the n = 15 and n = 18 realizations
        assert_eq!(xi_shape_at(&b, 8, 15).unwrap().0, shape);
        assert_eq!(xi_shape_at(&b, 8, 18).unwrap().0, shape);
        assert!(xi_shape(&b, 10).is_none());
        assert!(xi_shape_at(&b, 10, 15).is_none());

        for l in 0..=5 {
            for beta in enumerate_partitions(l) {
                for k in beta.height().max(1)..=6 {
                    let b = BellyShape::new(k, beta.clone()).unwrap();
                    assert_eq!(xi_shape(&b, l), Some((beta.clone(), k + 1)));
                }
            }
        }
    }

    #[test]
    fn xi_does_not_depend_on_n() {
        for b in belly_index(4, 6) {
            for l in 0..=6 {
                let base = xi_shape(&b, l);
                let lo = b.min_n().max(b.belly().size() + b.k() + l + 1);
                for n in lo..lo + 6 {
                    assert_eq!(xi_shape_at(&b, l, n), base, "{b:?} l={l} n={n}");
                }
            }
        }
    }

    #[test]
    fn rim_hook_examples() {
        let r = enumerate_rim_hooks(&p(&[2, 1]), 3);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].remaining, Partition::empty());
        assert_eq!(r[0].height, 2);

        let r = enumerate_rim_hooks(&Partition::row(6), 6);
        assert_eq!(r.len(), 1);
        assert_eq!(
            (r[0].remaining.clone(), r[0].height),
            (Partition::empty(), 1)
        );

        // (4,3,3,2,2,1) has a single 6-cell rim hook, running from row 2 down to row 5
        let lambda = p(&[4, 3, 3, 2, 2, 1]);
        let hooks = enumerate_rim_hooks(&lambda, 6);
        assert_eq!(hooks.len(), 1);
        assert_eq!(
            (
                hooks[0].start_row,
                hooks[0].remaining.clone(),
                hooks[0].height
            ),
            (2, p(&[4, 3, 1, 1]), 4)
        );
        // the 5-cell hook spanning rows 1..4
        assert!(enumerate_rim_hooks(&lambda, 5)
            .iter()
            .any(|h| h.start_row == 1 && h.remaining == p(&[4, 2, 1, 1, 1, 1]) && h.height == 4));
    }

    #[test]
    fn rim_hooks_match_border_strip_oracle() {
        for n in 1..=9 {
            for lambda in enumerate_partitions(n) {
                for size in 1..=n {
                    let mut ours: Vec<(Vec<usize>, usize)> = enumerate_rim_hooks(&lambda, size)
                        .into_iter()
                        .map(|r| (r.remaining.parts().to_vec(), r.height))
                        .collect();
                    let mut theirs = oracle::border_strips(lambda.parts(), size);
                    ours.sort();
                    theirs.sort();
                    assert_eq!(ours, theirs, "{lambda:?} size {size}");
                }
            }
        }
    }

    #[test]
    fn standard_count_examples_and_oracle() {
        assert_eq!(standard_count(&Partition::row(7)), BigUint::one());
        assert_eq!(standard_count(&Partition::column(7)), BigUint::one());
        assert_eq!(standard_count(&p(&[3, 2])), BigUint::from(5u32));
        for n in 0..=8 {
            for lambda in enumerate_partitions(n) {
                assert_eq!(
                    standard_count(&lambda),
                    BigUint::from(oracle::count_standard_tableaux(lambda.parts())),
                    "{lambda:?}"
                );
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 0..=10 {
            let total: BigUint = enumerate_partitions(n)
                .iter()
                .map(|l| {
                    let f = standard_count(l);
                    &f * &f
                })
                .sum();
            let fact: BigUint = (1..=n as u64).map(BigUint::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn skew_examples() {
        assert_eq!(skew_standard_count(&p(&[3, 2]), 3), BigUint::one());
        assert_eq!(skew_standard_count(&p(&[3, 2]), 0), BigUint::from(5u32));
        assert_eq!(skew_standard_count(&p(&[2, 2]), 1), BigUint::from(2u32));
    }

    #[test]
    fn kostka_hook_examples_and_oracle() {
        for m in 0..6 {
            assert_eq!(kostka_hook(&Partition::row(6), m), BigUint::one());
        }
        assert_eq!(kostka_hook(&Partition::column(6), 5), BigUint::one());
        assert_eq!(kostka_hook(&p(&[4, 1]), 2), BigUint::from(2u32));
        for n in 1..=8 {
            for lambda in enumerate_partitions(n) {
                for m in 0..n {
                    let content: Vec<usize> = Partition::hook(n, m).parts().to_vec();
                    assert_eq!(
                        kostka_hook(&lambda, m),
                        BigUint::from(oracle::kostka(lambda.parts(), &content)),
                        "{lambda:?} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_belly_examples() {
        assert_eq!(
            kostka_belly(&belly(1, &[]), 2, 5).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(kostka_hook(&p(&[4, 1]), 2), BigUint::from(2u32));
        assert_eq!(
            kostka_belly(&belly(3, &[]), 4, 9).unwrap(),
            BigUint::from(4u32)
        );
        // mu_{1,(1)} = (2), so the count is binom(4,2) = 6
        assert_eq!(
            kostka_belly(&belly(1, &[1]), 4, 9).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(oracle::kostka_enumerate(&[7, 2], &[5, 1, 1, 1, 1]), 6);
        assert_eq!(
            kostka_belly(&belly(2, &[1]), 4, 9).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            kostka_belly(&belly(1, &[3]), 5, 8),
            Err(PartitionError::KostkaRange { m: 5, n: 8 })
        );
    }

    #[test]
    fn belly_index_counts() {
        assert_eq!(belly_index(2, 29).len(), 115);
        assert_eq!(belly_index(0, 3).len(), 3);
        let idx = belly_index(2, 3);
        let first: Vec<String> = idx.iter().take(7).map(|b| format!("{b:?}")).collect();
        assert_eq!(first[0], "b[k=1;()]");
        assert_eq!(first[3], "b[k=1;(1)]");
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..9, 0..9).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn transpose_is_involution(lambda in arb_partition()) {
            prop_assert_eq!(lambda.transpose().transpose(), lambda.clone());
            prop_assert_eq!(lambda.transpose().size(), lambda.size());
        }

        #[test]
        fn belly_transpose_remark(beta in proptest::collection::vec(1usize..4, 0..4), k in 0usize..5, extra in 0usize..6) {
            let beta = Partition::from_unsorted(beta);
            let k = k.max(beta.height()).max(1);
            let b = BellyShape::new(k, beta.clone()).unwrap();
            let n = b.min_n() + extra;
            let shape = realize_belly(&b, n).unwrap();
            // the transposed shape has leg n - |beta| - k - 1 and belly beta^T
            let leg = n - beta.size() - k - 1;
            if let Ok(t) = BellyShape::new(leg, beta.transpose()) {
                if n >= t.min_n() {
                    prop_assert_eq!(shape.transpose(), realize_belly(&t, n).unwrap());
                }
            }
        }
    }
}
