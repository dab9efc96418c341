use std::fmt;

use super::BirkhoffError;
use crate::partitions::Partition;

/// A permutation of `{0, .., n-1}`; position `i` holds the image of `i`.
///
/// Products follow `(σ τ)(i) = σ(τ(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, BirkhoffError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(BirkhoffError::NotAPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, each listing `a -> b -> .. -> a`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, BirkhoffError> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(BirkhoffError::NotAPermutation(cycle.to_vec()));
                }
                images[a] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other⁻¹` without materialising the inverse.
    pub fn quotient(&self, other: &Permutation) -> Permutation {
        let mut q = vec![0; self.n()];
        for (i, &x) in other.images.iter().enumerate() {
            q[x] = self.images[i];
        }
        Permutation { images: q }
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Partition::from_unsorted(lengths)
    }

    pub fn sign(&self) -> i8 {
        if (self.n() - self.cycle_type().height()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Exactly one cycle of length at least two.
    pub fn is_single_cycle(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut nontrivial = 0;
        for start in 0..self.n() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            nontrivial += 1;
            if nontrivial > 1 {
                return false;
            }
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        nontrivial == 1
    }

    /// Extends by fixing the points `n..m`.
    pub fn extend(&self, m: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.n()..m);
        Permutation { images }
    }

    /// Restriction to `{0, .., m-1}`, which must be invariant.
    pub fn restrict(&self, m: usize) -> Option<Permutation> {
        let images = self.images[..m].to_vec();
        images
            .iter()
            .all(|&x| x < m)
            .then_some(Permutation { images })
    }

    /// Position in the lexicographic order of `S_n`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut used = vec![false; n];
        let mut rank = 0;
        for (i, &x) in self.images.iter().enumerate() {
            let smaller = (0..x).filter(|&y| !used[y]).count();
            rank = rank * (n - i) + smaller;
            used[x] = true;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        Permutation {
            images: digits.into_iter().map(|d| pool.remove(d)).collect(),
        }
    }
}

/// 1-based images separated by spaces.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        f.write_str(&text.join(" "))
    }
}

/// Advances `a` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation { images: a.clone() }];
    while next_permutation(&mut a) {
        out.push(Permutation { images: a.clone() });
    }
    out
}
