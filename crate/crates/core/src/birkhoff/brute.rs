use super::perm::{all_permutations, Permutation};
use super::set::PermSet;
use super::BirkhoffError;

pub const BRUTE_LIMIT: usize = 6;

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Maximum clique search with greedy-coloring bounds.
struct CliqueSearch {
    adj: Vec<Bits>,
}

impl CliqueSearch {
    /// Greedy coloring of `p`: vertices in color order, with the color count so far.
    fn color_order(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut uncolored = p.clone();
        let mut order = Vec::with_capacity(p.count());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.clear(v);
                q = q.and_not(&self.adj[v]);
                uncolored.clear(v);
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&self, r: &mut Vec<usize>, mut p: Bits, best: &mut Vec<usize>) {
        let order = self.color_order(&p);
        for &(v, bound) in order.iter().rev() {
            if r.len() + bound <= best.len() {
                return;
            }
            r.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if r.len() > best.len() {
                    *best = r.clone();
                }
            } else {
                self.expand(r, next, best);
            }
            r.pop();
            p.clear(v);
        }
    }

    fn greedy(&self, all: &Bits) -> Vec<usize> {
        let mut clique = Vec::new();
        let mut p = all.clone();
        while let Some(v) = p.first() {
            clique.push(v);
            p = p.and(&self.adj[v]);
        }
        clique
    }
}

/// Exact independence number of `B_n` with a maximum independent set.
///
/// The graph is vertex-transitive, so the set is taken to contain the
/// identity; the rest is a maximum clique in the non-adjacency graph on
/// permutations that are neither the identity nor a single cycle.
pub fn brute_alpha(n: usize) -> Result<(usize, PermSet), BirkhoffError> {
    if n == 0 || n > BRUTE_LIMIT {
        return Err(BirkhoffError::TooLarge {
            n,
            max: BRUTE_LIMIT,
        });
    }
    let id = Permutation::identity(n);
    let cand: Vec<Permutation> = all_permutations(n)
        .into_iter()
        .filter(|p| *p != id && !p.is_single_cycle())
        .collect();
    let m = cand.len();
    let mut adj = vec![Bits::empty(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if !cand[i].quotient(&cand[j]).is_single_cycle() {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    let search = CliqueSearch { adj };
    let mut all = Bits::empty(m);
    (0..m).for_each(|i| all.set(i));
    let mut best = search.greedy(&all);
    search.expand(&mut Vec::new(), all, &mut best);
    let mut elements = vec![id];
    elements.extend(best.into_iter().map(|i| cand[i].clone()));
    let set = PermSet::from_unsorted(n, elements)?;
    Ok((set.len(), set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::construct::verify_independent;

    #[test]
    fn small_values() {
        assert_eq!(brute_alpha(1).unwrap().0, 1);
        assert_eq!(brute_alpha(2).unwrap().0, 1);
        assert_eq!(brute_alpha(3).unwrap().0, 1);
        let (a, w) = brute_alpha(4).unwrap();
        assert_eq!(a, 4);
        assert!(verify_independent(&w));
        assert!(brute_alpha(7).is_err());
    }
}
