use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::perm::Permutation;
use super::set::PermSet;
use super::BirkhoffError;
use crate::exactq::{rational_pow, Rational};

/// A pair of ordered `k`-tuples `(I, J)`; the event is `π(J) = I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub image: Vec<usize>,
    pub source: Vec<usize>,
}

fn falling(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i))
}

/// All ordered `k`-tuples of distinct points of `{0, .., n-1}`, lexicographically.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        n,
        k,
        &mut Vec::with_capacity(k),
        &mut vec![false; n],
        &mut out,
    );
    out
}

/// The most frequent event `π(J) = I` over `π ∈ A`, if its frequency reaches
/// `r / (n)_k`; `None` means `A` is `(k, r)`-pseudorandom. Ties go to the
/// lexicographically smallest `(I, J)`.
pub fn pseudorandom_witness(
    a: &PermSet,
    k: usize,
    r: &Rational,
) -> Result<Option<Witness>, BirkhoffError> {
    a.require_nonempty()?;
    let n = a.n();
    if k == 0 || k > n {
        return Err(BirkhoffError::Range(format!("k = {k} must lie in 1..={n}")));
    }
    let best = tuples(n, k)
        .into_par_iter()
        .filter_map(|source| {
            let mut hits: HashMap<Vec<usize>, usize> = HashMap::new();
            for p in a.elements() {
                *hits
                    .entry(source.iter().map(|&j| p.apply(j)).collect())
                    .or_insert(0) += 1;
            }
            hits.into_iter()
                .map(|(image, count)| {
                    (
                        count,
                        Witness {
                            image,
                            source: source.clone(),
                        },
                    )
                })
                .min_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)))
        })
        .min_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
    let Some((count, w)) = best else {
        return Ok(None);
    };
    // count / |A| >= r / (n)_k
    let lhs = Rational::from_integer(BigInt::from(count) * falling(n, k));
    let rhs = r * Rational::from_integer(BigInt::from(a.len()));
    Ok((lhs >= rhs).then_some(w))
}

/// The smaller, denser set obtained from a violated event: keep
/// `B′ = {π ∈ A : π(J) = I}`, move `J` and `I` to the last `k` points by
/// `B = σ B′ σ′`, and restrict to the first `n - k` points.
pub fn density_increment_step(
    a: &PermSet,
    k: usize,
    r: &Rational,
    w: &Witness,
) -> Result<PermSet, BirkhoffError> {
    a.require_nonempty()?;
    let n = a.n();
    let valid_tuple = |t: &[usize]| {
        t.len() == k && t.iter().all(|&x| x < n) && {
            let mut s = t.to_vec();
            s.sort_unstable();
            s.windows(2).all(|p| p[0] != p[1])
        }
    };
    if k == 0 || !valid_tuple(&w.image) || !valid_tuple(&w.source) {
        return Err(BirkhoffError::InvalidWitness(
            "tuples must hold k distinct points".into(),
        ));
    }
    let kept: Vec<&Permutation> = a
        .elements()
        .iter()
        .filter(|p| {
            w.source
                .iter()
                .zip(&w.image)
                .all(|(&j, &i)| p.apply(j) == i)
        })
        .collect();
    let lhs = Rational::from_integer(BigInt::from(kept.len()) * falling(n, k));
    if lhs < r * Rational::from_integer(BigInt::from(a.len())) {
        return Err(BirkhoffError::InvalidWitness(format!(
            "event holds for {} of {} permutations, below r/(n)_k",
            kept.len(),
            a.len()
        )));
    }
    // σ′ sends n-k+t to J_t and the first n-k points increasingly onto the rest
    let rest = |t: &[usize]| (0..n).filter(|x| !t.contains(x)).collect::<Vec<_>>();
    let mut sigma_prime: Vec<usize> = rest(&w.source);
    sigma_prime.extend(&w.source);
    // σ sends I_t to n-k+t and the rest increasingly onto the first n-k points
    let mut sigma = vec![0; n];
    for (pos, x) in rest(&w.image)
        .into_iter()
        .chain(w.image.iter().copied())
        .enumerate()
    {
        sigma[x] = pos;
    }
    let sigma = Permutation::new(sigma)?;
    let sigma_prime = Permutation::new(sigma_prime)?;
    let c = kept
        .into_iter()
        .map(|p| {
            sigma
                .compose(p)
                .compose(&sigma_prime)
                .restrict(n - k)
                .expect("last k points are fixed")
        })
        .collect();
    PermSet::from_unsorted(n - k, c)
}

/// Repeats [`density_increment_step`] with the smallest even `k` that admits a
/// `(k, c0^k)` violation until none does. Returns the final set and the `k` used at each step.
pub fn full_density_increment(
    a: &PermSet,
    c0: &Rational,
) -> Result<(PermSet, Vec<usize>), BirkhoffError> {
    a.require_nonempty()?;
    let mut cur = a.clone();
    let mut steps = Vec::new();
    'outer: loop {
        for k in (2..=cur.n()).step_by(2) {
            let r = rational_pow(c0, k as u32);
            if let Some(w) = pseudorandom_witness(&cur, k, &r)? {
                cur = density_increment_step(&cur, k, &r, &w)?;
                steps.push(k);
                continue 'outer;
            }
        }
        return Ok((cur, steps));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::classfn::count_edges;
    use crate::birkhoff::perm::all_permutations;
    use crate::exactq::{int, ratio};

    fn stabilizer(n: usize) -> PermSet {
        PermSet::new(
            n,
            all_permutations(n)
                .into_iter()
                .filter(|p| p.apply(0) == 0)
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn witness_examples() {
        let s4 = PermSet::symmetric_group(4);
        for k in 1..=4 {
            assert_eq!(
                pseudorandom_witness(&s4, k, &ratio(101, 100)).unwrap(),
                None
            );
        }
        let id = PermSet::singleton(Permutation::identity(4));
        let w = pseudorandom_witness(&id, 1, &int(1)).unwrap().unwrap();
        assert_eq!((w.image, w.source), (vec![0], vec![0]));
        let w = pseudorandom_witness(&stabilizer(4), 1, &int(2))
            .unwrap()
            .unwrap();
        assert_eq!((w.image, w.source), (vec![0], vec![0]));
        assert!(pseudorandom_witness(&s4, 5, &int(2)).is_err());
    }

    #[test]
    fn step_on_stabilizer() {
        let a = stabilizer(4);
        let w = Witness {
            image: vec![0],
            source: vec![0],
        };
        let c = density_increment_step(&a, 1, &int(4), &w).unwrap();
        assert_eq!(c, PermSet::symmetric_group(3));
        assert_eq!(a.density(), ratio(1, 4));
        assert_eq!(c.density(), int(1));
        assert!(count_edges(&c) <= count_edges(&a));
        assert!(density_increment_step(&a, 1, &int(5), &w).is_err());
        let bogus = Witness {
            image: vec![0, 0],
            source: vec![1, 2],
        };
        assert!(density_increment_step(&a, 2, &int(1), &bogus).is_err());
    }

    #[test]
    fn full_increment_examples() {
        let s5 = PermSet::symmetric_group(5);
        let (b, steps) = full_density_increment(&s5, &ratio(3, 2)).unwrap();
        assert_eq!((b, steps.len()), (s5, 0));

        let id = PermSet::singleton(Permutation::identity(5));
        let (b, steps) = full_density_increment(&id, &ratio(3, 2)).unwrap();
        assert!([1, 3].contains(&b.n()));
        assert_eq!(b.len(), 1);
        assert!(steps.iter().all(|k| k % 2 == 0));
    }
}
