use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::perm::{all_permutations, Permutation};
use super::set::{Coloring, PermSet};
use super::BirkhoffError;
use crate::exactq::{binomial, factorial, int, Rational};

/// Largest `n` for which a coloring of all of `S_n` is materialised.
pub const COLORING_LIMIT: usize = 10;
/// Largest `n` for which an independent set is materialised.
pub const INDEPENDENT_LIMIT: usize = 12;

fn require_pow2(n: usize, improved: bool) -> Result<(), BirkhoffError> {
    if n == 0 {
        return Err(BirkhoffError::Range("n must be positive".into()));
    }
    if improved && !n.is_power_of_two() {
        return Err(BirkhoffError::Range(format!(
            "the improved construction needs a power of two, got {n}"
        )));
    }
    Ok(())
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Lexicographic rank of the sorted subset `s` among `|s|`-subsets of `{0, .., n-1}`.
fn subset_rank(s: &[usize], n: usize) -> u64 {
    let k = s.len();
    let mut rank = 0;
    let mut next = 0;
    for (i, &x) in s.iter().enumerate() {
        for v in next..x {
            rank += binom(n - v - 1, k - i - 1);
        }
        next = x + 1;
    }
    rank
}

/// Lexicographically least `t` with `t({0, .., a-1}) = s`: increasing on both blocks.
fn coset_rep(s: &[usize], n: usize) -> Permutation {
    let mut images = s.to_vec();
    images.extend((0..n).filter(|x| !s.contains(x)));
    Permutation::new(images).expect("a subset and its complement")
}

/// `γ = ∏ (i, n/2 + i)`.
fn gamma(n: usize) -> Permutation {
    let h = n / 2;
    Permutation::new((0..n).map(|i| if i < h { i + h } else { i - h }).collect()).unwrap()
}

/// Places `first` on `{0, .., f-1}` and `second` on `{f, .., n-1}`.
fn direct_product(first: &Permutation, second: &Permutation) -> Permutation {
    let f = first.n();
    let mut images = first.images().to_vec();
    images.extend(second.images().iter().map(|&x| x + f));
    Permutation::new(images).unwrap()
}

/// For `h` fixing the block `{0, .., a-1}`, the product `ĥ_A ĥ_B` in `S_a`,
/// with the second block shifted down onto `{0, .., n-a-1}`.
fn fold_blocks(h: &Permutation, a: usize) -> Permutation {
    let first = Permutation::new(h.images()[..a].to_vec()).expect("block is invariant");
    let second = Permutation::new(h.images()[a..].iter().map(|&x| x - a).collect())
        .expect("block is invariant");
    first.compose(&second.extend(a))
}

fn independent_basic(n: usize) -> Vec<Permutation> {
    if n <= 1 {
        return vec![Permutation::identity(n)];
    }
    let (f, c) = (n / 2, n - n / 2);
    let inner: Vec<Permutation> = independent_basic(f).iter().map(|t| t.extend(c)).collect();
    let mut out = Vec::new();
    for sigma in all_permutations(f) {
        let back = sigma.extend(c).inverse();
        out.extend(
            inner
                .iter()
                .map(|tau| direct_product(&sigma, &back.compose(tau))),
        );
    }
    out
}

fn independent_improved(n: usize) -> Vec<Permutation> {
    if n <= 2 {
        return vec![Permutation::identity(n)];
    }
    let h = n / 2;
    let inner = independent_improved(h);
    let g = gamma(n);
    let mut out = Vec::new();
    for sigma in all_permutations(h) {
        let back = sigma.inverse();
        for tau in &inner {
            let p = direct_product(&sigma, &back.compose(tau));
            out.push(g.compose(&p));
            out.push(p);
        }
    }
    out
}

/// The recursive product independent set of `B_n`.
///
/// The basic variant pairs `σ ∈ S_{⌊n/2⌋}` on the first block with `σ⁻¹ τ` on
/// the second, `τ` ranging over the construction for `⌊n/2⌋` padded with
/// fixed points. The improved variant (powers of two) uses equal blocks, keeps
/// every element even, and adds the translate by `γ = ∏ (i, n/2 + i)`.
pub fn construct_independent(n: usize, improved: bool) -> Result<PermSet, BirkhoffError> {
    require_pow2(n, improved)?;
    if n > INDEPENDENT_LIMIT {
        return Err(BirkhoffError::TooLarge {
            n,
            max: INDEPENDENT_LIMIT,
        });
    }
    let elements = if improved {
        independent_improved(n)
    } else {
        independent_basic(n)
    };
    PermSet::from_unsorted(n, elements)
}

/// Size of [`construct_independent`] without building it.
pub fn independent_size(n: usize, improved: bool) -> Result<BigUint, BirkhoffError> {
    require_pow2(n, improved)?;
    fn go(n: usize, improved: bool) -> BigUint {
        match (improved, n) {
            (false, 0..=1) | (true, 0..=2) => BigUint::from(1u32),
            (false, _) => factorial((n / 2) as u64).to_biguint().unwrap() * go(n / 2, false),
            (true, _) => {
                BigUint::from(2u32)
                    * factorial((n / 2) as u64).to_biguint().unwrap()
                    * go(n / 2, true)
            }
        }
    }
    Ok(go(n, improved))
}

fn palette_basic(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    let a = n.div_ceil(2);
    binom(n, a) * palette_basic(a)
}

fn palette_improved(n: usize) -> u64 {
    match n {
        0 | 1 => 1,
        2 => 2,
        _ => binom(n, n / 2) / 2 * palette_improved(n / 2),
    }
}

/// Palette size of [`construct_coloring`] without building it.
pub fn coloring_palette(n: usize, improved: bool) -> Result<u64, BirkhoffError> {
    require_pow2(n, improved)?;
    Ok(if improved {
        palette_improved(n)
    } else {
        palette_basic(n)
    })
}

/// `Π_{i=1}^{⌊log₂ n⌋} ⌊n/2^i⌋!`, or `(n/2) Π_{i=1}^{log₂ n - 1} (2^i)!` for the
/// improved variant. Evaluated directly from the product, so at `n = 1` the
/// improved form gives `1/2` while the construction has one element.
pub fn closed_form_size(n: usize, improved: bool) -> Result<Rational, BirkhoffError> {
    require_pow2(n, improved)?;
    let log = n.ilog2();
    Ok(if improved {
        (1..log).fold(Rational::new(n.into(), 2.into()), |acc, i| {
            acc * int(factorial(1 << i))
        })
    } else {
        (1..=log).fold(int(1), |acc, i| acc * int(factorial((n >> i) as u64)))
    })
}

/// `Π_{i=0}^{⌈log₂ n⌉} C(⌈n/2^i⌉, ⌈n/2^{i+1}⌉)`, or `(2/n) Π_{i=1}^{log₂ n} C(2^i, 2^{i-1})`
/// for the improved variant.
pub fn closed_form_palette(n: usize, improved: bool) -> Result<Rational, BirkhoffError> {
    require_pow2(n, improved)?;
    let ceil_div = |i: u32| n.div_ceil(1 << i) as u64;
    Ok(if improved {
        let log = n.ilog2();
        (1..=log).fold(Rational::new(2.into(), n.into()), |acc, i| {
            acc * int(binomial(1 << i, 1 << (i - 1)))
        })
    } else {
        let log = n.next_power_of_two().ilog2();
        (0..=log).fold(int(1), |acc, i| {
            acc * int(binomial(ceil_div(i), ceil_div(i + 1)))
        })
    })
}

fn sorted_block(p: &Permutation, a: usize) -> Vec<usize> {
    let mut s = p.images()[..a].to_vec();
    s.sort_unstable();
    s
}

/// Color of `p`: the coset of `S_A × S_B` (`A` the first `⌈n/2⌉` points)
/// holding `p`, then recursively the color of `ĥ_A ĥ_B`.
fn color_basic(p: &Permutation) -> u64 {
    let n = p.n();
    if n <= 1 {
        return 0;
    }
    let a = n.div_ceil(2);
    let s = sorted_block(p, a);
    let h = coset_rep(&s, n).inverse().compose(p);
    subset_rank(&s, n) * palette_basic(a) + color_basic(&fold_blocks(&h, a))
}

/// As [`color_basic`] with equal blocks, but cosets `uH` and `uγH` share a
/// color. Within each pair the lexicographically least representative is the
/// one whose first block contains `0`.
fn color_improved(p: &Permutation) -> u64 {
    let n = p.n();
    match n {
        0 | 1 => return 0,
        2 => return p.rank() as u64,
        _ => {}
    }
    let half = n / 2;
    let s = sorted_block(p, half);
    let (t, h) = if s[0] == 0 {
        let h = coset_rep(&s, n).inverse().compose(p);
        (s, h)
    } else {
        let t: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
        let h = gamma(n).compose(&coset_rep(&t, n).inverse()).compose(p);
        (t, h)
    };
    let rest: Vec<usize> = t[1..].iter().map(|x| x - 1).collect();
    subset_rank(&rest, n - 1) * palette_improved(half) + color_improved(&fold_blocks(&h, half))
}

/// The recursive coset coloring of `B_n`; the improved variant respects signs.
pub fn construct_coloring(n: usize, improved: bool) -> Result<Coloring, BirkhoffError> {
    require_pow2(n, improved)?;
    if n > COLORING_LIMIT {
        return Err(BirkhoffError::TooLarge {
            n,
            max: COLORING_LIMIT,
        });
    }
    let colors = all_permutations(n)
        .par_iter()
        .map(|p| {
            if improved {
                color_improved(p)
            } else {
                color_basic(p)
            }
        })
        .collect();
    Coloring::new(n, colors)
}

/// Exhaustive check that no two elements of `A` are adjacent.
pub fn verify_independent(a: &PermSet) -> bool {
    let xs = a.elements();
    xs.par_iter()
        .enumerate()
        .all(|(i, p)| xs[i + 1..].iter().all(|q| !p.quotient(q).is_single_cycle()))
}

/// Checks that every color class is independent and, when `signs` is set, sign-homogeneous.
pub fn verify_coloring(f: &Coloring, signs: bool) -> bool {
    let mut classes: HashMap<u64, Vec<Permutation>> = HashMap::new();
    for (r, &c) in f.colors().iter().enumerate() {
        classes
            .entry(c)
            .or_default()
            .push(Permutation::unrank(f.n(), r));
    }
    classes.par_iter().all(|(_, class)| {
        let set = PermSet::new(f.n(), class.clone()).expect("distinct ranks");
        verify_independent(&set) && (!signs || set.is_sign_homogeneous())
    })
}
