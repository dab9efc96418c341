//! Slow, obviously-correct reference implementations.
//!
//! Nothing here shares code with `birkhoff-core`; every routine is written the
//! naive way so it can serve as an independent oracle in tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Number of partitions of `n` by Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for j in 1.. {
            let j = j as i64;
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// Counts standard tableaux by placing `1, 2, ..., n` one at a time in every addable cell.
pub fn count_standard_tableaux(shape: &[usize]) -> u64 {
    fn go(shape: &[usize], filled: &mut Vec<usize>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let fits_row = filled[r] < shape[r];
            let above_ok = r == 0 || filled[r - 1] > filled[r];
            if fits_row && above_ok {
                filled[r] += 1;
                total += go(shape, filled, left - 1);
                filled[r] -= 1;
            }
        }
        total
    }
    let n = shape.iter().sum();
    go(shape, &mut vec![0; shape.len()], n)
}

/// Kostka number by explicit backtracking over every semistandard filling.
///
/// Exponential; use for small shapes only.
pub fn kostka_enumerate(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    if cells.len() != content.iter().sum::<usize>() {
        return 0;
    }
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut left = content.to_vec();
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
    ) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += go(i + 1, cells, grid, left);
            left[v] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

/// Kostka number by growing the shape one letter at a time: the cells holding
/// letter `i` always form a horizontal strip of size `content[i]`.
pub fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    fn strips(inner: &[usize], outer: &[usize], size: usize) -> Vec<Vec<usize>> {
        // every nu with inner <= nu <= outer, nu/inner a horizontal strip of `size`
        let mut out = Vec::new();
        fn rec(
            r: usize,
            inner: &[usize],
            outer: &[usize],
            left: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if r == outer.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let lo = inner.get(r).copied().unwrap_or(0);
            // horizontal strip: new row length at most the old length of the row above
            let cap_above = if r == 0 { usize::MAX } else { inner[r - 1] };
            let hi = outer[r].min(cap_above).min(lo + left);
            for v in lo..=hi.max(lo) {
                if v > hi {
                    break;
                }
                cur.push(v);
                rec(r + 1, inner, outer, left - (v - lo), cur, out);
                cur.pop();
            }
        }
        let mut padded = inner.to_vec();
        padded.resize(outer.len(), 0);
        rec(0, &padded, outer, size, &mut Vec::new(), &mut out);
        out
    }
    fn go(
        i: usize,
        cur: Vec<usize>,
        shape: &[usize],
        content: &[usize],
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        if i == content.len() {
            return u64::from(cur.as_slice() == shape);
        }
        if let Some(&v) = memo.get(&(i, cur.clone())) {
            return v;
        }
        let mut total = 0;
        for next in strips(&cur, shape, content[i]) {
            total += go(i + 1, next, shape, content, memo);
        }
        memo.insert((i, cur), total);
        total
    }
    if shape.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return 0;
    }
    go(0, vec![0; shape.len()], shape, content, &mut HashMap::new())
}

/// Every border strip of the given size, found by testing each sub-diagram
/// `nu` for a connected skew shape `lambda / nu` with no 2x2 block.
///
/// Returns `(nu, rows spanned)` pairs; `nu` has trailing zeros removed.
pub fn border_strips(lambda: &[usize], size: usize) -> Vec<(Vec<usize>, usize)> {
    let n: usize = lambda.iter().sum();
    if size == 0 || size > n {
        return Vec::new();
    }
    let mut subs = Vec::new();
    fn rec(r: usize, lambda: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == lambda.len() {
            out.push(cur.clone());
            return;
        }
        let cap = if r == 0 {
            lambda[0]
        } else {
            cur[r - 1].min(lambda[r])
        };
        for v in 0..=cap {
            cur.push(v);
            rec(r + 1, lambda, cur, out);
            cur.pop();
        }
    }
    rec(0, lambda, &mut Vec::new(), &mut subs);
    let mut out = Vec::new();
    for nu in subs {
        if n - nu.iter().sum::<usize>() != size {
            continue;
        }
        let cells: Vec<(usize, usize)> = (0..lambda.len())
            .flat_map(|r| (nu[r]..lambda[r]).map(move |c| (r, c)))
            .collect();
        let has = |r: usize, c: usize| r < lambda.len() && c >= nu[r] && c < lambda[r];
        let square = cells
            .iter()
            .any(|&(r, c)| has(r + 1, c) && has(r, c + 1) && has(r + 1, c + 1));
        if square {
            continue;
        }
        // connectivity by flood fill over edge-adjacent cells
        let mut seen = vec![cells[0]];
        let mut stack = vec![cells[0]];
        while let Some((r, c)) = stack.pop() {
            let mut nbrs = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                nbrs.push((r - 1, c));
            }
            if c > 0 {
                nbrs.push((r, c - 1));
            }
            for (a, b) in nbrs {
                if has(a, b) && !seen.contains(&(a, b)) {
                    seen.push((a, b));
                    stack.push((a, b));
                }
            }
        }
        if seen.len() != cells.len() {
            continue;
        }
        let rows = (0..lambda.len()).filter(|&r| nu[r] < lambda[r]).count();
        let mut nu = nu;
        while nu.last() == Some(&0) {
            nu.pop();
        }
        out.push((nu, rows));
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Cycle lengths of a permutation, sorted descending, fixed points included.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `p * q^{-1}` with the convention `(pq)(i) = p(q(i))`.
pub fn times_inverse(p: &[usize], q: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for i in 0..p.len() {
        out[q[i]] = p[i];
    }
    out
}

/// Ordered pairs `(a, b)` in `set` whose quotient `a b^{-1}` is an `(n - l)`-cycle.
pub fn count_cycle_pairs(set: &[Vec<usize>], l: usize) -> u64 {
    let Some(n) = set.first().map(Vec::len) else {
        return 0;
    };
    let mut target = vec![n - l];
    target.extend(std::iter::repeat_n(1, l));
    target.sort_unstable_by(|a, b| b.cmp(a));
    let mut count = 0;
    for a in set {
        for b in set {
            if cycle_type(&times_inverse(a, b)) == target {
                count += 1;
            }
        }
    }
    count
}

/// True when no two members differ by a single cycle.
pub fn is_independent(set: &[Vec<usize>]) -> bool {
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            let t = cycle_type(&times_inverse(a, b));
            if t.iter().filter(|&&c| c >= 2).count() == 1 {
                return false;
            }
        }
    }
    true
}

/// Largest independent set of the Birkhoff graph on `S_n` by include/exclude
/// branching over the vertices still compatible with the current choice, with
/// the identity (vertex 0) always included since the graph is
/// vertex-transitive. Feasible up to `n = 5`.
pub fn max_independent_size(n: usize) -> usize {
    fn single_cycle(p: &[usize]) -> bool {
        cycle_type(p).iter().filter(|&&c| c >= 2).count() == 1
    }
    fn go(adjacent: &[Vec<bool>], size: usize, cand: &[usize], best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some((&v, rest)) = cand.split_first() else {
            *best = size;
            return;
        };
        let with: Vec<usize> = rest.iter().copied().filter(|&u| !adjacent[v][u]).collect();
        go(adjacent, size + 1, &with, best);
        go(adjacent, size, rest, best);
    }
    let verts = permutations(n);
    let adjacent: Vec<Vec<bool>> = verts
        .iter()
        .map(|a| {
            verts
                .iter()
                .map(|b| single_cycle(&times_inverse(a, b)))
                .collect()
        })
        .collect();
    let cand: Vec<usize> = (1..verts.len()).filter(|&u| !adjacent[0][u]).collect();
    let mut best = 0;
    go(&adjacent, 1, &cand, &mut best);
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

/// A small LP over nonnegative variables: optimize `objective · x` subject to `rows`.
#[derive(Debug, Clone)]
pub struct SmallLp {
    pub maximize: bool,
    pub objective: Vec<BigRational>,
    pub rows: Vec<(Vec<BigRational>, Rel, BigRational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Optimal(BigRational),
    Infeasible,
    Unbounded,
}

/// Solves a square system by Gauss-Jordan elimination; `None` when singular.
fn solve_square(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// One-dimensional null space of an `(n-1) x n` matrix, if its rank is `n - 1`.
fn null_direction(rows: &[Vec<BigRational>], n: usize) -> Option<Vec<BigRational>> {
    // fix each coordinate to 1 in turn and solve for the rest
    for free in 0..n {
        let a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                (0..n)
                    .filter(|&j| j != free)
                    .map(|j| r[j].clone())
                    .collect()
            })
            .collect();
        let b: Vec<BigRational> = rows.iter().map(|r| -r[free].clone()).collect();
        if let Some(sol) = solve_square(a, b) {
            let mut d = Vec::with_capacity(n);
            let mut it = sol.into_iter();
            for j in 0..n {
                d.push(if j == free {
                    BigRational::one()
                } else {
                    it.next().unwrap()
                });
            }
            return Some(d);
        }
    }
    None
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn satisfies(rel: Rel, lhs: &BigRational, rhs: &BigRational) -> bool {
    match rel {
        Rel::Le => lhs <= rhs,
        Rel::Eq => lhs == rhs,
        Rel::Ge => lhs >= rhs,
    }
}

/// Solves a small LP by listing every vertex and every extreme ray.
///
/// The feasible region lies in the nonnegative orthant, so it is pointed:
/// it is nonempty iff it has a vertex, and the objective is unbounded iff
/// some extreme ray improves it.
pub fn solve_by_vertices(lp: &SmallLp) -> Outcome {
    let n = lp.objective.len();
    let mut all: Vec<(Vec<BigRational>, Rel, BigRational)> = lp.rows.clone();
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        all.push((e, Rel::Ge, BigRational::zero()));
    }
    let feasible = |x: &[BigRational]| all.iter().all(|(a, rel, b)| satisfies(*rel, &dot(a, x), b));

    let mut best: Option<BigRational> = None;
    for subset in combinations(all.len(), n) {
        let a = subset.iter().map(|&i| all[i].0.clone()).collect();
        let b = subset.iter().map(|&i| all[i].2.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if feasible(&x) {
                let v = dot(&lp.objective, &x);
                let better = match &best {
                    None => true,
                    Some(cur) => (lp.maximize && v > *cur) || (!lp.maximize && v < *cur),
                };
                if better {
                    best = Some(v);
                }
            }
        }
    }
    let Some(best) = best else {
        return Outcome::Infeasible;
    };

    let in_cone = |d: &[BigRational]| {
        all.iter()
            .all(|(a, rel, _)| satisfies(*rel, &dot(a, d), &BigRational::zero()))
    };
    if n >= 1 {
        for subset in combinations(all.len(), n - 1) {
            let rows: Vec<Vec<BigRational>> = subset.iter().map(|&i| all[i].0.clone()).collect();
            if let Some(d) = null_direction(&rows, n) {
                // the tight set must have full rank n-1 for d to be extreme; checking
                // both signs of any cone direction is enough for the unboundedness test
                for dir in [d.clone(), d.iter().map(|v| -v).collect::<Vec<_>>()] {
                    if in_cone(&dir) && dir.iter().any(|v| !v.is_zero()) {
                        let gain = dot(&lp.objective, &dir);
                        if (lp.maximize && gain.is_positive())
                            || (!lp.maximize && gain.is_negative())
                        {
                            return Outcome::Unbounded;
                        }
                    }
                }
            }
        }
    }
    Outcome::Optimal(best)
}

/// A random LP with 1..=5 variables and 0..=8 rows; entries are small
/// fractions with denominators up to 3.
pub fn random_small_lp(rng: &mut impl Rng) -> SmallLp {
    fn frac(rng: &mut impl Rng, lo: i64, hi: i64) -> BigRational {
        q(rng.gen_range(lo..=hi), rng.gen_range(1..=3))
    }
    let nv = rng.gen_range(1..=5);
    let nc = rng.gen_range(0..=8);
    let objective = (0..nv).map(|_| frac(rng, -5, 5)).collect();
    let rows = (0..nc)
        .map(|_| {
            let a = (0..nv).map(|_| frac(rng, -4, 4)).collect();
            let rel = [Rel::Le, Rel::Le, Rel::Ge, Rel::Eq][rng.gen_range(0..4)];
            (a, rel, frac(rng, -3, 8))
        })
        .collect();
    SmallLp {
        maximize: rng.gen_bool(0.5),
        objective,
        rows,
    }
}

pub fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}
