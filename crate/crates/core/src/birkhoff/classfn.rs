use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::perm::Permutation;
use super::set::PermSet;
use super::BirkhoffError;
use crate::characters::{cycle_class_size, mn_character};
use crate::exactq::{factorial, int, Rational};
use crate::lp::LinearProgram;
use crate::partitions::{enumerate_partitions, Partition};

/// Whether `σ τ⁻¹` is a single cycle.
pub fn is_birkhoff_edge(sigma: &Permutation, tau: &Permutation) -> Result<bool, BirkhoffError> {
    if sigma.n() != tau.n() {
        return Err(BirkhoffError::GroundSetMismatch {
            expected: sigma.n(),
            got: tau.n(),
        });
    }
    Ok(sigma.quotient(tau).is_single_cycle())
}

fn is_cycle_of_length(q: &Permutation, len: usize) -> bool {
    let moved = (0..q.n()).filter(|&i| q.apply(i) != i).count();
    moved == len && q.is_single_cycle()
}

/// Ordered pairs `(π, π′)` of `A` with `π π′⁻¹` an `(n - l)`-cycle.
pub fn count_edges_ell(a: &PermSet, l: usize) -> Result<u64, BirkhoffError> {
    let n = a.n();
    if n < 2 || l > n - 2 {
        return Err(BirkhoffError::Range(format!(
            "l = {l} must be at most n - 2 = {}",
            n as i64 - 2
        )));
    }
    let xs = a.elements();
    Ok(xs
        .par_iter()
        .map(|p| {
            xs.iter()
                .filter(|q| is_cycle_of_length(&p.quotient(q), n - l))
                .count() as u64
        })
        .sum())
}

/// Unordered edges of `B_n` inside `A`.
pub fn count_edges(a: &PermSet) -> u64 {
    let xs = a.elements();
    xs.par_iter()
        .enumerate()
        .map(|(i, p)| {
            xs[i + 1..]
                .iter()
                .filter(|q| p.quotient(q).is_single_cycle())
                .count() as u64
        })
        .sum()
}

/// Number of ordered pairs of `A` whose quotient `π π′⁻¹` has each cycle type.
pub fn quotient_class_counts(a: &PermSet) -> BTreeMap<Partition, u64> {
    let xs = a.elements();
    xs.par_iter()
        .fold(BTreeMap::new, |mut acc, p| {
            for q in xs {
                *acc.entry(p.quotient(q).cycle_type()).or_insert(0u64) += 1;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        })
}

fn phi_from_counts(
    counts: &BTreeMap<Partition, u64>,
    size: usize,
    lambda: &Partition,
) -> Result<Rational, BirkhoffError> {
    let mut total = BigInt::zero();
    for (mu, &c) in counts {
        total += BigInt::from(mn_character(lambda, mu)?) * BigInt::from(c);
    }
    Ok(Rational::new(total, BigInt::from(size * size)))
}

/// `χ^λ(φ_A) = Σ_{π,π′ ∈ A} χ^λ(π π′⁻¹) / |A|²`.
pub fn phi_char(a: &PermSet, lambda: &Partition) -> Result<Rational, BirkhoffError> {
    a.require_nonempty()?;
    if lambda.size() != a.n() {
        return Err(BirkhoffError::GroundSetMismatch {
            expected: a.n(),
            got: lambda.size(),
        });
    }
    phi_from_counts(&quotient_class_counts(a), a.len(), lambda)
}

/// `χ^λ(φ_A)` for every `λ ⊢ n`, in [`enumerate_partitions`] order.
pub fn phi_chars(a: &PermSet) -> Result<Vec<(Partition, Rational)>, BirkhoffError> {
    a.require_nonempty()?;
    let counts = quotient_class_counts(a);
    enumerate_partitions(a.n())
        .into_iter()
        .map(|lambda| {
            let v = phi_from_counts(&counts, a.len(), &lambda)?;
            Ok((lambda, v))
        })
        .collect()
}

/// Both sides of the edge-count identity: the direct count `|E_l[A,A]|`, and
/// `|A|² |C_{n,n-l}| / n! · Σ_λ χ^λ(φ_A) χ^λ((n-l, 1^l))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsevalSides {
    pub edges: u64,
    pub spectral: Rational,
}

impl ParsevalSides {
    pub fn holds(&self) -> bool {
        self.spectral == int(self.edges)
    }
}

pub fn parseval_sides(a: &PermSet, l: usize) -> Result<ParsevalSides, BirkhoffError> {
    let edges = count_edges_ell(a, l)?;
    let n = a.n();
    let cycle = Partition::cycle_with_fixed_points(n, l);
    let mut sum = Rational::zero();
    for (lambda, phi) in phi_chars(a)? {
        sum += phi * int(mn_character(&lambda, &cycle)?);
    }
    let size = BigInt::from(a.len());
    let scale = Rational::new(
        &size * &size * cycle_class_size(n, n - l)?,
        factorial(n as u64),
    );
    Ok(ParsevalSides {
        edges,
        spectral: scale * sum,
    })
}

pub fn parseval_check(a: &PermSet, l: usize) -> Result<bool, BirkhoffError> {
    Ok(parseval_sides(a, l)?.holds())
}

/// The point of the full program given by `A`: `x_λ = χ^λ(φ_A)`,
/// `Ψ_l = Σ_λ χ^λ((n-l, 1^l)) x_λ` and `M = max_l Ψ_l`.
pub fn lp1_assignment(a: &PermSet, lp: &LinearProgram) -> Result<Vec<Rational>, BirkhoffError> {
    let chars = phi_chars(a)?;
    let n = a.n();
    let mut x = vec![Rational::zero(); lp.num_vars()];
    for (lambda, v) in &chars {
        let j = lp.var(&format!("x[{lambda}]")).ok_or_else(|| {
            BirkhoffError::Range(format!("program has no variable for {lambda:?}"))
        })?;
        x[j] = v.clone();
    }
    let mut best: Option<Rational> = None;
    for (j, var) in lp.variables().iter().enumerate() {
        let Some(l) = var
            .name
            .strip_prefix("Psi")
            .and_then(|s| s.parse::<usize>().ok())
        else {
            continue;
        };
        let cycle = Partition::cycle_with_fixed_points(n, l);
        let mut psi = Rational::zero();
        for (lambda, v) in &chars {
            psi += v * int(mn_character(lambda, &cycle)?);
        }
        best = Some(best.map_or(psi.clone(), |b: Rational| b.max(psi.clone())));
        x[j] = psi;
    }
    if let (Some(m), Some(best)) = (lp.var("M"), best) {
        x[m] = best;
    }
    Ok(x)
}
