//! Irreducible characters of the symmetric group.
//!
//! `χ^λ(μ)` is evaluated with the Murnaghan–Nakayama rule, always stripping the
//! largest remaining cycle first. Once only fixed points are left the value is
//! `f_λ`, read off the hook length formula. Intermediate results are memoized
//! on `(shape, remaining cycle type)`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactq::{binomial, factorial};
use crate::partitions::{enumerate_partitions, standard_count, xi_shape, BellyShape, Partition};

/// A cycle type of `S_n`, fixed points included as parts equal to 1.
pub type CycleType = Partition;

/// Default largest `n` accepted by [`character_table`].
pub const DEFAULT_TABLE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("shape has size {shape} but cycle type has size {cycles}")]
    SizeMismatch { shape: usize, cycles: usize },
    #[error("character table for n = {n} exceeds the limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("character value overflowed 128-bit arithmetic")]
    Overflow,
    #[error("cycle length {m} out of range for n = {n}")]
    Range { n: usize, m: usize },
}

/// Memoizing Murnaghan–Nakayama evaluator; safe to share between threads.
#[derive(Debug, Default)]
pub struct CharacterEvaluator {
    memo: RwLock<HashMap<(Partition, Vec<usize>), i128>>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide evaluator used by the free functions of this module.
    pub fn global() -> &'static CharacterEvaluator {
        static GLOBAL: OnceLock<CharacterEvaluator> = OnceLock::new();
        GLOBAL.get_or_init(CharacterEvaluator::new)
    }

    pub fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<i128, CharacterError> {
        if lambda.size() != mu.size() {
            return Err(CharacterError::SizeMismatch {
                shape: lambda.size(),
                cycles: mu.size(),
            });
        }
        self.eval(lambda, mu.parts())
    }

    fn eval(&self, lambda: &Partition, mu: &[usize]) -> Result<i128, CharacterError> {
        match mu.first() {
            None => return Ok(1),
            Some(1) => {
                return standard_count(lambda)
                    .to_i128()
                    .ok_or(CharacterError::Overflow)
            }
            Some(_) => {}
        }
        let key = (lambda.clone(), mu.to_vec());
        if let Some(&v) = self.memo.read().expect("memo poisoned").get(&key) {
            return Ok(v);
        }
        let mut total: i128 = 0;
        for hook in crate::partitions::enumerate_rim_hooks(lambda, mu[0]) {
            let rest = self.eval(&hook.remaining, &mu[1..])?;
            let term = if hook.height % 2 == 1 { rest } else { -rest };
            total = total.checked_add(term).ok_or(CharacterError::Overflow)?;
        }
        self.memo.write().expect("memo poisoned").insert(key, total);
        Ok(total)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo poisoned").len()
    }
}

/// `χ^λ(μ)` through the shared evaluator.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i128, CharacterError> {
    CharacterEvaluator::global().character(lambda, mu)
}

/// Full character table of `S_n`; rows and columns in canonical partition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub shapes: Vec<Partition>,
    /// `values[i][j] = χ^{shapes[i]}(shapes[j])`
    pub values: Vec<Vec<i128>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.shapes.first().map_or(0, Partition::size)
    }

    pub fn index_of(&self, shape: &Partition) -> Option<usize> {
        self.shapes.iter().position(|s| s == shape)
    }

    pub fn value(&self, lambda: &Partition, mu: &CycleType) -> Option<i128> {
        Some(self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable, CharacterError> {
    character_table_with_limit(n, DEFAULT_TABLE_LIMIT)
}

pub fn character_table_with_limit(
    n: usize,
    limit: usize,
) -> Result<CharacterTable, CharacterError> {
    if n > limit {
        return Err(CharacterError::LimitExceeded { n, limit });
    }
    let shapes = enumerate_partitions(n);
    let values = shapes
        .iter()
        .map(|l| shapes.iter().map(|m| mn_character(l, m)).collect())
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(CharacterTable { shapes, values })
}

/// `lim_{n→∞} χ^{b^n_{k,β}}((n - ℓ, 1^ℓ))`: zero when removing the hand's rim hook
/// leaves no valid shape, otherwise `(-1)^{t-1} f_ξ`.
pub fn limit_coeff(b: &BellyShape, l: usize) -> BigInt {
    match xi_shape(b, l) {
        None => BigInt::from(0),
        Some((xi, height)) => {
            let f = BigInt::from(standard_count(&xi));
            if height % 2 == 1 {
                f
            } else {
                -f
            }
        }
    }
}

/// Number of `m`-cycles in `S_n`: `binom(n, m) (m - 1)!`.
pub fn cycle_class_size(n: usize, m: usize) -> Result<BigInt, CharacterError> {
    if m < 2 || m > n {
        return Err(CharacterError::Range { n, m });
    }
    Ok(binomial(n as u64, m as u64) * factorial(m as u64 - 1))
}

/// Order of the centralizer of any permutation of cycle type `mu`: `Π i^{m_i} m_i!`.
pub fn centralizer_size(mu: &CycleType) -> BigInt {
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(len, mult)| BigInt::from(len).pow(mult as u32) * factorial(mult))
        .product()
}

/// Size of the conjugacy class with cycle type `mu`.
pub fn class_size(mu: &CycleType) -> BigInt {
    factorial(mu.size() as u64) / centralizer_size(mu)
}
