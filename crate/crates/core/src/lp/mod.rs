//! Linear programs bounding independent sets of the Birkhoff graph, and their dual certificates.
//!
//! Four families share one [`LinearProgram`] value:
//!
//! * [`build_lp1`]: one variable per irreducible character of `S_n`;
//! * [`build_lp2`]: only near-hook shapes `b^n_{k,β}` with short leg, the rest folded into a tail;
//! * [`build_lp3`]: the `n`-independent limit of the second family;
//! * [`build_dual`]: the dual of the third, whose feasible points are the certificates.

mod dual;
mod families;
mod program;
mod tails;

pub use dual::{
    apply_heuristics, apply_joint_large_leg, joint_row_count, solve_dual, verify_dual_certificate,
    CertError, DualCertificate, DualMode, DualSolve, Fragment, Heuristics, Verdict,
};
pub use families::{
    belly_tag, belly_var, build_dual, build_lp1, build_lp2, build_lp3, lp2_admissible,
};
pub use program::{
    normalize_row, Constraint, Feasibility, LinearProgram, Objective, Relation, Row, Sense,
    VarKind, Variable, NONNEGATIVITY,
};
pub use tails::{tail_t, tail_tn};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::CharacterError;
use crate::exactq::{format_rational, int, rational_text, Rational};
use crate::partitions::PartitionError;
use crate::simplex::SimplexError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("invalid parameters: {0}")]
    Param(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("assignment has {got} values for {expected} variables")]
    Assignment { expected: usize, got: usize },
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Solver(#[from] SimplexError),
}

/// Parameters shared by the LP families; `n` is only used by the finite families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpParams {
    pub l0: usize,
    pub k0: usize,
    pub m0: usize,
    #[serde(with = "rational_text")]
    pub c: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl LpParams {
    /// Parameters with the default `m0 = 2(l0 + k0)`.
    pub fn new(l0: usize, k0: usize, c: Rational) -> Self {
        LpParams {
            l0,
            k0,
            m0: 2 * (l0 + k0),
            c,
            n: None,
        }
    }

    pub fn with_m0(mut self, m0: usize) -> Self {
        self.m0 = m0;
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    /// Even `l` in `0..=l0`.
    pub fn ls(&self) -> impl Iterator<Item = usize> + Clone {
        (0..=self.l0).step_by(2)
    }

    /// Even `m` in `2..=m0`.
    pub fn ms(&self) -> impl Iterator<Item = usize> + Clone {
        (2..=self.m0).step_by(2)
    }

    /// Checks the requirements of the `n`-independent families.
    pub fn validate_limit(&self) -> Result<(), LpError> {
        let bad = |m: String| Err(LpError::Param(m));
        if !self.l0.is_multiple_of(2) {
            return bad(format!("l0 = {} must be even", self.l0));
        }
        if self.k0.is_multiple_of(2) {
            return bad(format!("k0 = {} must be odd", self.k0));
        }
        if self.m0 == 0 || !self.m0.is_multiple_of(2) {
            return bad(format!("m0 = {} must be positive and even", self.m0));
        }
        if self.c <= int(1) || self.c >= int(2) {
            return bad(format!(
                "c = {} must lie strictly between 1 and 2",
                format_rational(&self.c)
            ));
        }
        Ok(())
    }

    fn header(&self, keys: &[&str]) -> Vec<(String, String)> {
        keys.iter()
            .filter_map(|&k| {
                let v = match k {
                    "ℓ0" => self.l0.to_string(),
                    "k0" => self.k0.to_string(),
                    "m0" => self.m0.to_string(),
                    "c" => format_rational(&self.c),
                    "n" => self.n?.to_string(),
                    _ => unreachable!(),
                };
                Some((k.to_string(), v))
            })
            .collect()
    }
}
