//! Exact linear-programming bounds and explicit constructions for independent
//! sets of the Birkhoff graph `B_n`. Its vertices are the permutations of
//! `S_n`, and two are adjacent when their quotient is a single cycle.
//!
//! * [`exactq`]: rational parsing, powers, binomials, dyadic rounding
//! * [`partitions`]: partitions, belly shapes, rim hooks, hook-content Kostka numbers
//! * [`characters`]: Murnaghan–Nakayama characters and their large-`n` limits
//! * [`lp`]: the LP families, the dual, its heuristics and certificate verification
//! * [`simplex`]: exact two-phase simplex over integer-normalized rows
//! * [`birkhoff`]: permutations, edge counts, pseudorandomness, constructions, brute force
//!
//! ```
//! use birkhoff_core::exactq::ratio;
//! use birkhoff_core::lp::{solve_dual, verify_dual_certificate, DualMode, LpParams, Verdict};
//! use birkhoff_core::simplex::SolveOptions;
//!
//! let params = LpParams::new(0, 9, ratio(7, 5));
//! let solved = solve_dual(&params, &DualMode::default(), &SolveOptions::default()).unwrap();
//! let cert = solved.certificate.unwrap();
//! assert_eq!(verify_dual_certificate(&cert).unwrap(), Verdict::Positive);
//! ```
//!
//! The guide in `book/` walks through each module; its code blocks run as doc-tests of this crate.

pub mod birkhoff;
pub mod characters;
pub mod exactq;
pub mod lp;
pub mod partitions;
pub mod simplex;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/programs.md")]
    mod programs {}
    #[doc = include_str!("../../../book/src/simplex.md")]
    mod simplex {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
