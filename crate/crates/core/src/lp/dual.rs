use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use log::{debug, info};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::families::{belly_tag, build_dual};
use super::program::{Constraint, LinearProgram, Relation};
use super::{LpError, LpParams};
use crate::exactq::{binomial, int, round_dyadic, Rational, RoundDir};
use crate::partitions::{belly_index, BellyShape, Partition};
use crate::simplex::{solve_with, SolveOptions, Status};

fn w_name(l: usize) -> String {
    format!("w{l}")
}

fn y_name(m: usize) -> String {
    format!("y{m}")
}

fn joint_tag(k: usize, s: usize) -> String {
    format!("joint[{k};{s}]")
}

fn is_restriction(tag: &str) -> bool {
    tag.starts_with("b[") || tag.starts_with("joint[")
}

/// Smallest leg that is merged into a joint row.
fn joint_start(params: &LpParams) -> usize {
    params.l0.max(1)
}

/// Number of restriction rows after [`apply_joint_large_leg`].
pub fn joint_row_count(params: &LpParams) -> usize {
    let kept = belly_index(params.l0, params.k0)
        .iter()
        .filter(|b| b.k() < params.l0)
        .count();
    let legs = (params.k0 + 1).saturating_sub(joint_start(params));
    kept + legs * (params.l0 + 1)
}

/// Replaces, for each leg `k >= max(l0, 1)` and belly size `s <= l0`, all
/// restrictions `b[k;β]` with `|β| = s` by `2(-1)^k w_s + Σ_m binom(m, k+s) y_m >= 0`.
/// The `w` term is present only for even `s`.
pub fn apply_joint_large_leg(lp: &LinearProgram, params: &LpParams) -> LinearProgram {
    let mut out = lp.clone();
    let mut restrictions: HashMap<String, Constraint> = HashMap::new();
    let mut others = Vec::new();
    for c in lp.constraints() {
        if c.tag.starts_with("b[") {
            restrictions.insert(c.tag.clone(), c.clone());
        } else {
            others.push(c.clone());
        }
    }
    let index = belly_index(params.l0, params.k0);
    let start = joint_start(params);
    let ys: Vec<(usize, usize)> = params
        .ms()
        .filter_map(|m| lp.var(&y_name(m)).map(|j| (m, j)))
        .collect();
    for s in 0..=params.l0 {
        for b in index
            .iter()
            .filter(|b| b.belly().size() == s && b.k() < start)
        {
            if let Some(c) = restrictions.remove(&belly_tag(b)) {
                others.push(c);
            }
        }
        for k in start..=params.k0 {
            let mut row = Vec::with_capacity(ys.len() + 1);
            if let Some(w) = lp.var(&w_name(s)) {
                row.push((w, int(if k % 2 == 0 { 2 } else { -2 })));
            }
            row.extend(
                ys.iter()
                    .map(|&(m, j)| (j, int(binomial(m as u64, (k + s) as u64)))),
            );
            others.push(Constraint {
                tag: joint_tag(k, s),
                row: super::normalize_row(row),
                relation: Relation::Ge,
                rhs: Rational::zero(),
            });
        }
    }
    *out.constraints_mut() = others;
    out
}

/// Predicate on belly shapes selecting the restriction rows of a fragment.
///
/// Text form is a `;`-separated list of terms, each `ht<=h` or a partition
/// such as `1,1` (`()` for the empty belly). A shape is kept when any term
/// matches. `default` stands for `ht<=1;1,1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub max_height: Option<usize>,
    pub bellies: Vec<Partition>,
}

impl Fragment {
    pub fn contains(&self, b: &BellyShape) -> bool {
        self.max_height.is_some_and(|h| b.belly().height() <= h) || self.bellies.contains(b.belly())
    }
}

impl Default for Fragment {
    fn default() -> Self {
        Fragment {
            max_height: Some(1),
            bellies: vec![Partition::from_unsorted(vec![1, 1])],
        }
    }
}

impl FromStr for Fragment {
    type Err = LpError;

    fn from_str(s: &str) -> Result<Self, LpError> {
        if s.trim() == "default" {
            return Ok(Fragment::default());
        }
        let mut f = Fragment {
            max_height: None,
            bellies: Vec::new(),
        };
        for term in s.split(';').map(str::trim) {
            if let Some(h) = term.strip_prefix("ht<=") {
                let h: usize = h
                    .parse()
                    .map_err(|_| LpError::Param(format!("bad height bound {term:?}")))?;
                f.max_height = Some(f.max_height.map_or(h, |old| old.max(h)));
            } else {
                f.bellies.push(term.parse()?);
            }
        }
        Ok(f)
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self.max_height.iter().map(|h| format!("ht<={h}")).collect();
        terms.extend(self.bellies.iter().map(|p| {
            if p.is_empty() {
                "()".into()
            } else {
                p.to_string()
            }
        }));
        f.write_str(&terms.join(";"))
    }
}

/// Modifications that shrink or simplify the dual before solving.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Heuristics {
    pub drop_y: Vec<usize>,
    pub round_bits: Option<u32>,
    pub fragment: Option<Fragment>,
}

/// Pins `y_m = 0` for every dropped `m` (rows tagged `drop[m]`), rounds
/// `c^m - 1` up in the objective and the `y` coefficients of the restrictions
/// down to `round_bits` binary digits, and keeps only the `b[k;β]` rows accepted by the fragment.
pub fn apply_heuristics(
    lp: &LinearProgram,
    params: &LpParams,
    h: &Heuristics,
) -> Result<LinearProgram, LpError> {
    let mut out = lp.clone();
    for &m in &h.drop_y {
        let j = lp
            .var(&y_name(m))
            .ok_or_else(|| LpError::Param(format!("no variable y{m} to drop")))?;
        out.add_constraint(
            format!("drop[{m}]"),
            vec![(j, int(1))],
            Relation::Eq,
            int(0),
        );
    }
    if let Some(bits) = h.round_bits {
        let ys: BTreeSet<usize> = params.ms().filter_map(|m| lp.var(&y_name(m))).collect();
        let mut row = out.objective().row.clone();
        for (j, a) in row.iter_mut() {
            if ys.contains(j) {
                *a = -round_dyadic(&-a.clone(), bits, RoundDir::Up);
            }
        }
        out.set_objective_row(row);
        for c in out
            .constraints_mut()
            .iter_mut()
            .filter(|c| is_restriction(&c.tag))
        {
            for (j, a) in c.row.iter_mut() {
                if ys.contains(j) {
                    *a = round_dyadic(a, bits, RoundDir::Down);
                }
            }
        }
    }
    if let Some(fragment) = &h.fragment {
        let keep: HashMap<String, bool> = belly_index(params.l0, params.k0)
            .iter()
            .map(|b| (belly_tag(b), fragment.contains(b)))
            .collect();
        out.retain_constraints(|c| keep.get(&c.tag).copied().unwrap_or(true));
    }
    Ok(out)
}

/// How a certificate was produced; recorded so the verifier checks the matching row system.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualMode {
    pub joint_large_leg: bool,
    pub fragment: Option<String>,
    pub round_bits: Option<u32>,
    pub dropped_y: Vec<usize>,
}

impl DualMode {
    pub fn heuristics(&self) -> Result<Heuristics, LpError> {
        Ok(Heuristics {
            drop_y: self.dropped_y.clone(),
            round_bits: self.round_bits,
            fragment: self.fragment.as_deref().map(str::parse).transpose()?,
        })
    }
}

mod rational_map {
    use std::collections::BTreeMap;

    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    use crate::exactq::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<usize, Rational>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let text: BTreeMap<usize, String> =
            map.iter().map(|(k, v)| (*k, format_rational(v))).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<usize, Rational>, D::Error> {
        let text = BTreeMap::<usize, String>::deserialize(d)?;
        text.into_iter()
            .map(|(k, v)| parse_rational(&v).map(|q| (k, q)).map_err(D::Error::custom))
            .collect()
    }
}

/// A feasible point of the dual, stored as JSON with rationals written `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCertificate {
    pub params: LpParams,
    pub mode: DualMode,
    #[serde(with = "rational_map")]
    pub w: BTreeMap<usize, Rational>,
    #[serde(with = "rational_map")]
    pub y: BTreeMap<usize, Rational>,
    #[serde(with = "crate::exactq::rational_text")]
    pub objective: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("certificate parameters rejected: {0}")]
    Params(#[from] LpError),
    #[error("{which} keys are {got:?}, expected {expected:?}")]
    Keys {
        which: &'static str,
        expected: Vec<usize>,
        got: Vec<usize>,
    },
    #[error("stored objective {stored} differs from recomputed {recomputed}")]
    ObjectiveMismatch { stored: String, recomputed: String },
}

impl DualCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CertError> {
        serde_json::from_str(text).map_err(|e| CertError::Malformed(e.to_string()))
    }

    /// Values in the variable order of the dual: `w` ascending, then `y` ascending.
    pub fn point(&self) -> Vec<Rational> {
        self.w.values().chain(self.y.values()).cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Positive,
    Nonpositive,
    Infeasible(String),
}

/// Rebuilds the exact restriction system named by `mode` (never rounded,
/// never fragmented) and checks `cert` against it.
pub fn verify_dual_certificate(cert: &DualCertificate) -> Result<Verdict, CertError> {
    let params = &cert.params;
    params.validate_limit()?;
    let check_keys = |which, expected: Vec<usize>, got: &BTreeMap<usize, Rational>| {
        let got: Vec<usize> = got.keys().copied().collect();
        if got == expected {
            Ok(())
        } else {
            Err(CertError::Keys {
                which,
                expected,
                got,
            })
        }
    };
    check_keys("w", params.ls().collect(), &cert.w)?;
    check_keys("y", params.ms().collect(), &cert.y)?;

    let mut lp = build_dual(params)?;
    if cert.mode.joint_large_leg {
        lp = apply_joint_large_leg(&lp, params);
    }
    let x = cert.point();
    if x.iter().any(Signed::is_negative) {
        return Ok(Verdict::Infeasible(super::NONNEGATIVITY.into()));
    }
    if let Some(c) = lp.constraints().par_iter().find_first(|c| !c.holds(&x)) {
        return Ok(Verdict::Infeasible(c.tag.clone()));
    }
    let recomputed = lp.objective_value(&x);
    if recomputed != cert.objective {
        return Err(CertError::ObjectiveMismatch {
            stored: crate::exactq::format_rational(&cert.objective),
            recomputed: crate::exactq::format_rational(&recomputed),
        });
    }
    Ok(if recomputed.is_positive() {
        Verdict::Positive
    } else {
        Verdict::Nonpositive
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSolve {
    pub status: Status,
    /// Present when the solve reached an optimum.
    pub certificate: Option<DualCertificate>,
    /// Optimum of the modified program actually solved.
    pub solved_objective: Option<Rational>,
    /// Number of LP solves; more than one when fragment rows had to be added back.
    pub rounds: usize,
    /// Restriction rows in the final solved program.
    pub restriction_rows: usize,
    pub pivot_count: usize,
}

/// Builds the dual, applies the joint strengthening and heuristics named by
/// `mode`, and solves it. With a fragment, violated rows of the unfragmented
/// system are added back and the fragment re-solved until the point is
/// feasible for every row.
pub fn solve_dual(
    params: &LpParams,
    mode: &DualMode,
    options: &SolveOptions,
) -> Result<DualSolve, LpError> {
    let original = build_dual(params)?;
    let mut target = original.clone();
    if mode.joint_large_leg {
        target = apply_joint_large_leg(&target, params);
    }
    let mut h = mode.heuristics()?;
    let fragment = h.fragment.take();
    target = apply_heuristics(&target, params, &h)?;
    let mut working = match &fragment {
        Some(f) => apply_heuristics(
            &target,
            params,
            &Heuristics {
                fragment: Some(f.clone()),
                ..Default::default()
            },
        )?,
        None => target.clone(),
    };

    let mut rounds = 0;
    let mut pivot_count = 0;
    loop {
        rounds += 1;
        let restriction_rows = working
            .constraints()
            .iter()
            .filter(|c| is_restriction(&c.tag))
            .count();
        info!("dual solve round {rounds}: {restriction_rows} restriction rows");
        let r = solve_with(&working, options)?;
        pivot_count += r.pivot_count;
        let done = |certificate, solved_objective| DualSolve {
            status: r.status,
            certificate,
            solved_objective,
            rounds,
            restriction_rows,
            pivot_count,
        };
        let Some(x) = &r.assignment else {
            return Ok(done(None, None));
        };
        let present: BTreeSet<&str> = working
            .constraints()
            .iter()
            .map(|c| c.tag.as_str())
            .collect();
        let violated: Vec<Constraint> = target
            .constraints()
            .iter()
            .filter(|c| !present.contains(c.tag.as_str()) && !c.holds(x))
            .cloned()
            .collect();
        if violated.is_empty() {
            let w = params.ls().zip(x.iter().cloned()).collect();
            let y = params
                .ms()
                .zip(x[params.ls().count()..].iter().cloned())
                .collect();
            let certificate = DualCertificate {
                params: params.clone(),
                mode: mode.clone(),
                w,
                y,
                objective: original.objective_value(x),
            };
            return Ok(done(Some(certificate), r.objective.clone()));
        }
        debug!("adding {} violated rows", violated.len());
        // keep the canonical order of the target system
        let add: BTreeSet<String> = violated.into_iter().map(|c| c.tag).collect();
        let keep: BTreeSet<String> = present.iter().map(|s| s.to_string()).chain(add).collect();
        working = target.clone();
        working.retain_constraints(|c| keep.contains(&c.tag));
    }
}
