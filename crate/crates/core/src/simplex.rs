//! Exact two-phase simplex over a dense integer tableau.
//!
//! Each tableau row is kept as a primitive integer vector: row `i` reads
//! `p_i · x_{B_i} + Σ_j a_ij x_j = b_i` with `p_i > 0`, and every pivot is a
//! fraction-free elimination followed by division by the row gcd. The
//! objective is carried the same way as `D · z = V + Σ_j R_j x_j` with `D > 0`
//! and `R` zero on basic columns. All comparisons are cross-multiplications,
//! so no rational is formed until the final point is read off.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactq::Rational;
use crate::lp::{Feasibility, LinearProgram, LpError, Relation, Sense, VarKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PivotRule {
    /// Least-index entering and leaving choice; never cycles.
    #[default]
    Bland,
    /// Most-positive reduced cost with a lexicographic ratio test. After
    /// `fallback_after` consecutive degenerate pivots the solve continues under Bland's rule.
    DantzigLex { fallback_after: usize },
    /// Most-positive reduced cost, ties to the least basic index. Can cycle;
    /// kept to demonstrate why the other rules exist.
    DantzigNaive,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub rule: PivotRule,
    /// Abort with [`SimplexError::PivotLimit`] after this many pivots.
    pub max_pivots: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplexError {
    #[error("pivot limit reached after {0} pivots")]
    PivotLimit(usize),
    #[error("basis repeated after {0} pivots")]
    Cycled(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    /// Optimum value, including the objective's constant term.
    pub objective: Option<Rational>,
    /// One value per LP variable, in declaration order.
    pub assignment: Option<Vec<Rational>>,
    pub pivot_count: usize,
    /// `(entering column, leaving row)` for every pivot, in order.
    pub trace: Vec<(usize, usize)>,
}

impl SolveResult {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}

/// Solves with Bland's rule and no pivot limit.
pub fn solve(lp: &LinearProgram) -> SolveResult {
    solve_with(lp, &SolveOptions::default()).expect("Bland's rule terminates")
}

/// Exact feasibility verdict for `assignment`, first violated tag in canonical order.
pub fn check_point(lp: &LinearProgram, assignment: &[Rational]) -> Result<Feasibility, LpError> {
    lp.check_point(assignment)
}

struct ObjRow {
    d: BigInt,
    v: BigInt,
    r: Vec<BigInt>,
}

impl ObjRow {
    fn normalize(&mut self) {
        let mut g = self.d.gcd(&self.v);
        for x in &self.r {
            if g.is_one() {
                return;
            }
            g = g.gcd(x);
        }
        if !g.is_zero() && !g.is_one() {
            self.d /= &g;
            self.v /= &g;
            for x in &mut self.r {
                *x /= &g;
            }
        }
    }
}

struct Tableau {
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    basis: Vec<usize>,
    /// columns that may never enter (artificials)
    barred: Vec<bool>,
    /// columns of the starting basis, in row order, for the lexicographic test
    initial_basis: Vec<usize>,
    pivots: usize,
    trace: Vec<(usize, usize)>,
    rule: PivotRule,
    max_pivots: Option<usize>,
    degenerate_streak: usize,
    seen_bases: HashSet<Vec<usize>>,
}

fn normalize_row(row: &mut [BigInt], rhs: &mut BigInt) {
    let mut g = rhs.abs();
    for x in row.iter() {
        if g.is_one() {
            return;
        }
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x /= &g;
            }
        }
        *rhs /= &g;
    }
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize, obj: &mut ObjRow) -> Result<(), SimplexError> {
        self.pivots += 1;
        if let Some(limit) = self.max_pivots {
            if self.pivots > limit {
                return Err(SimplexError::PivotLimit(self.pivots - 1));
            }
        }
        self.trace.push((e, r));
        let a = self.rows[r][e].clone();
        debug_assert!(a.is_positive());
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let g = self.rows[i][e].clone();
            let row = &mut self.rows[i];
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if p.is_zero() {
                    if !x.is_zero() {
                        *x *= &a;
                    }
                } else {
                    *x = &*x * &a - &g * p;
                }
            }
            self.rhs[i] = &self.rhs[i] * &a - &g * &pivot_rhs;
            normalize_row(&mut self.rows[i], &mut self.rhs[i]);
        }
        let re = obj.r[e].clone();
        if !re.is_zero() {
            obj.d *= &a;
            obj.v = &obj.v * &a + &re * &pivot_rhs;
            for (x, p) in obj.r.iter_mut().zip(&pivot_row) {
                *x = &*x * &a - &re * p;
            }
            obj.normalize();
        }
        self.basis[r] = e;
        if self.rule == PivotRule::DantzigNaive {
            let mut key = self.basis.clone();
            key.sort_unstable();
            if !self.seen_bases.insert(key) {
                return Err(SimplexError::Cycled(self.pivots));
            }
        }
        Ok(())
    }

    fn active_rule(&self) -> PivotRule {
        match self.rule {
            PivotRule::DantzigLex { fallback_after }
                if self.degenerate_streak >= fallback_after =>
            {
                PivotRule::Bland
            }
            rule => rule,
        }
    }

    fn entering(&self, obj: &ObjRow) -> Option<usize> {
        let eligible = (0..obj.r.len()).filter(|&j| !self.barred[j] && obj.r[j].is_positive());
        match self.active_rule() {
            PivotRule::Bland => eligible.min(),
            _ => eligible.fold(None, |best: Option<usize>, j| match best {
                Some(b) if obj.r[b] >= obj.r[j] => Some(b),
                _ => Some(j),
            }),
        }
    }

    /// `(b_i / a_ie) < (b_k / a_ke)` with both pivots positive.
    fn ratio_less(&self, i: usize, k: usize, e: usize) -> std::cmp::Ordering {
        (&self.rhs[i] * &self.rows[k][e]).cmp(&(&self.rhs[k] * &self.rows[i][e]))
    }

    fn lex_cmp(&self, i: usize, k: usize, e: usize) -> std::cmp::Ordering {
        let by_ratio = self.ratio_less(i, k, e);
        if by_ratio.is_ne() {
            return by_ratio;
        }
        for &c in &self.initial_basis {
            let o =
                (&self.rows[i][c] * &self.rows[k][e]).cmp(&(&self.rows[k][c] * &self.rows[i][e]));
            if o.is_ne() {
                return o;
            }
        }
        self.basis[i].cmp(&self.basis[k])
    }

    fn leaving(&self, e: usize) -> Option<usize> {
        let candidates = (0..self.rows.len()).filter(|&i| self.rows[i][e].is_positive());
        let lex = matches!(self.active_rule(), PivotRule::DantzigLex { .. });
        candidates.reduce(|best, i| {
            let o = if lex {
                self.lex_cmp(i, best, e)
            } else {
                self.ratio_less(i, best, e)
                    .then(self.basis[i].cmp(&self.basis[best]))
            };
            if o.is_lt() {
                i
            } else {
                best
            }
        })
    }

    fn run(&mut self, obj: &mut ObjRow) -> Result<Step, SimplexError> {
        loop {
            let Some(e) = self.entering(obj) else {
                return Ok(Step::Optimal);
            };
            let Some(r) = self.leaving(e) else {
                return Ok(Step::Unbounded);
            };
            if self.rhs[r].is_zero() {
                self.degenerate_streak += 1;
            } else {
                self.degenerate_streak = 0;
            }
            self.pivot(r, e, obj)?;
        }
    }

    /// Objective `Σ c_j x_j` expressed against the current basis.
    fn objective_row(&self, c: &[Rational]) -> ObjRow {
        let d = lcm_of_denominators(c.iter());
        let r = c
            .iter()
            .map(|q| (q * Rational::from_integer(d.clone())).to_integer())
            .collect();
        let mut obj = ObjRow {
            d,
            v: BigInt::zero(),
            r,
        };
        for i in 0..self.rows.len() {
            let b = self.basis[i];
            let rb = obj.r[b].clone();
            if rb.is_zero() {
                continue;
            }
            let p = &self.rows[i][b];
            obj.d *= p;
            obj.v = &obj.v * p + &rb * &self.rhs[i];
            for (x, a) in obj.r.iter_mut().zip(&self.rows[i]) {
                *x = &*x * p - &rb * a;
            }
            obj.normalize();
        }
        obj
    }

    fn remove_row(&mut self, i: usize) {
        self.rows.remove(i);
        self.rhs.remove(i);
        self.basis.remove(i);
    }

    fn values(&self, ncols: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = Rational::new(self.rhs[i].clone(), self.rows[i][b].clone());
        }
        x
    }
}

pub fn solve_with(lp: &LinearProgram, options: &SolveOptions) -> Result<SolveResult, SimplexError> {
    // structural columns: one per nonnegative variable, two per free variable
    let mut cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(lp.num_vars());
    let mut ncols = 0;
    for v in lp.variables() {
        match v.kind {
            VarKind::NonNegative => {
                cols.push((ncols, None));
                ncols += 1;
            }
            VarKind::Free => {
                cols.push((ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
    }
    let structural = ncols;

    struct Pending {
        row: Vec<BigInt>,
        rhs: BigInt,
        relation: Relation,
        scale: BigInt,
    }
    let mut pending = Vec::with_capacity(lp.constraints().len());
    for c in lp.constraints() {
        // slack and artificial columns get the same multiplier, so they price like unscaled ones
        let int_scale = lcm_of_denominators(c.row.iter().map(|(_, a)| a).chain([&c.rhs]));
        let scale = Rational::from_integer(int_scale.clone());
        let mut row = vec![BigInt::zero(); structural];
        for (j, a) in &c.row {
            let a = (a * &scale).to_integer();
            let (plus, minus) = cols[*j];
            if let Some(minus) = minus {
                row[minus] = -a.clone();
            }
            row[plus] = a;
        }
        let mut rhs = (&c.rhs * &scale).to_integer();
        let mut relation = c.relation;
        let flip = rhs.is_negative() || (rhs.is_zero() && relation == Relation::Ge);
        if flip {
            row.iter_mut().for_each(|x| *x = -&*x);
            rhs = -rhs;
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        pending.push(Pending {
            row,
            rhs,
            relation,
            scale: int_scale,
        });
    }

    let slack_count = pending
        .iter()
        .filter(|p| p.relation != Relation::Eq)
        .count();
    let artificial_count = pending
        .iter()
        .filter(|p| p.relation != Relation::Le)
        .count();
    let total = structural + slack_count + artificial_count;
    let mut rows = Vec::with_capacity(pending.len());
    let mut rhs = Vec::with_capacity(pending.len());
    let mut basis = Vec::with_capacity(pending.len());
    let mut barred = vec![false; total];
    let (mut next_slack, mut next_art) = (structural, structural + slack_count);
    for p in pending {
        let mut row = p.row;
        row.resize(total, BigInt::zero());
        match p.relation {
            Relation::Le => {
                row[next_slack] = p.scale.clone();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -p.scale.clone();
                next_slack += 1;
                row[next_art] = p.scale.clone();
                basis.push(next_art);
                barred[next_art] = true;
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = p.scale.clone();
                basis.push(next_art);
                barred[next_art] = true;
                next_art += 1;
            }
        }
        let mut b = p.rhs;
        normalize_row(&mut row, &mut b);
        rows.push(row);
        rhs.push(b);
    }

    let mut t = Tableau {
        initial_basis: basis.clone(),
        rows,
        rhs,
        basis,
        barred,
        pivots: 0,
        trace: Vec::new(),
        rule: options.rule,
        max_pivots: options.max_pivots,
        degenerate_streak: 0,
        seen_bases: HashSet::new(),
    };
    let mut start = t.basis.clone();
    start.sort_unstable();
    t.seen_bases.insert(start);
    let is_artificial = |j: usize| j >= structural + slack_count;
    let done = |t: Tableau, status: Status| SolveResult {
        status,
        objective: None,
        assignment: None,
        pivot_count: t.pivots,
        trace: t.trace,
    };

    if artificial_count > 0 {
        let mut c1 = vec![Rational::zero(); total];
        for v in &mut c1[structural + slack_count..] {
            *v = -Rational::one();
        }
        let mut obj = t.objective_row(&c1);
        t.run(&mut obj)?;
        if obj.v.is_negative() {
            return Ok(done(t, Status::Infeasible));
        }
        // drive zero-level artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if !is_artificial(t.basis[i]) {
                i += 1;
                continue;
            }
            match (0..structural + slack_count).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    if t.rows[i][j].is_negative() {
                        t.rows[i].iter_mut().for_each(|x| *x = -&*x);
                        t.rhs[i] = -&t.rhs[i];
                    }
                    t.pivot(i, j, &mut obj)?;
                    i += 1;
                }
                None => t.remove_row(i),
            }
        }
    }

    let sign = match lp.objective().sense {
        Sense::Maximize => Rational::one(),
        Sense::Minimize => -Rational::one(),
    };
    let mut c2 = vec![Rational::zero(); total];
    for (j, a) in &lp.objective().row {
        let (plus, minus) = cols[*j];
        c2[plus] = &sign * a;
        if let Some(minus) = minus {
            c2[minus] = -(&sign * a);
        }
    }
    let mut obj = t.objective_row(&c2);
    t.degenerate_streak = 0;
    if let Step::Unbounded = t.run(&mut obj)? {
        return Ok(done(t, Status::Unbounded));
    }

    let x = t.values(total);
    let assignment: Vec<Rational> = cols
        .iter()
        .map(|&(plus, minus)| match minus {
            Some(m) => &x[plus] - &x[m],
            None => x[plus].clone(),
        })
        .collect();
    let value = lp.objective_value(&assignment);
    debug_assert_eq!(
        &value - &lp.objective().constant,
        &sign * Rational::new(obj.v.clone(), obj.d.clone())
    );
    Ok(SolveResult {
        status: Status::Optimal,
        objective: Some(value),
        assignment: Some(assignment),
        pivot_count: t.pivots,
        trace: t.trace,
    })
}
