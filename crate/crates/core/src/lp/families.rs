use num_traits::One;
use rayon::prelude::*;

use super::program::{LinearProgram, Relation, Sense, VarKind};
use super::tails::{tail_t, tail_tn};
use super::{LpError, LpParams};
use crate::characters::{limit_coeff, mn_character};
use crate::exactq::{int, rational_pow, Rational};
use crate::partitions::{
    belly_index, enumerate_partitions, kostka_belly_limit, kostka_hook, realize_belly, BellyShape,
    Partition,
};

/// Variable name of a belly variable: `x[k;belly]`.
pub fn belly_var(b: &BellyShape) -> String {
    format!("x[{};{}]", b.k(), b.belly())
}

/// Tag of the dual restriction attached to a belly shape: `b[k;belly]`.
pub fn belly_tag(b: &BellyShape) -> String {
    format!("b[{};{}]", b.k(), b.belly())
}

fn require_n(params: &LpParams) -> Result<usize, LpError> {
    let n = params
        .n
        .ok_or_else(|| LpError::Param("this family needs n".into()))?;
    if n % 2 == 0 {
        return Err(LpError::Param(format!("n = {n} must be odd")));
    }
    if !params.l0.is_multiple_of(2) || params.l0 >= n {
        return Err(LpError::Param(format!(
            "l0 = {} must be even and below n",
            params.l0
        )));
    }
    if params.c <= int(1) {
        return Err(LpError::Param("c must exceed 1".into()));
    }
    Ok(n)
}

/// Whether `l0 <= k0 <= (n - l0 - 3)/2` with `k0` odd, the range where the truncated
/// program is compared against the full one.
pub fn lp2_admissible(n: usize, l0: usize, k0: usize) -> bool {
    k0 % 2 == 1 && l0 <= k0 && 2 * k0 + l0 + 3 <= n
}

fn add_max_psi(lp: &mut LinearProgram, params: &LpParams) -> (usize, Vec<usize>) {
    let m = lp.add_var("M", VarKind::Free);
    let psi: Vec<usize> = params
        .ls()
        .map(|l| lp.add_var(format!("Psi{l}"), VarKind::Free))
        .collect();
    lp.set_objective(vec![(m, Rational::one())], int(0));
    for (l, &p) in params.ls().zip(&psi) {
        lp.add_constraint(
            format!("maxpsi[{l}]"),
            vec![(m, int(1)), (p, int(-1))],
            Relation::Ge,
            int(0),
        );
    }
    (m, psi)
}

/// Full program over every irreducible character of `S_n`.
pub fn build_lp1(params: &LpParams) -> Result<LinearProgram, LpError> {
    let n = require_n(params)?;
    let mut lp = LinearProgram::new("1", Sense::Minimize);
    lp.params = params.header(&["ℓ0", "c", "n"]);
    let (_, psi) = add_max_psi(&mut lp, params);
    let shapes = enumerate_partitions(n);
    let x: Vec<usize> = shapes
        .iter()
        .map(|l| lp.add_var(format!("x[{l}]"), VarKind::NonNegative))
        .collect();

    for (l, &p) in params.ls().zip(&psi) {
        let class = Partition::cycle_with_fixed_points(n, l);
        let mut row = vec![(p, int(-1))];
        for (lambda, &j) in shapes.iter().zip(&x) {
            row.push((j, int(mn_character(lambda, &class)?)));
        }
        lp.add_constraint(format!("parseval[{l}]"), row, Relation::Eq, int(0));
    }
    for m in (2..n).step_by(2) {
        let row = shapes
            .iter()
            .zip(&x)
            .map(|(lambda, &j)| (j, int(kostka_hook(lambda, m))))
            .collect();
        lp.add_constraint(
            format!("young[{m}]"),
            row,
            Relation::Le,
            rational_pow(&params.c, m as u32),
        );
    }
    for (i, lambda) in shapes.iter().enumerate() {
        let t = lambda.transpose();
        let ti = shapes
            .iter()
            .position(|s| *s == t)
            .expect("transpose is a partition of n");
        if i < ti {
            lp.add_constraint(
                format!("transpose[{lambda}]"),
                vec![(x[i], int(1)), (x[ti], int(-1))],
                Relation::Eq,
                int(0),
            );
        }
    }
    for pinned in [Partition::row(n), Partition::column(n)] {
        let j = x[shapes.iter().position(|s| *s == pinned).unwrap()];
        lp.add_constraint(
            format!("pin[{pinned}]"),
            vec![(j, int(1))],
            Relation::Eq,
            int(1),
        );
    }
    Ok(lp)
}

/// Truncated program over near-hook shapes with leg at most `k0`.
pub fn build_lp2(params: &LpParams) -> Result<LinearProgram, LpError> {
    let n = require_n(params)?;
    if !lp2_admissible(n, params.l0, params.k0) {
        return Err(LpError::Param(format!(
            "need odd k0 with l0 <= k0 <= (n - l0 - 3)/2 (n = {n}, l0 = {}, k0 = {})",
            params.l0, params.k0
        )));
    }
    let mut lp = LinearProgram::new("2", Sense::Minimize);
    lp.params = params.header(&["ℓ0", "k0", "c", "n"]);
    let (_, psi) = add_max_psi(&mut lp, params);
    let top = lp.add_var(format!("x[{}]", Partition::row(n)), VarKind::NonNegative);
    let index = belly_index(params.l0, params.k0);
    let shapes = index
        .iter()
        .map(|b| realize_belly(b, n))
        .collect::<Result<Vec<_>, _>>()?;
    let x: Vec<usize> = index
        .iter()
        .map(|b| lp.add_var(belly_var(b), VarKind::NonNegative))
        .collect();

    for (l, &p) in params.ls().zip(&psi) {
        let class = Partition::cycle_with_fixed_points(n, l);
        let mut row = vec![(p, int(-1))];
        for (shape, &j) in shapes.iter().zip(&x) {
            row.push((j, int(2 * mn_character(shape, &class)?)));
        }
        let rhs = int(2) * tail_tn(n, l, params.k0, &params.c) - int(2);
        lp.add_constraint(format!("parseval[{l}]"), row, Relation::Eq, rhs);
    }
    for m in (2..n).step_by(2) {
        let mut row = vec![(top, int(1))];
        row.extend(
            shapes
                .iter()
                .zip(&x)
                .map(|(shape, &j)| (j, int(kostka_hook(shape, m)))),
        );
        lp.add_constraint(
            format!("young[{m}]"),
            row,
            Relation::Le,
            rational_pow(&params.c, m as u32),
        );
    }
    lp.add_constraint(
        format!("pin[{}]", Partition::row(n)),
        vec![(top, int(1))],
        Relation::Eq,
        int(1),
    );
    Ok(lp)
}

/// Limit program, independent of `n`.
pub fn build_lp3(params: &LpParams) -> Result<LinearProgram, LpError> {
    params.validate_limit()?;
    let mut lp = LinearProgram::new("3", Sense::Minimize);
    lp.params = params.header(&["ℓ0", "k0", "m0", "c"]);
    let (_, psi) = add_max_psi(&mut lp, params);
    let index = belly_index(params.l0, params.k0);
    let x: Vec<usize> = index
        .iter()
        .map(|b| lp.add_var(belly_var(b), VarKind::NonNegative))
        .collect();

    for (l, &p) in params.ls().zip(&psi) {
        let mut row = vec![(p, int(-1))];
        row.extend(
            index
                .iter()
                .zip(&x)
                .map(|(b, &j)| (j, int(2 * limit_coeff(b, l)))),
        );
        let rhs = int(2) * tail_t(l, params.k0, &params.c)? - int(2);
        lp.add_constraint(format!("parseval[{l}]"), row, Relation::Eq, rhs);
    }
    for m in params.ms() {
        let row = index
            .iter()
            .zip(&x)
            .map(|(b, &j)| (j, int(kostka_belly_limit(b, m))))
            .collect();
        let rhs = rational_pow(&params.c, m as u32) - int(1);
        lp.add_constraint(format!("young[{m}]"), row, Relation::Le, rhs);
    }
    Ok(lp)
}

/// Coefficients of the dual restriction for `b`: one per even `l`, then one per even `m`.
pub(crate) fn restriction_coeffs(
    b: &BellyShape,
    params: &LpParams,
) -> (Vec<Rational>, Vec<Rational>) {
    let w = params.ls().map(|l| int(2 * limit_coeff(b, l))).collect();
    let y = params.ms().map(|m| int(kostka_belly_limit(b, m))).collect();
    (w, y)
}

/// Dual of the limit program.
pub fn build_dual(params: &LpParams) -> Result<LinearProgram, LpError> {
    params.validate_limit()?;
    let mut lp = LinearProgram::new("dual", Sense::Maximize);
    lp.params = params.header(&["ℓ0", "k0", "m0", "c"]);
    let w: Vec<usize> = params
        .ls()
        .map(|l| lp.add_var(format!("w{l}"), VarKind::NonNegative))
        .collect();
    let y: Vec<usize> = params
        .ms()
        .map(|m| lp.add_var(format!("y{m}"), VarKind::NonNegative))
        .collect();

    let mut objective = Vec::new();
    for (l, &j) in params.ls().zip(&w) {
        objective.push((j, int(-2) * tail_t(l, params.k0, &params.c)?));
    }
    for (m, &j) in params.ms().zip(&y) {
        objective.push((j, int(1) - rational_pow(&params.c, m as u32)));
    }
    lp.set_objective(objective, int(2));
    lp.add_constraint(
        "unit-sum",
        w.iter().map(|&j| (j, int(1))).collect(),
        Relation::Eq,
        int(1),
    );

    let index = belly_index(params.l0, params.k0);
    let rows: Vec<_> = index
        .par_iter()
        .map(|b| {
            let (cw, cy) = restriction_coeffs(b, params);
            let row: Vec<(usize, Rational)> = w
                .iter()
                .copied()
                .zip(cw)
                .chain(y.iter().copied().zip(cy))
                .collect();
            (belly_tag(b), row)
        })
        .collect();
    for (tag, row) in rows {
        lp.add_constraint(tag, row, Relation::Ge, int(0));
    }
    Ok(lp)
}
