//! A single in-memory representation shared by every LP family, with a plain text codec.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use num_traits::{Signed, Zero};

use super::LpError;
use crate::exactq::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "<=" => Some(Relation::Le),
            "=" => Some(Relation::Eq),
            ">=" => Some(Relation::Ge),
            _ => None,
        }
    }
}

/// Sign restriction on a variable. Nonnegativity is a property of the variable, not a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

/// A sparse row: `(variable index, coefficient)`, sorted by index, no zeros, no repeats.
pub type Row = Vec<(usize, Rational)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub tag: String,
    pub row: Row,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.row.iter().map(|(j, a)| a * &x[*j]).sum()
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        self.relation.holds(&self.lhs(x), &self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    pub sense: Sense,
    pub row: Row,
    pub constant: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    Violated(String),
}

/// Tag reported by [`LinearProgram::check_point`] for a negative nonnegative variable.
pub const NONNEGATIVITY: &str = "nonnegativity";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    /// Family label written in the text header (`1`, `2`, `3`, `dual`, ...).
    pub family: String,
    /// Ordered `key=value` pairs written after `params` in the header.
    pub params: Vec<(String, String)>,
    variables: Vec<Variable>,
    index: HashMap<String, usize>,
    objective: Objective,
    constraints: Vec<Constraint>,
}

/// Sorts by index, merges repeats and drops zeros.
pub fn normalize_row(mut terms: Vec<(usize, Rational)>) -> Row {
    terms.sort_by_key(|(j, _)| *j);
    let mut out: Row = Vec::with_capacity(terms.len());
    for (j, a) in terms {
        match out.last_mut() {
            Some((k, acc)) if *k == j => *acc += a,
            _ => out.push((j, a)),
        }
    }
    out.retain(|(_, a)| !a.is_zero());
    out
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.contains(|c: char| c.is_whitespace() || c == '=' || c == '*' || c == ':')
}

impl LinearProgram {
    pub fn new(family: impl Into<String>, sense: Sense) -> Self {
        LinearProgram {
            family: family.into(),
            params: Vec::new(),
            variables: Vec::new(),
            index: HashMap::new(),
            objective: Objective {
                sense,
                row: Vec::new(),
                constant: Rational::zero(),
            },
            constraints: Vec::new(),
        }
    }

    pub fn add_var(&mut self, name: impl Into<String>, kind: VarKind) -> usize {
        let name = name.into();
        assert!(valid_name(&name), "bad variable name {name:?}");
        assert!(!self.index.contains_key(&name), "duplicate variable {name}");
        let j = self.variables.len();
        self.index.insert(name.clone(), j);
        self.variables.push(Variable { name, kind });
        j
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn objective(&self) -> &Objective {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_objective(&mut self, terms: Vec<(usize, Rational)>, constant: Rational) {
        self.objective.row = normalize_row(terms);
        self.objective.constant = constant;
    }

    pub fn set_objective_row(&mut self, row: Row) {
        self.objective.row = normalize_row(row);
    }

    pub fn add_constraint(
        &mut self,
        tag: impl Into<String>,
        terms: Vec<(usize, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) {
        let tag = tag.into();
        assert!(valid_name(&tag), "bad constraint tag {tag:?}");
        debug_assert!(terms.iter().all(|(j, _)| *j < self.variables.len()));
        self.constraints.push(Constraint {
            tag,
            row: normalize_row(terms),
            relation,
            rhs,
        });
    }

    pub fn retain_constraints(&mut self, keep: impl FnMut(&Constraint) -> bool) {
        self.constraints.retain(keep);
    }

    pub fn constraints_mut(&mut self) -> &mut Vec<Constraint> {
        &mut self.constraints
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        let linear: Rational = self.objective.row.iter().map(|(j, a)| a * &x[*j]).sum();
        linear + &self.objective.constant
    }

    /// Exact feasibility of `x`; reports the first violated tag, sign restrictions first.
    pub fn check_point(&self, x: &[Rational]) -> Result<Feasibility, LpError> {
        if x.len() != self.variables.len() {
            return Err(LpError::Assignment {
                expected: self.variables.len(),
                got: x.len(),
            });
        }
        for (v, value) in self.variables.iter().zip(x) {
            if v.kind == VarKind::NonNegative && value.is_negative() {
                return Ok(Feasibility::Violated(NONNEGATIVITY.to_string()));
            }
        }
        for c in &self.constraints {
            if !c.holds(x) {
                return Ok(Feasibility::Violated(c.tag.clone()));
            }
        }
        Ok(Feasibility::Feasible)
    }

    /// The text form: header, `vars` line (free variables marked `*`), objective, constraints.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write!(out, "LP {} params", self.family).unwrap();
        for (k, v) in &self.params {
            write!(out, " {k}={v}").unwrap();
        }
        out.push_str("\nvars");
        for v in &self.variables {
            out.push(' ');
            out.push_str(&v.name);
            if v.kind == VarKind::Free {
                out.push('*');
            }
        }
        let sense = match self.objective.sense {
            Sense::Minimize => "min",
            Sense::Maximize => "max",
        };
        write!(
            out,
            "\nobjective {sense} {}:",
            format_rational(&self.objective.constant)
        )
        .unwrap();
        self.write_terms(&mut out, &self.objective.row);
        for c in &self.constraints {
            write!(
                out,
                "\n{} {} {}:",
                c.tag,
                c.relation.symbol(),
                format_rational(&c.rhs)
            )
            .unwrap();
            self.write_terms(&mut out, &c.row);
        }
        out.push('\n');
        out
    }

    fn write_terms(&self, out: &mut String, row: &Row) {
        for (j, a) in row {
            write!(out, " {}={}", self.variables[*j].name, format_rational(a)).unwrap();
        }
    }

    pub fn from_text(text: &str) -> Result<Self, LpError> {
        let err = |line: usize, msg: &str| LpError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());

        let (_, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
        let mut tokens = header.split_whitespace();
        if tokens.next() != Some("LP") {
            return Err(err(1, "header must start with `LP`"));
        }
        let family = tokens.next().ok_or_else(|| err(1, "missing family"))?;
        if tokens.next() != Some("params") {
            return Err(err(1, "expected `params`"));
        }
        let params = tokens
            .map(|t| {
                t.split_once('=')
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .ok_or_else(|| err(1, "params must be key=value"))
            })
            .collect::<Result<Vec<_>, _>>()?;

        let (ln, vars) = lines.next().ok_or_else(|| err(2, "missing vars line"))?;
        let mut names = vars.split_whitespace();
        if names.next() != Some("vars") {
            return Err(err(ln + 1, "expected `vars`"));
        }
        let mut placeholder = LinearProgram::new(family, Sense::Minimize);
        placeholder.params = params;
        for name in names {
            let (name, kind) = match name.strip_suffix('*') {
                Some(n) => (n, VarKind::Free),
                None => (name, VarKind::NonNegative),
            };
            if !valid_name(name) || placeholder.index.contains_key(name) {
                return Err(err(ln + 1, "bad or duplicate variable name"));
            }
            placeholder.add_var(name, kind);
        }
        let mut lp = placeholder;

        let (ln, obj) = lines
            .next()
            .ok_or_else(|| err(3, "missing objective line"))?;
        let (head, terms) = obj
            .split_once(':')
            .ok_or_else(|| err(ln + 1, "missing `:`"))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        let sense = match head.as_slice() {
            ["objective", "min", _] => Sense::Minimize,
            ["objective", "max", _] => Sense::Maximize,
            _ => return Err(err(ln + 1, "expected `objective min|max <constant>:`")),
        };
        let constant = parse_rational(head[2]).map_err(|e| err(ln + 1, &e.to_string()))?;
        lp.objective.sense = sense;
        let row = lp.parse_terms(terms).map_err(|m| err(ln + 1, &m))?;
        lp.set_objective(row, constant);

        for (ln, line) in lines {
            let (head, terms) = line
                .split_once(':')
                .ok_or_else(|| err(ln + 1, "missing `:`"))?;
            let head: Vec<&str> = head.split_whitespace().collect();
            let [tag, rel, rhs] = head.as_slice() else {
                return Err(err(ln + 1, "expected `<tag> <rel> <rhs>:`"));
            };
            let relation = Relation::parse(rel).ok_or_else(|| err(ln + 1, "unknown relation"))?;
            let rhs = parse_rational(rhs).map_err(|e| err(ln + 1, &e.to_string()))?;
            if !valid_name(tag) {
                return Err(err(ln + 1, "bad tag"));
            }
            let row = lp.parse_terms(terms).map_err(|m| err(ln + 1, &m))?;
            lp.add_constraint(*tag, row, relation, rhs);
        }
        Ok(lp)
    }

    fn parse_terms(&self, text: &str) -> Result<Vec<(usize, Rational)>, String> {
        text.split_whitespace()
            .map(|t| {
                let (name, coef) = t
                    .rsplit_once('=')
                    .ok_or_else(|| format!("bad term {t:?}"))?;
                let j = self
                    .var(name)
                    .ok_or_else(|| format!("unknown variable {name:?}"))?;
                let a = parse_rational(coef).map_err(|e| e.to_string())?;
                Ok((j, a))
            })
            .collect()
    }
}

impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
