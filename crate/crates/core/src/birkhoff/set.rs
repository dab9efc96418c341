use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::perm::{all_permutations, Permutation};
use super::BirkhoffError;
use crate::exactq::{factorial, Rational};

/// A duplicate-free set of permutations of one ground set, in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermSet {
    n: usize,
    elements: Vec<Permutation>,
}

impl PermSet {
    pub fn new(n: usize, elements: Vec<Permutation>) -> Result<Self, BirkhoffError> {
        let mut seen = HashSet::with_capacity(elements.len());
        for p in &elements {
            if p.n() != n {
                return Err(BirkhoffError::GroundSetMismatch {
                    expected: n,
                    got: p.n(),
                });
            }
            if !seen.insert(p) {
                return Err(BirkhoffError::Duplicate(p.to_string()));
            }
        }
        Ok(PermSet { n, elements })
    }

    /// Like [`PermSet::new`] but sorts lexicographically and drops repeats.
    pub fn from_unsorted(n: usize, mut elements: Vec<Permutation>) -> Result<Self, BirkhoffError> {
        elements.sort_unstable();
        elements.dedup();
        PermSet::new(n, elements)
    }

    pub fn symmetric_group(n: usize) -> Self {
        PermSet {
            n,
            elements: all_permutations(n),
        }
    }

    pub fn singleton(p: Permutation) -> Self {
        PermSet {
            n: p.n(),
            elements: vec![p],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// `|A| / n!`.
    pub fn density(&self) -> Rational {
        Rational::new(BigInt::from(self.len()), factorial(self.n as u64))
    }

    pub fn is_sign_homogeneous(&self) -> bool {
        self.elements.windows(2).all(|w| w[0].sign() == w[1].sign())
    }

    pub(crate) fn require_nonempty(&self) -> Result<(), BirkhoffError> {
        if self.is_empty() {
            Err(BirkhoffError::Empty)
        } else {
            Ok(())
        }
    }

    /// First line `n`, then one permutation per line as 1-based images.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for p in &self.elements {
            writeln!(out, "{p}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, BirkhoffError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(BirkhoffError::Parse {
            line: 1,
            msg: "missing n".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| BirkhoffError::Parse {
            line: 1,
            msg: format!("bad n {first:?}"),
        })?;
        let mut elements = Vec::new();
        for (i, line) in lines {
            elements.push(parse_images(line, i + 1)?);
        }
        PermSet::new(n, elements)
    }
}

fn parse_images(text: &str, line: usize) -> Result<Permutation, BirkhoffError> {
    let images = text
        .split_whitespace()
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(BirkhoffError::Parse {
                line,
                msg: format!("bad image {t:?}"),
            }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::new(images).map_err(|e| BirkhoffError::Parse {
        line,
        msg: e.to_string(),
    })
}

/// A total coloring of `S_n`, indexed by lexicographic rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    n: usize,
    colors: Vec<u64>,
    palette: usize,
}

impl Coloring {
    pub fn new(n: usize, colors: Vec<u64>) -> Result<Self, BirkhoffError> {
        let expected = (1..=n).product::<usize>();
        if colors.len() != expected {
            return Err(BirkhoffError::Range(format!(
                "coloring of S_{n} needs {expected} entries, got {}",
                colors.len()
            )));
        }
        let palette = colors.iter().collect::<HashSet<_>>().len();
        Ok(Coloring { n, colors, palette })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color(&self, p: &Permutation) -> u64 {
        self.colors[p.rank()]
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    /// First line `n`, then `images : color` per permutation in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (r, c) in self.colors.iter().enumerate() {
            writeln!(out, "{} : {c}", Permutation::unrank(self.n, r)).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, BirkhoffError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(BirkhoffError::Parse {
            line: 1,
            msg: "missing n".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| BirkhoffError::Parse {
            line: 1,
            msg: format!("bad n {first:?}"),
        })?;
        let total = (1..=n).product::<usize>();
        let mut colors = vec![None; total];
        for (i, line) in lines {
            let bad = |msg: String| BirkhoffError::Parse { line: i + 1, msg };
            let (perm, color) = line
                .split_once(':')
                .ok_or_else(|| bad("expected `images : color`".into()))?;
            let p = parse_images(perm, i + 1)?;
            if p.n() != n {
                return Err(bad(format!("permutation of {} points in S_{n}", p.n())));
            }
            let c: u64 = color
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad color {color:?}")))?;
            colors[p.rank()] = Some(c);
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(r, c)| {
                c.ok_or_else(|| {
                    BirkhoffError::Range(format!("no color for {}", Permutation::unrank(n, r)))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Coloring::new(n, colors)
    }
}
