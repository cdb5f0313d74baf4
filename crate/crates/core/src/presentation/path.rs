use std::fmt;

use super::quiver::Quiver;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

/// A path in a quiver, stored in traversal order.
///
/// The algebraic word `b a` (apply `a` first) is the list `[a, b]`. The empty
/// list at vertex `v` is the idempotent `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        let ar = q.arrow(a);
        Path {
            source: ar.source,
            target: ar.target,
            arrows: vec![a],
        }
    }

    /// A nonempty composable arrow sequence.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Result<Self> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty arrow list has no source".into()))?;
        if let Some(&bad) = arrows.iter().find(|&&a| a >= q.arrow_count()) {
            return Err(Error::InvalidArgument(format!(
                "arrow index {bad} out of range"
            )));
        }
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::InvalidArgument(format!(
                    "arrows `{}` and `{}` do not compose",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        Ok(Path {
            source: q.arrow(first).source,
            target: q.arrow(*arrows.last().unwrap()).target,
            arrows: arrows.to_vec(),
        })
    }

    /// Parses arrow names in traversal order.
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self> {
        let idx = names
            .iter()
            .map(|n| {
                q.arrow_index(n)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown arrow `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(q, &idx)
    }

    /// Assembles a path from parts already known to be consistent.
    pub(crate) fn from_parts(source: usize, target: usize, arrows: Vec<usize>) -> Self {
        Path {
            source,
            target,
            arrows,
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    // A path of length zero is a vertex idempotent, not an empty object; see `is_trivial`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`, when they compose.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }

    pub fn then_arrow(&self, q: &Quiver, a: usize) -> Option<Path> {
        let ar = q.arrow(a);
        if ar.source != self.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Some(Path {
            source: self.source,
            target: ar.target,
            arrows,
        })
    }

    /// The same path in the opposite quiver.
    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    /// Arrow names in traversal order.
    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).name.clone())
            .collect()
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> impl fmt::Display + 'a {
        PathDisplay {
            path: self,
            quiver: q,
        }
    }

    /// Sort key within a block of parallel paths: length, then arrow indices.
    pub(crate) fn key(&self) -> (usize, Vec<usize>) {
        (self.arrows.len(), self.arrows.clone())
    }
}

struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "e[{}]", self.quiver.vertices()[self.path.source]);
        }
        let names = self.path.names(self.quiver);
        write!(f, "[{}]", names.join(","))
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(Scalar, Path)>,
}

impl Relation {
    /// Collects like terms and drops zero coefficients.
    pub fn new(terms: Vec<(Scalar, Path)>) -> Self {
        let mut out: Vec<(Scalar, Path)> = Vec::new();
        for (c, p) in terms {
            match out.iter_mut().find(|(_, q)| *q == p) {
                Some((d, _)) => *d = d.add(&c),
                None => out.push((c, p)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Relation { terms: out }
    }

    /// The monomial relation `p = 0`.
    pub fn monomial(field: FieldSpec, p: Path) -> Self {
        Relation {
            terms: vec![(field.one(), p)],
        }
    }

    /// The binomial relation `p - q = 0`.
    pub fn binomial(field: FieldSpec, p: Path, q: Path) -> Self {
        Relation::new(vec![(field.one(), p), (field.from_i64(-1), q)])
    }

    pub fn terms(&self) -> &[(Scalar, Path)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn source(&self) -> Option<usize> {
        self.terms.first().map(|(_, p)| p.source)
    }

    pub fn target(&self) -> Option<usize> {
        self.terms.first().map(|(_, p)| p.target)
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(c, p)| format!("{c}*{}", p.display(q)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
