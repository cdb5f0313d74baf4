//! Quivers with relations and the normal-form basis of `KQ/I`.

mod basis;
pub mod generators;
mod io;
mod path;
mod quiver;

use std::sync::Arc;

pub use basis::{compute_basis, AlgebraBasis};
pub use path::{Path, Relation};
pub use quiver::{Arrow, Quiver};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

/// Default bound on the length of paths explored by [`compute_basis`].
pub const DEFAULT_MAX_PATH_LENGTH: usize = 32;

/// Environment variable overriding [`DEFAULT_MAX_PATH_LENGTH`].
pub const MAX_PATH_LENGTH_VAR: &str = "ADRLAB_MAX_PATH_LEN";

/// The bound in effect: the environment override if it parses, else the default.
pub fn max_path_length_from_env() -> usize {
    std::env::var(MAX_PATH_LENGTH_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_PATH_LENGTH)
}

/// A quiver with an admissible set of relations over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    max_path_length: usize,
}

impl AlgebraPresentation {
    /// Validates and builds a presentation with the default path-length bound.
    pub fn new(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        let p = AlgebraPresentation {
            field,
            quiver,
            relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
            max_path_length: max_path_length_from_env(),
        };
        let d = p.diagnostics();
        if d.is_empty() {
            Ok(p)
        } else {
            Err(Error::InvalidPresentation(d))
        }
    }

    pub fn with_max_path_length(mut self, bound: usize) -> Self {
        self.max_path_length = bound;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn max_path_length(&self) -> usize {
        self.max_path_length
    }

    /// Every consistency and admissibility problem, with its location.
    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Err(e) = self.field.validate() {
            out.push(e.to_string());
        }
        out.extend(self.quiver.diagnostics());
        if !out.is_empty() {
            return out;
        }
        let q = &self.quiver;
        for (ri, r) in self.relations.iter().enumerate() {
            let (s, t) = (r.source().unwrap(), r.target().unwrap());
            for (ti, (c, p)) in r.terms().iter().enumerate() {
                if c.field() != self.field {
                    out.push(format!(
                        "relation {ri}, term {ti}: coefficient over the wrong field"
                    ));
                }
                if p.source() >= q.vertex_count() || p.target() >= q.vertex_count() {
                    out.push(format!("relation {ri}, term {ti}: vertex out of range"));
                    continue;
                }
                if p.arrows().iter().any(|&a| a >= q.arrow_count()) {
                    out.push(format!(
                        "relation {ri}, term {ti}: arrow index out of range"
                    ));
                    continue;
                }
                if p.len() < 2 {
                    out.push(format!(
                        "relation {ri}, term {ti}: path {} has length {}; non-admissible relation (every term needs length >= 2)",
                        p.display(q),
                        p.len()
                    ));
                }
                if !p.is_trivial() && Path::from_arrows(q, p.arrows()).ok().as_ref() != Some(p) {
                    out.push(format!(
                        "relation {ri}, term {ti}: arrows {:?} do not form a path",
                        p.names(q)
                    ));
                }
                if p.source() != s || p.target() != t {
                    out.push(format!(
                        "relation {ri}, term {ti}: path {} is not parallel to the first term",
                        p.display(q)
                    ));
                }
            }
        }
        out
    }

    /// Reverses every arrow and every relation path; an involution.
    pub fn opposite(&self) -> AlgebraPresentation {
        AlgebraPresentation {
            field: self.field,
            quiver: self.quiver.opposite(),
            relations: self.relations.iter().map(Relation::reversed).collect(),
            max_path_length: self.max_path_length,
        }
    }

    /// Parses a coefficient in this presentation's field.
    pub fn scalar(&self, text: &str) -> Result<Scalar> {
        self.field.parse_scalar(text)
    }

    /// The same presentation over another field, reparsing coefficients.
    pub fn over_field(&self, field: FieldSpec) -> Result<AlgebraPresentation> {
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Ok(Relation::new(
                    r.terms()
                        .iter()
                        .map(|(c, p)| Ok((field.parse_scalar(&c.to_string())?, p.clone())))
                        .collect::<Result<Vec<_>>>()?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(
            AlgebraPresentation::new(field, self.quiver.clone(), relations)?
                .with_max_path_length(self.max_path_length),
        )
    }

    pub fn into_basis(self) -> Result<Arc<AlgebraBasis>> {
        compute_basis(&self).map(Arc::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arrow_relation_is_rejected() {
        let q = Quiver::checked(vec!["1".into(), "2".into()], vec![("a".into(), 0, 1)]).unwrap();
        let f = FieldSpec::Rational;
        let r = Relation::monomial(f, Path::arrow(&q, 0));
        let err = AlgebraPresentation::new(f, q, vec![r]).unwrap_err();
        assert!(err.to_string().contains("non-admissible"));
    }

    #[test]
    fn opposite_is_an_involution() {
        let p = generators::brauer_tree(3, FieldSpec::Rational).unwrap();
        assert_eq!(p.opposite().opposite(), p);
    }
}
