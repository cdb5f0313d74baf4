use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with labelled vertices and named arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver without checking it; see [`Quiver::diagnostics`].
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        Quiver { vertices, arrows }
    }

    /// Builds a quiver from `(name, source, target)` triples, rejecting inconsistent input.
    pub fn checked(vertices: Vec<String>, arrows: Vec<(String, usize, usize)>) -> Result<Self> {
        let q = Quiver::new(
            vertices,
            arrows
                .into_iter()
                .map(|(name, source, target)| Arrow {
                    name,
                    source,
                    target,
                })
                .collect(),
        );
        let d = q.diagnostics();
        if d.is_empty() {
            Ok(q)
        } else {
            Err(Error::InvalidPresentation(d))
        }
    }

    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if !seen.insert(v) {
                out.push(format!("vertex {i}: duplicate label `{v}`"));
            }
        }
        let mut names = HashSet::new();
        let n = self.vertices.len();
        for (i, a) in self.arrows.iter().enumerate() {
            if !names.insert(&a.name) {
                out.push(format!("arrow {i}: duplicate name `{}`", a.name));
            }
            if a.source >= n {
                out.push(format!(
                    "arrow {i} `{}`: source vertex {} out of range ({n} vertices)",
                    a.name, a.source
                ));
            }
            if a.target >= n {
                out.push(format!(
                    "arrow {i} `{}`: target vertex {} out of range ({n} vertices)",
                    a.name, a.target
                ));
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].target == v)
    }

    /// Number of arrows `u -> v`.
    pub fn arrows_between(&self, u: usize, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == u && a.target == v)
            .count()
    }

    /// Matrix of arrow counts, `m[u][v] = #(u -> v)`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Same vertices and arrow names, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Searches for a vertex bijection carrying `self` onto `other` with equal
    /// arrow multiplicities; returns `perm` with `perm[v]` the image of `v`.
    pub fn isomorphism_to(&self, other: &Quiver) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.arrow_count() != other.arrow_count() {
            return None;
        }
        let a = self.adjacency();
        let b = other.adjacency();
        let sig = |m: &Vec<Vec<usize>>, v: usize| {
            let mut out: Vec<usize> = (0..n).map(|w| m[v][w]).filter(|&c| c > 0).collect();
            let mut inn: Vec<usize> = (0..n).map(|w| m[w][v]).filter(|&c| c > 0).collect();
            out.sort_unstable();
            inn.sort_unstable();
            (m[v][v], out, inn)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(&a, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(&b, v)).collect();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        #[allow(clippy::too_many_arguments)]
        fn extend(
            v: usize,
            n: usize,
            a: &[Vec<usize>],
            b: &[Vec<usize>],
            sa: &[(usize, Vec<usize>, Vec<usize>)],
            sb: &[(usize, Vec<usize>, Vec<usize>)],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if v == n {
                return true;
            }
            for w in 0..n {
                if used[w] || sa[v] != sb[w] {
                    continue;
                }
                let consistent =
                    (0..v).all(|u| a[u][v] == b[perm[u]][w] && a[v][u] == b[w][perm[u]]);
                if !consistent {
                    continue;
                }
                perm[v] = w;
                used[w] = true;
                if extend(v + 1, n, a, b, sa, sb, perm, used) {
                    return true;
                }
                used[w] = false;
            }
            false
        }
        extend(0, n, &a, &b, &sa, &sb, &mut perm, &mut used).then_some(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, arrows: &[(usize, usize)]) -> Quiver {
        Quiver::checked(
            (0..n).map(|i| i.to_string()).collect(),
            arrows
                .iter()
                .enumerate()
                .map(|(i, &(s, t))| (format!("x{i}"), s, t))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn diagnostics_report_bad_indices() {
        let bad = Quiver::new(
            vec!["a".into(), "a".into()],
            vec![Arrow {
                name: "x".into(),
                source: 0,
                target: 5,
            }],
        );
        let d = bad.diagnostics();
        assert_eq!(d.len(), 2);
        assert!(d[1].contains("out of range"));
    }

    #[test]
    fn isomorphism_search() {
        let a = q(3, &[(0, 1), (1, 2)]);
        let b = q(3, &[(2, 0), (1, 2)]);
        let p = a.isomorphism_to(&b).unwrap();
        assert_eq!(p, vec![1, 2, 0]);
        assert!(a.isomorphism_to(&a.opposite()).is_some());
        let star = q(3, &[(0, 1), (0, 2)]);
        assert!(star.isomorphism_to(&star.opposite()).is_none());
    }
}
