use std::sync::Arc;

use super::map::{hom_basis, hom_dim};
use super::{same_algebra, ModuleMap, Representation, Submodule};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};

/// A projective cover `P0 -> M` together with its kernel.
#[derive(Debug)]
pub struct Syzygy {
    /// Vertex of each top generator; `P0 = ⊕_g P(tops[g])`.
    pub tops: Vec<usize>,
    /// Generator `g` as a vector of `M_{tops[g]}`.
    pub generators: Vec<Vec<Scalar>>,
    pub cover: Representation,
    pub projection: ModuleMap,
    /// Right inverse of the projection at each vertex (as linear maps).
    pub section: Vec<Matrix>,
    pub kernel: Representation,
    pub inclusion: ModuleMap,
    /// Coordinate `k` of `P0_w` is the basis path `cover_paths[w][k].1` on generator `.0`.
    pub cover_paths: Vec<Vec<(usize, usize)>>,
    /// Top generators of the kernel, as vectors of `P0_w`.
    pub relations: Vec<(usize, Vec<Scalar>)>,
}

/// Top generators: a basis of a complement of `J M` at every vertex.
fn top_generators(m: &Representation) -> Vec<(usize, Vec<Scalar>)> {
    let rad = m.radical();
    let mut out = Vec::new();
    for v in 0..m.dims().len() {
        for c in rad.space(v).complement() {
            out.push((v, m.unit(v, c)));
        }
    }
    out
}

fn right_inverse(field: FieldSpec, m: &Matrix) -> Matrix {
    // m has full row rank; invert the pivot columns.
    let r = m.rref();
    let cols: Vec<Vec<Scalar>> = r.pivots.iter().map(|&c| m.column(c)).collect();
    let square = Matrix::from_columns(field, m.rows(), &cols);
    let inv = square.inverse().expect("pivot columns are independent");
    let mut out = Matrix::zeros(field, m.cols(), m.rows());
    for (k, &c) in r.pivots.iter().enumerate() {
        for j in 0..m.rows() {
            out.set(c, j, inv.get(k, j).clone());
        }
    }
    out
}

impl Representation {
    /// The projective cover and first syzygy, computed once per module.
    pub fn syzygy(&self) -> Arc<Syzygy> {
        self.syzygy
            .get_or_init(|| Arc::new(self.compute_syzygy()))
            .clone()
    }

    fn compute_syzygy(&self) -> Syzygy {
        let f = self.field();
        let alg = self.algebra().clone();
        let n = self.dims().len();
        let gens = top_generators(self);
        let tops: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
        let mut cover_paths = vec![Vec::new(); n];
        for (g, &t) in tops.iter().enumerate() {
            for &b in alg.basis_from(t) {
                cover_paths[alg.path(b).target()].push((g, b));
            }
        }
        let mut proj_cache: Vec<Option<Representation>> = vec![None; n];
        let parts: Vec<Representation> = tops
            .iter()
            .map(|&t| {
                proj_cache[t]
                    .get_or_insert_with(|| Representation::projective(alg.clone(), t))
                    .clone()
            })
            .collect();
        let cover = Representation::direct_sum(alg.clone(), &parts.iter().collect::<Vec<_>>());
        let acts = self.basis_action();
        let projection = ModuleMap::new(
            (0..n)
                .map(|w| {
                    let cols: Vec<Vec<Scalar>> = cover_paths[w]
                        .iter()
                        .map(|&(g, b)| acts[b].mul_vec(&gens[g].1))
                        .collect();
                    Matrix::from_columns(f, self.dims()[w], &cols)
                })
                .collect(),
        );
        let section = projection
            .blocks()
            .iter()
            .map(|b| right_inverse(f, b))
            .collect();
        let ker = projection.kernel();
        let (kernel, inclusion) = ker.to_representation(&cover);
        let relations = top_generators(&kernel)
            .into_iter()
            .map(|(w, x)| (w, inclusion.block(w).mul_vec(&x)))
            .collect();
        Syzygy {
            tops,
            generators: gens.into_iter().map(|(_, x)| x).collect(),
            cover,
            projection,
            section,
            kernel,
            inclusion,
            cover_paths,
            relations,
        }
    }

    /// `Ω^k M`.
    pub fn syzygy_power(&self, k: usize) -> Representation {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.syzygy().kernel.clone();
        }
        cur
    }

    /// Projective dimension, searching at most `bound` syzygies.
    pub fn projective_dimension(&self, bound: usize) -> Result<Option<usize>> {
        if self.is_zero() {
            return Ok(None);
        }
        let mut cur = self.clone();
        for k in 0..=bound {
            let next = cur.syzygy().kernel.clone();
            if next.is_zero() {
                return Ok(Some(k));
            }
            cur = next;
        }
        Err(Error::PossiblyInfiniteGlobalDimension(bound))
    }

    /// Injective dimension, via the projective dimension of the dual.
    pub fn injective_dimension(&self, bound: usize) -> Result<Option<usize>> {
        self.dual()?.projective_dimension(bound)
    }

    /// An injective envelope `M -> I0`.
    pub fn injective_envelope(&self) -> Result<(Representation, ModuleMap)> {
        let d = self.dual()?;
        let s = d.syzygy();
        let i0 = s.cover.dual_over(self.algebra().clone());
        Ok((i0, s.projection.transpose()))
    }

    pub fn is_projective(&self) -> bool {
        self.syzygy().kernel.is_zero()
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.dual()?.is_projective())
    }

    /// Direct summands are counted by top generators.
    pub fn top_vertices(&self) -> Vec<usize> {
        self.syzygy().tops.clone()
    }
}

/// An element of `Ext^1(M, N)`, represented by a map `Ω M -> N`.
#[derive(Clone, Debug)]
pub struct ExtClass {
    pub syzygy: Arc<Syzygy>,
    pub map: ModuleMap,
}

fn restriction_space(m: &Representation, n: &Representation) -> Result<(Arc<Syzygy>, Subspace)> {
    let syz = m.syzygy();
    let f = m.field();
    let restricted: Vec<Vec<Scalar>> = hom_basis(&syz.cover, n)?
        .iter()
        .map(|h| h.compose(&syz.inclusion).flatten())
        .collect();
    let ambient: usize = syz
        .kernel
        .dims()
        .iter()
        .zip(n.dims())
        .map(|(a, b)| a * b)
        .sum();
    Ok((syz.clone(), Subspace::spanned_by(f, ambient, restricted)))
}

/// `dim Ext^1(M, N) = dim Hom(ΩM, N) - dim Hom(P0, N) + dim Hom(M, N)`.
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let syz = m.syzygy();
    let h_omega = hom_dim(&syz.kernel, n)?;
    let h_p0: usize = syz.tops.iter().map(|&t| n.dims()[t]).sum();
    let h_m = hom_dim(m, n)?;
    Ok(h_omega + h_m - h_p0)
}

/// Maps `Ω M -> N` whose classes form a basis of `Ext^1(M, N)`.
pub fn ext1_basis(m: &Representation, n: &Representation) -> Result<Vec<ExtClass>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (syz, mut span) = restriction_space(m, n)?;
    let mut out = Vec::new();
    for h in hom_basis(&syz.kernel, n)? {
        let flat = h.flatten();
        if !span.contains(&flat) {
            span = span.with_vectors([flat]);
            out.push(ExtClass {
                syzygy: syz.clone(),
                map: h,
            });
        }
    }
    Ok(out)
}

impl ExtClass {
    /// Whether the class vanishes, i.e. the map extends to the projective cover.
    pub fn is_zero(&self, n: &Representation) -> Result<bool> {
        let cover = &self.syzygy.cover;
        let restricted: Vec<Vec<Scalar>> = hom_basis(cover, n)?
            .iter()
            .map(|h| h.compose(&self.syzygy.inclusion).flatten())
            .collect();
        let ambient = self.map.flatten().len();
        Ok(Subspace::spanned_by(n.field(), ambient, restricted).contains(&self.map.flatten()))
    }

    /// The middle term `E` of `0 -> N -> E -> M -> 0`, with both maps.
    pub fn realize(&self, n: &Representation) -> Result<(Representation, ModuleMap, ModuleMap)> {
        let s = &self.syzygy;
        let (e, from_cover, from_n) = pushout(&s.cover, n, &s.inclusion, &self.map);
        // E -> M is induced by the projection P0 -> M and zero on N.
        let m_dims: Vec<usize> = s.projection.blocks().iter().map(Matrix::rows).collect();
        let f = n.field();
        let to_m = ModuleMap::new(
            (0..e.dims().len())
                .map(|v| {
                    // E_v is a quotient of P0_v ⊕ N_v; lift each basis vector and project.
                    let lift = from_cover.block(v).hstack(from_n.block(v));
                    let zero_n = Matrix::zeros(f, m_dims[v], n.dims()[v]);
                    let down = s.projection.block(v).hstack(&zero_n);
                    down.mul(&right_inverse(f, &lift))
                })
                .collect(),
        );
        Ok((e, from_n, to_m))
    }
}

/// Pushout of `A -> B` and `A -> N`: `(B ⊕ N) / {(ι x, -g x)}` with its two maps.
pub fn pushout(
    b: &Representation,
    n: &Representation,
    iota: &ModuleMap,
    g: &ModuleMap,
) -> (Representation, ModuleMap, ModuleMap) {
    let f = b.field();
    let sum = Representation::direct_sum(b.algebra().clone(), &[b, n]);
    let minus_one = f.from_i64(-1);
    let image = Submodule::new(
        (0..b.dims().len())
            .map(|v| {
                let stacked = iota.block(v).vstack(&g.block(v).scale(&minus_one));
                Subspace::image_of(&stacked)
            })
            .collect(),
    );
    let (e, proj) = image.quotient(&sum);
    let from_b = ModuleMap::new(
        (0..b.dims().len())
            .map(|v| {
                let (db, dn) = (b.dims()[v], n.dims()[v]);
                let inc = Matrix::identity(f, db).vstack(&Matrix::zeros(f, dn, db));
                proj.block(v).mul(&inc)
            })
            .collect(),
    );
    let from_n = ModuleMap::new(
        (0..b.dims().len())
            .map(|v| {
                let (db, dn) = (b.dims()[v], n.dims()[v]);
                let inc = Matrix::zeros(f, db, dn).vstack(&Matrix::identity(f, dn));
                proj.block(v).mul(&inc)
            })
            .collect(),
    );
    (e, from_b, from_n)
}

/// The universal extension `0 -> X -> Y -> D^m -> 0`, `m = dim Ext^1(D, X)`.
///
/// Afterwards `Ext^1(D, Y) = 0` whenever `Ext^1(D, D) = 0`.
pub fn universal_extension(
    x: &Representation,
    d: &Representation,
) -> Result<(Representation, usize)> {
    let classes = ext1_basis(d, x)?;
    let m = classes.len();
    if m == 0 {
        return Ok((x.clone(), 0));
    }
    let f = x.field();
    let s = d.syzygy();
    let cover = s.cover.power(m);
    let iota = ModuleMap::block_diag(f, &vec![&s.inclusion; m]);
    let maps: Vec<&ModuleMap> = classes.iter().map(|c| &c.map).collect();
    let g = ModuleMap::hstack(&maps);
    let (y, _, _) = pushout(&cover, x, &iota, &g);
    Ok((y, m))
}

/// Global dimension as the maximum projective dimension of the simples.
pub fn global_dimension(
    algebra: &Arc<crate::presentation::AlgebraBasis>,
    bound: usize,
) -> Result<usize> {
    let mut best = 0;
    for v in 0..algebra.vertex_count() {
        let s = Representation::simple(algebra.clone(), v);
        best = best.max(s.projective_dimension(bound)?.unwrap_or(0));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::generators;

    #[test]
    fn linear_quiver_is_hereditary() {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        assert_eq!(global_dimension(&a, 10).unwrap(), 1);
        let s2 = Representation::simple(a.clone(), 1);
        let s1 = Representation::simple(a.clone(), 0);
        // Arrow 2 -> 1 gives Ext^1(L(2), L(1)) = K.
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 1);
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 0);
        let classes = ext1_basis(&s2, &s1).unwrap();
        let (e, i, p) = classes[0].realize(&s1).unwrap();
        assert_eq!(e.dims(), &[1, 1, 0]);
        i.check(&s1, &e).unwrap();
        p.check(&e, &s2).unwrap();
        assert!(i.is_injective() && p.is_surjective());
        assert!(!classes[0].is_zero(&s1).unwrap());
        // The non-split extension is the uniserial P(2).
        assert_eq!(e.top_dims(), vec![0, 1, 0]);
    }

    #[test]
    fn self_injective_has_infinite_global_dimension() {
        let a = generators::brauer_tree(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        assert!(matches!(
            global_dimension(&a, 6),
            Err(Error::PossiblyInfiniteGlobalDimension(6))
        ));
        for v in 0..3 {
            let p = Representation::projective(a.clone(), v);
            assert!(p.is_injective().unwrap());
        }
    }

    #[test]
    fn universal_extension_kills_ext() {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let s1 = Representation::simple(a.clone(), 0);
        let s2 = Representation::simple(a.clone(), 1);
        let (y, m) = universal_extension(&s1, &s2).unwrap();
        assert_eq!(m, 1);
        assert_eq!(ext1_dim(&s2, &y).unwrap(), 0);
        let (i0, j) = s1.injective_envelope().unwrap();
        j.check(&s1, &i0).unwrap();
        assert_eq!(i0.dim(), 3);
    }
}
