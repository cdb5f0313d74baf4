use super::{same_algebra, Representation, Submodule};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};

/// A module homomorphism, one matrix per vertex (`dim N_v x dim M_v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    blocks: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(blocks: Vec<Matrix>) -> Self {
        ModuleMap { blocks }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        ModuleMap::new(
            source
                .dims()
                .iter()
                .zip(target.dims())
                .map(|(&m, &n)| Matrix::zeros(f, n, m))
                .collect(),
        )
    }

    pub fn identity(m: &Representation) -> Self {
        let f = m.field();
        ModuleMap::new(m.dims().iter().map(|&d| Matrix::identity(f, d)).collect())
    }

    /// Checks shapes and that the map commutes with every arrow.
    pub fn check(&self, source: &Representation, target: &Representation) -> Result<()> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if self.blocks.len() != source.dims().len() {
            return Err(Error::DimensionMismatch(
                "wrong number of vertex blocks".into(),
            ));
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != target.dims()[v] || b.cols() != source.dims()[v] {
                return Err(Error::DimensionMismatch(format!(
                    "block {v} has the wrong shape"
                )));
            }
        }
        for (i, a) in source.algebra().quiver().arrows().iter().enumerate() {
            let lhs = target.action(i).mul(&self.blocks[a.source]);
            let rhs = self.blocks[a.target].mul(source.action(i));
            if lhs != rhs {
                return Err(Error::InvalidArgument(format!(
                    "map does not commute with arrow `{}`",
                    a.name
                )));
            }
        }
        Ok(())
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap::new(
            self.blocks
                .iter()
                .zip(&first.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        )
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap::new(
            self.blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap::new(
            self.blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        ModuleMap::new(self.blocks.iter().map(|b| b.scale(s)).collect())
    }

    pub fn add_scaled(&mut self, s: &Scalar, other: &ModuleMap) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            a.add_scaled(s, b);
        }
    }

    /// `Σ c_i f_i`; `maps` must be nonempty.
    pub fn combination(coeffs: &[Scalar], maps: &[ModuleMap]) -> ModuleMap {
        let mut out = maps[0].scale(&coeffs[0].field().zero());
        for (c, m) in coeffs.iter().zip(maps) {
            if !c.is_zero() {
                out.add_scaled(c, m);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn kernel(&self) -> Submodule {
        Submodule::new(self.blocks.iter().map(Subspace::kernel_of).collect())
    }

    pub fn image(&self) -> Submodule {
        Submodule::new(self.blocks.iter().map(Subspace::image_of).collect())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    /// The entries of all blocks, row-major, vertex by vertex.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks
            .iter()
            .flat_map(|b| b.entries().iter().cloned())
            .collect()
    }

    /// Inverse of [`ModuleMap::flatten`].
    pub fn from_flat(field: FieldSpec, source: &[usize], target: &[usize], v: &[Scalar]) -> Self {
        let mut pos = 0;
        let blocks = source
            .iter()
            .zip(target)
            .map(|(&m, &n)| {
                let rows = (0..n)
                    .map(|r| v[pos + r * m..pos + (r + 1) * m].to_vec())
                    .collect();
                pos += n * m;
                Matrix::from_rows(field, m, rows)
            })
            .collect();
        ModuleMap::new(blocks)
    }

    /// The dual map `D N -> D M`.
    pub fn transpose(&self) -> ModuleMap {
        ModuleMap::new(self.blocks.iter().map(Matrix::transpose).collect())
    }

    /// `[f_1 ... f_k]: ⊕ M_i -> N`.
    pub fn hstack(maps: &[&ModuleMap]) -> ModuleMap {
        let n = maps[0].blocks.len();
        ModuleMap::new(
            (0..n)
                .map(|v| {
                    maps[1..]
                        .iter()
                        .fold(maps[0].blocks[v].clone(), |acc, m| acc.hstack(&m.blocks[v]))
                })
                .collect(),
        )
    }

    /// `(f_1, ..., f_k): M -> ⊕ N_i`.
    pub fn vstack(maps: &[&ModuleMap]) -> ModuleMap {
        let n = maps[0].blocks.len();
        ModuleMap::new(
            (0..n)
                .map(|v| {
                    maps[1..]
                        .iter()
                        .fold(maps[0].blocks[v].clone(), |acc, m| acc.vstack(&m.blocks[v]))
                })
                .collect(),
        )
    }

    pub fn block_diag(field: FieldSpec, maps: &[&ModuleMap]) -> ModuleMap {
        let n = maps[0].blocks.len();
        ModuleMap::new(
            (0..n)
                .map(|v| {
                    let bs: Vec<&Matrix> = maps.iter().map(|m| &m.blocks[v]).collect();
                    Matrix::block_diag(field, &bs)
                })
                .collect(),
        )
    }
}

/// Solutions `(x_g)` of the linear system describing `Hom(M, N)`.
///
/// A map is determined by the images `x_g ∈ N_{top(g)}` of the top generators
/// of `M`; they are constrained by the generators of the first syzygy.
fn hom_system(m: &Representation, n: &Representation) -> Result<(Vec<usize>, Matrix)> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field();
    let syz = m.syzygy();
    let mut offsets = Vec::with_capacity(syz.tops.len() + 1);
    let mut total = 0;
    for &t in &syz.tops {
        offsets.push(total);
        total += n.dims()[t];
    }
    offsets.push(total);
    let acts = n.basis_action();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (w, r) in &syz.relations {
        let mut block = Matrix::zeros(f, n.dims()[*w], total);
        for (k, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (g, b) = syz.cover_paths[*w][k];
            let nb = &acts[b];
            for i in 0..nb.rows() {
                for j in 0..nb.cols() {
                    let e = nb.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let mut cur = block.get(i, offsets[g] + j).clone();
                    cur.add_mul_assign(c, e);
                    block.set(i, offsets[g] + j, cur);
                }
            }
        }
        for i in 0..block.rows() {
            rows.push(block.row(i).to_vec());
        }
    }
    Ok((offsets, Matrix::from_rows(f, total, rows)))
}

/// The map `M -> N` sending top generator `g` to `x[offsets[g]..]`.
pub(crate) fn map_from_generator_images(
    m: &Representation,
    n: &Representation,
    offsets: &[usize],
    x: &[Scalar],
) -> ModuleMap {
    let f = m.field();
    let syz = m.syzygy();
    let acts = n.basis_action();
    let blocks = (0..m.dims().len())
        .map(|w| {
            let cols: Vec<Vec<Scalar>> = syz.cover_paths[w]
                .iter()
                .map(|&(g, b)| {
                    let t = syz.tops[g];
                    acts[b].mul_vec(&x[offsets[g]..offsets[g] + n.dims()[t]])
                })
                .collect();
            let big = Matrix::from_columns(f, n.dims()[w], &cols);
            big.mul(&syz.section[w])
        })
        .collect();
    ModuleMap::new(blocks)
}

/// A basis of `Hom_A(M, N)`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    let (offsets, system) = hom_system(m, n)?;
    Ok(system
        .kernel_basis()
        .iter()
        .map(|x| map_from_generator_images(m, n, &offsets, x))
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let (_, system) = hom_system(m, n)?;
    Ok(system.cols() - system.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::generators;
    use std::sync::Arc;

    #[test]
    fn homs_between_projectives() {
        let a = generators::brauer_tree(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        for u in 0..3 {
            for v in 0..3 {
                let pu = Representation::projective(Arc::clone(&a), u);
                let pv = Representation::projective(Arc::clone(&a), v);
                let hs = hom_basis(&pu, &pv).unwrap();
                // Hom(P_u, P_v) = e_u A e_v has the paths v -> u.
                assert_eq!(hs.len(), a.basis_between(v, u).len());
                for h in &hs {
                    h.check(&pu, &pv).unwrap();
                }
            }
        }
    }

    #[test]
    fn flatten_round_trip() {
        let f = FieldSpec::Rational;
        let m = ModuleMap::new(vec![Matrix::from_i64(f, &[&[1, 2], &[3, 4], &[5, 6]])]);
        assert_eq!(ModuleMap::from_flat(f, &[2], &[3], &m.flatten()), m);
    }
}
