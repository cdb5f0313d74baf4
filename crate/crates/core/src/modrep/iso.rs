use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::map::{hom_basis, hom_dim};
use super::{same_algebra, ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};

/// Exhaustive search is used over `F_p` while `p^k` stays below this.
const EXHAUSTIVE_LIMIT: u64 = 4096;
const RANDOM_TRIALS: usize = 64;

fn seeded() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_ad12)
}

/// Whether `End(M)` is local with residue field `K`, via the nilpotent parts
/// of a basis generating a nilpotent ideal.
fn is_split_local(m: &Representation, ends: &[ModuleMap]) -> Result<bool> {
    let f = m.field();
    let n = m.dim();
    let mut nilparts = Vec::with_capacity(ends.len());
    for e in ends {
        let big = Matrix::block_diag(f, &e.blocks().iter().collect::<Vec<_>>());
        let Some(lambda) = big.unique_eigenvalue()? else {
            return Ok(false);
        };
        nilparts.push(e.sub(&ModuleMap::identity(m).scale(&lambda)));
    }
    let ambient = nilparts.first().map_or(0, |x| x.flatten().len());
    let basis_of = |maps: &[ModuleMap]| -> Vec<ModuleMap> {
        let mut span = Subspace::zero(f, ambient);
        let mut out = Vec::new();
        for x in maps {
            let flat = x.flatten();
            if !span.contains(&flat) {
                span = span.with_vectors([flat]);
                out.push(x.clone());
            }
        }
        out
    };
    let rad = basis_of(&nilparts);
    if rad.len() + 1 != ends.len() {
        return Ok(false);
    }
    // The algebra generated by `rad` must be nilpotent: products of n of them vanish.
    let mut power = rad.clone();
    for _ in 0..n {
        if power.is_empty() {
            return Ok(true);
        }
        let prods: Vec<ModuleMap> = power
            .iter()
            .flat_map(|p| rad.iter().map(move |r| p.compose(r)))
            .filter(|x| !x.is_zero())
            .collect();
        power = basis_of(&prods);
    }
    Ok(power.is_empty())
}

fn total_matrix(m: &Representation, e: &ModuleMap) -> Matrix {
    Matrix::block_diag(m.field(), &e.blocks().iter().collect::<Vec<_>>())
}

/// An endomorphism that is neither nilpotent nor invertible splits `M` (Fitting).
fn splits(m: &Representation, e: &ModuleMap) -> Result<bool> {
    let big = total_matrix(m, e);
    if !big.is_invertible() && !big.is_nilpotent() {
        return Ok(true);
    }
    let Some(roots) = big.charpoly()?.roots() else {
        return Ok(false);
    };
    let f = m.field();
    for r in roots {
        let shifted = big.sub(&Matrix::scalar(f, big.rows(), &r));
        if !shifted.is_nilpotent() {
            return Ok(true);
        }
    }
    Ok(false)
}

impl Representation {
    /// A basis of `End(M)` with the identity first.
    pub fn endomorphisms(&self) -> Result<Vec<ModuleMap>> {
        let f = self.field();
        let id = ModuleMap::identity(self);
        let ambient = id.flatten().len();
        let mut span = Subspace::spanned_by(f, ambient, vec![id.flatten()]);
        let mut out = vec![id];
        for h in hom_basis(self, self)? {
            let flat = h.flatten();
            if !span.contains(&flat) {
                span = span.with_vectors([flat]);
                out.push(h);
            }
        }
        Ok(out)
    }

    /// Whether `End(M)` is local with residue field `K`.
    pub fn has_split_local_endomorphisms(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        is_split_local(self, &self.endomorphisms()?)
    }

    /// Decides indecomposability.
    ///
    /// Succeeds when `End(M)` is split local (indecomposable) or when some
    /// endomorphism exhibits a decomposition. Otherwise `End(M)/rad` may be a
    /// proper division algebra over `K` and the answer is [`Error::NonSplit`].
    pub fn is_indecomposable(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let ends = self.endomorphisms()?;
        if is_split_local(self, &ends)? {
            return Ok(true);
        }
        for e in &ends {
            if splits(self, e)? {
                return Ok(false);
            }
        }
        let f = self.field();
        let mut rng = seeded();
        for _ in 0..8 {
            let coeffs: Vec<Scalar> = ends.iter().map(|_| f.random(&mut rng, 7)).collect();
            if splits(self, &ModuleMap::combination(&coeffs, &ends))? {
                return Ok(false);
            }
        }
        Err(Error::NonSplit(format!(
            "End of module {} is not local with residue field {}, and no splitting endomorphism was found",
            self.describe(),
            f
        )))
    }

    /// Decides `M ≅ N`.
    ///
    /// Negative answers come from invariants or, when one side has a split
    /// local endomorphism ring, from the composition pairing. Positive answers
    /// are witnessed by an explicit isomorphism.
    pub fn is_isomorphic(&self, other: &Representation) -> Result<bool> {
        Ok(self.find_isomorphism(other)?.is_some())
    }

    /// An explicit isomorphism `M -> N`, or `None` when none exists.
    pub fn find_isomorphism(&self, other: &Representation) -> Result<Option<ModuleMap>> {
        if !same_algebra(self.algebra(), other.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if self.dims() != other.dims() {
            return Ok(None);
        }
        if self.is_zero() {
            return Ok(Some(ModuleMap::identity(self)));
        }
        if self.top_dims() != other.top_dims() || self.socle_dims() != other.socle_dims() {
            return Ok(None);
        }
        let forward = hom_basis(self, other)?;
        let d = forward.len();
        if d != hom_dim(other, self)? || d != hom_dim(self, self)? || d != hom_dim(other, other)? {
            return Ok(None);
        }
        if let Some(found) = forward.iter().find(|h| h.is_isomorphism()) {
            return Ok(Some(found.clone()));
        }
        let f = self.field();
        // Composition pairing: with End(N) split local, N | M iff some g∘h is not nilpotent.
        let certified_no = if other.has_split_local_endomorphisms()? {
            let back = hom_basis(other, self)?;
            let all_nilpotent = forward.iter().all(|h| {
                back.iter()
                    .all(|g| total_matrix(other, &h.compose(g)).is_nilpotent())
            });
            if !all_nilpotent {
                // Some h∘g is invertible on N, so N is a summand of M of the same dimension.
                for h in &forward {
                    for g in &back {
                        if !total_matrix(other, &h.compose(g)).is_nilpotent() {
                            let hg = h.compose(g);
                            let big = total_matrix(other, &hg);
                            if big.is_invertible() {
                                return Ok(Some(h.clone()));
                            }
                        }
                    }
                }
            }
            all_nilpotent
        } else {
            false
        };
        if certified_no {
            return Ok(None);
        }
        if let Some(elements) = f.elements() {
            let p = elements.len() as u64;
            if p.checked_pow(d as u32)
                .is_some_and(|n| n <= EXHAUSTIVE_LIMIT)
            {
                let mut idx = vec![0usize; d];
                loop {
                    let coeffs: Vec<Scalar> = idx.iter().map(|&i| elements[i].clone()).collect();
                    let h = ModuleMap::combination(&coeffs, &forward);
                    if h.is_isomorphism() {
                        return Ok(Some(h));
                    }
                    let mut k = 0;
                    while k < d {
                        idx[k] += 1;
                        if idx[k] < elements.len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                    if k == d {
                        return Ok(None);
                    }
                }
            }
        }
        let mut rng = seeded();
        for _ in 0..RANDOM_TRIALS {
            let coeffs: Vec<Scalar> = forward
                .iter()
                .map(|_| f.random(&mut rng, 1 << 20))
                .collect();
            let h = ModuleMap::combination(&coeffs, &forward);
            if h.is_isomorphism() {
                return Ok(Some(h));
            }
        }
        Err(Error::Inconclusive(format!(
            "no isomorphism found between modules {} after {RANDOM_TRIALS} random trials",
            self.describe()
        )))
    }

    /// Some injective homomorphism `M -> N`, searched among random combinations.
    pub fn find_injective_map(&self, other: &Representation) -> Result<Option<ModuleMap>> {
        let basis = hom_basis(self, other)?;
        if self.is_zero() {
            return Ok(Some(ModuleMap::zero(self, other)));
        }
        if basis.is_empty() {
            return Ok(None);
        }
        if let Some(h) = basis.iter().find(|h| h.is_injective()) {
            return Ok(Some(h.clone()));
        }
        let f = self.field();
        let mut rng = seeded();
        for _ in 0..RANDOM_TRIALS {
            let coeffs: Vec<Scalar> = basis.iter().map(|_| f.random(&mut rng, 1 << 20)).collect();
            let h = ModuleMap::combination(&coeffs, &basis);
            if h.is_injective() {
                return Ok(Some(h));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;

    #[test]
    fn projectives_are_indecomposable() {
        let a = generators::brauer_tree(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        for v in 0..3 {
            let p = Representation::projective(a.clone(), v);
            assert!(p.is_indecomposable().unwrap());
            let i = Representation::injective(a.clone(), v).unwrap();
            assert!(p.is_isomorphic(&i).unwrap());
        }
        let p0 = Representation::projective(a.clone(), 0);
        let p1 = Representation::projective(a.clone(), 1);
        let sum = Representation::direct_sum(a.clone(), &[&p0, &p1]);
        assert!(!sum.is_indecomposable().unwrap());
        assert!(!p0.is_isomorphic(&p1).unwrap());
    }

    #[test]
    fn isomorphism_over_small_prime_field() {
        let f = FieldSpec::prime(3).unwrap();
        let a = generators::linear(3, f).unwrap().into_basis().unwrap();
        let s = Representation::simple(a.clone(), 1);
        let p = Representation::projective(a.clone(), 1);
        let x = Representation::direct_sum(a.clone(), &[&s, &p]);
        let y = Representation::direct_sum(a.clone(), &[&p, &s]);
        assert!(x.is_isomorphic(&y).unwrap());
        let s0 = Representation::simple(a.clone(), 0);
        let z = Representation::direct_sum(a.clone(), &[&s0, &s, &s]);
        assert!(!x.is_isomorphic(&z).unwrap());
    }
}
