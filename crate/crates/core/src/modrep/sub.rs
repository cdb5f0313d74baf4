use super::{hom_basis, ModuleMap, Representation};
use crate::error::Result;
use crate::linalg::{Matrix, Scalar, Subspace};

/// A submodule, given by its subspace at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    spaces: Vec<Subspace>,
}

impl Submodule {
    pub fn new(spaces: Vec<Subspace>) -> Self {
        Submodule { spaces }
    }

    pub fn zero(m: &Representation) -> Self {
        let f = m.field();
        Submodule::new(m.dims().iter().map(|&d| Subspace::zero(f, d)).collect())
    }

    pub fn full(m: &Representation) -> Self {
        let f = m.field();
        Submodule::new(m.dims().iter().map(|&d| Subspace::full(f, d)).collect())
    }

    /// The submodule generated by `gens[v] ⊆ M_v`.
    pub fn generated(m: &Representation, gens: &[Vec<Vec<Scalar>>]) -> Self {
        let mut vecs: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); m.dims().len()];
        for (v, xs) in gens.iter().enumerate() {
            for x in xs {
                for (w, ys) in m.orbit(v, x).into_iter().enumerate() {
                    vecs[w].extend(ys);
                }
            }
        }
        let f = m.field();
        Submodule::new(
            vecs.into_iter()
                .zip(m.dims())
                .map(|(vs, &d)| Subspace::spanned_by(f, d, vs))
                .collect(),
        )
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn space(&self, v: usize) -> &Subspace {
        &self.spaces[v]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(Subspace::is_zero)
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.contains_subspace(b))
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule::new(
            self.spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| a.sum(b))
                .collect(),
        )
    }

    pub fn intersect(&self, other: &Submodule) -> Submodule {
        Submodule::new(
            self.spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| a.intersect(b))
                .collect(),
        )
    }

    /// `self ⊆ outer` in the coordinates of `outer` as a module (see [`Self::to_representation`]).
    pub fn within(&self, outer: &Submodule) -> Submodule {
        Submodule::new(
            self.spaces
                .iter()
                .zip(&outer.spaces)
                .map(|(s, o)| {
                    let coords = s
                        .basis()
                        .iter()
                        .map(|x| o.coords(x).expect("not contained in the outer submodule"))
                        .collect();
                    Subspace::spanned_by(s.field(), o.dim(), coords)
                })
                .collect(),
        )
    }

    /// `outer / self` as a module, for `self ⊆ outer ⊆ m`.
    pub fn subquotient(&self, outer: &Submodule, m: &Representation) -> Representation {
        let (o, _) = outer.to_representation(m);
        self.within(outer).quotient(&o).0
    }

    /// Whether the subspaces are stable under every arrow of `m`.
    pub fn is_submodule_of(&self, m: &Representation) -> bool {
        m.algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(i, a)| {
                self.spaces[a.source]
                    .basis()
                    .iter()
                    .all(|x| self.spaces[a.target].contains(&m.action(i).mul_vec(x)))
            })
    }

    /// The submodule as a module, with its inclusion into `m`.
    pub fn to_representation(&self, m: &Representation) -> (Representation, ModuleMap) {
        let f = m.field();
        let dims = self.dims();
        let action = m
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let (s, t) = (&self.spaces[a.source], &self.spaces[a.target]);
                let cols: Vec<Vec<Scalar>> = s
                    .basis()
                    .iter()
                    .map(|x| t.coords(&m.action(i).mul_vec(x)).expect("not a submodule"))
                    .collect();
                Matrix::from_columns(f, t.dim(), &cols)
            })
            .collect();
        let inclusion = ModuleMap::new(self.spaces.iter().map(Subspace::basis_matrix).collect());
        (
            Representation::new_unchecked(m.algebra().clone(), dims, action),
            inclusion,
        )
    }

    /// `m / self`, with the projection from `m`.
    pub fn quotient(&self, m: &Representation) -> (Representation, ModuleMap) {
        let f = m.field();
        let comps: Vec<Vec<usize>> = self.spaces.iter().map(Subspace::complement).collect();
        let dims: Vec<usize> = comps.iter().map(Vec::len).collect();
        let action = m
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let t = &self.spaces[a.target];
                let cols: Vec<Vec<Scalar>> = comps[a.source]
                    .iter()
                    .map(|&c| t.quotient_coords(&m.action(i).column(c)))
                    .collect();
                Matrix::from_columns(f, dims[a.target], &cols)
            })
            .collect();
        let projection = ModuleMap::new(
            self.spaces
                .iter()
                .zip(m.dims())
                .map(|(s, &d)| {
                    let cols: Vec<Vec<Scalar>> = (0..d)
                        .map(|j| s.quotient_coords(&m.unit_vec(d, j)))
                        .collect();
                    Matrix::from_columns(f, s.complement().len(), &cols)
                })
                .collect(),
        );
        (
            Representation::new_unchecked(m.algebra().clone(), dims, action),
            projection,
        )
    }

    /// Image of the submodule under a map.
    pub fn map(&self, f: &ModuleMap) -> Submodule {
        Submodule::new(
            self.spaces
                .iter()
                .zip(f.blocks())
                .map(|(s, b)| s.map(b))
                .collect(),
        )
    }

    /// `f^{-1}(target)`.
    pub fn preimage(f: &ModuleMap, target: &Submodule) -> Submodule {
        Submodule::new(
            f.blocks()
                .iter()
                .zip(&target.spaces)
                .map(|(b, t)| Subspace::preimage(b, t))
                .collect(),
        )
    }
}

impl Representation {
    pub(crate) fn unit_vec(&self, d: usize, j: usize) -> Vec<Scalar> {
        crate::linalg::unit(self.field(), d, j)
    }

    /// `J U` for a submodule `U`: the sum of the images of `U` under the arrows.
    pub fn radical_of(&self, u: &Submodule) -> Submodule {
        let f = self.field();
        let mut vecs: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); self.dims().len()];
        for (i, a) in self.algebra().quiver().arrows().iter().enumerate() {
            for x in u.space(a.source).basis() {
                vecs[a.target].push(self.action(i).mul_vec(x));
            }
        }
        Submodule::new(
            vecs.into_iter()
                .zip(self.dims())
                .map(|(vs, &d)| Subspace::spanned_by(f, d, vs))
                .collect(),
        )
    }

    pub fn radical(&self) -> Submodule {
        self.radical_of(&Submodule::full(self))
    }

    /// `M ⊇ J M ⊇ J^2 M ⊇ ... ⊇ 0`, ending with the zero submodule.
    pub fn radical_series(&self) -> Vec<Submodule> {
        let mut out = vec![Submodule::full(self)];
        while !out.last().unwrap().is_zero() {
            let next = self.radical_of(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_series().len() - 1
    }

    /// Whether every radical layer is simple, i.e. `M` is uniserial.
    pub fn is_uniserial(&self) -> bool {
        self.radical_series()
            .windows(2)
            .all(|w| w[0].dim() - w[1].dim() == 1)
    }

    /// Dimension vector of `M / J M`.
    pub fn top_dims(&self) -> Vec<usize> {
        let r = self.radical();
        self.dims()
            .iter()
            .zip(r.dims())
            .map(|(d, r)| d - r)
            .collect()
    }

    pub fn socle(&self) -> Submodule {
        self.socle_step(&Submodule::zero(self))
    }

    /// `soc^{k+1}` from `soc^k`: vectors sent into `soc^k` by every arrow.
    fn socle_step(&self, prev: &Submodule) -> Submodule {
        let q = self.algebra().quiver();
        let f = self.field();
        Submodule::new(
            (0..self.dims().len())
                .map(|v| {
                    q.arrows_from(v)
                        .fold(Subspace::full(f, self.dims()[v]), |acc, a| {
                            let t = q.arrow(a).target;
                            acc.intersect(&Subspace::preimage(self.action(a), prev.space(t)))
                        })
                })
                .collect(),
        )
    }

    /// `0 ⊆ soc M ⊆ soc^2 M ⊆ ... ⊆ M`, starting with the zero submodule.
    pub fn socle_series(&self) -> Vec<Submodule> {
        let mut out = vec![Submodule::zero(self)];
        while out.last().unwrap().dim() < self.dim() {
            let next = self.socle_step(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle().dims()
    }

    /// Trace of `⊕_{v ∈ vertices} P(v)`: the submodule generated by those `M_v`.
    pub fn trace_of_projectives(&self, vertices: &[usize]) -> Submodule {
        let mut gens = vec![Vec::new(); self.dims().len()];
        for &v in vertices {
            gens[v] = (0..self.dims()[v]).map(|j| self.unit(v, j)).collect();
        }
        Submodule::generated(self, &gens)
    }

    /// `trace(Θ, M)`: the sum of the images of all maps `θ -> M`, `θ ∈ Θ`.
    pub fn trace(&self, thetas: &[&Representation]) -> Result<Submodule> {
        let mut acc = Submodule::zero(self);
        for t in thetas {
            for h in hom_basis(t, self)? {
                acc = acc.sum(&h.image());
            }
        }
        Ok(acc)
    }

    /// `reject(M, Θ)`: the intersection of the kernels of all maps `M -> θ`, `θ ∈ Θ`.
    pub fn reject(&self, thetas: &[&Representation]) -> Result<Submodule> {
        let mut acc = Submodule::full(self);
        for t in thetas {
            for h in hom_basis(self, t)? {
                acc = acc.intersect(&h.kernel());
            }
        }
        Ok(acc)
    }

    /// The largest submodule whose composition factors all lie in `allowed`.
    pub fn largest_submodule_supported_in(&self, allowed: &[bool]) -> Submodule {
        let f = self.field();
        let q = self.algebra().quiver();
        let mut cur = Submodule::new(
            self.dims()
                .iter()
                .enumerate()
                .map(|(v, &d)| {
                    if allowed[v] {
                        Subspace::full(f, d)
                    } else {
                        Subspace::zero(f, d)
                    }
                })
                .collect(),
        );
        loop {
            let next = Submodule::new(
                (0..self.dims().len())
                    .map(|v| {
                        q.arrows_from(v).fold(cur.space(v).clone(), |acc, a| {
                            let t = q.arrow(a).target;
                            acc.intersect(&Subspace::preimage(self.action(a), cur.space(t)))
                        })
                    })
                    .collect(),
            );
            if next.dim() == cur.dim() {
                return next;
            }
            cur = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::presentation::generators;

    #[test]
    fn radical_and_socle_of_projectives() {
        let a = generators::brauer_tree(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let p = Representation::projective(a.clone(), 1);
        assert_eq!(p.loewy_length(), 3);
        assert_eq!(p.top_dims(), vec![0, 1, 0]);
        assert_eq!(p.socle_dims(), vec![0, 1, 0]);
        let (rad, inc) = p.radical().to_representation(&p);
        assert_eq!(rad.dims(), &[1, 1, 1]);
        inc.check(&rad, &p).unwrap();
        let (top, proj) = p.radical().quotient(&p);
        assert_eq!(top.dims(), &[0, 1, 0]);
        proj.check(&p, &top).unwrap();
        let series = p.socle_series();
        assert_eq!(series.len(), 4);
    }

    #[test]
    fn largest_submodule_with_given_factors() {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        // P(3) is uniserial 3 > 2 > 1, with socle L(1).
        let p = Representation::projective(a, 2);
        let u = p.largest_submodule_supported_in(&[true, true, false]);
        assert_eq!(u.dims(), vec![1, 1, 0]);
        let u = p.largest_submodule_supported_in(&[false, true, true]);
        assert!(u.is_zero());
    }

    #[test]
    fn trace_and_reject_match_special_cases() {
        let a = generators::linear(3, FieldSpec::Rational)
            .unwrap()
            .into_basis()
            .unwrap();
        let p = Representation::projective(a.clone(), 2);
        let p2 = Representation::projective(a.clone(), 1);
        assert_eq!(p.trace(&[&p2]).unwrap(), p.trace_of_projectives(&[1]));
        let i = Representation::injective(a.clone(), 1).unwrap();
        // P(3) maps onto the injective hull 3 > 2 of L(2); the reject is the socle L(1).
        assert_eq!(p.reject(&[&i]).unwrap().dims(), vec![1, 0, 0]);
    }
}
