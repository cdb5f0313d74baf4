//! Quiver-and-relations presentations of `End(⊕ G_u)^op` and the functor `Hom(G, -)`.
//!
//! An arrow `u -> v` of the extracted quiver corresponds to a map `G_v -> G_u`,
//! and a path `[a_1, ..., a_k]` to the composite `φ_{a_1} ∘ ... ∘ φ_{a_k}`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};
use crate::modrep::{hom_basis, same_algebra, ModuleMap, Representation};
use crate::presentation::{
    compute_basis, AlgebraBasis, AlgebraPresentation, Path, Quiver, Relation,
};

/// `(source, target)` of a block of paths.
type Block = (usize, usize);

/// `End_A(⊕ G_u)^op` presented by quiver and relations, with the realizing maps.
#[derive(Debug)]
pub struct EndoPresentation {
    labels: Vec<String>,
    summands: Vec<Representation>,
    hom: Vec<Vec<Vec<ModuleMap>>>,
    arrow_maps: Vec<ModuleMap>,
    basis: Arc<AlgebraBasis>,
    loewy_length: usize,
}

fn span_of(field: FieldSpec, ambient: usize, maps: &[ModuleMap]) -> Subspace {
    Subspace::spanned_by(
        field,
        ambient,
        maps.iter().map(ModuleMap::flatten).collect(),
    )
}

fn hom_ambient(src: &Representation, tgt: &Representation) -> usize {
    src.dims().iter().zip(tgt.dims()).map(|(a, b)| a * b).sum()
}

/// A basis of `rad End(G)`, assuming `End(G)` is split local.
pub(crate) fn radical_of_endomorphisms(
    g: &Representation,
    ends: &[ModuleMap],
) -> Result<Vec<ModuleMap>> {
    let f = g.field();
    let ambient = hom_ambient(g, g);
    let mut span = Subspace::zero(f, ambient);
    let mut out = Vec::new();
    for e in ends {
        let big = Matrix::block_diag(f, &e.blocks().iter().collect::<Vec<_>>());
        let lambda = big
            .unique_eigenvalue()?
            .ok_or_else(|| Error::NonSplit("endomorphism without a unique eigenvalue".into()))?;
        let nil = e.sub(&ModuleMap::identity(g).scale(&lambda));
        let flat = nil.flatten();
        if !span.contains(&flat) {
            span = span.with_vectors([flat]);
            out.push(nil);
        }
    }
    Ok(out)
}

impl EndoPresentation {
    /// Computes the presentation of `End_A(⊕ summands)^op`.
    ///
    /// Summands must be indecomposable with split local endomorphism rings and
    /// pairwise non-isomorphic; vertex `u` of the result is `summands[u]`.
    pub fn new(labels: Vec<String>, summands: Vec<Representation>) -> Result<Self> {
        let m = summands.len();
        if m == 0 || labels.len() != m {
            return Err(Error::InvalidArgument("need one label per summand".into()));
        }
        let alg = summands[0].algebra().clone();
        if summands.iter().any(|s| !same_algebra(s.algebra(), &alg)) {
            return Err(Error::AlgebraMismatch);
        }
        let f = alg.field();
        for (u, g) in summands.iter().enumerate() {
            if !g.has_split_local_endomorphisms()? {
                return Err(Error::NonSplit(format!(
                    "non-split summand {}: its endomorphism ring is not local with residue field {f}",
                    labels[u]
                )));
            }
        }
        for u in 0..m {
            for v in u + 1..m {
                if summands[u].dims() == summands[v].dims()
                    && summands[u].is_isomorphic(&summands[v])?
                {
                    return Err(Error::InvalidArgument(format!(
                        "summands {} and {} are isomorphic",
                        labels[u], labels[v]
                    )));
                }
            }
        }
        // hom[u][v] = Hom_A(G_v, G_u), the arrows' home.
        let mut hom = vec![vec![Vec::new(); m]; m];
        for u in 0..m {
            for v in 0..m {
                hom[u][v] = hom_basis(&summands[v], &summands[u])?;
            }
        }
        let mut rad = hom.clone();
        for u in 0..m {
            let mut ends = vec![ModuleMap::identity(&summands[u])];
            ends.extend(hom[u][u].iter().cloned());
            rad[u][u] = radical_of_endomorphisms(&summands[u], &ends)?;
        }
        let mut arrows = Vec::new();
        let mut arrow_maps = Vec::new();
        for u in 0..m {
            for v in 0..m {
                let ambient = hom_ambient(&summands[v], &summands[u]);
                let mut sq = Vec::new();
                for w in 0..m {
                    for phi in &rad[u][w] {
                        for psi in &rad[w][v] {
                            sq.push(phi.compose(psi).flatten());
                        }
                    }
                }
                let mut span = Subspace::spanned_by(f, ambient, sq);
                let mut k = 0;
                for r in &rad[u][v] {
                    let flat = r.flatten();
                    if span.contains(&flat) {
                        continue;
                    }
                    span = span.with_vectors([flat]);
                    k += 1;
                    let name = if k == 1 {
                        format!("{}>{}", labels[u], labels[v])
                    } else {
                        format!("{}>{}#{k}", labels[u], labels[v])
                    };
                    arrows.push((name, u, v));
                    arrow_maps.push(r.clone());
                }
            }
        }
        let quiver = Quiver::checked(labels.clone(), arrows)?;
        let (relations, loewy_length) = extract_relations(f, &quiver, &summands, &arrow_maps)?;
        let presentation = AlgebraPresentation::new(f, quiver, relations)?;
        let basis = Arc::new(compute_basis(&presentation)?);
        let expected: usize = hom.iter().flatten().map(Vec::len).sum();
        if basis.dim() != expected {
            return Err(Error::Internal(format!(
                "extracted relations give dimension {} but End has dimension {expected}",
                basis.dim()
            )));
        }
        Ok(EndoPresentation {
            labels,
            summands,
            hom,
            arrow_maps,
            basis,
            loewy_length,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn summands(&self) -> &[Representation] {
        &self.summands
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        self.basis.presentation()
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        &self.basis
    }

    /// `dim End(G)`, equal to the dimension of the presented algebra.
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    /// The map `G_v -> G_u` realizing arrow `a: u -> v`.
    pub fn arrow_map(&self, a: usize) -> &ModuleMap {
        &self.arrow_maps[a]
    }

    /// Basis of `Hom_A(G_v, G_u)`, the maps behind `e_u R e_v`.
    pub fn hom_space(&self, u: usize, v: usize) -> &[ModuleMap] {
        &self.hom[u][v]
    }

    /// The map realizing a path of the presented quiver.
    pub fn evaluate_path(&self, p: &Path) -> ModuleMap {
        evaluate(&self.summands, &self.arrow_maps, p)
    }

    /// `Hom_A(G, M)` as a module over the presented algebra.
    pub fn apply(&self, m: &Representation) -> Result<Representation> {
        Ok(self.apply_with_fibers(m)?.0)
    }

    /// `Hom_A(G, M)` and the flattened-hom subspaces serving as its fibers.
    pub fn apply_with_fibers(&self, m: &Representation) -> Result<(Representation, Vec<Subspace>)> {
        let f = m.field();
        let fibers: Vec<Subspace> = self
            .summands
            .iter()
            .map(|g| Ok(span_of(f, hom_ambient(g, m), &hom_basis(g, m)?)))
            .collect::<Result<_>>()?;
        let q = self.basis.quiver();
        let action = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let phi = &self.arrow_maps[i];
                let gu = &self.summands[a.source];
                let cols: Vec<Vec<Scalar>> = fibers[a.source]
                    .basis()
                    .iter()
                    .map(|row| {
                        let h = ModuleMap::from_flat(f, gu.dims(), m.dims(), row);
                        let moved = h.compose(phi).flatten();
                        fibers[a.target].coords(&moved).ok_or_else(|| {
                            Error::Internal("precomposition left the hom space".into())
                        })
                    })
                    .collect::<Result<_>>()?;
                Ok(Matrix::from_columns(f, fibers[a.target].dim(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        let dims = fibers.iter().map(Subspace::dim).collect();
        Ok((
            Representation::new(self.basis.clone(), dims, action)?,
            fibers,
        ))
    }

    /// `Hom_A(G, f)` for `f: M -> N`, given the fibers returned by [`Self::apply_with_fibers`].
    pub fn apply_map(
        &self,
        f: &ModuleMap,
        m: &Representation,
        m_fibers: &[Subspace],
        n_fibers: &[Subspace],
    ) -> Result<ModuleMap> {
        let field = m.field();
        let blocks = self
            .summands
            .iter()
            .enumerate()
            .map(|(u, g)| {
                let cols: Vec<Vec<Scalar>> = m_fibers[u]
                    .basis()
                    .iter()
                    .map(|row| {
                        let h = ModuleMap::from_flat(field, g.dims(), m.dims(), row);
                        n_fibers[u]
                            .coords(&f.compose(&h).flatten())
                            .ok_or_else(|| Error::Internal("composite left the hom space".into()))
                    })
                    .collect::<Result<_>>()?;
                Ok(Matrix::from_columns(field, n_fibers[u].dim(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap::new(blocks))
    }

    /// Finds nonzero arrow scalings under which every relation of `target` holds.
    ///
    /// `target` must have the same vertex labels; each of its arrows is matched
    /// with the unique extracted arrow between the same pair of labels. Returns
    /// the scalings in `target`'s arrow order.
    pub fn calibrate(&self, target: &AlgebraPresentation) -> Result<Vec<Scalar>> {
        calibrate(self, target)
    }
}

fn evaluate(summands: &[Representation], arrow_maps: &[ModuleMap], p: &Path) -> ModuleMap {
    let mut acc = ModuleMap::identity(&summands[p.source()]);
    for &a in p.arrows() {
        acc = acc.compose(&arrow_maps[a]);
    }
    acc
}

/// Minimal relations of the presented quiver, and the Loewy length.
///
/// Only paths whose proper subpaths all evaluate to nonzero maps are needed:
/// any other path lies in `J K + K J` for the kernel `K`.
fn extract_relations(
    f: FieldSpec,
    q: &Quiver,
    summands: &[Representation],
    arrow_maps: &[ModuleMap],
) -> Result<(Vec<Relation>, usize)> {
    let n = q.vertex_count();
    let mut candidates: Vec<(Path, ModuleMap)> = Vec::new();
    let mut nonzero: HashSet<Path> = HashSet::new();
    let mut frontier: Vec<(Path, ModuleMap)> = (0..n)
        .map(|v| (Path::trivial(v), ModuleMap::identity(&summands[v])))
        .collect();
    for (p, _) in &frontier {
        nonzero.insert(p.clone());
    }
    candidates.extend(frontier.iter().cloned());
    let mut longest_nonzero = 0;
    let mut len = 0;
    while !frontier.is_empty() {
        len += 1;
        let mut next = Vec::new();
        for (p, val) in &frontier {
            for a in q.arrows_from(p.target()) {
                let ext = p.then_arrow(q, a).unwrap();
                if len >= 2 {
                    let suffix = Path::from_arrows(q, &ext.arrows()[1..]).unwrap();
                    if !nonzero.contains(&suffix) {
                        continue;
                    }
                }
                let v = val.compose(&arrow_maps[a]);
                if !v.is_zero() {
                    nonzero.insert(ext.clone());
                    next.push((ext.clone(), v.clone()));
                    longest_nonzero = len;
                }
                candidates.push((ext, v));
            }
        }
        frontier = next;
    }
    // Group candidates by block, sorted ascending so relations lead with their largest path.
    let mut blocks: HashMap<(usize, usize), Vec<(Path, ModuleMap)>> = HashMap::new();
    for (p, v) in candidates {
        blocks
            .entry((p.source(), p.target()))
            .or_default()
            .push((p, v));
    }
    let mut keys: Vec<(usize, usize)> = blocks.keys().copied().collect();
    keys.sort();
    let mut kernels: HashMap<(usize, usize), Vec<Vec<Scalar>>> = HashMap::new();
    let mut columns: HashMap<(usize, usize), HashMap<Path, usize>> = HashMap::new();
    for key in &keys {
        let block = blocks.get_mut(key).unwrap();
        block.sort_by_key(|a| a.0.key());
        let rows = hom_ambient(&summands[key.1], &summands[key.0]);
        let cols: Vec<Vec<Scalar>> = block.iter().map(|(_, v)| v.flatten()).collect();
        let kernel = Matrix::from_columns(f, rows, &cols).kernel_basis();
        columns.insert(
            *key,
            block
                .iter()
                .enumerate()
                .map(|(i, (p, _))| (p.clone(), i))
                .collect(),
        );
        kernels.insert(*key, kernel);
    }
    // J K + K J, projected onto the candidate coordinates.
    let mut ideal: HashMap<(usize, usize), Vec<Vec<Scalar>>> = HashMap::new();
    for key in &keys {
        let block = &blocks[key];
        for x in &kernels[key] {
            let mut shifted: Vec<(Block, Vec<(Path, Scalar)>)> = Vec::new();
            for a in q.arrows_into(key.0) {
                let pre = Path::arrow(q, a);
                let terms = block
                    .iter()
                    .zip(x)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((p, _), c)| (pre.then(p).unwrap(), c.clone()))
                    .collect();
                shifted.push(((q.arrow(a).source, key.1), terms));
            }
            for a in q.arrows_from(key.1) {
                let terms = block
                    .iter()
                    .zip(x)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((p, _), c)| (p.then_arrow(q, a).unwrap(), c.clone()))
                    .collect();
                shifted.push(((key.0, q.arrow(a).target), terms));
            }
            for (target, terms) in shifted {
                let Some(cols) = columns.get(&target) else {
                    continue;
                };
                let mut v = vec![f.zero(); cols.len()];
                for (p, c) in terms {
                    if let Some(&i) = cols.get(&p) {
                        v[i] = v[i].add(&c);
                    }
                }
                if v.iter().any(|c| !c.is_zero()) {
                    ideal.entry(target).or_default().push(v);
                }
            }
        }
    }
    let mut relations = Vec::new();
    for key in &keys {
        let block = &blocks[key];
        let mut span = Subspace::spanned_by(f, block.len(), ideal.remove(key).unwrap_or_default());
        // Prefer generators with small leading paths.
        let mut kernel = kernels[key].clone();
        kernel.sort_by_key(|x| x.iter().rposition(|c| !c.is_zero()));
        for x in kernel {
            if span.contains(&x) {
                continue;
            }
            span = span.with_vectors([x.clone()]);
            let terms = block
                .iter()
                .zip(&x)
                .filter(|(_, c)| !c.is_zero())
                .map(|((p, _), c)| (c.clone(), p.clone()))
                .collect();
            relations.push(normalize(Relation::new(terms)));
        }
    }
    Ok((relations, longest_nonzero + 1))
}

/// Scales a relation so that its longest (last) term has coefficient one.
fn normalize(r: Relation) -> Relation {
    let lead = r
        .terms()
        .iter()
        .max_by(|a, b| a.1.key().cmp(&b.1.key()))
        .map(|(c, _)| c.clone());
    match lead.and_then(|c| c.inv()) {
        Some(inv) => Relation::new(
            r.terms()
                .iter()
                .map(|(c, p)| (c.mul(&inv), p.clone()))
                .collect(),
        ),
        None => r,
    }
}

fn calibrate(endo: &EndoPresentation, target: &AlgebraPresentation) -> Result<Vec<Scalar>> {
    let tq = target.quiver();
    let rq = endo.basis.quiver();
    if tq.vertices() != rq.vertices() {
        return Err(Error::InvalidArgument("vertex labels differ".into()));
    }
    let f = target.field();
    // Match arrows by endpoints.
    let mut matched = Vec::with_capacity(tq.arrow_count());
    for a in tq.arrows() {
        let cands: Vec<usize> = (0..rq.arrow_count())
            .filter(|&b| rq.arrow(b).source == a.source && rq.arrow(b).target == a.target)
            .collect();
        if cands.len() != 1 || tq.arrows_between(a.source, a.target) != 1 {
            return Err(Error::InvalidArgument(format!(
                "arrow `{}` has no unique counterpart between the same vertices",
                a.name
            )));
        }
        matched.push(cands[0]);
    }
    if rq.arrow_count() != tq.arrow_count() {
        return Err(Error::InvalidArgument(format!(
            "{} extracted arrows against {} expected",
            rq.arrow_count(),
            tq.arrow_count()
        )));
    }
    let maps: Vec<&ModuleMap> = matched.iter().map(|&b| &endo.arrow_maps[b]).collect();
    let eval = |p: &Path| -> ModuleMap {
        let mut acc = ModuleMap::identity(&endo.summands[p.source()]);
        for &a in p.arrows() {
            acc = acc.compose(maps[a]);
        }
        acc
    };
    let rels: Vec<Vec<(Scalar, Path, Vec<Scalar>)>> = target
        .relations()
        .iter()
        .map(|r| {
            r.terms()
                .iter()
                .map(|(c, p)| (c.clone(), p.clone(), eval(p).flatten()))
                .collect()
        })
        .collect();
    let mut scale: Vec<Option<Scalar>> = vec![None; tq.arrow_count()];
    loop {
        let mut progress = false;
        for terms in &rels {
            // Solve a relation with exactly one unknown arrow.
            let unknown: HashSet<usize> = terms
                .iter()
                .flat_map(|(_, p, _)| p.arrows().iter().copied())
                .filter(|&a| scale[a].is_none())
                .collect();
            if unknown.len() != 1 {
                continue;
            }
            let a = *unknown.iter().next().unwrap();
            // Σ c_k λ^{n_k} m_k E_k = 0 with n_k ∈ {0, 1} the occurrences of `a`.
            let len = terms[0].2.len();
            let mut with = vec![f.zero(); len];
            let mut without = vec![f.zero(); len];
            for (c, p, e) in terms {
                let mut k = c.clone();
                let mut occurs = 0;
                for &b in p.arrows() {
                    match &scale[b] {
                        Some(s) => k = k.mul(s),
                        None => occurs += 1,
                    }
                }
                let acc = match occurs {
                    0 => &mut without,
                    1 => &mut with,
                    _ => return Err(Error::Internal("arrow repeated in a relation term".into())),
                };
                for (x, y) in acc.iter_mut().zip(e) {
                    x.add_mul_assign(&k, y);
                }
            }
            // λ · with + without = 0.
            let Some(i) = with.iter().position(|c| !c.is_zero()) else {
                continue;
            };
            let lambda = without[i].neg().div(&with[i]).unwrap();
            let consistent = with
                .iter()
                .zip(&without)
                .all(|(w, o)| lambda.mul(w).add(o).is_zero());
            if !consistent || lambda.is_zero() {
                return Err(Error::RelationViolated(format!(
                    "no nonzero scaling of `{}` satisfies a relation",
                    tq.arrow(a).name
                )));
            }
            scale[a] = Some(lambda);
            progress = true;
        }
        if !progress {
            match scale.iter().position(Option::is_none) {
                Some(a) => scale[a] = Some(f.one()),
                None => break,
            }
        }
    }
    let scale: Vec<Scalar> = scale.into_iter().map(Option::unwrap).collect();
    for (r, terms) in target.relations().iter().zip(&rels) {
        let len = terms[0].2.len();
        let mut total = vec![f.zero(); len];
        for (c, p, e) in terms {
            let k = p
                .arrows()
                .iter()
                .fold(c.clone(), |acc, &b| acc.mul(&scale[b]));
            for (x, y) in total.iter_mut().zip(e) {
                x.add_mul_assign(&k, y);
            }
        }
        if total.iter().any(|c| !c.is_zero()) {
            return Err(Error::RelationViolated(r.display(tq)));
        }
    }
    Ok(scale)
}
