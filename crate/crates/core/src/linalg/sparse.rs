//! Sparse row echelon forms keyed by an ordered column type.
//!
//! The pivot of a row is its largest key, so reducing a vector expresses it
//! in terms of the smallest possible columns.

use std::collections::BTreeMap;

use super::field::{FieldSpec, Scalar};

pub type SparseVec<K> = BTreeMap<K, Scalar>;

#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    field: FieldSpec,
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new(field: FieldSpec) -> Self {
        SparseEchelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, key: &K) -> bool {
        self.rows.contains_key(key)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Adds a vector to the span; returns whether it was independent.
    pub fn insert(&mut self, mut v: SparseVec<K>) -> bool {
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((k, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                return false;
            };
            match self.rows.get(&k) {
                Some(row) => subtract(&mut v, &c, row),
                None => {
                    let inv = c.inv().expect("nonzero leading coefficient");
                    for x in v.values_mut() {
                        *x = x.mul(&inv);
                    }
                    self.rows.insert(k, v);
                    return true;
                }
            }
        }
    }

    /// Fully reduces `v` against the stored rows.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        v.retain(|_, c| !c.is_zero());
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().rev().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(b) => v
                    .range(..b.clone())
                    .rev()
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else {
                return v;
            };
            let c = v[&k].clone();
            subtract(&mut v, &c, &self.rows[&k]);
            bound = Some(k);
        }
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Rows of the reduced echelon form: every non-leading key is a non-pivot.
    pub fn into_reduced_rows(self) -> BTreeMap<K, SparseVec<K>> {
        let mut done: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        for (k, mut row) in self.rows {
            let pivot_keys: Vec<K> = row
                .keys()
                .filter(|key| **key != k && done.contains_key(*key))
                .cloned()
                .collect();
            for key in pivot_keys {
                let Some(c) = row.get(&key).cloned() else {
                    continue;
                };
                subtract(&mut row, &c, &done[&key]);
            }
            done.insert(k, row);
        }
        done
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

/// `v -= c * row`, dropping zeros.
fn subtract<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Scalar, row: &SparseVec<K>) {
    let nc = c.neg();
    for (key, x) in row {
        let entry = v.entry(key.clone()).or_insert_with(|| c.field().zero());
        entry.add_mul_assign(&nc, x);
        if entry.is_zero() {
            v.remove(key);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(f: FieldSpec, xs: &[(u32, i64)]) -> SparseVec<u32> {
        xs.iter().map(|&(k, c)| (k, f.from_i64(c))).collect()
    }

    #[test]
    fn largest_key_pivots() {
        let q = FieldSpec::Rational;
        let mut e = SparseEchelon::new(q);
        assert!(e.insert(sv(q, &[(0, 1), (2, 1)])));
        assert!(e.insert(sv(q, &[(1, 1), (2, 1)])));
        assert!(!e.insert(sv(q, &[(0, 1), (1, -1)])));
        assert_eq!(e.pivots().cloned().collect::<Vec<_>>(), vec![1, 2]);
        let rows = e.into_reduced_rows();
        // x2 = -x0 and x1 = -x2 = x0
        assert_eq!(rows[&1], sv(q, &[(0, -1), (1, 1)]));
        assert_eq!(rows[&2], sv(q, &[(0, 1), (2, 1)]));
    }

    #[test]
    fn reduction_to_normal_form() {
        let q = FieldSpec::Rational;
        let mut e = SparseEchelon::new(q);
        e.insert(sv(q, &[(3, 2), (1, 4)]));
        assert_eq!(e.reduce(sv(q, &[(3, 1)])), sv(q, &[(1, -2)]));
        assert!(e.contains(sv(q, &[(3, 1), (1, 2)])));
    }
}
