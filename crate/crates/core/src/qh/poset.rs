use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::generators::adr_label;

/// A strict partial order on labels `0..n`, stored transitively closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelPoset {
    labels: Vec<String>,
    #[serde(skip)]
    less: Vec<Vec<bool>>,
}

impl LabelPoset {
    /// The order generated by `pairs`, each `(a, b)` meaning `a ⊏ b`.
    pub fn new(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "order pair ({a}, {b}) out of range"
                )));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                if less[a][k] {
                    for b in 0..n {
                        if less[k][b] {
                            less[a][b] = true;
                        }
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| less[a][a]) {
            return Err(Error::InvalidArgument(format!(
                "order relations form a cycle through `{}`",
                labels[a]
            )));
        }
        Ok(LabelPoset { labels, less })
    }

    /// The total order `0 ⊏ 1 ⊏ ... ⊏ n-1`.
    pub fn natural(labels: &[String]) -> Self {
        let pairs: Vec<(usize, usize)> = (1..labels.len()).map(|k| (k - 1, k)).collect();
        LabelPoset::new(labels.to_vec(), &pairs).unwrap()
    }

    /// The same labels with every relation reversed.
    pub fn reversed(&self) -> Self {
        let n = self.len();
        let less = (0..n)
            .map(|a| (0..n).map(|b| self.less[b][a]).collect())
            .collect();
        LabelPoset {
            labels: self.labels.clone(),
            less,
        }
    }

    /// The order on pairs `(i,j)` with `(i,j) ⊏ (k,l)` iff `j > l`.
    pub fn adr(labels: &[(usize, usize)]) -> Self {
        let n = labels.len();
        let less = (0..n)
            .map(|a| (0..n).map(|b| labels[a].1 > labels[b].1).collect())
            .collect();
        LabelPoset {
            labels: labels.iter().map(|&(i, j)| adr_label(i, j)).collect(),
            less,
        }
    }

    /// Parses `natural`, `reverse`, or comma-separated relations `a<b` between labels.
    pub fn parse(text: &str, labels: &[String]) -> Result<Self> {
        match text.trim() {
            "natural" => return Ok(LabelPoset::natural(labels)),
            "reverse" => return Ok(LabelPoset::natural(labels).reversed()),
            _ => {}
        }
        let find = |s: &str| {
            labels
                .iter()
                .position(|l| l == s.trim())
                .ok_or_else(|| Error::Parse(format!("unknown label `{}` in order", s.trim())))
        };
        let mut pairs = Vec::new();
        for rel in text.split(',').filter(|r| !r.trim().is_empty()) {
            let parts: Vec<&str> = rel.split('<').collect();
            if parts.len() < 2 {
                return Err(Error::Parse(format!("order relation `{rel}` needs `<`")));
            }
            for w in parts.windows(2) {
                pairs.push((find(w[0])?, find(w[1])?));
            }
        }
        LabelPoset::new(labels.to_vec(), &pairs)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `a ⊏ b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    /// `a ⊑ b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// All relations `a ⊏ b`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| {
                (0..n)
                    .filter(move |&b| self.less[a][b])
                    .map(move |b| (a, b))
            })
            .collect()
    }

    /// Elements of `subset` with nothing in `subset` above them, in label order.
    pub fn maximal_in(&self, subset: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&a| !subset.iter().any(|&b| self.less[a][b]))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn maximal(&self) -> Vec<usize> {
        self.maximal_in(&(0..self.len()).collect::<Vec<_>>())
    }

    /// A uniformly chosen minimal element at each step, smallest first.
    pub fn random_linear_extension<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let ready: Vec<usize> = (0..n)
                .filter(|&a| !placed[a] && (0..n).all(|b| placed[b] || !self.less[b][a]))
                .collect();
            let &pick = ready
                .choose(rng)
                .expect("a finite poset has minimal elements");
            placed[pick] = true;
            out.push(pick);
        }
        out
    }

    /// The total order listing `order` from smallest to largest.
    pub fn total(labels: Vec<String>, order: &[usize]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
        LabelPoset::new(labels, &pairs)
    }

    /// Whether `self` contains every relation of `coarser`.
    pub fn refines(&self, coarser: &LabelPoset) -> bool {
        coarser.pairs().iter().all(|&(a, b)| self.less[a][b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn adr_order_compares_second_coordinates() {
        let labels = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)];
        let p = LabelPoset::adr(&labels);
        assert!(p.less(2, 3));
        assert!(!p.comparable(1, 4));
        assert_eq!(p.maximal(), vec![0, 3]);
    }

    #[test]
    fn parse_and_cycles() {
        let p = LabelPoset::parse("2<1, 3<1", &names(3)).unwrap();
        assert!(p.less(1, 0) && p.less(2, 0) && !p.comparable(1, 2));
        assert!(LabelPoset::parse("1<2,2<1", &names(2)).is_err());
        assert!(LabelPoset::parse("1<4", &names(3)).is_err());
        let chain = LabelPoset::parse("1<2<3", &names(3)).unwrap();
        assert_eq!(chain, LabelPoset::natural(&names(3)));
    }

    #[test]
    fn linear_extensions_refine() {
        let p = LabelPoset::parse("2<1, 3<1", &names(3)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let ext = p.random_linear_extension(&mut rng);
            let t = LabelPoset::total(names(3), &ext).unwrap();
            assert!(t.refines(&p));
        }
    }
}
