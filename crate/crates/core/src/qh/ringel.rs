use super::QhContext;
use crate::adr::EndoPresentation;
use crate::error::Result;
use crate::modrep::{Representation, Submodule};

/// `R(B) = End_B(T)^op` for the characteristic tilting module `T = ⊕ T(i)`,
/// with the reversed poset.
///
/// Vertex `i` of `R(B)` corresponds to `T(i)`, so `P'_i = Hom(T, T(i))`,
/// `Δ'(i) = Hom(T, ∇(i))` and `T'(i) = Hom(T, Q_i)`.
#[derive(Debug)]
pub struct RingelDual {
    pub endo: EndoPresentation,
    pub context: QhContext,
}

impl QhContext {
    pub fn ringel_dual(&self) -> Result<RingelDual> {
        let n = self.label_count();
        let summands = (0..n)
            .map(|i| self.tilting(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        let endo = EndoPresentation::new(self.poset().labels().to_vec(), summands)?;
        let context = QhContext::new(endo.basis().clone(), self.poset().reversed())?;
        Ok(RingelDual { endo, context })
    }
}

impl RingelDual {
    /// `Hom_B(T, M)`.
    pub fn apply(&self, m: &Representation) -> Result<Representation> {
        self.endo.apply(m)
    }

    /// `Hom_B(T, M) / Hom_B(T, U)` for a submodule `U ⊆ M`.
    pub fn apply_quotient(&self, m: &Representation, u: &Submodule) -> Result<Representation> {
        let (ur, inc) = u.to_representation(m);
        let (hm, fm) = self.endo.apply_with_fibers(m)?;
        let (_, fu) = self.endo.apply_with_fibers(&ur)?;
        let image = self.endo.apply_map(&inc, &ur, &fu, &fm)?.image();
        Ok(image.quotient(&hm).0)
    }
}
