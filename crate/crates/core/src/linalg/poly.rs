//! Dense univariate polynomials, just enough for eigenvalue and splitting tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::field::{FieldSpec, Scalar};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }

    /// `x - root`.
    pub fn linear_root(root: &Scalar) -> Self {
        let f = root.field();
        Poly::new(f, vec![root.neg(), f.one()])
    }

    pub fn x(field: FieldSpec) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coefficient(i).add(&other.coefficient(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coefficient(i).sub(&other.coefficient(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&self.field.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[d].inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(d).max(1)];
        while rem.len() > d && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].mul(&lead_inv);
            if !c.is_zero() {
                let shift = top - d;
                quot[shift] = c.clone();
                let nc = c.neg();
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i].add_mul_assign(&nc, dc);
                }
            }
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Poly {
        self.mul(other).div_rem(modulus).1
    }

    /// Whether the polynomial has a root in its coefficient field.
    ///
    /// `None` when the rational root search would need to factor integers
    /// beyond the trial-division budget.
    pub fn has_root(&self) -> Option<bool> {
        let deg = self.degree()?;
        if deg == 0 {
            return Some(false);
        }
        if self.coeffs[0].is_zero() {
            return Some(true);
        }
        match self.field {
            FieldSpec::Prime { p } => {
                // gcd(f, x^p - x) is nontrivial iff f has a root in F_p.
                let modulus = self.monic();
                let mut acc = Poly::constant(self.field.one());
                let mut base = Poly::x(self.field).div_rem(&modulus).1;
                let mut e = p;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc.mul_mod(&base, &modulus);
                    }
                    base = base.mul_mod(&base, &modulus);
                    e >>= 1;
                }
                let g = modulus.gcd(&acc.sub(&Poly::x(self.field)));
                Some(g.degree().unwrap_or(deg) > 0)
            }
            FieldSpec::Rational => self.has_rational_root(),
        }
    }

    fn has_rational_root(&self) -> Option<bool> {
        self.roots().map(|r| !r.is_empty())
    }

    /// All distinct roots in the coefficient field.
    ///
    /// `None` when the search is out of budget: integer coefficients too large
    /// to factor, or a prime field too large to enumerate.
    pub fn roots(&self) -> Option<Vec<Scalar>> {
        let deg = self.degree()?;
        if deg == 0 {
            return Some(Vec::new());
        }
        match self.field {
            FieldSpec::Prime { p } => {
                if p > 100_000 {
                    return None;
                }
                Some(
                    self.field
                        .elements()?
                        .into_iter()
                        .filter(|x| self.eval(x).is_zero())
                        .collect(),
                )
            }
            FieldSpec::Rational => {
                // Strip the factor x^k so the constant term is nonzero.
                let shift = self.coeffs.iter().take_while(|c| c.is_zero()).count();
                let mut out = Vec::new();
                if shift > 0 {
                    out.push(self.field.zero());
                }
                let rest = Poly::new(self.field, self.coeffs[shift..].to_vec());
                if rest.degree() == Some(0) {
                    return Some(out);
                }
                let rats: Vec<&BigRational> = rest
                    .coeffs
                    .iter()
                    .map(|c| c.as_rational().unwrap())
                    .collect();
                let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * &lcm / r.denom()).collect();
                let a0 = ints[0].abs().to_u64()?;
                let an = ints.last().unwrap().abs().to_u64()?;
                const BUDGET: u64 = 1_000_000_000_000;
                if a0 > BUDGET || an > BUDGET {
                    return None;
                }
                let q_divs = divisors(an);
                for p in divisors(a0) {
                    for q in &q_divs {
                        if p.gcd(q) != 1 {
                            continue;
                        }
                        for sign in [1i64, -1] {
                            let cand = Scalar::Rational(BigRational::new(
                                BigInt::from(p) * BigInt::from(sign),
                                BigInt::from(*q),
                            ));
                            if rest.eval(&cand).is_zero() {
                                out.push(cand);
                            }
                        }
                    }
                }
                Some(out)
            }
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: FieldSpec, c: &[i64]) -> Poly {
        Poly::new(f, c.iter().map(|&v| f.from_i64(v)).collect())
    }

    #[test]
    fn rational_roots() {
        let q0 = FieldSpec::Rational;
        let r = poly(q0, &[0, 1, -3, 2]).roots().unwrap();
        assert_eq!(r.len(), 3);
        let q = FieldSpec::Rational;
        // x^2 - 2 has no rational root, 2x^2 - 3x + 1 does.
        assert_eq!(poly(q, &[-2, 0, 1]).has_root(), Some(false));
        assert_eq!(poly(q, &[1, -3, 2]).has_root(), Some(true));
        assert_eq!(poly(q, &[1, 0, 1]).has_root(), Some(false));
    }

    #[test]
    fn prime_field_roots() {
        let f5 = FieldSpec::prime(5).unwrap();
        // x^2 - 2 is irreducible mod 5; x^2 + 1 = (x-2)(x+2) mod 5.
        assert_eq!(poly(f5, &[-2, 0, 1]).has_root(), Some(false));
        assert_eq!(poly(f5, &[1, 0, 1]).has_root(), Some(true));
    }

    #[test]
    fn gcd_and_division() {
        let q = FieldSpec::Rational;
        let a = poly(q, &[-1, 0, 1]);
        let b = poly(q, &[1, 2, 1]);
        assert_eq!(a.gcd(&b), poly(q, &[1, 1]));
        let (quot, rem) = b.div_rem(&poly(q, &[1, 1]));
        assert_eq!(quot, poly(q, &[1, 1]));
        assert!(rem.is_zero());
    }
}
