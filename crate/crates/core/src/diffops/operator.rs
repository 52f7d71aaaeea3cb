use std::collections::BTreeMap;

use super::RadialPoly;
use crate::{Error, Result};

/// Linear differential operator `Σ_σ g_σ ∂^σ` with [`RadialPoly`] coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LinDiffOp {
    dim: usize,
    terms: BTreeMap<Vec<u32>, RadialPoly>,
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// All multi-indices `μ ≤ σ` componentwise.
fn sub_indices(sigma: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(sigma.len())];
    for &s in sigma {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..=s).map(move |v| {
                    let mut m = m.clone();
                    m.push(v);
                    m
                })
            })
            .collect();
    }
    out
}

fn derive_multi(f: &RadialPoly, sigma: &[u32]) -> RadialPoly {
    let mut g = f.clone();
    for (j, &k) in sigma.iter().enumerate() {
        for _ in 0..k {
            g = g.derive(j);
        }
    }
    g
}

impl LinDiffOp {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    /// Multiplication operator `f̂`.
    pub fn multiplication(f: &RadialPoly) -> Self {
        let mut op = Self::zero(f.dim());
        op.insert(vec![0; f.dim()], f.clone());
        op
    }

    pub fn identity(dim: usize) -> Self {
        Self::multiplication(&RadialPoly::one(dim))
    }

    /// `∂/∂x_j` (0-based axis).
    pub fn partial(dim: usize, j: usize) -> Result<Self> {
        if j >= dim {
            return Err(Error::InvalidArgument(format!("axis {j} out of range for dimension {dim}")));
        }
        let mut sigma = vec![0; dim];
        sigma[j] = 1;
        let mut op = Self::zero(dim);
        op.insert(sigma, RadialPoly::one(dim));
        Ok(op)
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Vec<u32>, RadialPoly)>) -> Result<Self> {
        let mut op = Self::zero(dim);
        for (sigma, g) in terms {
            if sigma.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: sigma.len() });
            }
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
            }
            op.insert(sigma, g);
        }
        Ok(op)
    }

    fn insert(&mut self, sigma: Vec<u32>, g: RadialPoly) {
        let slot = self.terms.entry(sigma.clone()).or_insert_with(|| RadialPoly::zero(g.dim()));
        *slot = slot.add_unchecked(&g, 1.0);
        if slot.is_zero() {
            self.terms.remove(&sigma);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &RadialPoly)> + '_ {
        self.terms.iter().map(|(s, g)| (s.as_slice(), g))
    }

    /// Largest `|σ|` with a nonzero coefficient; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|s| s.iter().sum()).max()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, g| m.max(g.max_abs_coeff()))
    }

    fn check(&self, dim: usize) -> Result<()> {
        if self.dim != dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &LinDiffOp) -> Result<Self> {
        self.check(other.dim)?;
        let mut out = self.clone();
        for (s, g) in &other.terms {
            out.insert(s.clone(), g.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LinDiffOp) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(s, g)| (s.clone(), g.scale(c)))).expect("same dimension")
    }

    /// `f̂ ∘ D`.
    pub fn premultiply(&self, f: &RadialPoly) -> Result<Self> {
        self.check(f.dim())?;
        Self::from_terms(self.dim, self.terms.iter().map(|(s, g)| (s.clone(), f.mul_unchecked(g))))
    }

    pub fn apply(&self, f: &RadialPoly) -> Result<RadialPoly> {
        self.check(f.dim())?;
        Ok(self
            .terms
            .iter()
            .fold(RadialPoly::zero(self.dim), |acc, (s, g)| acc.add_unchecked(&g.mul_unchecked(&derive_multi(f, s)), 1.0)))
    }

    /// `self ∘ other`, expanded with the Leibniz rule.
    pub fn compose(&self, other: &LinDiffOp) -> Result<Self> {
        self.check(other.dim)?;
        let mut out = Self::zero(self.dim);
        for (sigma, g) in &self.terms {
            for mu in sub_indices(sigma) {
                let c: f64 = sigma.iter().zip(&mu).map(|(&s, &m)| binomial(s, m)).product();
                for (tau, h) in &other.terms {
                    let coeff = g.mul_unchecked(&derive_multi(h, &mu)).scale(c);
                    if coeff.is_zero() {
                        continue;
                    }
                    let idx = sigma.iter().zip(&mu).zip(tau).map(|((s, m), t)| s - m + t).collect();
                    out.insert(idx, coeff);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other − other ∘ self`.
    pub fn commutator(&self, other: &LinDiffOp) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }
}

pub fn op_apply(d: &LinDiffOp, f: &RadialPoly) -> Result<RadialPoly> {
    d.apply(f)
}

pub fn op_compose(d1: &LinDiffOp, d2: &LinDiffOp) -> Result<LinDiffOp> {
    d1.compose(d2)
}

pub fn op_commutator(d1: &LinDiffOp, d2: &LinDiffOp) -> Result<LinDiffOp> {
    d1.commutator(d2)
}

/// Whether every `(k+1)`-fold nested commutator `[…[[D, f̂₀], f̂₁], …, f̂ₖ]`
/// vanishes, with the `f̂ᵢ` drawn (repetition allowed) from `probes`.
///
/// With the coordinate functions as probes this holds exactly when `D` has
/// order at most `k`.
pub fn order_detect(d: &LinDiffOp, k: usize, probes: &[RadialPoly]) -> Result<bool> {
    let mults: Vec<LinDiffOp> = probes.iter().map(LinDiffOp::multiplication).collect();
    for m in &mults {
        d.check(m.dim)?;
    }
    fn recurse(op: &LinDiffOp, depth: usize, mults: &[LinDiffOp]) -> Result<bool> {
        if op.is_zero() {
            return Ok(true);
        }
        if depth == 0 {
            return Ok(false);
        }
        for m in mults {
            if !recurse(&op.commutator(m)?, depth - 1, mults)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    recurse(d, k + 1, &mults)
}

/// `Δ = Σ ∂²/∂x_j²` on `Rⁿ`.
pub fn laplacian(dim: usize) -> LinDiffOp {
    let mut op = LinDiffOp::zero(dim);
    for j in 0..dim {
        let mut sigma = vec![0; dim];
        sigma[j] = 2;
        op.insert(sigma, RadialPoly::one(dim));
    }
    op
}

/// `−Δ₃/2 − k/r` on `R³`.
pub fn hydrogen_op(k: f64) -> LinDiffOp {
    let mut op = laplacian(3).scale(-0.5);
    op.insert(vec![0; 3], RadialPoly::radial(3, -1).scale(-k));
    op
}

/// `−Δ₄/(8R²) − k/R²` on `R⁴`.
pub fn conformal_kepler_op(k: f64) -> LinDiffOp {
    let inv_r2 = RadialPoly::radial(4, -2);
    let mut op = laplacian(4).premultiply(&inv_r2.scale(-0.125)).expect("same dimension");
    op.insert(vec![0; 4], inv_r2.scale(-k));
    op
}

#[cfg(test)]
mod tests {
    use super::super::radial_poly::tests::random_poly;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn coords(dim: usize) -> Vec<RadialPoly> {
        (0..dim).map(|j| RadialPoly::coord(dim, j).unwrap()).collect()
    }

    #[test]
    fn commutator_with_multiplication_is_derivative() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let f = random_poly(&mut rng, 3, 2, 2);
            let g = random_poly(&mut rng, 3, 2, 2);
            let j = rng.gen_range(0..3);
            let c = LinDiffOp::partial(3, j).unwrap().commutator(&LinDiffOp::multiplication(&f)).unwrap();
            assert_eq!(c.apply(&g).unwrap(), f.derive(j).mul(&g).unwrap());
            assert_eq!(c, LinDiffOp::multiplication(&f.derive(j)));
        }
    }

    #[test]
    fn commutator_examples() {
        let lap = laplacian(3);
        assert!(lap.commutator(&lap).unwrap().is_zero());
        let x1 = LinDiffOp::multiplication(&RadialPoly::coord(3, 0).unwrap());
        assert_eq!(lap.commutator(&x1).unwrap(), LinDiffOp::partial(3, 0).unwrap().scale(2.0));
        assert!(lap.compose(&laplacian(4)).is_err());
    }

    #[test]
    fn composition_agrees_with_sequential_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let a = random_op(&mut rng, 2);
            let b = random_op(&mut rng, 2);
            let f = random_poly(&mut rng, 3, 3, 2);
            assert_eq!(a.compose(&b).unwrap().apply(&f).unwrap(), a.apply(&b.apply(&f).unwrap()).unwrap());
        }
    }

    #[test]
    fn order_examples() {
        let p = coords(3);
        assert!(order_detect(&laplacian(3), 2, &p).unwrap());
        assert!(!order_detect(&laplacian(3), 1, &p).unwrap());
        assert!(order_detect(&LinDiffOp::multiplication(&p[0]), 0, &p).unwrap());
        assert!(!order_detect(&LinDiffOp::partial(3, 1).unwrap(), 0, &p).unwrap());
    }

    fn random_op(rng: &mut ChaCha8Rng, order: u32) -> LinDiffOp {
        let mut op = LinDiffOp::zero(3);
        let mut top = vec![0; 3];
        for _ in 0..order {
            top[rng.gen_range(0..3)] += 1;
        }
        op.insert(top, RadialPoly::one(3).add(&random_poly(rng, 3, 1, 1)).unwrap());
        for _ in 0..3 {
            let ord = rng.gen_range(0..=order);
            let mut s = vec![0; 3];
            for _ in 0..ord {
                s[rng.gen_range(0..3)] += 1;
            }
            op.insert(s, random_poly(rng, 3, 2, 1));
        }
        op
    }

    #[test]
    fn order_detection_on_random_operators() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = coords(3);
        for i in 0..50 {
            let order = 1 + (i % 3) as u32;
            let op = random_op(&mut rng, order);
            let k = op.order().unwrap() as usize;
            assert!(order_detect(&op, k, &p).unwrap());
            assert!(!order_detect(&op, k - 1, &p).unwrap());
        }
    }

    #[test]
    fn operator_examples() {
        assert!(laplacian(3).apply(&RadialPoly::radial(3, -1)).unwrap().is_zero());
        let x3 = RadialPoly::coord(3, 2).unwrap();
        let expected = x3.mul(&RadialPoly::radial(3, -1)).unwrap().scale(-0.7);
        assert_eq!(hydrogen_op(0.7).apply(&x3).unwrap(), expected);
        assert_eq!(conformal_kepler_op(1.5).apply(&RadialPoly::one(4)).unwrap(), RadialPoly::radial(4, -2).scale(-1.5));
        assert_eq!(laplacian(3).order(), Some(2));
        assert_eq!(LinDiffOp::zero(3).order(), None);
    }
}
