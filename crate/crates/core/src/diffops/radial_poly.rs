use std::collections::BTreeMap;

use crate::{Error, Result};

type Key = (Vec<u32>, i32);

/// Finite sum of terms `c · x^α · r^s` on `Rⁿ \ {0}` with `r = |x|`, `s ∈ ℤ`.
///
/// Values are kept in a canonical form in which the first coordinate appears
/// at most linearly: `x₁²` is always rewritten as `r² − x₂² − … − xₙ²`. Two
/// polynomials are equal as functions exactly when their canonical forms
/// agree, so `==` is a symbolic identity test.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPoly {
    dim: usize,
    terms: BTreeMap<Key, f64>,
}

impl RadialPoly {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: f64) -> Self {
        Self::from_terms_unchecked(dim, [((vec![0; dim], 0), c)])
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, 1.0)
    }

    /// The coordinate function `x_j` (0-based axis).
    pub fn coord(dim: usize, j: usize) -> Result<Self> {
        if j >= dim {
            return Err(Error::InvalidArgument(format!("axis {j} out of range for dimension {dim}")));
        }
        let mut a = vec![0; dim];
        a[j] = 1;
        Ok(Self::from_terms_unchecked(dim, [((a, 0), 1.0)]))
    }

    /// `r^s`.
    pub fn radial(dim: usize, s: i32) -> Self {
        Self::from_terms_unchecked(dim, [((vec![0; dim], s), 1.0)])
    }

    /// `c · x^α · r^s`.
    pub fn monomial(alpha: &[u32], s: i32, c: f64) -> Self {
        Self::from_terms_unchecked(alpha.len(), [((alpha.to_vec(), s), c)])
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Vec<u32>, i32, f64)>) -> Result<Self> {
        let mut raw = Vec::new();
        for (a, s, c) in terms {
            if a.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: a.len() });
            }
            raw.push(((a, s), c));
        }
        Ok(Self::from_terms_unchecked(dim, raw))
    }

    pub(crate) fn from_terms_unchecked(dim: usize, terms: impl IntoIterator<Item = (Key, f64)>) -> Self {
        let mut out = Self::zero(dim);
        for ((a, s), c) in terms {
            out.accumulate(a, s, c);
        }
        out.terms.retain(|_, c| *c != 0.0);
        out
    }

    fn accumulate(&mut self, mut a: Vec<u32>, s: i32, c: f64) {
        if c == 0.0 {
            return;
        }
        if self.dim > 0 && a[0] >= 2 {
            a[0] -= 2;
            for i in 1..self.dim {
                let mut b = a.clone();
                b[i] += 2;
                self.accumulate(b, s, -c);
            }
            self.accumulate(a, s + 2, c);
            return;
        }
        *self.terms.entry((a, s)).or_insert(0.0) += c;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical terms as `(α, s, c)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i32, f64)> + '_ {
        self.terms.iter().map(|((a, s), c)| (a.as_slice(), *s, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Rebuild the canonical form. Values are always stored canonically, so
    /// this is the identity; it exists for callers that want to be explicit.
    pub fn normalize(&self) -> Self {
        Self::from_terms_unchecked(self.dim, self.terms.clone())
    }

    fn check(&self, other: &RadialPoly) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &RadialPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, 1.0))
    }

    pub fn sub(&self, other: &RadialPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, -1.0))
    }

    pub(crate) fn add_unchecked(&self, other: &RadialPoly, sign: f64) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            *out.terms.entry(k.clone()).or_insert(0.0) += sign * c;
        }
        out.terms.retain(|_, c| *c != 0.0);
        out
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_terms_unchecked(self.dim, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn mul(&self, other: &RadialPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &RadialPoly) -> Self {
        let mut out = Self::zero(self.dim);
        for ((a, s), c) in &self.terms {
            for ((b, t), d) in &other.terms {
                let ab = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.accumulate(ab, s + t, c * d);
            }
        }
        out.terms.retain(|_, c| *c != 0.0);
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.dim), |acc, _| acc.mul_unchecked(self))
    }

    /// Exact partial derivative along axis `j`, using `∂r/∂x_j = x_j / r`.
    pub fn derive(&self, j: usize) -> Self {
        let mut out = Self::zero(self.dim);
        if j >= self.dim {
            return out;
        }
        for ((a, s), c) in &self.terms {
            if a[j] > 0 {
                let mut b = a.clone();
                b[j] -= 1;
                out.accumulate(b, *s, c * a[j] as f64);
            }
            if *s != 0 {
                let mut b = a.clone();
                b[j] += 1;
                out.accumulate(b, s - 2, c * *s as f64);
            }
        }
        out.terms.retain(|_, c| *c != 0.0);
        out
    }

    /// Largest total degree of the monomial parts.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(a, _)| a.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        Ok(self
            .terms
            .iter()
            .map(|((a, s), c)| {
                let mono: f64 = a.iter().zip(x).map(|(&e, v)| v.powi(e as i32)).product();
                c * mono * r.powi(*s)
            })
            .sum())
    }
}

/// Free-function form of [`RadialPoly::derive`].
pub fn rp_derive(f: &RadialPoly, j: usize) -> RadialPoly {
    f.derive(j)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_poly(rng: &mut impl Rng, dim: usize, terms: usize, max_deg: u32) -> RadialPoly {
        let raw: Vec<_> = (0..terms)
            .map(|_| {
                let a: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..=max_deg)).collect();
                let s = rng.gen_range(-2..=2);
                let c = rng.gen_range(-3..=3) as f64;
                ((a, s), c)
            })
            .collect();
        RadialPoly::from_terms_unchecked(dim, raw)
    }

    fn sum_of_squares(dim: usize) -> RadialPoly {
        (0..dim).fold(RadialPoly::zero(dim), |acc, j| {
            let x = RadialPoly::coord(dim, j).unwrap();
            acc.add(&x.mul(&x).unwrap()).unwrap()
        })
    }

    #[test]
    fn r_squared_derivative() {
        let r2 = RadialPoly::radial(3, 2);
        for j in 0..3 {
            assert_eq!(r2.derive(j), RadialPoly::coord(3, j).unwrap().scale(2.0));
        }
        assert_eq!(sum_of_squares(3), r2);
        assert_eq!(RadialPoly::coord(3, 0).unwrap().derive(0), RadialPoly::one(3));
    }

    #[test]
    fn inverse_r_is_harmonic_in_three_dimensions() {
        let f = RadialPoly::radial(3, -1);
        let lap = (0..3).fold(RadialPoly::zero(3), |acc, j| acc.add(&f.derive(j).derive(j)).unwrap());
        assert!(lap.is_zero());
        let f4 = RadialPoly::radial(4, -1);
        let lap4 = (0..4).fold(RadialPoly::zero(4), |acc, j| acc.add(&f4.derive(j).derive(j)).unwrap());
        assert!(!lap4.is_zero());
    }

    #[test]
    fn canonical_form_is_representation_independent() {
        let one = sum_of_squares(3).mul(&RadialPoly::radial(3, -2)).unwrap();
        assert_eq!(one, RadialPoly::one(3));
        assert_eq!(one.normalize(), one);
        assert!(RadialPoly::one(3).add(&RadialPoly::one(4)).is_err());
        assert!(RadialPoly::coord(2, 2).is_err());
    }

    #[test]
    fn evaluation_agrees_with_canonicalisation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let raw: Vec<_> = (0..4)
                .map(|_| ((vec![rng.gen_range(0..4), rng.gen_range(0..3), rng.gen_range(0..2)], rng.gen_range(-3..3)), 1.0))
                .collect();
            let mut naive = 0.0;
            let x = [0.3, -0.8, 1.1];
            let r = (x.iter().map(|v| v * v).sum::<f64>()).sqrt();
            for ((a, s), c) in &raw {
                naive += c * x[0].powi(a[0] as i32) * x[1].powi(a[1] as i32) * x[2].powi(a[2] as i32) * r.powi(*s);
            }
            let p = RadialPoly::from_terms_unchecked(3, raw);
            assert!((p.eval(&x).unwrap() - naive).abs() < 1e-10 * (1.0 + naive.abs()));
            assert!(p.terms().all(|(a, _, _)| a[0] <= 1));
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = [0.7, -0.4, 0.9];
        for _ in 0..20 {
            let p = random_poly(&mut rng, 3, 4, 2);
            for j in 0..3 {
                let fd = crate::numeric::finite_diff(|z| p.eval(z).unwrap(), &x, &{
                    let mut e = [0.0; 3];
                    e[j] = 1.0;
                    e
                }, 1, 1e-5);
                let exact = p.derive(j).eval(&x).unwrap();
                assert!((fd - exact).abs() < 1e-6 * (1.0 + exact.abs()), "{fd} vs {exact}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn leibniz_rule(seed in any::<u64>(), j in 0usize..3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_poly(&mut rng, 3, 3, 2);
            let g = random_poly(&mut rng, 3, 3, 2);
            let lhs = f.mul(&g).unwrap().derive(j);
            let rhs = f.derive(j).mul(&g).unwrap().add(&f.mul(&g.derive(j)).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn normalize_is_idempotent(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_poly(&mut rng, 4, 5, 3);
            prop_assert_eq!(f.normalize(), f.clone());
            prop_assert_eq!(f.normalize().normalize(), f);
        }
    }
}
