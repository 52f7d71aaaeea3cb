use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::DeformSeries;
use crate::{Error, Result};

/// Ordered variable names of a polynomial ring.
pub type VarSet = Arc<Vec<String>>;

pub fn var_set(names: &[&str]) -> VarSet {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// `(q1, q2, p1, p2)`.
pub fn s3_vars() -> VarSet {
    var_set(&["q1", "q2", "p1", "p2"])
}

/// `(u, v, z)`.
pub fn sphere_vars() -> VarSet {
    var_set(&["u", "v", "z"])
}

/// `(x, y, w)`.
pub fn su2_vars() -> VarSet {
    var_set(&["x", "y", "w"])
}

/// Commutative polynomial with [`DeformSeries`] coefficients.
#[derive(Clone, PartialEq)]
pub struct CommPoly {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, DeformSeries>,
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}")?;
            for (v, k) in self.vars.iter().zip(e) {
                if *k > 0 {
                    write!(f, "·{v}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl CommPoly {
    pub fn zero(vars: &VarSet) -> Self {
        Self { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: DeformSeries) -> Self {
        let mut p = Self::zero(vars);
        p.accumulate(vec![0; vars.len()], c);
        p
    }

    pub fn real(vars: &VarSet, c: f64) -> Self {
        Self::constant(vars, DeformSeries::real(c))
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {name:?}")))?;
        Ok(Self::var_index(vars, i))
    }

    pub fn var_index(vars: &VarSet, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.accumulate(e, DeformSeries::one());
        p
    }

    /// `c · Π vars^exps`.
    pub fn monomial(vars: &VarSet, exps: &[u32], c: DeformSeries) -> Result<Self> {
        if exps.len() != vars.len() {
            return Err(Error::DimensionMismatch { expected: vars.len(), found: exps.len() });
        }
        let mut p = Self::zero(vars);
        p.accumulate(exps.to_vec(), c);
        Ok(p)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &DeformSeries)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.max_abs()))
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn accumulate(&mut self, e: Vec<u32>, c: DeformSeries) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check(&self, other: &CommPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &CommPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.plus(other))
    }

    pub fn sub(&self, other: &CommPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.minus(other))
    }

    pub fn mul(&self, other: &CommPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.times(other))
    }

    pub(crate) fn plus(&self, other: &CommPoly) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out
    }

    pub(crate) fn minus(&self, other: &CommPoly) -> Self {
        self.plus(&other.scale_real(-1.0))
    }

    pub(crate) fn times(&self, other: &CommPoly) -> Self {
        let mut out = Self::zero(&self.vars);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.accumulate(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &DeformSeries) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, d) in &self.terms {
            out.accumulate(e.clone(), d * c);
        }
        out
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(&DeformSeries::real(c))
    }

    pub fn scale_complex(&self, c: Complex64) -> Self {
        self.scale(&DeformSeries::constant(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(&self.vars, DeformSeries::one()), |acc, _| acc.times(self))
    }

    pub fn derive(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.accumulate(f, c.scale(Complex64::new(e[i] as f64, 0.0)));
            }
        }
        out
    }

    /// Substitute `images[i]` for the `i`-th variable.
    pub fn substitute(&self, images: &[CommPoly]) -> Result<CommPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), found: images.len() });
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .ok_or_else(|| Error::InvalidArgument("empty substitution".into()))?;
        for im in images {
            if im.vars != target {
                return Err(Error::AlphabetMismatch);
            }
        }
        let mut out = CommPoly::zero(&target);
        for (e, c) in &self.terms {
            let term = e
                .iter()
                .zip(images)
                .fold(CommPoly::constant(&target, c.clone()), |acc, (&k, im)| acc.times(&im.pow(k)));
            out = out.plus(&term);
        }
        Ok(out)
    }

    /// Coefficientwise Taylor coefficient of order `j` in the parameter.
    pub fn grade(&self, j: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.accumulate(e.clone(), DeformSeries::constant(c.taylor(j)));
        }
        out
    }

    /// Multiply the order-`j` part in the parameter by `c^j`.
    pub fn rescale_param(&self, c: f64) -> Result<Self> {
        let mut out = Self::zero(&self.vars);
        for (e, d) in &self.terms {
            if d.denominator_power() != 0 {
                return Err(Error::InvalidArgument("rescaling needs polynomial coefficients".into()));
            }
            let num = d.numerator().iter().enumerate().map(|(j, x)| x * c.powi(j as i32)).collect();
            out.accumulate(e.clone(), DeformSeries::new(num, 0));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[f64], param: f64) -> Result<Complex64> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), found: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| c.eval(param) * e.iter().zip(point).map(|(&k, x)| x.powi(k as i32)).product::<f64>())
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let vs = s3_vars();
        let q1 = CommPoly::var(&vs, "q1").unwrap();
        let p1 = CommPoly::var(&vs, "p1").unwrap();
        let sq = q1.plus(&p1).pow(2);
        let expanded = q1.pow(2).plus(&q1.times(&p1).scale_real(2.0)).plus(&p1.pow(2));
        assert_eq!(sq, expanded);
        assert_eq!(sq.derive(0), q1.plus(&p1).scale_real(2.0));
        assert!(q1.add(&CommPoly::var(&sphere_vars(), "u").unwrap()).is_err());
        assert!(CommPoly::var(&vs, "x").is_err());
        assert!((sq.eval(&[1.0, 0.0, 2.0, 0.0], 0.0).unwrap().re - 9.0).abs() < 1e-15);
    }

    #[test]
    fn substitution() {
        let s = su2_vars();
        let vs = s3_vars();
        let x = CommPoly::var(&s, "x").unwrap();
        let f = x.pow(2).plus(&CommPoly::real(&s, 1.0));
        let images = vec![CommPoly::var(&vs, "q1").unwrap(), CommPoly::real(&vs, 0.0), CommPoly::real(&vs, 0.0)];
        let g = f.substitute(&images).unwrap();
        assert_eq!(g, CommPoly::var(&vs, "q1").unwrap().pow(2).plus(&CommPoly::real(&vs, 1.0)));
    }
}
