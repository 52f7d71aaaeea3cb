use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Zero threshold for coefficient comparisons.
pub const SERIES_TOL: f64 = 1e-12;

/// A rational function `N(q) / (1 − q)^k` in a deformation parameter, with
/// `N` a complex polynomial. Read as a formal power series around `q = 0`.
///
/// Values are kept reduced: trailing zero coefficients are trimmed and common
/// factors of `(1 − q)` cancelled, so equal series have equal fields.
#[derive(Clone, PartialEq)]
pub struct DeformSeries {
    num: Vec<Complex64>,
    den_pow: u32,
}

fn czero(c: Complex64) -> bool {
    c.norm() <= SERIES_TOL
}

impl DeformSeries {
    pub fn zero() -> Self {
        Self { num: Vec::new(), den_pow: 0 }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c], 0)
    }

    pub fn real(x: f64) -> Self {
        Self::constant(Complex64::new(x, 0.0))
    }

    /// The parameter itself.
    pub fn param() -> Self {
        Self::polynomial(&[0.0, 1.0])
    }

    /// `1 − q`.
    pub fn lambda() -> Self {
        Self::polynomial(&[1.0, -1.0])
    }

    /// `1 / (1 − q)`.
    pub fn lambda_inv() -> Self {
        Self::new(vec![Complex64::new(1.0, 0.0)], 1)
    }

    /// Real polynomial `Σ c_j q^j`.
    pub fn polynomial(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(), 0)
    }

    pub fn new(num: Vec<Complex64>, den_pow: u32) -> Self {
        let mut s = Self { num, den_pow };
        s.reduce();
        s
    }

    fn reduce(&mut self) {
        while self.num.last().is_some_and(|c| czero(*c)) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den_pow = 0;
            return;
        }
        while self.den_pow > 0 {
            let at_one: Complex64 = self.num.iter().sum();
            let scale = self.num.iter().fold(0.0, |m: f64, c| m.max(c.norm()));
            if at_one.norm() > SERIES_TOL * scale.max(1.0) {
                break;
            }
            // Divide by (1 − q): m_i = n_i + m_{i−1}.
            let mut m = Vec::with_capacity(self.num.len() - 1);
            let mut acc = Complex64::new(0.0, 0.0);
            for c in &self.num[..self.num.len() - 1] {
                acc += c;
                m.push(acc);
            }
            self.num = m;
            self.den_pow -= 1;
            while self.num.last().is_some_and(|c| czero(*c)) {
                self.num.pop();
            }
        }
    }

    pub fn numerator(&self) -> &[Complex64] {
        &self.num
    }

    pub fn denominator_power(&self) -> u32 {
        self.den_pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Constant series with value `c`, if this series is constant.
    pub fn as_constant(&self) -> Option<Complex64> {
        match (self.num.len(), self.den_pow) {
            (0, _) => Some(Complex64::new(0.0, 0.0)),
            (1, 0) => Some(self.num[0]),
            _ => None,
        }
    }

    /// Coefficient of `q^j` in the expansion around `q = 0`.
    pub fn taylor(&self, j: usize) -> Complex64 {
        let k = self.den_pow as usize;
        let binom = |n: usize, r: usize| (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
        self.num
            .iter()
            .enumerate()
            .take(j + 1)
            .map(|(i, c)| {
                let d = j - i;
                let weight = if k == 0 { if d == 0 { 1.0 } else { 0.0 } } else { binom(k - 1 + d, d) };
                c * weight
            })
            .sum()
    }

    pub fn eval(&self, q: f64) -> Complex64 {
        let n: Complex64 = self.num.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * q + c);
        n / (1.0 - q).powi(self.den_pow as i32)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.num.iter().map(|x| x * c).collect(), self.den_pow)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn max_abs(&self) -> f64 {
        self.num.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    fn lifted(&self, den_pow: u32) -> Vec<Complex64> {
        let mut n = self.num.clone();
        for _ in self.den_pow..den_pow {
            let mut m = vec![Complex64::new(0.0, 0.0); n.len() + 1];
            for (i, c) in n.iter().enumerate() {
                m[i] += c;
                m[i + 1] -= c;
            }
            n = m;
        }
        n
    }
}

impl Default for DeformSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for DeformSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.num.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i)q^{}", c.re, c.im, i)?;
        }
        write!(f, ")/(1-q)^{}", self.den_pow)
    }
}

impl Add for &DeformSeries {
    type Output = DeformSeries;
    fn add(self, o: &DeformSeries) -> DeformSeries {
        let k = self.den_pow.max(o.den_pow);
        let (a, b) = (self.lifted(k), o.lifted(k));
        let mut n = vec![Complex64::new(0.0, 0.0); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            n[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            n[i] += c;
        }
        DeformSeries::new(n, k)
    }
}

impl Neg for &DeformSeries {
    type Output = DeformSeries;
    fn neg(self) -> DeformSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Sub for &DeformSeries {
    type Output = DeformSeries;
    fn sub(self, o: &DeformSeries) -> DeformSeries {
        self + &(-o)
    }
}

impl Mul for &DeformSeries {
    type Output = DeformSeries;
    fn mul(self, o: &DeformSeries) -> DeformSeries {
        if self.is_zero() || o.is_zero() {
            return DeformSeries::zero();
        }
        let mut n = vec![Complex64::new(0.0, 0.0); self.num.len() + o.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            for (j, b) in o.num.iter().enumerate() {
                n[i + j] += a * b;
            }
        }
        DeformSeries::new(n, self.den_pow + o.den_pow)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for DeformSeries {
            type Output = DeformSeries;
            fn $m(self, o: DeformSeries) -> DeformSeries { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);
