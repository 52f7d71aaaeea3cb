use std::collections::BTreeMap;

/// Finite sum `Σ c_j Q^{j/2}` in one positive variable `Q`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HalfPowerPoly {
    terms: BTreeMap<i32, f64>,
}

impl HalfPowerPoly {
    /// `c · Q^{twice_exp/2}`.
    pub fn power(twice_exp: i32, c: f64) -> Self {
        Self::from_terms([(twice_exp, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, f64)>) -> Self {
        let mut out = Self::default();
        for (e, c) in terms {
            *out.terms.entry(e).or_insert(0.0) += c;
        }
        out.terms.retain(|_, c| *c != 0.0);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, f64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn derive(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e - 2, c * e as f64 / 2.0)))
    }

    /// Multiply by `c · Q^{twice_exp/2}`.
    pub fn shift(&self, twice_exp: i32, c: f64) -> Self {
        Self::from_terms(self.terms().map(|(e, d)| (e + twice_exp, c * d)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms().map(|(e, c)| (e, -c))))
    }

    pub fn eval(&self, q: f64) -> f64 {
        self.terms().map(|(e, c)| c * q.powf(e as f64 / 2.0)).sum()
    }
}

/// Radial part of the planar free Hamiltonian in angular sector `m`:
/// `−½ (f'' + f'/Q − m² f/Q²)`.
pub fn sector_hamiltonian(m: i32, f: &HalfPowerPoly) -> HalfPowerPoly {
    let d1 = f.derive();
    let d2 = d1.derive();
    d2.add(&d1.shift(-2, 1.0)).add(&f.shift(-4, -(m * m) as f64)).shift(0, -0.5)
}

/// `−½ (f'' − (m² − ¼) f/Q²)`.
pub fn conjugated_sector_hamiltonian(m: i32, f: &HalfPowerPoly) -> HalfPowerPoly {
    let g2 = (m * m) as f64 - 0.25;
    f.derive().derive().add(&f.shift(-4, -g2)).shift(0, -0.5)
}

/// Largest coefficient of `Q^{1/2} H_m Q^{−1/2} f − H'_m f`.
pub fn radial_sector_check(m: i32, test: &HalfPowerPoly) -> f64 {
    let lhs = sector_hamiltonian(m, &test.shift(-1, 1.0)).shift(1, 1.0);
    lhs.sub(&conjugated_sector_hamiltonian(m, test)).max_abs_coeff()
}
