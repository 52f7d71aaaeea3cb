use super::{LinDiffOp, RadialPoly};
use crate::{Error, Result};

/// Polynomial map `Rᵐ → Rⁿ` together with the exponent `p` such that the
/// target radius pulls back to `|y|^p`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMap {
    pub components: Vec<RadialPoly>,
    pub radial_power: i32,
    source_dim: usize,
}

impl PolyMap {
    pub fn new(source_dim: usize, components: Vec<RadialPoly>, radial_power: i32) -> Result<Self> {
        for c in &components {
            if c.dim() != source_dim {
                return Err(Error::DimensionMismatch { expected: source_dim, found: c.dim() });
            }
            if c.terms().any(|(_, s, _)| s < 0) {
                return Err(Error::InvalidArgument("map components must not contain negative radial powers".into()));
            }
        }
        Ok(Self { components, radial_power, source_dim })
    }

    pub fn identity(dim: usize) -> Self {
        let comps = (0..dim).map(|j| RadialPoly::coord(dim, j).expect("axis in range")).collect();
        Self { components: comps, radial_power: 1, source_dim: dim }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn eval(&self, y: &[f64]) -> Result<Vec<f64>> {
        self.components.iter().map(|c| c.eval(y)).collect()
    }

    /// `f ∘ π`.
    pub fn pullback(&self, f: &RadialPoly) -> Result<RadialPoly> {
        if f.dim() != self.target_dim() {
            return Err(Error::DimensionMismatch { expected: self.target_dim(), found: f.dim() });
        }
        let mut out = RadialPoly::zero(self.source_dim);
        for (alpha, s, c) in f.terms() {
            let mut term = RadialPoly::radial(self.source_dim, self.radial_power * s).scale(c);
            for (comp, &e) in self.components.iter().zip(alpha) {
                term = term.mul_unchecked(&comp.pow(e));
            }
            out = out.add_unchecked(&term, 1.0);
        }
        Ok(out)
    }
}

fn quad(terms: &[([u32; 4], f64)]) -> RadialPoly {
    RadialPoly::from_terms(4, terms.iter().map(|(a, c)| (a.to_vec(), 0, *c))).expect("dimension 4")
}

/// The Kustaanheimo–Stiefel map `R⁴ → R³` in coordinates `(y0, y1, y2, y3)`.
pub fn ks_map() -> PolyMap {
    let x1 = quad(&[([0, 1, 0, 1], 2.0), ([1, 0, 1, 0], 2.0)]);
    let x2 = quad(&[([0, 0, 1, 1], 2.0), ([1, 1, 0, 0], -2.0)]);
    let x3 = quad(&[([0, 2, 0, 0], 1.0), ([0, 0, 2, 0], 1.0), ([0, 0, 0, 2], -1.0), ([2, 0, 0, 0], -1.0)]);
    PolyMap::new(4, vec![x1, x2, x3], 2).expect("well-formed map")
}

pub fn ks_point_map(y: &[f64; 4]) -> [f64; 3] {
    let [y0, y1, y2, y3] = *y;
    [
        2.0 * (y1 * y3 + y2 * y0),
        2.0 * (y2 * y3 - y1 * y0),
        y1 * y1 + y2 * y2 - y3 * y3 - y0 * y0,
    ]
}

pub fn ks_pullback(f: &RadialPoly) -> Result<RadialPoly> {
    ks_map().pullback(f)
}

/// The fiber generator `y3∂y0 − y0∂y3 + y1∂y2 − y2∂y1`.
pub fn x3_generator() -> LinDiffOp {
    let c = |j: usize| RadialPoly::coord(4, j).expect("axis in range");
    let e = |j: usize| {
        let mut s = vec![0; 4];
        s[j] = 1;
        s
    };
    LinDiffOp::from_terms(
        4,
        [(e(0), c(3)), (e(3), c(0).scale(-1.0)), (e(2), c(1)), (e(1), c(2).scale(-1.0))],
    )
    .expect("dimension 4")
}

/// Whether `X₃ g = 0` identically for a function `g` on `R⁴`.
pub fn x3_annihilates(g: &RadialPoly) -> Result<bool> {
    Ok(x3_generator().apply(g)?.is_zero())
}

/// Whether `X₃` annihilates the KS pullback of `f`.
pub fn x3_annihilation_check(f: &RadialPoly) -> Result<bool> {
    x3_annihilates(&ks_pullback(f)?)
}

fn monomials(dim: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|m: Vec<u32>| {
                let used: u32 = m.iter().sum();
                (0..=max_degree - used).map(move |e| {
                    let mut m = m.clone();
                    m.push(e);
                    m
                })
            })
            .collect();
    }
    out
}

/// Largest coefficient of `D_up(π*f) − π*(D_down f)` over the basis
/// `x^α r^s` with `|α| ≤ basis_degree` and `s ∈ {0, −1}`.
pub fn projectability_check(d_up: &LinDiffOp, d_down: &LinDiffOp, map: &PolyMap, basis_degree: u32) -> Result<f64> {
    if d_up.dim() != map.source_dim() {
        return Err(Error::DimensionMismatch { expected: map.source_dim(), found: d_up.dim() });
    }
    if d_down.dim() != map.target_dim() {
        return Err(Error::DimensionMismatch { expected: map.target_dim(), found: d_down.dim() });
    }
    let mut worst = 0.0_f64;
    for alpha in monomials(map.target_dim(), basis_degree) {
        for s in [0, -1] {
            let f = RadialPoly::monomial(&alpha, s, 1.0);
            let up = d_up.apply(&map.pullback(&f)?)?;
            let down = map.pullback(&d_down.apply(&f)?)?;
            worst = worst.max(up.sub(&down)?.max_abs_coeff());
        }
    }
    Ok(worst)
}
