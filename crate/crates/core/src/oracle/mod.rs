//! Numerical cross-checks on the rank-one groups `SL(2,R)` and `SL(2,C)`
//!
//! Two mechanisms independent of the product formula: quadrature of the defining
//! integral `∫_Ū e^{-(λ+ρ)(H(ū))} dū` ([`cbar_integral`]), and the projection of the
//! zonal spherical polynomial onto the horospherical line in a finite-dimensional
//! model of the spherical representation ([`rep`]).

mod quadrature;
pub mod rep;

use std::fmt;

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

use crate::root_system::{build_from_catalog, RestrictedRootSystem};
use crate::{Error, Result};

pub use quadrature::{cbar_integral, QuadratureResult, QuadratureRule, QuadratureSpec};
pub use rep::{asymptotic_coefficient, build_rep, cos2_alpha, default_t_grid, RepModel};

pub type CMatrix2 = Matrix2<Complex64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankOneGroup {
    /// `X = H²`, `m_α = 1`.
    SL2R,
    /// `X = H³`, `m_α = 2`.
    SL2C,
}

impl RankOneGroup {
    pub fn label(self) -> &'static str {
        match self {
            RankOneGroup::SL2R => "SL2R",
            RankOneGroup::SL2C => "SL2C",
        }
    }

    pub fn matrix_dim(self) -> usize {
        2
    }

    /// Real dimension of `Ū`, equal to `m_α`.
    pub fn ubar_dim(self) -> usize {
        match self {
            RankOneGroup::SL2R => 1,
            RankOneGroup::SL2C => 2,
        }
    }

    pub fn multiplicity(self) -> u32 {
        self.ubar_dim() as u32
    }

    /// `ρ = ρ_c α`.
    pub fn rho_coeff(self) -> f64 {
        f64::from(self.multiplicity()) / 2.0
    }

    pub fn catalog_key(self) -> &'static str {
        match self {
            RankOneGroup::SL2R => "hyperbolic-real-2",
            RankOneGroup::SL2C => "sl2c",
        }
    }

    pub fn root_system(self) -> RestrictedRootSystem {
        build_from_catalog(self.catalog_key()).expect("builtin catalog entry")
    }

    /// The group whose root data `rs` carries: reduced rank one with `m_α ∈ {1, 2}`.
    pub fn for_system(rs: &RestrictedRootSystem) -> Option<Self> {
        if rs.rank() != 1 || !rs.is_reduced() {
            return None;
        }
        match rs.positive_roots()[0].multiplicity {
            1 => Some(RankOneGroup::SL2R),
            2 => Some(RankOneGroup::SL2C),
            _ => None,
        }
    }
}

impl fmt::Display for RankOneGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `g = k · a · u` with `k` unitary, `a = diag(e^{t}, e^{-t})`, `u` upper unipotent.
#[derive(Clone, Debug, PartialEq)]
pub struct Iwasawa {
    pub k: CMatrix2,
    pub a: CMatrix2,
    pub u: CMatrix2,
    /// `α(H(g)) = 2t`.
    pub alpha_h: f64,
}

impl Iwasawa {
    pub fn reconstruct(&self) -> CMatrix2 {
        self.k * self.a * self.u
    }
}

const DET_TOL: f64 = 1e-12;

/// Iwasawa decomposition by Gram–Schmidt on the columns of `g`.
pub fn iwasawa(g: &CMatrix2, group: RankOneGroup) -> Result<Iwasawa> {
    if !g.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("matrix has non-finite entries".into()));
    }
    if group == RankOneGroup::SL2R && g.iter().any(|z| z.im != 0.0) {
        return Err(Error::Domain("SL2R element has complex entries".into()));
    }
    let det = g.determinant();
    if (det - 1.0).norm() > DET_TOL {
        return Err(Error::Domain(format!("det g = {det}, expected 1")));
    }
    let c1: Vector2<Complex64> = g.column(0).into();
    let c2: Vector2<Complex64> = g.column(1).into();
    let r11 = c1.norm();
    let q1 = c1.unscale(r11);
    let r12 = q1.dotc(&c2);
    let rest = c2 - q1 * r12;
    let r22 = rest.norm();
    let q2 = rest.unscale(r22);
    let k = CMatrix2::from_columns(&[q1, q2]);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let a = CMatrix2::new(Complex64::new(r11, 0.0), zero, zero, Complex64::new(r22, 0.0));
    let u = CMatrix2::new(one, r12 / r11, zero, one);
    Ok(Iwasawa { k, a, u, alpha_h: 2.0 * r11.ln() })
}

/// `α(H(g))`.
pub fn iwasawa_h(g: &CMatrix2, group: RankOneGroup) -> Result<f64> {
    iwasawa(g, group).map(|d| d.alpha_h)
}

/// `ū(x) = [[1, 0], [x, 1]]`.
pub fn ubar(x: Complex64) -> CMatrix2 {
    let one = Complex64::new(1.0, 0.0);
    CMatrix2::new(one, Complex64::new(0.0, 0.0), x, one)
}

pub fn real_matrix(m: &Matrix2<f64>) -> CMatrix2 {
    m.map(|v| Complex64::new(v, 0.0))
}

#[cfg(test)]
mod tests;
