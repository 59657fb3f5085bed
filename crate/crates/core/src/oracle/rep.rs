//! The spherical representation of `SL(2,R)` with highest restricted weight `lα`
//!
//! Realized on the span of `b_k`, the coefficients of `r₁^{2l-k} r₂^k` in
//! `(rᵀ x r)^l`, as functions on positive-definite symmetric `x` with `g·x = g x gᵀ`.
//! Functions transform by `(g·φ)(x) = φ(g⁻¹ x g⁻ᵀ)`, which sends `(rᵀ x r)^l` to
//! `((g⁻ᵀr)ᵀ x (g⁻ᵀr))^l`; all matrices below act on coefficient vectors in the `b` basis.

use nalgebra::{DMatrix, DVector, Matrix2};

use crate::{Error, Result};

/// Angle of the rotation and parameter of the diagonal element used as generators.
const ROTATION_ANGLE: f64 = 1.0;
const DIAGONAL_PARAM: f64 = 0.5;
const NULL_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct RepModel {
    pub l: u64,
    /// `T(k)` for the rotation by one radian.
    pub rotation: DMatrix<f64>,
    /// `T(a)` for `a = diag(e^{1/2}, e^{-1/2})`.
    pub diagonal: DMatrix<f64>,
    /// `T(n)` for `n = [[1, 1], [0, 1]]`.
    pub unipotent: DMatrix<f64>,
    /// Skew-invariant scalar product, scaled to unit spectral radius.
    pub gram: DMatrix<f64>,
    /// `φ ↦ φ(o)` at the base point `o = I`.
    pub eval: DVector<f64>,
    /// K-fixed vector with `φ(o) = 1`.
    pub phi_k: DVector<f64>,
    /// S-fixed vector with `φ(o) = 1`.
    pub phi_s: DVector<f64>,
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(a: &[f64], n: u64) -> Vec<f64> {
    (0..n).fold(vec![1.0], |acc, _| poly_mul(&acc, a))
}

fn rotation(theta: f64) -> Matrix2<f64> {
    let (s, c) = theta.sin_cos();
    Matrix2::new(c, -s, s, c)
}

fn diagonal(s: f64) -> Matrix2<f64> {
    Matrix2::new(s.exp(), 0.0, 0.0, (-s).exp())
}

impl RepModel {
    pub fn dim(&self) -> usize {
        (2 * self.l + 1) as usize
    }

    /// Coefficients of `(h r)₁^{2l-k} (h r)₂^k` in the monomials `r₁^{2l-j} r₂^j`, as rows.
    fn substitution(l: u64, h: &Matrix2<f64>) -> DMatrix<f64> {
        let d = (2 * l + 1) as usize;
        let first = [h[(0, 0)], h[(0, 1)]];
        let second = [h[(1, 0)], h[(1, 1)]];
        let mut p = DMatrix::zeros(d, d);
        for k in 0..d {
            let row = poly_mul(&poly_pow(&first, 2 * l - k as u64), &poly_pow(&second, k as u64));
            for (j, v) in row.into_iter().enumerate() {
                p[(k, j)] = v;
            }
        }
        p
    }

    /// Matrix of `g` on coefficient vectors.
    pub fn action_for(l: u64, g: &Matrix2<f64>) -> Result<DMatrix<f64>> {
        let inv_t = g
            .try_inverse()
            .ok_or_else(|| Error::Domain("group element is singular".into()))?
            .transpose();
        Ok(Self::substitution(l, &inv_t))
    }

    pub fn action(&self, g: &Matrix2<f64>) -> DMatrix<f64> {
        Self::action_for(self.l, g).expect("unimodular element")
    }

    /// `b_k(x)` for all `k`.
    pub fn basis_values(l: u64, x: &Matrix2<f64>) -> DVector<f64> {
        let q = [x[(0, 0)], 2.0 * x[(0, 1)], x[(1, 1)]];
        DVector::from_vec(poly_pow(&q, l))
    }

    /// Value of the function with coefficient vector `v` at the symmetric matrix `x`.
    pub fn evaluate(&self, v: &DVector<f64>, x: &Matrix2<f64>) -> f64 {
        Self::basis_values(self.l, x).dot(v)
    }

    /// `‖T(k)ᵀ Q T(k) − Q‖` for the rotation by `theta`.
    pub fn orthogonality_defect(&self, theta: f64) -> f64 {
        let t = self.action(&rotation(theta));
        spectral_norm(&(t.transpose() * &self.gram * &t - &self.gram))
    }

    /// `‖T(a)ᵀ Q − Q T(a)‖` for `a = diag(e^{s}, e^{-s})`.
    pub fn self_adjoint_defect(&self, s: f64) -> f64 {
        let t = self.action(&diagonal(s));
        spectral_norm(&(t.transpose() * &self.gram - &self.gram * &t))
    }

    pub fn rotation_residual(&self, v: &DVector<f64>, theta: f64) -> f64 {
        (self.action(&rotation(theta)) * v - v).norm()
    }
}

fn spectral_norm(m: &DMatrix<f64>) -> f64 {
    m.singular_values().max()
}

/// Orthonormal basis of the null space of `m`, as columns.
fn null_space(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.ncols();
    // pad to a square matrix so the SVD returns a full right basis
    let mut sq = DMatrix::zeros(m.nrows().max(n), n);
    sq.rows_mut(0, m.nrows()).copy_from(m);
    let svd = sq.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors");
    let scale = svd.singular_values.max().max(1.0);
    let cols: Vec<DVector<f64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, s)| **s <= NULL_TOL * scale)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect();
    if cols.is_empty() {
        DMatrix::zeros(n, 0)
    } else {
        DMatrix::from_columns(&cols)
    }
}

fn fixed_line(t: &DMatrix<f64>, what: &str) -> Result<DVector<f64>> {
    let id = DMatrix::identity(t.nrows(), t.ncols());
    let ns = null_space(&(t - id));
    if ns.ncols() != 1 {
        return Err(Error::Model(format!("{what}-fixed space has dimension {}, expected 1", ns.ncols())));
    }
    Ok(ns.column(0).into_owned())
}

fn normalize_at_base(v: DVector<f64>, eval: &DVector<f64>, what: &str) -> Result<DVector<f64>> {
    let e = eval.dot(&v);
    if e.abs() <= 1e-12 * v.norm() {
        return Err(Error::Model(format!("evaluation at the base point vanishes on the {what}-fixed line")));
    }
    Ok(v / e)
}

/// Symmetric `Q` with `T(k)ᵀQT(k) = Q` and `T(a)ᵀQ = QT(a)`, positive definite, `‖Q‖ = 1`.
fn skew_invariant_gram(rot: &DMatrix<f64>, diag: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let d = rot.nrows();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
    let mut system = DMatrix::zeros(2 * d * d, pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        let mut e = DMatrix::zeros(d, d);
        e[(i, j)] = 1.0;
        e[(j, i)] = 1.0;
        let m = rot.transpose() * &e * rot - &e;
        let n = diag.transpose() * &e - &e * diag;
        for (r, v) in m.iter().chain(n.iter()).enumerate() {
            system[(r, c)] = *v;
        }
    }
    let ns = null_space(&system);
    if ns.ncols() != 1 {
        return Err(Error::Model(format!(
            "skew-invariant forms span dimension {}, expected 1",
            ns.ncols()
        )));
    }
    let mut q = DMatrix::zeros(d, d);
    for (c, &(i, j)) in pairs.iter().enumerate() {
        q[(i, j)] = ns[(c, 0)];
        q[(j, i)] = ns[(c, 0)];
    }
    let eig = q.clone().symmetric_eigen().eigenvalues;
    let (lo, hi) = (eig.min(), eig.max());
    let q = if lo > 0.0 {
        q / hi
    } else if hi < 0.0 {
        q / lo
    } else {
        return Err(Error::Model("skew-invariant form is not definite".into()));
    };
    Ok(q)
}

pub fn build_rep(l: u64) -> Result<RepModel> {
    let rot = RepModel::action_for(l, &rotation(ROTATION_ANGLE))?;
    let diag = RepModel::action_for(l, &diagonal(DIAGONAL_PARAM))?;
    let unip = RepModel::action_for(l, &Matrix2::new(1.0, 1.0, 0.0, 1.0))?;
    let eval = RepModel::basis_values(l, &Matrix2::identity());
    let phi_k = normalize_at_base(fixed_line(&rot, "K")?, &eval, "K")?;
    let phi_s = normalize_at_base(fixed_line(&unip, "S")?, &eval, "S")?;
    let gram = skew_invariant_gram(&rot, &diag)?;
    Ok(RepModel { l, rotation: rot, diagonal: diag, unipotent: unip, gram, eval, phi_k, phi_s })
}

/// Projection coefficient of `φ^K` on the line of `φ^S`.
pub fn cos2_alpha(rep: &RepModel) -> f64 {
    let ks = rep.phi_k.dot(&(&rep.gram * &rep.phi_s));
    let ss = rep.phi_s.dot(&(&rep.gram * &rep.phi_s));
    ks / ss
}

pub fn default_t_grid() -> Vec<f64> {
    (1..=12).map(f64::from).collect()
}

/// Limit of convergence `e^{-2lt} φ^K(exp(-tξ)·o)` along `ξ = diag(1, -1)`, where
/// `exp(-tξ)·o = diag(e^{-2t}, e^{2t})`; returns the value at the last grid point and the
/// change from the previous one.
pub fn asymptotic_estimate(rep: &RepModel, t_grid: &[f64]) -> Result<(f64, f64)> {
    if t_grid.len() < 2 || t_grid.windows(2).any(|w| !(w[0] < w[1])) || !(t_grid[0] > 0.0) {
        return Err(Error::Domain("t grid must contain at least two increasing positive values".into()));
    }
    let ratio = |t: f64| {
        let x = Matrix2::new((-2.0 * t).exp(), 0.0, 0.0, (2.0 * t).exp());
        rep.evaluate(&rep.phi_k, &x) / (2.0 * rep.l as f64 * t).exp()
    };
    let n = t_grid.len();
    let last = ratio(t_grid[n - 1]);
    let err = (last - ratio(t_grid[n - 2])).abs();
    if !last.is_finite() || err > 1e-8 * last.abs().max(1.0) {
        return Err(Error::NotConverged(err));
    }
    Ok((last, err))
}

pub fn asymptotic_coefficient(rep: &RepModel, t_grid: &[f64]) -> Result<f64> {
    asymptotic_estimate(rep, t_grid).map(|(v, _)| v)
}
