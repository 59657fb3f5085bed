//! The Harish-Chandra c-function through the Gindikin–Karpelevich product
//!
//! `c(λ) = κ Π_{α ∈ Δ⁺⁺} 2^{-λ_α} Γ(λ_α) / [Γ(λ_α/2 + m_α/4 + 1/2) Γ(λ_α/2 + m_α/4 + m_{2α}/2)]`
//!
//! with `κ` fixed by `c(ρ) = 1`. Rational arguments go through [`GammaExpr`] and stay
//! exact whenever the factors telescope; complex arguments are evaluated numerically.

use std::f64::consts::LN_2;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::gamma::numeric::{ln_gamma, pole_index};
use crate::gamma::{GammaExpr, GammaValue};
use crate::numfmt;
use crate::rational::{self, Rational};
use crate::root_system::{ComplexWeight, LambdaElement, PositiveRoot, RestrictedRootSystem, Weight};
use crate::{Error, Result};

#[cfg(test)]
mod tests;

/// An evaluated c-function value.
#[derive(Clone, Debug, PartialEq)]
pub enum CValue {
    ExactRational(Rational),
    RealFloat(f64),
    ComplexFloat(Complex64),
    /// Net gamma-pole order at the evaluation point.
    Pole(u32),
    /// Net gamma-zero order at the evaluation point.
    Zero(u32),
}

impl CValue {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            CValue::ExactRational(q) => Some(q),
            _ => None,
        }
    }

    /// Real value, if the result is finite and real.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            CValue::ExactRational(q) => Some(rational::to_f64(q)),
            CValue::RealFloat(v) => Some(*v),
            CValue::Zero(_) => Some(0.0),
            CValue::ComplexFloat(_) | CValue::Pole(_) => None,
        }
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match self {
            CValue::ComplexFloat(z) => Some(*z),
            _ => self.as_f64().map(|v| Complex64::new(v, 0.0)),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CValue::ExactRational(_) => "exact",
            CValue::RealFloat(_) => "real",
            CValue::ComplexFloat(_) => "complex",
            CValue::Pole(_) => "pole",
            CValue::Zero(_) => "zero",
        }
    }

    fn from_expr(g: &GammaExpr) -> Self {
        if let Some(q) = g.exact_value() {
            return CValue::ExactRational(q);
        }
        match g.eval() {
            GammaValue::Finite(v) => CValue::RealFloat(v),
            GammaValue::Pole(k) => CValue::Pole(k),
            GammaValue::Zero(k) => CValue::Zero(k),
        }
    }
}

impl fmt::Display for CValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CValue::ExactRational(q) => f.write_str(&rational::format(q)),
            CValue::RealFloat(v) => f.write_str(&numfmt::sig17(*v)),
            CValue::ComplexFloat(z) => {
                let sign = if z.im.is_sign_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", numfmt::sig17(z.re), sign, numfmt::sig17(z.im.abs()))
            }
            CValue::Pole(k) => write!(f, "pole(order {k})"),
            CValue::Zero(k) => write!(f, "zero(order {k})"),
        }
    }
}

/// Which formula [`radon_eigenvalue_with`] uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// The most specialized formula that applies.
    #[default]
    Auto,
    General,
    Reduced,
    EvenMultiplicity,
}

/// Settings for the complex-argument path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericOptions {
    /// Distance below which an argument counts as a nonpositive integer.
    pub pole_tolerance: f64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        Self { pole_tolerance: 1e-12 }
    }
}

fn half_shifts(alpha: &PositiveRoot) -> (Rational, Rational) {
    let m = Rational::from_integer(alpha.multiplicity.into());
    let m2 = Rational::from_integer(alpha.m_double().into());
    let q = &m / rational::int(4);
    (&q + rational::ratio(1, 2), &q + &m2 / rational::int(2))
}

fn check_indivisible(alpha: &PositiveRoot) -> Result<()> {
    if alpha.divisible {
        return Err(Error::Domain(format!(
            "root {:?} is divisible; the product runs over indivisible roots",
            alpha.simple_coords
        )));
    }
    Ok(())
}

/// One factor of the product, unsimplified.
pub fn gk_term(rs: &RestrictedRootSystem, alpha: &PositiveRoot, lambda: &Weight) -> Result<GammaExpr> {
    check_indivisible(alpha)?;
    let l = rs.pairing(lambda, &alpha.vector);
    Ok(gk_term_at(alpha, &l))
}

fn gk_term_at(alpha: &PositiveRoot, l: &Rational) -> GammaExpr {
    let (s1, s2) = half_shifts(alpha);
    let h = l / rational::int(2);
    let mut g = &GammaExpr::power_of_two(-l) * &GammaExpr::gamma(l.clone());
    g = &g * &GammaExpr::gamma_pow(&h + s1, -1);
    &g * &GammaExpr::gamma_pow(&h + s2, -1)
}

/// `Π Γ(z)^e` accumulated in log space, tracking poles separately.
struct LogProduct {
    ln: Complex64,
    order: i64,
    tol: f64,
}

impl LogProduct {
    fn new(tol: f64) -> Self {
        Self { ln: Complex64::zero(), order: 0, tol }
    }

    fn gamma(&mut self, z: Complex64, e: i64) {
        if let Some(n) = pole_index(z, self.tol) {
            // residue of Γ at -n is (-1)^n / n!, used for the removable limit
            let ln_fact: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
            let phase = if n % 2 == 1 { std::f64::consts::PI } else { 0.0 };
            self.ln += Complex64::new(-ln_fact, phase) * e as f64;
            self.order += e;
        } else {
            self.ln += ln_gamma(z) * e as f64;
        }
    }

    fn finish(self, scale: f64) -> CValue {
        match self.order {
            o if o > 0 => CValue::Pole(o as u32),
            o if o < 0 => CValue::Zero((-o) as u32),
            _ => CValue::ComplexFloat(self.ln.exp() * scale),
        }
    }
}

/// One factor of the product at a complex point.
pub fn gk_term_complex(
    rs: &RestrictedRootSystem,
    alpha: &PositiveRoot,
    lambda: &ComplexWeight,
    opts: &NumericOptions,
) -> Result<CValue> {
    check_indivisible(alpha)?;
    let mut acc = LogProduct::new(opts.pole_tolerance);
    push_term_complex(&mut acc, alpha, rs.pairing_complex(lambda, &alpha.vector));
    Ok(acc.finish(1.0))
}

fn push_term_complex(acc: &mut LogProduct, alpha: &PositiveRoot, l: Complex64) {
    let (s1, s2) = half_shifts(alpha);
    acc.ln -= l * LN_2;
    acc.gamma(l, 1);
    acc.gamma(l / 2.0 + rational::to_f64(&s1), -1);
    acc.gamma(l / 2.0 + rational::to_f64(&s2), -1);
}

fn product_raw(rs: &RestrictedRootSystem, lambda: &Weight) -> GammaExpr {
    rs.indivisible_positive_roots()
        .into_iter()
        .map(|a| gk_term_at(a, &rs.pairing(lambda, &a.vector)))
        .fold(GammaExpr::one(), |acc, t| &acc * &t)
}

/// Product of [`gk_term`] over `Δ⁺⁺`, canonicalized.
pub fn c_unnormalized(rs: &RestrictedRootSystem, lambda: &Weight) -> GammaExpr {
    product_raw(rs, lambda).simplify()
}

pub fn c_unnormalized_complex(
    rs: &RestrictedRootSystem,
    lambda: &ComplexWeight,
    opts: &NumericOptions,
) -> CValue {
    let mut acc = LogProduct::new(opts.pole_tolerance);
    for a in rs.indivisible_positive_roots() {
        push_term_complex(&mut acc, a, rs.pairing_complex(lambda, &a.vector));
    }
    acc.finish(1.0)
}

fn singular_at_rho(rs: &RestrictedRootSystem) -> Error {
    Error::Internal(format!("unnormalized c-function of `{}` is singular at rho", rs.name()))
}

/// `κ = 1 / c_unnormalized(ρ)`.
pub fn kappa(rs: &RestrictedRootSystem) -> Result<GammaExpr> {
    let at_rho = c_unnormalized(rs, rs.rho());
    if at_rho.has_pole_factors() || at_rho.prefactor().is_zero() {
        return Err(singular_at_rho(rs));
    }
    Ok(at_rho.recip().simplify())
}

/// `Π_{α>0} Γ(ρ_α + m_α/2) / Γ(ρ_α)`, the constant of the reduced formula.
pub fn kappa_reduced(rs: &RestrictedRootSystem) -> Result<GammaExpr> {
    require_reduced(rs)?;
    Ok(rs
        .positive_roots()
        .iter()
        .map(|a| {
            let r = rs.pairing(rs.rho(), &a.vector);
            let m2 = Rational::from_integer(a.multiplicity.into()) / rational::int(2);
            &GammaExpr::gamma(&r + m2) * &GammaExpr::gamma_pow(r, -1)
        })
        .fold(GammaExpr::one(), |acc, t| &acc * &t)
        .simplify())
}

/// `κ · c_unnormalized(λ)` in canonical form.
pub fn c_expr(rs: &RestrictedRootSystem, lambda: &Weight) -> Result<GammaExpr> {
    let at_rho = product_raw(rs, rs.rho());
    if at_rho.has_pole_factors() {
        return Err(singular_at_rho(rs));
    }
    Ok((&at_rho.recip() * &product_raw(rs, lambda)).simplify())
}

pub fn c_function(rs: &RestrictedRootSystem, lambda: &Weight) -> Result<CValue> {
    Ok(CValue::from_expr(&c_expr(rs, lambda)?))
}

pub fn c_function_complex(rs: &RestrictedRootSystem, lambda: &ComplexWeight) -> Result<CValue> {
    c_function_complex_with(rs, lambda, &NumericOptions::default())
}

pub fn c_function_complex_with(
    rs: &RestrictedRootSystem,
    lambda: &ComplexWeight,
    opts: &NumericOptions,
) -> Result<CValue> {
    let mut acc = LogProduct::new(opts.pole_tolerance);
    let rho = rs.rho().to_complex();
    for a in rs.indivisible_positive_roots() {
        push_term_complex(&mut acc, a, rs.pairing_complex(lambda, &a.vector));
        // κ as the reciprocal of the same product at ρ, where every argument is positive
        let mut at_rho = LogProduct::new(opts.pole_tolerance);
        push_term_complex(&mut at_rho, a, rs.pairing_complex(&rho, &a.vector));
        if at_rho.order != 0 {
            return Err(singular_at_rho(rs));
        }
        acc.ln -= at_rho.ln;
    }
    Ok(acc.finish(1.0))
}

fn require_reduced(rs: &RestrictedRootSystem) -> Result<()> {
    if rs.is_reduced() {
        Ok(())
    } else {
        Err(Error::Domain(format!("`{}` is not a reduced root system", rs.name())))
    }
}

/// `κ Π_{α>0} Γ(λ_α) / Γ(λ_α + m_α/2)` with the reduced `κ`.
pub fn c_reduced(rs: &RestrictedRootSystem, lambda: &Weight) -> Result<CValue> {
    let product = rs
        .positive_roots()
        .iter()
        .map(|a| {
            let l = rs.pairing(lambda, &a.vector);
            let m2 = Rational::from_integer(a.multiplicity.into()) / rational::int(2);
            &GammaExpr::gamma(l.clone()) * &GammaExpr::gamma_pow(&l + m2, -1)
        })
        .fold(kappa_reduced(rs)?, |acc, t| &acc * &t);
    Ok(CValue::from_expr(&product.simplify()))
}

/// `Π_{α>0} Π_{j<m_α/2} (ρ_α + j) / (λ_α + j)` for reduced systems with even multiplicities.
pub fn c_even_multiplicity(rs: &RestrictedRootSystem, lambda: &Weight) -> Result<CValue> {
    require_reduced(rs)?;
    if !rs.has_even_multiplicities() {
        return Err(Error::Domain(format!("`{}` has odd multiplicities", rs.name())));
    }
    let mut value = Rational::one();
    let mut poles = 0u32;
    for a in rs.positive_roots() {
        let r = rs.pairing(rs.rho(), &a.vector);
        let l = rs.pairing(lambda, &a.vector);
        for j in 0..i64::from(a.multiplicity / 2) {
            let den = &l + rational::int(j);
            value *= &r + rational::int(j);
            if den.is_zero() {
                poles += 1;
            } else {
                value /= den;
            }
        }
    }
    Ok(if poles > 0 { CValue::Pole(poles) } else { CValue::ExactRational(value) })
}

/// Eigenvalue `c(λ + ρ)` of the dual Radon transform on the `λ`-component.
pub fn radon_eigenvalue(rs: &RestrictedRootSystem, lambda: &LambdaElement) -> Result<CValue> {
    radon_eigenvalue_with(rs, lambda, Strategy::Auto)
}

pub fn radon_eigenvalue_with(
    rs: &RestrictedRootSystem,
    lambda: &LambdaElement,
    strategy: Strategy,
) -> Result<CValue> {
    let point = &rs.weight_of(lambda)? + rs.rho();
    let strategy = match strategy {
        Strategy::Auto if rs.is_reduced() && rs.has_even_multiplicities() => Strategy::EvenMultiplicity,
        Strategy::Auto if rs.is_reduced() => Strategy::Reduced,
        Strategy::Auto => Strategy::General,
        s => s,
    };
    let value = match strategy {
        Strategy::EvenMultiplicity => c_even_multiplicity(rs, &point)?,
        Strategy::Reduced => c_reduced(rs, &point)?,
        _ => c_function(rs, &point)?,
    };
    match value.as_f64() {
        Some(v) if v.is_finite() && v > 0.0 => Ok(value),
        _ => Err(Error::Internal(format!(
            "eigenvalue of `{}` at {lambda} is {value}, expected a finite positive number",
            rs.name()
        ))),
    }
}

fn product(range: impl Iterator<Item = u64>) -> Rational {
    range.fold(Rational::one(), |acc, k| acc * rational::int(k as i64))
}

/// `c_l` on real hyperbolic `n`-space from the two parity branches
///
/// `n` even: `(n+l-1)⋯(n+2l-2) / (2^{2l} (n/2)⋯(n/2+l-1))`;
/// `n` odd: `Π_{j=1}^{l-1}(k+j) / (2 Π_{j=0}^{l-2}(n+j))` with `k = (n-1)/2`.
pub fn hyperbolic_closed_form(n: u64, l: u64) -> Result<CValue> {
    if n < 2 {
        return Err(Error::Domain(format!("hyperbolic space needs n >= 2, got {n}")));
    }
    if l == 0 {
        return Ok(CValue::ExactRational(Rational::one()));
    }
    let value = if n.is_multiple_of(2) {
        let h = n / 2;
        let four = rational::int(4).pow(l as i32);
        product(n + l - 1..=n + 2 * l - 2) / (four * product(h..h + l))
    } else {
        let k = (n - 1) / 2;
        product(k + 1..k + l) / (rational::int(2) * product(n..n + l - 1))
    };
    Ok(CValue::ExactRational(value))
}

/// `λ_α` for every `α ∈ Δ⁺⁺`, in root order.
pub fn indivisible_pairings(rs: &RestrictedRootSystem, lambda: &Weight) -> Vec<Rational> {
    rs.indivisible_positive_roots()
        .into_iter()
        .map(|a| rs.pairing(lambda, &a.vector))
        .collect()
}

/// True when every `λ_α` over `Δ⁺⁺` is positive, the convergence region of the integral.
pub fn in_convergence_region(rs: &RestrictedRootSystem, lambda: &Weight) -> bool {
    indivisible_pairings(rs, lambda).iter().all(Signed::is_positive)
}
