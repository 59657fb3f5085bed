use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::numeric;
use crate::rational::{self, Rational};

/// `prefactor · 2^pow2 · π^(sqrt_pi/2) · Π Γ(a_i)^(e_i)` with rational `a_i`.
///
/// Arguments are kept exact so that [`GammaExpr::simplify`] can telescope and
/// duplicate factors symbolically. Nonpositive integer arguments are poles and are
/// left in place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExpr {
    prefactor: Rational,
    pow2: Rational,
    sqrt_pi: i64,
    factors: BTreeMap<Rational, i64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GammaValue {
    Finite(f64),
    Pole(u32),
    Zero(u32),
}

fn is_pole(a: &Rational) -> bool {
    a.is_integer() && !a.is_positive()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn pow_i(q: &Rational, e: i64) -> Rational {
    let p = q.pow(e.unsigned_abs() as i32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn f64_ln_abs(q: &Rational) -> f64 {
    match q.to_f64() {
        Some(v) if v.is_normal() => v.abs().ln(),
        _ => rational::ln_abs(q),
    }
}

impl Default for GammaExpr {
    fn default() -> Self {
        Self::one()
    }
}

impl GammaExpr {
    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        Self {
            prefactor: q,
            pow2: Rational::zero(),
            sqrt_pi: 0,
            factors: BTreeMap::new(),
        }
    }

    /// `Γ(a)^e`.
    pub fn gamma_pow(a: Rational, e: i64) -> Self {
        let mut g = Self::one();
        g.push_factor(a, e);
        g
    }

    pub fn gamma(a: Rational) -> Self {
        Self::gamma_pow(a, 1)
    }

    pub fn power_of_two(p: Rational) -> Self {
        Self {
            pow2: p,
            ..Self::one()
        }
    }

    /// `π^(k/2)`.
    pub fn sqrt_pi_power(k: i64) -> Self {
        Self {
            sqrt_pi: k,
            ..Self::one()
        }
    }

    fn push_factor(&mut self, a: Rational, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.factors.entry(a).or_insert(0);
        *slot += e;
        if *slot == 0 {
            // Γ(a)^0 disappears; re-lookup to drop the key cheaply.
            self.factors.retain(|_, v| *v != 0);
        }
    }

    pub fn prefactor(&self) -> &Rational {
        &self.prefactor
    }

    pub fn two_exponent(&self) -> &Rational {
        &self.pow2
    }

    pub fn sqrt_pi_exponent(&self) -> i64 {
        self.sqrt_pi
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.factors.iter().map(|(a, e)| (a, *e))
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn recip(&self) -> Self {
        Self {
            prefactor: self.prefactor.recip(),
            pow2: -&self.pow2,
            sqrt_pi: -self.sqrt_pi,
            factors: self.factors.iter().map(|(a, e)| (a.clone(), -e)).collect(),
        }
    }

    /// Net pole order at the evaluation point: positive for a pole, negative for a zero.
    pub fn pole_order(&self) -> i64 {
        self.factors.iter().filter(|(a, _)| is_pole(a)).map(|(_, e)| e).sum()
    }

    pub fn has_pole_factors(&self) -> bool {
        self.factors.keys().any(is_pole)
    }

    /// A rational number: no gamma factors, no power of π, integral power of two.
    pub fn is_exact(&self) -> bool {
        self.factors.is_empty() && self.sqrt_pi == 0 && self.pow2.is_integer()
    }

    pub fn exact_value(&self) -> Option<Rational> {
        let (q, k) = self.closed_form()?;
        (k == 0).then_some(q)
    }

    /// `(q, k)` with value `q · π^(k/2)`, when no gamma factors and no fractional power of two remain.
    pub fn closed_form(&self) -> Option<(Rational, i64)> {
        if !self.factors.is_empty() || !self.pow2.is_integer() {
            return None;
        }
        let p = self.pow2.to_integer().to_i64()?;
        let two = rational::int(2);
        Some((&self.prefactor * pow_i(&two, p), self.sqrt_pi))
    }

    /// Canonical form.
    ///
    /// Every non-pole factor is shifted by the functional equation to an argument in
    /// `(0, 1)`; `Γ(n) = (n-1)!` and `Γ(1/2) = √π` are folded into the prefactor and
    /// the π power. The duplication formula `Γ(z)Γ(z+1/2) = 2^(1-2z) √π Γ(2z)` is then
    /// applied, in either direction, whenever it strictly lowers the factor count.
    /// The integral part of the power of two is absorbed into the prefactor.
    pub fn simplify(&self) -> Self {
        let half = rational::ratio(1, 2);
        let mut out = Self {
            prefactor: self.prefactor.clone(),
            pow2: self.pow2.clone(),
            sqrt_pi: self.sqrt_pi,
            factors: BTreeMap::new(),
        };
        // rational factors are collected unreduced and normalized once
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut scale = |n: BigInt, d: BigInt, e: i64| {
            let (n, d) = if e > 0 { (n, d) } else { (d, n) };
            let k = e.unsigned_abs() as u32;
            num *= n.pow(k);
            den *= d.pow(k);
        };
        for (a, &e) in &self.factors {
            if is_pole(a) {
                out.push_factor(a.clone(), e);
                continue;
            }
            if a.is_integer() {
                let n = a.to_integer().to_u64().expect("positive integer argument");
                scale(factorial(n - 1), BigInt::one(), e);
                continue;
            }
            let base = rational::fract(a);
            let shift = rational::floor(a).to_i64().expect("gamma argument out of range");
            // Γ(base + k) = Γ(base) · (base)_k, with (base)_k for negative k a reciprocal product;
            // with base = p/q this is Π (p + jq) / q^k
            let (p, q) = (base.numer(), base.denom());
            let mut rn = BigInt::one();
            let mut rd = BigInt::one();
            if shift > 0 {
                for j in 0..shift {
                    rn *= p + q * j;
                    rd *= q;
                }
            } else {
                for j in 1..=-shift {
                    rn *= q;
                    rd *= p - q * j;
                }
            }
            scale(rn, rd, e);
            if base == half {
                out.sqrt_pi += e;
            } else {
                out.push_factor(base, e);
            }
        }
        out.prefactor *= Rational::new(num, den);
        while out.duplicate_once() {}
        let whole = rational::floor(&out.pow2);
        if !whole.is_zero() {
            let w = whole.to_i64().expect("power of two out of range");
            out.prefactor *= pow_i(&rational::int(2), w);
            out.pow2 -= Rational::from_integer(whole);
        }
        out
    }

    fn duplicate_once(&mut self) -> bool {
        let half = rational::ratio(1, 2);
        let mut candidates: Vec<Rational> = Vec::new();
        for g in self.factors.keys().filter(|g| !is_pole(g)) {
            if g < &half {
                candidates.push(g.clone());
            }
            if g > &half {
                candidates.push(g - &half);
            }
            candidates.push(g / rational::int(2));
        }
        candidates.sort();
        candidates.dedup();

        let exp = |f: &BTreeMap<Rational, i64>, a: &Rational| f.get(a).copied().unwrap_or(0);
        let mut best: Option<(usize, i64, Rational)> = None;
        let mut best_gain = 0usize;
        for z in candidates {
            let upper = &z + &half;
            let double = &z * rational::int(2);
            let double_is_pi = double == half;
            let a = exp(&self.factors, &z);
            let b = exp(&self.factors, &upper);
            let c = if double_is_pi { 0 } else { exp(&self.factors, &double) };
            let nnz = |x: i64, y: i64, w: i64| {
                usize::from(x != 0) + usize::from(y != 0) + usize::from(!double_is_pi && w != 0)
            };
            let current = nnz(a, b, c);
            let mut options = vec![a, b];
            if !double_is_pi {
                options.push(-c);
            }
            options.sort_by_key(|t| (t.abs(), *t));
            for t in options.into_iter().filter(|&t| t != 0) {
                let new = nnz(a - t, b - t, c + t);
                if new < current && current - new > best_gain {
                    best_gain = current - new;
                    best = Some((current - new, t, z.clone()));
                }
            }
        }
        let Some((_, t, z)) = best else {
            return false;
        };
        let upper = &z + &half;
        let double = &z * rational::int(2);
        self.push_factor(z.clone(), -t);
        self.push_factor(upper, -t);
        if double == half {
            self.sqrt_pi += t;
        } else {
            self.push_factor(double, t);
        }
        self.sqrt_pi += t;
        self.pow2 += (rational::int(1) - rational::int(2) * &z) * rational::int(t);
        true
    }

    /// Floating-point value, combining factors in log space.
    ///
    /// With equal numbers of gamma poles upstairs and downstairs the removable limit
    /// along a common shift of the pole arguments is returned.
    pub fn eval(&self) -> GammaValue {
        if self.prefactor.is_zero() {
            return GammaValue::Finite(0.0);
        }
        let order = self.pole_order();
        if order > 0 {
            return GammaValue::Pole(order as u32);
        }
        if order < 0 {
            return GammaValue::Zero((-order) as u32);
        }
        let mut ln = f64_ln_abs(&self.prefactor)
            + rational::to_f64(&self.pow2) * LN_2
            + self.sqrt_pi as f64 * 0.5 * PI.ln();
        let mut negative = self.prefactor.is_negative();
        for (a, &e) in &self.factors {
            let (l, s) = if is_pole(a) {
                // residue of Γ at -n is (-1)^n / n!
                let n = (-a).to_integer().to_u64().expect("pole index");
                let ln_fact: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
                (-ln_fact, if n % 2 == 1 { -1.0 } else { 1.0 })
            } else {
                numeric::ln_gamma_real(rational::to_f64(a))
            };
            ln += e as f64 * l;
            if s < 0.0 && e % 2 != 0 {
                negative = !negative;
            }
        }
        let v = ln.exp();
        GammaValue::Finite(if negative { -v } else { v })
    }
}

impl Mul for &GammaExpr {
    type Output = GammaExpr;
    fn mul(self, rhs: &GammaExpr) -> GammaExpr {
        let mut out = GammaExpr {
            prefactor: &self.prefactor * &rhs.prefactor,
            pow2: &self.pow2 + &rhs.pow2,
            sqrt_pi: self.sqrt_pi + rhs.sqrt_pi,
            factors: self.factors.clone(),
        };
        for (a, &e) in &rhs.factors {
            out.push_factor(a.clone(), e);
        }
        out
    }
}

impl Mul for GammaExpr {
    type Output = GammaExpr;
    fn mul(self, rhs: GammaExpr) -> GammaExpr {
        &self * &rhs
    }
}

impl fmt::Display for GammaExpr {
    /// ASCII rendering such as `1/2 * 2^(1/2) * pi^(1/2) * gamma(1/4)^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational::format(&self.prefactor))?;
        if !self.pow2.is_zero() {
            write!(f, " * 2^({})", rational::format(&self.pow2))?;
        }
        if self.sqrt_pi != 0 {
            write!(f, " * pi^({}/2)", self.sqrt_pi)?;
        }
        for (a, e) in &self.factors {
            if *e == 1 {
                write!(f, " * gamma({})", rational::format(a))?;
            } else {
                write!(f, " * gamma({})^{e}", rational::format(a))?;
            }
        }
        Ok(())
    }
}
