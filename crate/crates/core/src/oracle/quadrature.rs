use std::f64::consts::{FRAC_PI_2, PI};
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;

use super::{iwasawa_h, ubar, RankOneGroup};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureRule {
    /// Adaptive bisection with a fixed Gauss–Legendre rule per panel; the error of a
    /// panel is the difference between the rule on the panel and on its two halves.
    AdaptiveGaussLegendre { order: usize },
}

impl QuadratureRule {
    pub fn id(&self) -> String {
        match self {
            QuadratureRule::AdaptiveGaussLegendre { order } => format!("adaptive-gauss-legendre-{order}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub rule: QuadratureRule,
    /// Fixed Gauss–Legendre order in the angular variable on `SL2C`.
    pub angular_order: usize,
    /// Maximum number of integrand evaluations per integral.
    pub node_budget: usize,
    /// Absolute error target for the normalized integral.
    pub target: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rule: QuadratureRule::AdaptiveGaussLegendre { order: 16 },
            angular_order: 8,
            node_budget: 2_000_000,
            target: 1e-10,
        }
    }
}

impl QuadratureSpec {
    pub const MIN_NODES: usize = 64;
    pub const MIN_TARGET: f64 = 1e-10;

    pub fn with_nodes(mut self, nodes: usize) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn with_target(mut self, target: f64) -> Self {
        self.target = target;
        self
    }

    pub fn substitution(&self) -> &'static str {
        "x = tan(theta) on (-pi/2, pi/2); on SL2C w = tan(theta) e^(i phi), theta in (0, pi/2), phi in (0, 2 pi)"
    }

    pub fn validate(&self) -> Result<()> {
        let QuadratureRule::AdaptiveGaussLegendre { order } = self.rule;
        if order < 2 || self.angular_order < 1 {
            return Err(Error::Domain("quadrature orders must be at least 2 (radial) and 1 (angular)".into()));
        }
        if self.node_budget < Self::MIN_NODES {
            return Err(Error::Domain(format!(
                "node budget {} is below the minimum {}",
                self.node_budget,
                Self::MIN_NODES
            )));
        }
        if !(self.target >= Self::MIN_TARGET) {
            return Err(Error::Domain(format!(
                "target error {:e} is below the minimum {:e}",
                self.target,
                Self::MIN_TARGET
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error: f64,
    pub nodes: usize,
}

struct Panel {
    a: f64,
    b: f64,
    halves: [Complex64; 2],
    err: f64,
}

impl Panel {
    fn fine(&self) -> Complex64 {
        self.halves[0] + self.halves[1]
    }
}

struct Adaptive<'a, F> {
    rule: &'a GaussLegendre,
    f: F,
    cost: usize,
    nodes: usize,
}

impl<F: FnMut(f64) -> Complex64> Adaptive<'_, F> {
    fn gl(&mut self, a: f64, b: f64) -> Complex64 {
        let (h, c) = (0.5 * (b - a), 0.5 * (b + a));
        let mut sum = Complex64::new(0.0, 0.0);
        for &(x, w) in self.rule.as_node_weight_pairs() {
            sum += (self.f)(c + h * x) * w;
        }
        self.nodes += self.cost * self.rule.as_node_weight_pairs().len();
        sum * h
    }

    fn panel(&mut self, a: f64, b: f64, coarse: Complex64) -> Panel {
        let m = 0.5 * (a + b);
        let halves = [self.gl(a, m), self.gl(m, b)];
        let err = (halves[0] + halves[1] - coarse).norm();
        Panel { a, b, halves, err }
    }

    fn integrate(&mut self, a: f64, b: f64, target: f64, budget: usize) -> Result<QuadratureResult> {
        const START: usize = 8;
        let mut panels = Vec::new();
        for i in 0..START {
            let lo = a + (b - a) * i as f64 / START as f64;
            let hi = a + (b - a) * (i + 1) as f64 / START as f64;
            let coarse = self.gl(lo, hi);
            panels.push(self.panel(lo, hi, coarse));
        }
        loop {
            let total: f64 = panels.iter().map(|p| p.err).sum();
            if total <= target {
                panels.sort_by(|p, q| p.a.total_cmp(&q.a));
                let value = kahan(panels.iter().map(Panel::fine));
                return Ok(QuadratureResult { value, error: total, nodes: self.nodes });
            }
            if self.nodes >= budget {
                return Err(Error::Quadrature { target, achieved: total, nodes: self.nodes });
            }
            let worst = panels
                .iter()
                .enumerate()
                .max_by(|(i, p), (j, q)| p.err.total_cmp(&q.err).then(j.cmp(i)))
                .map(|(i, _)| i)
                .expect("nonempty panel list");
            let p = panels.swap_remove(worst);
            let m = 0.5 * (p.a + p.b);
            let left = self.panel(p.a, m, p.halves[0]);
            let right = self.panel(m, p.b, p.halves[1]);
            panels.push(left);
            panels.push(right);
        }
    }
}

fn kahan(values: impl Iterator<Item = Complex64>) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for v in values {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// `∫_Ū e^{-(λ+ρ)(H(ū))} dū / ∫_Ū e^{-2ρ(H(ū))} dū` with `λ = λ_c α`.
pub fn cbar_integral(group: RankOneGroup, lambda_c: Complex64, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    spec.validate()?;
    if !(lambda_c.re > 0.0) || !lambda_c.im.is_finite() {
        return Err(Error::Domain(format!(
            "the defining integral converges only for Re λ_α > 0, got {lambda_c}"
        )));
    }
    let rho = group.rho_coeff();
    let raw_target = spec.target / 4.0;
    let norm = raw_integral(group, Complex64::new(rho, 0.0), spec, raw_target)?;
    let num = raw_integral(group, lambda_c, spec, raw_target)?;
    let value = num.value / norm.value;
    let error = (num.error + value.norm() * norm.error) / norm.value.norm();
    let nodes = num.nodes + norm.nodes;
    if !(error <= spec.target) {
        return Err(Error::Quadrature { target: spec.target, achieved: error, nodes });
    }
    Ok(QuadratureResult { value, error, nodes })
}

fn raw_integral(group: RankOneGroup, lambda_c: Complex64, spec: &QuadratureSpec, target: f64) -> Result<QuadratureResult> {
    let QuadratureRule::AdaptiveGaussLegendre { order } = spec.rule;
    let rule = GaussLegendre::new(NonZeroUsize::new(order).expect("validated order"));
    let exponent = -(lambda_c + group.rho_coeff());
    // ū(x) has unit determinant, so the decomposition cannot fail
    let weight = |x: Complex64| (exponent * iwasawa_h(&ubar(x), group).expect("unimodular")).exp();
    match group {
        RankOneGroup::SL2R => {
            let f = |theta: f64| {
                let x = theta.tan();
                weight(Complex64::new(x, 0.0)) * (1.0 + x * x)
            };
            Adaptive { rule: &rule, f, cost: 1, nodes: 0 }.integrate(-FRAC_PI_2, FRAC_PI_2, target, spec.node_budget)
        }
        RankOneGroup::SL2C => {
            let angular = GaussLegendre::new(NonZeroUsize::new(spec.angular_order).expect("validated order"));
            let f = |theta: f64| {
                let r = theta.tan();
                let mut sum = Complex64::new(0.0, 0.0);
                for &(t, w) in angular.as_node_weight_pairs() {
                    let phi = PI * (t + 1.0);
                    sum += weight(Complex64::from_polar(r, phi)) * (w * PI);
                }
                sum * (r * (1.0 + r * r))
            };
            Adaptive { rule: &rule, f, cost: spec.angular_order, nodes: 0 }.integrate(
                0.0,
                FRAC_PI_2,
                target,
                spec.node_budget,
            )
        }
    }
}
