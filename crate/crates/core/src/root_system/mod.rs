//! Restricted root systems with multiplicities.
//!
//! Roots live in an ambient rational inner-product space. Everything here is exact:
//! the β-basis, the restricted weights `ω_j` dual to it, `ρ`, and the pairings
//! `λ_α = (λ, α) / (α, α)` that feed the c-function.

mod catalog;
mod classical;
mod description;
mod weight;

use std::collections::HashMap;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use catalog::{build_from_catalog, shipped_systems, Catalog, FamilyInfo, FAMILIES};
pub use classical::{LengthClass, RootType};
pub use description::{build_custom, load_description, parse_description, Multiplicities, RootDescription, RootSystemDescription};
pub use weight::{ComplexWeight, LambdaElement, Weight};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// The rank-one worked examples.
    Reference,
    /// Standard classification tables.
    External,
    /// Loaded from a user description.
    User,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Self::Reference => "reference",
            Self::External => "external",
            Self::User => "user",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SystemKind {
    Classical(RootType),
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub vector: Weight,
    /// Coordinates in the simple-root basis.
    pub simple_coords: Vec<i64>,
    pub multiplicity: u32,
    pub class: Option<LengthClass>,
    /// `Some(m_{2α})` when `2α` is also a root.
    pub double_multiplicity: Option<u32>,
    /// `α / 2` is a root.
    pub divisible: bool,
}

impl PositiveRoot {
    pub fn m_double(&self) -> u32 {
        self.double_multiplicity.unwrap_or(0)
    }
}

/// Raw root data before validation: simple coordinates, multiplicity, class.
pub(crate) type RootInput = (Vec<i64>, u32, Option<LengthClass>);

#[derive(Clone, Debug)]
pub struct RestrictedRootSystem {
    name: String,
    kind: SystemKind,
    rank: usize,
    simple_roots: Vec<Weight>,
    gram: Vec<Vec<Rational>>,
    positive_roots: Vec<PositiveRoot>,
    provenance: Provenance,
    fundamental: Vec<Weight>,
    rho: Weight,
}

impl RestrictedRootSystem {
    pub(crate) fn from_parts(
        name: String,
        kind: SystemKind,
        simple_roots: Vec<Weight>,
        gram: Vec<Vec<Rational>>,
        roots: Vec<RootInput>,
        provenance: Provenance,
    ) -> Result<Self> {
        let label = name.clone();
        let invalid = |m: String| Error::InvalidRootSystem(format!("{label}: {m}"));
        let rank = simple_roots.len();
        if rank == 0 {
            return Err(invalid("rank must be positive".into()));
        }
        let dim = gram.len();
        if simple_roots.iter().any(|s| s.dim() != dim) {
            return Err(invalid(format!("simple roots must have {dim} coordinates")));
        }
        if !rational::is_positive_definite(&gram) {
            return Err(invalid("Gram matrix is not symmetric positive definite".into()));
        }
        let simple_rows: Vec<Vec<Rational>> = simple_roots.iter().map(|s| s.coords().to_vec()).collect();
        if rational::rank(&simple_rows) != rank {
            return Err(invalid("simple roots are linearly dependent".into()));
        }

        let mut seen = HashMap::new();
        let mut positive = Vec::with_capacity(roots.len());
        for (coords, m, class) in roots {
            if coords.len() != rank {
                return Err(invalid(format!("root {coords:?} needs {rank} simple coordinates")));
            }
            if coords.iter().any(|&c| c < 0) || coords.iter().all(|&c| c == 0) {
                return Err(invalid(format!(
                    "root {coords:?} is not a nonzero nonnegative combination of simple roots"
                )));
            }
            if m == 0 {
                return Err(invalid(format!("root {coords:?} has non-positive multiplicity")));
            }
            if seen.insert(coords.clone(), m).is_some() {
                return Err(invalid(format!("root {coords:?} listed twice")));
            }
            let mut vector = Weight::zero(dim);
            for (c, s) in coords.iter().zip(&simple_roots) {
                vector = &vector + &s.scaled(&rational::int(*c));
            }
            positive.push(PositiveRoot {
                vector,
                simple_coords: coords,
                multiplicity: m,
                class,
                double_multiplicity: None,
                divisible: false,
            });
        }
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            if !seen.contains_key(&e) {
                return Err(invalid(format!("simple root {} missing from the positive roots", i + 1)));
            }
        }
        for root in &mut positive {
            let doubled: Vec<i64> = root.simple_coords.iter().map(|c| 2 * c).collect();
            root.double_multiplicity = seen.get(&doubled).copied();
            if root.simple_coords.iter().all(|c| c % 2 == 0) {
                let half: Vec<i64> = root.simple_coords.iter().map(|c| c / 2).collect();
                if !seen.contains_key(&half) {
                    return Err(invalid(format!(
                        "root {:?} is listed as a double but its half is not a root",
                        root.simple_coords
                    )));
                }
                root.divisible = true;
            }
        }
        positive.sort_by(|a, b| a.simple_coords.cmp(&b.simple_coords));

        let indivisible: Vec<Vec<Rational>> = positive
            .iter()
            .filter(|r| !r.divisible)
            .map(|r| r.vector.coords().to_vec())
            .collect();
        if rational::rank(&indivisible) != rank {
            return Err(invalid("indivisible roots do not span the rank".into()));
        }

        let mut rs = Self {
            name,
            kind,
            rank,
            simple_roots,
            gram,
            positive_roots: positive,
            provenance,
            fundamental: Vec::new(),
            rho: Weight::zero(dim),
        };
        if let SystemKind::Classical(ty) = kind {
            let expected = ty.positive_root_count(rank);
            if rs.positive_roots.len() != expected {
                return Err(invalid(format!(
                    "{} positive roots, type {}{} has {expected}",
                    rs.positive_roots.len(),
                    ty.label(),
                    rank
                )));
            }
        }
        rs.fundamental = rs.solve_fundamental_weights()?;
        rs.rho = rs.compute_rho();
        Ok(rs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.gram.len()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Same system with the Gram matrix multiplied by a positive rational.
    pub fn with_scaled_gram(&self, factor: &Rational) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::Domain("Gram rescaling factor must be positive".into()));
        }
        let gram = self
            .gram
            .iter()
            .map(|row| row.iter().map(|g| g * factor).collect())
            .collect();
        let roots = self
            .positive_roots
            .iter()
            .map(|r| (r.simple_coords.clone(), r.multiplicity, r.class))
            .collect();
        Self::from_parts(
            self.name.clone(),
            self.kind,
            self.simple_roots.clone(),
            gram,
            roots,
            self.provenance,
        )
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        rational::dot(a.coords(), &self.gram, b.coords())
    }

    /// `λ_α = (λ, α) / (α, α)`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Weight) -> Rational {
        let g_alpha = rational::mat_vec(&self.gram, alpha.coords());
        rational::vec_dot(lambda.coords(), &g_alpha) / rational::vec_dot(alpha.coords(), &g_alpha)
    }

    pub fn pairing_complex(&self, lambda: &ComplexWeight, alpha: &Weight) -> Complex64 {
        let norm = rational::to_f64(&self.inner(alpha, alpha));
        let mut acc = Complex64::zero();
        for (i, l) in lambda.coords().iter().enumerate() {
            let g_alpha: Rational = self
                .gram[i]
                .iter()
                .zip(alpha.coords())
                .map(|(g, a)| g * a)
                .sum();
            acc += l * rational::to_f64(&g_alpha);
        }
        acc / norm
    }

    /// Positive roots `α` with `α/2` not a root, in lexicographic simple-coordinate order.
    pub fn indivisible_positive_roots(&self) -> Vec<&PositiveRoot> {
        self.positive_roots.iter().filter(|r| !r.divisible).collect()
    }

    fn simple_root_entry(&self, i: usize) -> &PositiveRoot {
        self.positive_roots
            .iter()
            .find(|r| r.simple_coords.iter().enumerate().all(|(k, &c)| c == i64::from(k == i)))
            .expect("validated: simple roots are positive roots")
    }

    /// `β_j = α_j`, or `2α_j` when `2α_j` is a root.
    pub fn beta_basis(&self) -> Vec<Weight> {
        (0..self.rank)
            .map(|i| {
                let alpha = &self.simple_roots[i];
                if self.simple_root_entry(i).double_multiplicity.is_some() {
                    alpha.scaled(&rational::int(2))
                } else {
                    alpha.clone()
                }
            })
            .collect()
    }

    fn solve_fundamental_weights(&self) -> Result<Vec<Weight>> {
        let betas = self.beta_basis();
        // ω_j = Σ_k c_jk α_k with (ω_j, β_i) = δ_ij (β_i, β_i)
        let m: Vec<Vec<Rational>> = betas
            .iter()
            .map(|b| self.simple_roots.iter().map(|a| self.inner(b, a)).collect())
            .collect();
        (0..self.rank)
            .map(|j| {
                let mut rhs = vec![Rational::zero(); self.rank];
                rhs[j] = self.inner(&betas[j], &betas[j]);
                let c = rational::solve(&m, &rhs).ok_or_else(|| {
                    Error::Internal(format!("{}: restricted-weight system is singular", self.name))
                })?;
                let mut w = Weight::zero(self.ambient_dim());
                for (ck, ak) in c.iter().zip(&self.simple_roots) {
                    w = &w + &ak.scaled(ck);
                }
                Ok(w)
            })
            .collect()
    }

    /// The restricted weights `ω_1, ..., ω_r` generating Λ.
    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    fn compute_rho(&self) -> Weight {
        let mut sum = Weight::zero(self.ambient_dim());
        for r in &self.positive_roots {
            sum = &sum + &r.vector.scaled(&rational::int(i64::from(r.multiplicity)));
        }
        sum.scaled(&rational::ratio(1, 2))
    }

    /// Half-sum of all positive roots counted with multiplicity.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `Σ n_j ω_j`.
    pub fn weight_of(&self, lambda: &LambdaElement) -> Result<Weight> {
        if lambda.coeffs().len() != self.rank {
            return Err(Error::Domain(format!(
                "{} coefficients given, {} has rank {}",
                lambda.coeffs().len(),
                self.name,
                self.rank
            )));
        }
        let mut w = Weight::zero(self.ambient_dim());
        for (&n, omega) in lambda.coeffs().iter().zip(&self.fundamental) {
            if n != 0 {
                w = &w + &omega.scaled(&Rational::from_integer(n.into()));
            }
        }
        Ok(w)
    }

    /// Coordinates of an ambient weight in the simple-root basis, if it lies in their span.
    pub fn simple_coordinates(&self, w: &Weight) -> Option<Vec<Rational>> {
        let m: Vec<Vec<Rational>> = self
            .simple_roots
            .iter()
            .map(|a| self.simple_roots.iter().map(|b| self.inner(a, b)).collect())
            .collect();
        let rhs: Vec<Rational> = self.simple_roots.iter().map(|a| self.inner(a, w)).collect();
        let c = rational::solve(&m, &rhs)?;
        let mut back = Weight::zero(self.ambient_dim());
        for (ck, ak) in c.iter().zip(&self.simple_roots) {
            back = &back + &ak.scaled(ck);
        }
        (back == *w).then_some(c)
    }

    /// `Σ c_i α_i` for coefficients in the simple-root basis.
    pub fn from_simple_coordinates(&self, coeffs: &[Rational]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::Domain(format!(
                "{} coefficients given, {} has rank {}",
                coeffs.len(),
                self.name,
                self.rank
            )));
        }
        let mut w = Weight::zero(self.ambient_dim());
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            w = &w + &a.scaled(c);
        }
        Ok(w)
    }

    pub fn from_simple_coordinates_complex(&self, coeffs: &[Complex64]) -> Result<ComplexWeight> {
        if coeffs.len() != self.rank {
            return Err(Error::Domain(format!(
                "{} coefficients given, {} has rank {}",
                coeffs.len(),
                self.name,
                self.rank
            )));
        }
        let mut out = vec![Complex64::zero(); self.ambient_dim()];
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            for (o, x) in out.iter_mut().zip(a.coords()) {
                *o += c * rational::to_f64(x);
            }
        }
        ComplexWeight::new(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.positive_roots.iter().all(|r| r.double_multiplicity.is_none())
    }

    pub fn has_even_multiplicities(&self) -> bool {
        self.positive_roots.iter().all(|r| r.multiplicity % 2 == 0)
    }

    /// Reduced with every multiplicity equal to 2.
    pub fn is_complex_group(&self) -> bool {
        self.is_reduced() && self.positive_roots.iter().all(|r| r.multiplicity == 2)
    }

    /// `ρ_α` for each indivisible root, in the same order as [`Self::indivisible_positive_roots`].
    pub fn rho_pairings(&self) -> Vec<Rational> {
        self.indivisible_positive_roots()
            .iter()
            .map(|r| self.pairing(&self.rho, &r.vector))
            .collect()
    }

    /// Maximal multiplicity, handy for display.
    pub fn max_multiplicity(&self) -> u32 {
        self.positive_roots.iter().map(|r| r.multiplicity).max().unwrap_or(0)
    }
}

/// `δ_ij` check of the restricted weights against the β-basis; returns the offending pair.
pub fn duality_defect(rs: &RestrictedRootSystem) -> Option<(usize, usize, Rational)> {
    let betas = rs.beta_basis();
    for (j, omega) in rs.fundamental_weights().iter().enumerate() {
        for (i, beta) in betas.iter().enumerate() {
            let v = rs.pairing(omega, beta);
            let want = if i == j { Rational::one() } else { Rational::zero() };
            if v != want {
                return Some((j, i, v));
            }
        }
    }
    None
}

pub(crate) fn multiplicity_u32(value: i64, what: &str) -> Result<u32> {
    if value <= 0 {
        return Err(Error::InvalidRootSystem(format!("non-positive multiplicity {value} for {what}")));
    }
    value
        .to_u32()
        .ok_or_else(|| Error::InvalidRootSystem(format!("multiplicity {value} for {what} is too large")))
}
