use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A point of the dual Cartan space with exact rational ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self::new(self.coords.iter().map(|c| c * factor).collect())
    }

    pub fn to_complex(&self) -> ComplexWeight {
        ComplexWeight {
            coords: self
                .coords
                .iter()
                .map(|c| Complex64::new(rational::to_f64(c), 0.0))
                .collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational::format).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimensions differ");
        Weight::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimensions differ");
        Weight::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl Mul<&Weight> for &Rational {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scaled(self)
    }
}

/// Complex coordinates, used where the c-function is continued off the real weights.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexWeight {
    coords: Vec<Complex64>,
}

impl ComplexWeight {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain("complex weight has a non-finite coordinate".into()));
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Coordinates `(n_1, ..., n_r)` of `Σ n_j ω_j` in the highest-weight semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaElement {
    coeffs: Vec<u64>,
}

impl LambdaElement {
    pub fn new(coeffs: Vec<u64>) -> Self {
        Self { coeffs }
    }

    /// Rejects negative entries, which lie outside the semigroup.
    pub fn from_signed(coeffs: &[i64]) -> Result<Self> {
        coeffs
            .iter()
            .map(|&c| {
                u64::try_from(c).map_err(|_| {
                    Error::Domain(format!("coefficient {c} is negative; Λ needs n_j >= 0"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![0; rank])
    }

    pub fn unit(rank: usize, j: usize) -> Self {
        let mut c = vec![0; rank];
        c[j] = 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// All elements of total degree at most `max_degree`, ordered by degree and then
    /// descending lexicographic order, e.g. `(0,0), (1,0), (0,1), (2,0), ...`.
    pub fn up_to_degree(rank: usize, max_degree: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let mut level = Vec::new();
            compositions(rank, d, &mut Vec::with_capacity(rank), &mut level);
            level.sort_by(|a: &Vec<u64>, b| b.cmp(a));
            out.extend(level.into_iter().map(Self::new));
        }
        out
    }
}

fn compositions(parts: usize, total: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if parts == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(parts - 1, total - first, prefix, out);
        prefix.pop();
    }
}

impl Add for &LambdaElement {
    type Output = LambdaElement;
    fn add(self, rhs: &LambdaElement) -> LambdaElement {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        LambdaElement::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_lambda_rejected() {
        assert!(LambdaElement::from_signed(&[1, -1]).is_err());
        assert_eq!(LambdaElement::from_signed(&[2, 0]).unwrap().degree(), 2);
    }

    #[test]
    fn enumeration_order() {
        let all = LambdaElement::up_to_degree(2, 2);
        let got: Vec<Vec<u64>> = all.iter().map(|l| l.coeffs().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        // C(d + r, r) elements up to degree d
        assert_eq!(LambdaElement::up_to_degree(3, 8).len(), 165);
    }

    #[test]
    fn non_finite_complex_weight() {
        assert!(ComplexWeight::new(vec![Complex64::new(f64::NAN, 0.0)]).is_err());
    }
}
