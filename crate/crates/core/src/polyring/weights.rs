use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::{lcm_of_denominators, Rational};
use crate::linalg::Echelon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weights must be strictly positive (weight {index} is {value})")]
    NonPositive { index: usize, value: String },
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot infer weights from a zero or constant polynomial")]
    Constant,
    #[error("weights are underdetermined by the monomials of f; supply them explicitly")]
    Underdetermined,
    #[error("f is not weighted homogeneous for any weight system")]
    Inconsistent,
    #[error("the only weight solution has a non-positive entry ({0})")]
    NonPositiveSolution(String),
}

/// Positive rational weights `(w_1, ..., w_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<Rational>,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rational>) -> Result<Self, WeightError> {
        if let Some((index, w)) = weights.iter().enumerate().find(|(_, w)| !w.is_positive()) {
            return Err(WeightError::NonPositive { index, value: w.to_string() });
        }
        Ok(WeightSystem { weights })
    }

    /// All weights equal to `1/d`.
    pub fn homogeneous(n: usize, d: u32) -> Self {
        WeightSystem { weights: vec![Rational::new(BigInt::one(), BigInt::from(d)); n] }
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// `Σ w_i`.
    pub fn sum(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |a, w| a + w)
    }

    /// `d` when every weight equals `1/d` for a positive integer `d`.
    pub fn common_degree(&self) -> Option<u32> {
        let first = self.weights.first()?;
        if self.weights.iter().any(|w| w != first) || !first.numer().is_one() {
            return None;
        }
        first.denom().to_u32()
    }

    /// Common denominator `L` and integer weights `L * w_i`, so that
    /// weighted degrees become integers ("grid levels").
    pub fn grid(&self) -> (u64, Vec<u64>) {
        let l = lcm_of_denominators(&self.weights);
        let scaled = self
            .weights
            .iter()
            .map(|w| (w * Rational::from_integer(l.clone())).to_integer().to_u64().expect("weight grid fits in u64"))
            .collect();
        (l.to_u64().expect("denominator fits in u64"), scaled)
    }

    pub fn degree_of(&self, m: &Monomial) -> Rational {
        m.exponents()
            .iter()
            .zip(&self.weights)
            .fold(Rational::zero(), |acc, (&e, w)| acc + w * Rational::from_integer(e.into()))
    }

    /// Weighted degree of a weighted-homogeneous polynomial; `None` if zero or inhomogeneous.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Option<Rational> {
        let mut degs = p.monomials().map(|m| self.degree_of(m));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    fn check_dim(&self, n: usize) -> Result<(), WeightError> {
        if n != self.nvars() {
            return Err(WeightError::DimensionMismatch { expected: self.nvars(), got: n });
        }
        Ok(())
    }
}

/// `α(v) = Σ (m_i + 1) w_i`.
pub fn alpha_value(v: &Monomial, w: &WeightSystem) -> Result<Rational, WeightError> {
    w.check_dim(v.nvars())?;
    Ok(w.degree_of(v) + w.sum())
}

/// Solves `Σ m_i w_i = 1` over the monomials of `f` for a unique positive `w`.
pub fn infer_weights(f: &Polynomial) -> Result<WeightSystem, WeightError> {
    if f.is_zero() || f.is_constant() {
        return Err(WeightError::Constant);
    }
    let n = f.nvars();
    let mut ech = Echelon::new();
    for m in f.monomials() {
        let mut row: Vec<(usize, Rational)> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, &e)| (i, Rational::from_integer(e.into())))
            .collect();
        row.push((n, Rational::one()));
        ech.insert(row);
    }
    if ech.pivots().any(|p| p == n) {
        return Err(WeightError::Inconsistent);
    }
    if ech.rank() < n {
        return Err(WeightError::Underdetermined);
    }
    let mut weights = vec![Rational::zero(); n];
    for r in ech.rows() {
        let value = r.iter().find(|(c, _)| *c == n).map(|(_, v)| v.clone()).unwrap_or_else(Rational::zero);
        weights[r[0].0] = value;
    }
    if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
        return Err(WeightError::NonPositiveSolution(w.to_string()));
    }
    Ok(WeightSystem { weights })
}

/// True iff every monomial of `f` has weighted degree one.
///
/// When it holds the Euler identity `Σ w_i x_i ∂_i f = f` is asserted.
pub fn check_weighted_homogeneous(f: &Polynomial, w: &WeightSystem) -> bool {
    if f.nvars() != w.nvars() || f.is_zero() {
        return false;
    }
    let ok = f.monomials().all(|m| w.degree_of(m).is_one());
    if ok {
        let ring = f.ring();
        let mut euler = Polynomial::zero(ring);
        for (i, wi) in w.weights().iter().enumerate() {
            euler = &euler + &(&Polynomial::var(ring, i) * &f.derivative(i)).scale(wi);
        }
        assert_eq!(&euler, f, "Euler identity failed for a weighted homogeneous polynomial");
    }
    ok
}

/// Why a coordinate-power monomial `x_i^{1/w_i}` is missing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordinatePowerIssue {
    NonIntegralInverse { index: usize, weight: Rational },
    Missing { index: usize, exponent: u32 },
}

impl std::fmt::Display for CoordinatePowerIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoordinatePowerIssue::NonIntegralInverse { index, weight } => {
                write!(f, "1/w_{} = 1/({weight}) is not an integer", index + 1)
            }
            CoordinatePowerIssue::Missing { index, exponent } => {
                write!(f, "monomial x_{}^{exponent} does not occur in f", index + 1)
            }
        }
    }
}

pub fn coordinate_power_issues(f: &Polynomial, w: &WeightSystem) -> Vec<CoordinatePowerIssue> {
    let n = w.nvars();
    let mut issues = Vec::new();
    for (index, wi) in w.weights().iter().enumerate() {
        let inv = wi.recip();
        if !inv.is_integer() {
            issues.push(CoordinatePowerIssue::NonIntegralInverse { index, weight: wi.clone() });
            continue;
        }
        let exponent = inv.to_integer().to_u32().expect("exponent fits in u32");
        if f.nvars() != n || f.coefficient(&Monomial::var_power(n, index, exponent)).is_zero() {
            issues.push(CoordinatePowerIssue::Missing { index, exponent });
        }
    }
    issues
}

/// True iff `x_i^{1/w_i}` occurs in `f` for every `i`.
pub fn check_coordinate_powers(f: &Polynomial, w: &WeightSystem) -> bool {
    coordinate_power_issues(f, w).is_empty()
}
