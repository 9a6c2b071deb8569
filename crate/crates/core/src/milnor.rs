//! Milnor algebra, spectrum, and the thresholds derived from it.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::groebner::{IdealHandle, MonomialOrder};
use crate::polyring::{
    alpha_value, check_weighted_homogeneous, coordinate_power_issues, infer_weights, Monomial, Polynomial, Rational,
    WeightError, WeightSystem,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error(transparent)]
    Weights(#[from] WeightError),
    #[error("f is not weighted homogeneous of degree one for weights ({0})")]
    NotWeightedHomogeneous(String),
    #[error("f defines a smooth divisor: the Jacobian ideal is the unit ideal, so there is no singular point")]
    SmoothDivisor,
    #[error("singularity is not isolated: the Milnor algebra is infinite-dimensional")]
    NonIsolated,
}

/// Spectrum as a multiset of spectral numbers, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Spectrum {
    entries: BTreeMap<Rational, usize>,
}

impl Spectrum {
    pub fn from_values(values: impl IntoIterator<Item = Rational>) -> Self {
        let mut entries = BTreeMap::new();
        for v in values {
            *entries.entry(v).or_insert(0) += 1;
        }
        Spectrum { entries }
    }

    /// `(alpha, multiplicity)` pairs, ascending in alpha.
    pub fn entries(&self) -> impl Iterator<Item = (&Rational, usize)> {
        self.entries.iter().map(|(a, m)| (a, *m))
    }

    /// `n_{f,alpha}`.
    pub fn multiplicity(&self, alpha: &Rational) -> usize {
        self.entries.get(alpha).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn distinct(&self) -> Vec<Rational> {
        self.entries.keys().cloned().collect()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }

    pub fn max(&self) -> Option<&Rational> {
        self.entries.keys().next_back()
    }

    /// `n_{f,alpha} = n_{f,n-alpha}` for all alpha.
    pub fn is_symmetric(&self, n: usize) -> bool {
        let n = Rational::from_integer(n.into());
        self.entries.iter().all(|(a, m)| self.multiplicity(&(&n - a)) == *m)
    }
}

/// Milnor algebra data of a weighted homogeneous isolated singularity.
#[derive(Clone, Debug)]
pub struct MilnorData {
    f: Polynomial,
    weights: WeightSystem,
    partials: Vec<Polynomial>,
    jacobian: Arc<IdealHandle>,
    basis: Vec<Monomial>,
    alphas: Vec<Rational>,
    warnings: Vec<String>,
}

impl MilnorData {
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// `f_i = ∂f/∂x_i`.
    pub fn partials(&self) -> &[Polynomial] {
        &self.partials
    }

    pub fn jacobian(&self) -> &Arc<IdealHandle> {
        &self.jacobian
    }

    pub fn mu(&self) -> usize {
        self.basis.len()
    }

    /// Monomial basis `v_j` of the Milnor algebra (grevlex standard monomials).
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// `α(v_j)` for each basis monomial.
    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    /// Non-fatal diagnostics, e.g. missing coordinate powers `x_i^{1/w_i}`.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Validates `f`, infers weights if needed and computes the Milnor algebra.
pub fn build_milnor(f: &Polynomial, weights: Option<WeightSystem>) -> Result<MilnorData, MilnorError> {
    let weights = match weights {
        Some(w) => {
            if w.nvars() != f.nvars() {
                return Err(WeightError::DimensionMismatch { expected: f.nvars(), got: w.nvars() }.into());
            }
            w
        }
        None => infer_weights(f)?,
    };
    if !check_weighted_homogeneous(f, &weights) {
        let ws: Vec<String> = weights.weights().iter().map(|w| w.to_string()).collect();
        return Err(MilnorError::NotWeightedHomogeneous(ws.join(", ")));
    }
    let warnings = coordinate_power_issues(f, &weights)
        .into_iter()
        .map(|issue| format!("coordinate-power assumption fails: {issue}"))
        .collect();
    let partials: Vec<Polynomial> = (0..f.nvars()).map(|i| f.derivative(i)).collect();
    let jacobian = IdealHandle::new(f.ring(), partials.clone(), MonomialOrder::Grevlex);
    if jacobian.is_unit() {
        return Err(MilnorError::SmoothDivisor);
    }
    let basis = jacobian.standard_monomials(None).map_err(|_| MilnorError::NonIsolated)?;
    let alphas = basis.iter().map(|v| alpha_value(v, &weights).expect("arity checked")).collect();
    Ok(MilnorData { f: f.clone(), weights, partials, jacobian: Arc::new(jacobian), basis, alphas, warnings })
}

/// Multiset `{α(v_j)}`.
pub fn spectrum(m: &MilnorData) -> Spectrum {
    Spectrum::from_values(m.alphas.iter().cloned())
}

/// `Σ w_i`.
pub fn mlct_from_weights(m: &MilnorData) -> Rational {
    m.weights.sum()
}

/// Minimal spectral number.
pub fn mlct_from_spectrum(m: &MilnorData) -> Rational {
    m.alphas.iter().min().cloned().expect("Milnor basis is non-empty")
}

/// Microlocal log canonical threshold; the weight sum and the minimal
/// spectral number must agree.
pub fn mlct(m: &MilnorData) -> Rational {
    let by_weights = mlct_from_weights(m);
    let by_spectrum = mlct_from_spectrum(m);
    assert_eq!(by_weights, by_spectrum, "mlct routes disagree");
    by_weights
}

/// `min(1, mlct)`.
pub fn lct(m: &MilnorData) -> Rational {
    mlct(m).min(Rational::one())
}

/// Distinct spectral numbers; their negatives are the roots of the reduced
/// Bernstein–Sato polynomial. All lie in `[mlct, n - mlct]`.
pub fn reduced_bs_roots(m: &MilnorData) -> Vec<Rational> {
    let roots = spectrum(m).distinct();
    let lo = mlct(m);
    let hi = Rational::from_integer(m.nvars().into()) - &lo;
    for r in &roots {
        assert!(*r >= lo && *r <= hi, "root {r} outside [{lo}, {hi}]");
    }
    roots
}

/// Binomial coefficient for small arguments.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `∏ (1/w_i - 1)` when every `1/w_i` is an integer.
pub fn milnor_orlik_count(w: &WeightSystem) -> Option<u64> {
    let mut acc = 1u64;
    for wi in w.weights() {
        let inv = wi.recip();
        if !inv.is_integer() {
            return None;
        }
        let a: u64 = num_traits::ToPrimitive::to_u64(&inv.to_integer())?;
        acc *= a - 1;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::{int, rat};
    use crate::polyring::{parse_expression, scan_variables, Ring};

    fn milnor(text: &str) -> Result<MilnorData, MilnorError> {
        let ring = Ring::new(scan_variables(text).unwrap());
        build_milnor(&parse_expression(text, &ring).unwrap(), None)
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(milnor("x^3+y^3+z^3").unwrap().mu(), 8);
        let cusp = milnor("x^2+y^3").unwrap();
        assert_eq!(cusp.mu(), 2);
        assert_eq!(cusp.basis(), &[Monomial::new(vec![0, 0]), Monomial::new(vec![0, 1])]);
        assert_eq!(milnor("x+y").unwrap_err(), MilnorError::SmoothDivisor);
        assert!(matches!(milnor("x^2+x").unwrap_err(), MilnorError::Weights(WeightError::Inconsistent)));
    }

    #[test]
    fn non_isolated_is_rejected() {
        // x^2*y: weights underdetermined, so supply them
        let ring = Ring::new(["x", "y"]);
        let f = parse_expression("x^2*y", &ring).unwrap();
        let w = WeightSystem::new(vec![rat(1, 3), rat(1, 3)]).unwrap();
        assert_eq!(build_milnor(&f, Some(w)).unwrap_err(), MilnorError::NonIsolated);
        let bad = WeightSystem::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(matches!(build_milnor(&f, Some(bad)), Err(MilnorError::NotWeightedHomogeneous(_))));
    }

    #[test]
    fn coordinate_power_warning() {
        // D4: isolated, but y^3 is absent
        let m = milnor("x^3+x*y^2").unwrap();
        assert_eq!(m.mu(), 4);
        assert_eq!(m.warnings().len(), 1);
        assert!(milnor("x^3+y^3").unwrap().warnings().is_empty());
    }

    #[test]
    fn spectra() {
        let s = spectrum(&milnor("x^3+y^3+z^3").unwrap());
        assert_eq!(s.entries().map(|(a, m)| (a.clone(), m)).collect::<Vec<_>>(), vec![
            (int(1), 1),
            (rat(4, 3), 3),
            (rat(5, 3), 3),
            (int(2), 1)
        ]);
        let s = spectrum(&milnor("x^2+y^3").unwrap());
        assert_eq!(s.distinct(), vec![rat(5, 6), rat(7, 6)]);
        let s = spectrum(&milnor("x^2+y^2+z^2").unwrap());
        assert_eq!(s.entries().map(|(a, m)| (a.clone(), m)).collect::<Vec<_>>(), vec![(rat(3, 2), 1)]);
    }

    #[test]
    fn thresholds() {
        let cases = [
            ("x^2+y^3", rat(5, 6), rat(5, 6)),
            ("x^2+y^2+z^2", rat(3, 2), int(1)),
            ("x^3+y^5", rat(8, 15), rat(8, 15)),
            ("x^3+y^3+z^3", int(1), int(1)),
        ];
        for (text, m, l) in cases {
            let md = milnor(text).unwrap();
            assert_eq!(mlct(&md), m, "{text}");
            assert_eq!(lct(&md), l, "{text}");
        }
    }

    #[test]
    fn bs_roots() {
        assert_eq!(reduced_bs_roots(&milnor("x^2+y^3").unwrap()), vec![rat(5, 6), rat(7, 6)]);
        assert_eq!(reduced_bs_roots(&milnor("x^2+y^2+z^2").unwrap()), vec![rat(3, 2)]);
        assert_eq!(
            reduced_bs_roots(&milnor("x^3+y^3+z^3").unwrap()),
            vec![int(1), rat(4, 3), rat(5, 3), int(2)]
        );
    }

    #[test]
    fn milnor_orlik() {
        let m = milnor("x^3+y^4+z^5").unwrap();
        assert_eq!(milnor_orlik_count(m.weights()), Some(24));
        assert_eq!(m.mu(), 24);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
    }
}
