//! Closed-form combinatorics for Brieskorn–Pham polynomials `Σ c_i x_i^{a_i}`.
//!
//! Nothing here touches Gröbner bases; these functions exist to check the
//! general pipeline.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::milnor::{build_milnor, spectrum, MilnorError, Spectrum};
use crate::polyring::{Monomial, Polynomial, Rational, Ring};
use crate::vfilt::VFiltration;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("diagonal exponents must be at least 2 (got {0})")]
    ExponentTooSmall(u32),
    #[error("need at least one variable")]
    Empty,
}

/// Exponents `(a_1, ..., a_n)`, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalSpec {
    exponents: Vec<u32>,
}

impl DiagonalSpec {
    pub fn new(exponents: Vec<u32>) -> Result<Self, OracleError> {
        if exponents.is_empty() {
            return Err(OracleError::Empty);
        }
        if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
            return Err(OracleError::ExponentTooSmall(a));
        }
        Ok(DiagonalSpec { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    /// `Σ 1/a_i`.
    pub fn weight_sum(&self) -> Rational {
        self.exponents.iter().map(|&a| Rational::new(1.into(), a.into())).sum()
    }

    /// `Σ x_i^{a_i}` in variables `x1, ..., xn`.
    pub fn polynomial(&self) -> Polynomial {
        let n = self.nvars();
        let ring = Ring::new((1..=n).map(|i| format!("x{i}")));
        let mut f = Polynomial::zero(&ring);
        for (i, &a) in self.exponents.iter().enumerate() {
            f.add_term(Monomial::var_power(n, i, a), Rational::from_integer(1.into()));
        }
        f
    }

    /// The box `∏ [0, a_i - 2]`.
    fn box_points(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &a in &self.exponents {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=a - 2).map(move |m| {
                        let mut q = p.clone();
                        q.push(m);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn box_alpha(&self, m: &[u32]) -> Rational {
        m.iter().zip(&self.exponents).map(|(&mi, &a)| Rational::new((mi + 1).into(), a.into())).sum()
    }
}

/// Recognizes `f = Σ c_i x_i^{a_i}` with nonzero `c_i` and `a_i >= 2`.
pub fn diagonal_spec_of(f: &Polynomial) -> Option<DiagonalSpec> {
    let n = f.nvars();
    let mut exps = vec![0u32; n];
    if f.len() != n {
        return None;
    }
    for m in f.monomials() {
        let support: Vec<usize> = (0..n).filter(|&i| m.exponents()[i] > 0).collect();
        if support.len() != 1 || exps[support[0]] != 0 {
            return None;
        }
        exps[support[0]] = m.exponents()[support[0]];
    }
    DiagonalSpec::new(exps).ok()
}

/// Spectrum `{Σ (m_i + 1)/a_i : 0 <= m_i <= a_i - 2}` by box enumeration.
pub fn bp_spectrum(spec: &DiagonalSpec) -> Spectrum {
    Spectrum::from_values(spec.box_points().iter().map(|m| spec.box_alpha(m)))
}

/// Generators of the monomial ideal `Ṽ^alpha` for the diagonal polynomial:
/// `∏ x_i^{ν_i (a_i - 1) + m_i}` over box points `m` and `|ν| <= K`, where
/// `K = max(0, ⌈alpha - Σ 1/a_i⌉)`, with every `|ν| = K` term included.
pub fn bp_v_generators(spec: &DiagonalSpec, alpha: &Rational) -> Vec<Monomial> {
    let n = spec.nvars();
    let slack = alpha - spec.weight_sum();
    let k_top: u32 = if slack <= Rational::zero() { 0 } else { slack.ceil().to_integer().to_u32().unwrap() };
    // work in units of 1/L with L = lcm(a_i)
    let l = spec.exponents.iter().fold(1u64, |acc, &a| acc.lcm(&u64::from(a)));
    let threshold = (alpha * Rational::from_integer(BigInt::from(l))).ceil().to_integer();
    let scaled: Vec<(Vec<u32>, i64)> = spec
        .box_points()
        .into_iter()
        .map(|m| {
            let s = m.iter().zip(&spec.exponents).map(|(&mi, &a)| u64::from(mi + 1) * (l / u64::from(a))).sum::<u64>();
            (m, s as i64)
        })
        .collect();
    let mut gens = Vec::new();
    for nu in compositions_up_to(n, k_top) {
        let size: u32 = nu.iter().sum();
        for (m, s) in &scaled {
            let keep = size == k_top || BigInt::from(s + i64::from(size) * l as i64) >= threshold;
            if keep {
                let e = (0..n).map(|i| nu[i] * (spec.exponents[i] - 1) + m[i]).collect();
                gens.push(Monomial::new(e));
            }
        }
    }
    gens
}

/// Divisibility test of `v` against [`bp_v_generators`].
pub fn bp_v_member(spec: &DiagonalSpec, v: &Monomial, alpha: &Rational) -> bool {
    bp_v_generators(spec, alpha).iter().any(|g| g.divides(v))
}

/// Comparison of the Gröbner pipeline with the oracle on one spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAgreement {
    pub spec: DiagonalSpec,
    pub spectrum_equal: bool,
    pub alphas_checked: usize,
    pub monomials_checked: usize,
    /// `(v, alpha)` where the two membership tests disagree.
    pub mismatches: Vec<(Monomial, Rational)>,
}

impl OracleAgreement {
    pub fn passed(&self) -> bool {
        self.spectrum_equal && self.mismatches.is_empty()
    }
}

/// Checks the spectrum and every monomial of degree `<= max_degree` at every
/// candidate `alpha <= ceiling` from the oracle spectrum.
pub fn check_oracle_agreement(
    spec: &DiagonalSpec,
    max_degree: u32,
    ceiling: &Rational,
) -> Result<OracleAgreement, MilnorError> {
    let milnor = build_milnor(&spec.polynomial(), None)?;
    let oracle = bp_spectrum(spec);
    let spectrum_equal = spectrum(&milnor) == oracle;
    let mut alphas = Vec::new();
    for s in oracle.distinct() {
        let mut c = s;
        while c <= *ceiling {
            alphas.push(c.clone());
            c += Rational::from_integer(1.into());
        }
    }
    alphas.sort();
    alphas.dedup();
    let monomials: Vec<Monomial> = (0..=max_degree).flat_map(|d| Monomial::all_of_degree(spec.nvars(), d)).collect();
    let vfilt = VFiltration::new(&milnor);
    let ring = milnor.f().ring().clone();
    let mut mismatches = Vec::new();
    let polys: Vec<Polynomial> = monomials.iter().map(|v| Polynomial::monomial(&ring, v.clone())).collect();
    for alpha in &alphas {
        let mut gens = bp_v_generators(spec, alpha);
        // larger generators cannot divide any tested monomial
        gens.retain(|g| g.degree() <= max_degree);
        let level = vfilt.v_level(alpha);
        for (v, g) in monomials.iter().zip(&polys) {
            let expected = gens.iter().any(|m| m.divides(v));
            let got = level.ideal().contains(g);
            if expected != got {
                mismatches.push((v.clone(), alpha.clone()));
            }
        }
    }
    Ok(OracleAgreement {
        spec: spec.clone(),
        spectrum_equal,
        alphas_checked: alphas.len(),
        monomials_checked: monomials.len(),
        mismatches,
    })
}

/// Every exponent vector with entries in `[2, max_exponent]` and length in
/// `1..=max_vars`.
pub fn all_diagonal_specs(max_vars: usize, max_exponent: u32) -> Vec<DiagonalSpec> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_vars {
        layer = layer
            .into_iter()
            .flat_map(|p| {
                (2..=max_exponent).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().map(|e| DiagonalSpec { exponents: e.clone() }));
    }
    out
}

/// All `ν ∈ N^n` with `|ν| <= k`.
fn compositions_up_to(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::{int, rat};
    use crate::polyring::{parse_expression, Ring};

    fn spec(a: &[u32]) -> DiagonalSpec {
        DiagonalSpec::new(a.to_vec()).unwrap()
    }

    #[test]
    fn spectra() {
        assert_eq!(bp_spectrum(&spec(&[2, 3])), Spectrum::from_values([rat(5, 6), rat(7, 6)]));
        let s = bp_spectrum(&spec(&[3, 3, 3]));
        assert_eq!(s.multiplicity(&int(1)), 1);
        assert_eq!(s.multiplicity(&rat(4, 3)), 3);
        assert_eq!(s.multiplicity(&rat(5, 3)), 3);
        assert_eq!(s.multiplicity(&int(2)), 1);
        assert_eq!(bp_spectrum(&spec(&[2, 2])), Spectrum::from_values([int(1)]));
        assert_eq!(bp_spectrum(&spec(&[4, 5, 6])).total(), 3 * 4 * 5);
    }

    #[test]
    fn membership_examples() {
        let q = spec(&[2, 2, 2]);
        let x = Monomial::new(vec![1, 0, 0]);
        assert!(bp_v_member(&q, &x, &rat(5, 2)));
        assert!(!bp_v_member(&q, &x, &rat(7, 2)));
        let c = spec(&[3, 3, 3]);
        assert!(bp_v_member(&c, &Monomial::new(vec![4, 0, 0]), &int(3)));
        assert!(bp_v_member(&c, &Monomial::one(3), &int(1)));
        assert!(!bp_v_member(&c, &Monomial::one(3), &rat(4, 3)));
    }

    #[test]
    fn pipeline_agrees_on_small_specs() {
        for a in [vec![2, 3], vec![3, 3, 3], vec![2, 2, 2], vec![4, 6]] {
            let r = check_oracle_agreement(&spec(&a), 8, &int(4)).unwrap();
            assert!(r.passed(), "{a:?}: {:?}", r.mismatches);
        }
        assert_eq!(all_diagonal_specs(2, 4).len(), 3 + 9);
    }

    #[test]
    fn spec_validation_and_detection() {
        assert_eq!(DiagonalSpec::new(vec![1, 3]), Err(OracleError::ExponentTooSmall(1)));
        let r = Ring::new(["x", "y"]);
        let f = parse_expression("2*x^2 - y^5", &r).unwrap();
        assert_eq!(diagonal_spec_of(&f), Some(spec(&[2, 5])));
        assert_eq!(diagonal_spec_of(&parse_expression("x^2+x*y+y^2", &r).unwrap()), None);
        assert_eq!(diagonal_spec_of(&parse_expression("x^2", &r).unwrap()), None);
    }

    /// Separable closed form: each coordinate independently picks the best
    /// `(ν_i, m_i)` below its exponent; no truncation involved.
    fn separable_member(spec: &DiagonalSpec, v: &Monomial, alpha: &Rational) -> bool {
        let mut best = Rational::zero();
        for (&e, &a) in v.exponents().iter().zip(spec.exponents()) {
            let mut top = Rational::zero();
            for nu in 0..=e / (a - 1) {
                let m = (e - nu * (a - 1)).min(a - 2);
                let val = int(nu as i64) + rat(m as i64 + 1, a as i64);
                top = top.max(val);
            }
            best += top;
        }
        best >= *alpha
    }

    #[test]
    fn truncated_generators_match_separable_form() {
        for a in [vec![2, 3], vec![3, 3, 3], vec![2, 5], vec![4, 3]] {
            let s = spec(&a);
            for num in 0..=30 {
                let alpha = rat(num, 6);
                for d in 0..=8 {
                    for v in Monomial::all_of_degree(s.nvars(), d) {
                        assert_eq!(bp_v_member(&s, &v, &alpha), separable_member(&s, &v, &alpha), "{a:?} {v:?} {alpha}");
                    }
                }
            }
        }
    }
}
