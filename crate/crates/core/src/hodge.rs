//! Hodge ideals `I^(D,p)` of a weighted homogeneous isolated singularity,
//! read degree by degree, and the comparisons with the V-filtration.
//!
//! `I^(D,p)` is the ideal generated by the numerators
//! `f^{p+1} ∂^ν(u / f^{p+1-|ν|})` with `|ν| <= p` and `u ∈ A^{>=p+1-|ν|}`,
//! where `A^{>=k}` is spanned by the monomials `v` with `α(v) >= k`.
//!
//! Only the minimal monomial generators `u` of each `A^{>=m}` are needed: for
//! `x^γ u` the Leibniz rule writes `∂^ν(x^γ u / f^m)` as `x^γ ∂^ν(u / f^m)`
//! plus derivatives of order `< |ν|` of fractions `u·g / f^{m+s}` with
//! `u·g ∈ A^{>=m+s}`, and those belong to lower strata. The generating set is
//! therefore finite, contains `A^{>=p+1}`, and the ideal has finite codimension.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::groebner::{graded_slice, grid_level, slice_equal, GradedSlice, GroebnerError, IdealHandle, MonomialOrder};
use crate::milnor::{build_milnor, MilnorData, MilnorError};
use crate::polyring::{check_coordinate_powers, parse_expression, Monomial, Polynomial, Rational, Ring, WeightSystem};
use crate::vfilt::{compositions, VFiltError, VFiltration};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("degree {0} is not on the weighted degree grid")]
    OffGrid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    VFilt(#[from] VFiltError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error("remark (ii) check failed: {0}")]
    RemarkFailed(String),
}

/// `numerator / f^pole`, kept with `f` not dividing the numerator when
/// `pole > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleFraction {
    numerator: Polynomial,
    pole: u32,
}

impl PoleFraction {
    pub fn new(numerator: Polynomial, pole: u32, f: &Polynomial) -> Self {
        let mut q = PoleFraction { numerator, pole };
        q.canonicalize(f);
        q
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn pole(&self) -> u32 {
        self.pole
    }

    fn canonicalize(&mut self, f: &Polynomial) {
        if self.numerator.is_zero() {
            self.pole = 0;
            return;
        }
        while self.pole > 0 {
            match self.numerator.exact_div(f) {
                Some(q) => {
                    self.numerator = q;
                    self.pole -= 1;
                }
                None => break,
            }
        }
    }

    /// Numerator over `f^target`; requires `target >= pole`.
    pub fn over(&self, f: &Polynomial, target: u32) -> Polynomial {
        assert!(target >= self.pole, "pole order {} exceeds {}", self.pole, target);
        &self.numerator * &f.pow(target - self.pole)
    }
}

/// `∂_i (g / f^m) = (f ∂_i g - m g f_i) / f^{m+1}`, canonicalized.
pub fn quotient_derivative(q: &PoleFraction, i: usize, f: &Polynomial) -> PoleFraction {
    let dg = q.numerator.derivative(i);
    if q.pole == 0 {
        return PoleFraction::new(dg, 0, f);
    }
    let m = Rational::from_integer(q.pole.into());
    let num = &(f * &dg) - &(&q.numerator * &f.derivative(i)).scale(&m);
    PoleFraction::new(num, q.pole + 1, f)
}

/// `∂^ν q`.
pub fn apply_derivatives(q: &PoleFraction, nu: &[u32], f: &Polynomial) -> PoleFraction {
    let mut acc = q.clone();
    for (i, &k) in nu.iter().enumerate() {
        for _ in 0..k {
            acc = quotient_derivative(&acc, i, f);
        }
    }
    acc
}

/// One generator `f^{p+1} ∂^ν(u / f^{p+1-|ν|})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeGenerator {
    pub monomial: Monomial,
    pub nu: Vec<u32>,
    pub numerator: Polynomial,
}

#[derive(Clone, Debug)]
pub struct HodgeIdeal {
    p: u32,
    generators: Vec<HodgeGenerator>,
    ideal: IdealHandle,
}

impl HodgeIdeal {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn generators(&self) -> &[HodgeGenerator] {
        &self.generators
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.ideal
    }
}

/// `(I^(D,p))_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeSlice {
    pub p: u32,
    pub degree: Rational,
    pub slice: GradedSlice,
}

/// One degree of a slice comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: Rational,
    pub ambient: usize,
    pub hodge_dim: usize,
    pub v_dim: usize,
    pub equal: bool,
}

/// Degreewise comparison of `I^(D,p)` with `Ṽ^{p+1}`, optionally modulo `(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub p: u32,
    pub e_max: Rational,
    pub modulo_f: bool,
    pub degrees: Vec<DegreeComparison>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.equal)
    }

    pub fn failing_degrees(&self) -> Vec<Rational> {
        self.degrees.iter().filter(|d| !d.equal).map(|d| d.degree.clone()).collect()
    }
}

/// Monomials of weighted degree `k / L` for `k` in `range`, in weight order.
fn monomials_in_levels(w: &WeightSystem, range: std::ops::Range<u64>) -> Vec<Monomial> {
    let (_, scaled) = w.grid();
    range.flat_map(|t| Monomial::all_of_weighted_degree(&scaled, t)).collect()
}

/// Minimal monomial generators of `A^{>=m}`.
pub fn minimal_generators(w: &WeightSystem, m: u32) -> Vec<Monomial> {
    let (l, scaled) = w.grid();
    let sum: u64 = scaled.iter().sum();
    let target = u64::from(m) * l;
    if target <= sum {
        return vec![Monomial::one(w.nvars())];
    }
    let low = target.saturating_sub(sum);
    let high = (target + scaled.iter().max().copied().unwrap_or(0)).saturating_sub(sum);
    monomials_in_levels(w, low..high)
        .into_iter()
        .filter(|u| {
            (0..u.nvars()).all(|i| match u.lowered(i) {
                Some(v) => v.weighted(&scaled) + sum < target,
                None => true,
            })
        })
        .collect()
}

fn alpha_reaches(u: &Monomial, scaled: &[u64], l: u64, m: u32) -> bool {
    u.weighted(scaled) + scaled.iter().sum::<u64>() >= u64::from(m) * l
}

fn hodge_generator(milnor: &MilnorData, p: u32, u: &Monomial, nu: Vec<u32>) -> HodgeGenerator {
    let f = milnor.f();
    let k: u32 = nu.iter().sum();
    let base = PoleFraction::new(Polynomial::monomial(f.ring(), u.clone()), p + 1 - k, f);
    let numerator = apply_derivatives(&base, &nu, f).over(f, p + 1);
    HodgeGenerator { monomial: u.clone(), nu, numerator }
}

fn check_grid(e: &Rational, w: &WeightSystem) -> Result<(), HodgeError> {
    grid_level(e, w).map(|_| ()).ok_or_else(|| HodgeError::OffGrid(e.to_string()))
}

/// `(I^(D,p))_e` straight from the definition: every monomial `u` with
/// `α(u) >= p+1-|ν|` whose numerator has degree `<= e`, multiplied by all
/// monomials landing in degree `e`. Linear algebra only.
pub fn hodge_slice_linear(milnor: &MilnorData, p: u32, e: &Rational) -> Result<HodgeSlice, HodgeError> {
    let w = milnor.weights();
    check_grid(e, w)?;
    let (l, scaled) = w.grid();
    let top = grid_level(e, w).unwrap();
    let n = milnor.nvars();
    let mut gens = Vec::new();
    for k in 0..=p {
        let m = p + 1 - k;
        for u in monomials_in_levels(w, 0..top + 1) {
            if !alpha_reaches(&u, &scaled, l, m) {
                continue;
            }
            for nu in compositions(n, k) {
                let g = hodge_generator(milnor, p, &u, nu);
                let d = w.homogeneous_degree(&g.numerator);
                if d.map_or(false, |d| grid_level(&d, w).map_or(false, |t| t <= top)) {
                    gens.push(g.numerator);
                }
            }
        }
    }
    let ideal = IdealHandle::new(milnor.f().ring(), gens, MonomialOrder::Grevlex);
    Ok(HodgeSlice { p, degree: e.clone(), slice: graded_slice(&ideal, e, w)? })
}

/// Hodge ideals of one singularity, cached by `p`, together with the
/// V-filtration they are compared against.
pub struct HodgeIdeals<'m> {
    milnor: &'m MilnorData,
    vfilt: VFiltration<'m>,
    ideals: Mutex<BTreeMap<u32, Arc<HodgeIdeal>>>,
}

impl<'m> HodgeIdeals<'m> {
    pub fn new(milnor: &'m MilnorData) -> Self {
        HodgeIdeals { milnor, vfilt: VFiltration::new(milnor), ideals: Mutex::new(BTreeMap::new()) }
    }

    pub fn milnor(&self) -> &MilnorData {
        self.milnor
    }

    pub fn vfilt(&self) -> &VFiltration<'m> {
        &self.vfilt
    }

    /// `I^(D,p)` from the minimal generators.
    pub fn ideal(&self, p: u32) -> Arc<HodgeIdeal> {
        if let Some(h) = self.ideals.lock().unwrap().get(&p) {
            return h.clone();
        }
        let n = self.milnor.nvars();
        let mut generators = Vec::new();
        for k in 0..=p {
            for u in minimal_generators(self.milnor.weights(), p + 1 - k) {
                for nu in compositions(n, k) {
                    generators.push(hodge_generator(self.milnor, p, &u, nu));
                }
            }
        }
        let ideal = IdealHandle::new(
            self.milnor.f().ring(),
            generators.iter().map(|g| g.numerator.clone()).collect(),
            MonomialOrder::Grevlex,
        );
        ideal.basis();
        let h = Arc::new(HodgeIdeal { p, generators, ideal });
        self.ideals.lock().unwrap().entry(p).or_insert(h).clone()
    }

    pub fn slice(&self, p: u32, e: &Rational) -> Result<HodgeSlice, HodgeError> {
        check_grid(e, self.milnor.weights())?;
        let slice = self.ideal(p).ideal().slice(e, self.milnor.weights())?;
        Ok(HodgeSlice { p, degree: e.clone(), slice })
    }

    /// Smallest `p` with `I^(D,p) ≠ O`, found from the Hodge ideals themselves.
    pub fn floor_direct(&self) -> u32 {
        (0..).find(|&p| !self.ideal(p).ideal().is_unit()).expect("I^(D,p) is proper for large p")
    }

    fn compare(&self, p: u32, e_max: &Rational, modulo_f: bool) -> Result<ComparisonReport, HodgeError> {
        let w = self.milnor.weights();
        let hodge = self.ideal(p);
        let level = self.vfilt.v_level(&Rational::from_integer((p + 1).into()));
        let (left, right) = if modulo_f {
            let f = self.milnor.f().clone();
            (hodge.ideal().with_generators([f.clone()]), level.ideal().with_generators([f]))
        } else {
            (hodge.ideal().clone(), level.ideal().clone())
        };
        let (l, _) = w.grid();
        let top = (e_max * Rational::from_integer(l.into())).floor().to_integer().to_u64().unwrap_or(0);
        let mut degrees = Vec::new();
        for t in 0..=top {
            let e = Rational::new(t.into(), l.into());
            let a = left.slice(&e, w)?;
            if !a.on_grid() {
                continue;
            }
            let b = right.slice(&e, w)?;
            degrees.push(DegreeComparison {
                ambient: a.ambient_dim(),
                hodge_dim: a.dim(),
                v_dim: b.dim(),
                equal: slice_equal(&a, &b)?,
                degree: e,
            });
        }
        Ok(ComparisonReport { p, e_max: e_max.clone(), modulo_f, degrees })
    }

    /// `I^(D,p) + (f)` against `Ṽ^{p+1} + (f)` in every grid degree `<= e_max`,
    /// or the same without `(f)` when `modulo_f` is false.
    pub fn verify_theorem1(&self, p: u32, e_max: &Rational, modulo_f: bool) -> Result<ComparisonReport, HodgeError> {
        self.compare(p, e_max, modulo_f)
    }

    /// Strict equality `I^(D,p) = Ṽ^{p+1}` for `p ∈ {0, 1}` and homogeneous
    /// `f` containing a power of every coordinate.
    pub fn verify_242(&self, p: u32, e_max: &Rational) -> Result<ComparisonReport, HodgeError> {
        if p > 1 {
            return Err(HodgeError::Precondition(format!("p must be 0 or 1, got {p}")));
        }
        if self.milnor.weights().common_degree().is_none() {
            return Err(HodgeError::Precondition("f must be homogeneous (all weights equal to 1/d)".into()));
        }
        if !check_coordinate_powers(self.milnor.f(), self.milnor.weights()) {
            return Err(HodgeError::Precondition("f must contain a power of every coordinate".into()));
        }
        self.compare(p, e_max, false)
    }

    /// Strict equality `I^(D,p) = Ṽ^{p+1}` for homogeneous `f` of degree 2.
    pub fn verify_remark_i(&self, p: u32, e_max: &Rational) -> Result<ComparisonReport, HodgeError> {
        if self.milnor.weights().common_degree() != Some(2) {
            return Err(HodgeError::Precondition("f must be homogeneous of degree 2".into()));
        }
        self.compare(p, e_max, false)
    }
}

/// Outcome of the Fermat cubic checks at `p = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkIiReport {
    /// `x^4 ∈ Ṽ^3`
    pub x4_in_v3: bool,
    /// `x(y^3+z^3) ∈ Ṽ^3`
    pub mixed_in_v3: bool,
    /// `12x^4 - 6x(y^3+z^3) ∈ (I^(D,2))_4`
    pub witness_in_hodge: bool,
    /// `12x^4 - 6x(y^3+z^3) ∉ Ṽ^3`
    pub hodge_differs: bool,
    /// `x(y^3+z^3) ∈ Ṽ^3 + (f)`
    pub mixed_in_v3_mod_f: bool,
    /// the derivative `∂_x^2(1/f)` as computed
    pub second_derivative: PoleFraction,
    pub strict: ComparisonReport,
    pub modulo_f: ComparisonReport,
}

impl RemarkIiReport {
    pub fn passed(&self) -> bool {
        self.x4_in_v3
            && !self.mixed_in_v3
            && self.witness_in_hodge
            && self.hodge_differs
            && self.mixed_in_v3_mod_f
            && !self.strict.passed()
            && self.modulo_f.passed()
    }
}

impl fmt::Display for PoleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pole {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/f", self.numerator),
            k => write!(f, "({})/f^{k}", self.numerator),
        }
    }
}

/// The Fermat cubic `x^3+y^3+z^3` at `p = 2`: `I^(D,2) ≠ Ṽ^3` while the two
/// agree modulo `(f)` up to plain degree 12.
pub fn counterexample_remark_ii() -> Result<RemarkIiReport, HodgeError> {
    let ring = Ring::new(["x", "y", "z"]);
    let parse = |s: &str| parse_expression(s, &ring).expect("fixed expression parses");
    let f = parse("x^3+y^3+z^3");
    let milnor = build_milnor(&f, None)?;
    let hodge = HodgeIdeals::new(&milnor);
    let three = Rational::from_integer(3.into());
    let x4 = parse("x^4");
    let mixed = parse("x*(y^3+z^3)");
    let witness = parse("12*x^4 - 6*x*(y^3+z^3)");
    let v3 = hodge.vfilt().v_level(&three);
    let second_derivative = apply_derivatives(&PoleFraction::new(Polynomial::one(&ring), 1, &f), &[2, 0, 0], &f);
    if second_derivative.numerator != witness || second_derivative.pole != 3 {
        return Err(HodgeError::RemarkFailed(format!("∂_x^2(1/f) = {second_derivative}")));
    }
    let degree4 = Rational::new(4.into(), 3.into());
    let slice = hodge.slice(2, &degree4)?;
    let four = Rational::from_integer(4.into());
    Ok(RemarkIiReport {
        x4_in_v3: v3.ideal().contains(&x4),
        mixed_in_v3: v3.ideal().contains(&mixed),
        witness_in_hodge: slice.slice.contains(&witness),
        hodge_differs: !v3.ideal().contains(&witness),
        mixed_in_v3_mod_f: v3.ideal().with_generators([f.clone()]).contains(&mixed),
        second_derivative,
        strict: hodge.verify_theorem1(2, &four, false)?,
        modulo_f: hodge.verify_theorem1(2, &four, true)?,
    })
}

impl HodgeSlice {
    pub fn contains(&self, g: &Polynomial) -> bool {
        self.slice.contains(g)
    }
}
