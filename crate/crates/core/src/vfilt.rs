//! The microlocal V-filtration `Ṽ^α` on the polynomial ring of a weighted
//! homogeneous isolated singularity.
//!
//! `Ṽ^α` is generated by the products `y^ν v_j = ∏ f_i^{ν_i} · v_j` with
//! `α(v_j) + |ν| >= α`, where the `v_j` run over the Milnor basis. Since every
//! `α(v_j) >= mlct` and `1` is a basis monomial, all index pairs with
//! `|ν| >= K = max(0, ⌈α - mlct⌉)` are covered by the ideal `(∂f)^K`, which
//! makes the generating set finite.
//!
//! The filtration is constant on each interval `(c', c]` between consecutive
//! candidates `c ∈ {α(v_j) + k}`, so levels are cached by candidate.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::groebner::{IdealHandle, MonomialOrder};
use crate::milnor::{binomial, mlct, spectrum, MilnorData, Spectrum};
use crate::polyring::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VFiltError {
    #[error("the order of the zero polynomial is infinite")]
    ZeroPolynomial,
    #[error("Ṽ^{0} does not have finite codimension")]
    InfiniteCodimension(String),
    #[error("hodge floor verification failed at p = {p}: 1 ∈ Ṽ^(p+1) is {found}, expected {expected}")]
    FloorMismatch { p: u32, found: bool, expected: bool },
    #[error("multiplier ideals are only identified with Ṽ for 0 < alpha < 1 (got {0})")]
    MultiplierOutOfRange(String),
}

/// One generator `y^ν v_j` of a filtration level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VGenerator {
    pub basis_monomial: Monomial,
    pub nu: Vec<u32>,
    pub poly: Polynomial,
}

/// The ideal `Ṽ^α`, indexed by the smallest candidate `>= α`.
#[derive(Clone, Debug)]
pub struct VLevel {
    alpha: Rational,
    truncation: u32,
    generators: Vec<VGenerator>,
    ideal: IdealHandle,
}

impl VLevel {
    /// Candidate index of this level.
    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    /// `K`: every `y^ν` with `|ν| = K` is a generator.
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn generators(&self) -> &[VGenerator] {
        &self.generators
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.ideal
    }
}

/// Result of an order query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VOrder {
    Exact(Rational),
    /// `g` is still a member at the largest candidate examined.
    AboveCeiling(Rational),
}

/// Jumping coefficients with the dimensions of the graded pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpList {
    pub jumps: Vec<(Rational, usize)>,
    pub ceiling: Rational,
}

/// Filtration levels of one Milnor algebra, computed lazily and cached.
pub struct VFiltration<'m> {
    milnor: &'m MilnorData,
    mlct: Rational,
    spectrum: Spectrum,
    distinct: Vec<Rational>,
    /// `L α(v_j)` on the weight grid.
    scaled_alphas: Vec<i64>,
    levels: Mutex<BTreeMap<Rational, Arc<VLevel>>>,
    products: Mutex<HashMap<Vec<u32>, Polynomial>>,
}

pub(crate) fn compositions(n: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

fn ceil_nonneg(q: &Rational) -> u32 {
    if *q <= Rational::zero() {
        0
    } else {
        q.ceil().to_integer().to_u32().expect("truncation level fits in u32")
    }
}

impl<'m> VFiltration<'m> {
    pub fn new(milnor: &'m MilnorData) -> Self {
        VFiltration {
            milnor,
            mlct: mlct(milnor),
            spectrum: spectrum(milnor),
            distinct: spectrum(milnor).distinct(),
            scaled_alphas: {
                let (l, _) = milnor.weights().grid();
                let l = Rational::from_integer(l.into());
                milnor.alphas().iter().map(|a| (a * &l).to_integer().to_i64().expect("grid level fits in i64")).collect()
            },
            levels: Mutex::new(BTreeMap::new()),
            products: Mutex::new(HashMap::new()),
        }
    }

    pub fn milnor(&self) -> &MilnorData {
        self.milnor
    }

    pub fn mlct(&self) -> &Rational {
        &self.mlct
    }

    /// Smallest candidate `>= alpha` (`mlct` when `alpha <= mlct`).
    pub fn canonical(&self, alpha: &Rational) -> Rational {
        self.distinct
            .iter()
            .map(|s| {
                let k = ceil_nonneg(&(alpha - s));
                s + Rational::from_integer(k.into())
            })
            .min()
            .expect("spectrum is non-empty")
    }

    /// Smallest candidate strictly greater than `alpha`.
    pub fn next_candidate(&self, alpha: &Rational) -> Rational {
        self.distinct
            .iter()
            .map(|s| {
                let gap = alpha - s;
                let k = if gap < Rational::zero() { Rational::zero() } else { gap.floor() + Rational::one() };
                s + k
            })
            .min()
            .expect("spectrum is non-empty")
    }

    /// Sorted candidates `α(v_j) + k` not exceeding `ceiling`.
    pub fn candidates_upto(&self, ceiling: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for s in &self.distinct {
            let mut c = s.clone();
            while c <= *ceiling {
                out.push(c.clone());
                c += Rational::one();
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn y_power(&self, nu: &[u32]) -> Polynomial {
        if let Some(p) = self.products.lock().unwrap().get(nu) {
            return p.clone();
        }
        let ring = self.milnor.f().ring();
        let mut acc = Polynomial::one(ring);
        for (fi, &e) in self.milnor.partials().iter().zip(nu) {
            if e > 0 {
                acc = &acc * &fi.pow(e);
            }
        }
        self.products.lock().unwrap().insert(nu.to_vec(), acc.clone());
        acc
    }

    fn build_level(&self, alpha: Rational) -> VLevel {
        let n = self.milnor.nvars();
        let truncation = ceil_nonneg(&(&alpha - &self.mlct));
        // thresholds on the grid of step 1/L: with T = ⌈L alpha⌉,
        // ⌈alpha - a⌉ = ⌈(T - L a) / L⌉ whenever L a is an integer
        let (l, scaled_w) = self.milnor.weights().grid();
        let (l, t) = (l as i64, (&alpha * Rational::from_integer(l.into())).ceil().to_integer());
        let t = t.to_i64().expect("grid level fits in i64");
        let entry = |a: i64| -> u32 { if t <= a { 0 } else { (t - a + l - 1).div_euclid(l) as u32 } };
        let mut generators = Vec::new();
        // each v_j enters at the smallest |ν| with α(v_j) + |ν| >= alpha, and
        // only when no v_j / x_i (again a basis monomial) enters at the same |ν|;
        // everything else is a multiple
        for (v, a) in self.milnor.basis().iter().zip(&self.scaled_alphas) {
            let k = entry(*a);
            if k >= truncation {
                continue;
            }
            let redundant = (0..n).any(|i| v.exponents()[i] > 0 && entry(a - scaled_w[i] as i64) == k);
            if redundant {
                continue;
            }
            for nu in compositions(n, k) {
                let poly = self.y_power(&nu).mul_monomial(v);
                generators.push(VGenerator { basis_monomial: v.clone(), nu, poly });
            }
        }
        for nu in compositions(n, truncation) {
            let poly = self.y_power(&nu);
            generators.push(VGenerator { basis_monomial: Monomial::one(n), nu, poly });
        }
        let ideal = IdealHandle::new(
            self.milnor.f().ring(),
            generators.iter().map(|g| g.poly.clone()).collect(),
            MonomialOrder::Grevlex,
        );
        VLevel { alpha, truncation, generators, ideal }
    }

    /// `Ṽ^alpha`.
    pub fn v_level(&self, alpha: &Rational) -> Arc<VLevel> {
        if let Some(l) = self.levels.lock().unwrap().get(alpha) {
            return l.clone();
        }
        let key = self.canonical(alpha);
        if let Some(l) = self.levels.lock().unwrap().get(&key) {
            return l.clone();
        }
        let level = Arc::new(self.build_level(key.clone()));
        level.ideal().basis();
        self.levels.lock().unwrap().entry(key).or_insert(level).clone()
    }

    pub fn v_member(&self, g: &Polynomial, alpha: &Rational) -> bool {
        self.v_level(alpha).ideal().contains(g)
    }

    /// Largest candidate `c <= ceiling` with `g ∈ Ṽ^c`.
    pub fn v_order(&self, g: &Polynomial, ceiling: &Rational) -> Result<VOrder, VFiltError> {
        if g.is_zero() {
            return Err(VFiltError::ZeroPolynomial);
        }
        let cands = self.candidates_upto(ceiling);
        let Some(last) = cands.last() else {
            return Ok(VOrder::AboveCeiling(ceiling.clone()));
        };
        let members = cands.partition_point(|c| self.v_member(g, c));
        debug_assert!(members >= 1, "Ṽ^mlct is the unit ideal");
        if members < cands.len() {
            return Ok(VOrder::Exact(cands[members - 1].clone()));
        }
        if self.v_member(g, &self.next_candidate(last)) {
            Ok(VOrder::AboveCeiling(last.clone()))
        } else {
            Ok(VOrder::Exact(last.clone()))
        }
    }

    fn codim(&self, alpha: &Rational) -> Result<usize, VFiltError> {
        self.v_level(alpha)
            .ideal()
            .quotient_dim()
            .map_err(|_| VFiltError::InfiniteCodimension(alpha.to_string()))
    }

    /// `dim Ṽ^alpha / Ṽ^{>alpha}` from Gröbner codimensions.
    pub fn gr_dim_direct(&self, alpha: &Rational) -> Result<usize, VFiltError> {
        let upper = self.codim(&self.next_candidate(alpha))?;
        let lower = self.codim(alpha)?;
        Ok(upper - lower)
    }

    /// `Σ_k binom(n+k-1, n-1) n_{f, alpha-k}`.
    pub fn gr_dim_formula(&self, alpha: &Rational) -> usize {
        let n = self.milnor.nvars() as u64;
        let mut total = 0u64;
        let mut k = 0u64;
        loop {
            let beta = alpha - Rational::from_integer(k.into());
            if beta < self.mlct {
                break;
            }
            total += binomial(n + k - 1, n - 1) * self.spectrum.multiplicity(&beta) as u64;
            k += 1;
        }
        total as usize
    }

    pub fn jumping_numbers(&self, ceiling: &Rational) -> Result<JumpList, VFiltError> {
        let mut jumps = Vec::new();
        for c in self.candidates_upto(ceiling) {
            let d = self.gr_dim_direct(&c)?;
            if d > 0 {
                jumps.push((c, d));
            }
        }
        Ok(JumpList { jumps, ceiling: ceiling.clone() })
    }

    /// `⌊mlct⌋`, checked against the unit-ideal transitions of `Ṽ^{p+1}`.
    pub fn hodge_floor(&self) -> Result<u32, VFiltError> {
        let floor = self.mlct.floor().to_integer().to_u32().expect("floor fits in u32");
        let one = Polynomial::one(self.milnor.f().ring());
        for p in 0..=floor {
            let found = self.v_member(&one, &Rational::from_integer((p + 1).into()));
            let expected = p < floor;
            if found != expected {
                return Err(VFiltError::FloorMismatch { p, found, expected });
            }
        }
        Ok(floor)
    }

    /// Multiplier ideal `J(alpha D)` for `0 < alpha < 1`: `Ṽ^alpha` off the
    /// jumping numbers and the next level at a jump.
    pub fn multiplier_ideal(&self, alpha: &Rational) -> Result<IdealHandle, VFiltError> {
        if *alpha <= Rational::zero() || *alpha >= Rational::one() {
            return Err(VFiltError::MultiplierOutOfRange(alpha.to_string()));
        }
        let level = if self.gr_dim_direct(alpha)? > 0 {
            self.v_level(&self.next_candidate(alpha))
        } else {
            self.v_level(alpha)
        };
        Ok(level.ideal().clone())
    }

    /// `Ṽ^{c'} ⊆ Ṽ^c` for consecutive candidates up to `ceiling`.
    pub fn check_monotonicity(&self, ceiling: &Rational) -> bool {
        let cands = self.candidates_upto(ceiling);
        cands.windows(2).all(|w| {
            let lower = self.v_level(&w[0]);
            let upper = self.v_level(&w[1]);
            lower.ideal().contains_ideal(upper.ideal())
        })
    }

    /// `f_i · Ṽ^c ⊆ Ṽ^{c+1}` for every candidate `c <= ceiling` and every `i`.
    pub fn check_shift(&self, ceiling: &Rational) -> bool {
        self.candidates_upto(ceiling).iter().all(|c| {
            let level = self.v_level(c);
            let shifted = self.v_level(&(c + Rational::one()));
            level.generators().iter().all(|g| {
                self.milnor.partials().iter().all(|fi| shifted.ideal().contains(&(fi * &g.poly)))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::build_milnor;
    use crate::polyring::rational::{int, rat};
    use crate::polyring::{parse_expression, scan_variables, Ring};

    fn milnor(text: &str) -> MilnorData {
        let ring = Ring::new(scan_variables(text).unwrap());
        build_milnor(&parse_expression(text, &ring).unwrap(), None).unwrap()
    }

    fn poly(m: &MilnorData, text: &str) -> Polynomial {
        parse_expression(text, m.f().ring()).unwrap()
    }

    #[test]
    fn quadric_levels() {
        let m = milnor("x^2+y^2+z^2");
        let v = VFiltration::new(&m);
        let l = v.v_level(&rat(5, 2));
        assert_eq!(l.truncation(), 1);
        assert!(l.ideal().same_ideal(&IdealHandle::new(m.f().ring(), vec![poly(&m, "x"), poly(&m, "y"), poly(&m, "z")], MonomialOrder::Grevlex)));
        assert!(v.v_member(&poly(&m, "x"), &rat(5, 2)));
        assert!(!v.v_member(&poly(&m, "x"), &rat(7, 2)));
        assert_eq!(v.v_order(&poly(&m, "x"), &int(4)), Ok(VOrder::Exact(rat(5, 2))));
    }

    #[test]
    fn unit_below_mlct() {
        for text in ["x^2+y^3", "x^3+y^3+z^3", "x^2+y^2+z^2"] {
            let m = milnor(text);
            let v = VFiltration::new(&m);
            let one = Polynomial::one(m.f().ring());
            assert!(v.v_level(&mlct(&m)).ideal().is_unit());
            assert!(v.v_level(&rat(1, 7)).ideal().is_unit());
            assert!(!v.v_member(&one, &v.next_candidate(&mlct(&m))));
            assert_eq!(v.v_order(&one, &int(3)), Ok(VOrder::Exact(mlct(&m))));
        }
    }

    #[test]
    fn fermat_cubic_level_three() {
        let m = milnor("x^3+y^3+z^3");
        let v = VFiltration::new(&m);
        let three = int(3);
        assert!(v.v_member(&poly(&m, "x^4"), &three));
        assert!(!v.v_member(&poly(&m, "x*(y^3+z^3)"), &three));
        let fx2 = &m.partials()[0] * &m.partials()[0];
        assert_eq!(v.v_order(&fx2, &int(4)), Ok(VOrder::Exact(three)));
    }

    #[test]
    fn order_errors_and_ceiling() {
        let m = milnor("x^2+y^2");
        let v = VFiltration::new(&m);
        assert_eq!(v.v_order(&Polynomial::zero(m.f().ring()), &int(3)), Err(VFiltError::ZeroPolynomial));
        // x^5 has order 1 + 4 = 5, above a ceiling of 3
        assert_eq!(v.v_order(&poly(&m, "x^5"), &int(3)), Ok(VOrder::AboveCeiling(int(3))));
        assert_eq!(v.v_order(&poly(&m, "x^2"), &int(3)), Ok(VOrder::Exact(int(3))));
    }

    #[test]
    fn jumps() {
        let q = milnor("x^2+y^2+z^2");
        let jl = VFiltration::new(&q).jumping_numbers(&int(4)).unwrap();
        assert_eq!(jl.jumps.iter().map(|j| j.0.clone()).collect::<Vec<_>>(), vec![rat(3, 2), rat(5, 2), rat(7, 2)]);
        assert_eq!(jl.jumps.iter().map(|j| j.1).collect::<Vec<_>>(), vec![1, 3, 6]);
        let c = milnor("x^2+y^3");
        let jl = VFiltration::new(&c).jumping_numbers(&int(2)).unwrap();
        assert_eq!(jl.jumps.iter().map(|j| j.0.clone()).collect::<Vec<_>>(), vec![rat(5, 6), rat(7, 6), rat(11, 6)]);
        let f = milnor("x^3+y^3+z^3");
        let jl = VFiltration::new(&f).jumping_numbers(&int(2)).unwrap();
        assert_eq!(jl.jumps.iter().map(|j| j.0.clone()).collect::<Vec<_>>(), vec![int(1), rat(4, 3), rat(5, 3), int(2)]);
        assert_eq!(jl.jumps[0].0, mlct(&f));
    }

    #[test]
    fn graded_dimensions() {
        let f = milnor("x^3+y^3+z^3");
        let v = VFiltration::new(&f);
        assert_eq!(v.gr_dim_formula(&int(2)), 4);
        assert_eq!(v.gr_dim_direct(&int(2)), Ok(4));
        assert_eq!(v.gr_dim_direct(&rat(4, 3)), Ok(3));
        assert_eq!(v.gr_dim_formula(&rat(1, 2)), 0);
        let q = milnor("x^2+y^2+z^2");
        let v = VFiltration::new(&q);
        assert_eq!(v.gr_dim_formula(&rat(7, 2)), 6);
        assert_eq!(v.gr_dim_direct(&rat(7, 2)), Ok(6));
        assert_eq!(v.gr_dim_direct(&rat(3, 2)), Ok(1));
        // off the candidate grid nothing jumps
        assert_eq!(v.gr_dim_direct(&int(2)), Ok(0));
    }

    #[test]
    fn floors() {
        assert_eq!(VFiltration::new(&milnor("x^2+y^2+z^2")).hodge_floor(), Ok(1));
        assert_eq!(VFiltration::new(&milnor("x^3+y^3+z^3")).hodge_floor(), Ok(1));
        assert_eq!(VFiltration::new(&milnor("a^2+b^2+c^2+d^2+e^2")).hodge_floor(), Ok(2));
        assert_eq!(VFiltration::new(&milnor("x^2+y^3")).hodge_floor(), Ok(0));
    }

    #[test]
    fn multiplier_ideals() {
        let c = milnor("x^2+y^3");
        let v = VFiltration::new(&c);
        assert!(v.multiplier_ideal(&rat(1, 2)).unwrap().is_unit());
        let j = v.multiplier_ideal(&rat(5, 6)).unwrap();
        let m = IdealHandle::new(c.f().ring(), vec![poly(&c, "x"), poly(&c, "y")], MonomialOrder::Grevlex);
        assert!(j.same_ideal(&m));
        assert!(v.multiplier_ideal(&rat(9, 10)).unwrap().same_ideal(&m));
        assert!(matches!(v.multiplier_ideal(&int(1)), Err(VFiltError::MultiplierOutOfRange(_))));
        assert!(matches!(v.multiplier_ideal(&int(0)), Err(VFiltError::MultiplierOutOfRange(_))));
    }

    #[test]
    fn structural_properties() {
        for text in ["x^2+y^3", "x^3+y^3+z^3", "x^2+x*y^2+y^4"] {
            let m = milnor(text);
            let v = VFiltration::new(&m);
            assert!(v.check_monotonicity(&int(3)), "{text}");
            assert!(v.check_shift(&int(2)), "{text}");
        }
    }
}
