use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use super::gpoly::{groebner_basis, reduce, GPoly};
use super::order::MonomialOrder;
use super::GroebnerError;
use crate::polyring::{Monomial, Polynomial, Ring};

/// An ideal given by generators; its reduced Gröbner basis is computed on
/// first use and cached inside the handle.
#[derive(Debug)]
pub struct IdealHandle {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    basis: OnceLock<Vec<GPoly>>,
    monomial: OnceLock<bool>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        IdealHandle {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            order: self.order.clone(),
            basis,
            monomial: self.monomial.clone(),
        }
    }
}

impl IdealHandle {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>, order: MonomialOrder) -> Self {
        for g in &generators {
            assert_eq!(g.nvars(), ring.nvars(), "generator lives in a different ring");
        }
        if let Some(n) = order.nvars() {
            assert_eq!(n, ring.nvars(), "monomial order arity does not match ring");
        }
        IdealHandle { ring: ring.clone(), generators, order, basis: OnceLock::new(), monomial: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<Ring>, order: MonomialOrder) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)], order)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub(crate) fn gbasis(&self) -> &[GPoly] {
        self.basis.get_or_init(|| {
            let gens: Vec<GPoly> = self.generators.iter().map(|g| GPoly::from_poly(g, &self.order)).collect();
            groebner_basis(&gens, &self.order)
        })
    }

    /// Reduced monic Gröbner basis, sorted by leading monomial (ascending).
    pub fn basis(&self) -> Vec<Polynomial> {
        self.gbasis().iter().map(|g| g.to_poly(&self.ring)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gbasis().iter().map(|g| g.lm().clone()).collect()
    }

    pub fn normal_form(&self, g: &Polynomial) -> Polynomial {
        let gp = GPoly::from_poly(g, &self.order);
        reduce(&gp, self.gbasis(), &self.order).to_poly(&self.ring)
    }

    pub fn contains(&self, g: &Polynomial) -> bool {
        let Some(lead) = g.monomials().max_by(|a, b| self.order.cmp(a, b)) else {
            return true;
        };
        // the leading term of g survives reduction
        if !self.in_leading_ideal(lead) {
            return false;
        }
        if self.is_monomial_ideal() {
            return g.monomials().all(|m| self.in_leading_ideal(m));
        }
        let gp = GPoly::from_poly(g, &self.order);
        reduce(&gp, self.gbasis(), &self.order).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals.
    pub fn same_ideal(&self, other: &IdealHandle) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        self.gbasis().iter().any(|g| g.lm().is_one())
    }

    /// The reduced Gröbner basis consists of monomials.
    pub fn is_monomial_ideal(&self) -> bool {
        *self.monomial.get_or_init(|| self.gbasis().iter().all(|g| g.terms.len() == 1))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gbasis().is_empty()
    }

    pub fn in_leading_ideal(&self, m: &Monomial) -> bool {
        self.gbasis().iter().any(|g| g.lm().divides(m))
    }

    /// The leading ideal contains a pure power of every variable.
    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        (0..n).all(|i| {
            self.gbasis().iter().any(|g| {
                let e = g.lm().exponents();
                e.iter().enumerate().all(|(k, &x)| k == i || x == 0)
            })
        })
    }

    /// Monomials outside the leading ideal, optionally capped in total degree.
    /// Sorted ascending in grevlex.
    pub fn standard_monomials(&self, bound: Option<u32>) -> Result<Vec<Monomial>, GroebnerError> {
        if bound.is_none() && !self.is_zero_dimensional() {
            return Err(GroebnerError::InfiniteQuotient);
        }
        let n = self.ring.nvars();
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut out: BTreeSet<Monomial> = BTreeSet::new();
        let mut frontier = vec![Monomial::one(n)];
        while let Some(m) = frontier.pop() {
            if !seen.insert(m.clone()) {
                continue;
            }
            if bound.is_some_and(|b| m.degree() > b) || self.in_leading_ideal(&m) {
                continue;
            }
            for i in 0..n {
                frontier.push(m.raised(i));
            }
            out.insert(m);
        }
        Ok(out.into_iter().collect())
    }

    pub fn quotient_dim(&self) -> Result<usize, GroebnerError> {
        Ok(self.standard_monomials(None)?.len())
    }

    pub fn sum(&self, other: &IdealHandle) -> IdealHandle {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealHandle::new(&self.ring, gens, self.order.clone())
    }

    /// Ideal generated by `self`'s generators together with `extra`.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> IdealHandle {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        IdealHandle::new(&self.ring, gens, self.order.clone())
    }

    /// `I^k`, generated by all `k`-fold products of generators.
    pub fn power(&self, k: u32) -> IdealHandle {
        let gens: Vec<Polynomial> = self.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        let products = if k == 0 { vec![Polynomial::one(&self.ring)] } else { multiset_products(&gens, k as usize) };
        IdealHandle::new(&self.ring, products, self.order.clone())
    }
}

/// All products of `k` elements of `gens` chosen with repetition (as multisets).
pub(crate) fn multiset_products(gens: &[Polynomial], k: usize) -> Vec<Polynomial> {
    fn rec(gens: &[Polynomial], start: usize, left: usize, acc: &Polynomial, out: &mut Vec<Polynomial>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..gens.len() {
            rec(gens, i, left - 1, &(acc * &gens[i]), out);
        }
    }
    let mut out = Vec::new();
    if let Some(first) = gens.first() {
        rec(gens, 0, k, &Polynomial::one(first.ring()), &mut out);
    }
    out
}
