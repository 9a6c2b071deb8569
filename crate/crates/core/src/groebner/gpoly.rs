//! Polynomials as term vectors sorted descending in a runtime monomial order.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use crate::polyring::{Monomial, Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

impl GPoly {
    pub fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        GPoly { terms }
    }

    pub fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        for t in self.terms.iter_mut() {
            t.1 = &t.1 * &inv;
        }
    }
}

/// `target[from..] - coef * shift * source`, merged in order.
fn sub_scaled(
    target: &[(Monomial, Rational)],
    coef: &Rational,
    shift: &Monomial,
    source: &[(Monomial, Rational)],
    order: &MonomialOrder,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let mut i = 0;
    let mut src = source.iter().map(|(m, c)| (m.mul(shift), c)).peekable();
    loop {
        match (target.get(i), src.peek()) {
            (None, None) => break,
            (Some(t), None) => {
                out.push(t.clone());
                i += 1;
            }
            (None, Some(_)) => {
                let (m, c) = src.next().unwrap();
                out.push((m, -(coef * c)));
            }
            (Some(t), Some((m, _))) => match order.cmp(&t.0, m) {
                Ordering::Greater => {
                    out.push(t.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = src.next().unwrap();
                    out.push((m, -(coef * c)));
                }
                Ordering::Equal => {
                    let (m, c) = src.next().unwrap();
                    let v = &t.1 - coef * c;
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

/// Full reduction of `p` modulo `basis` (leading and tail terms).
pub(crate) fn reduce(p: &GPoly, basis: &[GPoly], order: &MonomialOrder) -> GPoly {
    let mut rest = p.terms.clone();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    let mut start = 0;
    while start < rest.len() {
        let (m, c) = &rest[start];
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let shift = g.lm().quotient_of(m).unwrap();
                let coef = c / g.lc();
                rest = sub_scaled(&rest[start..], &coef, &shift, &g.terms, order);
                start = 0;
            }
            None => {
                rem.push(rest[start].clone());
                start += 1;
            }
        }
    }
    GPoly { terms: rem }
}

pub(crate) fn s_polynomial(a: &GPoly, b: &GPoly, order: &MonomialOrder) -> GPoly {
    let l = a.lm().lcm(b.lm());
    let sa = a.lm().quotient_of(&l).unwrap();
    let sb = b.lm().quotient_of(&l).unwrap();
    let lhs: Vec<_> = a.terms.iter().map(|(m, c)| (m.mul(&sa), c / a.lc())).collect();
    let coef = b.lc().recip();
    GPoly { terms: sub_scaled(&lhs, &coef, &sb, &b.terms, order) }
}

/// Reduced, monic Gröbner basis by Buchberger's algorithm with the product
/// and chain criteria. Output is sorted by leading monomial, ascending.
pub(crate) fn groebner_basis(gens: &[GPoly], order: &MonomialOrder) -> Vec<GPoly> {
    let mut basis: Vec<GPoly> = Vec::new();
    let mut inputs: Vec<GPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for g in inputs {
        let mut r = reduce(&g, &basis, order);
        if !r.is_zero() {
            r.make_monic();
            basis.push(r);
        }
    }
    if basis.iter().any(|g| g.lm().is_one()) {
        let n = basis[0].lm().nvars();
        return vec![GPoly { terms: vec![(Monomial::one(n), Rational::one())] }];
    }

    // normal selection strategy: smallest lcm first
    let mut pairs: BinaryHeap<Reverse<(u64, Monomial, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |basis: &[GPoly], k: usize, pairs: &mut BinaryHeap<_>, pending: &mut HashSet<_>| {
        for i in 0..k {
            // s-polynomials of two monomials vanish
            if basis[i].terms.len() == 1 && basis[k].terms.len() == 1 {
                continue;
            }
            let l = basis[i].lm().lcm(basis[k].lm());
            pairs.push(Reverse((order.key(&l), l, i, k)));
            pending.insert((i, k));
        }
    };
    for k in 0..basis.len() {
        push_pairs(&basis, k, &mut pairs, &mut pending);
    }

    while let Some(Reverse((_, l, i, j))) = pairs.pop() {
        pending.remove(&(i, j));
        let (gi, gj) = (&basis[i], &basis[j]);
        if gi.lm().is_coprime(gj.lm()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(gi, gj, order);
        let mut r = reduce(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        if r.lm().is_one() {
            return vec![r];
        }
        basis.push(r);
        push_pairs(&basis, basis.len() - 1, &mut pairs, &mut pending);
    }
    interreduce(basis, order)
}

fn interreduce(mut basis: Vec<GPoly>, order: &MonomialOrder) -> Vec<GPoly> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<GPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, h)| l != k && h.lm().divides(g.lm()) && (h.lm() != g.lm() || l < k));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    // tail terms, and everything reduction produces from them, lie strictly
    // below the element's own leading monomial, so it never acts on itself
    for g in &minimal {
        let tail = GPoly { terms: g.terms[1..].to_vec() };
        let mut reduced = reduce(&tail, &minimal, order);
        reduced.terms.insert(0, g.terms[0].clone());
        reduced.make_monic();
        out.push(reduced);
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    out
}
