use std::cmp::Ordering;

use crate::polyring::{grevlex_cmp, Monomial, WeightSystem};

/// Global multiplicative monomial orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    /// Weighted degree first, ties broken by grevlex.
    WeightedGrevlex { weights: WeightSystem, scaled: Vec<u64> },
}

impl MonomialOrder {
    pub fn weighted(weights: &WeightSystem) -> Self {
        let (_, scaled) = weights.grid();
        MonomialOrder::WeightedGrevlex { weights: weights.clone(), scaled }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_cmp(a.exponents(), b.exponents()),
            MonomialOrder::WeightedGrevlex { scaled, .. } => a
                .weighted(scaled)
                .cmp(&b.weighted(scaled))
                .then_with(|| grevlex_cmp(a.exponents(), b.exponents())),
        }
    }

    /// Primary sort key: `(key(a), a)` under the derived tuple order, with
    /// `Monomial`'s grevlex `Ord`, agrees with [`MonomialOrder::cmp`].
    pub fn key(&self, m: &Monomial) -> u64 {
        match self {
            MonomialOrder::Grevlex => 0,
            MonomialOrder::WeightedGrevlex { scaled, .. } => m.weighted(scaled),
        }
    }

    pub fn nvars(&self) -> Option<usize> {
        match self {
            MonomialOrder::Grevlex => None,
            MonomialOrder::WeightedGrevlex { scaled, .. } => Some(scaled.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::rat;

    #[test]
    fn weighted_order_puts_weight_first() {
        let w = WeightSystem::new(vec![rat(1, 2), rat(1, 3)]).unwrap();
        let o = MonomialOrder::weighted(&w);
        let x = Monomial::new(vec![1, 0]);
        let y2 = Monomial::new(vec![0, 2]);
        // wdeg x = 1/2 < wdeg y^2 = 2/3, though grevlex puts y^2 first
        assert_eq!(o.cmp(&x, &y2), Ordering::Less);
        assert_eq!(MonomialOrder::Grevlex.cmp(&x, &y2), Ordering::Less);
        let y = Monomial::new(vec![0, 1]);
        assert_eq!(o.cmp(&x, &y), Ordering::Greater);
        assert_eq!(o.cmp(&Monomial::one(2), &y), Ordering::Less);
    }
}
