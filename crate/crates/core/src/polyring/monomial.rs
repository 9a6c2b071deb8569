use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `(m_1, ..., m_n)` of a monomial `x_1^{m_1} ... x_n^{m_n}`.
///
/// `Ord` is graded reverse lexicographic on the raw exponents, the canonical
/// order used for storage and printing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn var_power(nvars: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Dot product with integer weights.
    pub fn weighted(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    /// Monomial with the `i`-th exponent lowered by one, if positive.
    pub fn lowered(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    pub fn raised(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// All monomials in `nvars` variables of total degree exactly `degree`.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        Self::all_of_weighted_degree(&vec![1; nvars], degree as u64)
    }

    /// All monomials whose integer-weighted degree `Σ m_i w_i` equals `target`.
    /// Weights must be positive. Output is sorted descending in grevlex.
    pub fn all_of_weighted_degree(weights: &[u64], target: u64) -> Vec<Monomial> {
        fn rec(weights: &[u64], i: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == weights.len() {
                if rest % weights[i] == 0 {
                    cur[i] = (rest / weights[i]) as u32;
                    out.push(Monomial(cur.clone()));
                    cur[i] = 0;
                }
                return;
            }
            let mut e = 0u64;
            while e * weights[i] <= rest {
                cur[i] = e as u32;
                rec(weights, i + 1, rest - e * weights[i], cur, out);
                e += 1;
            }
            cur[i] = 0;
        }
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let mut out = Vec::new();
        if weights.is_empty() {
            if target == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(weights, 0, target, &mut vec![0; weights.len()], &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let m = |v: &[u32]| Monomial::new(v.to_vec());
        // degree first
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // x > y > z
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        // x^2 > xy > y^2 > xz > yz > z^2
        let chain = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in chain.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn weighted_enumeration() {
        // weights (3, 2) ~ (1/2, 1/3) scaled by 6: degree 6 -> x^2, y^3
        let ms = Monomial::all_of_weighted_degree(&[3, 2], 6);
        assert_eq!(ms, vec![Monomial::new(vec![0, 3]), Monomial::new(vec![2, 0])]);
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert!(Monomial::all_of_weighted_degree(&[3, 2], 1).is_empty());
    }

    #[test]
    fn division() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![3, 2]);
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![2, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&Monomial::new(vec![0, 5])), Monomial::new(vec![1, 5]));
    }
}
