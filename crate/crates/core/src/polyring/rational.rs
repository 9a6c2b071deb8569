use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number: always reduced, positive denominator, zero is `0/1`.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Exact `"p/q"` or integer rendering.
pub fn fmt_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn floor_to_i64(q: &Rational) -> i64 {
    let f = q.floor().to_integer();
    i64::try_from(f).expect("floor fits in i64")
}

pub fn ceil_to_i64(q: &Rational) -> i64 {
    let c = q.ceil().to_integer();
    i64::try_from(c).expect("ceil fits in i64")
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}
