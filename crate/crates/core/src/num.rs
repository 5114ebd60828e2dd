//! Scalar helpers over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `|a|! / (a_1! ... a_n!)`.
pub fn multinomial(exps: &[u32]) -> BigInt {
    let total: u32 = exps.iter().sum();
    let mut acc = factorial(total);
    for &e in exps {
        acc /= factorial(e);
    }
    acc
}

/// Integer square root of a nonnegative integer, if it is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == num_bigint::Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Rational square root, if both numerator and denominator are squares.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Text rendering used by the polynomial printer: `3`, `-1/24`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_rational_latex(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if q.numer().sign() == num_bigint::Sign::Minus {
        format!("-\\frac{{{}}}{{{}}}", -q.numer(), q.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(multinomial(&[2, 2]), BigInt::from(6));
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&frac(2, 1)), None);
        assert_eq!(rational_sqrt(&frac(-4, 1)), None);
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&frac(-1, 24)), "-1/24");
        assert_eq!(format_rational_latex(&frac(-1, 24)), "-\\frac{1}{24}");
        assert_eq!(format_rational(&int(3)), "3");
    }
}
