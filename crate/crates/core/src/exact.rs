//! Exact coefficient rings: arbitrary-precision rationals and dense
//! univariate polynomials over them.
//!
//! Every other module is generic over [`Ring`]. The rings used in practice
//! are `Rational` (ℚ), `Polynomial<Rational>` (ℚ[y]) and
//! `Polynomial<Polynomial<Rational>>` (ℚ[a][b], outer variable `b`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Normalized arbitrary-precision rational. Zero is `0/1`, denominators are
/// positive and `gcd(num, den) = 1` after every operation.
pub type Rational = num_rational::BigRational;

/// ℚ[a][b]: polynomials in `b` whose coefficients are polynomials in `a`.
pub type BiPoly = Polynomial<Polynomial<Rational>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("{what} is only defined for n >= 0, got {n}")]
    NegativeIndex { what: &'static str, n: i64 },
}

/// A commutative ring containing ℚ, with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    /// The nonnegative square root, if it exists in the ring.
    fn exact_sqrt(&self) -> Option<Self>;

    /// Render using `vars`; the last entry names the outermost variable.
    fn render(&self, vars: &[&str]) -> String;

    /// True if rendering needs parentheses when used as a product factor.
    fn is_compound(&self) -> bool;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let num = exact_isqrt(self.numer())?;
        let den = exact_isqrt(self.denom())?;
        Some(Rational::new(num, den))
    }

    fn render(&self, _vars: &[&str]) -> String {
        self.to_string()
    }

    fn is_compound(&self) -> bool {
        false
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a normalized rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient. Returns 0 for `k < 0`, for `k > n`, and for any
/// `n < 0` (negative upper indices are not extended).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `top choose k` for rational `top`, `k >= 0`.
pub fn binomial_rational(top: &Rational, k: i64) -> Rational {
    if k < 0 {
        return rat(0);
    }
    let mut acc = rat(1);
    for i in 0..k {
        acc = acc * (top - rat(i)) / rat(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: i64) -> Result<BigInt, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeIndex { what: "catalan", n });
    }
    Ok(binomial(2 * n, n) / (n + 1))
}

/// Fibonacci numbers with `F_0 = 0, F_1 = 1`.
pub fn fibonacci(n: i64) -> Result<BigInt, ExactError> {
    linear2(n, "fibonacci", 1)
}

/// Jacobsthal numbers `0, 1, 1, 3, 5, 11, 21, ...` (`J_n = J_{n-1} + 2 J_{n-2}`).
pub fn jacobsthal(n: i64) -> Result<BigInt, ExactError> {
    linear2(n, "jacobsthal", 2)
}

fn linear2(n: i64, what: &'static str, c: i64) -> Result<BigInt, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeIndex { what, n });
    }
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        let next = &cur + &prev * c;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of degree `i`.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^deg`
    pub fn monomial(c: R, deg: usize) -> Self {
        let mut coeffs = vec![R::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// The generator of the ring.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Divide by `var^k`, or `None` if a coefficient below degree `k` is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    /// Coefficients padded with zeros to exactly `len` entries, or `None` if
    /// the degree does not fit.
    pub fn padded(&self, len: usize) -> Option<Vec<R>> {
        if self.coeffs.len() > len {
            return None;
        }
        let mut out = self.coeffs.clone();
        out.resize(len, R::zero());
        Some(out)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Add for Polynomial<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Self::new(long)
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Sub for Polynomial<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for Polynomial<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial { coeffs: Vec::new() };
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }

    // Units of R[t] are the units of R.
    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.unit_inverse().map(Self::constant),
            _ => None,
        }
    }

    // Only constants are handled; nothing needs roots of nonconstant polynomials.
    fn exact_sqrt(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [] => Some(Self::zero()),
            [c] => c.exact_sqrt().map(Self::constant),
            _ => None,
        }
    }

    fn render(&self, vars: &[&str]) -> String {
        let (name, inner) = match vars.split_last() {
            Some((last, rest)) => (*last, rest),
            None => ("?", vars),
        };
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut text = c.render(inner);
            let negative = text.starts_with('-') && !c.is_compound();
            if negative {
                text.remove(0);
            }
            if !out.is_empty() {
                out.push_str(if negative { " - " } else { " + " });
            } else if negative {
                out.push('-');
            }
            let term = match deg {
                0 => String::new(),
                1 => name.to_string(),
                d => format!("{name}^{d}"),
            };
            if deg == 0 {
                out.push_str(&text);
            } else if text == "1" {
                out.push_str(&term);
            } else if c.is_compound() {
                out.push_str(&format!("({text})*{term}"));
            } else {
                out.push_str(&format!("{text}*{term}"));
            }
        }
        out
    }

    fn is_compound(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

impl<R: fmt::Debug> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({:?})", self.coeffs)
    }
}

/// Convert a small integer-valued rational to `i64`, if it is one.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 1), BigInt::from(3));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-3, 1), BigInt::zero());
    }

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as i64).unwrap(), BigInt::from(c));
        }
        assert!(catalan(-1).is_err());
    }

    #[test]
    fn catalan_division_is_exact() {
        for n in 0..60 {
            let b = binomial(2 * n, n);
            assert!((&b % (n + 1)).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn jacobsthal_values() {
        let expected = [0, 1, 1, 3, 5, 11, 21, 43, 85];
        for (n, &j) in expected.iter().enumerate() {
            assert_eq!(jacobsthal(n as i64).unwrap(), BigInt::from(j));
        }
        assert!(jacobsthal(-2).is_err());
    }

    #[test]
    fn fibonacci_values() {
        let expected = [0, 1, 1, 2, 3, 5, 8, 13, 21];
        for (n, &f) in expected.iter().enumerate() {
            assert_eq!(fibonacci(n as i64).unwrap(), BigInt::from(f));
        }
    }

    #[test]
    fn rational_normalizes() {
        let q = ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(ratio(0, -7), rat(0));
        assert_eq!(ratio(0, -7).denom(), &BigInt::one());
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(ratio(9, 4).exact_sqrt(), Some(ratio(3, 2)));
        assert_eq!(rat(2).exact_sqrt(), None);
        assert_eq!(rat(-4).exact_sqrt(), None);
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial_rational(&ratio(3, 2), 1), ratio(3, 2));
        assert_eq!(binomial_rational(&ratio(1, 2), 2), ratio(-1, 8));
        assert_eq!(binomial_rational(&rat(5), 2), rat(10));
    }

    #[test]
    fn polynomial_trims_and_evaluates() {
        let p = poly(&[1, 0, 2, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&rat(3)), rat(19));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
    }

    #[test]
    fn polynomial_render() {
        let p = poly(&[1, -6, 2]);
        assert_eq!(p.render(&["y"]), "2*y^2 - 6*y + 1");
        assert_eq!(poly(&[0, 3, 0, -1]).render(&["y"]), "-y^3 + 3*y");
        let bi: BiPoly = Polynomial::new(vec![poly(&[0, 0, 2]), poly(&[2])]);
        assert_eq!(bi.render(&["a", "b"]), "2*b + 2*a^2");
        let bi: BiPoly = Polynomial::new(vec![Polynomial::zero(), poly(&[1, 1])]);
        assert_eq!(bi.render(&["a", "b"]), "(a + 1)*b");
    }

    #[test]
    fn polynomial_units() {
        assert_eq!(poly(&[2]).unit_inverse(), Some(Polynomial::constant(ratio(1, 2))));
        assert_eq!(poly(&[1, 1]).unit_inverse(), None);
        assert_eq!(poly(&[4]).exact_sqrt(), Some(poly(&[2])));
    }
}
