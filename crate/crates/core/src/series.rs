//! Truncated formal power series in `x` over any [`Ring`].
//!
//! A series carries its truncation order `N`: it stores exactly the
//! coefficients of `x^0 .. x^{N-1}` and says nothing about higher terms.
//! Binary operations truncate to the smaller of the two orders, so a
//! result never claims more precision than its inputs justify.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::exact::{Rational, Ring};

/// Truncation order used when callers don't pick one.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not invertible")]
    NonInvertibleConstant,
    #[error("constant term has no exact square root")]
    NoExactSqrt,
    #[error("series has odd valuation {0}, so it has no square root")]
    OddValuation(usize),
    #[error("expected a zero constant term")]
    NonzeroConstant,
    #[error("linear coefficient is not invertible")]
    NonInvertibleLinear,
    #[error("series of order {0} is too short for this operation")]
    TooShort(usize),
}

#[derive(Clone, PartialEq)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Build from leading coefficients, padding with zeros (or truncating)
    /// to exactly `order` entries.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series variable `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^n`. Panics if `n` is at or beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient, `None` if all known terms vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PowerSeries<S> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplication by `x`; the product is known one term further.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(R::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { coeffs }
    }

    /// Division by `x`: coefficients move down one index, order drops by one.
    pub fn shift_div_x(&self) -> Result<Self, SeriesError> {
        match self.coeffs.first() {
            None => Err(SeriesError::TooShort(0)),
            Some(c) if !c.is_zero() => Err(SeriesError::NonzeroConstant),
            Some(_) => Ok(PowerSeries {
                coeffs: self.coeffs[1..].to_vec(),
            }),
        }
    }

    pub fn derivative(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.clone() * R::from_int(n as i64))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; needs a unit constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        let Some(c0) = self.coeffs.first() else {
            return Ok(self.clone());
        };
        let inv0 = c0.unit_inverse().ok_or(SeriesError::NonInvertibleConstant)?;
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = acc + a.clone() * out[k - i].clone();
                }
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `self / rhs`; the divisor needs a unit constant term.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(&self.truncate(rhs.order()) * &rhs.truncate(self.order()).inverse()?)
    }

    /// Square root with nonnegative leading coefficient.
    ///
    /// A series with valuation `2m` is accepted when its leading coefficient
    /// has an exact root; the result is then known to order `N - m`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        let Some(v) = self.valuation() else {
            // all known terms vanish: 0 is a root, but only to half the order
            return Ok(Self::zero(n.div_ceil(2)));
        };
        if v % 2 == 1 {
            return Err(SeriesError::OddValuation(v));
        }
        let h = &self.coeffs[v..];
        let s0 = h[0].exact_sqrt().ok_or(SeriesError::NoExactSqrt)?;
        let inv_2s0 = (s0.clone() * R::from_int(2))
            .unit_inverse()
            .ok_or(SeriesError::NoExactSqrt)?;
        let mut s: Vec<R> = Vec::with_capacity(h.len());
        s.push(s0);
        for k in 1..h.len() {
            let mut acc = h[k].clone();
            for i in 1..k {
                acc = acc - s[i].clone() * s[k - i].clone();
            }
            s.push(acc * inv_2s0.clone());
        }
        let shift = v / 2;
        let mut coeffs = vec![R::zero(); shift];
        coeffs.extend(s);
        Ok(PowerSeries { coeffs })
    }

    /// `self(inner(x))` by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if inner.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(SeriesError::NonzeroConstant);
        }
        let n = self.order().min(inner.order());
        let g = inner.truncate(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = &acc * &g;
            if n > 0 {
                acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
            }
        }
        Ok(acc)
    }

    /// Compositional inverse: `g` with `self(g(x)) = x` to the same order.
    ///
    /// Coefficients are solved one at a time. Writing
    /// `f = c1 x + Σ_{k≥2} c_k x^k`, the identity `f(g) = x` gives
    /// `g_n = -(Σ_{k=2..n} c_k [x^n] g^k) / c1` for `n ≥ 2`, and `[x^n] g^k`
    /// only involves `g_1 .. g_{n-1}` when `k ≥ 2`.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if n < 2 {
            return Err(SeriesError::TooShort(n));
        }
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let inv_c1 = self.coeffs[1]
            .unit_inverse()
            .ok_or(SeriesError::NonInvertibleLinear)?;
        // powers[k][m] = [x^m] g^k, filled column by column
        let mut powers: Vec<Vec<R>> = vec![vec![R::zero(); n]; n];
        powers[0][0] = R::one();
        powers[1][1] = inv_c1.clone();
        for m in 2..n {
            let mut rhs = R::zero();
            for k in 2..=m {
                let mut acc = R::zero();
                for j in 1..=(m + 1 - k) {
                    let gj = &powers[1][j];
                    let prev = &powers[k - 1][m - j];
                    if !gj.is_zero() && !prev.is_zero() {
                        acc = acc + gj.clone() * prev.clone();
                    }
                }
                if !self.coeffs[k].is_zero() && !acc.is_zero() {
                    rhs = rhs + self.coeffs[k].clone() * acc.clone();
                }
                powers[k][m] = acc;
            }
            powers[1][m] = -(rhs * inv_c1.clone());
        }
        Ok(PowerSeries {
            coeffs: powers.swap_remove(1),
        })
    }

    /// Render as `c0 + c1*x + ... + O(x^N)`.
    pub fn render(&self, vars: &[&str]) -> String {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.render(vars);
            let text = if c.is_compound() { format!("({text})") } else { text };
            terms.push(match k {
                0 => text,
                1 if text == "1" => "x".to_string(),
                1 => format!("{text}*x"),
                _ if text == "1" => format!("x^{k}"),
                _ => format!("{text}*x^{k}"),
            });
        }
        terms.push(format!("O(x^{})", self.order()));
        terms.join(" + ")
    }
}

impl PowerSeries<Rational> {
    /// Series of integer coefficients, for tests and examples.
    pub fn from_ints(cs: &[i64], order: usize) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| Rational::from_int(c)).collect(), order)
    }
}

impl<R: fmt::Debug> fmt::Debug for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries(order={}, {:?})", self.coeffs.len(), self.coeffs)
    }
}

impl<R: Ring> Add for &PowerSeries<R> {
    type Output = PowerSeries<R>;
    fn add(self, rhs: Self) -> PowerSeries<R> {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<R: Ring> Sub for &PowerSeries<R> {
    type Output = PowerSeries<R>;
    fn sub(self, rhs: Self) -> PowerSeries<R> {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<R: Ring> Mul for &PowerSeries<R> {
    type Output = PowerSeries<R>;
    fn mul(self, rhs: Self) -> PowerSeries<R> {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl<R: Ring> Neg for &PowerSeries<R> {
    type Output = PowerSeries<R>;
    fn neg(self) -> PowerSeries<R> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl<R: Ring> $tr for PowerSeries<R> {
            type Output = PowerSeries<R>;
            fn $m(self, rhs: Self) -> PowerSeries<R> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_by_value!(Add add, Sub sub, Mul mul);

impl<R: Ring> Neg for PowerSeries<R> {
    type Output = PowerSeries<R>;
    fn neg(self) -> PowerSeries<R> {
        -&self
    }
}
