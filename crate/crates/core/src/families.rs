//! Named polynomial families and their coefficient arrays: Fibonacci
//! polynomials `F_n`, their duals `F̂_n`, the companions `F̃_n` and `F̃̃_n`,
//! Catalan-Fibonacci polynomials `CF_n` and their duals, and the
//! reciprocal polynomials of `1/(sqrt(1-4bx²) - ax)`.
//!
//! Indexing follows the families themselves: `F_0 = 0`, `F_1 = 1`, and row
//! `n` of a coefficient array holds the polynomial of index `n + 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::{
    binomial, binomial_rational, catalan, factorial, rat, ratio, BiPoly, Polynomial, Rational,
    Ring,
};
use crate::series::{PowerSeries, SeriesError};
use crate::triangles::{RiordanPair, Triangle, TriangleError};

type Ps = PowerSeries<Rational>;
/// ℚ[y]
pub type YPoly = Polynomial<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("index ({n}, {k}) is outside the array")]
    OutOfRange { n: usize, k: usize },
    #[error("{0} has no rational square root")]
    NoRationalRoot(Rational),
    #[error("shifted sum still has negative powers of y at index {0}")]
    NotPolynomial(usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn int(b: BigInt) -> Rational {
    Rational::from_integer(b)
}

fn cat(n: usize) -> BigInt {
    catalan(n as i64).expect("n is nonnegative")
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check(n: usize, k: usize) -> Result<(), FamilyError> {
    if k > n {
        Err(FamilyError::OutOfRange { n, k })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Closed-form entries

/// Fibonacci coefficient array: `binom((n+k)/2, k)` when `n - k` is even,
/// otherwise 0. Counts tilings of an `n`-board by dominoes and `k` squares.
pub fn fib_coeff(n: usize, k: usize) -> Result<Rational, FamilyError> {
    check(n, k)?;
    if (n - k) % 2 == 1 {
        return Ok(rat(0));
    }
    Ok(int(binomial(((n + k) / 2) as i64, k as i64)))
}

/// The same entry gated on the parity of `n` instead of `n - k`, with the
/// half-integer binomial taken literally. It disagrees with the triangle at
/// every odd `n` and at every even `n` with odd `k`; it exists so the
/// discrepancy can be reported.
pub fn fib_coeff_parity_of_n(n: usize, k: usize) -> Result<Rational, FamilyError> {
    check(n, k)?;
    if n % 2 == 1 {
        return Ok(rat(0));
    }
    Ok(binomial_rational(&ratio((n + k) as i64, 2), k as i64))
}

/// Dual Fibonacci array `t̂_{n,k} = binom(n,k) C_{(n-k)/2} (-1)^{(n+k)/2}`
/// for `n - k` even, else 0.
pub fn dual_fib_coeff(n: usize, k: usize) -> Result<Rational, FamilyError> {
    check(n, k)?;
    if (n - k) % 2 == 1 {
        return Ok(rat(0));
    }
    let v = binomial(n as i64, k as i64) * cat((n - k) / 2) * sign((n + k) / 2);
    Ok(int(v))
}

/// `t̃_{n,k} = (-1)^k/(k+1) binom(n,k) binom(k+1, n-k+1)`, the entries of
/// `(1, x(1+x))^!`.
pub fn tilde_coeff(n: usize, k: usize) -> Result<Rational, FamilyError> {
    check(n, k)?;
    let num = binomial(n as i64, k as i64) * binomial(k as i64 + 1, (n - k) as i64 + 1);
    Ok(int(num * sign(k)) / rat(k as i64 + 1))
}

/// `t̃̃_{n,k} = binom(n, 2k) C_k (-1)^{n-k}`, defined for `2k <= n`.
pub fn tildetilde_coeff(n: usize, k: usize) -> Result<Rational, FamilyError> {
    if 2 * k > n {
        return Err(FamilyError::OutOfRange { n, k });
    }
    Ok(int(binomial(n as i64, 2 * k as i64) * cat(k) * sign(n - k)))
}

// ---------------------------------------------------------------------------
// Series and Riordan pairs

/// `I_1(2ix)/(ix) = Σ (-1)^m x^{2m} / (m! (m+1)!)`
pub fn bessel_i1_dual(order: usize) -> Ps {
    even_series(order, |m| int(factorial(m) * factorial(m + 1)))
}

/// `I_0(2ix) = Σ (-1)^m x^{2m} / (m!)^2`
pub fn bessel_i0_dual(order: usize) -> Ps {
    even_series(order, |m| int(factorial(m) * factorial(m)))
}

fn even_series(order: usize, denom: impl Fn(u64) -> Rational) -> Ps {
    let coeffs = (0..order)
        .map(|n| {
            if n % 2 == 1 {
                rat(0)
            } else {
                let m = (n / 2) as u64;
                rat(sign(n / 2)) / denom(m)
            }
        })
        .collect();
    Ps::from_coeffs(coeffs, order)
}

fn working_order(rows: usize) -> usize {
    rows.max(2)
}

/// `(1/(1-x²), x/(1-x²))`
pub fn fibonacci_pair(order: usize) -> RiordanPair<Rational> {
    let den = Ps::from_ints(&[1, 0, -1], order);
    let d = Ps::one(order).div(&den).expect("unit constant");
    RiordanPair::ordinary(d.clone(), d.mul_x().truncate(order)).expect("valid pair")
}

/// `(1, x(1+x))`
pub fn x1x_pair(order: usize) -> RiordanPair<Rational> {
    RiordanPair::ordinary(Ps::one(order), Ps::from_ints(&[0, 1, 1], order)).expect("valid pair")
}

/// The stretched array `(1/(1-x), x²/(1-x))`.
pub fn a011973_pair(order: usize) -> RiordanPair<Rational> {
    let d = Ps::one(order).div(&Ps::from_ints(&[1, -1], order)).expect("unit constant");
    let h = d.mul_x().mul_x().truncate(order);
    RiordanPair::stretched(d, h).expect("valid pair")
}

/// `(1/sqrt(1-4bx²), ax/sqrt(1-4bx²))` over any ring.
pub fn reciprocal_pair<R: Ring>(a: &R, b: &R, order: usize) -> RiordanPair<R> {
    let one = PowerSeries::<R>::one(order);
    let root = (&one - &PowerSeries::monomial(b.clone() * R::from_int(4), 2, order))
        .sqrt()
        .expect("constant term 1");
    let d = one.div(&root).expect("unit constant");
    let h = d.mul_x().truncate(order).scale(a);
    RiordanPair::ordinary(d, h).expect("valid pair")
}

/// `(1/sqrt(1-4x²), x/sqrt(1-4x²))`
pub fn a111959_pair(order: usize) -> RiordanPair<Rational> {
    reciprocal_pair(&rat(1), &rat(1), order)
}

/// `[I_1(2ix)/(ix), -x]`
pub fn dual_fib_exp_pair(order: usize) -> RiordanPair<Rational> {
    RiordanPair::exponential(bessel_i1_dual(order), -Ps::x(order)).expect("valid pair")
}

/// `[I_0(2ix), -x]`
pub fn i0_dual_pair(order: usize) -> RiordanPair<Rational> {
    RiordanPair::exponential(bessel_i0_dual(order), -Ps::x(order)).expect("valid pair")
}

fn built(pair: RiordanPair<Rational>, rows: usize) -> Triangle<Rational> {
    pair.build(rows).expect("pair built at the requested order")
}

/// Coefficient array of `F_1, F_2, ...`.
pub fn fibonacci_triangle(rows: usize) -> Triangle<Rational> {
    built(fibonacci_pair(working_order(rows)), rows)
}

/// Coefficient array of `F̂_1, F̂_2, ...` as an exponential Riordan array.
pub fn dual_fibonacci_triangle(rows: usize) -> Triangle<Rational> {
    built(dual_fib_exp_pair(working_order(rows)), rows)
}

pub fn x1x_triangle(rows: usize) -> Triangle<Rational> {
    built(x1x_pair(working_order(rows)), rows)
}

pub fn a011973_triangle(rows: usize) -> Triangle<Rational> {
    built(a011973_pair(working_order(rows)), rows)
}

pub fn a111959_triangle(rows: usize) -> Triangle<Rational> {
    built(a111959_pair(working_order(rows)), rows)
}

pub fn i0_dual_triangle(rows: usize) -> Triangle<Rational> {
    built(i0_dual_pair(working_order(rows)), rows)
}

/// `(t̃_{n,k})` from the closed form.
pub fn tilde_triangle(rows: usize) -> Triangle<Rational> {
    Triangle::from_fn(rows, |n, k| tilde_coeff(n, k).expect("k <= n"))
}

/// `(t̃̃_{n,k})` from the closed form, zero-padded beyond `k = n/2`.
pub fn tildetilde_triangle(rows: usize) -> Triangle<Rational> {
    Triangle::from_fn(rows, |n, k| tildetilde_coeff(n, k).unwrap_or_else(|_| rat(0)))
}

// ---------------------------------------------------------------------------
// Polynomial families

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyFamily {
    Fib,
    DualFib,
    TildeFib,
    TildeTildeFib,
    Cf,
    DualCf,
    Reciprocal,
}

impl PolyFamily {
    pub const ALL: [PolyFamily; 7] = [
        PolyFamily::Fib,
        PolyFamily::DualFib,
        PolyFamily::TildeFib,
        PolyFamily::TildeTildeFib,
        PolyFamily::Cf,
        PolyFamily::DualCf,
        PolyFamily::Reciprocal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyFamily::Fib => "fib",
            PolyFamily::DualFib => "dual-fib",
            PolyFamily::TildeFib => "tilde-fib",
            PolyFamily::TildeTildeFib => "tildetilde-fib",
            PolyFamily::Cf => "cf",
            PolyFamily::DualCf => "dual-cf",
            PolyFamily::Reciprocal => "reciprocal",
        }
    }
}

impl fmt::Display for PolyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyFamily {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let norm = s.replace('_', "-");
        PolyFamily::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

fn poly_from(
    len: usize,
    coeff: impl Fn(usize) -> Result<Rational, FamilyError>,
) -> YPoly {
    Polynomial::new((0..len).map(|k| coeff(k).expect("index in range")).collect())
}

/// The `n`-th polynomial of a family, in `y`.
///
/// `cf` is `C_{n-1} F_n(y)`; `dual-cf` is the coefficient of `x^n` in
/// `x(sqrt(1-4yx²) - x)`; `reciprocal` is 0-indexed from `1`.
pub fn family_poly(family: PolyFamily, n: usize) -> YPoly {
    if n == 0 && family != PolyFamily::Reciprocal {
        return YPoly::zero();
    }
    let m = n.saturating_sub(1);
    match family {
        PolyFamily::Fib => poly_from(n, |k| fib_coeff(m, k)),
        PolyFamily::DualFib => poly_from(n, |k| dual_fib_coeff(m, k)),
        PolyFamily::TildeFib => poly_from(n, |k| tilde_coeff(m, k)),
        PolyFamily::TildeTildeFib => poly_from(m / 2 + 1, |k| tildetilde_coeff(m, k)),
        PolyFamily::Cf => family_poly(PolyFamily::Fib, n).scale(&int(cat(m))),
        PolyFamily::DualCf => dual_cf_sequence(n + 1).swap_remove(n),
        PolyFamily::Reciprocal => reciprocal_polys(n + 1).swap_remove(n),
    }
}

/// `F̂_1 .. F̂_{count}` by reverting `x/(1 - yx - x²)` in `x`.
pub fn dual_fib_by_reversion(count: usize) -> Vec<YPoly> {
    let order = count + 1;
    let one = PowerSeries::<YPoly>::one(order);
    let x = PowerSeries::<YPoly>::x(order);
    let y = PowerSeries::constant(YPoly::var(), order);
    let den = &(&one - &(&y * &x)) - &(&x * &x);
    let rev = x.div(&den).and_then(|f| f.revert()).expect("linear coefficient 1");
    rev.into_coeffs().into_iter().skip(1).collect()
}

/// `F̂_1 .. F̂_{count}` as row polynomials of `[I_1(2ix)/(ix), -x]`.
pub fn dual_fib_by_exponential(count: usize) -> Vec<YPoly> {
    let t = dual_fibonacci_triangle(count);
    (0..count).map(|n| t.row_poly(n)).collect()
}

/// `F̂_{n+1}` from the `t̂` closed form.
pub fn dual_fib_by_closed_form(n: usize) -> YPoly {
    family_poly(PolyFamily::DualFib, n + 1)
}

/// `F̂_{n+1}(y) = Σ_k t̃_{n,k} y^{2k-n}`, computed as `y^{-n} Σ_k t̃_{n,k} y^{2k}`
/// with the division by `y^n` checked to be exact.
pub fn dual_fib_by_tilde(n: usize) -> Result<YPoly, FamilyError> {
    let mut lifted = YPoly::zero();
    for k in 0..=n {
        lifted = lifted + YPoly::monomial(tilde_coeff(n, k)?, 2 * k);
    }
    lifted.shift_down(n).ok_or(FamilyError::NotPolynomial(n))
}

/// `F̂_{n+1}(y) = Σ_{k <= n/2} t̃̃_{n,k} y^{n-2k}`
pub fn dual_fib_by_tildetilde(n: usize) -> YPoly {
    (0..=n / 2).fold(YPoly::zero(), |acc, k| {
        acc + YPoly::monomial(tildetilde_coeff(n, k).expect("2k <= n"), n - 2 * k)
    })
}

fn pochhammer(a: &Rational, j: usize) -> Rational {
    (0..j).fold(rat(1), |acc, i| acc * (a + rat(i as i64)))
}

/// `y^n 2F1((1-n)/2, -n/2; 2; -4/y)` expanded as a polynomial. The series
/// terminates because one of the upper parameters is a nonpositive integer.
///
/// This agrees with the `t̃` array (`F̃_{n+1}`) for even `n` and differs by
/// the factor `(-1)^n` for odd `n`.
pub fn tilde_poly_hypergeom(n: usize) -> YPoly {
    let p = ratio(1 - n as i64, 2);
    let q = ratio(-(n as i64), 2);
    let mut out = YPoly::zero();
    for j in 0..=n {
        let num = pochhammer(&p, j) * pochhammer(&q, j);
        if num == rat(0) {
            break;
        }
        let den = pochhammer(&rat(2), j) * int(factorial(j as u64));
        let c = num / den * int(BigInt::from(-4).pow(j as u32));
        out = out + YPoly::monomial(c, n - j);
    }
    out
}

// ---------------------------------------------------------------------------
// Catalan-Fibonacci polynomials

/// `CF_{n+1}(a, b) = C_n Σ_i binom(n-i, i) a^{n-2i} b^i` in ℚ[a][b].
pub fn cf_coeffs(n: usize) -> BiPoly {
    let c = int(cat(n));
    let mut coeffs = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let w = c.clone() * int(binomial((n - i) as i64, i as i64));
        coeffs.push(YPoly::monomial(w, n - 2 * i));
    }
    Polynomial::new(coeffs)
}

/// Entry `(n, k)` is the coefficient of `a^k` in `CF_{n+1}` at `b = b0`.
/// `b0 = 1` is the Catalan-Fibonacci matrix, `b0 = 2` the Catalan-Jacobsthal
/// matrix.
pub fn cf_matrix(b0: &Rational, rows: usize) -> Triangle<Rational> {
    Triangle::from_fn(rows, |n, k| {
        if (n - k) % 2 == 1 {
            return rat(0);
        }
        let i = (n - k) / 2;
        int(cat(n) * binomial((n - i) as i64, i as i64)) * pow(b0, i)
    })
}

/// Entry `(n, k)` is the coefficient of `b^k` in `CF_{n+1}` at `a = a0`.
/// At `a0 = 1` this is the coefficient array of `C_n F_{n+1}` read with `b`
/// as the polynomial variable.
pub fn cf_b_array(a0: &Rational, rows: usize) -> Triangle<Rational> {
    Triangle::from_fn(rows, |n, k| {
        if 2 * k > n {
            return rat(0);
        }
        int(cat(n) * binomial((n - k) as i64, k as i64)) * pow(a0, n - 2 * k)
    })
}

fn pow(base: &Rational, e: usize) -> Rational {
    (0..e).fold(rat(1), |acc, _| acc * base)
}

/// Matrix over ℚ[a] that maps the vector `(b^i)` to `(CF_{n+1})`.
pub fn cf_factor_in_a(rows: usize) -> Triangle<YPoly> {
    Triangle::from_fn(rows, |n, i| {
        if 2 * i > n {
            return YPoly::zero();
        }
        YPoly::monomial(int(cat(n) * binomial((n - i) as i64, i as i64)), n - 2 * i)
    })
}

/// Matrix over ℚ[b] that maps the vector `(a^k)` to `(CF_{n+1})`.
pub fn cf_factor_in_b(rows: usize) -> Triangle<YPoly> {
    Triangle::from_fn(rows, |n, k| {
        if (n - k) % 2 == 1 {
            return YPoly::zero();
        }
        let i = (n - k) / 2;
        YPoly::monomial(int(cat(n) * binomial((n - i) as i64, i as i64)), i)
    })
}

/// Rows of `m` (entries in ℚ[a]) times the column `(1, b, b², ...)`.
pub fn times_powers_of_b(m: &Triangle<YPoly>) -> Vec<BiPoly> {
    m.rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(BiPoly::zero(), |acc, (i, e)| acc + BiPoly::monomial(e.clone(), i))
        })
        .collect()
}

/// Rows of `m` (entries in ℚ[b]) times the column `(1, a, a², ...)`.
pub fn times_powers_of_a(m: &Triangle<YPoly>) -> Vec<BiPoly> {
    m.rows()
        .iter()
        .map(|row| {
            row.iter().enumerate().fold(BiPoly::zero(), |acc, (k, e)| {
                acc + e.map(|c| YPoly::monomial(c.clone(), k))
            })
        })
        .collect()
}

/// `x(sqrt(1 - 4bx²) - ax)`, whose reversion generates `CF_{n+1}(a, b)`.
pub fn dual_cf_gf<R: Ring>(a: &R, b: &R, order: usize) -> PowerSeries<R> {
    let one = PowerSeries::<R>::one(order);
    let root = (&one - &PowerSeries::monomial(b.clone() * R::from_int(4), 2, order))
        .sqrt()
        .expect("constant term 1");
    let inner = &root - &PowerSeries::monomial(a.clone(), 1, order);
    inner.mul_x().truncate(order)
}

/// `ĈF_0 .. ĈF_{n_terms-1}`: coefficients of `x(sqrt(1-4yx²) - x)`.
pub fn dual_cf_sequence(n_terms: usize) -> Vec<YPoly> {
    dual_cf_gf(&YPoly::one(), &YPoly::var(), n_terms).into_coeffs()
}

/// Closed form `sqrt(1 - 2ax - sqrt(1 - 4ax - 16bx²)) / (sqrt(2) sqrt(a² + 4b))`
/// of the reversion of `x(sqrt(1-4bx²) - ax)`, at a rational point.
///
/// The factor `1/sqrt(2)` is taken inside the outer root, whose argument
/// starts `(a² + 4b) x²`; so the expansion is rational exactly when
/// `a² + 4b` is a nonzero rational square.
pub fn cf_reversion_closed_form(
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Result<Ps, FamilyError> {
    let disc = a * a + rat(4) * b;
    let root_disc = disc
        .exact_sqrt()
        .filter(|r| !Ring::is_zero(r))
        .ok_or_else(|| FamilyError::NoRationalRoot(disc.clone()))?;
    let work = order + 1;
    let inner = Ps::from_coeffs(vec![rat(1), rat(-4) * a, rat(-16) * b], work).sqrt()?;
    let outer_arg = &Ps::from_coeffs(vec![rat(1), rat(-2) * a], work) - &inner;
    let root = outer_arg.scale(&ratio(1, 2)).sqrt()?;
    Ok(root.scale(&root_disc.recip()).truncate(order))
}

/// Polynomials `1, 1, 2y+1, 4y+1, ...` of `1/(sqrt(1-4yx²) - x)`, computed as
/// row sums of `(1/sqrt(1-4yx²), x/sqrt(1-4yx²))` through the fundamental
/// theorem.
pub fn reciprocal_polys(n_terms: usize) -> Vec<YPoly> {
    let order = n_terms.max(2);
    let pair = reciprocal_pair(&YPoly::one(), &YPoly::var(), order);
    let geo = PowerSeries::<YPoly>::one(order)
        .div(&PowerSeries::from_coeffs(vec![YPoly::one(), -YPoly::one()], order))
        .expect("unit constant");
    let mut out = pair.apply_series(&geo).expect("h(0) = 0").into_coeffs();
    out.truncate(n_terms);
    out
}
