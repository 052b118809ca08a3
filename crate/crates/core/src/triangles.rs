//! Lower-triangular coefficient arrays, Riordan arrays, and the inversion
//! operator `T ↦ T^!`.
//!
//! A triangle is read as a polynomial family: row `n` holds the coefficients
//! of a polynomial `p_n(y)` of degree at most `n`, and the family's generating
//! function is `G(x, y) = Σ p_n(y) x^n`. The inversion of `T` is the triangle
//! whose family has generating function `Rev_x(x G(x, y)) / x`. It is defined
//! whenever `t_{0,0}` is a unit, including for arrays that are singular as
//! matrices.

use thiserror::Error;

use crate::exact::{factorial, Polynomial, Rational, Ring};
use crate::series::{PowerSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("row {row} has {len} entries, expected {}", row + 1)]
    RaggedRow { row: usize, len: usize },
    #[error("series order {order} is too small for {rows} rows")]
    OrderTooSmall { order: usize, rows: usize },
    #[error("coefficient of x^{row} has degree {degree} in y, so the array is not lower-triangular")]
    NotLowerTriangular { row: usize, degree: usize },
    #[error("entry (0,0) is not invertible")]
    NotInvertible,
    #[error("invalid Riordan pair: {0}")]
    InvalidPair(&'static str),
    #[error("{kind:?} arrays cannot be built by this constructor")]
    WrongKind { kind: RiordanKind },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Triangle<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> Triangle<R> {
    /// Checks that row `n` has exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, TriangleError> {
        for (row, r) in rows.iter().enumerate() {
            if r.len() != row + 1 {
                return Err(TriangleError::RaggedRow { row, len: r.len() });
            }
        }
        Ok(Triangle { rows })
    }

    pub fn from_fn(n_rows: usize, mut entry: impl FnMut(usize, usize) -> R) -> Self {
        Triangle {
            rows: (0..n_rows)
                .map(|n| (0..=n).map(|k| entry(n, k)).collect())
                .collect(),
        }
    }

    pub fn try_from_fn<E>(
        n_rows: usize,
        mut entry: impl FnMut(usize, usize) -> Result<R, E>,
    ) -> Result<Self, E> {
        let mut rows = Vec::with_capacity(n_rows);
        for n in 0..n_rows {
            rows.push((0..=n).map(|k| entry(n, k)).collect::<Result<Vec<_>, E>>()?);
        }
        Ok(Triangle { rows })
    }

    pub fn identity(n_rows: usize) -> Self {
        Self::from_fn(n_rows, |n, k| if n == k { R::one() } else { R::zero() })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> &R {
        &self.rows[n][k]
    }

    /// The first `n_rows` rows.
    pub fn truncate(&self, n_rows: usize) -> Self {
        Triangle {
            rows: self.rows.iter().take(n_rows).cloned().collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Triangle<S> {
        Triangle {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    /// Row `n` as a polynomial in `y`.
    pub fn row_poly(&self, n: usize) -> Polynomial<R> {
        Polynomial::new(self.rows[n].clone())
    }

    /// `Σ_n p_n(y) x^n`, known to order `n_rows`.
    pub fn bgf(&self) -> PowerSeries<Polynomial<R>> {
        let n = self.n_rows();
        PowerSeries::from_coeffs((0..n).map(|i| self.row_poly(i)).collect(), n)
    }

    /// The inversion `T^!`, with the same number of rows.
    pub fn invert(&self) -> Result<Self, TriangleError> {
        let n = self.n_rows();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.rows[0][0].unit_inverse().is_none() {
            return Err(TriangleError::NotInvertible);
        }
        let dual = self.bgf().mul_x().revert()?.shift_div_x()?;
        Self::from_bgf(&dual, n)
    }

    /// Triangle whose row `n` is `[x^n] g` as a coefficient list in `y`.
    pub fn from_bgf(g: &PowerSeries<Polynomial<R>>, n_rows: usize) -> Result<Self, TriangleError> {
        if g.order() < n_rows {
            return Err(TriangleError::OrderTooSmall { order: g.order(), rows: n_rows });
        }
        let mut rows = Vec::with_capacity(n_rows);
        for (row, p) in g.coeffs()[..n_rows].iter().enumerate() {
            let padded = p.padded(row + 1).ok_or(TriangleError::NotLowerTriangular {
                row,
                degree: p.degree().unwrap_or(0),
            })?;
            rows.push(padded);
        }
        Ok(Triangle { rows })
    }

    /// `s_n = Σ_k t_{n,k}`
    pub fn row_sums(&self) -> Vec<R> {
        self.rows
            .iter()
            .map(|r| r.iter().cloned().fold(R::zero(), |a, b| a + b))
            .collect()
    }

    /// Each row polynomial evaluated at `y0`.
    pub fn eval_rows(&self, y0: &R) -> Vec<R> {
        (0..self.n_rows()).map(|n| self.row_poly(n).eval(y0)).collect()
    }

    /// Column `k` as a list indexed by row (entries above the diagonal omitted).
    pub fn column(&self, k: usize) -> Vec<R> {
        self.rows.iter().skip(k).map(|r| r[k].clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiordanKind {
    Ordinary,
    Exponential,
    /// `h'(0) = 0`; the array is still lower-triangular but not a group element.
    Stretched,
}

/// A pair `(d(x), h(x))` defining `t_{n,k} = [x^n] d h^k`
/// (times `n!/k!` for the exponential kind).
#[derive(Debug, Clone, PartialEq)]
pub struct RiordanPair<R> {
    d: PowerSeries<R>,
    h: PowerSeries<R>,
    kind: RiordanKind,
}

impl<R: Ring> RiordanPair<R> {
    pub fn new(d: PowerSeries<R>, h: PowerSeries<R>, kind: RiordanKind) -> Result<Self, TriangleError> {
        if d.order() == 0 || d.coeff(0).is_zero() {
            return Err(TriangleError::InvalidPair("d(0) must be nonzero"));
        }
        if h.order() < 2 {
            return Err(TriangleError::InvalidPair("h must be known to order 2"));
        }
        if !h.coeff(0).is_zero() {
            return Err(TriangleError::InvalidPair("h(0) must be zero"));
        }
        match kind {
            RiordanKind::Ordinary | RiordanKind::Exponential if h.coeff(1).is_zero() => {
                Err(TriangleError::InvalidPair("h'(0) must be nonzero"))
            }
            RiordanKind::Stretched if !h.coeff(1).is_zero() => {
                Err(TriangleError::InvalidPair("stretched arrays need h'(0) = 0"))
            }
            RiordanKind::Stretched if h.valuation().is_none() => {
                Err(TriangleError::InvalidPair("h must be nonzero"))
            }
            _ => Ok(RiordanPair { d, h, kind }),
        }
    }

    pub fn ordinary(d: PowerSeries<R>, h: PowerSeries<R>) -> Result<Self, TriangleError> {
        Self::new(d, h, RiordanKind::Ordinary)
    }

    pub fn exponential(d: PowerSeries<R>, h: PowerSeries<R>) -> Result<Self, TriangleError> {
        Self::new(d, h, RiordanKind::Exponential)
    }

    pub fn stretched(d: PowerSeries<R>, h: PowerSeries<R>) -> Result<Self, TriangleError> {
        Self::new(d, h, RiordanKind::Stretched)
    }

    pub fn identity(order: usize) -> Self {
        RiordanPair {
            d: PowerSeries::one(order),
            h: PowerSeries::x(order),
            kind: RiordanKind::Ordinary,
        }
    }

    pub fn d(&self) -> &PowerSeries<R> {
        &self.d
    }

    pub fn h(&self) -> &PowerSeries<R> {
        &self.h
    }

    pub fn kind(&self) -> RiordanKind {
        self.kind
    }

    fn order(&self) -> usize {
        self.d.order().min(self.h.order())
    }

    /// Columns `d h^k`, one multiplication by `h` per column.
    fn columns(&self, n_rows: usize) -> Result<Vec<PowerSeries<R>>, TriangleError> {
        if self.order() < n_rows {
            return Err(TriangleError::OrderTooSmall { order: self.order(), rows: n_rows });
        }
        let h = self.h.truncate(n_rows);
        let mut col = self.d.truncate(n_rows);
        let mut cols = Vec::with_capacity(n_rows);
        for _ in 0..n_rows {
            let next = &col * &h;
            cols.push(col);
            col = next;
        }
        Ok(cols)
    }

    /// `t_{n,k} = [x^n] d(x) h(x)^k` for ordinary and stretched pairs.
    pub fn build_ordinary(&self, n_rows: usize) -> Result<Triangle<R>, TriangleError> {
        if self.kind == RiordanKind::Exponential {
            return Err(TriangleError::WrongKind { kind: self.kind });
        }
        let cols = self.columns(n_rows)?;
        Ok(Triangle::from_fn(n_rows, |n, k| cols[k].coeff(n).clone()))
    }

    /// `t_{n,k} = (n!/k!) [x^n] d(x) h(x)^k`.
    pub fn build_exponential(&self, n_rows: usize) -> Result<Triangle<R>, TriangleError> {
        if self.kind != RiordanKind::Exponential {
            return Err(TriangleError::WrongKind { kind: self.kind });
        }
        let cols = self.columns(n_rows)?;
        Ok(Triangle::from_fn(n_rows, |n, k| {
            let falling = factorial(n as u64) / factorial(k as u64);
            cols[k].coeff(n).clone() * R::from_rational(&Rational::from_integer(falling))
        }))
    }

    /// Build according to the pair's kind.
    pub fn build(&self, n_rows: usize) -> Result<Triangle<R>, TriangleError> {
        match self.kind {
            RiordanKind::Exponential => self.build_exponential(n_rows),
            _ => self.build_ordinary(n_rows),
        }
    }

    /// The fundamental theorem: the array acting on the column vector of
    /// coefficients of `f` gives `d(x) f(h(x))`.
    pub fn apply_series(&self, f: &PowerSeries<R>) -> Result<PowerSeries<R>, TriangleError> {
        if self.kind != RiordanKind::Ordinary {
            return Err(TriangleError::WrongKind { kind: self.kind });
        }
        Ok(&self.d * &f.compose(&self.h)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    type Ps = PowerSeries<Rational>;

    fn int_rows(t: &Triangle<Rational>) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|c| crate::exact::to_i64(c).unwrap()).collect())
            .collect()
    }

    fn fib_pair(order: usize) -> RiordanPair<Rational> {
        let den = Ps::from_ints(&[1, 0, -1], order);
        RiordanPair::ordinary(
            Ps::one(order).div(&den).unwrap(),
            Ps::x(order).div(&den).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn ordinary_fibonacci_triangle() {
        let t = fib_pair(6).build_ordinary(6).unwrap();
        assert_eq!(
            int_rows(&t),
            vec![
                vec![1],
                vec![0, 1],
                vec![1, 0, 1],
                vec![0, 2, 0, 1],
                vec![1, 0, 3, 0, 1],
                vec![0, 3, 0, 4, 0, 1],
            ]
        );
    }

    #[test]
    fn stretched_pair() {
        let n = 6;
        let den = Ps::from_ints(&[1, -1], n);
        let pair = RiordanPair::stretched(
            Ps::one(n).div(&den).unwrap(),
            Ps::from_ints(&[0, 0, 1], n).div(&den).unwrap(),
        )
        .unwrap();
        assert_eq!(int_rows(&pair.build(n).unwrap())[5], vec![1, 4, 3, 0, 0, 0]);
    }

    #[test]
    fn pair_validation() {
        let n = 4;
        assert!(RiordanPair::ordinary(Ps::zero(n), Ps::x(n)).is_err());
        assert!(RiordanPair::ordinary(Ps::one(n), Ps::one(n)).is_err());
        assert!(RiordanPair::ordinary(Ps::one(n), Ps::from_ints(&[0, 0, 1], n)).is_err());
        assert!(RiordanPair::stretched(Ps::one(n), Ps::x(n)).is_err());
        assert!(RiordanPair::stretched(Ps::one(n), Ps::zero(n)).is_err());
    }

    #[test]
    fn order_too_small() {
        let err = fib_pair(4).build_ordinary(6).unwrap_err();
        assert_eq!(err, TriangleError::OrderTooSmall { order: 4, rows: 6 });
    }

    #[test]
    fn exponential_identity() {
        let pair = RiordanPair::exponential(Ps::one(5), Ps::x(5)).unwrap();
        assert_eq!(pair.build(5).unwrap(), Triangle::identity(5));
        assert!(pair.build_ordinary(5).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Triangle::from_rows(vec![vec![rat(1)], vec![rat(1)]]).unwrap_err();
        assert_eq!(err, TriangleError::RaggedRow { row: 1, len: 1 });
    }

    #[test]
    fn from_bgf_checks_degrees() {
        type P = Polynomial<Rational>;
        let g = PowerSeries::from_coeffs(vec![P::one(), P::monomial(rat(1), 2)], 2);
        assert_eq!(
            Triangle::from_bgf(&g, 2).unwrap_err(),
            TriangleError::NotLowerTriangular { row: 1, degree: 2 }
        );
        let single = Triangle::from_bgf(&PowerSeries::<P>::one(1), 1).unwrap();
        assert_eq!(int_rows(&single), vec![vec![1]]);
    }

    #[test]
    fn invert_needs_unit_corner() {
        let t = Triangle::from_rows(vec![vec![rat(0)], vec![rat(1), rat(1)]]).unwrap();
        assert_eq!(t.invert().unwrap_err(), TriangleError::NotInvertible);
    }

    #[test]
    fn fibonacci_inversion() {
        let t = fib_pair(6).build_ordinary(6).unwrap().invert().unwrap();
        assert_eq!(int_rows(&t)[4], vec![2, 0, -6, 0, 1]);
        assert_eq!(int_rows(&t)[5], vec![0, -10, 0, 10, 0, -1]);
    }

    #[test]
    fn row_sums_and_eval() {
        let id = Triangle::<Rational>::identity(4);
        assert_eq!(id.row_sums(), vec![rat(1); 4]);
        let t = fib_pair(6).build_ordinary(6).unwrap();
        assert_eq!(t.eval_rows(&rat(0)), vec![rat(1), rat(0), rat(1), rat(0), rat(1), rat(0)]);
        assert_eq!(t.eval_rows(&rat(1)), t.row_sums());
    }

    #[test]
    fn apply_series_examples() {
        let n = 10;
        let geo = Ps::one(n).div(&Ps::from_ints(&[1, -1], n)).unwrap();
        let f = Ps::from_ints(&[2, 7, 1, 8], n);
        assert_eq!(RiordanPair::identity(n).apply_series(&f).unwrap(), f);
        let fib = fib_pair(n).apply_series(&geo).unwrap();
        let expected = Ps::one(n).div(&Ps::from_ints(&[1, -1, -1], n)).unwrap();
        assert_eq!(fib, expected);
    }
}
