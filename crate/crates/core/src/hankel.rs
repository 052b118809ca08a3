//! Hankel transforms by exact fraction-free elimination, and expansion of
//! rational generating functions for checking claimed closed forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("denominator must have a nonzero constant term")]
    ZeroLeadingDenominator,
}

/// The matrix `(a_{i+j})_{0 <= i,j <= m}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelMatrix {
    source: Vec<Rational>,
    dim: usize,
}

impl HankelMatrix {
    /// Uses `a_0 .. a_{2(dim-1)}` of `seq`.
    pub fn new(seq: &[Rational], dim: usize) -> Result<Self, HankelError> {
        let needed = (2 * dim).saturating_sub(1);
        if seq.len() < needed {
            return Err(HankelError::InsufficientTerms { needed, got: seq.len() });
        }
        Ok(HankelMatrix {
            source: seq[..needed].to_vec(),
            dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.source[i + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        determinant(self.to_rows())
    }
}

/// Exact determinant. Integer matrices go through Bareiss elimination;
/// anything else through Gaussian elimination over ℚ.
pub fn determinant(rows: Vec<Vec<Rational>>) -> Rational {
    if rows.iter().flatten().all(|q| q.is_integer()) {
        let ints = rows
            .into_iter()
            .map(|r| r.into_iter().map(|q| q.to_integer()).collect())
            .collect();
        Rational::from_integer(bareiss(ints))
    } else {
        gaussian(rows)
    }
}

/// Fraction-free elimination: every intermediate entry is a minor of the
/// input, so the divisions are exact.
pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn gaussian(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = <Rational as Ring>::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !Ring::is_zero(&m[r][k])) else {
            return <Rational as Ring>::zero();
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            let (upper, lower) = m.split_at_mut(i);
            let (top, row) = (&upper[k], &mut lower[0]);
            let factor = &row[k] / &pivot;
            for (dst, src) in row[k..n].iter_mut().zip(&top[k..n]) {
                *dst -= src * &factor;
            }
        }
    }
    det
}

/// `h_m = det(a_{i+j})_{0 <= i,j <= m}` for `m = 0 ..= m_max`.
pub fn hankel_transform(seq: &[Rational], m_max: usize) -> Result<Vec<Rational>, HankelError> {
    let needed = 2 * m_max + 1;
    if seq.len() < needed {
        return Err(HankelError::InsufficientTerms { needed, got: seq.len() });
    }
    (0..=m_max)
        .map(|m| Ok(HankelMatrix::new(seq, m + 1)?.determinant()))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum GfMatch {
    Agree { checked: usize },
    Mismatch { index: usize, expected: Rational, found: Rational },
}

impl GfMatch {
    pub fn agrees(&self) -> bool {
        matches!(self, GfMatch::Agree { .. })
    }
}

/// First `n` coefficients of `num/den`, via the recurrence
/// `den_0 c_n = num_n - Σ_{j>=1} den_j c_{n-j}`.
pub fn expand_rational_gf(
    num: &[Rational],
    den: &[Rational],
    n: usize,
) -> Result<Vec<Rational>, HankelError> {
    let d0 = den
        .first()
        .and_then(|d| d.unit_inverse())
        .ok_or(HankelError::ZeroLeadingDenominator)?;
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = num.get(i).cloned().unwrap_or_else(<Rational as Ring>::zero);
        for (j, d) in den.iter().enumerate().skip(1).take(i) {
            acc -= d * &out[i - j];
        }
        out.push(acc * &d0);
    }
    Ok(out)
}

/// Compare `seq` with the expansion of `num/den` over the first `n_check` terms.
pub fn match_rational_gf(
    seq: &[Rational],
    num: &[Rational],
    den: &[Rational],
    n_check: usize,
) -> Result<GfMatch, HankelError> {
    if seq.len() < n_check {
        return Err(HankelError::InsufficientTerms { needed: n_check, got: seq.len() });
    }
    let expanded = expand_rational_gf(num, den, n_check)?;
    for (index, (found, expected)) in seq.iter().zip(expanded).enumerate() {
        if *found != expected {
            return Ok(GfMatch::Mismatch { index, expected, found: found.clone() });
        }
    }
    Ok(GfMatch::Agree { checked: n_check })
}
