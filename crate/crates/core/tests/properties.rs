use proptest::prelude::*;

use dualpoly::exact::{binomial, ratio, Polynomial, Rational, Ring};
use dualpoly::families::YPoly;
use dualpoly::hankel::{bareiss, hankel_transform};
use dualpoly::series::PowerSeries;
use dualpoly::triangles::{RiordanPair, Triangle};
use num_bigint::BigInt;

type Ps = PowerSeries<Rational>;
type YPs = PowerSeries<YPoly>;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !Ring::is_zero(r))
}

fn ypoly() -> impl Strategy<Value = YPoly> {
    prop::collection::vec(small_rational(), 0..3).prop_map(Polynomial::new)
}

fn series(order: usize) -> impl Strategy<Value = Ps> {
    prop::collection::vec(small_rational(), order).prop_map(move |c| Ps::from_coeffs(c, order))
}

/// `c1 x + c2 x² + ...` with `c1` a nonzero rational.
fn revertible(order: usize) -> impl Strategy<Value = Ps> {
    (nonzero_rational(), prop::collection::vec(small_rational(), order - 2)).prop_map(move |(c1, rest)| {
        let mut c = vec![Rational::from_int(0), c1];
        c.extend(rest);
        Ps::from_coeffs(c, order)
    })
}

/// Integer coefficients in ℚ[y] and a linear coefficient of ±1, which
/// keeps the reversion free of denominators.
fn revertible_y(order: usize) -> impl Strategy<Value = YPs> {
    let int_poly = prop::collection::vec(-3i64..=3, 0..3)
        .prop_map(|cs| Polynomial::new(cs.into_iter().map(Rational::from_int).collect()));
    (prop_oneof![Just(1i64), Just(-1i64)], prop::collection::vec(int_poly, order - 2)).prop_map(move |(c1, rest)| {
        let mut c = vec![YPoly::zero(), YPoly::from_int(c1)];
        c.extend(rest);
        PowerSeries::from_coeffs(c, order)
    })
}

#[test]
fn pascal_rule() {
    for n in 1..60i64 {
        for k in 0..=n {
            assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k), "({n},{k})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_ring_axioms(a in ypoly(), b in ypoly(), c in ypoly()) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() - a.clone(), YPoly::zero());
    }

    #[test]
    fn series_distributivity(a in series(12), b in series(12), c in series(12)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverse_times_series_is_one(a in series(12), c0 in nonzero_rational()) {
        let mut cs = a.into_coeffs();
        cs[0] = c0;
        let f = Ps::from_coeffs(cs, 12);
        let inv = f.inverse().unwrap();
        prop_assert_eq!(&f * &inv, Ps::one(12));
    }

    #[test]
    fn revert_round_trip_rational(f in revertible(24)) {
        let g = f.revert().unwrap();
        let x = Ps::x(24);
        prop_assert_eq!(f.compose(&g).unwrap(), x.clone());
        prop_assert_eq!(g.compose(&f).unwrap(), x);
    }

    #[test]
    fn sqrt_squared(a in series(16), c in nonzero_rational(), shift in 0usize..3) {
        // c² + x·a, shifted by x^{2·shift}
        let mut cs = vec![c.clone() * c];
        cs.extend(a.into_coeffs().into_iter().take(15));
        let mut f = Ps::from_coeffs(cs, 16);
        for _ in 0..2 * shift {
            f = f.mul_x();
        }
        let r = f.sqrt().unwrap();
        prop_assert_eq!(r.order(), f.order() - shift);
        prop_assert_eq!(&r * &r, f.truncate(r.order()));
    }

    #[test]
    fn involution_on_random_triangles(rows in prop::collection::vec(prop::collection::vec(small_rational(), 8), 8)) {
        let mut rows: Vec<Vec<Rational>> = rows
            .into_iter()
            .enumerate()
            .map(|(n, r)| r.into_iter().take(n + 1).collect())
            .collect();
        rows[0][0] = Rational::from_int(1);
        let t = Triangle::from_rows(rows).unwrap();
        let back = t.invert().unwrap().invert().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn apply_series_is_linear(
        d in series(10),
        h in revertible(10),
        f in series(10),
        g in series(10),
        alpha in small_rational(),
    ) {
        let mut dc = d.into_coeffs();
        dc[0] = Rational::from_int(1);
        let pair = RiordanPair::ordinary(Ps::from_coeffs(dc, 10), h).unwrap();
        let lhs = pair.apply_series(&(&f.scale(&alpha) + &g)).unwrap();
        let rhs = &pair.apply_series(&f).unwrap().scale(&alpha) + &pair.apply_series(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(m in prop::collection::vec(prop::collection::vec(-6i64..=6, 5), 1..=5)) {
        let n = m.len();
        let m: Vec<Vec<i64>> = m.into_iter().map(|r| r.into_iter().take(n).collect()).collect();
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        prop_assert_eq!(bareiss(big), BigInt::from(cofactor(&m)));
    }

    #[test]
    fn hankel_invariant_under_binomial_transform(a in prop::collection::vec(-5i64..=5, 9)) {
        let seq: Vec<Rational> = a.iter().map(|&v| Rational::from_int(v)).collect();
        let transformed: Vec<Rational> = (0..seq.len())
            .map(|n| {
                (0..=n).fold(Rational::from_int(0), |acc, k| {
                    acc + Rational::from_integer(binomial(n as i64, k as i64)) * seq[k].clone()
                })
            })
            .collect();
        prop_assert_eq!(hankel_transform(&seq, 4).unwrap(), hankel_transform(&transformed, 4).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn revert_round_trip_polynomial(f in revertible_y(24)) {
        let g = f.revert().unwrap();
        let x = YPs::x(24);
        prop_assert_eq!(f.compose(&g).unwrap(), x.clone());
        prop_assert_eq!(g.compose(&f).unwrap(), x);
    }
}

fn cofactor(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * cofactor(&minor)
        })
        .sum()
}
