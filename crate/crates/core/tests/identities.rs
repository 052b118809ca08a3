use num_bigint::BigInt;

use dualpoly::exact::{binomial, catalan, rat, BiPoly, Polynomial, Rational, Ring};
use dualpoly::families::{self, PolyFamily, YPoly};
use dualpoly::paths::{count_table, enumerate_tilings, PathClass, PathStatistic, PathVariant};
use dualpoly::series::PowerSeries;
use dualpoly::verify;

type Ps = PowerSeries<Rational>;

#[test]
fn bell_arrays_invert_to_exponential_arrays() {
    let rows = 16;
    assert_eq!(
        families::fibonacci_triangle(rows).invert().unwrap(),
        families::dual_fibonacci_triangle(rows)
    );
    assert_eq!(
        families::a111959_triangle(rows).invert().unwrap(),
        families::i0_dual_triangle(rows)
    );
    assert_eq!(families::x1x_triangle(rows).invert().unwrap(), families::tilde_triangle(rows));
    assert_eq!(
        families::a011973_triangle(rows).invert().unwrap(),
        families::tildetilde_triangle(rows)
    );
}

#[test]
fn lagrange_coefficients_through_twelve() {
    let a = BiPoly::constant(Polynomial::var());
    let b = BiPoly::var();
    let rev = families::dual_cf_gf(&a, &b, 14).revert().unwrap();
    for n in 0..=12 {
        assert_eq!(rev.coeff(n + 1), &families::cf_coeffs(n), "n = {n}");
    }
}

#[test]
fn bivariate_fibonacci_expansion() {
    // 1/(1 - yx - zx²) over Q[y][z]: [x^n] = Σ_i binom(n-i, i) y^{n-2i} z^i
    let order = 14;
    let y = BiPoly::constant(Polynomial::var());
    let z = BiPoly::var();
    let den = PowerSeries::from_coeffs(vec![BiPoly::one(), -y, -z], order);
    let g = PowerSeries::<BiPoly>::one(order).div(&den).unwrap();
    for n in 0..order {
        let mut expected = BiPoly::zero();
        for i in 0..=n / 2 {
            let c = Rational::from_integer(binomial((n - i) as i64, i as i64));
            expected = expected + BiPoly::monomial(Polynomial::monomial(c, n - 2 * i), i);
        }
        assert_eq!(g.coeff(n), &expected, "n = {n}");
    }
    // z = 1 gives the Fibonacci rows, y = 1 gives A011973
    let fib = families::fibonacci_triangle(order);
    let stretched = families::a011973_triangle(order);
    for n in 0..order {
        assert_eq!(g.coeff(n).eval(&YPoly::one()), fib.row_poly(n));
        let at_y1: YPoly = Polynomial::new(g.coeff(n).coeffs().iter().map(|p| p.eval(&rat(1))).collect());
        assert_eq!(at_y1, stretched.row_poly(n));
    }
}

#[test]
fn reciprocal_row_sums_at_three_points() {
    for (a, b) in [(1, 1), (1, 2), (2, 1)] {
        let (a, b) = (rat(a), rat(b));
        let sums = families::reciprocal_pair(&a, &b, 16).build(16).unwrap().row_sums();
        let direct = verify::reciprocal_series(&a, &b, 16).unwrap();
        assert_eq!(sums, direct.into_coeffs(), "({a},{b})");
    }
}

#[test]
fn cf_matrix_gf_at_points() {
    // 2(y²+4) G(x)² = 1 - 2yx - sqrt(1 - 4yx - 16x²), G = Σ CF_{n+1}(y, 1) x^{n+1}
    let order = 16;
    for y in [0, 5, 12] {
        let y0 = rat(y);
        let rows = families::cf_matrix(&rat(1), order).eval_rows(&y0);
        let g = Ps::from_coeffs(rows, order).mul_x().truncate(order);
        let inner = Ps::from_coeffs(vec![rat(1), rat(-4) * &y0, rat(-16)], order).sqrt().unwrap();
        let rhs = &Ps::from_coeffs(vec![rat(1), rat(-2) * &y0], order) - &inner;
        let lhs = (&g * &g).scale(&(rat(2) * (&y0 * &y0 + rat(4))));
        assert_eq!(lhs, rhs, "y = {y}");
    }
}

#[test]
fn cf_matrix_vector_factorizations() {
    let rows = 10;
    let via_b = families::times_powers_of_b(&families::cf_factor_in_a(rows));
    let via_a = families::times_powers_of_a(&families::cf_factor_in_b(rows));
    for n in 0..rows {
        assert_eq!(via_b[n], families::cf_coeffs(n), "n = {n}");
        assert_eq!(via_a[n], families::cf_coeffs(n), "n = {n}");
    }
}

#[test]
fn cf_row_sums() {
    let f = |n: i64| dualpoly::exact::fibonacci(n).unwrap();
    let j = |n: i64| dualpoly::exact::jacobsthal(n).unwrap();
    let one = families::cf_matrix(&rat(1), 13).row_sums();
    let two = families::cf_matrix(&rat(2), 13).row_sums();
    for n in 0..13i64 {
        let c = catalan(n).unwrap();
        assert_eq!(one[n as usize], Rational::from_integer(&c * f(n + 1)));
        assert_eq!(two[n as usize], Rational::from_integer(&c * j(n + 1)));
    }
}

#[test]
fn path_totals() {
    // Motzkin numbers and central trinomial coefficients by recurrence
    let mut motzkin = vec![BigInt::from(1), BigInt::from(1)];
    let mut trinomial = vec![BigInt::from(1), BigInt::from(1)];
    for n in 2..=12usize {
        let m = (BigInt::from(2 * n + 1) * &motzkin[n - 1] + BigInt::from(3 * n - 3) * &motzkin[n - 2])
            / BigInt::from(n + 2);
        motzkin.push(m);
        let t = (BigInt::from(2 * n - 1) * &trinomial[n - 1] + BigInt::from(3 * n - 3) * &trinomial[n - 2])
            / BigInt::from(n);
        trinomial.push(t);
    }
    for n in 0..=12 {
        for stat in [PathStatistic::LevelSteps, PathStatistic::UpSteps, PathStatistic::UpPlusLevelSteps] {
            let m: u64 = count_table(PathClass::new(PathVariant::Motzkin, stat), n).unwrap().iter().sum();
            assert_eq!(BigInt::from(m), motzkin[n], "Motzkin n = {n}");
            let g: u64 = count_table(PathClass::new(PathVariant::GrandMotzkin, stat), n).unwrap().iter().sum();
            assert_eq!(BigInt::from(g), trinomial[n], "grand n = {n}");
        }
    }
}

#[test]
fn dual_fib_entries_count_motzkin_paths() {
    // |t̂_{n,k}| counts Motzkin paths with k level steps
    for n in 0..=12 {
        let table = count_table(PathClass::new(PathVariant::Motzkin, PathStatistic::LevelSteps), n).unwrap();
        for (k, &c) in table.iter().enumerate() {
            let t = families::dual_fib_coeff(n, k).unwrap();
            let abs = if t < rat(0) { -t } else { t };
            assert_eq!(abs, rat(c as i64), "({n},{k})");
        }
    }
}

#[test]
fn tilings_count_fibonacci_entries() {
    for n in 0..=14 {
        let tilings = enumerate_tilings(n).unwrap();
        assert_eq!(
            BigInt::from(tilings.len()),
            dualpoly::exact::fibonacci(n as i64 + 1).unwrap()
        );
        let row = families::family_poly(PolyFamily::Fib, n + 1);
        assert_eq!(row.eval(&rat(1)), rat(tilings.len() as i64));
    }
}
