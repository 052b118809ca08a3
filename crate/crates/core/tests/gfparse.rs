use proptest::prelude::*;

use dualpoly::exact::{BiPoly, Polynomial, Rational, Ring};
use dualpoly::families::{self, YPoly};
use dualpoly::gfparse::{eval_ast, parse, AstKind, BinOp, Func, GfAst, ParseErrorKind, Var};
use dualpoly::series::PowerSeries;
use dualpoly::triangles::Triangle;

const BAD: [(&str, usize); 20] = [
    ("", 0),
    ("   ", 3),
    ("1 +", 3),
    ("(1 + x", 0),
    ("1 + x)", 5),
    ("((x)", 0),
    (")", 0),
    ("x^y", 2),
    ("x^-2", 2),
    ("x^1.5", 3),
    ("x^", 2),
    ("2x", 1),
    ("x y", 2),
    ("z", 0),
    ("sqrt x", 5),
    ("rev", 3),
    ("x # 2", 2),
    ("1 + \u{3c0}", 4),
    ("x**2", 2),
    ("sqrt()", 5),
];

#[test]
fn bad_corpus_offsets() {
    for (input, offset) in BAD {
        let err = parse(input).expect_err(input);
        assert_eq!(err.offset, offset, "{input:?}: {err}");
    }
}

#[test]
fn bad_corpus_kinds() {
    assert_eq!(parse("(1 + x").unwrap_err().kind, ParseErrorKind::UnclosedParen);
    assert_eq!(parse("1 + x)").unwrap_err().kind, ParseErrorKind::UnmatchedParen);
    assert_eq!(parse("x^y").unwrap_err().kind, ParseErrorKind::BadExponent);
    assert_eq!(parse("1 + \u{3c0}").unwrap_err().kind, ParseErrorKind::NonAscii);
}

fn leaf() -> impl Strategy<Value = GfAst> {
    prop_oneof![
        (0u32..1000).prop_map(|n| GfAst::new(AstKind::Int(n.into()))),
        prop_oneof![Just(Var::X), Just(Var::Y), Just(Var::A), Just(Var::B)]
            .prop_map(|v| GfAst::new(AstKind::Var(v))),
    ]
}

fn ast() -> impl Strategy<Value = GfAst> {
    leaf().prop_recursive(5, 64, 2, |inner| {
        let op = prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div)];
        let func = prop_oneof![Just(Func::Sqrt), Just(Func::Rev)];
        prop_oneof![
            inner.clone().prop_map(|e| GfAst::new(AstKind::Neg(Box::new(e)))),
            (op, inner.clone(), inner.clone())
                .prop_map(|(o, l, r)| GfAst::new(AstKind::Binary(o, Box::new(l), Box::new(r)))),
            (inner.clone(), 0u32..6).prop_map(|(e, k)| GfAst::new(AstKind::Pow(Box::new(e), k))),
            (func, inner).prop_map(|(f, e)| GfAst::new(AstKind::Call(f, Box::new(e)))),
        ]
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(a in ast()) {
        let text = a.to_string();
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{text:?}: {e}")))?;
        prop_assert_eq!(back, a, "{}", text);
    }

    #[test]
    fn arbitrary_ascii_never_panics(s in "[ -~]{0,24}") {
        if let Err(e) = parse(&s) {
            prop_assert!(e.offset <= s.len());
        }
    }
}

type Ps = PowerSeries<Rational>;
type YPs = PowerSeries<YPoly>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

#[test]
fn fibonacci_bgf_gives_the_triangle() {
    let s: YPs = eval_ast(&parse("1/(1-y*x-x^2)").unwrap(), 12).unwrap();
    assert_eq!(Triangle::from_bgf(&s, 12).unwrap(), families::fibonacci_triangle(12));
}

#[test]
fn stretched_bgf_gives_a011973() {
    let s: YPs = eval_ast(&parse("1/(1-x-y*x^2)").unwrap(), 12).unwrap();
    assert_eq!(Triangle::from_bgf(&s, 12).unwrap(), families::a011973_triangle(12));
}

#[test]
fn x1x_bgf() {
    let s: YPs = eval_ast(&parse("1/(1-y*x*(1+x))").unwrap(), 10).unwrap();
    assert_eq!(Triangle::from_bgf(&s, 10).unwrap(), families::x1x_triangle(10));
}

#[test]
fn dual_cf_gf_text() {
    let s: YPs = eval_ast(&parse("x*(sqrt(1-4*y*x^2)-x)").unwrap(), 14).unwrap();
    assert_eq!(s.into_coeffs(), families::dual_cf_sequence(14));
}

#[test]
fn dual_fibonacci_by_rev() {
    let s: YPs = eval_ast(&parse("rev(x/(1-y*x-x^2))").unwrap(), 14).unwrap();
    let expected = families::dual_fib_by_reversion(13);
    assert_eq!(&s.coeffs()[1..], &expected[..]);
}

#[test]
fn reciprocal_over_two_generators() {
    let order = 9;
    let s: PowerSeries<BiPoly> = eval_ast(&parse("1/(sqrt(1-4*b*x^2)-a*x)").unwrap(), order).unwrap();
    let a = BiPoly::constant(Polynomial::var());
    let b = BiPoly::var();
    let sums = families::reciprocal_pair(&a, &b, order).build(order).unwrap().row_sums();
    assert_eq!(s.into_coeffs(), sums);
}

#[test]
fn cf_closed_form_text() {
    // At (a, b) = (1, 2) the discriminant a² + 4b = 9.
    let text = "sqrt((1-2*x-sqrt(1-4*x-32*x^2))/2)/3";
    let s: Ps = eval_ast(&parse(text).unwrap(), 14).unwrap();
    let expected = families::cf_reversion_closed_form(&q(1), &q(2), 14).unwrap();
    assert_eq!(s.truncate(12), expected.truncate(12));
}

#[test]
fn small_examples() {
    let s: Ps = eval_ast(&parse("rev(x-x^2)").unwrap(), 6).unwrap();
    assert_eq!(s, Ps::from_ints(&[0, 1, 1, 2, 5, 14], 6));
    let two: Ps = eval_ast(&parse("2").unwrap(), 4).unwrap();
    assert_eq!(two, Ps::constant(q(2), 4));
    assert_eq!(parse("x").unwrap(), GfAst::new(AstKind::Var(Var::X)));
}
