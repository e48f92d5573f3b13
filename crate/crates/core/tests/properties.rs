//! Property tests for the invariants of the library.

use num_rational::BigRational;
use proptest::prelude::*;

use sigmasum::addsum;
use sigmasum::algseries::{self, make_algebraic};
use sigmasum::annpoly::rational_roots;
use sigmasum::certificate::Certificate;
use sigmasum::closure;
use sigmasum::expr::{self, Config, Expr};
use sigmasum::guess::detect_telescope;
use sigmasum::linalg;
use sigmasum::series::{mul_sequential, Series};
use sigmasum::{AnnPoly, Field, Scalar, ScalarPolynomial, SigmaPoly};

const Q: Field = Field::Rationals;

fn small_coeffs(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 1..=max_len)
}

fn sigma_poly(max_len: usize) -> impl Strategy<Value = SigmaPoly> {
    small_coeffs(max_len).prop_map(|c| SigmaPoly::from_i64(Q, &c))
}

fn unit_poly(max_len: usize) -> impl Strategy<Value = SigmaPoly> {
    (1i64..=5, prop::bool::ANY, small_coeffs(max_len)).prop_map(|(c0, neg, mut c)| {
        c[0] = if neg { -c0 } else { c0 };
        SigmaPoly::from_i64(Q, &c)
    })
}

fn ann_poly() -> impl Strategy<Value = AnnPoly> {
    prop::collection::vec(sigma_poly(3), 1..=4).prop_map(|rows| AnnPoly::new(Q, rows))
}

/// Quadratic `T^2 - D` with `D(0) = 1`, lifted from the seed 1.
fn sqrt_series() -> impl Strategy<Value = sigmasum::AlgebraicSeries> {
    small_coeffs(3).prop_map(|mut c| {
        c.insert(0, 1);
        let d = SigmaPoly::from_i64(Q, &c);
        let p = AnnPoly::new(Q, vec![-&d, SigmaPoly::zero(Q), SigmaPoly::one(Q)]);
        make_algebraic(&p, &Series::from_i64(Q, &[1]), 16).unwrap()
    })
}

fn rational_series() -> impl Strategy<Value = sigmasum::AlgebraicSeries> {
    (sigma_poly(3), unit_poly(3)).prop_filter_map("zero numerator", |(a, f)| {
        if a.is_zero() {
            return None;
        }
        let x = Series::from_rational(&a, &f, 16).ok()?;
        algseries::from_expansion(&AnnPoly::linear(&f, &a), x).ok()
    })
}

fn any_series() -> impl Strategy<Value = sigmasum::AlgebraicSeries> {
    prop_oneof![sqrt_series(), rational_series()]
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..20).prop_map(|n| Expr::Num(BigRational::from_integer(n.into()))),
        Just(Expr::Var('s')),
        Just(Expr::Call("grandi".into(), vec![])),
    ]
}

fn expr_tree() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone(), 0usize..4).prop_map(|(a, b, op)| {
                let op = [expr::BinOp::Add, expr::BinOp::Sub, expr::BinOp::Mul, expr::BinOp::Div][op];
                Expr::Bin(op, Box::new(a), Box::new(b))
            }),
            (inner.clone(), -3i64..=4).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Call("rat".into(), vec![a, b])),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_product_commutes_and_inverts(a in unit_poly(6), b in sigma_poly(6)) {
        let x = Series::from_poly(&a, 12);
        let y = Series::from_poly(&b, 12);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &y, mul_sequential(&x, &y));
        let inv = x.invert().unwrap();
        prop_assert_eq!(&x * &inv, Series::one(Q, 12));
    }

    #[test]
    fn annpoly_render_parse_identity(p in ann_poly()) {
        let text = p.to_string();
        prop_assert_eq!(expr::parse_annpoly(&text, Q).unwrap(), p);
    }

    #[test]
    fn expr_render_parse_identity(e in expr_tree()) {
        let text = e.to_string();
        prop_assert_eq!(expr::parse(&text).unwrap(), e);
    }

    #[test]
    fn lifted_roots_are_annihilated(x in any_series()) {
        prop_assert!(x.ann().eval_at_series(x.expansion()).is_zero());
        prop_assert!(x.verify_annihilation(16).unwrap());
    }

    #[test]
    fn sums_and_products_are_annihilated(x in any_series(), y in rational_series()) {
        let s = closure::ann_sum(&x, &y).unwrap();
        prop_assert!(s.ann().eval_at_series(s.expansion()).is_zero());
        prop_assert!(s.ann().degree().unwrap() <= x.ann().degree().unwrap() * y.ann().degree().unwrap());
        let p = closure::ann_product(&x, &y).unwrap();
        prop_assert!(p.ann().eval_at_series(p.expansion()).is_zero());
    }

    #[test]
    fn inverse_and_negation_are_involutions(x in sqrt_series()) {
        let back = closure::ann_inverse(&closure::ann_inverse(&x).unwrap()).unwrap();
        prop_assert_eq!(back.ann(), x.ann());
        let neg = closure::ann_negate(&closure::ann_negate(&x).unwrap()).unwrap();
        prop_assert_eq!(neg.ann(), x.ann());
    }

    #[test]
    fn summed_values_are_roots_of_the_scalar_polynomial(x in any_series()) {
        let r = addsum::univalent_sum(&x);
        if let Some(v) = &r.value {
            let s = addsum::scalar_polynomial(&x);
            prop_assert!(s.eval(v).is_zero());
            prop_assert_eq!(r.status, addsum::SumStatus::Summed);
        }
        if addsum::degree_sufficiency(&x) {
            prop_assert_eq!(r.classification.class, addsum::Class::Algebraic);
        }
    }

    #[test]
    fn telescoping_recovers_rational_values(a in sigma_poly(3), f in unit_poly(3)) {
        prop_assume!(!f.eval(&Q.one()).is_zero());
        let x = Series::from_rational(&a, &f, 32).unwrap();
        let (num, den) = detect_telescope(&x, 3).unwrap().unwrap();
        prop_assert_eq!(
            addsum::telescope_eval(&num, &den).unwrap(),
            addsum::telescope_eval(&a, &f).unwrap()
        );
    }

    #[test]
    fn rational_roots_are_found(roots in prop::collection::vec((-30i64..30, 1i64..6), 1..4)) {
        let mut s = ScalarPolynomial::one(Q);
        for (n, d) in &roots {
            s = &s * &ScalarPolynomial::from_i64(Q, &[-n, *d]);
        }
        let s = s.monic().unwrap();
        let report = rational_roots(&s).unwrap();
        for (n, d) in &roots {
            let r = Scalar::Rational(BigRational::new((*n).into(), (*d).into()));
            prop_assert!(report.roots.iter().any(|(x, _)| *x == r));
        }
        prop_assert!(report.cofactor.is_one());
    }

    #[test]
    fn nullspace_vectors_solve_the_system(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..5)) {
        let m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&c| Q.from_i64(c)).collect()).collect();
        let kernel = linalg::nullspace(Q, &m, 5);
        prop_assert!(kernel.len() >= 5 - m.len());
        for v in &kernel {
            for row in &m {
                let dot = row.iter().zip(v).fold(Q.zero(), |acc, (a, b)| &acc + &(a * b));
                prop_assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn certificates_round_trip(x in any_series()) {
        let cert = Certificate::for_series("x", &x);
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert!(back.recheck().unwrap());
    }
}

#[test]
fn prime_field_pipeline() {
    let cfg = Config { order: 16, field: Field::Prime(7) };
    let g = expr::evaluate_str("rat(1-s; 1-s^2)", &cfg).unwrap();
    let r = addsum::univalent_sum(&g);
    // 1/2 = 4 mod 7
    assert_eq!(r.value.unwrap().to_string(), "4");
}
