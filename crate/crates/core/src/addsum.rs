//! Scalar polynomials, classification, and the univalent sum.
//!
//! The scalar polynomial of an algebraic series is the monic image of its
//! minimal polynomial under `σ ↦ 1`. A series is infinite when that image
//! is constant. It sums to `ρ` when the image is `(t − ρ)^m` and the series
//! is absolutely algebraic, which is decided by looking at the inverse of
//! an associated unit.

use std::fmt;

use crate::algseries::{AlgebraicSeries, Minimality};
use crate::annpoly::{self, is_linear_power, AnnPoly, RootReport};
use crate::closure::tail_right_poly;
use crate::error::{Error, Result};
use crate::poly::{ScalarPolynomial, SigmaPoly};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Algebraic,
    Infinite,
    /// No annihilator is known; never a claim of transcendence.
    NoRelationKnown,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Algebraic => "algebraic",
            Class::Infinite => "infinite",
            Class::NoRelationKnown => "no_relation_known",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: Class,
    pub scalar_poly: Option<ScalarPolynomial>,
    pub sum_degree: Option<usize>,
    pub scalar_degree: Option<usize>,
    /// `(ρ, m)` when the scalar polynomial is `(t − ρ)^m`.
    pub univalent: Option<(Scalar, usize)>,
    pub absolutely_algebraic: Option<bool>,
    pub practically_zero: Option<bool>,
    pub minimality: Option<Minimality>,
}

impl Classification {
    /// The classification of a stream with no known annihilator.
    pub fn no_relation() -> Self {
        Classification {
            class: Class::NoRelationKnown,
            scalar_poly: None,
            sum_degree: None,
            scalar_degree: None,
            univalent: None,
            absolutely_algebraic: None,
            practically_zero: None,
            minimality: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumStatus {
    Summed,
    NotUnivalent,
    NotAbsolutelyAlgebraic,
    Infinite,
    NoRelationKnown,
}

impl fmt::Display for SumStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumStatus::Summed => "Summed",
            SumStatus::NotUnivalent => "NotUnivalent",
            SumStatus::NotAbsolutelyAlgebraic => "NotAbsolutelyAlgebraic",
            SumStatus::Infinite => "Infinite",
            SumStatus::NoRelationKnown => "NoRelationKnown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumResult {
    /// Present exactly when `status` is [`SumStatus::Summed`].
    pub value: Option<Scalar>,
    pub status: SumStatus,
    pub classification: Classification,
}

/// `monic(𝔄(ann))`; never zero because the annihilator carries no `(1 − σ)` factor.
pub fn scalar_polynomial(a: &AlgebraicSeries) -> ScalarPolynomial {
    annpoly::monic(&a.ann().apply_add()).expect("stripped annihilators have nonzero image")
}

/// Scalar polynomial of a possibly unnormalized annihilator.
pub fn scalar_polynomial_of(p: &AnnPoly) -> Result<ScalarPolynomial> {
    let (q, _) = p.normalized()?;
    annpoly::monic(&q.apply_add())
}

pub fn classify(a: &AlgebraicSeries) -> Classification {
    let s = scalar_polynomial(a);
    let sum_degree = a.ann().degree();
    let scalar_degree = s.degree();
    if s.is_one() {
        return Classification {
            class: Class::Infinite,
            scalar_poly: Some(s),
            sum_degree,
            scalar_degree,
            univalent: None,
            absolutely_algebraic: None,
            practically_zero: None,
            minimality: Some(a.minimality()),
        };
    }
    let univalent = is_linear_power(&s).expect("scalar polynomial is monic");
    let absolute = absolutely_algebraic(a);
    let practically_zero = absolute && univalent.as_ref().is_some_and(|(r, _)| r.is_zero());
    Classification {
        class: Class::Algebraic,
        scalar_poly: Some(s),
        sum_degree,
        scalar_degree,
        univalent,
        absolutely_algebraic: Some(absolute),
        practically_zero: Some(practically_zero),
        minimality: Some(a.minimality()),
    }
}

/// The unit attached to `X`: `X` itself when it is a unit, otherwise
/// `1 − σ + σ²X`. Returns its annihilator.
fn unit_annihilator(a: &AlgebraicSeries) -> AnnPoly {
    if a.expansion().is_unit() {
        return a.ann().clone();
    }
    let field = a.ann().field();
    tail_right_poly(a.ann(), &SigmaPoly::one_minus_var(field), 2)
}

/// Whether `s_{U⁻¹}(0) ≠ 0` for the unit `U` attached to `X`.
///
/// The answer is exact when the annihilator is certified minimal, since the
/// reflection of an irreducible polynomial is irreducible.
pub fn absolutely_algebraic(a: &AlgebraicSeries) -> bool {
    let u = unit_annihilator(a);
    let s = scalar_polynomial_of(&u.reflected()).expect("unit annihilator is nonzero");
    !s.coeff(0).is_zero()
}

/// True iff the T-degree of the annihilator equals the scalar degree.
pub fn degree_sufficiency(a: &AlgebraicSeries) -> bool {
    a.ann().degree() == scalar_polynomial(a).degree()
}

/// Absolutely algebraic with scalar polynomial `t^m`.
pub fn practically_zero(a: &AlgebraicSeries) -> bool {
    classify(a).practically_zero == Some(true)
}

/// The univalent extension of 𝔄 applied to `a`.
pub fn univalent_sum(a: &AlgebraicSeries) -> SumResult {
    let c = classify(a);
    let (value, status) = match (&c.class, &c.univalent, c.absolutely_algebraic) {
        (Class::Infinite, _, _) => (None, SumStatus::Infinite),
        (Class::NoRelationKnown, _, _) => (None, SumStatus::NoRelationKnown),
        (_, None, _) => (None, SumStatus::NotUnivalent),
        (_, Some(_), Some(false)) | (_, Some(_), None) => (None, SumStatus::NotAbsolutelyAlgebraic),
        (_, Some((rho, _)), Some(true)) => (Some(rho.clone()), SumStatus::Summed),
    };
    SumResult { value, status, classification: c }
}

/// Telescopic value of `A/F`: after removing the common power of `(1 − σ)`,
/// returns `A(1)/F(1)`.
pub fn telescope_eval(a: &SigmaPoly, f: &SigmaPoly) -> Result<Scalar> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let d = SigmaPoly::one_minus_var(field);
    let (mut a, mut f) = (a.clone(), f.clone());
    while !a.is_zero() {
        match (a.div_exact(&d), f.div_exact(&d)) {
            (Some(a2), Some(f2)) => {
                a = a2;
                f = f2;
            }
            _ => break,
        }
    }
    if a.is_zero() {
        // X = 0; strip F alone so that F(1) is meaningful
        while let Some(f2) = f.div_exact(&d) {
            f = f2;
        }
    }
    let one = field.one();
    let f1 = f.eval(&one);
    let inv = f1.inv().ok_or(Error::TelescopeDegenerate)?;
    Ok(&a.eval(&one) * &inv)
}

/// Roots of the scalar polynomial in K: the candidate sums.
pub fn zeroes(a: &AlgebraicSeries) -> RootReport {
    annpoly::rational_roots(&scalar_polynomial(a)).expect("scalar polynomial is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algseries::make_algebraic;
    use crate::scalar::Field;
    use crate::series::Series;
    use num_rational::BigRational;

    const Q: Field = Field::Rationals;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    fn alg(rows: &[&[i64]], seed: &[i64]) -> AlgebraicSeries {
        make_algebraic(&AnnPoly::from_i64(Q, rows), &Series::from_i64(Q, seed), 32).unwrap()
    }

    fn sp(c: &[i64]) -> SigmaPoly {
        SigmaPoly::from_i64(Q, c)
    }

    #[test]
    fn scalar_polynomials() {
        assert_eq!(scalar_polynomial(&alg(&[&[-4, 1], &[], &[1]], &[2])).to_string(), "t^2 - 3");
        assert_eq!(scalar_polynomial(&alg(&[&[0, -1, -1], &[1], &[-1, 1]], &[1])).to_string(), "t - 2");
        assert_eq!(scalar_polynomial(&alg(&[&[-1, 1], &[], &[1]], &[1])).to_string(), "t^2");
    }

    #[test]
    fn classification_examples() {
        let inf = alg(&[&[-1], &[], &[1, -1]], &[1]);
        assert_eq!(classify(&inf).class, Class::Infinite);
        let g = alg(&[&[-1], &[1, 1]], &[1]);
        let c = classify(&g);
        assert_eq!(c.class, Class::Algebraic);
        assert_eq!(c.univalent, Some((q(1, 2), 1)));
        let z = alg(&[&[2, 0, -1], &[-3, 1], &[1]], &[2]);
        assert_eq!(classify(&z).univalent, Some((q(1, 1), 2)));
    }

    #[test]
    fn absolute_algebraicity_examples() {
        assert!(absolutely_algebraic(&alg(&[&[-1], &[1, 1]], &[1])));
        assert!(!absolutely_algebraic(&alg(&[&[0, -1, -1], &[1], &[-1, 1]], &[1])));
        assert!(absolutely_algebraic(&alg(&[&[-1, 1], &[], &[1]], &[1])));
        // σ is not a unit; 1 - σ + σ^3 is a polynomial, hence absolutely algebraic
        assert!(absolutely_algebraic(&alg(&[&[0, -1], &[1]], &[0])));
    }

    #[test]
    fn degree_sufficiency_examples() {
        assert!(degree_sufficiency(&alg(&[&[-1, 1], &[], &[1]], &[1])));
        assert!(!degree_sufficiency(&alg(&[&[0, -1, -1], &[1], &[-1, 1]], &[1])));
        assert!(degree_sufficiency(&alg(&[&[-1], &[1, 1]], &[1])));
    }

    #[test]
    fn univalent_sum_statuses() {
        let g = univalent_sum(&alg(&[&[-1], &[1, 1]], &[1]));
        assert_eq!((g.status, g.value), (SumStatus::Summed, Some(q(1, 2))));
        assert_eq!(univalent_sum(&alg(&[&[-4, 1], &[], &[1]], &[2])).status, SumStatus::NotUnivalent);
        assert_eq!(
            univalent_sum(&alg(&[&[0, -1, -1], &[1], &[-1, 1]], &[1])).status,
            SumStatus::NotAbsolutelyAlgebraic
        );
        assert_eq!(univalent_sum(&alg(&[&[-1], &[], &[1, -1]], &[1])).status, SumStatus::Infinite);
    }

    #[test]
    fn telescope_examples() {
        assert_eq!(telescope_eval(&sp(&[1, -1]), &sp(&[1, 0, -1])).unwrap(), q(1, 2));
        assert_eq!(telescope_eval(&sp(&[1]), &sp(&[1, -2])).unwrap(), q(-1, 1));
        assert_eq!(telescope_eval(&sp(&[1]), &sp(&[1, -1])), Err(Error::TelescopeDegenerate));
    }

    #[test]
    fn zeroes_examples() {
        assert_eq!(zeroes(&alg(&[&[-1], &[1, 1]], &[1])).roots, vec![(q(1, 2), 1)]);
        let r = zeroes(&alg(&[&[-1, -4], &[], &[1]], &[1]));
        assert!(r.roots.is_empty());
        assert_eq!(r.cofactor.to_string(), "t^2 - 5");
        assert_eq!(zeroes(&alg(&[&[-1, 1], &[], &[1]], &[1])).roots, vec![(q(0, 1), 2)]);
    }
}
