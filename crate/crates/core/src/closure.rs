//! Annihilators of sums, products, inverses, and shifted tails.
//!
//! Sums and products go through a Sylvester resultant in an auxiliary
//! variable `u`; the result is reduced to the squarefree factor that
//! vanishes on the combined expansion.

use crate::algseries::{self, AlgebraicSeries};
use crate::annpoly::AnnPoly;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::SigmaPoly;
use crate::scalar::{Field, Scalar};

/// Polynomial in `u` whose coefficients are elements of K[σ][T].
type UPoly = Vec<AnnPoly>;

/// Sylvester matrix of `a` (degree `m`, nonzero leading coefficient) and
/// `b` (formal degree `n`), `a`'s rows first.
fn sylvester(field: Field, a: &UPoly, b: &UPoly) -> Vec<Vec<AnnPoly>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let zero = AnnPoly::zero(field);
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res_u(a(u), b(u))` with the convention `lc(a)^n · ∏ b(α_i)`.
fn resultant(field: Field, a: &UPoly, b: &UPoly) -> AnnPoly {
    linalg::det_bareiss(field, sylvester(field, a, b))
}

fn as_upoly(p: &AnnPoly) -> UPoly {
    p.coeffs().iter().map(|c| AnnPoly::from_sigma(c.clone())).collect()
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `g(T − u)` as a polynomial in `u`.
fn shifted(g: &AnnPoly) -> UPoly {
    let field = g.field();
    let n = g.degree().unwrap_or(0);
    (0..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            (i..=n).fold(AnnPoly::zero(field), |acc, j| {
                let c = g.coeff(j).scale(&field.from_i64(sign * binomial(j, i)));
                &acc + &AnnPoly::from_sigma(c).shift_t(j - i)
            })
        })
        .collect()
}

/// `u^n g(T/u)` as a polynomial in `u` of formal degree `n`.
fn scaled(g: &AnnPoly) -> UPoly {
    let n = g.degree().unwrap_or(0);
    (0..=n).map(|i| AnnPoly::from_sigma(g.coeff(n - i)).shift_t(n - i)).collect()
}

/// `Res_u(f(u), g(T − u))`: vanishes at every sum of a root of `f` and a root of `g`.
pub fn sum_resultant(f: &AnnPoly, g: &AnnPoly) -> AnnPoly {
    resultant(f.field(), &as_upoly(f), &shifted(g))
}

/// `Res_u(f(u), u^n g(T/u))`: vanishes at every product of roots.
pub fn product_resultant(f: &AnnPoly, g: &AnnPoly) -> AnnPoly {
    resultant(f.field(), &as_upoly(f), &scaled(g))
}

/// `P(F + σ^n T)`.
pub fn tail_left_poly(p: &AnnPoly, head: &SigmaPoly, n: usize) -> AnnPoly {
    let field = p.field();
    p.compose_affine(&SigmaPoly::monomial(field.one(), n), head)
}

/// `Σ_j σ^{n(m−j)} Q_j (T − F)^j`.
pub fn tail_right_poly(q: &AnnPoly, head: &SigmaPoly, n: usize) -> AnnPoly {
    let field = q.field();
    let num = AnnPoly::new(field, vec![-head, SigmaPoly::one(field)]);
    q.homogeneous_substitute(&num, &SigmaPoly::monomial(field.one(), n))
}

pub fn ann_sum(x: &AlgebraicSeries, y: &AlgebraicSeries) -> Result<AlgebraicSeries> {
    let r = sum_resultant(x.ann(), y.ann());
    if r.is_zero() {
        return Err(Error::NoBranchMatches);
    }
    algseries::from_expansion(&r, x.expansion() + y.expansion())
}

pub fn ann_product(x: &AlgebraicSeries, y: &AlgebraicSeries) -> Result<AlgebraicSeries> {
    let r = product_resultant(x.ann(), y.ann());
    if r.is_zero() {
        return Err(Error::NoBranchMatches);
    }
    algseries::from_expansion(&r, x.expansion() * y.expansion())
}

/// `−X`, via `P(−T)`.
pub fn ann_negate(x: &AlgebraicSeries) -> Result<AlgebraicSeries> {
    let field = x.ann().field();
    let p = x.ann().compose_affine(&SigmaPoly::constant(field.from_i64(-1)), &SigmaPoly::zero(field));
    x.transformed(&p, -x.expansion())
}

/// `c·X` for a nonzero constant `c`, via `Σ P_j c^{m−j} T^j`.
pub fn ann_scale(x: &AlgebraicSeries, c: &Scalar) -> Result<AlgebraicSeries> {
    let field = x.ann().field();
    let p = x.ann().homogeneous_substitute(&AnnPoly::t(field), &SigmaPoly::constant(c.clone()));
    x.transformed(&p, x.expansion().scale(c))
}

/// `X − Y`.
pub fn ann_difference(x: &AlgebraicSeries, y: &AlgebraicSeries) -> Result<AlgebraicSeries> {
    ann_sum(x, &ann_negate(y)?)
}

/// `X⁻¹`, annihilated by the reflected polynomial.
pub fn ann_inverse(x: &AlgebraicSeries) -> Result<AlgebraicSeries> {
    let inv = x.expansion().invert()?;
    x.transformed(&x.ann().reflected(), inv)
}

/// `λⁿ(X)`.
pub fn ann_tail_left(x: &AlgebraicSeries, n: usize) -> Result<AlgebraicSeries> {
    let (head, tail) = x.expansion().head_split(n)?;
    x.transformed(&tail_left_poly(x.ann(), &head, n), tail)
}

/// `F + σⁿ·Y`.
pub fn ann_tail_right(y: &AlgebraicSeries, head: &SigmaPoly, n: usize) -> Result<AlgebraicSeries> {
    let expansion = y.expansion().prepend(head, n);
    y.transformed(&tail_right_poly(y.ann(), head, n), expansion)
}
