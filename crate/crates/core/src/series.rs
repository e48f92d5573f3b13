//! Truncated formal power series in σ with explicit truncation order.
//!
//! A [`Series`] knows exactly `order` coefficients. Every operation returns
//! the tightest order it can vouch for; nothing beyond it is ever assumed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{join_terms, render_monomial, SigmaPoly};
use crate::scalar::{Field, Scalar};

/// Default working truncation order.
pub const DEFAULT_ORDER: usize = 64;

/// Output length from which the Cauchy product fans out across threads.
const PAR_MUL_THRESHOLD: usize = 96;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Series {
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        Series { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field, order: usize) -> Self {
        Self::new(field, vec![field.zero(); order])
    }

    pub fn constant(c: Scalar, order: usize) -> Self {
        let field = c.field();
        let mut s = Self::zero(field, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(field: Field, order: usize) -> Self {
        Self::constant(field.one(), order)
    }

    /// The polynomial viewed as a series known to `order` coefficients.
    pub fn from_poly(p: &SigmaPoly, order: usize) -> Self {
        Self::new(p.field(), (0..order).map(|k| p.coeff(k)).collect())
    }

    /// The unique `X` with `F·X ≡ A (mod σ^order)`.
    pub fn from_rational(a: &SigmaPoly, f: &SigmaPoly, order: usize) -> Result<Self> {
        if f.coeff(0).is_zero() {
            return Err(Error::DenominatorNotUnit);
        }
        let inv = Series::from_poly(f, order).invert()?;
        Ok(&Series::from_poly(a, order) * &inv)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of known coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `(X)_k`; panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.field, self.coeffs[..order.min(self.order())].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Index of the first nonzero coefficient within the known order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Equality on the shared prefix.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs.first().is_some_and(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by a polynomial, keeping the order.
    pub fn mul_poly(&self, p: &SigmaPoly) -> Self {
        self * &Series::from_poly(p, self.order())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Series::one(self.field, self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Two-sided inverse to the same order via the standard recurrence.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs.first().ok_or(Error::OrderExhausted { needed: 1, available: 0 })?;
        let c0_inv = c0.inv().ok_or(Error::NotAUnit)?;
        let n = self.order();
        let mut out: Vec<Scalar> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = self.field.zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(-&(&acc * &c0_inv));
        }
        Ok(Self::new(self.field, out))
    }

    /// λⁿ: drops the first `n` coefficients.
    pub fn shift_left(&self, n: usize) -> Result<Self> {
        if n > self.order() {
            return Err(Error::OrderExhausted { needed: n, available: self.order() });
        }
        Ok(Self::new(self.field, self.coeffs[n..].to_vec()))
    }

    /// Splits `X = F + σⁿ·tail` with `F` the polynomial head.
    pub fn head_split(&self, n: usize) -> Result<(SigmaPoly, Series)> {
        let tail = self.shift_left(n)?;
        Ok((SigmaPoly::new(self.field, self.coeffs[..n].to_vec()), tail))
    }

    /// `F + σⁿ·self`, known to `order + n` coefficients.
    pub fn prepend(&self, head: &SigmaPoly, n: usize) -> Self {
        let mut coeffs: Vec<Scalar> = (0..n).map(|k| head.coeff(k)).collect();
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, c)| c + &head.coeff(k + n)));
        Self::new(self.field, coeffs)
    }

    /// `self / σ^v`, requiring the first `v` coefficients to vanish.
    pub(crate) fn divide_sigma_power(&self, v: usize) -> Option<Self> {
        if v > self.order() || self.coeffs[..v].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.field, self.coeffs[v..].to_vec()))
    }

    /// Renders the first `terms` coefficients followed by an `O(s^N)` marker.
    pub fn render_prefix(&self, terms: usize) -> String {
        let shown = terms.min(self.order());
        let parts: Vec<(bool, String)> = self.coeffs[..shown]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let neg = c.is_negative();
                let mag = if neg { -c } else { c.clone() };
                (neg, render_monomial(&mag, "s", k))
            })
            .collect();
        let body = join_terms(&parts, true);
        format!("{body} + O(s^{shown})")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_prefix(self.order()))
    }
}

fn zip_series(a: &Series, b: &Series, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Series {
    assert_eq!(a.field, b.field, "field mismatch");
    let n = a.order().min(b.order());
    Series::new(a.field, (0..n).map(|k| op(&a.coeffs[k], &b.coeffs[k])).collect())
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        zip_series(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        zip_series(self, rhs, |x, y| x - y)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Coefficient `k` of the Cauchy product.
fn cauchy_coeff(a: &[Scalar], b: &[Scalar], k: usize, zero: &Scalar) -> Scalar {
    let mut acc = zero.clone();
    for j in 0..=k {
        if !a[j].is_zero() && !b[k - j].is_zero() {
            acc = &acc + &(&a[j] * &b[k - j]);
        }
    }
    acc
}

/// Cauchy product truncated to the shorter order, computed sequentially.
pub fn mul_sequential(a: &Series, b: &Series) -> Series {
    assert_eq!(a.field, b.field, "field mismatch");
    let n = a.order().min(b.order());
    let zero = a.field.zero();
    Series::new(a.field, (0..n).map(|k| cauchy_coeff(&a.coeffs, &b.coeffs, k, &zero)).collect())
}

/// Cauchy product with one task per output coefficient.
pub fn mul_parallel(a: &Series, b: &Series) -> Series {
    assert_eq!(a.field, b.field, "field mismatch");
    let n = a.order().min(b.order());
    let zero = a.field.zero();
    let idx: Vec<usize> = (0..n).collect();
    let coeffs = par::map(&idx, |&k| cauchy_coeff(&a.coeffs, &b.coeffs, k, &zero));
    Series::new(a.field, coeffs)
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        if self.order().min(rhs.order()) >= PAR_MUL_THRESHOLD {
            mul_parallel(self, rhs)
        } else {
            mul_sequential(self, rhs)
        }
    }
}

macro_rules! forward_series {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_series!(Add, add);
forward_series!(Sub, sub);
forward_series!(Mul, mul);
