//! Dense univariate polynomials over [`Field`].
//!
//! The variable is a type-level marker so that polynomials in σ
//! ([`SigmaPoly`]) and scalar polynomials in t ([`ScalarPolynomial`]) cannot
//! be mixed by accident.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Field, Scalar};

pub trait Variable: Clone + Copy + fmt::Debug + PartialEq + Eq + Hash + Default + Send + Sync + 'static {
    const NAME: &'static str;
    /// Render lowest degree first.
    const ASCENDING: bool;
    /// Put spaces around top-level `+`/`-`.
    const SPACED: bool;
}

/// The series variable σ, rendered `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sigma;

/// The scalar-polynomial variable, rendered `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Tee;

impl Variable for Sigma {
    const NAME: &'static str = "s";
    const ASCENDING: bool = true;
    const SPACED: bool = false;
}

impl Variable for Tee {
    const NAME: &'static str = "t";
    const ASCENDING: bool = false;
    const SPACED: bool = true;
}

/// Element of K[σ].
pub type SigmaPoly = Poly<Sigma>;
/// Element of K[t]; houses images 𝔄(P)(t) and scalar polynomials.
pub type ScalarPolynomial = Poly<Tee>;

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<V> {
    field: Field,
    coeffs: Vec<Scalar>,
    var: PhantomData<V>,
}

impl<V: Variable> Poly<V> {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs, var: PhantomData }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    /// The variable itself.
    pub fn var(field: Field) -> Self {
        Self::monomial(field.one(), 1)
    }

    /// `1 - x`.
    pub fn one_minus_var(field: Field) -> Self {
        Self::from_i64(field, &[1, -1])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Index and value of the lowest nonzero coefficient.
    pub fn lowest(&self) -> Option<(usize, &Scalar)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        Self::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.field, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &self.field.from_i64(k as i64))
            .collect();
        Self::new(self.field, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.field), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Divides by the leading coefficient. `None` for zero.
    pub fn monic(&self) -> Option<Self> {
        let lc = self.leading()?.inv()?;
        Some(self.scale(&lc))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by zero polynomial").inv().expect("nonzero");
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Self::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &(&c * dc);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic().unwrap_or(a)
    }

    /// Largest `n` with `(x - root)^n` dividing `self` (self nonzero), and the cofactor.
    pub fn root_multiplicity(&self, root: &Scalar) -> (usize, Self) {
        let lin = Self::new(self.field, vec![-root, self.field.one()]);
        let mut n = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            match cur.div_exact(&lin) {
                Some(q) => {
                    cur = q;
                    n += 1;
                }
                None => break,
            }
        }
        (n, cur)
    }

    /// Changes the variable marker.
    pub fn retag<W: Variable>(self) -> Poly<W> {
        Poly { field: self.field, coeffs: self.coeffs, var: PhantomData }
    }

    /// Signed monomial pieces `(negative, magnitude text)` in rendering order.
    pub(crate) fn render_terms(&self) -> Vec<(bool, String)> {
        let mut terms: Vec<(bool, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let neg = c.is_negative();
                let mag = if neg { -c } else { c.clone() };
                (neg, render_monomial(&mag, V::NAME, k))
            })
            .collect();
        if !V::ASCENDING {
            terms.reverse();
        }
        terms
    }
}

/// Renders `mag * var^k` for a nonnegative (or modular) magnitude.
pub(crate) fn render_monomial(mag: &Scalar, var: &str, k: usize) -> String {
    let power = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    if k == 0 {
        mag.to_string()
    } else if mag.is_one() {
        power
    } else {
        format!("{mag}*{power}")
    }
}

/// Joins signed terms; an empty list renders as `0`.
pub(crate) fn join_terms(terms: &[(bool, String)], spaced: bool) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        match (i, neg, spaced) {
            (0, true, _) => out.push('-'),
            (0, false, _) => {}
            (_, true, true) => out.push_str(" - "),
            (_, false, true) => out.push_str(" + "),
            (_, true, false) => out.push('-'),
            (_, false, false) => out.push('+'),
        }
        out.push_str(body);
    }
    out
}

impl<V: Variable> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(&self.render_terms(), V::SPACED))
    }
}

fn zip_with<V: Variable>(a: &Poly<V>, b: &Poly<V>, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Poly<V> {
    assert_eq!(a.field, b.field, "field mismatch");
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n).map(|k| op(&a.coeff(k), &b.coeff(k))).collect();
    Poly::new(a.field, coeffs)
}

impl<V: Variable> Add for &Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl<V: Variable> Sub for &Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl<V: Variable> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<V: Variable> Mul for &Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        assert_eq!(self.field, rhs.field, "field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }
}

macro_rules! forward_poly {
    ($tr:ident, $m:ident) => {
        impl<V: Variable> $tr for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_poly!(Add, add);
forward_poly!(Sub, sub);
forward_poly!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn trims_and_degrees() {
        let p = SigmaPoly::from_i64(Q, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(SigmaPoly::zero(Q).degree(), None);
        assert!(SigmaPoly::from_i64(Q, &[0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (1 - s)(1 + s) = 1 - s^2
        let a = SigmaPoly::from_i64(Q, &[1, 0, -1]);
        let b = SigmaPoly::one_minus_var(Q);
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, SigmaPoly::from_i64(Q, &[1, 1]));
        assert!(SigmaPoly::from_i64(Q, &[1, 1]).div_exact(&b).is_none());
        let g = a.gcd(&SigmaPoly::from_i64(Q, &[-1, 0, 0, 1]));
        assert_eq!(g, SigmaPoly::from_i64(Q, &[-1, 1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(SigmaPoly::from_i64(Q, &[1, 1]).to_string(), "1+s");
        assert_eq!(SigmaPoly::from_i64(Q, &[4, -1]).to_string(), "4-s");
        assert_eq!(ScalarPolynomial::from_i64(Q, &[-3, 0, 1]).to_string(), "t^2 - 3");
        assert_eq!(ScalarPolynomial::from_i64(Q, &[-1, 2]).to_string(), "2*t - 1");
        assert_eq!(ScalarPolynomial::from_i64(Q, &[]).to_string(), "0");
        assert_eq!(ScalarPolynomial::from_i64(Q, &[2, -1]).to_string(), "-t + 2");
    }

    #[test]
    fn root_multiplicity_counts() {
        let p = ScalarPolynomial::from_i64(Q, &[1, -2, 1]);
        let (m, co) = p.root_multiplicity(&Q.one());
        assert_eq!(m, 2);
        assert!(co.is_one());
    }

    #[test]
    fn compose_and_derivative() {
        let p = SigmaPoly::from_i64(Q, &[0, 0, 1]);
        let inner = SigmaPoly::from_i64(Q, &[1, 1]);
        assert_eq!(p.compose(&inner), SigmaPoly::from_i64(Q, &[1, 2, 1]));
        assert_eq!(p.derivative(), SigmaPoly::from_i64(Q, &[0, 2]));
    }
}
