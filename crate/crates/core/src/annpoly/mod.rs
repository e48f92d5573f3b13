//! Annihilator polynomials in K[σ][T] and the transforms performed on them.
//!
//! An [`AnnPoly`] stores its T-coefficients as [`SigmaPoly`]s, lowest power
//! of T first. The canonical normal form used throughout the crate is
//! primitive over K[σ] with the lowest σ-coefficient of the leading
//! T-coefficient equal to 1 (see [`AnnPoly::normalized`]).

mod scalar;

pub use scalar::{is_linear_power, monic, rational_roots, RootReport};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{join_terms, render_monomial, ScalarPolynomial, SigmaPoly};
use crate::scalar::{Field, Scalar};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnnPoly {
    field: Field,
    coeffs: Vec<SigmaPoly>,
}

impl AnnPoly {
    pub fn new(field: Field, mut coeffs: Vec<SigmaPoly>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(SigmaPoly::is_zero) {
            coeffs.pop();
        }
        AnnPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Self::new(field, Vec::new())
    }

    /// A polynomial constant in T.
    pub fn from_sigma(c: SigmaPoly) -> Self {
        Self::new(c.field(), vec![c])
    }

    pub fn from_scalar(c: Scalar) -> Self {
        Self::from_sigma(SigmaPoly::constant(c))
    }

    /// The indeterminate T.
    pub fn t(field: Field) -> Self {
        Self::new(field, vec![SigmaPoly::zero(field), SigmaPoly::one(field)])
    }

    /// `F·T − A`, the annihilator of the rational series `A/F`.
    pub fn linear(f: &SigmaPoly, a: &SigmaPoly) -> Self {
        Self::new(f.field(), vec![-a, f.clone()])
    }

    /// Builds from integer coefficient tables: `rows[k]` is the σ-coefficient list of `T^k`.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        Self::new(field, rows.iter().map(|r| SigmaPoly::from_i64(field, r)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[SigmaPoly] {
        &self.coeffs
    }

    /// T-degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> SigmaPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| SigmaPoly::zero(self.field))
    }

    pub fn leading(&self) -> Option<&SigmaPoly> {
        self.coeffs.last()
    }

    /// Maximum σ-degree over all T-coefficients.
    pub fn sigma_degree(&self) -> usize {
        self.coeffs.iter().filter_map(SigmaPoly::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn scale_sigma(&self, c: &SigmaPoly) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|p| p * c).collect())
    }

    /// Multiply by `T^k`.
    pub fn shift_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![SigmaPoly::zero(self.field); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.field, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_scalar(self.field.one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// ∂/∂T.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&self.field.from_i64(k as i64)))
            .collect();
        Self::new(self.field, coeffs)
    }

    /// Horner evaluation `Σ P_k x^k` truncated to `order(x)`.
    pub fn eval_at_series(&self, x: &Series) -> Series {
        let n = x.order();
        let mut acc = Series::zero(self.field, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Series::from_poly(c, n);
        }
        acc
    }

    /// 𝔄 applied coefficient-wise: every σ-coefficient evaluated at σ = 1.
    pub fn apply_add(&self) -> ScalarPolynomial {
        let one = self.field.one();
        ScalarPolynomial::new(self.field, self.coeffs.iter().map(|c| c.eval(&one)).collect())
    }

    /// Monic gcd over K of all T-coefficients.
    pub fn content(&self) -> SigmaPoly {
        self.coeffs
            .iter()
            .fold(SigmaPoly::zero(self.field), |g, c| g.gcd(c))
    }

    /// Divides out the content and fixes the unit so that the lowest
    /// σ-coefficient of the leading T-coefficient is 1. Returns the
    /// normalized part and the content `c` with `c · part = self`.
    pub fn primitive_part(&self) -> Result<(AnnPoly, SigmaPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.content();
        let mut part = Self::new(
            self.field,
            self.coeffs
                .iter()
                .map(|c| c.div_exact(&g).expect("content divides every coefficient"))
                .collect(),
        );
        let unit = part.leading().and_then(|l| l.lowest()).map(|(_, c)| c.clone()).expect("nonzero");
        let unit_inv = unit.inv().expect("nonzero");
        part = part.scale(&unit_inv);
        Ok((part, g.scale(&unit)))
    }

    /// Removes the maximal power of `(1 − σ)` dividing every coefficient.
    pub fn strip_one_minus_sigma(&self) -> Result<(AnnPoly, usize)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = SigmaPoly::one_minus_var(self.field);
        let mut cur = self.clone();
        let mut n = 0;
        loop {
            let divided: Option<Vec<SigmaPoly>> = cur.coeffs.iter().map(|c| c.div_exact(&d)).collect();
            match divided {
                Some(cs) => {
                    cur = Self::new(self.field, cs);
                    n += 1;
                }
                None => return Ok((cur, n)),
            }
        }
    }

    /// Primitive, `(1 − σ)`-free, unit-normalized form together with the
    /// number of stripped `(1 − σ)` factors.
    pub fn normalized(&self) -> Result<(AnnPoly, usize)> {
        let (prim, content) = self.primitive_part()?;
        let d = SigmaPoly::one_minus_var(self.field);
        let mut stripped = 0;
        let mut c = content;
        while let Some(q) = c.div_exact(&d) {
            c = q;
            stripped += 1;
        }
        Ok((prim, stripped))
    }

    /// Canonical representative up to K[σ]-content; zero maps to zero.
    pub fn canonical(&self) -> AnnPoly {
        match self.primitive_part() {
            Ok((p, _)) => p,
            Err(_) => self.clone(),
        }
    }

    /// `T^m P(1/T)` with `m` the T-degree; zero maps to zero.
    pub fn reflected(&self) -> AnnPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(self.field, coeffs)
    }

    /// `P(a·T + b)` for σ-polynomials `a`, `b`.
    pub fn compose_affine(&self, a: &SigmaPoly, b: &SigmaPoly) -> AnnPoly {
        let inner = Self::new(self.field, vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.field), |acc, c| &(&acc * &inner) + &Self::from_sigma(c.clone()))
    }

    /// `Σ_j P_j · num^j · den^(m−j)`: the substitution `T ↦ num/den` with
    /// denominators cleared.
    pub fn homogeneous_substitute(&self, num: &AnnPoly, den: &SigmaPoly) -> AnnPoly {
        let Some(m) = self.degree() else {
            return self.clone();
        };
        let mut out = Self::zero(self.field);
        let mut num_pow = Self::from_scalar(self.field.one());
        for (j, c) in self.coeffs.iter().enumerate() {
            let den_pow = den.pow((m - j) as u32);
            out = &out + &num_pow.scale_sigma(&(c * &den_pow));
            num_pow = &num_pow * num;
        }
        out
    }

    /// Exact quotient in K[σ][T]; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &AnnPoly) -> Option<AnnPoly> {
        let dd = d.degree()?;
        let dl = d.leading()?;
        if self.is_zero() {
            return Some(self.clone());
        }
        let mut rem = self.clone();
        let deg = self.degree()?;
        if deg < dd {
            return None;
        }
        let mut quot = vec![SigmaPoly::zero(self.field); deg - dd + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let c = rem.leading()?.div_exact(dl)?;
            let shift = rd - dd;
            rem = &rem - &d.scale_sigma(&c).shift_t(shift);
            if rem.degree().is_some_and(|x| x >= rd) {
                return None;
            }
            quot[shift] = c;
        }
        Some(Self::new(self.field, quot))
    }

    /// Sparse pseudo-remainder of `self` by `d` (nonzero).
    pub fn pseudo_rem(&self, d: &AnnPoly) -> AnnPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let dl = d.leading().expect("nonzero").clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let rl = r.leading().expect("nonzero").clone();
            r = &r.scale_sigma(&dl) - &d.scale_sigma(&rl).shift_t(rd - dd);
        }
        r
    }

    /// Greatest common divisor over K(σ), returned primitive and normalized.
    /// A T-constant gcd is reported as `1`.
    pub fn gcd(&self, other: &AnnPoly) -> AnnPoly {
        if self.is_zero() {
            return other.canonical();
        }
        if other.is_zero() {
            return self.canonical();
        }
        let (mut a, mut b) = (self.canonical(), other.canonical());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Self::from_scalar(self.field.one());
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.canonical();
        }
        a.canonical()
    }

    /// Squarefree decomposition over K(σ) (Yun). Factors are normalized and
    /// their product with multiplicities equals the primitive part of `self`.
    pub fn squarefree_factors(&self) -> Result<Vec<(AnnPoly, usize)>> {
        let (f, _) = self.primitive_part()?;
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let inseparable = Error::InseparableFactor(self.field.characteristic());
        let fp = f.derivative();
        if fp.is_zero() {
            return Err(inseparable);
        }
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0).ok_or_else(|| inseparable.clone())?;
        let c = fp.div_exact(&a0).ok_or_else(|| inseparable.clone())?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree().is_some_and(|x| x > 0) {
            let a = b.gcd(&d);
            if a.degree().is_some_and(|x| x > 0) {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).ok_or_else(|| inseparable.clone())?;
            let c = d.div_exact(&a).ok_or_else(|| inseparable.clone())?;
            d = &c - &b.derivative();
            i += 1;
            if i > f.degree().unwrap_or(0) + 1 {
                return Err(inseparable);
            }
        }
        let product = out
            .iter()
            .fold(Self::from_scalar(self.field.one()), |acc, (p, m)| &acc * &p.pow(*m as u32));
        if product.canonical() != f {
            return Err(inseparable);
        }
        Ok(out)
    }
}

impl fmt::Display for AnnPoly {
    /// Canonical rendering, highest power of T first, e.g. `(1+s)*T - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let tpow = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            if c.term_count() == 1 {
                let (j, a) = c.lowest().expect("nonzero");
                let neg = a.is_negative();
                let mag = if neg { -a } else { a.clone() };
                let body = if k == 0 {
                    render_monomial(&mag, "s", j)
                } else if j == 0 && mag.is_one() {
                    tpow
                } else {
                    format!("{}*{tpow}", render_monomial(&mag, "s", j))
                };
                terms.push((neg, body));
            } else {
                // the leading term keeps its sign inside the parentheses
                let neg = !terms.is_empty() && c.lowest().is_some_and(|(_, a)| a.is_negative());
                let inner = if neg { -c } else { c.clone() };
                let body = if k == 0 { format!("({inner})") } else { format!("({inner})*{tpow}") };
                terms.push((neg, body));
            }
        }
        f.write_str(&join_terms(&terms, true))
    }
}

fn zip_ann(a: &AnnPoly, b: &AnnPoly, op: impl Fn(&SigmaPoly, &SigmaPoly) -> SigmaPoly) -> AnnPoly {
    assert_eq!(a.field, b.field, "field mismatch");
    let n = a.coeffs.len().max(b.coeffs.len());
    AnnPoly::new(a.field, (0..n).map(|k| op(&a.coeff(k), &b.coeff(k))).collect())
}

impl Add for &AnnPoly {
    type Output = AnnPoly;
    fn add(self, rhs: &AnnPoly) -> AnnPoly {
        zip_ann(self, rhs, |x, y| x + y)
    }
}

impl Sub for &AnnPoly {
    type Output = AnnPoly;
    fn sub(self, rhs: &AnnPoly) -> AnnPoly {
        zip_ann(self, rhs, |x, y| x - y)
    }
}

impl Neg for &AnnPoly {
    type Output = AnnPoly;
    fn neg(self) -> AnnPoly {
        AnnPoly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &AnnPoly {
    type Output = AnnPoly;
    fn mul(self, rhs: &AnnPoly) -> AnnPoly {
        assert_eq!(self.field, rhs.field, "field mismatch");
        if self.is_zero() || rhs.is_zero() {
            return AnnPoly::zero(self.field);
        }
        let mut out = vec![SigmaPoly::zero(self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        AnnPoly::new(self.field, out)
    }
}
