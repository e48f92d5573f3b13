//! Predicates on scalar polynomials in K[t]: monic normalization, the
//! linear-power test, and roots lying in K.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::ScalarPolynomial;
use crate::scalar::{is_prime_u64, Field, Scalar};

/// Largest prime for which roots in `F_p` are found by exhaustive scan.
const SCAN_LIMIT: u64 = 1 << 20;

/// Divides by the leading coefficient; a nonzero constant becomes `1`.
pub fn monic(s: &ScalarPolynomial) -> Result<ScalarPolynomial> {
    s.monic().ok_or(Error::ZeroPolynomial)
}

/// Tests `s = (t − ρ)^m` and returns `(ρ, m)`.
///
/// `None` for constants and for polynomials with two distinct roots over
/// the algebraic closure.
pub fn is_linear_power(s: &ScalarPolynomial) -> Result<Option<(Scalar, usize)>> {
    let lc = s.leading().ok_or(Error::ZeroPolynomial)?;
    if !lc.is_one() {
        return Err(Error::NotMonic);
    }
    let m = s.degree().unwrap_or(0);
    if m == 0 {
        return Ok(None);
    }
    let field = s.field();
    // In F_p write m = p^μ·m' with p ∤ m'; then (t−ρ)^m = (t^{p^μ} − ρ)^{m'}
    // because Frobenius fixes the prime field, so the coefficient at
    // t^{p^μ(m'−1)} is −m'ρ. In characteristic 0, μ = 0.
    let mut q = 1usize;
    let mut m_prime = m;
    if let Field::Prime(p) = field {
        while (m_prime as u64).is_multiple_of(p) {
            m_prime /= p as usize;
            q *= p as usize;
        }
    }
    let c = s.coeff(q * (m_prime - 1));
    let rho = -&(&c / &field.from_i64(m_prime as i64));
    let lin = ScalarPolynomial::new(field, vec![-&rho, field.one()]);
    Ok((lin.pow(m as u32) == *s).then_some((rho, m)))
}

/// Roots in K with multiplicities, and what is left after dividing them out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// Sorted by [`Scalar::canonical_cmp`].
    pub roots: Vec<(Scalar, usize)>,
    pub cofactor: ScalarPolynomial,
}

impl RootReport {
    /// True when the cofactor is nonconstant, i.e. some roots lie outside K.
    pub fn roots_outside_field(&self) -> bool {
        !self.cofactor.is_constant()
    }
}

/// All roots of `s` in K. The cofactor is monic.
pub fn rational_roots(s: &ScalarPolynomial) -> Result<RootReport> {
    let mut rest = monic(s)?;
    let field = s.field();
    let candidates = match field {
        Field::Rationals => rational_candidates(&rest),
        Field::Prime(p) if p <= SCAN_LIMIT => (0..p).map(|v| field.from_i64(v as i64)).collect(),
        Field::Prime(p) => large_prime_roots(&rest, p),
    };
    let mut roots = Vec::new();
    for r in candidates {
        if rest.is_constant() {
            break;
        }
        if !rest.eval(&r).is_zero() {
            continue;
        }
        let (mult, co) = rest.root_multiplicity(&r);
        roots.push((r, mult));
        rest = co;
    }
    roots.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(RootReport { roots, cofactor: rest })
}

/// Candidates `±a/b` with `a | c_0` and `b | c_n` after clearing
/// denominators, plus 0 when `t` divides.
fn rational_candidates(s: &ScalarPolynomial) -> Vec<Scalar> {
    let coeffs: Vec<BigRational> = s.coeffs().iter().map(|c| c.as_rational().expect("rational").clone()).collect();
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut out = Vec::new();
    let Some(low) = ints.iter().position(|c| !c.is_zero()) else {
        return out;
    };
    if low > 0 {
        out.push(Field::Rationals.zero());
    }
    let a0 = ints[low].abs().to_biguint().expect("nonnegative");
    let an = ints.last().expect("nonzero").abs().to_biguint().expect("nonnegative");
    let num_divs = divisors(&a0);
    let den_divs = divisors(&an);
    let mut seen = std::collections::HashSet::new();
    for a in &num_divs {
        for b in &den_divs {
            let q = BigRational::new(BigInt::from(a.clone()), BigInt::from(b.clone()));
            if seen.insert(q.clone()) {
                out.push(Scalar::Rational(q.clone()));
                out.push(Scalar::Rational(-q));
            }
        }
    }
    out
}

/// All positive divisors of `n > 0`.
fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let current = divs.clone();
        let mut pk = BigUint::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(current.iter().map(|d| d * &pk));
        }
    }
    divs
}

/// Prime factorization by trial division, then Pollard's rho.
fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let push = |p: BigUint, out: &mut Vec<(BigUint, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    for p in 2u32..1000 {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            push(bp.clone(), &mut out);
        }
    }
    let mut stack = vec![n];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157);
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_rho(&m, &mut rng);
        stack.push(&m / &d);
        stack.push(d);
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial divisor of the composite `n` (Floyd cycle finding).
fn pollard_rho(n: &BigUint, rng: &mut ChaCha8Rng) -> BigUint {
    let one = BigUint::one();
    loop {
        let c = rng.gen_biguint_below(n);
        let mut x = rng.gen_biguint_below(n);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
    }
}

/// Roots in a large prime field: split `gcd(s, t^p − t)` into linear factors.
fn large_prime_roots(s: &ScalarPolynomial, p: u64) -> Vec<Scalar> {
    let field = s.field();
    let t = ScalarPolynomial::var(field);
    let tp = powmod(&t, p, s);
    let g = s.gcd(&(&tp - &t));
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut linear = Vec::new();
    split_linear(&g, p, &mut rng, &mut linear);
    linear.into_iter().map(|l| -&l.coeff(0)).collect()
}

fn powmod(base: &ScalarPolynomial, mut e: u64, m: &ScalarPolynomial) -> ScalarPolynomial {
    let mut acc = ScalarPolynomial::one(base.field());
    let mut b = base.div_rem(m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &b).div_rem(m).1;
        }
        b = (&b * &b).div_rem(m).1;
        e >>= 1;
    }
    acc
}

/// Cantor–Zassenhaus equal-degree splitting for a product of distinct
/// monic linear factors over an odd prime field.
fn split_linear(g: &ScalarPolynomial, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<ScalarPolynomial>) {
    let field = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(g.monic().expect("nonzero")),
        Some(_) => loop {
            let a = rng.gen_range(0..p);
            let shifted = ScalarPolynomial::new(field, vec![field.from_i64(a as i64), field.one()]);
            let h = &powmod(&shifted, (p - 1) / 2, g) - &ScalarPolynomial::one(field);
            let d = g.gcd(&h);
            if let Some(dd) = d.degree() {
                if dd > 0 && Some(dd) < g.degree() {
                    let (q, _) = g.div_rem(&d);
                    split_linear(&d, p, rng, out);
                    split_linear(&q, p, rng, out);
                    return;
                }
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    fn sp(c: &[i64]) -> ScalarPolynomial {
        ScalarPolynomial::from_i64(Q, c)
    }

    #[test]
    fn monic_examples() {
        assert_eq!(monic(&sp(&[-1, 2])).unwrap(), ScalarPolynomial::new(Q, vec![q(-1, 2), q(1, 1)]));
        assert_eq!(monic(&sp(&[-1])).unwrap(), sp(&[1]));
        assert_eq!(monic(&sp(&[-3, 0, 1])).unwrap(), sp(&[-3, 0, 1]));
        assert_eq!(monic(&sp(&[])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn linear_power_examples() {
        assert_eq!(is_linear_power(&sp(&[1, -2, 1])).unwrap(), Some((q(1, 1), 2)));
        assert_eq!(is_linear_power(&sp(&[0, 0, 1])).unwrap(), Some((q(0, 1), 2)));
        assert_eq!(is_linear_power(&sp(&[-3, 0, 1])).unwrap(), None);
        assert_eq!(is_linear_power(&sp(&[-1, 2])), Err(Error::NotMonic));
        assert_eq!(is_linear_power(&sp(&[1])).unwrap(), None);
    }

    #[test]
    fn linear_power_in_char_p() {
        let f = Field::Prime(3);
        // (t - 2)^3 = t^3 - 8 = t^3 + 1 over F_3
        let s = ScalarPolynomial::from_i64(f, &[1, 0, 0, 1]);
        assert_eq!(is_linear_power(&s).unwrap(), Some((f.from_i64(2), 3)));
        // (t - 1)^6 = (t^3 - 1)^2
        let s = ScalarPolynomial::from_i64(f, &[-1, 1]).pow(6);
        assert_eq!(is_linear_power(&s).unwrap(), Some((f.one(), 6)));
        // t^3 - t has three distinct roots
        let s = ScalarPolynomial::from_i64(f, &[0, -1, 0, 1]);
        assert_eq!(is_linear_power(&s).unwrap(), None);
    }

    #[test]
    fn rational_root_examples() {
        let r = rational_roots(&ScalarPolynomial::new(Q, vec![q(-1, 2), q(1, 1)])).unwrap();
        assert_eq!(r.roots, vec![(q(1, 2), 1)]);
        assert!(r.cofactor.is_one());

        let r = rational_roots(&sp(&[-3, 0, 1])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.cofactor, sp(&[-3, 0, 1]));
        assert!(r.roots_outside_field());

        let r = rational_roots(&sp(&[1, -2, 1])).unwrap();
        assert_eq!(r.roots, vec![(q(1, 1), 2)]);

        // (3t - 2)(t + 5) t^2 (t^2 - 5)
        let s = &(&(&sp(&[-2, 3]) * &sp(&[5, 1])) * &sp(&[0, 0, 1])) * &sp(&[-5, 0, 1]);
        let r = rational_roots(&s).unwrap();
        assert_eq!(r.roots, vec![(q(-5, 1), 1), (q(0, 1), 2), (q(2, 3), 1)]);
        assert_eq!(r.cofactor, sp(&[-5, 0, 1]));
    }

    #[test]
    fn rational_roots_with_large_integers() {
        // (t - 1000003 * 999983) (1009 t + 7)
        let big = 1_000_003i64 * 999_983;
        let s = &sp(&[-big, 1]) * &sp(&[7, 1009]);
        let r = rational_roots(&s).unwrap();
        assert_eq!(r.roots, vec![(q(-7, 1009), 1), (q(big, 1), 1)]);
    }

    #[test]
    fn roots_in_prime_fields() {
        let f = Field::Prime(7);
        let s = ScalarPolynomial::from_i64(f, &[-1, 0, 1]);
        let r = rational_roots(&s).unwrap();
        assert_eq!(r.roots, vec![(f.from_i64(1), 1), (f.from_i64(6), 1)]);

        let p = 1_000_000_007u64;
        let f = Field::prime(p).unwrap();
        let s = &ScalarPolynomial::from_i64(f, &[-12345, 1]).pow(2) * &ScalarPolynomial::from_i64(f, &[7, 1]);
        let s = &s * &ScalarPolynomial::from_i64(f, &[1, 0, 1]).pow(1);
        let r = rational_roots(&s).unwrap();
        let mut expect = vec![(f.from_i64(12345), 2), (f.from_i64(-7), 1)];
        expect.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        assert_eq!(r.roots, expect);
        // -1 is not a square mod 10^9+7 (p ≡ 3 mod 4)
        assert_eq!(r.cofactor.degree(), Some(2));
    }
}
